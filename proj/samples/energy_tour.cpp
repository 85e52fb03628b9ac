// Copyright 2026 The huckel-bounds Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Prints energies and bound slacks for a few classical graphs and the first
// members of the extremal strongly regular family.

#include <cstdio>
#include <string>
#include <utility>
#include <vector>

#include "huckel/huckel.hpp"

int main() {
  std::vector<std::pair<std::string, huckel::Graph>> graphs = {
      {"K2", huckel::complete_graph(2)},
      {"C5", huckel::cycle_graph(5)},
      {"K_{1,4}", huckel::star_graph(5)},
      {"Petersen", huckel::petersen_graph()},
      {"extremal t=1", huckel::build_extremal_srg(1)},
      {"extremal t=2", huckel::build_extremal_srg(2)},
      {"remark t=1", huckel::build_remark_graph(1)},
  };
  std::printf("%-14s %4s %5s %10s %10s %10s %10s\n", "graph", "n", "m", "E",
              "HE", "upper_nm", "upper_n");
  for (const auto& [name, g] : graphs) {
    const huckel::Spectrum s = huckel::eigenvalues(g);
    const huckel::GraphStats st = huckel::stats(g);
    const huckel::EnergyValues ev = huckel::energy_values(s);
    const huckel::BoundReport r =
        huckel::make_bound_report(g.order(), st.edges, st.has_isolated, ev);
    std::printf("%-14s %4zu %5zu %10.4f %10.4f %10.4f %10.4f\n", name.c_str(),
                g.order(), st.edges, ev.energy, ev.huckel, r.upper_nm.value_or(0.0),
                r.upper_n);
  }
  return 0;
}
