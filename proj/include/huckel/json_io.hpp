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

#ifndef HUCKEL_JSON_IO_HPP_
#define HUCKEL_JSON_IO_HPP_

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <optional>
#include <string>

#include "huckel/bounds.hpp"
#include "huckel/graph.hpp"
#include "huckel/graph6.hpp"
#include "huckel/oracle.hpp"
#include "huckel/spectral.hpp"
#include "huckel/srg.hpp"
#include "json.hpp"

namespace huckel {

using Json = nlohmann::json;  // std::map-backed: keys serialize sorted

// Rounds to 12 significant digits so that dumps are short and stable.
inline double round12(double x) {
  if (!std::isfinite(x)) return x;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  const double r = std::strtod(buf, nullptr);
  return r == 0.0 ? 0.0 : r;  // no negative zero
}

inline Json num(double x) { return round12(x); }

inline Json opt_num(const std::optional<double>& x) {
  return x ? num(*x) : Json(nullptr);
}

inline Json to_json(const SrgParams& p) {
  return Json{{"n", p.n}, {"k", p.k}, {"lambda", p.lambda}, {"mu", p.mu}};
}

inline Json to_json(const BoundReport& r) {
  Json bounds = {
      {"upper_nm", opt_num(r.upper_nm)},
      {"upper_nm_regime", r.upper_nm ? Json(std::string(to_string(r.upper_nm_regime)))
                                     : Json(nullptr)},
      {"upper_nm_in_domain", r.upper_nm_in_domain},
      {"upper_n", num(r.upper_n)},
      {"lower", opt_num(r.lower)},
      {"f1", r.intermediate ? num(r.intermediate->f1) : Json(nullptr)},
      {"f2", r.intermediate ? num(r.intermediate->f2) : Json(nullptr)},
      {"intermediate_in_domain", r.intermediate_in_domain},
  };
  Json slacks = {{"upper_nm", opt_num(r.slack_upper)},
                 {"upper_n", num(r.slack_upper_n)},
                 {"lower", r.has_isolated ? Json(nullptr) : opt_num(r.slack_lower)}};
  return Json{{"bounds", bounds}, {"slacks", slacks}};
}

struct AnalyzeOptions {
  double equality_tol = 1e-6;
};

// The per-graph record emitted by `huckel analyze`.
inline Json analyze_graph(const Graph& g, const AnalyzeOptions& opts = {}) {
  const Spectrum s = eigenvalues(g);
  const GraphStats st = stats(g);
  const EnergyValues ev = energy_values(s);
  const BoundReport rep = make_bound_report(g.order(), st.edges, st.has_isolated, ev);
  Json spectrum = Json::array();
  for (double x : s.values) spectrum.push_back(num(x));

  Json out = to_json(rep);
  out["graph6"] = write_graph6(g);
  out["n"] = g.order();
  out["m"] = st.edges;
  out["spectrum"] = spectrum;
  out["residual"] = num(s.residual);
  out["E"] = num(ev.energy);
  out["HE"] = num(ev.huckel);
  out["alpha"] = num(ev.alpha);
  if (ev.beta) out["beta"] = num(*ev.beta);
  out["lemma1"] = std::string(to_string(rep.lemma1));
  const auto srg = g.order() >= 3 ? srg_params(g) : std::nullopt;
  out["srg_params"] = srg ? to_json(*srg) : Json(nullptr);
  out["equality_tags"] = classify_equality(rep, opts.equality_tol).names();
  return out;
}

inline Json to_json(const CheckTally& t) {
  Json hist = Json::array();
  for (const auto& [bin, count] : t.histogram) hist.push_back({bin, count});
  return Json{{"checked", t.checked},
              {"holds", t.holds},
              {"violated", t.violated},
              {"not_applicable", t.not_applicable},
              {"min_slack", opt_num(t.min_slack)},
              {"min_slack_graph", t.min_slack_graph ? Json(*t.min_slack_graph) : Json(nullptr)},
              {"witness_count", t.witness_count},
              {"equality_witnesses", t.witnesses},
              {"violations", t.violations},
              {"slack_histogram", hist}};
}

inline Json to_json(const SweepReport& r) {
  Json checks = Json::object();
  for (const auto& [c, tally] : r.checks) {
    checks[std::string(to_string(c))] = to_json(tally);
  }
  return Json{{"n", r.n},
              {"graph_count", r.graph_count},
              {"checks", checks},
              {"solver_failures", r.solver_failures},
              {"passed", r.passed()}};
}

}  // namespace huckel

#endif  // HUCKEL_JSON_IO_HPP_
