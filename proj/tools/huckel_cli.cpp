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

// huckel: spectral energy bounds, constructions and exhaustive verification.
//
//   huckel analyze   [--input FILE] [--skip-malformed] [--eq-tol X]
//   huckel construct FAMILY (--t T | --q Q) [--cert FILE]
//   huckel verify    (--n N | --corpus FILE) [--checks LIST] [--jobs J]
//                    [--tol X] [--eq-tol X] [--dump CSV] [--skip-malformed]
//   huckel bound     --n N [--m M]
//
// Exit status: 0 success/pass, 1 verification violations, 2 usage or parse
// errors.

#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "huckel/huckel.hpp"
#include "huckel/json_io.hpp"

namespace {

using huckel::Json;
using huckel::num;

constexpr int kExitOk = 0;
constexpr int kExitViolations = 1;
constexpr int kExitUsage = 2;

std::size_t default_jobs() {
  if (const char* env = std::getenv("HUCKEL_JOBS")) {
    try {
      const long v = std::stol(env);
      if (v > 0) return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
    }
    std::cerr << "warning: ignoring invalid HUCKEL_JOBS=" << env << "\n";
  }
  return std::max(1U, std::thread::hardware_concurrency());
}

// ---------------------------------------------------------------- analyze

struct AnalyzeArgs {
  std::string input = "-";
  bool skip_malformed = false;
  double eq_tol = 1e-6;
};

int run_analyze(const AnalyzeArgs& a) {
  std::ifstream file;
  std::istream* in = &std::cin;
  if (a.input != "-") {
    file.open(a.input);
    if (!file) {
      std::cerr << "error: cannot open " << a.input << "\n";
      return kExitUsage;
    }
    in = &file;
  }
  huckel::CorpusReader reader(*in, /*strict=*/true);
  huckel::AnalyzeOptions opts;
  opts.equality_tol = a.eq_tol;
  bool had_error = false;
  while (true) {
    std::optional<huckel::Graph> g;
    try {
      g = reader.next();
    } catch (const huckel::CorpusError& e) {
      std::cerr << "error: " << e.what() << "\n";
      if (!a.skip_malformed) return kExitUsage;
      had_error = true;
      continue;
    }
    if (!g) break;
    if (g->order() == 0) {
      std::cerr << "error: line " << reader.line()
                << ": graph has no vertices\n";
      if (!a.skip_malformed) return kExitUsage;
      continue;
    }
    try {
      std::cout << huckel::analyze_graph(*g, opts).dump() << "\n";
    } catch (const huckel::EigenError& e) {
      std::cerr << "error: line " << reader.line() << ": " << e.what() << "\n";
      return kExitViolations;
    }
  }
  (void)had_error;
  return kExitOk;
}

// -------------------------------------------------------------- construct

struct ConstructArgs {
  std::string family;
  std::optional<std::int64_t> t;
  std::optional<std::uint64_t> q;
  std::string cert;
};

Json spectrum_summary(const huckel::Spectrum& s) {
  Json groups = Json::array();
  for (const auto& g : huckel::group_eigenvalues(s)) {
    groups.push_back({{"value", num(g.value)}, {"multiplicity", g.multiplicity}});
  }
  return groups;
}

Json groups_json(const std::vector<huckel::EigenvalueGroup>& gs) {
  Json out = Json::array();
  for (const auto& g : gs) {
    out.push_back({{"value", num(g.value)}, {"multiplicity", g.multiplicity}});
  }
  return out;
}

Json srg_certificate(const huckel::Graph& g, const huckel::SrgParams& want,
                     huckel::Json& cert) {
  const auto got = huckel::srg_params(g);
  cert["expected_params"] = huckel::to_json(want);
  cert["observed_params"] = got ? huckel::to_json(*got) : Json(nullptr);
  cert["params_ok"] = got && *got == want;
  const huckel::Spectrum s = huckel::eigenvalues(g);
  const auto predicted = huckel::predicted_spectrum(want);
  const auto cmp = huckel::compare_spectrum(s, predicted, 1e-8);
  cert["spectrum"] = {{"predicted", groups_json(predicted)},
                      {"observed", spectrum_summary(s)},
                      {"match", cmp.matches},
                      {"max_deviation", cmp.max_deviation}};
  return cert;
}

Json energy_certificate(const huckel::Graph& g) {
  const huckel::Spectrum s = huckel::eigenvalues(g);
  const huckel::GraphStats st = huckel::stats(g);
  const huckel::EnergyValues ev = huckel::energy_values(s);
  const huckel::BoundReport rep =
      huckel::make_bound_report(g.order(), st.edges, st.has_isolated, ev);
  Json out = huckel::to_json(rep);
  out["HE"] = num(ev.huckel);
  out["E"] = num(ev.energy);
  out["m"] = st.edges;
  out["equality_tags"] = huckel::classify_equality(rep).names();
  return out;
}

int run_construct(const ConstructArgs& a) {
  Json cert;
  cert["family"] = a.family;
  huckel::Graph g;
  bool ok = true;
  try {
    if (a.family == "conference") {
      if (!a.q) {
        std::cerr << "error: construct conference needs --q\n";
        return kExitUsage;
      }
      g = huckel::paley_graph(*a.q, huckel::PaleyAdjacency::kSquare);
      const std::int64_t t = static_cast<std::int64_t>((*a.q - 1) / 4);
      cert["q"] = *a.q;
      cert["t"] = t;
      srg_certificate(g, {4 * t + 1, 2 * t, t - 1, t}, cert);
      const auto cmp = huckel::conference_energy_comparison(*a.q);
      cert["energy_comparison"] = {
          {"he_from_eigensolver", num(cmp.he_from_eigensolver)},
          {"he_from_spectrum_formula", num(cmp.he_from_spectrum_formula)},
          {"quoted_closed_form", num(cmp.quoted_closed_form)},
          {"closed_form_agrees", cmp.closed_form_agrees},
          {"bounds_hold", cmp.bounds_hold}};
      ok = cert["params_ok"].get<bool>() && cmp.bounds_hold;
    } else {
      if (!a.t) {
        std::cerr << "error: construct " << a.family << " needs --t\n";
        return kExitUsage;
      }
      const std::int64_t t = *a.t;
      cert["t"] = t;
      if (a.family == "switched") {
        g = huckel::build_switched_srg(t);
        srg_certificate(g, huckel::switched_family_params(t), cert);
      } else if (a.family == "extremal") {
        g = huckel::build_extremal_srg(t);
        srg_certificate(g, huckel::extremal_family_params(t), cert);
        cert["predicted_HE"] = num(huckel::predicted_extremal_he(t));
      } else if (a.family == "remark") {
        g = huckel::build_remark_graph(t);
        const auto rep = huckel::verify_remark_spectrum(g, t);
        Json roots = Json::array();
        for (double r : rep.cubic.roots) roots.push_back(num(r));
        cert["template_match"] = {{"match", rep.matches},
                                  {"max_deviation", rep.max_deviation},
                                  {"cubic_roots", roots},
                                  {"diff", rep.diff}};
        const double td = static_cast<double>(t);
        cert["he_lower_claim"] =
            num(2 * (2 * td * td + 2 * td) * (td + 1) + 2 * std::sqrt(2.0) * td);
        cert["lambda3_below_minus_sqrt2_t"] =
            rep.cubic.roots[2] < -std::sqrt(2.0) * td;
        ok = rep.matches;
      } else {
        std::cerr << "error: unknown family '" << a.family
                  << "' (expected extremal|switched|conference|remark)\n";
        return kExitUsage;
      }
      if (cert.contains("params_ok")) ok = cert["params_ok"].get<bool>();
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  cert["n"] = g.order();
  cert["graph6"] = huckel::write_graph6(g);
  cert["energy"] = energy_certificate(g);

  std::cout << huckel::write_graph6(g) << "\n";
  if (a.cert.empty()) {
    std::cerr << cert.dump(2) << "\n";
  } else {
    std::ofstream out(a.cert);
    if (!out) {
      std::cerr << "error: cannot write " << a.cert << "\n";
      return kExitUsage;
    }
    out << cert.dump(2) << "\n";
  }
  return ok ? kExitOk : kExitViolations;
}

// ----------------------------------------------------------------- verify

struct VerifyArgs {
  std::optional<std::size_t> n;
  std::string corpus;
  std::string checks = "all";
  std::size_t jobs = 0;
  double tol = 1e-8;
  double eq_tol = 1e-6;
  std::string dump;
  bool skip_malformed = false;
};

std::string csv_num(const std::optional<double>& x) {
  if (!x) return "";
  std::ostringstream os;
  os << std::setprecision(12) << *x;
  return os.str();
}

int run_verify(const VerifyArgs& a) {
  huckel::SweepOptions opts;
  try {
    opts.checks = huckel::parse_checks(a.checks);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  opts.violation_tol = a.tol;
  opts.equality_tol = a.eq_tol;
  opts.jobs = a.jobs > 0 ? a.jobs : default_jobs();
  opts.collect_rows = !a.dump.empty();

  std::vector<huckel::SweepReport> reports;
  try {
    if (a.n) {
      reports.push_back(huckel::sweep_labeled(*a.n, opts));
    } else if (!a.corpus.empty()) {
      huckel::CorpusReader reader(a.corpus, !a.skip_malformed);
      reports = huckel::sweep_corpus(reader, opts);
    } else {
      std::cerr << "error: verify needs --n or --corpus\n";
      return kExitUsage;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const huckel::CorpusError& e) {
    std::cerr << "error: " << a.corpus << ": " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::runtime_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  bool passed = true;
  Json doc;
  doc["reports"] = Json::array();
  for (const auto& r : reports) {
    passed = passed && r.passed();
    doc["reports"].push_back(huckel::to_json(r));
  }
  doc["passed"] = passed;
  doc["violation_tol"] = a.tol;
  doc["equality_tol"] = a.eq_tol;
  std::cout << doc.dump(2) << "\n";

  if (!a.dump.empty()) {
    std::ofstream csv(a.dump);
    if (!csv) {
      std::cerr << "error: cannot write " << a.dump << "\n";
      return kExitUsage;
    }
    csv << "graph6,n,m,E,HE,alpha,beta,upper_nm,upper_n,lower,intermediate_min,lemma1\n";
    for (const auto& r : reports) {
      for (const auto& row : r.rows) {
        csv << row.graph6 << ',' << row.n << ',' << row.m << ','
            << csv_num(row.energy) << ',' << csv_num(row.huckel) << ','
            << csv_num(row.alpha) << ',' << csv_num(row.beta) << ','
            << csv_num(row.upper_nm) << ',' << csv_num(row.upper_n) << ','
            << csv_num(row.lower) << ',' << csv_num(row.intermediate_min) << ','
            << huckel::to_string(row.lemma1) << '\n';
      }
    }
  }
  return passed ? kExitOk : kExitViolations;
}

// ------------------------------------------------------------------ bound

struct BoundArgs {
  std::size_t n = 0;
  std::optional<std::size_t> m;
};

int run_bound(const BoundArgs& a) {
  std::ostringstream os;
  os << std::setprecision(12);
  try {
    if (a.m) {
      if (a.n < 2) throw std::invalid_argument("bound: n must be >= 2 with --m");
      const auto b = huckel::upper_bound_nm(a.n, *a.m);
      os << "n        " << a.n << "\n"
         << "m        " << *a.m << "\n"
         << "bound    " << huckel::round12(b.value) << "\n"
         << "regime   " << huckel::to_string(b.regime) << "\n";
    } else {
      const double order_bound = huckel::upper_bound_order(a.n);
      os << "n          " << a.n << "\n"
         << "bound      " << huckel::round12(order_bound) << "\n";
      if (a.n >= 2) {
        const auto scan = huckel::scan_upper_bound_over_m(a.n);
        os << "scan_m     " << scan.best_m << "\n"
           << "scan_max   " << huckel::round12(scan.best_value) << "\n"
           << "m_star     " << huckel::round12(huckel::order_bound_maximizer(a.n))
           << "\n";
      }
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  std::cout << os.str();
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hückel energy bounds: analysis, constructions, verification"};
  app.require_subcommand(1);

  AnalyzeArgs analyze;
  auto* cmd_analyze = app.add_subcommand("analyze", "Analyze graph6 records");
  cmd_analyze->add_option("--input,-i", analyze.input, "graph6 file ('-' = stdin)");
  cmd_analyze->add_flag("--skip-malformed", analyze.skip_malformed,
                        "Report malformed records and continue");
  cmd_analyze->add_option("--eq-tol", analyze.eq_tol, "Relative equality tolerance");

  ConstructArgs construct;
  auto* cmd_construct = app.add_subcommand("construct", "Build a graph family member");
  cmd_construct->add_option("family", construct.family,
                            "extremal | switched | conference | remark")
      ->required();
  cmd_construct->add_option("--t", construct.t, "Family parameter t (q = 2t+1)");
  cmd_construct->add_option("--q", construct.q, "Field order for conference graphs");
  cmd_construct->add_option("--cert", construct.cert, "Write certificate JSON here");

  VerifyArgs verify;
  auto* cmd_verify = app.add_subcommand("verify", "Sweep graphs against every bound");
  cmd_verify->add_option("--n", verify.n, "Enumerate all labelled graphs of order n (<= 7)");
  cmd_verify->add_option("--corpus", verify.corpus, "graph6 corpus file");
  cmd_verify->add_option("--checks", verify.checks,
                         "Comma list: lemma1,upper_nm,upper_n,lower,odd_strict,"
                         "intermediate (default all)");
  cmd_verify->add_option("--jobs,-j", verify.jobs, "Worker threads (default HUCKEL_JOBS or cores)");
  cmd_verify->add_option("--tol", verify.tol, "Relative violation tolerance");
  cmd_verify->add_option("--eq-tol", verify.eq_tol, "Relative equality-witness tolerance");
  cmd_verify->add_option("--dump", verify.dump, "Write per-graph CSV rows");
  cmd_verify->add_flag("--skip-malformed", verify.skip_malformed,
                       "Skip malformed corpus records");

  BoundArgs bound;
  auto* cmd_bound = app.add_subcommand("bound", "Evaluate the closed-form bounds");
  cmd_bound->add_option("--n", bound.n, "Order")->required();
  cmd_bound->add_option("--m", bound.m, "Edge count");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  if (*cmd_analyze) return run_analyze(analyze);
  if (*cmd_construct) return run_construct(construct);
  if (*cmd_verify) return run_verify(verify);
  if (*cmd_bound) return run_bound(bound);
  return kExitUsage;
}
