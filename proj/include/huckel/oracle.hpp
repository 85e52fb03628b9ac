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

#ifndef HUCKEL_ORACLE_HPP_
#define HUCKEL_ORACLE_HPP_

#include <algorithm>
#include <array>
#include <atomic>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <fstream>
#include <functional>
#include <istream>
#include <iterator>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <thread>
#include <utility>
#include <vector>

#include "huckel/bounds.hpp"
#include "huckel/graph.hpp"
#include "huckel/graph6.hpp"
#include "huckel/spectral.hpp"

namespace huckel {

inline constexpr std::size_t kMaxEnumerationOrder = 7;

// All 2^(n(n-1)/2) labelled graphs on n vertices. Bit b of the index is the
// b-th pair in graph6 order: (0,1), (0,2), (1,2), (0,3), ...
class LabeledGraphs {
 public:
  explicit LabeledGraphs(std::size_t n) : n_(n) {
    if (n == 0) {
      throw std::invalid_argument("enumerate_labeled_graphs: n must be >= 1");
    }
    if (n > kMaxEnumerationOrder) {
      throw std::invalid_argument(
          "enumerate_labeled_graphs: n=" + std::to_string(n) +
          " exceeds 7; supply a graph6 corpus (e.g. from geng) instead");
    }
    for (std::size_t j = 1; j < n; ++j)
      for (std::size_t i = 0; i < j; ++i) pairs_.emplace_back(i, j);
  }

  std::size_t order() const { return n_; }
  std::uint64_t count() const { return std::uint64_t{1} << pairs_.size(); }

  Graph at(std::uint64_t mask) const {
    Graph g(n_);
    for (std::size_t b = 0; b < pairs_.size(); ++b) {
      if ((mask >> b) & 1U) g.add_edge(pairs_[b].first, pairs_[b].second);
    }
    return g;
  }

  class iterator {
   public:
    using value_type = Graph;
    using difference_type = std::ptrdiff_t;
    using iterator_category = std::input_iterator_tag;

    iterator() = default;
    iterator(const LabeledGraphs* owner, std::uint64_t mask)
        : owner_(owner), mask_(mask) {}
    Graph operator*() const { return owner_->at(mask_); }
    iterator& operator++() {
      ++mask_;
      return *this;
    }
    iterator operator++(int) {
      iterator old = *this;
      ++mask_;
      return old;
    }
    friend bool operator==(const iterator& a, const iterator& b) {
      return a.mask_ == b.mask_;
    }

   private:
    const LabeledGraphs* owner_ = nullptr;
    std::uint64_t mask_ = 0;
  };

  iterator begin() const { return {this, 0}; }
  iterator end() const { return {this, count()}; }

 private:
  std::size_t n_;
  std::vector<std::pair<std::size_t, std::size_t>> pairs_;
};

inline LabeledGraphs enumerate_labeled_graphs(std::size_t n) {
  return LabeledGraphs(n);
}

class CorpusError : public std::runtime_error {
 public:
  CorpusError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Streams graph6 records from a file, one per line; blank lines are skipped.
// In strict mode a malformed record throws CorpusError; otherwise it is
// counted and skipped.
class CorpusReader {
 public:
  CorpusReader(const std::string& path, bool strict = true)
      : owned_(std::make_unique<std::ifstream>(path)), in_(owned_.get()),
        strict_(strict) {
    if (!*owned_) throw std::runtime_error("cannot open corpus file " + path);
  }
  CorpusReader(std::istream& in, bool strict = true)
      : in_(&in), strict_(strict) {}

  std::optional<Graph> next() {
    std::string line;
    while (std::getline(*in_, line)) {
      ++line_;
      while (!line.empty() && (line.back() == '\r' || line.back() == ' ' ||
                               line.back() == '\t')) {
        line.pop_back();
      }
      if (line.empty()) continue;
      try {
        Graph g = parse_graph6(line);
        last_record_ = line;
        return g;
      } catch (const Graph6Error& e) {
        if (strict_) throw CorpusError(line_, e.what());
        ++skipped_;
      }
    }
    if (in_->bad()) throw CorpusError(line_, "read error");
    return std::nullopt;
  }

  std::size_t line() const { return line_; }
  std::size_t skipped() const { return skipped_; }
  const std::string& last_record() const { return last_record_; }

 private:
  std::unique_ptr<std::ifstream> owned_;
  std::istream* in_;
  bool strict_;
  std::size_t line_ = 0;
  std::size_t skipped_ = 0;
  std::string last_record_;
};

inline CorpusReader stream_corpus(const std::string& path, bool strict = true) {
  return CorpusReader(path, strict);
}

enum class Check { kLemma1, kUpperNm, kUpperN, kLower, kOddStrict, kIntermediate };

inline constexpr std::array<Check, 6> kAllChecks = {
    Check::kLemma1, Check::kUpperNm,   Check::kUpperN,
    Check::kLower,  Check::kOddStrict, Check::kIntermediate};

inline std::string_view to_string(Check c) {
  switch (c) {
    case Check::kLemma1: return "lemma1";
    case Check::kUpperNm: return "upper_nm";
    case Check::kUpperN: return "upper_n";
    case Check::kLower: return "lower";
    case Check::kOddStrict: return "odd_strict";
    case Check::kIntermediate: return "intermediate";
  }
  return "?";
}

inline Check parse_check(std::string_view name) {
  for (Check c : kAllChecks) {
    if (to_string(c) == name) return c;
  }
  throw std::invalid_argument("unknown check '" + std::string(name) + "'");
}

inline std::vector<Check> parse_checks(std::string_view list) {
  std::vector<Check> out;
  while (!list.empty()) {
    const std::size_t comma = list.find(',');
    const std::string_view item = list.substr(0, comma);
    if (item == "all") {
      out.assign(kAllChecks.begin(), kAllChecks.end());
    } else if (!item.empty()) {
      const Check c = parse_check(item);
      if (std::find(out.begin(), out.end(), c) == out.end()) out.push_back(c);
    }
    if (comma == std::string_view::npos) break;
    list.remove_prefix(comma + 1);
  }
  std::sort(out.begin(), out.end());
  return out;
}

struct SweepOptions {
  std::vector<Check> checks{kAllChecks.begin(), kAllChecks.end()};
  double violation_tol = 1e-8;   // relative
  double equality_tol = 1e-6;    // relative, for witnesses
  double histogram_resolution = 1e-3;
  std::size_t jobs = 1;
  std::size_t record_cap = 1000;  // max stored witness/violation records
  bool collect_rows = false;
};

struct CheckTally {
  std::uint64_t checked = 0;
  std::uint64_t holds = 0;
  std::uint64_t violated = 0;
  std::uint64_t not_applicable = 0;
  std::optional<double> min_slack;
  std::optional<std::string> min_slack_graph;
  std::uint64_t witness_count = 0;
  std::vector<std::string> witnesses;
  std::vector<std::string> violations;
  std::map<std::int64_t, std::uint64_t> histogram;

  bool consistent() const {
    return checked == holds + violated + not_applicable;
  }
};

// One row of the per-graph dump.
struct GraphRow {
  std::string graph6;
  std::size_t n = 0;
  std::size_t m = 0;
  double energy = 0.0;
  double huckel = 0.0;
  double alpha = 0.0;
  std::optional<double> beta;
  std::optional<double> upper_nm;
  double upper_n = 0.0;
  std::optional<double> lower;
  std::optional<double> intermediate_min;
  LemmaStatus lemma1 = LemmaStatus::kNotApplicable;
};

struct SweepReport {
  std::size_t n = 0;
  std::uint64_t graph_count = 0;
  std::map<Check, CheckTally> checks;
  std::vector<std::string> solver_failures;
  std::vector<GraphRow> rows;

  bool passed() const {
    if (!solver_failures.empty()) return false;
    for (const auto& [c, tally] : checks) {
      if (tally.violated != 0) return false;
    }
    return true;
  }
};

namespace oracle_detail {

inline void push_capped(std::vector<std::string>& v, const std::string& s,
                        std::size_t cap) {
  if (v.size() < cap) v.push_back(s);
}

inline void merge_into(CheckTally& a, const CheckTally& b, std::size_t cap) {
  a.checked += b.checked;
  a.holds += b.holds;
  a.violated += b.violated;
  a.not_applicable += b.not_applicable;
  if (b.min_slack && (!a.min_slack || *b.min_slack < *a.min_slack)) {
    a.min_slack = b.min_slack;
    a.min_slack_graph = b.min_slack_graph;
  }
  a.witness_count += b.witness_count;
  for (const auto& w : b.witnesses) push_capped(a.witnesses, w, cap);
  for (const auto& w : b.violations) push_capped(a.violations, w, cap);
  for (const auto& [bin, count] : b.histogram) a.histogram[bin] += count;
}

// Appends `b` (a later chunk) to `a`; ties in min_slack keep the earlier
// graph so the result does not depend on scheduling.
inline void merge_into(SweepReport& a, SweepReport&& b, std::size_t cap) {
  a.graph_count += b.graph_count;
  for (auto& [c, tally] : b.checks) merge_into(a.checks[c], tally, cap);
  for (auto& f : b.solver_failures) push_capped(a.solver_failures, f, cap);
  a.rows.insert(a.rows.end(), std::make_move_iterator(b.rows.begin()),
                std::make_move_iterator(b.rows.end()));
}

struct Outcome {
  bool applicable = false;
  bool holds = false;
  bool tight = false;
  double slack = 0.0;
};

inline Outcome upper_outcome(double bound, double value,
                             const SweepOptions& o) {
  Outcome out{true, false, false, bound - value};
  const double scale = std::max(1.0, std::abs(bound));
  out.holds = out.slack >= -o.violation_tol * scale;
  out.tight = std::abs(out.slack) <= o.equality_tol * scale;
  return out;
}

inline Outcome evaluate_check(Check c, const BoundReport& rep,
                              const SweepOptions& o) {
  const double he = rep.energies.huckel;
  switch (c) {
    case Check::kLemma1: {
      const LemmaStatus st =
          lemma1_check(rep.n, rep.m, rep.energies.alpha, o.violation_tol);
      if (st == LemmaStatus::kNotApplicable) return {};
      const double nd = static_cast<double>(rep.n);
      const double md = static_cast<double>(rep.m);
      const double rhs = 4.0 * md * md / (nd * nd);
      const double lhs = rep.energies.alpha / static_cast<double>(rep.n / 2);
      Outcome out{true, st == LemmaStatus::kHolds, false, rhs - lhs};
      out.tight = std::abs(out.slack) <= o.equality_tol * std::max(1.0, rhs);
      return out;
    }
    case Check::kUpperNm:
      if (!rep.upper_nm || !rep.upper_nm_in_domain) return {};
      return upper_outcome(*rep.upper_nm, he, o);
    case Check::kUpperN:
      return upper_outcome(rep.upper_n, he, o);
    case Check::kLower: {
      if (!rep.lower || rep.has_isolated) return {};
      const double scale = std::max(1.0, *rep.lower);
      Outcome out{true, false, false, he - *rep.lower};
      out.holds = out.slack >= -o.violation_tol * scale;
      out.tight = std::abs(out.slack) <= o.equality_tol * scale;
      return out;
    }
    case Check::kOddStrict: {
      if (rep.n % 2 == 0 || !rep.upper_nm || !rep.upper_nm_in_domain) return {};
      Outcome out = upper_outcome(*rep.upper_nm, he, o);
      out.holds = out.slack > o.equality_tol * std::max(1.0, *rep.upper_nm);
      out.tight = false;
      return out;
    }
    case Check::kIntermediate:
      if (!rep.intermediate || !rep.intermediate_in_domain) return {};
      return upper_outcome(rep.intermediate->min(), he, o);
  }
  return {};
}

inline void evaluate_into(const Graph& g, const SweepOptions& o,
                          SweepReport& rep) {
  rep.graph_count += 1;
  Spectrum s;
  try {
    s = eigenvalues(g);
  } catch (const EigenError& e) {
    const std::string record = write_graph6(g);
    push_capped(rep.solver_failures, record + " " + e.what(), o.record_cap);
    for (Check c : o.checks) {
      CheckTally& t = rep.checks[c];
      t.checked += 1;
      t.violated += 1;
      push_capped(t.violations, record, o.record_cap);
    }
    return;
  }
  const GraphStats st = stats(g);
  const EnergyValues ev = energy_values(s);
  const BoundReport br = make_bound_report(g.order(), st.edges, st.has_isolated, ev);

  std::optional<std::string> record;
  auto graph6_of = [&]() -> const std::string& {
    if (!record) record = write_graph6(g);
    return *record;
  };
  for (Check c : o.checks) {
    CheckTally& t = rep.checks[c];
    t.checked += 1;
    const Outcome out = evaluate_check(c, br, o);
    if (!out.applicable) {
      t.not_applicable += 1;
      continue;
    }
    if (out.holds) {
      t.holds += 1;
    } else {
      t.violated += 1;
      push_capped(t.violations, graph6_of(), o.record_cap);
    }
    if (out.tight) {
      t.witness_count += 1;
      push_capped(t.witnesses, graph6_of(), o.record_cap);
    }
    if (!t.min_slack || out.slack < *t.min_slack) {
      t.min_slack = out.slack;
      t.min_slack_graph = graph6_of();
    }
    const auto bin = static_cast<std::int64_t>(
        std::floor(out.slack / o.histogram_resolution));
    t.histogram[bin] += 1;
  }
  if (o.collect_rows) {
    GraphRow row;
    row.graph6 = graph6_of();
    row.n = br.n;
    row.m = br.m;
    row.energy = ev.energy;
    row.huckel = ev.huckel;
    row.alpha = ev.alpha;
    row.beta = ev.beta;
    row.upper_nm = br.upper_nm;
    row.upper_n = br.upper_n;
    row.lower = br.lower;
    if (br.intermediate) row.intermediate_min = br.intermediate->min();
    row.lemma1 = br.lemma1;
    rep.rows.push_back(std::move(row));
  }
}

// Runs `work(chunk, report)` for chunk = 0..chunks-1 on up to `jobs` threads
// and merges the chunk reports in chunk order.
inline SweepReport run_chunked(
    std::size_t n, std::size_t chunks, const SweepOptions& o,
    const std::function<void(std::size_t, SweepReport&)>& work) {
  std::vector<SweepReport> parts(chunks);
  for (SweepReport& p : parts) p.n = n;
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (std::size_t c = next++; c < chunks; c = next++) work(c, parts[c]);
  };
  const std::size_t jobs = std::max<std::size_t>(1, std::min(o.jobs, chunks));
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t j = 0; j < jobs; ++j) pool.emplace_back(worker);
  }
  SweepReport total;
  total.n = n;
  for (Check c : o.checks) total.checks[c];
  for (SweepReport& p : parts) merge_into(total, std::move(p), o.record_cap);
  return total;
}

}  // namespace oracle_detail

// Exhaustive sweep over every labelled graph of order n.
inline SweepReport sweep_labeled(std::size_t n, const SweepOptions& o) {
  const LabeledGraphs universe(n);
  const std::uint64_t total = universe.count();
  const std::size_t chunks =
      static_cast<std::size_t>(std::min<std::uint64_t>(total, 256));
  return oracle_detail::run_chunked(
      n, chunks, o, [&](std::size_t c, SweepReport& rep) {
        const std::uint64_t lo = total * c / chunks;
        const std::uint64_t hi = total * (c + 1) / chunks;
        for (std::uint64_t mask = lo; mask < hi; ++mask) {
          oracle_detail::evaluate_into(universe.at(mask), o, rep);
        }
      });
}

// Sweep over an explicit list of graphs; graphs are grouped by order and one
// report per order is returned in increasing n.
inline std::vector<SweepReport> sweep_graphs(const std::vector<Graph>& graphs,
                                             const SweepOptions& o) {
  std::map<std::size_t, std::vector<const Graph*>> by_order;
  for (const Graph& g : graphs) by_order[g.order()].push_back(&g);
  std::vector<SweepReport> out;
  for (const auto& [n, group] : by_order) {
    const std::size_t chunks = std::max<std::size_t>(
        1, std::min<std::size_t>(group.size(), 256));
    out.push_back(oracle_detail::run_chunked(
        n, chunks, o, [&](std::size_t c, SweepReport& rep) {
          const std::size_t lo = group.size() * c / chunks;
          const std::size_t hi = group.size() * (c + 1) / chunks;
          for (std::size_t i = lo; i < hi; ++i) {
            oracle_detail::evaluate_into(*group[i], o, rep);
          }
        }));
  }
  return out;
}

inline std::vector<SweepReport> sweep_corpus(CorpusReader& reader,
                                             const SweepOptions& o) {
  std::vector<Graph> graphs;
  while (auto g = reader.next()) graphs.push_back(std::move(*g));
  return sweep_graphs(graphs, o);
}

}  // namespace huckel

#endif  // HUCKEL_ORACLE_HPP_
