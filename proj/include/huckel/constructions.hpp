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

#ifndef HUCKEL_CONSTRUCTIONS_HPP_
#define HUCKEL_CONSTRUCTIONS_HPP_

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "huckel/bounds.hpp"
#include "huckel/finite_field.hpp"
#include "huckel/graph.hpp"
#include "huckel/spectral.hpp"
#include "huckel/srg.hpp"

namespace huckel {

enum class PaleyAdjacency { kSquare, kNonsquare };

// Vertex i is the field element with code i; x ~ y iff x - y satisfies the
// predicate. The field must have order = 1 mod 4 so that -1 is a square.
inline Graph paley_graph(const FiniteField& f, PaleyAdjacency adjacency) {
  const std::uint64_t q = f.order();
  if (q % 4 != 1) {
    throw std::invalid_argument("paley_graph: q=" + std::to_string(q) +
                                " is not 1 mod 4");
  }
  std::vector<bool> square(q);
  for (std::uint64_t c = 0; c < q; ++c) square[c] = f.is_square(f.element(c));
  const bool want_square = adjacency == PaleyAdjacency::kSquare;
  Graph g(q);
  for (std::uint64_t x = 0; x < q; ++x) {
    for (std::uint64_t y = x + 1; y < q; ++y) {
      const FieldElement d = f.sub(f.element(x), f.element(y));
      if (square[d.code] == want_square) g.add_edge(x, y);
    }
  }
  return g;
}

inline Graph paley_graph(std::uint64_t q, PaleyAdjacency adjacency) {
  const auto pp = as_prime_power(q);
  if (!pp || q % 4 != 1) {
    throw std::invalid_argument("paley_graph: q=" + std::to_string(q) +
                                " must be a prime power with q = 1 mod 4");
  }
  return paley_graph(make_field(pp->p, pp->e), adjacency);
}

// q = 2t + 1 must be a prime power.
inline PrimePower switching_field_base(std::int64_t t) {
  require_positive_t(t, "build_switched_srg");
  const auto pp = as_prime_power(static_cast<std::uint64_t>(2 * t + 1));
  if (!pp) {
    throw std::invalid_argument("build_switched_srg: q = 2t+1 = " +
                                std::to_string(2 * t + 1) +
                                " is not a prime power (the construction needs "
                                "q = 2t+1 to be a prime power)");
  }
  return *pp;
}

// Paley graph on GF(q^2) with the non-square predicate, plus an isolated
// vertex, Seidel-switched on the union of the first t cosets of GF(q).
inline Graph build_switched_srg(std::int64_t t) {
  const PrimePower base = switching_field_base(t);
  const std::uint64_t q = static_cast<std::uint64_t>(2 * t + 1);
  const FiniteField big = make_field(base.p, 2 * base.e);
  const Graph paley = paley_graph(big, PaleyAdjacency::kNonsquare);
  const std::vector<VertexSet> cosets = subfield_coset_partition(big, q);

  const Graph extended = add_isolated_vertex(paley);
  VertexSet y(extended.order());
  for (std::int64_t i = 0; i < t; ++i) {
    for (std::size_t v : cosets[static_cast<std::size_t>(i)].members()) {
      y.insert(v);
    }
  }
  Graph switched = seidel_switch(extended, y);

  const SrgParams want = switched_family_params(t);
  const auto got = srg_params(switched);
  if (!got || *got != want) {
    throw std::logic_error("build_switched_srg: t=" + std::to_string(t) +
                           " produced " +
                           (got ? got->to_string() : std::string("a non-SRG")) +
                           ", expected " + want.to_string());
  }
  return switched;
}

inline Graph build_extremal_srg(std::int64_t t) {
  Graph g = complement(build_switched_srg(t));
  const SrgParams want = extremal_family_params(t);
  const auto got = srg_params(g);
  if (!got || *got != want) {
    throw std::logic_error("build_extremal_srg: complement has wrong parameters");
  }
  return g;
}

// Extremal SRG with vertex 0 duplicated (the copy is not joined to 0).
inline Graph build_remark_graph(std::int64_t t) {
  return add_duplicate_vertex(build_extremal_srg(t), 0);
}

struct Cubic {
  std::array<double, 4> coefficients{};  // x^3, x^2, x, 1
  std::array<double, 3> roots{};         // descending

  long double operator()(long double x) const {
    long double acc = 0;
    for (double c : coefficients) acc = acc * x + c;
    return acc;
  }
};

// p(x) = x^3 - (2t^2+3t) x^2 - (5t^2+7t+2) x + 4t^4+10t^3+8t^2+2t, with its
// three real roots located between the critical points and refined by
// bisection.
inline Cubic remark_cubic(std::int64_t t) {
  require_positive_t(t, "remark_cubic");
  const double td = static_cast<double>(t);
  Cubic p;
  p.coefficients = {1.0, -(2 * td * td + 3 * td), -(5 * td * td + 7 * td + 2),
                    4 * td * td * td * td + 10 * td * td * td + 8 * td * td +
                        2 * td};
  const double a = p.coefficients[1];
  const double b = p.coefficients[2];
  const double disc = 4 * a * a - 12 * b;
  if (disc <= 0) {
    throw std::logic_error("remark_cubic: derivative has no real roots");
  }
  const double lo_crit = (-2 * a - std::sqrt(disc)) / 6;
  const double hi_crit = (-2 * a + std::sqrt(disc)) / 6;
  if (!(p(lo_crit) > 0 && p(hi_crit) < 0)) {
    throw std::logic_error("remark_cubic: fewer than three real roots for t=" +
                           std::to_string(t));
  }
  double cauchy = 0;
  for (std::size_t i = 1; i < 4; ++i) {
    cauchy = std::max(cauchy, std::abs(p.coefficients[i]));
  }
  cauchy += 1;

  auto bisect = [&](double lo, double hi) {
    // Invariant: sign(p(lo)) != sign(p(hi)).
    const bool lo_negative = p(lo) < 0;
    for (int it = 0; it < 200; ++it) {
      const double mid = 0.5 * (lo + hi);
      if (mid <= lo || mid >= hi) break;
      if ((p(mid) < 0) == lo_negative) {
        lo = mid;
      } else {
        hi = mid;
      }
      if (hi - lo <= 1e-13 * std::max(1.0, std::abs(lo))) break;
    }
    return 0.5 * (lo + hi);
  };
  p.roots = {bisect(hi_crit, cauchy), bisect(lo_crit, hi_crit),
             bisect(-cauchy, lo_crit)};
  return p;
}

struct TemplateEntry {
  double expected = 0.0;
  double observed = 0.0;
  double deviation = 0.0;
};

struct RemarkSpectrumReport {
  std::int64_t t = 0;
  bool matches = false;
  double max_deviation = 0.0;
  double template_trace = 0.0;
  Cubic cubic;
  std::vector<TemplateEntry> entries;  // descending by expected value
  std::string diff;                    // empty when matching
};

// {lambda_1^1, t^(2t^2+2t-1), lambda_2^1, 0^1, (-t-1)^(2t^2+2t), lambda_3^1}
inline std::vector<double> remark_spectrum_template(std::int64_t t) {
  const Cubic p = remark_cubic(t);
  std::vector<double> vals;
  const std::int64_t a = 2 * t * t + 2 * t;
  vals.push_back(p.roots[0]);
  vals.insert(vals.end(), static_cast<std::size_t>(a - 1), static_cast<double>(t));
  vals.push_back(p.roots[1]);
  vals.push_back(0.0);
  vals.insert(vals.end(), static_cast<std::size_t>(a), static_cast<double>(-t - 1));
  vals.push_back(p.roots[2]);
  std::sort(vals.begin(), vals.end(), std::greater<>());
  return vals;
}

inline RemarkSpectrumReport verify_remark_spectrum(const Graph& h,
                                                   std::int64_t t,
                                                   double tol = 1e-6) {
  RemarkSpectrumReport rep;
  rep.t = t;
  rep.cubic = remark_cubic(t);
  const std::vector<double> expected = remark_spectrum_template(t);
  for (double x : expected) rep.template_trace += x;

  if (h.order() != expected.size()) {
    rep.diff = "order " + std::to_string(h.order()) + " but template has " +
               std::to_string(expected.size()) + " eigenvalues";
    return rep;
  }
  const Spectrum s = eigenvalues(h);
  for (std::size_t i = 0; i < expected.size(); ++i) {
    const double dev = std::abs(s.values[i] - expected[i]);
    rep.entries.push_back({expected[i], s.values[i], dev});
    rep.max_deviation = std::max(rep.max_deviation, dev);
    if (dev > tol) {
      rep.diff += "index " + std::to_string(i) + ": expected " +
                  std::to_string(expected[i]) + ", observed " +
                  std::to_string(s.values[i]) + "\n";
    }
  }
  rep.matches = rep.diff.empty();
  return rep;
}

// HE of a conference graph srg(4t+1, 2t, t-1, t): the value obtained from
// its spectrum next to the commonly quoted closed form (2t+1)/2 (1+sqrt(4t+1)).
struct ConferenceEnergyComparison {
  std::uint64_t q = 0;
  std::int64_t t = 0;
  double he_from_eigensolver = 0.0;
  double he_from_spectrum_formula = 0.0;  // 4t + (4t-1)(sqrt(4t+1)-1)/2
  double quoted_closed_form = 0.0;
  bool closed_form_agrees = false;        // within 1e-6
  BoundReport bounds;
  bool bounds_hold = false;
};

inline ConferenceEnergyComparison conference_energy_comparison(
    std::uint64_t q, double tol = 1e-8) {
  const Graph g = paley_graph(q, PaleyAdjacency::kSquare);
  const Spectrum s = eigenvalues(g);
  const EnergyValues ev = energy_values(s);
  ConferenceEnergyComparison c;
  c.q = q;
  c.t = static_cast<std::int64_t>((q - 1) / 4);
  const double td = static_cast<double>(c.t);
  const double root = std::sqrt(4 * td + 1);
  c.he_from_eigensolver = ev.huckel;
  c.he_from_spectrum_formula = 4 * td + (4 * td - 1) * (root - 1) / 2;
  c.quoted_closed_form = (2 * td + 1) / 2 * (1 + root);
  c.closed_form_agrees = std::abs(c.quoted_closed_form - ev.huckel) <= 1e-6;
  const GraphStats st = stats(g);
  c.bounds = make_bound_report(g.order(), st.edges, st.has_isolated, ev);
  const BoundReport& b = c.bounds;
  auto ok_upper = [&](double bound, double he) {
    return he <= bound + tol * std::max(1.0, bound);
  };
  c.bounds_hold = ok_upper(b.upper_n, ev.huckel) &&
                  (!b.upper_nm_in_domain || ok_upper(*b.upper_nm, ev.huckel)) &&
                  (!b.intermediate_in_domain ||
                   ok_upper(b.intermediate->min(), ev.huckel)) &&
                  (b.has_isolated ||
                   ev.huckel >= *b.lower - tol * std::max(1.0, *b.lower));
  return c;
}

}  // namespace huckel

#endif  // HUCKEL_CONSTRUCTIONS_HPP_
