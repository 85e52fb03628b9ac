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

#ifndef HUCKEL_BOUNDS_HPP_
#define HUCKEL_BOUNDS_HPP_

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "huckel/spectral.hpp"

namespace huckel {

// Which closed form of the (n, m) upper bound applies.
enum class Regime { kFirst, kSecond };

inline std::string_view to_string(Regime r) {
  return r == Regime::kFirst ? "first" : "second";
}

struct RegimeBound {
  double value = 0.0;
  Regime regime = Regime::kFirst;
};

namespace bounds_detail {

using wide = __int128;

inline void check_edge_range(std::size_t n, std::size_t m, const char* who) {
  const std::size_t max_m = n * (n == 0 ? 0 : n - 1) / 2;
  if (m > max_m) {
    throw std::invalid_argument(std::string(who) + ": m=" + std::to_string(m) +
                                " exceeds n(n-1)/2=" + std::to_string(max_m));
  }
}

inline double to_double(wide x) { return static_cast<double>(static_cast<long double>(x)); }

inline double sqrt_exact(wide x) {
  return static_cast<double>(std::sqrt(static_cast<long double>(x)));
}

// Radicands in [-tol*scale, 0) become 0; anything lower is an error.
inline double clamp_radicand(double x, double scale, double tol,
                             const char* who, bool* clamped) {
  if (x >= 0.0) return x;
  if (x >= -tol * std::max(1.0, scale)) {
    if (clamped != nullptr) *clamped = true;
    return 0.0;
  }
  throw std::domain_error(std::string(who) + ": negative radicand " +
                          std::to_string(x));
}

}  // namespace bounds_detail

// Regime boundary m <= n^3 / (2(n+2)), compared exactly.
inline bool even_first_regime(std::size_t n, std::size_t m) {
  using bounds_detail::wide;
  const wide nn = static_cast<wide>(n);
  return 2 * static_cast<wide>(m) * (nn + 2) <= nn * nn * nn;
}

// Regime boundary m <= n^2 (n-3)^2 / (2(n^2-4n+11)), compared exactly.
inline bool odd_first_regime(std::size_t n, std::size_t m) {
  using bounds_detail::wide;
  const wide nn = static_cast<wide>(n);
  return 2 * static_cast<wide>(m) * (nn * nn - 4 * nn + 11) <=
         nn * nn * (nn - 3) * (nn - 3);
}

inline RegimeBound upper_bound_even(std::size_t n, std::size_t m) {
  using bounds_detail::wide;
  if (n < 2 || n % 2 != 0) {
    throw std::invalid_argument("upper_bound_even: n=" + std::to_string(n) +
                                " is not an even order >= 2");
  }
  bounds_detail::check_edge_range(n, m, "upper_bound_even");
  const wide nn = static_cast<wide>(n);
  const wide mm = static_cast<wide>(m);
  if (even_first_regime(n, m)) {
    const wide radicand = 2 * mm * (nn - 2) * (nn * nn - nn - 2 * mm);
    const double v = (2.0 * static_cast<double>(m) +
                      bounds_detail::sqrt_exact(radicand)) /
                     static_cast<double>(n - 1);
    return {v, Regime::kFirst};
  }
  const wide radicand = mm * nn * (nn * nn - 2 * mm);
  return {2.0 / static_cast<double>(n) * bounds_detail::sqrt_exact(radicand),
          Regime::kSecond};
}

inline RegimeBound upper_bound_odd(std::size_t n, std::size_t m) {
  using bounds_detail::wide;
  if (n < 3 || n % 2 != 1) {
    throw std::invalid_argument("upper_bound_odd: n=" + std::to_string(n) +
                                " is not an odd order >= 3");
  }
  bounds_detail::check_edge_range(n, m, "upper_bound_odd");
  const wide nn = static_cast<wide>(n);
  const wide mm = static_cast<wide>(m);
  if (odd_first_regime(n, m)) {
    const wide radicand =
        2 * mm * nn * (nn * nn - 3 * nn + 1) * (nn * nn - nn - 2 * mm);
    const double v = 2.0 * static_cast<double>(m) / static_cast<double>(n - 1) +
                     bounds_detail::sqrt_exact(radicand) /
                         (static_cast<double>(n) * static_cast<double>(n - 1));
    return {v, Regime::kFirst};
  }
  const wide radicand = 2 * mm * (2 * nn - 1) * (nn * nn - 2 * mm);
  return {bounds_detail::sqrt_exact(radicand) / static_cast<double>(n),
          Regime::kSecond};
}

// Dispatches on parity; n must be >= 2 for even and >= 3 for odd orders.
inline RegimeBound upper_bound_nm(std::size_t n, std::size_t m) {
  return n % 2 == 0 ? upper_bound_even(n, m) : upper_bound_odd(n, m);
}

inline double upper_bound_order_even(std::size_t n) {
  if (n < 2 || n % 2 != 0) {
    throw std::invalid_argument("upper_bound_order_even: n=" +
                                std::to_string(n) + " is not even >= 2");
  }
  const double nd = static_cast<double>(n);
  return nd / 2.0 * (1.0 + std::sqrt(nd - 1.0));
}

inline double upper_bound_order_odd(std::size_t n) {
  if (n % 2 != 1) {
    throw std::invalid_argument("upper_bound_order_odd: n=" +
                                std::to_string(n) + " is not odd");
  }
  const double nd = static_cast<double>(n);
  const double root = std::sqrt(nd);
  return nd / 2.0 * (1.0 + root - 1.0 / root);
}

inline double upper_bound_order(std::size_t n) {
  return n % 2 == 0 ? upper_bound_order_even(n) : upper_bound_order_odd(n);
}

inline double lower_bound(std::size_t n) {
  if (n < 2) {
    throw std::invalid_argument("lower_bound: n=" + std::to_string(n) +
                                " must be >= 2");
  }
  return 2.0 * std::sqrt(static_cast<double>(n) - 1.0);
}

// Edge count at which the first-regime expression peaks as a function of a
// real m: n(n-1+sqrt(n-1))/4 for even n, n(n-1+sqrt(n))/4 for odd n.
inline double order_bound_maximizer(std::size_t n) {
  const double nd = static_cast<double>(n);
  const double root = n % 2 == 0 ? std::sqrt(nd - 1.0) : std::sqrt(nd);
  return nd * (nd - 1.0 + root) / 4.0;
}

struct EdgeScan {
  std::size_t best_m = 0;
  double best_value = 0.0;
};

// Maximises the (n, m) bound over every integer m in [0, n(n-1)/2].
inline EdgeScan scan_upper_bound_over_m(std::size_t n) {
  EdgeScan scan;
  const std::size_t max_m = n * (n - 1) / 2;
  for (std::size_t m = 0; m <= max_m; ++m) {
    const double v = upper_bound_nm(n, m).value;
    if (m == 0 || v > scan.best_value) {
      scan.best_value = v;
      scan.best_m = m;
    }
  }
  return scan;
}

struct IntermediateBounds {
  double f1 = 0.0;
  double f2 = 0.0;
  bool clamped = false;  // a radicand was within tolerance below zero

  double min() const { return std::min(f1, f2); }
};

inline IntermediateBounds intermediate_bounds_even(std::size_t n,
                                                    std::size_t m, double alpha,
                                                    double tol = 1e-9) {
  if (n < 2 || n % 2 != 0) {
    throw std::invalid_argument("intermediate_bounds_even: n=" +
                                std::to_string(n) + " is not even >= 2");
  }
  const double r = static_cast<double>(n / 2);
  const double md = static_cast<double>(m);
  const double two_m = 2.0 * md;
  if (alpha > two_m + tol * std::max(1.0, two_m)) {
    throw std::domain_error("intermediate_bounds_even: alpha=" +
                            std::to_string(alpha) + " exceeds 2m");
  }
  IntermediateBounds out;
  const double rad1 = bounds_detail::clamp_radicand(
      (r - 1.0) * (alpha - md * md / (r * r)), (r - 1.0) * two_m, tol,
      "intermediate_bounds_even", &out.clamped);
  const double rad2 = bounds_detail::clamp_radicand(
      r * (two_m - alpha), r * two_m, tol, "intermediate_bounds_even",
      &out.clamped);
  out.f1 = two_m / r + 2.0 * std::sqrt(rad1);
  out.f2 = 2.0 * std::sqrt(rad2);
  return out;
}

inline IntermediateBounds intermediate_bounds_odd(std::size_t n, std::size_t m,
                                                   double alpha, double beta,
                                                   double tol = 1e-9) {
  if (n < 3 || n % 2 != 1) {
    throw std::invalid_argument("intermediate_bounds_odd: n=" +
                                std::to_string(n) + " is not odd >= 3");
  }
  const double nd = static_cast<double>(n);
  const double r = static_cast<double>((n - 1) / 2);
  const double md = static_cast<double>(m);
  const double two_m = 2.0 * md;
  IntermediateBounds out;
  const double rad1 = bounds_detail::clamp_radicand(
      (r - 1.0) * (alpha - 4.0 * md * md / (nd * nd)),
      std::max(1.0, r - 1.0) * two_m, tol, "intermediate_bounds_odd",
      &out.clamped);
  const double rad2 = bounds_detail::clamp_radicand(
      r * (two_m - alpha - beta * beta), r * two_m, tol,
      "intermediate_bounds_odd", &out.clamped);
  out.f1 = 4.0 * md / nd + 2.0 * std::sqrt(rad1) + beta;
  out.f2 = 2.0 * std::sqrt(rad2) - beta;
  return out;
}

enum class LemmaStatus { kHolds, kViolated, kNotApplicable };

inline std::string_view to_string(LemmaStatus s) {
  switch (s) {
    case LemmaStatus::kHolds: return "holds";
    case LemmaStatus::kViolated: return "violated";
    case LemmaStatus::kNotApplicable: return "not_applicable";
  }
  return "?";
}

// alpha / r <= 4 m^2 / n^2, claimed whenever m >= n-1 >= 2.
inline LemmaStatus lemma1_check(std::size_t n, std::size_t m, double alpha,
                                double tol = 1e-9) {
  if (n < 3 || m + 1 < n) return LemmaStatus::kNotApplicable;
  const double nd = static_cast<double>(n);
  const double md = static_cast<double>(m);
  const double rhs = 4.0 * md * md / (nd * nd);
  const double lhs = alpha / static_cast<double>(n / 2);
  return lhs <= rhs + tol * std::max(1.0, rhs) ? LemmaStatus::kHolds
                                               : LemmaStatus::kViolated;
}

// The odd-order (n, m) bound and its intermediates are proved only under
// m >= n-1 >= 3; the even-order ones carry no hypothesis.
inline bool odd_theorem_applies(std::size_t n, std::size_t m) {
  return n % 2 == 1 && n >= 4 && m + 1 >= n;
}

inline bool upper_nm_in_domain(std::size_t n, std::size_t m) {
  return n % 2 == 0 ? n >= 2 : odd_theorem_applies(n, m);
}

struct BoundReport {
  std::size_t n = 0;
  std::size_t m = 0;
  bool has_isolated = false;
  EnergyValues energies;

  std::optional<double> upper_nm;
  Regime upper_nm_regime = Regime::kFirst;
  bool upper_nm_in_domain = false;
  double upper_n = 0.0;
  std::optional<double> lower;

  std::optional<IntermediateBounds> intermediate;
  bool intermediate_in_domain = false;
  LemmaStatus lemma1 = LemmaStatus::kNotApplicable;

  std::optional<double> slack_upper;    // upper_nm - HE
  double slack_upper_n = 0.0;           // upper_n - HE
  std::optional<double> slack_lower;    // HE - lower
};

inline BoundReport make_bound_report(std::size_t n, std::size_t m,
                                     bool has_isolated,
                                     const EnergyValues& ev,
                                     double radicand_tol = 1e-9) {
  BoundReport rep;
  rep.n = n;
  rep.m = m;
  rep.has_isolated = has_isolated;
  rep.energies = ev;
  const double he = ev.huckel;

  if (n >= 2) {
    const RegimeBound b = upper_bound_nm(n, m);
    rep.upper_nm = b.value;
    rep.upper_nm_regime = b.regime;
    rep.upper_nm_in_domain = upper_nm_in_domain(n, m);
    rep.slack_upper = b.value - he;

    rep.lower = lower_bound(n);
    rep.slack_lower = he - *rep.lower;

    if (n % 2 == 0) {
      rep.intermediate = intermediate_bounds_even(n, m, ev.alpha, radicand_tol);
      rep.intermediate_in_domain = true;
    } else {
      rep.intermediate = intermediate_bounds_odd(n, m, ev.alpha,
                                                 ev.beta.value_or(0.0),
                                                 radicand_tol);
      rep.intermediate_in_domain = odd_theorem_applies(n, m);
    }
  }
  rep.upper_n = upper_bound_order(n);
  rep.slack_upper_n = rep.upper_n - he;
  rep.lemma1 = lemma1_check(n, m, ev.alpha, radicand_tol);
  return rep;
}

struct EqualityTags {
  bool upper_nm_tight = false;
  bool upper_n_tight = false;
  bool lower_tight = false;

  std::vector<std::string> names() const {
    std::vector<std::string> out;
    if (lower_tight) out.emplace_back("lower_tight");
    if (upper_n_tight) out.emplace_back("upper_n_tight");
    if (upper_nm_tight) out.emplace_back("upper_nm_tight");
    return out;
  }
  bool empty() const { return !upper_nm_tight && !upper_n_tight && !lower_tight; }
};

inline bool within_relative(double slack, double bound, double tol) {
  return std::abs(slack) <= tol * std::max(1.0, std::abs(bound));
}

inline EqualityTags classify_equality(const BoundReport& rep,
                                      double tol = 1e-6) {
  EqualityTags tags;
  if (rep.upper_nm && rep.slack_upper) {
    tags.upper_nm_tight = within_relative(*rep.slack_upper, *rep.upper_nm, tol);
  }
  tags.upper_n_tight = within_relative(rep.slack_upper_n, rep.upper_n, tol);
  if (rep.lower && rep.slack_lower && !rep.has_isolated) {
    tags.lower_tight = within_relative(*rep.slack_lower, *rep.lower, tol);
  }
  return tags;
}

}  // namespace huckel

#endif  // HUCKEL_BOUNDS_HPP_
