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

#ifndef HUCKEL_SRG_HPP_
#define HUCKEL_SRG_HPP_

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "huckel/graph.hpp"
#include "huckel/spectral.hpp"

namespace huckel {

struct SrgParams {
  std::int64_t n = 0;
  std::int64_t k = 0;
  std::int64_t lambda = 0;
  std::int64_t mu = 0;

  // k(k - lambda - 1) = (n - k - 1) mu
  bool satisfies_counting_identity() const {
    return k * (k - lambda - 1) == (n - k - 1) * mu;
  }

  bool satisfies_ranges() const {
    if (n < 0 || k < 0 || lambda < 0 || mu < 0 || k >= n) return false;
    if (k >= 1 && lambda > k - 1) return false;
    return mu <= k;
  }

  std::string to_string() const {
    return "(" + std::to_string(n) + "," + std::to_string(k) + "," +
           std::to_string(lambda) + "," + std::to_string(mu) + ")";
  }

  friend bool operator==(const SrgParams&, const SrgParams&) = default;
};

// Parameters of the complement: (n, n-k-1, n-2-2k+mu, n-2k+lambda).
inline SrgParams complement_params(const SrgParams& p) {
  return {p.n, p.n - p.k - 1, p.n - 2 - 2 * p.k + p.mu,
          p.n - 2 * p.k + p.lambda};
}

// Combinatorial check through common-neighbour counts. Complete and empty
// graphs are not reported as strongly regular.
inline std::optional<SrgParams> srg_params(const Graph& g) {
  const std::size_t n = g.order();
  if (n < 3) return std::nullopt;
  const std::size_t k = g.degree(0);
  for (std::size_t v = 1; v < n; ++v) {
    if (g.degree(v) != k) return std::nullopt;
  }
  if (k == 0 || k == n - 1) return std::nullopt;

  std::optional<std::size_t> lambda;
  std::optional<std::size_t> mu;
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      const std::size_t c = g.common_neighbors(u, v);
      std::optional<std::size_t>& slot = g.adjacent(u, v) ? lambda : mu;
      if (!slot) {
        slot = c;
      } else if (*slot != c) {
        return std::nullopt;
      }
    }
  }
  return SrgParams{static_cast<std::int64_t>(n), static_cast<std::int64_t>(k),
                   static_cast<std::int64_t>(*lambda),
                   static_cast<std::int64_t>(*mu)};
}

class InfeasibleParameters : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// {k^1, r^f, s^g} with r > s the restricted eigenvalues. Multiplicities are
// forced by f + g = n - 1 and k + f r + g s = 0; entries with multiplicity
// zero are dropped.
inline std::vector<EigenvalueGroup> predicted_spectrum(const SrgParams& p) {
  if (!p.satisfies_ranges() || !p.satisfies_counting_identity()) {
    throw InfeasibleParameters("predicted_spectrum: " + p.to_string() +
                               " violates the SRG parameter identities");
  }
  const double diff = static_cast<double>(p.lambda - p.mu);
  const double disc = diff * diff + 4.0 * static_cast<double>(p.k - p.mu);
  if (disc <= 0.0) {
    throw InfeasibleParameters("predicted_spectrum: " + p.to_string() +
                               " has a degenerate discriminant");
  }
  const double root = std::sqrt(disc);
  const double r = (diff + root) / 2.0;
  const double s = (diff - root) / 2.0;
  const double n1 = static_cast<double>(p.n - 1);
  const double skew = (2.0 * static_cast<double>(p.k) + n1 * diff) / root;
  const double f = (n1 - skew) / 2.0;
  const double g = (n1 + skew) / 2.0;
  const double fr = std::round(f);
  const double gr = std::round(g);
  if (std::abs(f - fr) > 1e-9 || std::abs(g - gr) > 1e-9 || fr < 0 || gr < 0) {
    throw InfeasibleParameters("predicted_spectrum: " + p.to_string() +
                               " gives non-integral multiplicities " +
                               std::to_string(f) + ", " + std::to_string(g));
  }
  std::vector<EigenvalueGroup> out;
  auto push = [&](double value, double mult) {
    if (mult > 0) out.push_back({value, static_cast<std::size_t>(mult)});
  };
  push(static_cast<double>(p.k), 1);
  push(r, fr);
  push(s, gr);
  // k is the largest eigenvalue of a connected SRG; keep descending order
  // for disconnected (imprimitive) parameter sets too.
  std::sort(out.begin(), out.end(),
            [](const EigenvalueGroup& a, const EigenvalueGroup& b) {
              return a.value > b.value;
            });
  return out;
}

inline void require_positive_t(std::int64_t t, const char* who) {
  if (t < 1) {
    throw std::invalid_argument(std::string(who) + ": t=" + std::to_string(t) +
                                " must be >= 1");
  }
}

// (4t^2+4t+2, 2t^2+3t+1, t^2+2t, t^2+2t+1)
inline SrgParams extremal_family_params(std::int64_t t) {
  require_positive_t(t, "extremal_family_params");
  return {4 * t * t + 4 * t + 2, 2 * t * t + 3 * t + 1, t * t + 2 * t,
          t * t + 2 * t + 1};
}

// (4t^2+4t+2, 2t^2+t, t^2-1, t^2)
inline SrgParams switched_family_params(std::int64_t t) {
  require_positive_t(t, "switched_family_params");
  return {4 * t * t + 4 * t + 2, 2 * t * t + t, t * t - 1, t * t};
}

// Equal to (n/2)(1 + sqrt(n-1)) with n-1 = (2t+1)^2.
inline double predicted_extremal_he(std::int64_t t) {
  require_positive_t(t, "predicted_extremal_he");
  return 2.0 * static_cast<double>(2 * t * t * t + 4 * t * t + 3 * t + 1);
}

struct SpectrumComparison {
  bool matches = false;
  double max_deviation = 0.0;
  std::vector<EigenvalueGroup> observed;
};

// Multiset comparison: group the observed values with `gap`, then require
// the same multiplicities and values within `tol`.
inline SpectrumComparison compare_spectrum(
    const Spectrum& s, const std::vector<EigenvalueGroup>& expected,
    double tol = 1e-8, double gap = 1e-6) {
  SpectrumComparison cmp;
  cmp.observed = group_eigenvalues(s, gap);
  if (cmp.observed.size() != expected.size()) return cmp;
  for (std::size_t i = 0; i < expected.size(); ++i) {
    if (cmp.observed[i].multiplicity != expected[i].multiplicity) return cmp;
  }
  // Per-value deviation uses the raw eigenvalues, not group means.
  std::size_t idx = 0;
  for (const EigenvalueGroup& grp : expected) {
    for (std::size_t j = 0; j < grp.multiplicity; ++j, ++idx) {
      cmp.max_deviation =
          std::max(cmp.max_deviation, std::abs(s.values[idx] - grp.value));
    }
  }
  cmp.matches = cmp.max_deviation <= tol;
  return cmp;
}

}  // namespace huckel

#endif  // HUCKEL_SRG_HPP_
