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

#ifndef HUCKEL_SPECTRAL_HPP_
#define HUCKEL_SPECTRAL_HPP_

#include <algorithm>
#include <cmath>
#include <concepts>
#include <cstddef>
#include <functional>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "huckel/graph.hpp"

namespace huckel {

class EigenError : public std::runtime_error {
 public:
  EigenError(const std::string& what, double residual)
      : std::runtime_error(what), residual_(residual) {}

  // Largest remaining off-diagonal magnitude (or residual) when the solver
  // gave up.
  double residual() const { return residual_; }

 private:
  double residual_;
};

struct SpectrumOptions {
  double tol = 1e-12;        // relative; bounds the accepted residual
  int max_iterations = 60;   // QL sweeps per eigenvalue
};

// Adjacency eigenvalues in non-increasing order. `residual` is
// max_i ||A v_i - lambda_i v_i||_inf over the computed eigenpairs.
struct Spectrum {
  std::vector<double> values;
  double residual = 0.0;

  std::size_t size() const { return values.size(); }
};

namespace linalg {

template <std::floating_point T>
struct EigenDecomposition {
  std::vector<T> values;   // unsorted
  std::vector<T> vectors;  // column i of the row-major n x n matrix
};

// Householder reduction of the symmetric matrix held in `v` to tridiagonal
// form (diagonal d, subdiagonal e[1..n-1]); `v` is overwritten with the
// accumulated orthogonal transformation.
template <std::floating_point T>
void tridiagonalize(std::size_t n, std::vector<T>& v, std::vector<T>& d,
                    std::vector<T>& e) {
  auto V = [&](std::size_t i, std::size_t j) -> T& { return v[i * n + j]; };
  for (std::size_t j = 0; j < n; ++j) d[j] = V(n - 1, j);

  for (std::size_t i = n - 1; i > 0; --i) {
    T scale = 0;
    T h = 0;
    for (std::size_t k = 0; k < i; ++k) scale += std::abs(d[k]);
    if (scale == T{0}) {
      e[i] = d[i - 1];
      for (std::size_t j = 0; j < i; ++j) {
        d[j] = V(i - 1, j);
        V(i, j) = 0;
        V(j, i) = 0;
      }
    } else {
      for (std::size_t k = 0; k < i; ++k) {
        d[k] /= scale;
        h += d[k] * d[k];
      }
      T f = d[i - 1];
      T g = std::sqrt(h);
      if (f > 0) g = -g;
      e[i] = scale * g;
      h -= f * g;
      d[i - 1] = f - g;
      for (std::size_t j = 0; j < i; ++j) e[j] = 0;
      for (std::size_t j = 0; j < i; ++j) {
        f = d[j];
        V(j, i) = f;
        g = e[j] + V(j, j) * f;
        for (std::size_t k = j + 1; k < i; ++k) {
          g += V(k, j) * d[k];
          e[k] += V(k, j) * f;
        }
        e[j] = g;
      }
      f = 0;
      for (std::size_t j = 0; j < i; ++j) {
        e[j] /= h;
        f += e[j] * d[j];
      }
      const T hh = f / (h + h);
      for (std::size_t j = 0; j < i; ++j) e[j] -= hh * d[j];
      for (std::size_t j = 0; j < i; ++j) {
        f = d[j];
        g = e[j];
        for (std::size_t k = j; k < i; ++k) V(k, j) -= (f * e[k] + g * d[k]);
        d[j] = V(i - 1, j);
        V(i, j) = 0;
      }
    }
    d[i] = h;
  }

  for (std::size_t i = 0; i + 1 < n; ++i) {
    V(n - 1, i) = V(i, i);
    V(i, i) = 1;
    const T h = d[i + 1];
    if (h != T{0}) {
      for (std::size_t k = 0; k <= i; ++k) d[k] = V(k, i + 1) / h;
      for (std::size_t j = 0; j <= i; ++j) {
        T g = 0;
        for (std::size_t k = 0; k <= i; ++k) g += V(k, i + 1) * V(k, j);
        for (std::size_t k = 0; k <= i; ++k) V(k, j) -= g * d[k];
      }
    }
    for (std::size_t k = 0; k <= i; ++k) V(k, i + 1) = 0;
  }
  for (std::size_t j = 0; j < n; ++j) {
    d[j] = V(n - 1, j);
    V(n - 1, j) = 0;
  }
  V(n - 1, n - 1) = 1;
  e[0] = 0;
}

// Implicit-shift QL on the tridiagonal (d, e), rotating the columns of `v`.
template <std::floating_point T>
void tridiagonal_ql(std::size_t n, std::vector<T>& v, std::vector<T>& d,
                    std::vector<T>& e, int max_iterations) {
  auto V = [&](std::size_t i, std::size_t j) -> T& { return v[i * n + j]; };
  for (std::size_t i = 1; i < n; ++i) e[i - 1] = e[i];
  e[n - 1] = 0;

  T f = 0;
  T tst1 = 0;
  const T eps = std::numeric_limits<T>::epsilon();
  for (std::size_t l = 0; l < n; ++l) {
    tst1 = std::max(tst1, std::abs(d[l]) + std::abs(e[l]));
    std::size_t m = l;
    while (m < n && std::abs(e[m]) > eps * tst1) ++m;
    if (m > l) {
      int iter = 0;
      do {
        if (++iter > max_iterations) {
          throw EigenError(
              "eigenvalues: QL iteration did not converge for eigenvalue " +
                  std::to_string(l) + " within " +
                  std::to_string(max_iterations) + " sweeps",
              static_cast<double>(std::abs(e[l])));
        }
        T g = d[l];
        T p = (d[l + 1] - g) / (2 * e[l]);
        T r = std::hypot(p, T{1});
        if (p < 0) r = -r;
        d[l] = e[l] / (p + r);
        d[l + 1] = e[l] * (p + r);
        const T dl1 = d[l + 1];
        T h = g - d[l];
        for (std::size_t i = l + 2; i < n; ++i) d[i] -= h;
        f += h;

        p = d[m];
        T c = 1;
        T c2 = c;
        T c3 = c;
        const T el1 = e[l + 1];
        T s = 0;
        T s2 = 0;
        for (std::size_t ii = m; ii-- > l;) {
          c3 = c2;
          c2 = c;
          s2 = s;
          g = c * e[ii];
          h = c * p;
          r = std::hypot(p, e[ii]);
          e[ii + 1] = s * r;
          s = e[ii] / r;
          c = p / r;
          p = c * d[ii] - s * g;
          d[ii + 1] = h + s * (c * g + s * d[ii]);
          for (std::size_t k = 0; k < n; ++k) {
            h = V(k, ii + 1);
            V(k, ii + 1) = s * V(k, ii) + c * h;
            V(k, ii) = c * V(k, ii) - s * h;
          }
        }
        p = -s * s2 * c3 * el1 * e[l] / dl1;
        e[l] = s * p;
        d[l] = c * p;
      } while (std::abs(e[l]) > eps * tst1);
    }
    d[l] += f;
    e[l] = 0;
  }
}

// Dense symmetric eigendecomposition of the row-major n x n matrix `a`.
template <std::floating_point T>
EigenDecomposition<T> symmetric_eigen(std::span<const T> a, std::size_t n,
                                      int max_iterations = 60) {
  if (a.size() != n * n) {
    throw std::invalid_argument("symmetric_eigen: matrix size mismatch");
  }
  EigenDecomposition<T> out;
  out.vectors.assign(a.begin(), a.end());
  out.values.assign(n, T{0});
  if (n == 0) return out;
  std::vector<T> e(n, T{0});
  tridiagonalize(n, out.vectors, out.values, e);
  tridiagonal_ql(n, out.vectors, out.values, e, max_iterations);
  return out;
}

template <std::floating_point T>
T max_residual(std::span<const T> a, std::size_t n,
               const EigenDecomposition<T>& dec) {
  T worst = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t row = 0; row < n; ++row) {
      T acc = -dec.values[i] * dec.vectors[row * n + i];
      for (std::size_t k = 0; k < n; ++k) {
        acc += a[row * n + k] * dec.vectors[k * n + i];
      }
      worst = std::max(worst, std::abs(acc));
    }
  }
  return worst;
}

}  // namespace linalg

template <std::floating_point T = double>
std::vector<T> adjacency_matrix(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<T> a(n * n, T{0});
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (g.adjacent(i, j)) a[i * n + j] = T{1};
  return a;
}

inline Spectrum eigenvalues(const Graph& g, const SpectrumOptions& opts = {}) {
  const std::size_t n = g.order();
  if (n == 0) throw std::invalid_argument("eigenvalues: graph has no vertices");
  const std::vector<double> a = adjacency_matrix(g);
  auto dec = linalg::symmetric_eigen<double>(a, n, opts.max_iterations);

  Spectrum s;
  s.residual = linalg::max_residual<double>(a, n, dec);
  s.values = std::move(dec.values);
  std::sort(s.values.begin(), s.values.end(), std::greater<>());
  const double limit =
      opts.tol * static_cast<double>(n) * std::max(1.0, std::abs(s.values[0]));
  if (!(s.residual <= limit)) {
    throw EigenError("eigenvalues: residual " + std::to_string(s.residual) +
                         " exceeds " + std::to_string(limit),
                     s.residual);
  }
  return s;
}

struct EnergyValues {
  double energy = 0.0;
  double huckel = 0.0;
  double alpha = 0.0;
  std::optional<double> beta;  // odd order only
  std::size_t r = 0;
};

inline double energy(const Spectrum& s) {
  double sum = 0.0;
  for (double x : s.values) sum += std::abs(x);
  return sum;
}

inline double huckel_energy(const Spectrum& s) {
  const std::size_t n = s.size();
  const std::size_t r = n / 2;
  double sum = 0.0;
  for (std::size_t i = 0; i < r; ++i) sum += s.values[i];
  double he = 2.0 * sum;
  if (n % 2 == 1) he += s.values[r];
  return he;
}

struct AlphaBeta {
  double alpha = 0.0;
  std::optional<double> beta;
};

inline AlphaBeta alpha_beta(const Spectrum& s) {
  const std::size_t n = s.size();
  const std::size_t r = n / 2;
  AlphaBeta out;
  for (std::size_t i = 0; i < r; ++i) out.alpha += s.values[i] * s.values[i];
  if (n % 2 == 1) out.beta = s.values[r];
  return out;
}

inline EnergyValues energy_values(const Spectrum& s) {
  EnergyValues ev;
  ev.energy = energy(s);
  ev.huckel = huckel_energy(s);
  const AlphaBeta ab = alpha_beta(s);
  ev.alpha = ab.alpha;
  ev.beta = ab.beta;
  ev.r = s.size() / 2;
  return ev;
}

// Trace and Frobenius identities: sum(lambda) = 0, sum(lambda^2) = 2m.
struct TraceCheck {
  double trace_error = 0.0;
  double frobenius_error = 0.0;
  double tolerance = 0.0;
  bool ok() const {
    return trace_error <= tolerance && frobenius_error <= tolerance;
  }
};

inline TraceCheck check_trace_identities(const Spectrum& s, std::size_t edges,
                                         double rel_tol = 1e-9) {
  double sum = 0.0;
  double sum_sq = 0.0;
  for (double x : s.values) {
    sum += x;
    sum_sq += x * x;
  }
  const double two_m = 2.0 * static_cast<double>(edges);
  TraceCheck tc;
  tc.trace_error = std::abs(sum);
  tc.frobenius_error = std::abs(sum_sq - two_m);
  tc.tolerance = rel_tol * std::max(1.0, two_m);
  return tc;
}

struct EigenvalueGroup {
  double value = 0.0;
  std::size_t multiplicity = 0;
};

// Groups sorted eigenvalues whose consecutive gaps are <= gap.
inline std::vector<EigenvalueGroup> group_eigenvalues(const Spectrum& s,
                                                      double gap = 1e-6) {
  std::vector<EigenvalueGroup> groups;
  double run_sum = 0.0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i == 0 || s.values[i - 1] - s.values[i] > gap) {
      if (!groups.empty()) {
        groups.back().value = run_sum / static_cast<double>(groups.back().multiplicity);
      }
      groups.push_back({s.values[i], 0});
      run_sum = 0.0;
    }
    groups.back().multiplicity += 1;
    run_sum += s.values[i];
  }
  if (!groups.empty()) {
    groups.back().value = run_sum / static_cast<double>(groups.back().multiplicity);
  }
  return groups;
}

}  // namespace huckel

#endif  // HUCKEL_SPECTRAL_HPP_
