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

#ifndef HUCKEL_FINITE_FIELD_HPP_
#define HUCKEL_FINITE_FIELD_HPP_

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "huckel/graph.hpp"

namespace huckel {

inline bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

inline std::vector<std::uint64_t> prime_factors(std::uint64_t x) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= x; ++d) {
    if (x % d == 0) {
      out.push_back(d);
      while (x % d == 0) x /= d;
    }
  }
  if (x > 1) out.push_back(x);
  return out;
}

struct PrimePower {
  std::uint32_t p = 0;
  std::uint32_t e = 0;
};

inline std::optional<PrimePower> as_prime_power(std::uint64_t q) {
  if (q < 2) return std::nullopt;
  const auto factors = prime_factors(q);
  if (factors.size() != 1) return std::nullopt;
  PrimePower pp{static_cast<std::uint32_t>(factors[0]), 0};
  while (q > 1) {
    q /= pp.p;
    ++pp.e;
  }
  return pp;
}

// An element of GF(p^e), encoded as code = sum_i c_i p^i where c_i is the
// coefficient of x^i in the residue polynomial. Code order is therefore the
// coefficient-lexicographic order (highest coefficient most significant).
struct FieldElement {
  std::uint32_t code = 0;

  friend auto operator<=>(const FieldElement&, const FieldElement&) = default;
};

class FiniteField {
 public:
  static constexpr std::uint64_t kTableLimit = 10000;

  // Deterministic: the modulus is the monic irreducible of degree e with the
  // smallest code among its non-leading coefficients.
  static FiniteField make(std::uint32_t p, std::uint32_t e) {
    if (!is_prime(p)) {
      throw std::invalid_argument("make_field: p=" + std::to_string(p) +
                                  " is not prime");
    }
    if (e < 1) throw std::invalid_argument("make_field: degree must be >= 1");
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < e; ++i) {
      q *= p;
      if (q > (std::uint64_t{1} << 31)) {
        throw std::invalid_argument("make_field: order too large");
      }
    }
    FiniteField f(p, e, q);
    for (std::uint64_t code = 0; code < q; ++code) {
      Poly cand = f.poly_from_code(code, e);
      cand.push_back(1);
      if (is_irreducible(cand, p)) {
        f.modulus_ = std::move(cand);
        break;
      }
    }
    f.primitive_ = f.find_primitive();
    if (q <= kTableLimit) f.build_tables();
    return f;
  }

  std::uint32_t characteristic() const { return p_; }
  std::uint32_t degree() const { return e_; }
  std::uint64_t order() const { return q_; }

  // Monic modulus, coefficients from x^0 up to x^e.
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }

  FieldElement zero() const { return {0}; }
  FieldElement one() const { return {1}; }
  FieldElement primitive_element() const { return primitive_; }

  FieldElement element(std::uint64_t code) const {
    if (code >= q_) {
      throw std::out_of_range("FiniteField: code " + std::to_string(code) +
                              " outside field of order " + std::to_string(q_));
    }
    return {static_cast<std::uint32_t>(code)};
  }

  std::vector<std::uint32_t> coefficients(FieldElement x) const {
    return poly_from_code(x.code, e_);
  }

  FieldElement from_coefficients(const std::vector<std::uint32_t>& c) const {
    if (c.size() > e_) {
      throw std::invalid_argument("FiniteField: too many coefficients");
    }
    std::uint64_t code = 0;
    for (std::size_t i = c.size(); i-- > 0;) code = code * p_ + (c[i] % p_);
    return {static_cast<std::uint32_t>(code)};
  }

  FieldElement add(FieldElement a, FieldElement b) const {
    return digitwise(a, b, [this](std::uint32_t x, std::uint32_t y) {
      return (x + y) % p_;
    });
  }

  FieldElement sub(FieldElement a, FieldElement b) const {
    return digitwise(a, b, [this](std::uint32_t x, std::uint32_t y) {
      return (x + p_ - y) % p_;
    });
  }

  FieldElement neg(FieldElement a) const { return sub(zero(), a); }

  FieldElement mul(FieldElement a, FieldElement b) const {
    if (a.code == 0 || b.code == 0) return zero();
    if (!exp_.empty()) {
      const std::uint64_t s = log_[a.code] + log_[b.code];
      return {exp_[s % (q_ - 1)]};
    }
    return mul_poly(a, b);
  }

  FieldElement pow(FieldElement a, std::uint64_t k) const {
    if (k == 0) return one();
    if (a.code == 0) return zero();
    if (!exp_.empty()) {
      const std::uint64_t s = (static_cast<std::uint64_t>(log_[a.code]) *
                               (k % (q_ - 1))) % (q_ - 1);
      return {exp_[s]};
    }
    FieldElement result = one();
    FieldElement base = a;
    while (k > 0) {
      if (k & 1U) result = mul_poly(result, base);
      base = mul_poly(base, base);
      k >>= 1U;
    }
    return result;
  }

  FieldElement inv(FieldElement a) const {
    if (a.code == 0) throw std::domain_error("FiniteField: inverse of zero");
    return pow(a, q_ - 2);
  }

  // Multiplicative order of a non-zero element.
  std::uint64_t multiplicative_order(FieldElement a) const {
    if (a.code == 0) throw std::domain_error("FiniteField: order of zero");
    std::uint64_t ord = q_ - 1;
    for (std::uint64_t l : prime_factors(q_ - 1)) {
      while (ord % l == 0 && pow(a, ord / l) == one()) ord /= l;
    }
    return ord;
  }

  bool is_square(FieldElement x) const {
    if (x.code == 0 || p_ == 2) return true;
    if (!exp_.empty()) return log_[x.code] % 2 == 0;
    return pow(x, (q_ - 1) / 2) == one();
  }

 private:
  using Poly = std::vector<std::uint32_t>;

  FiniteField(std::uint32_t p, std::uint32_t e, std::uint64_t q)
      : p_(p), e_(e), q_(q) {}

  Poly poly_from_code(std::uint64_t code, std::uint32_t len) const {
    Poly c(len, 0);
    for (std::uint32_t i = 0; i < len; ++i) {
      c[i] = static_cast<std::uint32_t>(code % p_);
      code /= p_;
    }
    return c;
  }

  template <typename Op>
  FieldElement digitwise(FieldElement a, FieldElement b, Op op) const {
    std::uint64_t x = a.code;
    std::uint64_t y = b.code;
    std::uint64_t out = 0;
    std::uint64_t place = 1;
    for (std::uint32_t i = 0; i < e_; ++i) {
      out += place * op(static_cast<std::uint32_t>(x % p_),
                        static_cast<std::uint32_t>(y % p_));
      x /= p_;
      y /= p_;
      place *= p_;
    }
    return {static_cast<std::uint32_t>(out)};
  }

  // Remainder of a modulo the monic polynomial b.
  static Poly poly_mod(Poly a, const Poly& b, std::uint32_t p) {
    const std::size_t db = b.size() - 1;
    for (std::size_t i = a.size(); i-- > db;) {
      const std::uint32_t lead = a[i] % p;
      if (lead == 0) continue;
      for (std::size_t j = 0; j <= db; ++j) {
        const std::size_t idx = i - db + j;
        a[idx] = static_cast<std::uint32_t>(
            (a[idx] + static_cast<std::uint64_t>(p - lead) * b[j]) % p);
      }
    }
    a.resize(std::min(a.size(), db));
    return a;
  }

  // Irreducible iff no monic factor of degree 1..deg/2 divides it.
  static bool is_irreducible(const Poly& f, std::uint32_t p) {
    const std::size_t deg = f.size() - 1;
    for (std::size_t d = 1; d <= deg / 2; ++d) {
      std::uint64_t count = 1;
      for (std::size_t i = 0; i < d; ++i) count *= p;
      for (std::uint64_t code = 0; code < count; ++code) {
        Poly div(d + 1, 0);
        std::uint64_t c = code;
        for (std::size_t i = 0; i < d; ++i) {
          div[i] = static_cast<std::uint32_t>(c % p);
          c /= p;
        }
        div[d] = 1;
        const Poly rem = poly_mod(f, div, p);
        bool zero = true;
        for (std::uint32_t x : rem) zero = zero && x == 0;
        if (zero) return false;
      }
    }
    return true;
  }

  FieldElement mul_poly(FieldElement a, FieldElement b) const {
    const Poly x = poly_from_code(a.code, e_);
    const Poly y = poly_from_code(b.code, e_);
    Poly prod(2 * e_ - 1, 0);
    for (std::uint32_t i = 0; i < e_; ++i) {
      if (x[i] == 0) continue;
      for (std::uint32_t j = 0; j < e_; ++j) {
        prod[i + j] = static_cast<std::uint32_t>(
            (prod[i + j] + static_cast<std::uint64_t>(x[i]) * y[j]) % p_);
      }
    }
    return from_coefficients(poly_mod(std::move(prod), modulus_, p_));
  }

  FieldElement pow_poly(FieldElement a, std::uint64_t k) const {
    FieldElement result = one();
    while (k > 0) {
      if (k & 1U) result = mul_poly(result, a);
      a = mul_poly(a, a);
      k >>= 1U;
    }
    return result;
  }

  // First non-zero element in code order with multiplicative order q - 1.
  FieldElement find_primitive() const {
    const auto factors = prime_factors(q_ - 1);
    for (std::uint64_t code = 1; code < q_; ++code) {
      const FieldElement g{static_cast<std::uint32_t>(code)};
      bool primitive = true;
      for (std::uint64_t l : factors) {
        if (pow_poly(g, (q_ - 1) / l) == one()) {
          primitive = false;
          break;
        }
      }
      if (primitive) return g;
    }
    throw std::logic_error("FiniteField: no primitive element found");
  }

  void build_tables() {
    exp_.assign(q_ - 1, 0);
    log_.assign(q_, 0);
    FieldElement x = one();
    for (std::uint64_t i = 0; i + 1 < q_; ++i) {
      exp_[i] = x.code;
      log_[x.code] = static_cast<std::uint32_t>(i);
      x = mul_poly(x, primitive_);
    }
  }

  std::uint32_t p_;
  std::uint32_t e_;
  std::uint64_t q_;
  Poly modulus_;
  FieldElement primitive_;
  std::vector<std::uint32_t> exp_;
  std::vector<std::uint32_t> log_;
};

inline FiniteField make_field(std::uint32_t p, std::uint32_t e) {
  return FiniteField::make(p, e);
}

inline FieldElement primitive_element(const FiniteField& f) {
  return f.primitive_element();
}

inline bool is_square(const FiniteField& f, FieldElement x) {
  return f.is_square(x);
}

// V = {0} u {g^(i(q+1))} is the subfield GF(q) of GF(q^2); returns its q
// additive cosets a + V, ordered by smallest element code. Vertex i of each
// set is the element with code i.
inline std::vector<VertexSet> subfield_coset_partition(const FiniteField& big,
                                                       std::uint64_t q) {
  if (q < 2 || big.order() != q * q) {
    throw std::invalid_argument(
        "subfield_coset_partition: field order " +
        std::to_string(big.order()) + " is not the square of q=" +
        std::to_string(q));
  }
  const FieldElement g = big.primitive_element();
  std::vector<FieldElement> subfield{big.zero()};
  for (std::uint64_t i = 0; i + 1 < q; ++i) {
    subfield.push_back(big.pow(g, i * (q + 1)));
  }

  const std::size_t total = static_cast<std::size_t>(big.order());
  std::vector<bool> covered(total, false);
  std::vector<VertexSet> cosets;
  for (std::size_t a = 0; a < total; ++a) {
    if (covered[a]) continue;
    VertexSet coset(total);
    for (FieldElement v : subfield) {
      const FieldElement x = big.add(big.element(a), v);
      if (covered[x.code]) {
        throw std::logic_error(
            "subfield_coset_partition: cosets overlap; V is not a subgroup");
      }
      covered[x.code] = true;
      coset.insert(x.code);
    }
    cosets.push_back(std::move(coset));
  }
  return cosets;
}

}  // namespace huckel

#endif  // HUCKEL_FINITE_FIELD_HPP_
