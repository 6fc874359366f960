// Copyright 2026 The homcount Authors
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

// Dense univariate polynomials over the integers in the indeterminate q,
// with unbounded coefficients. Used to hold |GL_n(q)|, the orbit sizes of
// Hom(A, GL_n(q)) and their sums.

#ifndef HOMCOUNT_EXACTPOLY_HPP_
#define HOMCOUNT_EXACTPOLY_HPP_

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>
#include <json.hpp>

#include "homcount/errors.hpp"

namespace homcount {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

class IntPolynomial {
 public:
  /// The zero polynomial.
  IntPolynomial() = default;

  /// Constant polynomial.
  IntPolynomial(BigInt constant) {  // NOLINT(google-explicit-constructor)
    if (constant != 0) coeffs_.push_back(std::move(constant));
  }
  IntPolynomial(int constant) : IntPolynomial(BigInt(constant)) {}  // NOLINT

  /// Coefficients indexed by exponent; trailing zeros are dropped.
  explicit IntPolynomial(std::vector<BigInt> coefficients)
      : coeffs_(std::move(coefficients)) {
    trim();
  }

  static IntPolynomial monomial(BigInt coefficient, std::size_t exponent) {
    std::vector<BigInt> c(exponent + 1);
    c[exponent] = std::move(coefficient);
    return IntPolynomial(std::move(c));
  }

  /// q^k - 1 for k >= 1.
  static IntPolynomial q_power_minus_one(std::size_t k) {
    std::vector<BigInt> c(k + 1);
    c[0] = -1;
    c[k] += 1;
    return IntPolynomial(std::move(c));
  }

  bool is_zero() const noexcept { return coeffs_.empty(); }

  /// std::nullopt stands for the degree of the zero polynomial (minus
  /// infinity).
  std::optional<std::size_t> degree() const noexcept {
    if (coeffs_.empty()) return std::nullopt;
    return coeffs_.size() - 1;
  }

  /// Coefficient of q^exponent; zero beyond the degree.
  BigInt coefficient(std::size_t exponent) const {
    return exponent < coeffs_.size() ? coeffs_[exponent] : BigInt(0);
  }

  BigInt leading_coefficient() const {
    return coeffs_.empty() ? BigInt(0) : coeffs_.back();
  }

  std::span<const BigInt> coefficients() const noexcept { return coeffs_; }

  /// Multiplication by q^k.
  IntPolynomial shifted(std::size_t k) const {
    if (is_zero() || k == 0) return *this;
    std::vector<BigInt> c(k + coeffs_.size());
    std::copy(coeffs_.begin(), coeffs_.end(), c.begin() + static_cast<std::ptrdiff_t>(k));
    return IntPolynomial(std::move(c));
  }

  IntPolynomial& operator+=(const IntPolynomial& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    trim();
    return *this;
  }

  IntPolynomial& operator-=(const IntPolynomial& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    trim();
    return *this;
  }

  IntPolynomial& operator*=(const IntPolynomial& rhs) {
    *this = *this * rhs;
    return *this;
  }

  friend IntPolynomial operator+(IntPolynomial lhs, const IntPolynomial& rhs) {
    lhs += rhs;
    return lhs;
  }

  friend IntPolynomial operator-(IntPolynomial lhs, const IntPolynomial& rhs) {
    lhs -= rhs;
    return lhs;
  }

  friend IntPolynomial operator-(IntPolynomial p) {
    for (auto& c : p.coeffs_) c = -c;
    return p;
  }

  friend IntPolynomial operator*(const IntPolynomial& lhs, const IntPolynomial& rhs) {
    if (lhs.is_zero() || rhs.is_zero()) return {};
    std::vector<BigInt> c(lhs.coeffs_.size() + rhs.coeffs_.size() - 1);
    // Sparse-aware: orbit computations multiply by binomials q^k - 1.
    std::vector<std::size_t> nz;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
      if (rhs.coeffs_[j] != 0) nz.push_back(j);
    }
    for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
      if (lhs.coeffs_[i] == 0) continue;
      for (std::size_t j : nz) c[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
    }
    return IntPolynomial(std::move(c));
  }

  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<BigInt> coeffs_;
};

namespace detail {

template <class Coeff>
struct Term {
  std::size_t exponent;
  Coeff coefficient;
};

// Schoolbook long division of `dividend` by a divisor given as its nonzero
// lower terms plus leading term. Returns the quotient; `dividend` is left
// holding the remainder.
template <class Coeff, class DivideByLead>
std::vector<Coeff> long_divide(std::vector<Coeff>& dividend, std::size_t divisor_degree,
                               const std::vector<Term<Coeff>>& lower_terms,
                               DivideByLead divide_by_lead) {
  if (dividend.size() <= divisor_degree) return {};
  std::vector<Coeff> quotient(dividend.size() - divisor_degree);
  for (std::size_t i = dividend.size(); i-- > divisor_degree;) {
    if (dividend[i] == 0) continue;
    Coeff c = divide_by_lead(dividend[i]);
    dividend[i] = 0;
    const std::size_t shift = i - divisor_degree;
    for (const auto& t : lower_terms) dividend[shift + t.exponent] -= c * t.coefficient;
    quotient[shift] = std::move(c);
  }
  return quotient;
}

}  // namespace detail

/// Returns d with p == d * divisor. The quotient is computed over the
/// rationals and must come out integral with zero remainder; anything else
/// throws NonZeroRemainder. Throws DivisionByZero for a zero divisor.
inline IntPolynomial div_exact(const IntPolynomial& p, const IntPolynomial& divisor) {
  if (divisor.is_zero()) throw DivisionByZero();
  if (p.is_zero()) return {};
  const std::size_t dd = *divisor.degree();
  const BigInt lead = divisor.leading_coefficient();
  const auto dc = divisor.coefficients();

  if (lead == 1 || lead == -1) {
    // Unit leading coefficient: the rational quotient is integral at every step.
    std::vector<detail::Term<BigInt>> lower;
    for (std::size_t j = 0; j < dd; ++j) {
      if (dc[j] != 0) lower.push_back({j, dc[j]});
    }
    std::vector<BigInt> rem(p.coefficients().begin(), p.coefficients().end());
    auto q = detail::long_divide(rem, dd, lower, [&](const BigInt& v) {
      return lead == 1 ? v : BigInt(-v);
    });
    if (std::any_of(rem.begin(), rem.end(), [](const BigInt& v) { return v != 0; })) {
      throw NonZeroRemainder();
    }
    return IntPolynomial(std::move(q));
  }

  std::vector<detail::Term<Rational>> lower;
  for (std::size_t j = 0; j < dd; ++j) {
    if (dc[j] != 0) lower.push_back({j, Rational(dc[j])});
  }
  std::vector<Rational> rem;
  rem.reserve(p.coefficients().size());
  for (const auto& c : p.coefficients()) rem.emplace_back(c);
  const Rational rlead(lead);
  auto q = detail::long_divide(rem, dd, lower, [&](const Rational& v) { return Rational(v / rlead); });
  if (std::any_of(rem.begin(), rem.end(), [](const Rational& v) { return v != 0; })) {
    throw NonZeroRemainder();
  }
  std::vector<BigInt> out;
  out.reserve(q.size());
  for (const auto& c : q) {
    if (denominator(c) != 1) {
      throw NonZeroRemainder("polynomial quotient has a non-integral coefficient");
    }
    out.push_back(numerator(c));
  }
  return IntPolynomial(std::move(out));
}

/// Horner evaluation at an integer point.
inline BigInt eval_at(const IntPolynomial& p, const BigInt& x) {
  BigInt acc = 0;
  const auto c = p.coefficients();
  for (std::size_t i = c.size(); i-- > 0;) acc = acc * x + c[i];
  return acc;
}

/// |GL_n(q)| = prod_{i=0}^{n-1} (q^n - q^i), monic of degree n^2.
inline IntPolynomial gl_order_poly(std::size_t n) {
  IntPolynomial result(1);
  for (std::size_t i = 0; i < n; ++i) {
    result *= IntPolynomial::monomial(1, n) - IntPolynomial::monomial(1, i);
  }
  return result;
}

/// Descending-order text form, e.g. "q^4 - q^3 - q^2 + q" or "2*q^598 + ...".
inline std::string to_string(const IntPolynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  const auto c = p.coefficients();
  for (std::size_t e = c.size(); e-- > 0;) {
    if (c[e] == 0) continue;
    const bool negative = c[e] < 0;
    const BigInt magnitude = negative ? BigInt(-c[e]) : c[e];
    if (out.empty()) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    if (e == 0) {
      out += magnitude.str();
      continue;
    }
    if (magnitude != 1) out += magnitude.str() + "*";
    out += 'q';
    if (e > 1) out += '^' + std::to_string(e);
  }
  return out;
}

/// JSON object mapping exponent -> coefficient, both as decimal strings.
inline nlohmann::ordered_json to_json(const IntPolynomial& p) {
  nlohmann::ordered_json obj = nlohmann::ordered_json::object();
  const auto c = p.coefficients();
  for (std::size_t e = c.size(); e-- > 0;) {
    if (c[e] != 0) obj[std::to_string(e)] = c[e].str();
  }
  return obj;
}

inline IntPolynomial polynomial_from_json(const nlohmann::ordered_json& obj) {
  if (!obj.is_object()) throw ValidationError("polynomial JSON must be an object");
  std::vector<BigInt> c;
  for (const auto& [key, value] : obj.items()) {
    std::size_t pos = 0;
    const unsigned long e = std::stoul(key, &pos);
    if (pos != key.size()) throw ValidationError("bad exponent key '" + key + "'");
    if (c.size() <= e) c.resize(e + 1);
    c[e] = BigInt(value.get<std::string>());
  }
  return IntPolynomial(std::move(c));
}

}  // namespace homcount

#endif  // HOMCOUNT_EXACTPOLY_HPP_
