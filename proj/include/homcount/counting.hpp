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

// |Hom(A, GL_n(q))| as a polynomial in q. Conjugation orbits are indexed by
// eligible tuples (n_1, ..., n_s); the orbit of a tuple has stabilizer
// prod GL_{n_i}(q), hence size |GL_n(q)| / prod |GL_{n_i}(q)|.

#ifndef HOMCOUNT_COUNTING_HPP_
#define HOMCOUNT_COUNTING_HPP_

#include <algorithm>
#include <cstdint>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "homcount/errors.hpp"
#include "homcount/exactpoly.hpp"
#include "homcount/minimizer.hpp"
#include "homcount/profiles.hpp"

namespace homcount {

struct CountingLimits {
  std::size_t max_tuples = 1'000'000;
};

namespace detail {

// prod_{i=1}^{n} (q^i - 1)
inline IntPolynomial q_factorial_numerator(std::int64_t n) {
  IntPolynomial out(1);
  for (std::int64_t i = 1; i <= n; ++i) out *= IntPolynomial::q_power_minus_one(static_cast<std::size_t>(i));
  return out;
}

// |GL_n(q)| / prod |GL_{n_i}(q)| with |GL_m(q)| = q^{m(m-1)/2} prod_{i<=m}(q^i - 1).
// Dividing by one factor q^i - 1 at a time keeps every intermediate quotient
// exact, since each partial product of the denominator divides the numerator.
inline IntPolynomial orbit_from_parts(std::int64_t n, std::span<const std::int64_t> parts,
                                      const IntPolynomial& numerator) {
  IntPolynomial p = numerator;
  std::int64_t shift = n * (n - 1) / 2;
  for (auto part : parts) {
    for (std::int64_t i = 1; i <= part; ++i) {
      p = div_exact(p, IntPolynomial::q_power_minus_one(static_cast<std::size_t>(i)));
    }
    shift -= part * (part - 1) / 2;
  }
  return p.shifted(static_cast<std::size_t>(shift));
}

// Orbit polynomials are monic of degree n^2 - sum n_i^2. Their coefficients
// need not be non-negative: the orbit is a Gaussian multinomial times a power
// of q times (q - 1)^(n - sum n_i), e.g. q^3 - q for a single 2-dimensional
// irreducible at n = 2.
inline void check_orbit(const IntPolynomial& orbit, std::int64_t expected_degree) {
  if (orbit.degree() != static_cast<std::size_t>(expected_degree) || orbit.leading_coefficient() != 1) {
    throw std::logic_error("orbit polynomial is not monic of degree n^2 - sum n_i^2");
  }
}

}  // namespace detail

/// Size of the conjugation orbit indexed by an eligible tuple.
inline IntPolynomial orbit_poly(const DegreeProfile& p, std::span<const std::int64_t> t) {
  const std::int64_t n = weight(t, p);
  if (!is_eligible(t)) throw IneligibleTuple("orbit tuples must have non-negative entries");
  auto orbit = detail::orbit_from_parts(n, t, detail::q_factorial_numerator(n));
  detail::check_orbit(orbit, n * n - square_sum(t));
  return orbit;
}

/// f_n(q) = |Hom(A, GL_n(q))|: the sum of orbit polynomials over all eligible
/// tuples, accumulated in lexicographic tuple order.
inline IntPolynomial hom_count_poly(const DegreeProfile& p, std::int64_t n, CountingLimits limits = {}) {
  const auto tuples = eligible_tuples(p, n, limits.max_tuples);
  const IntPolynomial numerator = detail::q_factorial_numerator(n);
  // Orbit sizes depend only on the multiset of nonzero entries.
  std::map<std::vector<std::int64_t>, IntPolynomial> cache;
  IntPolynomial total;
  for (const auto& t : tuples) {
    std::vector<std::int64_t> parts;
    for (auto v : t) {
      if (v > 0) parts.push_back(v);
    }
    std::sort(parts.begin(), parts.end());
    auto it = cache.find(parts);
    if (it == cache.end()) {
      auto orbit = detail::orbit_from_parts(n, parts, numerator);
      detail::check_orbit(orbit, n * n - square_sum(t));
      it = cache.emplace(std::move(parts), std::move(orbit)).first;
    }
    total += it->second;
  }
  return total;
}

/// Minimal-tuple data for every residue plus the stability bound; the input
/// to leading-term queries.
struct ResidueTable {
  DegreeProfile profile;
  std::vector<MinimalReport> reports;
  StabilityBound bound;

  static ResidueTable build(const DegreeProfile& p, unsigned threads = 1) {
    ResidueTable t{p, all_minimal_reports(p, threads), {}};
    t.bound = stability_bound(p, t.reports);
    return t;
  }
};

struct LeadingTerm {
  std::int64_t coefficient = 0;  // m_r
  std::int64_t exponent = 0;     // n^2 (1 - 1/a) - eps_r
  std::int64_t n = 0;
  std::int64_t r = 0;
  bool stable = false;  // n >= N
};

inline LeadingTerm leading_term(const ResidueTable& table, std::int64_t n) {
  if (n < 0) throw RangeError("dimension must be non-negative");
  const std::int64_t a = table.profile.order;
  const std::int64_t r = n % a;
  const auto& report = table.reports.at(static_cast<std::size_t>(r));
  // a | n - r, so a | n^2 - r^2.
  const std::int64_t drop = n * n - r * r;
  if (drop % a != 0) throw std::logic_error("leading exponent is not integral");
  LeadingTerm lt;
  lt.coefficient = static_cast<std::int64_t>(report.m_r());
  lt.exponent = n * n - drop / a - report.s_r;
  lt.n = n;
  lt.r = r;
  lt.stable = n >= table.bound.n_threshold;
  if (Rational(lt.exponent) != Rational(n * n) * Rational(a - 1, a) - report.eps_r) {
    throw std::logic_error("leading exponent disagrees with n^2(1 - 1/a) - eps_r");
  }
  return lt;
}

inline LeadingTerm leading_term(const DegreeProfile& p, std::int64_t n) {
  return leading_term(ResidueTable::build(p), n);
}

/// Leading term of f_n read off the eligible tuples directly: every orbit
/// polynomial is monic of degree n^2 - sum n_i^2, so the top degree comes from
/// the eligible tuples of least square-sum, one unit each. Agrees with
/// leading_term() whenever n >= N; below N it may not.
struct TopTerm {
  std::int64_t coefficient = 0;
  std::int64_t exponent = 0;
};

inline TopTerm actual_leading_term(const DegreeProfile& p, std::int64_t n) {
  const auto tuples = minimal_eligible_tuples(p, n);
  return {static_cast<std::int64_t>(tuples.size()), n * n - square_sum(tuples.front())};
}

struct VarietyReport {
  std::int64_t dimension = 0;
  std::int64_t top_components = 0;
};

/// Dimension and number of top-dimensional irreducible components of the
/// representation variety Hom(A, GL_n(K)). Requires n >= N.
inline VarietyReport variety_report(const ResidueTable& table, std::int64_t n) {
  const auto lt = leading_term(table, n);
  if (!lt.stable) {
    throw UnstableRegime("n=" + std::to_string(n) + " is below the stability bound N=" +
                         std::to_string(table.bound.n_threshold));
  }
  return {lt.exponent, lt.coefficient};
}

inline VarietyReport variety_report(const DegreeProfile& p, std::int64_t n) {
  return variety_report(ResidueTable::build(p), n);
}

}  // namespace homcount

#endif  // HOMCOUNT_COUNTING_HPP_
