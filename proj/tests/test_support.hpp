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

#ifndef HOMCOUNT_TESTS_TEST_SUPPORT_HPP_
#define HOMCOUNT_TESTS_TEST_SUPPORT_HPP_

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <random>
#include <string>
#include <vector>

#include "homcount/exactpoly.hpp"
#include "homcount/profiles.hpp"

namespace homcount::testing {

/// Polynomial from coefficients in ascending exponent order.
inline IntPolynomial poly(std::initializer_list<long long> ascending) {
  std::vector<BigInt> c;
  for (auto v : ascending) c.emplace_back(v);
  return IntPolynomial(std::move(c));
}

inline IntPolynomial random_poly(std::mt19937_64& rng, int max_degree, long long magnitude) {
  std::uniform_int_distribution<int> deg(0, max_degree);
  std::uniform_int_distribution<long long> coeff(-magnitude, magnitude);
  std::vector<BigInt> c(static_cast<std::size_t>(deg(rng)) + 1);
  for (auto& v : c) v = coeff(rng);
  return IntPolynomial(std::move(c));
}

/// Random profile with d_1 = 1, at most `max_size` coordinates and order at
/// most `max_order`. Not necessarily the profile of an actual group; the
/// tuple combinatorics only need d_1 = 1.
inline DegreeProfile random_profile(std::mt19937_64& rng, std::int64_t max_order, std::size_t max_size) {
  std::uniform_int_distribution<std::int64_t> degree(1, 4);
  std::uniform_int_distribution<std::size_t> size(1, max_size);
  const std::size_t target = size(rng);
  std::vector<std::int64_t> d{1};
  std::int64_t order = 1;
  for (int attempts = 0; d.size() < target && attempts < 32; ++attempts) {
    const auto x = degree(rng);
    if (order + x * x > max_order) continue;
    d.push_back(x);
    order += x * x;
  }
  return make_profile(order, d, "random");
}

/// Built-in family members with a <= max_order; abelian ones (whose minimal
/// tuple sets grow like binomial(a, a/2)) only up to max_abelian_order.
inline std::vector<std::string> builtin_specs(std::int64_t max_order, std::int64_t max_abelian_order = 12) {
  std::vector<std::string> out;
  for (int m = 1; m <= std::min(max_order, max_abelian_order); ++m) out.push_back("cyclic:" + std::to_string(m));
  for (int m = 3; 2 * m <= max_order; ++m) out.push_back("dihedral:" + std::to_string(m));
  for (const char* s : {"abelian:2x2", "abelian:2x4", "abelian:3x3", "abelian:2x2x2", "abelian:2x6",
                        "abelian:2x2x3"}) {
    if (group_order(parse_group_spec(s)) <= std::min(max_order, max_abelian_order)) out.emplace_back(s);
  }
  if (max_order >= 24) out.emplace_back("sym:4");
  if (max_order >= 120) out.emplace_back("sym:5");
  return out;
}

}  // namespace homcount::testing

#endif  // HOMCOUNT_TESTS_TEST_SUPPORT_HPP_
