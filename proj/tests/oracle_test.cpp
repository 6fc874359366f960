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

#include "homcount/oracle.hpp"

#include <gtest/gtest.h>

#include "homcount/minimizer.hpp"

namespace homcount::oracle {
namespace {

TEST(GlEnumerateTest, Counts) {
  EXPECT_EQ(gl_enumerate(1, 5, nullptr), 4u);
  EXPECT_EQ(gl_enumerate(2, 3, nullptr), 48u);
  EXPECT_EQ(gl_enumerate(3, 2, nullptr), 168u);
  for (int n = 1; n <= 3; ++n) {
    for (std::int64_t q : {2, 3, 5}) EXPECT_EQ(gl_enumerate(n, q, nullptr), gl_order(n, q));
  }
}

TEST(GlEnumerateTest, VisitsDistinctInvertibleMatrices) {
  std::vector<PrimeFieldMatrix> seen;
  gl_enumerate(2, 3, [&](const PrimeFieldMatrix& g) { seen.push_back(g); });
  ASSERT_EQ(seen.size(), 48u);
  for (std::size_t i = 0; i < seen.size(); ++i) {
    EXPECT_NE(seen[i].determinant(), 0);
    EXPECT_TRUE((seen[i] * seen[i].inverse()).is_identity());
    EXPECT_TRUE((seen[i].inverse() * seen[i]).is_identity());
    for (std::size_t j = i + 1; j < seen.size(); ++j) EXPECT_FALSE(seen[i] == seen[j]);
  }
}

TEST(GlEnumerateTest, ThreeByThreeInverse) {
  std::size_t checked = 0;
  gl_enumerate(3, 3, [&](const PrimeFieldMatrix& g) {
    if (checked++ % 97 == 0) {
      EXPECT_TRUE((g * g.inverse()).is_identity());
    }
  });
  EXPECT_EQ(checked, gl_order(3, 3));
}

TEST(GlEnumerateTest, Errors) {
  EXPECT_THROW(gl_enumerate(3, 7, nullptr, 1000), ResourceLimit);
  EXPECT_THROW(gl_enumerate(2, 4, nullptr), ValidationError);
  EXPECT_THROW(gl_enumerate(4, 2, nullptr), RangeError);
}

TEST(PresentationTest, Parse) {
  const auto pr = parse_presentation("gens=2; rel=x1^2; rel=(x1*x2)^3; rel=x2^-2*x1");
  EXPECT_EQ(pr.generator_count, 2);
  ASSERT_EQ(pr.relators.size(), 3u);
  EXPECT_EQ(pr.relators[0], (Word{1, 1}));
  EXPECT_EQ(pr.relators[1], (Word{1, 2, 1, 2, 1, 2}));
  EXPECT_EQ(pr.relators[2], (Word{-2, -2, 1}));
  EXPECT_EQ(parse_presentation("gens=2;rel=(x1*x2^2)^-1").relators[0], (Word{-2, -2, -1}));
}

TEST(PresentationTest, ParseErrors) {
  for (const char* bad : {"", "gens=0; rel=x1", "gens=1", "gens=1; rel=x2", "gens=1; rel=x1^0",
                          "gens=1; rel=(x1", "gens=1; rel=y1", "gens=1; rel=x1 x1", "gens=2; rel=x1*"}) {
    EXPECT_THROW(parse_presentation(bad), ParseError) << bad;
  }
}

TEST(HomCountBruteForceTest, Examples) {
  EXPECT_EQ(hom_count_bruteforce(parse_presentation("gens=1; rel=x1^2"), 2, 3), 14u);
  EXPECT_EQ(hom_count_bruteforce(parse_presentation("gens=1; rel=x1^1"), 2, 3), 1u);
  EXPECT_EQ(hom_count_bruteforce(parse_presentation("gens=2; rel=x1^3; rel=x2^2; rel=(x1*x2)^2"), 1, 5), 2u);
  // Free group on one generator: every matrix.
  EXPECT_EQ(hom_count_bruteforce(parse_presentation("gens=2; rel=x1*x2^-1"), 2, 3), 48u);
}

TEST(HomCountBruteForceTest, CyclicMatchesOrderFilter) {
  for (int n = 1; n <= 2; ++n) {
    for (std::int64_t q : {3, 5, 7}) {
      for (std::uint64_t m : {2, 3, 4, 6}) {
        const auto pr = parse_presentation("gens=1; rel=x1^" + std::to_string(m));
        EXPECT_EQ(hom_count_bruteforce(pr, n, q), count_order_dividing(n, q, m)) << n << q << m;
        // Same group, relator written through an inverse and a product.
        const auto pr2 = parse_presentation("gens=1; rel=(x1^-1)^" + std::to_string(m));
        EXPECT_EQ(hom_count_bruteforce(pr2, n, q), count_order_dividing(n, q, m));
      }
    }
  }
}

TEST(HomCountBruteForceTest, EnumerationOrderDoesNotMatter) {
  const auto s3 = parse_presentation("gens=2; rel=x1^3; rel=x2^2; rel=(x1*x2)^2");
  const auto base = hom_count_bruteforce(s3, 2, 7);
  for (std::uint64_t seed : {1u, 2u, 3u}) {
    BruteForceOptions options;
    options.shuffle_seed = seed;
    EXPECT_EQ(hom_count_bruteforce(s3, 2, 7, options), base);
  }
}

TEST(HomCountBruteForceTest, ResourceLimit) {
  BruteForceOptions options;
  options.max_assignments = 100;
  EXPECT_THROW(hom_count_bruteforce(parse_presentation("gens=2; rel=x1*x2*x1^-1*x2^-1"), 2, 3, options),
               homcount::ResourceLimit);
}

TEST(BuiltinPresentationTest, PairedFamilies) {
  EXPECT_TRUE(builtin_presentation(parse_group_spec("cyclic:5")));
  EXPECT_TRUE(builtin_presentation(parse_group_spec("dihedral:4")));
  EXPECT_TRUE(builtin_presentation(parse_group_spec("sym:4")));
  EXPECT_TRUE(builtin_presentation(parse_group_spec("abelian:2x2")));
  EXPECT_FALSE(builtin_presentation(parse_group_spec("custom:order=1,degrees=1")));
  // Hom(A, GL_1(q)) counts the characters of A/[A, A] when q - 1 is
  // divisible by its exponent.
  EXPECT_EQ(hom_count_bruteforce(*builtin_presentation(parse_group_spec("sym:4")), 1, 5), 2u);
  EXPECT_EQ(hom_count_bruteforce(*builtin_presentation(parse_group_spec("sym:5")), 1, 7), 2u);
  EXPECT_EQ(hom_count_bruteforce(*builtin_presentation(parse_group_spec("dihedral:4")), 1, 5), 4u);
  EXPECT_EQ(hom_count_bruteforce(*builtin_presentation(parse_group_spec("abelian:2x2")), 1, 3), 4u);
}

TEST(MinimalTuplesNaiveTest, Examples) {
  const auto s4 = profile_of(parse_group_spec("sym:4"));
  const auto naive = minimal_tuples_naive(s4, 4);
  const auto fast = minimal_tuples(s4, 4);
  EXPECT_EQ(naive.tuples, fast.tuples);
  EXPECT_EQ(naive.s_r, 2);
  EXPECT_EQ(naive.eps_r, Rational(4, 3));

  const auto zero = minimal_tuples_naive(s4, 0);
  EXPECT_EQ(zero.tuples, (std::vector<IntTuple>{IntTuple(5, 0)}));

  const auto d3 = minimal_tuples_naive(profile_of(parse_group_spec("dihedral:3")), 4);
  EXPECT_EQ(d3.tuples, (std::vector<IntTuple>{{1, 1, 1}}));

  EXPECT_THROW(minimal_tuples_naive(profile_of(parse_group_spec("sym:5")), 100), homcount::ResourceLimit);
  EXPECT_THROW(minimal_tuples_naive(s4, 24), RangeError);
}

}  // namespace
}  // namespace homcount::oracle
