// Copyright 2026 The divcone Authors
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

#include <gtest/gtest.h>

#include "divcone/symmetry.hpp"
#include "oracles.hpp"
#include "rational.hpp"

namespace divcone {
namespace {

using oracle::QMatrix;
using oracle::Rational;
using oracle::rational_stochastic;

PermAction action(const PermutationMatrix& in, const PermutationMatrix& out) { return {in, out}; }

TEST(Actions, DiagonalActionFixesIdentity) {
  for (const auto& s : all_permutations(3)) {
    StochasticMatrix g = act(action(s, s), StochasticMatrix::identity(3));
    EXPECT_LE(max_abs_diff(g.matrix(), Matrix::Identity(3, 3)), 0.0);
  }
}

TEST(Actions, ColumnSwap) {
  StochasticMatrix g = act(action(PermutationMatrix::swap2(), PermutationMatrix::identity(2)),
                           StochasticMatrix::from_diag({0.7, 0.6}));
  EXPECT_NEAR(g.diag().p, 0.4, 1e-15);
  EXPECT_NEAR(g.diag().q, 0.3, 1e-15);
}

TEST(Actions, FlatIsFixed) {
  StochasticMatrix g = act(action(PermutationMatrix::identity(2), PermutationMatrix::swap2()), named::flat());
  EXPECT_LE(max_abs_diff(g.matrix(), named::flat().matrix()), 0.0);
}

TEST(Actions, DimensionMismatch) {
  try {
    act(action(PermutationMatrix::identity(3), PermutationMatrix::identity(3)), named::flat());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DimensionMismatch);
  }
}

TEST(Actions, ComposeIsGroupAction) {
  oracle::Rng rng(3);
  auto perms = all_permutations(3);
  QMatrix g = rational_stochastic(3, 12, rng);
  for (const auto& a : perms)
    for (const auto& b : perms)
      for (const auto& c : perms) {
        PermAction x = action(a, b), y = action(c, a);
        QMatrix lhs = act<Rational>(compose(x, y), g);
        QMatrix rhs = act<Rational>(x, act<Rational>(y, g));
        EXPECT_TRUE(lhs == rhs);
      }
}

TEST(Continuity, Examples) {
  auto s = PermutationMatrix::swap2();
  auto e = PermutationMatrix::identity(2);
  EXPECT_TRUE(continuity_constraint(action(s, s)));
  EXPECT_FALSE(continuity_constraint(action(s, e)));
  EXPECT_TRUE(continuity_constraint(action(e, e)));
}

TEST(Orbit, IdentityPairTwoByTwo) {
  DivisorOrbit o = divisor_orbit(StochasticMatrix::identity(2), StochasticMatrix::identity(2));
  ASSERT_EQ(o.pairs.size(), 2u);
  EXPECT_EQ(o.distinct_pairs, 2);
  EXPECT_LE(max_abs_diff(o.pairs[1].first.matrix(), named::sigma_x().matrix()), 0.0);
  EXPECT_LE(max_abs_diff(o.pairs[1].second.matrix(), named::sigma_x().matrix()), 0.0);
}

TEST(Orbit, TwoByTwoReproducesAnchor) {
  StochasticMatrix t = StochasticMatrix::from_diag({0.52 / 0.7, 0.48 / 0.7});
  StochasticMatrix p = StochasticMatrix::from_diag({0.9, 0.8});
  DivisorOrbit o = divisor_orbit(t, p);
  ASSERT_EQ(o.pairs.size(), 2u);
  for (const auto& [a, b] : o.pairs) {
    EXPECT_LE(max_abs_diff((a * b).matrix(), StochasticMatrix::from_diag({0.7, 0.6}).matrix()), 1e-12);
  }
}

TEST(Orbit, ExactProductsForSmallDims) {
  oracle::Rng rng(9);
  for (int n : {2, 3, 4}) {
    for (int trial = 0; trial < 5; ++trial) {
      QMatrix t = rational_stochastic(n, 7 * n, rng), p = rational_stochastic(n, 5 * n, rng);
      QMatrix target = t * p;
      auto pairs = divisor_orbit<Rational>(t, p);
      std::size_t fact = 1;
      for (int k = 2; k <= n; ++k) fact *= static_cast<std::size_t>(k);
      ASSERT_EQ(pairs.size(), fact);
      for (const auto& [a, b] : pairs) {
        const QMatrix ab = a * b;
        EXPECT_TRUE(ab == target);
        for (int j = 0; j < n; ++j) {
          EXPECT_EQ(a.col(j).sum(), Rational(1));
          EXPECT_EQ(b.col(j).sum(), Rational(1));
        }
      }
    }
  }
}

TEST(Orbit, CapIsEnforced) {
  Matrix id = Matrix::Identity(9, 9);
  try {
    divisor_orbit<double>(id, id);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::TooLarge);
  }
}

}  // namespace
}  // namespace divcone
