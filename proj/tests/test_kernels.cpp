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

#include <algorithm>
#include <cmath>

#include <cstring>
#include <vector>

#include "divcone/geometry.hpp"
#include "divcone/kernels.hpp"
#include "oracles.hpp"

namespace divcone::kernels {
namespace {

struct Lanes {
  std::vector<double> p, q, r, s;
  explicit Lanes(std::size_t n) : p(n), q(n), r(n), s(n) {}
  PairBatch batch() const { return {p.data(), q.data(), r.data(), s.data(), p.size()}; }
};

struct Out {
  std::vector<std::uint8_t> status, branch;
  std::vector<double> v, c11, c12, c21, c22;
  explicit Out(std::size_t n) : status(n), branch(n), v(n), c11(n), c12(n), c21(n), c22(n) {}
  PairResult result() {
    return {status.data(), branch.data(), v.data(), c11.data(), c12.data(), c21.data(), c22.data()};
  }
};

bool same_bits(const std::vector<double>& a, const std::vector<double>& b) {
  return std::memcmp(a.data(), b.data(), a.size() * sizeof(double)) == 0;
}

Lanes mixed_lanes(std::size_t n, std::uint64_t seed) {
  oracle::Rng rng(seed);
  Lanes l(n);
  for (std::size_t i = 0; i < n; ++i) {
    l.p[i] = rng.uniform();
    l.q[i] = rng.uniform();
    switch (i % 7) {
      case 0:  // degenerate earlier
        l.r[i] = rng.uniform();
        l.s[i] = 1.0 - l.r[i];
        break;
      case 1:  // equal pair
        l.r[i] = l.p[i];
        l.s[i] = l.q[i];
        break;
      case 2:  // both degenerate
        l.q[i] = 1.0 - l.p[i];
        l.r[i] = rng.uniform();
        l.s[i] = 1.0 - l.r[i];
        break;
      case 3:  // near-singular earlier
        l.r[i] = rng.uniform();
        l.s[i] = 1.0 - l.r[i] + 2e-6 * (rng.uniform() - 0.5);
        break;
      default:
        l.r[i] = rng.uniform();
        l.s[i] = rng.uniform();
    }
  }
  return l;
}

TEST(Kernels, Avx2ClassifyMatchesScalarBitwise) {
  if (!avx2_available()) GTEST_SKIP() << "AVX2 unavailable";
  for (std::size_t n : {1u, 3u, 4u, 5u, 17u, 4096u, 100003u}) {
    Lanes l = mixed_lanes(n, n);
    Out a(n), b(n);
    scalar::classify_pairs(l.batch(), 1e-9, a.result());
    avx2::classify_pairs(l.batch(), 1e-9, b.result());
    EXPECT_EQ(a.status, b.status);
    EXPECT_EQ(a.branch, b.branch);
    EXPECT_TRUE(same_bits(a.v, b.v));
    EXPECT_TRUE(same_bits(a.c11, b.c11));
    EXPECT_TRUE(same_bits(a.c12, b.c12));
    EXPECT_TRUE(same_bits(a.c21, b.c21));
    EXPECT_TRUE(same_bits(a.c22, b.c22));
  }
}

TEST(Kernels, Avx2MaskMatchesScalar) {
  if (!avx2_available()) GTEST_SKIP() << "AVX2 unavailable";
  oracle::Rng rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    DiagCoord a{rng.uniform(), rng.uniform()};
    RegionPair cones = past_regions(a);
    RegionPair rects = transition_regions(a);
    std::size_t n = 1000 + static_cast<std::size_t>(trial);
    std::vector<double> x(n), y(n);
    for (std::size_t i = 0; i < n; ++i) {
      x[i] = rng.uniform(-0.01, 1.01);
      y[i] = rng.uniform(-0.01, 1.01);
    }
    for (const Region* r : {&cones.upper, &cones.lower, &rects.upper, &rects.lower}) {
      HalfPlaneSet set = divcone::to_halfplane_set(*r);
      std::vector<std::uint8_t> m1(n), m2(n);
      scalar::region_mask(set, 1e-9, x.data(), y.data(), n, m1.data());
      avx2::region_mask(set, 1e-9, x.data(), y.data(), n, m2.data());
      EXPECT_EQ(m1, m2);
      for (std::size_t i = 0; i < n; ++i) {
        EXPECT_EQ(m1[i] != 0, r->contains({x[i], y[i]}, 1e-9));
      }
    }
  }
}

TEST(Kernels, ScalarMatchesDirectInversion) {
  Lanes l = mixed_lanes(20000, 99);
  Out o(l.p.size());
  scalar::classify_pairs(l.batch(), 1e-9, o.result());
  for (std::size_t i = 0; i < l.p.size(); ++i) {
    if (o.branch[i] != kInvertiblePast) continue;
    if (std::abs(l.r[i] + l.s[i] - 1.0) < 1e-4) continue;
    oracle::Mat2 t;
    bool d = oracle::divisible_direct(l.p[i], l.q[i], l.r[i], l.s[i], 1e-9, &t);
    if (l.r[i] == l.p[i] && l.s[i] == l.q[i]) continue;
    EXPECT_EQ(d, o.status[i] == kDivisible) << i;
    EXPECT_NEAR(o.c11[i], static_cast<double>(t[0][0]), 1e-9 * std::max(1.0, std::abs(o.c11[i])));
    EXPECT_NEAR(o.c22[i], static_cast<double>(t[1][1]), 1e-9 * std::max(1.0, std::abs(o.c22[i])));
  }
}

TEST(Kernels, IsaOverride) {
  set_isa_override(Isa::Scalar);
  EXPECT_EQ(active_isa(), Isa::Scalar);
  clear_isa_override();
  EXPECT_EQ(active_isa() == Isa::Avx2, avx2_available() && std::getenv("DIVCONE_FORCE_SCALAR") == nullptr);
  EXPECT_EQ(isa_name(Isa::Avx2), "avx2");
  EXPECT_EQ(isa_name(Isa::Scalar), "scalar");
}

TEST(Kernels, DispatchedEqualsScalar) {
  Lanes l = mixed_lanes(1001, 4);
  Out a(1001), b(1001);
  scalar::classify_pairs(l.batch(), 1e-9, a.result());
  classify_pairs(l.batch(), 1e-9, b.result());
  EXPECT_EQ(a.status, b.status);
  EXPECT_TRUE(same_bits(a.c12, b.c12));
}

}  // namespace
}  // namespace divcone::kernels
