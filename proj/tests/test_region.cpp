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

#include "divcone/region.hpp"

namespace divcone {
namespace {

TEST(Clip, EmptyConstraintsGiveUnitSquare) {
  auto poly = clip_unit_square({}, {1, 1});
  ASSERT_EQ(poly.size(), 4u);
  EXPECT_EQ(poly.front(), (Point2{1, 1}));
  EXPECT_NEAR(polygon_area(poly), 1.0, 1e-15);
  EXPECT_TRUE(polygon_is_convex(poly));
}

TEST(Clip, HalfSquareTriangle) {
  // x + y - 1 >= 0
  auto poly = clip_unit_square({{1, 1, -1, false}}, {1, 1});
  ASSERT_EQ(poly.size(), 3u);
  EXPECT_EQ(poly.front(), (Point2{1, 1}));
  EXPECT_NEAR(polygon_area(poly), 0.5, 1e-15);
}

TEST(Clip, InfeasibleIsEmpty) {
  auto poly = clip_unit_square({{1, 0, -2, false}}, {0, 0});
  EXPECT_TRUE(poly.empty());
}

TEST(Clip, CounterClockwise) {
  auto poly = clip_unit_square({{1, 0, -0.25, false}, {0, 1, -0.5, false}}, {0.25, 0.5});
  ASSERT_EQ(poly.size(), 4u);
  EXPECT_GT(polygon_area(poly), 0.0);
  EXPECT_NEAR(polygon_area(poly), 0.75 * 0.5, 1e-15);
  EXPECT_EQ(poly.front(), (Point2{0.25, 0.5}));
}

TEST(RegionContains, StrictBoundaryExcluded) {
  Region r = make_region(RegionKind::PastConeUpper, {1, 1}, {{1, 1, -1, true}}, {1, 1, -1});
  EXPECT_FALSE(r.contains({0.5, 0.5}));
  EXPECT_TRUE(r.contains({0.5, 0.5 + 1e-6}));
  Region c = make_region(RegionKind::PastConeUpper, {1, 1}, {{1, 1, -1, false}}, {0, 0, 1});
  EXPECT_TRUE(c.contains({0.5, 0.5}));
  EXPECT_TRUE(c.contains({0.5, 0.5 - 1e-10}));
  EXPECT_FALSE(c.contains({0.5, 0.5 - 1e-8}));
}

TEST(RegionContains, OutsideUnitSquare) {
  Region r = make_region(RegionKind::FutureSet, {1, 1}, {}, {0, 0, 1});
  EXPECT_TRUE(r.is_full_square());
  EXPECT_TRUE(r.contains({0, 1}));
  EXPECT_FALSE(r.contains({1.1, 0.5}));
}

TEST(RegionNames, Stable) {
  EXPECT_EQ(region_name(RegionKind::PastConeLower), "past_cone_lower");
  EXPECT_EQ(region_name(RegionKind::ImageParallelogram), "image_parallelogram");
}

TEST(Polygon, ConvexityDetectsReflexVertex) {
  std::vector<Point2> dart = {{0, 0}, {1, 0}, {0.2, 0.2}, {0, 1}};
  EXPECT_FALSE(polygon_is_convex(dart));
}

}  // namespace
}  // namespace divcone
