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

#pragma once

#include <string_view>
#include <vector>

#include "divcone/core.hpp"

namespace divcone {

enum class RegionKind {
  PastConeUpper,
  PastConeLower,
  TransitionRectUpper,
  TransitionRectLower,
  FutureSet,
  ImageParallelogram,
};

std::string_view region_name(RegionKind kind);

struct Point2 {
  double x = 0.0;
  double y = 0.0;
  friend bool operator==(const Point2&, const Point2&) = default;
};

inline Point2 to_point(DiagCoord c) { return {c.p, c.q}; }

// a*x + b*y + c >= 0, or > 0 when strict.
struct HalfPlane {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
  bool strict = false;

  double eval(Point2 pt) const { return a * pt.x + b * pt.y + c; }
};

// Non-strict constraints are relaxed to eval >= -tol * |scale(pt)|.
struct LinearForm {
  double a = 0.0;
  double b = 0.0;
  double c = 1.0;

  double eval(Point2 pt) const { return a * pt.x + b * pt.y + c; }
};

struct Region {
  RegionKind kind = RegionKind::PastConeUpper;
  DiagCoord anchor;
  std::vector<HalfPlane> constraints;
  LinearForm scale;
  // Convex, counterclockwise, starting at the vertex nearest the anchor.
  std::vector<Point2> polygon;

  bool contains(Point2 pt, double tol = kDefaultTol) const;
  bool is_full_square() const { return constraints.empty(); }
};

// Intersects the unit square with the closure of the constraints.
std::vector<Point2> clip_unit_square(const std::vector<HalfPlane>& constraints, Point2 anchor);

Region make_region(RegionKind kind, DiagCoord anchor, std::vector<HalfPlane> constraints,
                   LinearForm scale);

double polygon_area(const std::vector<Point2>& poly);
bool polygon_is_convex(const std::vector<Point2>& poly);

}  // namespace divcone
