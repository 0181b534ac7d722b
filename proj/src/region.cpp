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

#include "divcone/region.hpp"

#include <algorithm>
#include <cmath>

namespace divcone {

namespace {

constexpr double kVertexTol = 1e-12;

double cross(Point2 o, Point2 a, Point2 b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

std::vector<Point2> convex_hull(std::vector<Point2> pts) {
  std::sort(pts.begin(), pts.end(), [](Point2 l, Point2 r) {
    return l.x < r.x || (l.x == r.x && l.y < r.y);
  });
  std::vector<Point2> uniq;
  for (Point2 p : pts) {
    bool dup = std::any_of(uniq.begin(), uniq.end(), [&](Point2 u) {
      return std::abs(u.x - p.x) <= kVertexTol && std::abs(u.y - p.y) <= kVertexTol;
    });
    if (!dup) uniq.push_back(p);
  }
  if (uniq.size() <= 2) return uniq;
  std::vector<Point2> hull(2 * uniq.size());
  std::size_t k = 0;
  for (std::size_t i = 0; i < uniq.size(); ++i) {
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], uniq[i]) <= 1e-15) --k;
    hull[k++] = uniq[i];
  }
  for (std::size_t i = uniq.size() - 1, t = k + 1; i > 0; --i) {
    while (k >= t && cross(hull[k - 2], hull[k - 1], uniq[i - 1]) <= 1e-15) --k;
    hull[k++] = uniq[i - 1];
  }
  hull.resize(k - 1);
  return hull;
}

}  // namespace

std::string_view region_name(RegionKind kind) {
  switch (kind) {
    case RegionKind::PastConeUpper: return "past_cone_upper";
    case RegionKind::PastConeLower: return "past_cone_lower";
    case RegionKind::TransitionRectUpper: return "transition_rect_upper";
    case RegionKind::TransitionRectLower: return "transition_rect_lower";
    case RegionKind::FutureSet: return "future_set";
    case RegionKind::ImageParallelogram: return "image_parallelogram";
  }
  return "unknown";
}

bool Region::contains(Point2 pt, double tol) const {
  double slack = tol * std::abs(scale.eval(pt));
  if (pt.x < -slack || pt.x > 1.0 + slack || pt.y < -slack || pt.y > 1.0 + slack) return false;
  for (const HalfPlane& h : constraints) {
    double v = h.eval(pt);
    if (h.strict ? !(v > 0.0) : !(v >= -slack)) return false;
  }
  return true;
}

std::vector<Point2> clip_unit_square(const std::vector<HalfPlane>& constraints, Point2 anchor) {
  std::vector<HalfPlane> lines = constraints;
  lines.push_back({1.0, 0.0, 0.0, false});
  lines.push_back({-1.0, 0.0, 1.0, false});
  lines.push_back({0.0, 1.0, 0.0, false});
  lines.push_back({0.0, -1.0, 1.0, false});

  auto feasible = [&](Point2 pt) {
    return std::all_of(lines.begin(), lines.end(),
                       [&](const HalfPlane& h) { return h.eval(pt) >= -kVertexTol; });
  };

  std::vector<Point2> candidates;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    for (std::size_t j = i + 1; j < lines.size(); ++j) {
      const HalfPlane& l1 = lines[i];
      const HalfPlane& l2 = lines[j];
      double den = l1.a * l2.b - l2.a * l1.b;
      if (std::abs(den) < 1e-14) continue;
      Point2 pt{(l1.b * l2.c - l2.b * l1.c) / den, (l2.a * l1.c - l1.a * l2.c) / den};
      if (feasible(pt)) candidates.push_back(pt);
    }
  }
  std::vector<Point2> hull = convex_hull(std::move(candidates));
  if (hull.empty()) return hull;
  auto dist2 = [&](Point2 v) {
    return (v.x - anchor.x) * (v.x - anchor.x) + (v.y - anchor.y) * (v.y - anchor.y);
  };
  auto nearest = std::min_element(hull.begin(), hull.end(), [&](Point2 l, Point2 r) {
    return dist2(l) < dist2(r);
  });
  std::rotate(hull.begin(), nearest, hull.end());
  return hull;
}

Region make_region(RegionKind kind, DiagCoord anchor, std::vector<HalfPlane> constraints,
                   LinearForm scale) {
  Region r;
  r.kind = kind;
  r.anchor = anchor;
  r.scale = scale;
  r.polygon = clip_unit_square(constraints, to_point(anchor));
  r.constraints = std::move(constraints);
  return r;
}

double polygon_area(const std::vector<Point2>& poly) {
  double twice = 0.0;
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const Point2& a = poly[i];
    const Point2& b = poly[(i + 1) % poly.size()];
    twice += a.x * b.y - b.x * a.y;
  }
  return 0.5 * twice;
}

bool polygon_is_convex(const std::vector<Point2>& poly) {
  if (poly.size() < 3) return true;
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const Point2& a = poly[i];
    const Point2& b = poly[(i + 1) % poly.size()];
    const Point2& c = poly[(i + 2) % poly.size()];
    if (cross(a, b, c) < -1e-12) return false;
  }
  return true;
}

}  // namespace divcone
