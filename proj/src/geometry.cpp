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

#include "divcone/geometry.hpp"

#include <algorithm>
#include <cmath>

#include "divcone/divisibility.hpp"
#include "divcone/rng.hpp"

namespace divcone {

namespace {

constexpr LinearForm kSecondaryDiagonal{1.0, 1.0, -1.0};

Region full_square(RegionKind kind, DiagCoord anchor) {
  return make_region(kind, anchor, {}, {0.0, 0.0, 1.0});
}

std::vector<HalfPlane> negated(const std::vector<HalfPlane>& h) {
  std::vector<HalfPlane> out;
  out.reserve(h.size());
  for (const HalfPlane& x : h) out.push_back({-x.a, -x.b, -x.c, x.strict});
  return out;
}

}  // namespace

RegionPair past_regions(DiagCoord anchor) {
  if (anchor.degenerate()) {
    return {full_square(RegionKind::PastConeUpper, anchor),
            full_square(RegionKind::PastConeLower, anchor)};
  }
  const double p = anchor.p, q = anchor.q;
  // Numerators of the candidate transition entries, linear in (r, s).
  std::vector<HalfPlane> e = {
      {1.0 - q, p, -(1.0 - q), false},
      {1.0 - q, p, -p, false},
      {q, 1.0 - p, -q, false},
      {q, 1.0 - p, -(1.0 - p), false},
  };
  std::vector<HalfPlane> upper = e;
  upper.push_back({1.0, 1.0, -1.0, true});
  std::vector<HalfPlane> lower = negated(e);
  lower.push_back({-1.0, -1.0, 1.0, true});
  return {make_region(RegionKind::PastConeUpper, anchor, std::move(upper), kSecondaryDiagonal),
          make_region(RegionKind::PastConeLower, anchor, std::move(lower), kSecondaryDiagonal)};
}

RegionPair transition_regions(DiagCoord anchor) {
  const double p = anchor.p, q = anchor.q;
  // (u + v - 1) * Gamma(t') = [[p + v - 1, v - q], [u - p, q + u - 1]]
  std::vector<HalfPlane> e = {
      {0.0, 1.0, p - 1.0, false},
      {0.0, 1.0, -q, false},
      {1.0, 0.0, -p, false},
      {1.0, 0.0, q - 1.0, false},
  };
  std::vector<HalfPlane> upper = e;
  upper.push_back({1.0, 1.0, -1.0, true});
  std::vector<HalfPlane> lower = negated(e);
  lower.push_back({-1.0, -1.0, 1.0, true});
  return {make_region(RegionKind::TransitionRectUpper, anchor, std::move(upper),
                      kSecondaryDiagonal),
          make_region(RegionKind::TransitionRectLower, anchor, std::move(lower),
                      kSecondaryDiagonal)};
}

kernels::HalfPlaneSet to_halfplane_set(const Region& region) {
  static const HalfPlane kSquare[4] = {{1, 0, 0, false}, {-1, 0, 1, false}, {0, 1, 0, false}, {0, -1, 1, false}};
  if (region.constraints.size() + 4 > static_cast<std::size_t>(kernels::kMaxHalfPlanes)) {
    throw Error(ErrorCode::TooLarge, "region has too many constraints for the batch kernel");
  }
  std::vector<HalfPlane> all = region.constraints;
  all.insert(all.end(), std::begin(kSquare), std::end(kSquare));
  kernels::HalfPlaneSet set;
  set.count = static_cast<int>(all.size());
  for (int k = 0; k < set.count; ++k) {
    const HalfPlane& h = all[static_cast<std::size_t>(k)];
    set.a[k] = h.a;
    set.b[k] = h.b;
    set.c[k] = h.c;
    set.strict[k] = h.strict;
  }
  set.sa = region.scale.a;
  set.sb = region.scale.b;
  set.sc = region.scale.c;
  return set;
}

std::vector<DivisorSample> sample_divisors(DiagCoord anchor, std::size_t n, std::uint64_t seed,
                                           double tol, std::size_t max_proposals) {
  if (anchor.degenerate()) {
    throw Error(ErrorCode::DegenerateAnchor, "degenerate anchors have non-unique transitions");
  }
  if (n == 0) throw Error(ErrorCode::DomainError, "sample count must be positive");
  RegionPair cones = past_regions(anchor);
  double area = std::abs(polygon_area(cones.upper.polygon)) + std::abs(polygon_area(cones.lower.polygon));
  if (!(area > 1e-14)) {
    throw Error(ErrorCode::SamplingExhausted, "past cones have zero area");
  }
  double x0 = 1.0, x1 = 0.0, y0 = 1.0, y1 = 0.0;
  for (const auto* poly : {&cones.upper.polygon, &cones.lower.polygon}) {
    for (Point2 v : *poly) {
      x0 = std::min(x0, v.x);
      x1 = std::max(x1, v.x);
      y0 = std::min(y0, v.y);
      y1 = std::max(y1, v.y);
    }
  }
  const kernels::HalfPlaneSet up = to_halfplane_set(cones.upper);
  const kernels::HalfPlaneSet lo = to_halfplane_set(cones.lower);

  constexpr std::size_t kBlock = 4096;
  std::vector<double> xs(kBlock), ys(kBlock), pv, qv, rv, sv;
  std::vector<std::uint8_t> in_up(kBlock), in_lo(kBlock);
  std::vector<DivisorSample> out;
  out.reserve(n);
  std::size_t j = 0;
  while (out.size() < n) {
    if (j >= max_proposals) {
      throw Error(ErrorCode::SamplingExhausted, "proposal budget exhausted");
    }
    const std::size_t len = std::min(kBlock, max_proposals - j);
    for (std::size_t i = 0; i < len; ++i) {
      xs[i] = x0 + (x1 - x0) * rng::uniform(seed, j + i, 0);
      ys[i] = y0 + (y1 - y0) * rng::uniform(seed, j + i, 1);
    }
    kernels::region_mask(up, tol, xs.data(), ys.data(), len, in_up.data());
    kernels::region_mask(lo, tol, xs.data(), ys.data(), len, in_lo.data());
    rv.clear();
    sv.clear();
    for (std::size_t i = 0; i < len; ++i) {
      if (in_up[i] || in_lo[i]) {
        rv.push_back(xs[i]);
        sv.push_back(ys[i]);
      }
    }
    const std::size_t m = rv.size();
    pv.assign(m, anchor.p);
    qv.assign(m, anchor.q);
    std::vector<double> viol(m), c11(m), c12(m), c21(m), c22(m);
    std::vector<std::uint8_t> status(m), branch(m);
    kernels::classify_pairs({pv.data(), qv.data(), rv.data(), sv.data(), m}, tol,
                            {status.data(), branch.data(), viol.data(), c11.data(), c12.data(),
                             c21.data(), c22.data()});
    for (std::size_t i = 0; i < m && out.size() < n; ++i) {
      if (status[i] != kernels::kDivisible || branch[i] != kernels::kInvertiblePast) continue;
      Matrix t(2, 2);
      t << c11[i], c12[i], c21[i], c22[i];
      StochasticMatrix tm = StochasticMatrix::validate(t, std::max(tol, kIdentityTol));
      out.push_back({{rv[i], sv[i]}, tm.diag()});
    }
    j += len;
  }
  return out;
}

Point2 apply_sigma(SigmaAction action, Point2 pt) {
  switch (action) {
    case SigmaAction::Left: return {1.0 - pt.x, 1.0 - pt.y};
    case SigmaAction::Right: return {1.0 - pt.y, 1.0 - pt.x};
    case SigmaAction::Both: return {pt.y, pt.x};
  }
  return pt;
}

Region transform_region(const Region& region, SigmaAction action) {
  // The maps are involutions, so the image is {x : h(sigma(x)) >= 0}.
  auto pull = [action](double a, double b, double c) -> HalfPlane {
    switch (action) {
      case SigmaAction::Left: return {-a, -b, a + b + c, false};
      case SigmaAction::Right: return {-b, -a, a + b + c, false};
      case SigmaAction::Both: return {b, a, c, false};
    }
    return {a, b, c, false};
  };
  std::vector<HalfPlane> h;
  for (const HalfPlane& x : region.constraints) {
    HalfPlane y = pull(x.a, x.b, x.c);
    y.strict = x.strict;
    h.push_back(y);
  }
  HalfPlane s = pull(region.scale.a, region.scale.b, region.scale.c);
  Point2 a = apply_sigma(action, to_point(region.anchor));
  return make_region(region.kind, {a.x, a.y}, std::move(h), {s.a, s.b, s.c});
}

std::vector<RegionOrbit> orbit_regions(DiagCoord anchor) {
  StochasticMatrix g = StochasticMatrix::from_diag(anchor);
  RegionPair past = past_regions(anchor);
  RegionPair trans = transition_regions(anchor);
  std::vector<Region> base = {past.upper, past.lower, trans.upper, trans.lower,
                              future_square(g), image_square(g)};
  std::vector<RegionOrbit> out;
  for (Region& r : base) {
    RegionOrbit o;
    o.left = transform_region(r, SigmaAction::Left);
    o.right = transform_region(r, SigmaAction::Right);
    o.both = transform_region(r, SigmaAction::Both);
    o.base = std::move(r);
    out.push_back(std::move(o));
  }
  return out;
}

}  // namespace divcone
