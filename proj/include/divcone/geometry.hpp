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

#include <cstddef>
#include <cstdint>
#include <vector>

#include "divcone/core.hpp"
#include "divcone/kernels.hpp"
#include "divcone/region.hpp"

namespace divcone {

struct RegionPair {
  Region upper;
  Region lower;
};

// upper: r + s > 1, lower: r + s < 1. Degenerate anchors give the full square twice.
RegionPair past_regions(DiagCoord anchor);
RegionPair transition_regions(DiagCoord anchor);

struct DivisorSample {
  DiagCoord past;
  DiagCoord transition;
};

inline constexpr std::size_t kMaxProposals = 10'000'000;

std::vector<DivisorSample> sample_divisors(DiagCoord anchor, std::size_t n, std::uint64_t seed,
                                           double tol = kDefaultTol,
                                           std::size_t max_proposals = kMaxProposals);

enum class SigmaAction { Left, Right, Both };

Point2 apply_sigma(SigmaAction action, Point2 pt);
Region transform_region(const Region& region, SigmaAction action);

struct RegionOrbit {
  Region base;
  Region left;
  Region right;
  Region both;
};

// Past cones, transition rectangles, future set and image set, each with its
// three sigma_x images.
std::vector<RegionOrbit> orbit_regions(DiagCoord anchor);

kernels::HalfPlaneSet to_halfplane_set(const Region& region);

}  // namespace divcone
