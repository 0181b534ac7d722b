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

#include <numbers>
#include <optional>
#include <string_view>
#include <vector>

#include "divcone/core.hpp"
#include "divcone/divisibility.hpp"

namespace divcone {

enum class CurveKind { Oscillator, Decay, CadlagCycle, ThreeConfigBlock, Constant, Sampled };

std::string_view curve_kind_name(CurveKind k);

struct TimeGrid {
  double start = 0.0;
  double end = 1.0;
  double step = 0.01;
  // Each jump t_j also gets a left sample t_j - step / 1024.
  std::vector<double> jumps;
};

struct CurveSpec {
  CurveKind kind = CurveKind::Oscillator;
  // Oscillator and ThreeConfigBlock: frequency. Decay: rate. Unused otherwise.
  double parameter = std::numbers::pi / 2.0;
  TimeGrid grid;
  std::optional<StochasticMatrix> constant;
  std::optional<DynamicsCurve> sampled;
};

inline constexpr double kJumpOffsetDivisor = 1024.0;

// Closed form at a single time; Sampled and Constant evaluate trivially.
StochasticMatrix evaluate_curve(const CurveSpec& spec, double t);
// Sample times with jump flags; jumps is the union of explicit and built-in jumps.
std::vector<double> grid_times(const TimeGrid& grid, const std::vector<double>& jumps,
                               std::vector<bool>* flags);
DynamicsCurve generate(const CurveSpec& spec);

// Built-in jumps inside (start, end]: integers for CadlagCycle, none otherwise.
std::vector<double> builtin_jumps(CurveKind kind, const TimeGrid& grid);

}  // namespace divcone
