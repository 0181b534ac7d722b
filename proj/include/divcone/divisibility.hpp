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

#include <optional>
#include <string_view>
#include <vector>

#include "divcone/core.hpp"
#include "divcone/region.hpp"

namespace divcone {

// |det earlier| below this routes a 2x2 division to the degenerate branch.
inline constexpr double kNearSingularDet = 1e-6;

enum class Divisibility { Divisible, Indivisible, Unknown };
enum class DivisionBranch { InvertiblePast, DegeneratePast, DegenerateBoth, SingularPast };

std::string_view divisibility_name(Divisibility d);
std::string_view branch_name(DivisionBranch b);

struct DivisionVerdict {
  Divisibility status = Divisibility::Unknown;
  std::optional<StochasticMatrix> transition;
  DivisionBranch branch = DivisionBranch::InvertiblePast;
  double max_violation = 0.0;

  bool divisible() const { return status == Divisibility::Divisible; }
};

DivisionVerdict divide(const StochasticMatrix& later, const StochasticMatrix& earlier,
                       double tol = kDefaultTol);

enum class StartRule { RequireIdentity, Free };

class DynamicsCurve {
 public:
  DynamicsCurve() = default;
  // Throws InvalidCurve on unsorted times, mixed dims or, under RequireIdentity,
  // a non-identity start at t = 0. Dilated curves start at Y(0) X and use Free.
  DynamicsCurve(std::vector<double> times, std::vector<StochasticMatrix> matrices,
                std::vector<bool> jumps = {}, StartRule rule = StartRule::RequireIdentity);

  int size() const { return static_cast<int>(times_.size()); }
  int dim() const { return matrices_.empty() ? 0 : matrices_.front().dim(); }
  double time(int k) const { return times_[static_cast<std::size_t>(k)]; }
  const StochasticMatrix& at(int k) const { return matrices_[static_cast<std::size_t>(k)]; }
  bool is_jump(int k) const { return jumps_[static_cast<std::size_t>(k)]; }
  const std::vector<double>& times() const { return times_; }
  const std::vector<StochasticMatrix>& matrices() const { return matrices_; }
  const std::vector<bool>& jumps() const { return jumps_; }

 private:
  std::vector<double> times_;
  std::vector<StochasticMatrix> matrices_;
  std::vector<bool> jumps_;
};

struct SignChange {
  int from = 0;
  int to = 0;
  // No declared jump in (from, to]: the continuous piece must contain an
  // indivisible segment.
  bool forced_indivisible = false;
};

struct DivisionEventReport {
  int size = 0;
  // cells[k][kp] for kp <= k.
  std::vector<std::vector<Divisibility>> cells;
  std::vector<int> proper_events;
  std::vector<SignChange> det_sign_changes;
  std::vector<bool> full_past_divisible;
  std::optional<int> last_full_divisible_past;

  Divisibility cell(int kp, int k) const {
    return cells[static_cast<std::size_t>(k)][static_cast<std::size_t>(kp)];
  }
};

DivisionEventReport analyze_curve(const DynamicsCurve& c, double tol = kDefaultTol);

Region future_square(const StochasticMatrix& g);
Region image_square(const StochasticMatrix& g);

}  // namespace divcone
