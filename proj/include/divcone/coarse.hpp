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
#include <string>
#include <vector>

#include "divcone/core.hpp"
#include "divcone/divisibility.hpp"

namespace divcone {

// n x N deterministic column-stochastic grouping with no empty row, n < N.
class GroupingMatrix {
 public:
  static GroupingMatrix from_groups(const std::vector<std::vector<int>>& groups, int large_dim);
  static GroupingMatrix from_matrix(const Matrix& x);

  int rows() const { return static_cast<int>(m_.rows()); }
  int cols() const { return static_cast<int>(m_.cols()); }
  const Matrix& matrix() const { return m_; }
  const std::vector<std::vector<int>>& groups() const { return groups_; }
  int group_of(int large_index) const { return owner_[static_cast<std::size_t>(large_index)]; }

 private:
  Matrix m_;
  std::vector<std::vector<int>> groups_;
  std::vector<int> owner_;
};

// weights[g] is a probability vector over the members of group g.
Matrix right_inverse(const GroupingMatrix& x, const std::vector<std::vector<double>>& weights);
Matrix uniform_right_inverse(const GroupingMatrix& x);
void check_right_inverse(const GroupingMatrix& x, const Matrix& y, double tol = kIdentityTol);

StochasticMatrix coarse_grain(const GroupingMatrix& x, const Matrix& y0, const StochasticMatrix& gl);
DynamicsCurve coarse_grain_curve(const GroupingMatrix& x, const Matrix& y0, const DynamicsCurve& gl);

struct DispatchCurve {
  std::vector<double> times;
  std::vector<Matrix> matrices;
};

StochasticMatrix dilate_matrix(const GroupingMatrix& x, const Matrix& y, const StochasticMatrix& gs);
DynamicsCurve dilate(const GroupingMatrix& x, const DispatchCurve& y, const DynamicsCurve& gs);

struct GroupingComponent {
  GroupingMatrix x;
  Matrix y;
};

struct UncertainGrouping {
  std::vector<double> weights;
  std::vector<GroupingComponent> components;

  // Throws WeightError or NotRightInverse.
  void validate(double tol = kDefaultTol) const;
};

StochasticMatrix cg_uncertain(const UncertainGrouping& u, const StochasticMatrix& gl);
StochasticMatrix dilate_uncertain(const UncertainGrouping& u, const StochasticMatrix& gs);

struct TransferCandidate {
  std::string label;
  Matrix y;
  double residual = 0.0;
  bool holds = false;
  std::optional<StochasticMatrix> reduced_transition;
};

struct TransferReport {
  DivisionVerdict original;
  // Original transition has columns constant on every group, i.e. it is C X.
  bool transition_is_dilation = false;
  std::vector<TransferCandidate> candidates;
  bool inherits = false;
  DivisionVerdict reduced_direct;
};

// Checks X G_O(t<-t') G_O(t') Y0 = X G_O(t<-t') Y' X G_O(t') Y0 for each
// candidate Y', the uniform right-inverse first.
TransferReport divisibility_transfer_check(const GroupingMatrix& x, const Matrix& y0,
                                           const DynamicsCurve& gl, int later, int earlier,
                                           const std::vector<Matrix>& candidates = {},
                                           double tol = kDefaultTol);

}  // namespace divcone
