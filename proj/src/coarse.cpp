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

#include "divcone/coarse.hpp"

#include <cmath>
#include <sstream>

namespace divcone {

GroupingMatrix GroupingMatrix::from_groups(const std::vector<std::vector<int>>& groups,
                                           int large_dim) {
  const int n = static_cast<int>(groups.size());
  if (n == 0 || large_dim <= n) {
    std::ostringstream os;
    os << n << " groups over " << large_dim << " configurations";
    throw Error(ErrorCode::InvalidGrouping, os.str());
  }
  GroupingMatrix x;
  x.m_ = Matrix::Zero(n, large_dim);
  x.owner_.assign(static_cast<std::size_t>(large_dim), -1);
  for (int g = 0; g < n; ++g) {
    if (groups[static_cast<std::size_t>(g)].empty()) {
      throw Error(ErrorCode::InvalidGrouping, "empty group");
    }
    for (int j : groups[static_cast<std::size_t>(g)]) {
      if (j < 0 || j >= large_dim || x.owner_[static_cast<std::size_t>(j)] != -1) {
        std::ostringstream os;
        os << "configuration " << j << " is out of range or grouped twice";
        throw Error(ErrorCode::InvalidGrouping, os.str());
      }
      x.owner_[static_cast<std::size_t>(j)] = g;
      x.m_(g, j) = 1.0;
    }
  }
  for (int j = 0; j < large_dim; ++j) {
    if (x.owner_[static_cast<std::size_t>(j)] == -1) {
      std::ostringstream os;
      os << "configuration " << j << " belongs to no group";
      throw Error(ErrorCode::InvalidGrouping, os.str());
    }
  }
  x.groups_ = groups;
  return x;
}

GroupingMatrix GroupingMatrix::from_matrix(const Matrix& m) {
  std::vector<std::vector<int>> groups(static_cast<std::size_t>(m.rows()));
  for (Eigen::Index j = 0; j < m.cols(); ++j) {
    int owner = -1;
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      if (m(i, j) == 1.0 && owner == -1) {
        owner = static_cast<int>(i);
      } else if (m(i, j) != 0.0) {
        throw Error(ErrorCode::InvalidGrouping, "grouping matrix must be deterministic");
      }
    }
    if (owner == -1) throw Error(ErrorCode::InvalidGrouping, "column without a 1");
    groups[static_cast<std::size_t>(owner)].push_back(static_cast<int>(j));
  }
  return from_groups(groups, static_cast<int>(m.cols()));
}

Matrix right_inverse(const GroupingMatrix& x, const std::vector<std::vector<double>>& weights) {
  const auto& groups = x.groups();
  if (weights.size() != groups.size()) {
    throw Error(ErrorCode::ShapeMismatch, "one weight vector per group is required");
  }
  Matrix y = Matrix::Zero(x.cols(), x.rows());
  for (std::size_t g = 0; g < groups.size(); ++g) {
    if (weights[g].size() != groups[g].size()) {
      throw Error(ErrorCode::ShapeMismatch, "weight vector length differs from group size");
    }
    double sum = 0.0;
    for (std::size_t i = 0; i < groups[g].size(); ++i) {
      double w = weights[g][i];
      if (!(w >= 0.0) || w > 1.0) throw Error(ErrorCode::WeightError, "weight outside [0,1]");
      y(groups[g][i], static_cast<Eigen::Index>(g)) = w;
      sum += w;
    }
    if (std::abs(sum - 1.0) > kDefaultTol) {
      std::ostringstream os;
      os << "group " << g << " weights sum to " << sum;
      throw Error(ErrorCode::WeightError, os.str());
    }
  }
  return y;
}

Matrix uniform_right_inverse(const GroupingMatrix& x) {
  std::vector<std::vector<double>> w;
  for (const auto& g : x.groups()) w.emplace_back(g.size(), 1.0 / static_cast<double>(g.size()));
  return right_inverse(x, w);
}

void check_right_inverse(const GroupingMatrix& x, const Matrix& y, double tol) {
  if (y.rows() != x.cols() || y.cols() != x.rows()) {
    std::ostringstream os;
    os << "Y is " << y.rows() << "x" << y.cols() << ", expected " << x.cols() << "x" << x.rows();
    throw Error(ErrorCode::ShapeMismatch, os.str());
  }
  if (y.minCoeff() < -tol) throw Error(ErrorCode::NotRightInverse, "Y has negative entries");
  double dev = max_abs_diff(x.matrix() * y, Matrix::Identity(x.rows(), x.rows()));
  if (dev > tol) {
    std::ostringstream os;
    os << "X Y deviates from the identity by " << dev;
    throw Error(ErrorCode::NotRightInverse, os.str());
  }
}

StochasticMatrix coarse_grain(const GroupingMatrix& x, const Matrix& y0, const StochasticMatrix& gl) {
  if (gl.dim() != x.cols()) throw Error(ErrorCode::ShapeMismatch, "large matrix dim differs from X");
  check_right_inverse(x, y0);
  return StochasticMatrix::validate(x.matrix() * gl.matrix() * y0, kDefaultTol);
}

DynamicsCurve coarse_grain_curve(const GroupingMatrix& x, const Matrix& y0, const DynamicsCurve& gl) {
  std::vector<StochasticMatrix> out;
  out.reserve(static_cast<std::size_t>(gl.size()));
  for (const StochasticMatrix& g : gl.matrices()) out.push_back(coarse_grain(x, y0, g));
  return DynamicsCurve(gl.times(), std::move(out), gl.jumps());
}

StochasticMatrix dilate_matrix(const GroupingMatrix& x, const Matrix& y, const StochasticMatrix& gs) {
  if (gs.dim() != x.rows()) throw Error(ErrorCode::ShapeMismatch, "small matrix dim differs from X");
  check_right_inverse(x, y);
  return StochasticMatrix::validate(y * gs.matrix() * x.matrix(), kDefaultTol);
}

DynamicsCurve dilate(const GroupingMatrix& x, const DispatchCurve& y, const DynamicsCurve& gs) {
  if (y.times.size() != y.matrices.size() ||
      y.times.size() != static_cast<std::size_t>(gs.size())) {
    throw Error(ErrorCode::TimeGridMismatch, "dispatch curve and dynamics differ in length");
  }
  std::vector<StochasticMatrix> out;
  for (int k = 0; k < gs.size(); ++k) {
    if (std::abs(y.times[static_cast<std::size_t>(k)] - gs.time(k)) > kIdentityTol) {
      throw Error(ErrorCode::TimeGridMismatch, "dispatch and dynamics time grids differ");
    }
    out.push_back(dilate_matrix(x, y.matrices[static_cast<std::size_t>(k)], gs.at(k)));
  }
  return DynamicsCurve(gs.times(), std::move(out), gs.jumps(), StartRule::Free);
}

void UncertainGrouping::validate(double tol) const {
  if (weights.size() != components.size() || weights.empty()) {
    throw Error(ErrorCode::WeightError, "one weight per component is required");
  }
  double sum = 0.0;
  for (double w : weights) {
    if (!(w >= -tol)) throw Error(ErrorCode::WeightError, "negative weight");
    sum += w;
  }
  if (std::abs(sum - 1.0) > tol) {
    std::ostringstream os;
    os << "weights sum to " << sum;
    throw Error(ErrorCode::WeightError, os.str());
  }
  const int n = components.front().x.rows(), big = components.front().x.cols();
  for (const GroupingComponent& c : components) {
    if (c.x.rows() != n || c.x.cols() != big) {
      throw Error(ErrorCode::ShapeMismatch, "components have different shapes");
    }
    check_right_inverse(c.x, c.y);
  }
}

StochasticMatrix cg_uncertain(const UncertainGrouping& u, const StochasticMatrix& gl) {
  u.validate();
  const GroupingMatrix& x0 = u.components.front().x;
  if (gl.dim() != x0.cols()) throw Error(ErrorCode::ShapeMismatch, "large matrix dim differs from X");
  Matrix acc = Matrix::Zero(x0.rows(), x0.rows());
  for (std::size_t k = 0; k < u.components.size(); ++k) {
    const GroupingComponent& c = u.components[k];
    acc += u.weights[k] * (c.x.matrix() * gl.matrix() * c.y);
  }
  return StochasticMatrix::validate(acc, kDefaultTol);
}

StochasticMatrix dilate_uncertain(const UncertainGrouping& u, const StochasticMatrix& gs) {
  u.validate();
  const GroupingMatrix& x0 = u.components.front().x;
  if (gs.dim() != x0.rows()) throw Error(ErrorCode::ShapeMismatch, "small matrix dim differs from X");
  Matrix acc = Matrix::Zero(x0.cols(), x0.cols());
  for (std::size_t k = 0; k < u.components.size(); ++k) {
    const GroupingComponent& c = u.components[k];
    acc += u.weights[k] * (c.y * gs.matrix() * c.x.matrix());
  }
  return StochasticMatrix::validate(acc, kDefaultTol);
}

TransferReport divisibility_transfer_check(const GroupingMatrix& x, const Matrix& y0,
                                           const DynamicsCurve& gl, int later, int earlier,
                                           const std::vector<Matrix>& candidates, double tol) {
  if (earlier < 0 || later >= gl.size() || earlier > later) {
    throw Error(ErrorCode::DomainError, "sample indices must satisfy 0 <= earlier <= later < size");
  }
  check_right_inverse(x, y0);
  const StochasticMatrix& gt = gl.at(later);
  const StochasticMatrix& gp = gl.at(earlier);
  TransferReport rep;
  rep.original = divide(gt, gp, tol);
  rep.reduced_direct = divide(coarse_grain(x, y0, gt), coarse_grain(x, y0, gp), tol);
  if (!rep.original.divisible()) return rep;

  const Matrix& t = rep.original.transition->matrix();
  rep.transition_is_dilation = true;
  for (const auto& g : x.groups()) {
    for (std::size_t i = 1; i < g.size(); ++i) {
      if (max_abs_diff(t.col(g[i]), t.col(g[0])) > tol) rep.transition_is_dilation = false;
    }
  }

  std::vector<std::pair<std::string, Matrix>> all;
  all.emplace_back("uniform", uniform_right_inverse(x));
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    all.emplace_back("candidate_" + std::to_string(i), candidates[i]);
  }
  const Matrix lhs = x.matrix() * t * gp.matrix() * y0;
  const Matrix reduced_past = x.matrix() * gp.matrix() * y0;
  for (auto& [label, y] : all) {
    check_right_inverse(x, y);
    TransferCandidate c;
    c.label = label;
    c.y = y;
    const Matrix rt = x.matrix() * t * y;
    c.residual = max_abs_diff(lhs, rt * reduced_past);
    c.holds = c.residual <= tol;
    c.reduced_transition = StochasticMatrix::validate(rt, kDefaultTol);
    rep.inherits = rep.inherits || c.holds;
    rep.candidates.push_back(std::move(c));
  }
  return rep;
}

}  // namespace divcone
