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

#include "divcone/divisibility.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "divcone/kernels.hpp"

namespace divcone {

std::string_view divisibility_name(Divisibility d) {
  switch (d) {
    case Divisibility::Divisible: return "divisible";
    case Divisibility::Indivisible: return "indivisible";
    case Divisibility::Unknown: return "unknown";
  }
  return "unknown";
}

std::string_view branch_name(DivisionBranch b) {
  switch (b) {
    case DivisionBranch::InvertiblePast: return "invertible_past";
    case DivisionBranch::DegeneratePast: return "degenerate_past";
    case DivisionBranch::DegenerateBoth: return "degenerate_both";
    case DivisionBranch::SingularPast: return "singular_past";
  }
  return "unknown";
}

namespace {

DivisionBranch to_branch(std::uint8_t b) {
  switch (b) {
    case kernels::kDegeneratePast: return DivisionBranch::DegeneratePast;
    case kernels::kDegenerateBoth: return DivisionBranch::DegenerateBoth;
    default: return DivisionBranch::InvertiblePast;
  }
}

DivisionVerdict divide2(DiagCoord later, DiagCoord earlier, double tol) {
  std::uint8_t status = 0, branch = 0;
  double viol = 0.0, c11 = 0.0, c12 = 0.0, c21 = 0.0, c22 = 0.0;
  kernels::PairBatch in{&later.p, &later.q, &earlier.p, &earlier.q, 1};
  kernels::PairResult out{&status, &branch, &viol, &c11, &c12, &c21, &c22};
  kernels::scalar::classify_pairs(in, tol, out);

  DivisionVerdict v;
  v.branch = to_branch(branch);
  v.max_violation = viol;
  v.status = status == kernels::kDivisible ? Divisibility::Divisible : Divisibility::Indivisible;
  if (v.divisible()) {
    Matrix t(2, 2);
    t << c11, c12, c21, c22;
    v.transition = StochasticMatrix::validate(t, std::max(tol, kIdentityTol));
  }
  return v;
}

DivisionVerdict divide_general(const StochasticMatrix& later, const StochasticMatrix& earlier,
                               double tol) {
  DivisionVerdict v;
  const int n = later.dim();
  if (max_abs_diff(later.matrix(), earlier.matrix()) <= tol) {
    v.status = Divisibility::Divisible;
    v.transition = StochasticMatrix::identity(n);
    v.branch = std::abs(earlier.det()) < kNearSingularDet ? DivisionBranch::SingularPast
                                                          : DivisionBranch::InvertiblePast;
    return v;
  }
  if (std::abs(earlier.det()) < kNearSingularDet) {
    v.status = Divisibility::Unknown;
    v.branch = DivisionBranch::SingularPast;
    return v;
  }
  // candidate * earlier = later
  Matrix cand = earlier.matrix().transpose().fullPivLu().solve(later.matrix().transpose()).transpose();
  double lo = cand.minCoeff();
  double hi = cand.maxCoeff();
  v.branch = DivisionBranch::InvertiblePast;
  v.max_violation = std::max({0.0, -lo, hi - 1.0});
  if (v.max_violation <= tol) {
    v.status = Divisibility::Divisible;
    v.transition = StochasticMatrix::validate(cand, std::max(tol, kIdentityTol));
  } else {
    v.status = Divisibility::Indivisible;
  }
  return v;
}

}  // namespace

DivisionVerdict divide(const StochasticMatrix& later, const StochasticMatrix& earlier, double tol) {
  if (later.dim() != earlier.dim()) {
    std::ostringstream os;
    os << "later is " << later.dim() << "x" << later.dim() << ", earlier is " << earlier.dim()
       << "x" << earlier.dim();
    throw Error(ErrorCode::DimensionMismatch, os.str());
  }
  if (later.dim() == 2) return divide2(later.diag(), earlier.diag(), tol);
  return divide_general(later, earlier, tol);
}

DynamicsCurve::DynamicsCurve(std::vector<double> times, std::vector<StochasticMatrix> matrices,
                             std::vector<bool> jumps, StartRule rule)
    : times_(std::move(times)), matrices_(std::move(matrices)), jumps_(std::move(jumps)) {
  if (times_.empty()) throw Error(ErrorCode::InvalidCurve, "empty curve");
  if (times_.size() != matrices_.size()) {
    throw Error(ErrorCode::InvalidCurve, "times and matrices differ in length");
  }
  if (jumps_.empty()) jumps_.assign(times_.size(), false);
  if (jumps_.size() != times_.size()) {
    throw Error(ErrorCode::InvalidCurve, "jump flags differ in length");
  }
  for (std::size_t k = 0; k < times_.size(); ++k) {
    if (!std::isfinite(times_[k])) throw Error(ErrorCode::InvalidCurve, "non-finite time");
    if (k > 0 && !(times_[k] > times_[k - 1])) {
      throw Error(ErrorCode::InvalidCurve, "times must be strictly increasing");
    }
    if (matrices_[k].dim() != matrices_.front().dim()) {
      throw Error(ErrorCode::InvalidCurve, "matrices must share a dimension");
    }
  }
  if (rule == StartRule::RequireIdentity && times_.front() == 0.0) {
    const Matrix& g0 = matrices_.front().matrix();
    if (max_abs_diff(g0, Matrix::Identity(g0.rows(), g0.cols())) > kDefaultTol) {
      throw Error(ErrorCode::InvalidCurve, "curve must start at the identity at t = 0");
    }
  }
}

DivisionEventReport analyze_curve(const DynamicsCurve& c, double tol) {
  const int n = c.size();
  DivisionEventReport rep;
  rep.size = n;
  rep.cells.resize(static_cast<std::size_t>(n));

  if (c.dim() == 2) {
    std::vector<double> p(n), q(n), r(n), s(n), viol(n), c11(n), c12(n), c21(n), c22(n);
    std::vector<std::uint8_t> status(n), branch(n);
    for (int k = 0; k < n; ++k) {
      DiagCoord d = c.at(k).diag();
      r[k] = d.p;
      s[k] = d.q;
    }
    for (int k = 0; k < n; ++k) {
      const std::size_t len = static_cast<std::size_t>(k) + 1;
      std::fill_n(p.begin(), len, r[k]);
      std::fill_n(q.begin(), len, s[k]);
      kernels::PairBatch in{p.data(), q.data(), r.data(), s.data(), len};
      kernels::PairResult out{status.data(), branch.data(), viol.data(), c11.data(),
                              c12.data(),    c21.data(),    c22.data()};
      kernels::classify_pairs(in, tol, out);
      auto& row = rep.cells[static_cast<std::size_t>(k)];
      row.resize(len);
      for (std::size_t kp = 0; kp < len; ++kp) {
        row[kp] = status[kp] == kernels::kDivisible ? Divisibility::Divisible
                                                    : Divisibility::Indivisible;
      }
    }
  } else {
    for (int k = 0; k < n; ++k) {
      auto& row = rep.cells[static_cast<std::size_t>(k)];
      row.resize(static_cast<std::size_t>(k) + 1);
      for (int kp = 0; kp <= k; ++kp) row[static_cast<std::size_t>(kp)] = divide(c.at(k), c.at(kp), tol).status;
    }
  }

  rep.full_past_divisible.assign(static_cast<std::size_t>(n), false);
  for (int k = 0; k < n; ++k) {
    const auto& row = rep.cells[static_cast<std::size_t>(k)];
    bool full = std::all_of(row.begin(), row.end(),
                            [](Divisibility d) { return d == Divisibility::Divisible; });
    rep.full_past_divisible[static_cast<std::size_t>(k)] = full;
    if (full) rep.last_full_divisible_past = k;
  }
  for (int kp = 0; kp < n; ++kp) {
    bool proper = true;
    for (int k = kp; k < n && proper; ++k) proper = rep.cell(kp, k) == Divisibility::Divisible;
    if (proper) rep.proper_events.push_back(kp);
  }

  int last = -1;
  int last_sign = 0;
  for (int k = 0; k < n; ++k) {
    double d = c.at(k).det();
    int sign = std::abs(d) <= tol ? 0 : (d > 0 ? 1 : -1);
    if (sign == 0) continue;
    if (last >= 0 && sign != last_sign) {
      bool jump = false;
      for (int j = last + 1; j <= k; ++j) jump = jump || c.is_jump(j);
      rep.det_sign_changes.push_back({last, k, !jump});
    }
    last = k;
    last_sign = sign;
  }
  return rep;
}

Region future_square(const StochasticMatrix& g) {
  const DiagCoord a = g.diag();
  const double p = a.p, q = a.q, d = a.det();
  if (a.degenerate()) {
    return make_region(RegionKind::FutureSet, a,
                       {{1.0, 1.0, -1.0, false}, {-1.0, -1.0, 1.0, false}}, {0.0, 0.0, 1.0});
  }
  const double sg = d > 0 ? 1.0 : -1.0;
  std::vector<HalfPlane> h = {
      {sg * q, sg * (1.0 - p), -sg * (1.0 - p), false},
      {-sg * (1.0 - q), -sg * p, sg * p, false},
      {-sg * q, -sg * (1.0 - p), sg * q, false},
      {sg * (1.0 - q), sg * p, -sg * (1.0 - q), false},
  };
  return make_region(RegionKind::FutureSet, a, std::move(h), {0.0, 0.0, std::abs(d)});
}

Region image_square(const StochasticMatrix& g) {
  const DiagCoord a = g.diag();
  const double wlo = std::min(1.0 - a.q, a.p), whi = std::max(1.0 - a.q, a.p);
  const double zlo = std::min(1.0 - a.p, a.q), zhi = std::max(1.0 - a.p, a.q);
  std::vector<HalfPlane> h = {
      {1.0, 0.0, -wlo, false},
      {-1.0, 0.0, whi, false},
      {0.0, 1.0, -zlo, false},
      {0.0, -1.0, zhi, false},
  };
  return make_region(RegionKind::ImageParallelogram, a, std::move(h), {0.0, 0.0, 1.0});
}

}  // namespace divcone
