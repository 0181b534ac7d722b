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

#include "divcone/core.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace divcone {

std::string_view error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonSquare: return "NonSquare";
    case ErrorCode::EntryOutOfRange: return "EntryOutOfRange";
    case ErrorCode::ColumnSumError: return "ColumnSumError";
    case ErrorCode::DomainError: return "DomainError";
    case ErrorCode::SingularMatrix: return "SingularMatrix";
    case ErrorCode::NotDegenerate: return "NotDegenerate";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::DegenerateAnchor: return "DegenerateAnchor";
    case ErrorCode::SamplingExhausted: return "SamplingExhausted";
    case ErrorCode::SupportMismatch: return "SupportMismatch";
    case ErrorCode::ZeroRow: return "ZeroRow";
    case ErrorCode::NonPositiveEntry: return "NonPositiveEntry";
    case ErrorCode::NonPositiveMatrix: return "NonPositiveMatrix";
    case ErrorCode::KrausConditionViolated: return "KrausConditionViolated";
    case ErrorCode::NotRightInverse: return "NotRightInverse";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::TimeGridMismatch: return "TimeGridMismatch";
    case ErrorCode::WeightError: return "WeightError";
    case ErrorCode::InvalidGrid: return "InvalidGrid";
    case ErrorCode::InvalidCurve: return "InvalidCurve";
    case ErrorCode::InvalidGrouping: return "InvalidGrouping";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

bool DiagCoord::degenerate(double tol) const { return std::abs(p + q - 1.0) <= tol; }

bool XTCoord::in_square(double tol) const {
  return std::abs(X + T) <= 1.0 + tol && std::abs(X - T) <= 1.0 + tol;
}

XTCoord to_xt(DiagCoord c) { return {c.p - c.q, 1.0 - (c.p + c.q)}; }

DiagCoord from_xt(XTCoord x, double tol) {
  if (!std::isfinite(x.X) || !std::isfinite(x.T) || !x.in_square(tol)) {
    std::ostringstream os;
    os << "(X,T)=(" << x.X << "," << x.T << ") outside the square";
    throw Error(ErrorCode::DomainError, os.str());
  }
  double p = 0.5 * (1.0 + x.X - x.T);
  double q = 0.5 * (1.0 - x.X - x.T);
  return {std::clamp(p, 0.0, 1.0), std::clamp(q, 0.0, 1.0)};
}

XTCoord xt_mul(XTCoord a, XTCoord b) { return {a.X - b.X * a.T, -a.T * b.T}; }

XTInverse xt_inv(XTCoord a) {
  if (a.T == 0.0) throw Error(ErrorCode::SingularMatrix, "T = 0 has no inverse");
  XTCoord inv{a.X / a.T, 1.0 / a.T};
  return {inv, inv.in_square(kIdentityTol)};
}

StochasticMatrix::StochasticMatrix() : m_(Matrix::Identity(2, 2)) {}

StochasticMatrix StochasticMatrix::validate(const Matrix& entries, double tol) {
  if (entries.rows() != entries.cols() || entries.rows() == 0) {
    std::ostringstream os;
    os << entries.rows() << "x" << entries.cols() << " is not square";
    throw Error(ErrorCode::NonSquare, os.str());
  }
  if (!(tol >= 0.0)) throw Error(ErrorCode::DomainError, "negative tolerance");
  const Eigen::Index n = entries.rows();
  double worst = 0.0;
  for (Eigen::Index j = 0; j < n; ++j) {
    for (Eigen::Index i = 0; i < n; ++i) {
      double e = entries(i, j);
      if (!std::isfinite(e)) throw Error(ErrorCode::EntryOutOfRange, "non-finite entry");
      double v = std::max({0.0, -e, e - 1.0});
      if (v > tol) {
        std::ostringstream os;
        os << "entry (" << i << "," << j << ") = " << e << " violates [0,1] by " << v;
        throw Error(ErrorCode::EntryOutOfRange, os.str());
      }
      worst = std::max(worst, v);
    }
  }
  StochasticMatrix out;
  out.m_ = entries;
  for (Eigen::Index j = 0; j < n; ++j) {
    double dev = std::abs(entries.col(j).sum() - 1.0);
    if (dev > static_cast<double>(n) * tol) {
      std::ostringstream os;
      os << "column " << j << " sums to " << entries.col(j).sum();
      throw Error(ErrorCode::ColumnSumError, os.str());
    }
    worst = std::max(worst, dev);
    out.m_.col(j) = out.m_.col(j).cwiseMax(0.0).cwiseMin(1.0);
    double s = out.m_.col(j).sum();
    if (!(s > 0.0)) throw Error(ErrorCode::ColumnSumError, "column vanishes after clamping");
    if (s != 1.0) out.m_.col(j) /= s;
  }
  out.tol_ = tol;
  out.max_violation_ = worst;
  return out;
}

StochasticMatrix StochasticMatrix::from_diag(DiagCoord c) {
  if (!(c.p >= -kDefaultTol && c.p <= 1.0 + kDefaultTol && c.q >= -kDefaultTol &&
        c.q <= 1.0 + kDefaultTol)) {
    std::ostringstream os;
    os << "(p,q)=(" << c.p << "," << c.q << ") outside [0,1]^2";
    throw Error(ErrorCode::EntryOutOfRange, os.str());
  }
  double p = std::clamp(c.p, 0.0, 1.0);
  double q = std::clamp(c.q, 0.0, 1.0);
  StochasticMatrix out;
  out.m_.resize(2, 2);
  out.m_ << p, 1.0 - q, 1.0 - p, q;
  out.tol_ = kDefaultTol;
  out.max_violation_ = std::max({0.0, -c.p, c.p - 1.0, -c.q, c.q - 1.0});
  return out;
}

StochasticMatrix StochasticMatrix::identity(int n) {
  if (n <= 0) throw Error(ErrorCode::NonSquare, "dimension must be positive");
  StochasticMatrix out;
  out.m_ = Matrix::Identity(n, n);
  return out;
}

DiagCoord StochasticMatrix::diag() const {
  if (dim() != 2) throw Error(ErrorCode::DimensionMismatch, "diagonal chart needs dim 2");
  return {m_(0, 0), m_(1, 1)};
}

double StochasticMatrix::det() const {
  if (dim() == 2) return m_(0, 0) + m_(1, 1) - 1.0;
  return m_.determinant();
}

bool StochasticMatrix::is_permutation(double tol) const {
  const int n = dim();
  for (int i = 0; i < n; ++i) {
    int ones = 0;
    for (int j = 0; j < n; ++j) {
      double e = m_(i, j);
      if (std::abs(e - 1.0) <= tol) {
        ++ones;
      } else if (std::abs(e) > tol) {
        return false;
      }
    }
    if (ones != 1) return false;
  }
  return true;
}

StochasticMatrix operator*(const StochasticMatrix& a, const StochasticMatrix& b) {
  if (a.dim() != b.dim()) throw Error(ErrorCode::DimensionMismatch, "product of mismatched dims");
  return StochasticMatrix::validate(a.matrix() * b.matrix(), kDefaultTol);
}

double max_abs_diff(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw Error(ErrorCode::ShapeMismatch, "max_abs_diff on mismatched shapes");
  }
  if (a.size() == 0) return 0.0;
  return (a - b).cwiseAbs().maxCoeff();
}

DegenerateWeights decompose_degenerate(DiagCoord c, double tol) {
  if (!c.degenerate(tol)) {
    std::ostringstream os;
    os << "p+q-1 = " << c.det();
    throw Error(ErrorCode::NotDegenerate, os.str());
  }
  return {c.p, 1.0 - c.p};
}

Matrix reconstruct_degenerate(DegenerateWeights w) {
  Matrix m(2, 2);
  m << w.pi_a, w.pi_a, w.pi_b, w.pi_b;
  return m;
}

DeterministicCoefficients decompose_deterministic(DiagCoord c) {
  return {1.0, 0.5 * (c.p + c.q), 0.5 * (c.p - c.q)};
}

Matrix reconstruct_deterministic(DeterministicCoefficients d) {
  Matrix sx(2, 2), sym(2, 2), asym(2, 2);
  sx << 0, 1, 1, 0;
  sym << 1, -1, -1, 1;
  asym << 1, 1, -1, -1;
  return d.swap * sx + d.symmetric * sym + d.asymmetric * asym;
}

PermutationMatrix::PermutationMatrix(std::vector<int> image) : image_(std::move(image)) {
  std::vector<char> seen(image_.size(), 0);
  for (int v : image_) {
    if (v < 0 || v >= static_cast<int>(image_.size()) || seen[static_cast<std::size_t>(v)]) {
      throw Error(ErrorCode::DomainError, "image is not a bijection");
    }
    seen[static_cast<std::size_t>(v)] = 1;
  }
}

PermutationMatrix PermutationMatrix::identity(int n) {
  std::vector<int> id(static_cast<std::size_t>(n));
  std::iota(id.begin(), id.end(), 0);
  return PermutationMatrix(std::move(id));
}

PermutationMatrix PermutationMatrix::swap2() { return PermutationMatrix({1, 0}); }

PermutationMatrix PermutationMatrix::from_matrix(const StochasticMatrix& g, double tol) {
  if (!g.is_permutation(tol)) throw Error(ErrorCode::DomainError, "matrix is not a permutation");
  std::vector<int> image(static_cast<std::size_t>(g.dim()));
  for (int j = 0; j < g.dim(); ++j) {
    Eigen::Index row = 0;
    g.matrix().col(j).maxCoeff(&row);
    image[static_cast<std::size_t>(j)] = static_cast<int>(row);
  }
  return PermutationMatrix(std::move(image));
}

PermutationMatrix PermutationMatrix::inverse() const {
  std::vector<int> inv(image_.size());
  for (std::size_t j = 0; j < image_.size(); ++j) inv[static_cast<std::size_t>(image_[j])] = static_cast<int>(j);
  return PermutationMatrix(std::move(inv));
}

Matrix PermutationMatrix::to_matrix() const {
  Matrix m = Matrix::Zero(dim(), dim());
  for (int j = 0; j < dim(); ++j) m(image_[static_cast<std::size_t>(j)], j) = 1.0;
  return m;
}

StochasticMatrix PermutationMatrix::to_stochastic() const {
  return StochasticMatrix::validate(to_matrix(), 0.0);
}

PermutationMatrix operator*(const PermutationMatrix& a, const PermutationMatrix& b) {
  if (a.dim() != b.dim()) throw Error(ErrorCode::DimensionMismatch, "permutation dims differ");
  std::vector<int> image(b.image_.size());
  for (std::size_t j = 0; j < image.size(); ++j) {
    image[j] = a.image_[static_cast<std::size_t>(b.image_[j])];
  }
  return PermutationMatrix(std::move(image));
}

std::vector<PermutationMatrix> all_permutations(int n) {
  std::vector<int> image(static_cast<std::size_t>(n));
  std::iota(image.begin(), image.end(), 0);
  std::vector<PermutationMatrix> out;
  do {
    out.emplace_back(image);
  } while (std::next_permutation(image.begin(), image.end()));
  return out;
}

}  // namespace divcone
