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

#include <Eigen/Dense>

#include <cstdint>
#include <vector>

#include "divcone/error.hpp"

namespace divcone {

inline constexpr double kDefaultTol = 1e-9;
inline constexpr double kIdentityTol = 1e-12;

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

// Diagonal chart on 2x2 column-stochastic matrices: [[p, 1-q], [1-p, q]].
struct DiagCoord {
  double p = 1.0;
  double q = 1.0;

  double det() const { return p + q - 1.0; }
  bool degenerate(double tol = kDefaultTol) const;
  friend bool operator==(const DiagCoord&, const DiagCoord&) = default;
};

// Erasure chart: X = p - q, T = 1 - (p + q). det = -T.
struct XTCoord {
  double X = 0.0;
  double T = -1.0;

  bool in_square(double tol = kDefaultTol) const;
  friend bool operator==(const XTCoord&, const XTCoord&) = default;
};

struct XTInverse {
  XTCoord coord;
  bool stochastic = false;
};

XTCoord to_xt(DiagCoord c);
DiagCoord from_xt(XTCoord x, double tol = kDefaultTol);
XTCoord xt_mul(XTCoord a, XTCoord b);
XTInverse xt_inv(XTCoord a);

class StochasticMatrix {
 public:
  StochasticMatrix();

  static StochasticMatrix validate(const Matrix& entries, double tol = kDefaultTol);
  static StochasticMatrix from_diag(DiagCoord c);
  static StochasticMatrix identity(int n);

  int dim() const { return static_cast<int>(m_.rows()); }
  double operator()(int i, int j) const { return m_(i, j); }
  const Matrix& matrix() const { return m_; }
  double tol() const { return tol_; }
  double max_violation() const { return max_violation_; }

  // Dimension 2 only.
  DiagCoord diag() const;
  double det() const;
  bool is_permutation(double tol = kIdentityTol) const;

 private:
  Matrix m_;
  double tol_ = 0.0;
  double max_violation_ = 0.0;
};

StochasticMatrix operator*(const StochasticMatrix& a, const StochasticMatrix& b);
double max_abs_diff(const Matrix& a, const Matrix& b);

struct DegenerateWeights {
  double pi_a = 0.0;
  double pi_b = 0.0;
};

DegenerateWeights decompose_degenerate(DiagCoord c, double tol = kDefaultTol);
Matrix reconstruct_degenerate(DegenerateWeights w);

// Gamma = sigma_x * swap + symmetric * (1 - sigma_x) + asymmetric * (Pi_A - Pi_B)
struct DeterministicCoefficients {
  double swap = 1.0;
  double symmetric = 0.0;
  double asymmetric = 0.0;
};

DeterministicCoefficients decompose_deterministic(DiagCoord c);
Matrix reconstruct_deterministic(DeterministicCoefficients d);

class PermutationMatrix {
 public:
  PermutationMatrix() = default;
  // image[j] is the row holding the 1 in column j.
  explicit PermutationMatrix(std::vector<int> image);
  static PermutationMatrix identity(int n);
  static PermutationMatrix swap2();
  static PermutationMatrix from_matrix(const StochasticMatrix& g, double tol = kIdentityTol);

  int dim() const { return static_cast<int>(image_.size()); }
  int operator[](int j) const { return image_[static_cast<std::size_t>(j)]; }
  const std::vector<int>& image() const { return image_; }

  PermutationMatrix inverse() const;
  Matrix to_matrix() const;
  StochasticMatrix to_stochastic() const;

  friend PermutationMatrix operator*(const PermutationMatrix& a, const PermutationMatrix& b);
  friend bool operator==(const PermutationMatrix&, const PermutationMatrix&) = default;

 private:
  std::vector<int> image_;
};

// All permutations of {0..n-1} in lexicographic order of image vectors.
std::vector<PermutationMatrix> all_permutations(int n);

namespace named {
inline constexpr DiagCoord kIdentity{1.0, 1.0};
inline constexpr DiagCoord kSwap{0.0, 0.0};
inline constexpr DiagCoord kPiA{1.0, 0.0};
inline constexpr DiagCoord kPiB{0.0, 1.0};
inline constexpr DiagCoord kFlat{0.5, 0.5};

inline StochasticMatrix identity() { return StochasticMatrix::from_diag(kIdentity); }
inline StochasticMatrix sigma_x() { return StochasticMatrix::from_diag(kSwap); }
inline StochasticMatrix pi_a() { return StochasticMatrix::from_diag(kPiA); }
inline StochasticMatrix pi_b() { return StochasticMatrix::from_diag(kPiB); }
inline StochasticMatrix flat() { return StochasticMatrix::from_diag(kFlat); }
}  // namespace named

}  // namespace divcone
