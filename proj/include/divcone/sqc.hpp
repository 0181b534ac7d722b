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

#include <complex>
#include <vector>

#include "divcone/core.hpp"
#include "divcone/information.hpp"

namespace divcone {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;

inline constexpr double kPsdFloor = -1e-12;

// e^{i phi} [[sqrt(p), -sqrt(1-q) e^{i theta}], [sqrt(1-p) e^{-i theta}, sqrt(q)]]
ComplexMatrix sh_sqrt(const StochasticMatrix& g, double theta = 0.0, double phi = 0.0);
double unitarity_deviation(const ComplexMatrix& theta);
bool is_unistochastic2(const StochasticMatrix& g, double tol = kDefaultTol);

struct KrausSet {
  std::vector<ComplexMatrix> ops;

  int dim() const { return ops.empty() ? 0 : static_cast<int>(ops.front().rows()); }
  // max |sum_a K_a^dagger K_a - 1|
  double condition_residual() const;
};

KrausSet kraus_from_theta(const ComplexMatrix& theta, double tol = kDefaultTol);
StochasticMatrix channel_to_stochastic(const KrausSet& kraus, double tol = kDefaultTol);

class DensityMatrix {
 public:
  static DensityMatrix validate(const ComplexMatrix& rho, double tol = kDefaultTol);

  int dim() const { return static_cast<int>(rho_.rows()); }
  const ComplexMatrix& matrix() const { return rho_; }
  Vector populations() const { return rho_.diagonal().real(); }
  double min_eigenvalue() const { return min_eig_; }
  double max_coherence() const;

 private:
  ComplexMatrix rho_;
  double min_eig_ = 0.0;
};

DensityMatrix evolve_density(const ComplexMatrix& theta, const ProbabilityVector& p0);

struct BirkhoffRatio {
  double det_gamma = 0.0;
  double det_theta_sq = 0.0;
  double ratio = 0.0;
  double tau_b = 0.0;
  bool consistent = false;
};

BirkhoffRatio birkhoff_ratio_check(const StochasticMatrix& g, double tol = kDefaultTol);

}  // namespace divcone
