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

#include "divcone/sqc.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <sstream>

namespace divcone {

ComplexMatrix sh_sqrt(const StochasticMatrix& g, double theta, double phi) {
  const DiagCoord c = g.diag();
  const Complex global = std::polar(1.0, phi);
  const Complex e = std::polar(1.0, theta);
  ComplexMatrix t(2, 2);
  t(0, 0) = global * std::sqrt(c.p);
  t(0, 1) = -global * std::sqrt(1.0 - c.q) * e;
  t(1, 0) = global * std::sqrt(1.0 - c.p) * std::conj(e);
  t(1, 1) = global * std::sqrt(c.q);
  return t;
}

double unitarity_deviation(const ComplexMatrix& theta) { return std::abs(theta.determinant()); }

bool is_unistochastic2(const StochasticMatrix& g, double tol) {
  const DiagCoord c = g.diag();
  return std::abs(c.p - c.q) <= tol;
}

double KrausSet::condition_residual() const {
  if (ops.empty()) return INFINITY;
  const Eigen::Index n = ops.front().cols();
  ComplexMatrix sum = ComplexMatrix::Zero(n, n);
  for (const ComplexMatrix& k : ops) {
    if (k.rows() != n || k.cols() != n) throw Error(ErrorCode::ShapeMismatch, "Kraus shapes differ");
    sum += k.adjoint() * k;
  }
  return (sum - ComplexMatrix::Identity(n, n)).cwiseAbs().maxCoeff();
}

KrausSet kraus_from_theta(const ComplexMatrix& theta, double tol) {
  if (theta.rows() != theta.cols()) throw Error(ErrorCode::NonSquare, "theta must be square");
  const Eigen::Index n = theta.cols();
  KrausSet out;
  for (Eigen::Index a = 0; a < n; ++a) {
    ComplexMatrix k = ComplexMatrix::Zero(n, n);
    k.col(a) = theta.col(a);
    out.ops.push_back(std::move(k));
  }
  double res = out.condition_residual();
  if (res > tol) {
    std::ostringstream os;
    os << "sum K^dagger K deviates from identity by " << res;
    throw Error(ErrorCode::KrausConditionViolated, os.str());
  }
  return out;
}

StochasticMatrix channel_to_stochastic(const KrausSet& kraus, double tol) {
  double res = kraus.condition_residual();
  if (!(res <= tol)) {
    std::ostringstream os;
    os << "sum K^dagger K deviates from identity by " << res;
    throw Error(ErrorCode::KrausConditionViolated, os.str());
  }
  const Eigen::Index n = kraus.ops.front().rows();
  Matrix g = Matrix::Zero(n, n);
  for (const ComplexMatrix& k : kraus.ops) g += k.cwiseAbs2();
  return StochasticMatrix::validate(g, tol);
}

DensityMatrix DensityMatrix::validate(const ComplexMatrix& rho, double tol) {
  if (rho.rows() != rho.cols() || rho.rows() == 0) {
    throw Error(ErrorCode::NonSquare, "density matrix must be square");
  }
  double herm = (rho - rho.adjoint()).cwiseAbs().maxCoeff();
  if (herm > tol) throw Error(ErrorCode::DomainError, "density matrix is not Hermitian");
  Complex tr = rho.trace();
  if (std::abs(tr - Complex(1.0, 0.0)) > tol) {
    throw Error(ErrorCode::DomainError, "density matrix trace differs from one");
  }
  DensityMatrix out;
  out.rho_ = 0.5 * (rho + rho.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(out.rho_, Eigen::EigenvaluesOnly);
  out.min_eig_ = es.eigenvalues().minCoeff();
  if (out.min_eig_ < kPsdFloor) {
    std::ostringstream os;
    os << "density matrix has eigenvalue " << out.min_eig_;
    throw Error(ErrorCode::DomainError, os.str());
  }
  return out;
}

double DensityMatrix::max_coherence() const {
  double best = 0.0;
  for (Eigen::Index i = 0; i < rho_.rows(); ++i) {
    for (Eigen::Index j = 0; j < rho_.cols(); ++j) {
      if (i != j) best = std::max(best, std::abs(rho_(i, j)));
    }
  }
  return best;
}

DensityMatrix evolve_density(const ComplexMatrix& theta, const ProbabilityVector& p0) {
  if (theta.cols() != p0.dim()) throw Error(ErrorCode::DimensionMismatch, "p0 dim mismatch");
  ComplexMatrix rho0 = p0.vector().cast<Complex>().asDiagonal();
  return DensityMatrix::validate(theta * rho0 * theta.adjoint(), kDefaultTol);
}

BirkhoffRatio birkhoff_ratio_check(const StochasticMatrix& g, double tol) {
  BirkhoffRatio r;
  r.tau_b = birkhoff_coefficient(g);
  r.det_gamma = g.det();
  const double dt = unitarity_deviation(sh_sqrt(g));
  r.det_theta_sq = dt * dt;
  r.ratio = r.det_gamma / r.det_theta_sq;
  r.consistent = std::abs(std::abs(r.ratio) - r.tau_b) <= tol;
  return r;
}

}  // namespace divcone
