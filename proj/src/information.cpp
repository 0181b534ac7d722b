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

#include "divcone/information.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace divcone {

ProbabilityVector ProbabilityVector::validate(const Vector& entries, double tol) {
  if (entries.size() == 0) throw Error(ErrorCode::DomainError, "empty probability vector");
  for (Eigen::Index i = 0; i < entries.size(); ++i) {
    double e = entries(i);
    if (!std::isfinite(e) || e < -tol || e > 1.0 + tol) {
      std::ostringstream os;
      os << "entry " << i << " = " << e;
      throw Error(ErrorCode::EntryOutOfRange, os.str());
    }
  }
  double sum = entries.sum();
  if (std::abs(sum - 1.0) > static_cast<double>(entries.size()) * tol) {
    std::ostringstream os;
    os << "entries sum to " << sum;
    throw Error(ErrorCode::ColumnSumError, os.str());
  }
  ProbabilityVector out;
  out.v_ = entries.cwiseMax(0.0).cwiseMin(1.0);
  double s = out.v_.sum();
  if (!(s > 0.0)) throw Error(ErrorCode::ColumnSumError, "vector vanishes after clamping");
  if (s != 1.0) out.v_ /= s;
  return out;
}

std::string_view kernel_name(PhiKernel k) {
  switch (k) {
    case PhiKernel::KullbackLeibler: return "kl";
    case PhiKernel::TotalVariation: return "tv";
    case PhiKernel::ChiSquared: return "chi2";
  }
  return "unknown";
}

double phi_entropy(PhiKernel k, const ProbabilityVector& pi, const ProbabilityVector& pihat) {
  if (pi.dim() != pihat.dim()) throw Error(ErrorCode::DimensionMismatch, "vector dims differ");
  double h = 0.0;
  for (int i = 0; i < pi.dim(); ++i) {
    const double x = pi[i], y = pihat[i];
    switch (k) {
      case PhiKernel::KullbackLeibler:
        if (x == 0.0) break;
        if (!(y > kPositivityFloor)) {
          throw Error(ErrorCode::SupportMismatch, "pi has mass where pihat has none");
        }
        h += x * std::log(x / y);
        break;
      case PhiKernel::TotalVariation:
        h += 0.5 * std::abs(x - y);
        break;
      case PhiKernel::ChiSquared:
        if (x == y) break;
        if (!(y > kPositivityFloor)) {
          throw Error(ErrorCode::SupportMismatch, "pi has mass where pihat has none");
        }
        h += (x - y) * (x - y) / y;
        break;
    }
  }
  return std::max(h, 0.0);
}

ContractionCheck check_contraction(const StochasticMatrix& g, const ProbabilityVector& pi,
                                   const ProbabilityVector& pihat, double slack) {
  if (g.dim() != 2) throw Error(ErrorCode::DimensionMismatch, "contraction check needs dim 2");
  if (pi.dim() != 2 || pihat.dim() != 2) {
    throw Error(ErrorCode::DimensionMismatch, "vectors must have dim 2");
  }
  for (int i = 0; i < 2; ++i) {
    if (!(g.matrix().row(i).sum() > kPositivityFloor)) {
      throw Error(ErrorCode::ZeroRow, "stochastic matrix has a zero row");
    }
  }
  ProbabilityVector a = ProbabilityVector::validate(g.matrix() * pi.vector(), kDefaultTol);
  ProbabilityVector b = ProbabilityVector::validate(g.matrix() * pihat.vector(), kDefaultTol);
  ContractionCheck c;
  c.coefficient = std::abs(g.det());
  c.lhs = phi_entropy(PhiKernel::KullbackLeibler, a, b);
  c.rhs = c.coefficient * phi_entropy(PhiKernel::KullbackLeibler, pi, pihat);
  c.holds = c.lhs <= c.rhs + slack;
  return c;
}

double hilbert_metric(const Vector& x, const Vector& y) {
  if (x.size() != y.size() || x.size() == 0) {
    throw Error(ErrorCode::DimensionMismatch, "vector dims differ");
  }
  double hi = -INFINITY, lo = INFINITY;
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    if (!(x(i) > kPositivityFloor) || !(y(i) > kPositivityFloor) || !std::isfinite(x(i)) ||
        !std::isfinite(y(i))) {
      throw Error(ErrorCode::NonPositiveEntry, "Hilbert metric needs strictly positive vectors");
    }
    double l = std::log(x(i)) - std::log(y(i));
    hi = std::max(hi, l);
    lo = std::min(lo, l);
  }
  return hi - lo;
}

double birkhoff_coefficient(const StochasticMatrix& g) {
  const Matrix& m = g.matrix();
  const int n = g.dim();
  if (!(m.minCoeff() > kPositivityFloor)) {
    throw Error(ErrorCode::NonPositiveMatrix, "Birkhoff coefficient needs a positive matrix");
  }
  Matrix lg = m.array().log().matrix();
  // log of the smallest cross ratio g_ik g_jl / (g_il g_jk)
  double lphi = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        for (int l = 0; l < n; ++l) {
          lphi = std::min(lphi, lg(i, k) + lg(j, l) - lg(i, l) - lg(j, k));
        }
      }
    }
  }
  const double root = std::exp(0.5 * lphi);
  return (1.0 - root) / (1.0 + root);
}

double birkhoff_closed_form2(DiagCoord c) {
  const double a = std::sqrt(c.p * c.q);
  const double b = std::sqrt((1.0 - c.p) * (1.0 - c.q));
  return std::abs(a - b) / (a + b);
}

double dobrushin_coefficient(const StochasticMatrix& g) {
  const Matrix& m = g.matrix();
  double best = 0.0;
  for (int j = 0; j < g.dim(); ++j) {
    for (int k = j + 1; k < g.dim(); ++k) {
      best = std::max(best, 0.5 * (m.col(j) - m.col(k)).cwiseAbs().sum());
    }
  }
  return best;
}

MonotonicityReport monotonicity_report(const DynamicsCurve& c, double tol) {
  if (c.dim() != 2) throw Error(ErrorCode::DimensionMismatch, "monotonicity report needs dim 2");
  MonotonicityReport rep;
  for (int k = 1; k < c.size(); ++k) {
    MonotonicityStep st;
    st.from = k - 1;
    st.to = k;
    st.abs_t_before = std::abs(c.at(k - 1).det());
    st.abs_t_after = std::abs(c.at(k).det());
    double delta = st.abs_t_after - st.abs_t_before;
    st.direction = std::abs(delta) <= tol ? 0 : (delta > 0 ? 1 : -1);
    st.divisible = divide(c.at(k), c.at(k - 1), tol).status;
    st.jump = c.is_jump(k);
    st.consistent = st.direction <= 0 || st.jump || st.divisible != Divisibility::Divisible;
    if (st.direction > 0) rep.recovery_steps.push_back(k);
    rep.consistent = rep.consistent && st.consistent;
    rep.steps.push_back(st);
  }
  return rep;
}

}  // namespace divcone
