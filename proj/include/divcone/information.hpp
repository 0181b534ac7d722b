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

#include <string_view>
#include <vector>

#include "divcone/core.hpp"
#include "divcone/divisibility.hpp"

namespace divcone {

inline constexpr double kPositivityFloor = 1e-300;

class ProbabilityVector {
 public:
  static ProbabilityVector validate(const Vector& entries, double tol = kDefaultTol);

  int dim() const { return static_cast<int>(v_.size()); }
  double operator[](int i) const { return v_(i); }
  const Vector& vector() const { return v_; }
  bool strictly_positive() const { return v_.minCoeff() > kPositivityFloor; }

 private:
  Vector v_;
};

enum class PhiKernel { KullbackLeibler, TotalVariation, ChiSquared };

std::string_view kernel_name(PhiKernel k);

double phi_entropy(PhiKernel k, const ProbabilityVector& pi, const ProbabilityVector& pihat);

struct ContractionCheck {
  double lhs = 0.0;
  double rhs = 0.0;
  double coefficient = 0.0;
  bool holds = false;
};

ContractionCheck check_contraction(const StochasticMatrix& g, const ProbabilityVector& pi,
                                   const ProbabilityVector& pihat, double slack = 1e-12);

double hilbert_metric(const Vector& x, const Vector& y);

// Birkhoff-Hopf cross-ratio form, any dim.
double birkhoff_coefficient(const StochasticMatrix& g);
// |sqrt(pq) - sqrt((1-p)(1-q))| / (sqrt(pq) + sqrt((1-p)(1-q)))
double birkhoff_closed_form2(DiagCoord c);
double dobrushin_coefficient(const StochasticMatrix& g);

struct MonotonicityStep {
  int from = 0;
  int to = 0;
  double abs_t_before = 0.0;
  double abs_t_after = 0.0;
  // sign of |T(to)| - |T(from)|
  int direction = 0;
  Divisibility divisible = Divisibility::Unknown;
  bool jump = false;
  bool consistent = true;
};

struct MonotonicityReport {
  std::vector<MonotonicityStep> steps;
  std::vector<int> recovery_steps;
  bool consistent = true;
};

// |T| increasing across a step must come with an indivisible or jump step.
MonotonicityReport monotonicity_report(const DynamicsCurve& c, double tol = kDefaultTol);

}  // namespace divcone
