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

#include <utility>
#include <vector>

#include "divcone/core.hpp"

namespace divcone {

inline constexpr int kMaxOrbitDim = 8;

// T_(in, out)(G) = out * G * in^{-1}
struct PermAction {
  PermutationMatrix sigma_in;
  PermutationMatrix sigma_out;
};

// compose(outer, inner) acts as outer after inner.
PermAction compose(const PermAction& outer, const PermAction& inner);
bool continuity_constraint(const PermAction& a);

// Row relabel: (sigma * M)(sigma[i], j) = M(i, j).
template <class Scalar>
Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> permute_rows(
    const PermutationMatrix& sigma, const Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>& m) {
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> out(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i) out.row(sigma[static_cast<int>(i)]) = m.row(i);
  return out;
}

// Column relabel: (M * sigma^{-1})(i, sigma[j]) = M(i, j).
template <class Scalar>
Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> permute_cols(
    const PermutationMatrix& sigma, const Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>& m) {
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> out(m.rows(), m.cols());
  for (Eigen::Index j = 0; j < m.cols(); ++j) out.col(sigma[static_cast<int>(j)]) = m.col(j);
  return out;
}

template <class Scalar>
Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> act(
    const PermAction& a, const Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>& g) {
  if (a.sigma_in.dim() != g.cols() || a.sigma_out.dim() != g.rows()) {
    throw Error(ErrorCode::DimensionMismatch, "permutation action and matrix differ in dim");
  }
  return permute_rows(a.sigma_out, permute_cols(a.sigma_in, g));
}

StochasticMatrix act(const PermAction& a, const StochasticMatrix& g);

template <class Scalar>
using DivisorPair = std::pair<Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>,
                              Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>>;

// All (transition * sigma^{-1}, sigma * past), permutations in lexicographic order.
template <class Scalar>
std::vector<DivisorPair<Scalar>> divisor_orbit(
    const Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>& transition,
    const Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>& past) {
  if (transition.rows() != transition.cols() || past.rows() != past.cols() ||
      transition.rows() != past.rows()) {
    throw Error(ErrorCode::DimensionMismatch, "divisor pair shapes differ");
  }
  const int n = static_cast<int>(past.rows());
  if (n > kMaxOrbitDim) throw Error(ErrorCode::TooLarge, "orbit enumeration is capped at N = 8");
  std::vector<DivisorPair<Scalar>> out;
  for (const PermutationMatrix& sigma : all_permutations(n)) {
    out.emplace_back(permute_cols(sigma, transition), permute_rows(sigma, past));
  }
  return out;
}

struct DivisorOrbit {
  std::vector<std::pair<StochasticMatrix, StochasticMatrix>> pairs;
  int distinct_pairs = 0;
};

DivisorOrbit divisor_orbit(const StochasticMatrix& transition, const StochasticMatrix& past);

}  // namespace divcone
