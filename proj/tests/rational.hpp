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

#include <type_traits>

#include <Eigen/Dense>
#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/eigen.hpp>

#include "oracles.hpp"

// Eigen 3.4 matrices typedef const_iterator as void, which Boost 1.74's
// byte-container probe cannot digest.
namespace boost::multiprecision::detail {
template <class S, int R, int C, int O, int MR, int MC>
struct is_byte_container<Eigen::Matrix<S, R, C, O, MR, MC>> : std::false_type {};
template <class D>
struct is_byte_container<Eigen::MatrixBase<D>> : std::false_type {};
template <class D>
struct is_byte_container<Eigen::DenseBase<D>> : std::false_type {};
template <class L, class R, int O>
struct is_byte_container<Eigen::Product<L, R, O>> : std::false_type {};
}  // namespace boost::multiprecision::detail

namespace oracle {

using Rational = boost::multiprecision::cpp_rational;
using QMatrix = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;

// Random column-stochastic matrix with entries k / den.
inline QMatrix rational_stochastic(int n, int den, Rng& rng) {
  QMatrix m(n, n);
  for (int j = 0; j < n; ++j) {
    int left = den;
    for (int i = 0; i < n - 1; ++i) {
      int k = rng.integer(0, left);
      m(i, j) = Rational(k, den);
      left -= k;
    }
    m(n - 1, j) = Rational(left, den);
  }
  return m;
}

}  // namespace oracle
