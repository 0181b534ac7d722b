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

// Reference computations kept apart from the library: plain 2x2 algebra in
// long double, direct sums, closed forms.

#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <vector>

namespace oracle {

using Mat2 = std::array<std::array<long double, 2>, 2>;

inline Mat2 diag2(long double p, long double q) { return {{{p, 1 - q}, {1 - p, q}}}; }

inline Mat2 mul(const Mat2& a, const Mat2& b) {
  Mat2 c{};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) c[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
  return c;
}

inline long double det(const Mat2& a) { return a[0][0] * a[1][1] - a[0][1] * a[1][0]; }

inline Mat2 inv(const Mat2& a) {
  long double d = det(a);
  return {{{a[1][1] / d, -a[0][1] / d}, {-a[1][0] / d, a[0][0] / d}}};
}

// later * earlier^{-1}, entries checked against [0,1] with slack.
inline bool stochastic(const Mat2& m, long double tol) {
  for (const auto& row : m)
    for (long double v : row)
      if (v < -tol || v > 1 + tol) return false;
  return true;
}

inline bool divisible_direct(double p, double q, double r, double s, double tol, Mat2* out = nullptr) {
  Mat2 t = mul(diag2(p, q), inv(diag2(r, s)));
  if (out) *out = t;
  return stochastic(t, tol);
}

inline long double kl(const std::vector<double>& a, const std::vector<double>& b) {
  long double s = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > 0) s += a[i] * std::log(static_cast<long double>(a[i]) / b[i]);
  return s;
}

// Reduced cos3 curve under grouping {0,1},{2} stays divisible up to this time.
inline double coarse_window(double py, double omega) {
  return std::acos(std::sqrt((1 - py) / (2 - py))) / omega;
}

// Cross-ratio contraction coefficient of a positive 2x2 matrix.
inline double birkhoff2(double a, double b, double c, double d) {
  double phi = (a * d) / (b * c);
  if (phi > 1) phi = 1 / phi;
  double s = std::sqrt(phi);
  return (1 - s) / (1 + s);
}

struct Rng {
  std::mt19937_64 gen;
  explicit Rng(std::uint64_t seed) : gen(seed) {}
  double uniform(double lo = 0.0, double hi = 1.0) {
    return std::uniform_real_distribution<double>(lo, hi)(gen);
  }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(gen); }
};

}  // namespace oracle
