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

#include <algorithm>
#include <cmath>

#include "divcone/kernels.hpp"

namespace divcone::kernels::scalar {

void classify_pairs(const PairBatch& in, double tol, const PairResult& out) {
  for (std::size_t i = 0; i < in.n; ++i) {
    const double p = in.p[i], q = in.q[i], r = in.r[i], s = in.s[i];
    const double dl = (p + q) - 1.0;
    const double de = (r + s) - 1.0;
    const bool same = std::abs(p - r) <= tol && std::abs(q - s) <= tol;
    const bool near = std::abs(de) < kNearSingular;

    if (same) {
      out.status[i] = kDivisible;
      out.branch[i] = near ? kDegenerateBoth : kInvertiblePast;
      out.violation[i] = 0.0;
      out.c11[i] = 1.0;
      out.c12[i] = 0.0;
      out.c21[i] = 0.0;
      out.c22[i] = 1.0;
      continue;
    }
    if (near) {
      const double adl = std::abs(dl);
      const bool deg = adl <= tol;
      out.status[i] = deg ? kDivisible : kIndivisible;
      out.branch[i] = deg ? kDegenerateBoth : kDegeneratePast;
      out.violation[i] = deg ? 0.0 : adl;
      out.c11[i] = p;
      out.c12[i] = 1.0 - q;
      out.c21[i] = 1.0 - p;
      out.c22[i] = q;
      continue;
    }
    const double nq = 1.0 - q, nr = 1.0 - r, np = 1.0 - p, ns = 1.0 - s;
    const double c11 = (p * s - nq * nr) / de;
    const double c12 = (r * nq - p * ns) / de;
    const double c21 = (s * np - q * nr) / de;
    const double c22 = (q * r - np * ns) / de;
    const double lo = std::min(std::min(c11, c12), std::min(c21, c22));
    const double hi = std::max(std::max(c11, c12), std::max(c21, c22));
    const double v = std::max(std::max(0.0 - lo, hi - 1.0), 0.0);
    out.status[i] = v <= tol ? kDivisible : kIndivisible;
    out.branch[i] = kInvertiblePast;
    out.violation[i] = v;
    out.c11[i] = c11;
    out.c12[i] = c12;
    out.c21[i] = c21;
    out.c22[i] = c22;
  }
}

void region_mask(const HalfPlaneSet& set, double tol, const double* x, const double* y,
                 std::size_t n, std::uint8_t* inside) {
  for (std::size_t i = 0; i < n; ++i) {
    const double slack = tol * std::abs(set.sa * x[i] + set.sb * y[i] + set.sc);
    bool ok = true;
    for (int k = 0; k < set.count; ++k) {
      const double v = set.a[k] * x[i] + set.b[k] * y[i] + set.c[k];
      ok = ok && (set.strict[k] ? v > 0.0 : v >= -slack);
    }
    inside[i] = ok ? 1 : 0;
  }
}

}  // namespace divcone::kernels::scalar
