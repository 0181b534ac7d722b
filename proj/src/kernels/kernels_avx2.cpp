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

#include "divcone/kernels.hpp"

#if defined(DIVCONE_HAVE_AVX2)
#include <immintrin.h>
#endif

namespace divcone::kernels::avx2 {

#if defined(DIVCONE_HAVE_AVX2)

namespace {

inline __m256d vabs(__m256d x) { return _mm256_andnot_pd(_mm256_set1_pd(-0.0), x); }

inline __m256d select(__m256d mask, __m256d if_true, __m256d if_false) {
  return _mm256_blendv_pd(if_false, if_true, mask);
}

}  // namespace

void classify_pairs(const PairBatch& in, double tol, const PairResult& out) {
  const __m256d one = _mm256_set1_pd(1.0);
  const __m256d zero = _mm256_setzero_pd();
  const __m256d vtol = _mm256_set1_pd(tol);
  const __m256d vnear = _mm256_set1_pd(kNearSingular);
  std::size_t i = 0;
  for (; i + 4 <= in.n; i += 4) {
    const __m256d p = _mm256_loadu_pd(in.p + i);
    const __m256d q = _mm256_loadu_pd(in.q + i);
    const __m256d r = _mm256_loadu_pd(in.r + i);
    const __m256d s = _mm256_loadu_pd(in.s + i);
    const __m256d dl = _mm256_sub_pd(_mm256_add_pd(p, q), one);
    const __m256d de = _mm256_sub_pd(_mm256_add_pd(r, s), one);
    const __m256d same =
        _mm256_and_pd(_mm256_cmp_pd(vabs(_mm256_sub_pd(p, r)), vtol, _CMP_LE_OQ),
                      _mm256_cmp_pd(vabs(_mm256_sub_pd(q, s)), vtol, _CMP_LE_OQ));
    const __m256d near = _mm256_cmp_pd(vabs(de), vnear, _CMP_LT_OQ);

    const __m256d np = _mm256_sub_pd(one, p);
    const __m256d nq = _mm256_sub_pd(one, q);
    const __m256d nr = _mm256_sub_pd(one, r);
    const __m256d ns = _mm256_sub_pd(one, s);
    const __m256d c11 = _mm256_div_pd(_mm256_sub_pd(_mm256_mul_pd(p, s), _mm256_mul_pd(nq, nr)), de);
    const __m256d c12 = _mm256_div_pd(_mm256_sub_pd(_mm256_mul_pd(r, nq), _mm256_mul_pd(p, ns)), de);
    const __m256d c21 = _mm256_div_pd(_mm256_sub_pd(_mm256_mul_pd(s, np), _mm256_mul_pd(q, nr)), de);
    const __m256d c22 = _mm256_div_pd(_mm256_sub_pd(_mm256_mul_pd(q, r), _mm256_mul_pd(np, ns)), de);
    const __m256d lo = _mm256_min_pd(_mm256_min_pd(c11, c12), _mm256_min_pd(c21, c22));
    const __m256d hi = _mm256_max_pd(_mm256_max_pd(c11, c12), _mm256_max_pd(c21, c22));
    const __m256d v =
        _mm256_max_pd(_mm256_max_pd(_mm256_sub_pd(zero, lo), _mm256_sub_pd(hi, one)), zero);
    const __m256d inv_ok = _mm256_cmp_pd(v, vtol, _CMP_LE_OQ);

    const __m256d adl = vabs(dl);
    const __m256d deg = _mm256_cmp_pd(adl, vtol, _CMP_LE_OQ);

    const __m256d viol = select(same, zero, select(near, select(deg, zero, adl), v));
    const __m256d o11 = select(same, one, select(near, p, c11));
    const __m256d o12 = select(same, zero, select(near, nq, c12));
    const __m256d o21 = select(same, zero, select(near, np, c21));
    const __m256d o22 = select(same, one, select(near, q, c22));
    _mm256_storeu_pd(out.violation + i, viol);
    _mm256_storeu_pd(out.c11 + i, o11);
    _mm256_storeu_pd(out.c12 + i, o12);
    _mm256_storeu_pd(out.c21 + i, o21);
    _mm256_storeu_pd(out.c22 + i, o22);

    const int m_same = _mm256_movemask_pd(same);
    const int m_near = _mm256_movemask_pd(near);
    const int m_ok = _mm256_movemask_pd(inv_ok);
    const int m_deg = _mm256_movemask_pd(deg);
    for (int k = 0; k < 4; ++k) {
      const int bit = 1 << k;
      std::uint8_t st, br;
      if (m_same & bit) {
        st = kDivisible;
        br = (m_near & bit) ? kDegenerateBoth : kInvertiblePast;
      } else if (m_near & bit) {
        st = (m_deg & bit) ? kDivisible : kIndivisible;
        br = (m_deg & bit) ? kDegenerateBoth : kDegeneratePast;
      } else {
        st = (m_ok & bit) ? kDivisible : kIndivisible;
        br = kInvertiblePast;
      }
      out.status[i + k] = st;
      out.branch[i + k] = br;
    }
  }
  if (i < in.n) {
    PairBatch tail{in.p + i, in.q + i, in.r + i, in.s + i, in.n - i};
    PairResult rest{out.status + i, out.branch + i, out.violation + i, out.c11 + i,
                    out.c12 + i,    out.c21 + i,    out.c22 + i};
    scalar::classify_pairs(tail, tol, rest);
  }
}

void region_mask(const HalfPlaneSet& set, double tol, const double* x, const double* y,
                 std::size_t n, std::uint8_t* inside) {
  const __m256d vtol = _mm256_set1_pd(tol);
  const __m256d zero = _mm256_setzero_pd();
  const __m256d sa = _mm256_set1_pd(set.sa);
  const __m256d sb = _mm256_set1_pd(set.sb);
  const __m256d sc = _mm256_set1_pd(set.sc);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d vx = _mm256_loadu_pd(x + i);
    const __m256d vy = _mm256_loadu_pd(y + i);
    const __m256d scale =
        _mm256_add_pd(_mm256_add_pd(_mm256_mul_pd(sa, vx), _mm256_mul_pd(sb, vy)), sc);
    const __m256d neg_slack = _mm256_sub_pd(zero, _mm256_mul_pd(vtol, vabs(scale)));
    __m256d ok = _mm256_castsi256_pd(_mm256_set1_epi64x(-1));
    for (int k = 0; k < set.count; ++k) {
      const __m256d v = _mm256_add_pd(
          _mm256_add_pd(_mm256_mul_pd(_mm256_set1_pd(set.a[k]), vx),
                        _mm256_mul_pd(_mm256_set1_pd(set.b[k]), vy)),
          _mm256_set1_pd(set.c[k]));
      const __m256d pass = set.strict[k] ? _mm256_cmp_pd(v, zero, _CMP_GT_OQ)
                                         : _mm256_cmp_pd(v, neg_slack, _CMP_GE_OQ);
      ok = _mm256_and_pd(ok, pass);
    }
    const int m = _mm256_movemask_pd(ok);
    for (int k = 0; k < 4; ++k) inside[i + k] = (m >> k) & 1;
  }
  if (i < n) scalar::region_mask(set, tol, x + i, y + i, n - i, inside + i);
}

#else

void classify_pairs(const PairBatch& in, double tol, const PairResult& out) {
  scalar::classify_pairs(in, tol, out);
}

void region_mask(const HalfPlaneSet& set, double tol, const double* x, const double* y,
                 std::size_t n, std::uint8_t* inside) {
  scalar::region_mask(set, tol, x, y, n, inside);
}

#endif

}  // namespace divcone::kernels::avx2
