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

#include <atomic>
#include <cstdlib>
#include <cstring>

#include "divcone/kernels.hpp"

namespace divcone::kernels {

namespace {
std::atomic<int> g_override{-1};
}

std::string_view isa_name(Isa isa) { return isa == Isa::Avx2 ? "avx2" : "scalar"; }

bool avx2_available() {
#if defined(DIVCONE_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

Isa active_isa() {
  int o = g_override.load(std::memory_order_relaxed);
  if (o >= 0) return (o == 1 && avx2_available()) ? Isa::Avx2 : Isa::Scalar;
  const char* env = std::getenv("DIVCONE_FORCE_SCALAR");
  if (env != nullptr && *env != '\0' && std::strcmp(env, "0") != 0) return Isa::Scalar;
  return avx2_available() ? Isa::Avx2 : Isa::Scalar;
}

void set_isa_override(Isa isa) { g_override.store(isa == Isa::Avx2 ? 1 : 0); }
void clear_isa_override() { g_override.store(-1); }

void classify_pairs(Isa isa, const PairBatch& in, double tol, const PairResult& out) {
  if (isa == Isa::Avx2 && avx2_available()) {
    avx2::classify_pairs(in, tol, out);
  } else {
    scalar::classify_pairs(in, tol, out);
  }
}

void classify_pairs(const PairBatch& in, double tol, const PairResult& out) {
  classify_pairs(active_isa(), in, tol, out);
}

void region_mask(Isa isa, const HalfPlaneSet& set, double tol, const double* x, const double* y,
                 std::size_t n, std::uint8_t* inside) {
  if (isa == Isa::Avx2 && avx2_available()) {
    avx2::region_mask(set, tol, x, y, n, inside);
  } else {
    scalar::region_mask(set, tol, x, y, n, inside);
  }
}

void region_mask(const HalfPlaneSet& set, double tol, const double* x, const double* y,
                 std::size_t n, std::uint8_t* inside) {
  region_mask(active_isa(), set, tol, x, y, n, inside);
}

}  // namespace divcone::kernels
