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

#include <cstddef>
#include <cstdint>
#include <string_view>

// Batched 2x2 kernels. Every entry point has a scalar reference and an AVX2
// variant; both evaluate the same operation sequence without contraction, so
// results agree bitwise.
namespace divcone::kernels {

inline constexpr double kNearSingular = 1e-6;
inline constexpr int kMaxHalfPlanes = 12;

enum class Isa { Scalar, Avx2 };

std::string_view isa_name(Isa isa);
bool avx2_available();
// Honors DIVCONE_FORCE_SCALAR and set_isa_override.
Isa active_isa();
void set_isa_override(Isa isa);
void clear_isa_override();

enum Status : std::uint8_t { kIndivisible = 0, kDivisible = 1 };
enum Branch : std::uint8_t { kInvertiblePast = 0, kDegeneratePast = 1, kDegenerateBoth = 2 };

// Later diagonal (p, q), earlier diagonal (r, s); n lanes.
struct PairBatch {
  const double* p = nullptr;
  const double* q = nullptr;
  const double* r = nullptr;
  const double* s = nullptr;
  std::size_t n = 0;
};

// Candidate transition entries, row-major c11 c12 c21 c22.
struct PairResult {
  std::uint8_t* status = nullptr;
  std::uint8_t* branch = nullptr;
  double* violation = nullptr;
  double* c11 = nullptr;
  double* c12 = nullptr;
  double* c21 = nullptr;
  double* c22 = nullptr;
};

struct HalfPlaneSet {
  int count = 0;
  double a[kMaxHalfPlanes] = {};
  double b[kMaxHalfPlanes] = {};
  double c[kMaxHalfPlanes] = {};
  bool strict[kMaxHalfPlanes] = {};
  double sa = 0.0;
  double sb = 0.0;
  double sc = 1.0;
};

void classify_pairs(const PairBatch& in, double tol, const PairResult& out);
void classify_pairs(Isa isa, const PairBatch& in, double tol, const PairResult& out);

void region_mask(const HalfPlaneSet& set, double tol, const double* x, const double* y,
                 std::size_t n, std::uint8_t* inside);
void region_mask(Isa isa, const HalfPlaneSet& set, double tol, const double* x, const double* y,
                 std::size_t n, std::uint8_t* inside);

namespace scalar {
void classify_pairs(const PairBatch& in, double tol, const PairResult& out);
void region_mask(const HalfPlaneSet& set, double tol, const double* x, const double* y,
                 std::size_t n, std::uint8_t* inside);
}  // namespace scalar

namespace avx2 {
void classify_pairs(const PairBatch& in, double tol, const PairResult& out);
void region_mask(const HalfPlaneSet& set, double tol, const double* x, const double* y,
                 std::size_t n, std::uint8_t* inside);
}  // namespace avx2

}  // namespace divcone::kernels
