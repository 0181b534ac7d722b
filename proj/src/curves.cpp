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

#include "divcone/curves.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace divcone {

std::string_view curve_kind_name(CurveKind k) {
  switch (k) {
    case CurveKind::Oscillator: return "oscillator";
    case CurveKind::Decay: return "decay";
    case CurveKind::CadlagCycle: return "cadlag";
    case CurveKind::ThreeConfigBlock: return "cos3";
    case CurveKind::Constant: return "constant";
    case CurveKind::Sampled: return "sampled";
  }
  return "unknown";
}

namespace {

void check_parameter(const CurveSpec& spec) {
  bool needs = spec.kind == CurveKind::Oscillator || spec.kind == CurveKind::Decay ||
               spec.kind == CurveKind::ThreeConfigBlock;
  if (needs && !(spec.parameter > 0.0 && std::isfinite(spec.parameter))) {
    throw Error(ErrorCode::InvalidCurve, "rate or frequency must be positive");
  }
}

}  // namespace

StochasticMatrix evaluate_curve(const CurveSpec& spec, double t) {
  check_parameter(spec);
  switch (spec.kind) {
    case CurveKind::Oscillator: {
      double c = std::cos(spec.parameter * t);
      return StochasticMatrix::from_diag({c * c, c * c});
    }
    case CurveKind::Decay: {
      double e = std::exp(-spec.parameter * t);
      return StochasticMatrix::from_diag({1.0, e});
    }
    case CurveKind::CadlagCycle: {
      double k = std::floor(t / 2.0);
      if (t < 2.0 * k + 1.0) {
        double a = std::exp2(-t + 2.0 * k);
        return StochasticMatrix::from_diag({a, a});
      }
      double b = 1.0 - std::exp2(-t + 2.0 * k + 1.0);
      return StochasticMatrix::from_diag({b, b});
    }
    case CurveKind::ThreeConfigBlock: {
      double c = std::cos(spec.parameter * t), s = std::sin(spec.parameter * t);
      Matrix m(3, 3);
      m << 1, 0, 0, 0, c * c, s * s, 0, s * s, c * c;
      return StochasticMatrix::validate(m, kDefaultTol);
    }
    case CurveKind::Constant:
      if (!spec.constant) throw Error(ErrorCode::InvalidCurve, "constant curve without a matrix");
      return *spec.constant;
    case CurveKind::Sampled: {
      if (!spec.sampled) throw Error(ErrorCode::InvalidCurve, "sampled curve without samples");
      const auto& ts = spec.sampled->times();
      auto it = std::upper_bound(ts.begin(), ts.end(), t);
      if (it == ts.begin()) throw Error(ErrorCode::DomainError, "time precedes the first sample");
      return spec.sampled->at(static_cast<int>(it - ts.begin()) - 1);
    }
  }
  throw Error(ErrorCode::InvalidCurve, "unknown curve kind");
}

std::vector<double> builtin_jumps(CurveKind kind, const TimeGrid& grid) {
  std::vector<double> out;
  if (kind != CurveKind::CadlagCycle) return out;
  for (double j = std::floor(grid.start) + 1.0; j <= grid.end; j += 1.0) out.push_back(j);
  return out;
}

std::vector<double> grid_times(const TimeGrid& grid, const std::vector<double>& jumps,
                               std::vector<bool>* flags) {
  if (!std::isfinite(grid.start) || !std::isfinite(grid.end) || !(grid.step > 0.0) ||
      !std::isfinite(grid.step) || grid.end < grid.start) {
    std::ostringstream os;
    os << "grid start=" << grid.start << " end=" << grid.end << " step=" << grid.step;
    throw Error(ErrorCode::InvalidGrid, os.str());
  }
  const double span = (grid.end - grid.start) / grid.step;
  if (span > 1e7) throw Error(ErrorCode::InvalidGrid, "grid has more than 1e7 samples");
  const double snap = grid.step * 1e-9;
  std::vector<double> ts;
  const auto count = static_cast<long long>(std::floor(span + 1e-9));
  for (long long k = 0; k <= count; ++k) ts.push_back(grid.start + static_cast<double>(k) * grid.step);
  const double eps = grid.step / kJumpOffsetDivisor;
  std::vector<double> marks;
  for (double j : jumps) {
    if (!(j > grid.start) || j > grid.end + snap) continue;
    marks.push_back(j);
    ts.push_back(j);
    if (j - eps > grid.start) ts.push_back(j - eps);
  }
  std::sort(ts.begin(), ts.end());
  std::vector<double> uniq;
  for (double t : ts) {
    if (!uniq.empty() && t - uniq.back() <= snap) {
      // Exact jump locations win over accumulated grid values.
      for (double j : marks) {
        if (std::abs(j - t) <= snap) uniq.back() = j;
      }
      continue;
    }
    uniq.push_back(t);
  }
  if (flags != nullptr) {
    flags->assign(uniq.size(), false);
    for (std::size_t k = 0; k < uniq.size(); ++k) {
      for (double j : marks) {
        if (std::abs(j - uniq[k]) <= snap) {
          uniq[k] = j;
          (*flags)[k] = true;
        }
      }
    }
  }
  return uniq;
}

DynamicsCurve generate(const CurveSpec& spec) {
  if (spec.kind == CurveKind::Sampled) {
    if (!spec.sampled) throw Error(ErrorCode::InvalidCurve, "sampled curve without samples");
    return *spec.sampled;
  }
  check_parameter(spec);
  std::vector<double> jumps = spec.grid.jumps;
  for (double j : builtin_jumps(spec.kind, spec.grid)) jumps.push_back(j);
  std::vector<bool> flags;
  std::vector<double> ts = grid_times(spec.grid, jumps, &flags);
  std::vector<StochasticMatrix> ms;
  ms.reserve(ts.size());
  for (double t : ts) ms.push_back(evaluate_curve(spec, t));
  return DynamicsCurve(std::move(ts), std::move(ms), std::move(flags));
}

}  // namespace divcone
