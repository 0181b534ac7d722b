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

#include "divcone/symmetry.hpp"

namespace divcone {

PermAction compose(const PermAction& outer, const PermAction& inner) {
  return {outer.sigma_in * inner.sigma_in, outer.sigma_out * inner.sigma_out};
}

bool continuity_constraint(const PermAction& a) { return a.sigma_in == a.sigma_out; }

StochasticMatrix act(const PermAction& a, const StochasticMatrix& g) {
  return StochasticMatrix::validate(act<double>(a, g.matrix()), kDefaultTol);
}

DivisorOrbit divisor_orbit(const StochasticMatrix& transition, const StochasticMatrix& past) {
  DivisorOrbit out;
  for (auto& [t, p] : divisor_orbit<double>(transition.matrix(), past.matrix())) {
    out.pairs.emplace_back(StochasticMatrix::validate(t, kDefaultTol),
                           StochasticMatrix::validate(p, kDefaultTol));
  }
  for (std::size_t i = 0; i < out.pairs.size(); ++i) {
    bool seen = false;
    for (std::size_t j = 0; j < i && !seen; ++j) {
      seen = max_abs_diff(out.pairs[i].first.matrix(), out.pairs[j].first.matrix()) <= kIdentityTol &&
             max_abs_diff(out.pairs[i].second.matrix(), out.pairs[j].second.matrix()) <= kIdentityTol;
    }
    if (!seen) ++out.distinct_pairs;
  }
  return out;
}

}  // namespace divcone
