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

#include <iosfwd>
#include <string>
#include <vector>

#include "divcone/curves.hpp"

namespace divcone::cli {

enum ExitCode : int { kOk = 0, kIndivisible = 1, kError = 2, kUndecided = 3 };

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// "kind:key=value,..." or a CSV path.
DynamicsCurve parse_curve(const std::string& spec);
CurveSpec parse_curve_spec(const std::string& spec);

}  // namespace divcone::cli
