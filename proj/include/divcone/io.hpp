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

#include "json.hpp"

#include "divcone/coarse.hpp"
#include "divcone/core.hpp"
#include "divcone/divisibility.hpp"
#include "divcone/geometry.hpp"
#include "divcone/information.hpp"

namespace divcone::io {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "1";

Json to_json(const Matrix& m);
Json to_json(const StochasticMatrix& g);
Json to_json(DiagCoord c);
Json to_json(const Region& r);
Json to_json(const DivisionVerdict& v);
Json to_json(const DivisionEventReport& rep, const DynamicsCurve& c);
Json to_json(const MonotonicityReport& rep);
Json to_json(const TransferReport& rep);
Json curve_json(const DynamicsCurve& c);

Json document(const std::string& command, Json args, const std::string& kind, Json payload);
std::string dump(const Json& j);

std::string format_double(double v);

std::string samples_csv(const std::vector<DivisorSample>& samples);
std::string curve_csv(const DynamicsCurve& c);
// Header "t,g11,g12,...", entries row-major; an optional trailing "jump" column.
DynamicsCurve parse_curve_csv(std::istream& in);
DynamicsCurve read_curve_csv(const std::string& path);

// N lines of N comma-separated entries; line j holds column j.
Matrix parse_matrix(std::istream& in);
Matrix read_matrix_file(const std::string& path);

std::string regions_svg(DiagCoord anchor, const std::vector<Region>& regions);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace divcone::io
