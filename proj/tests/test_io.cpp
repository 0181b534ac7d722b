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

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <sstream>

#include "divcone/curves.hpp"
#include "divcone/geometry.hpp"
#include "divcone/io.hpp"
#include "oracles.hpp"

namespace divcone::io {
namespace {

TEST(Json, DoublesRoundTripLosslessly) {
  oracle::Rng rng(3);
  for (int i = 0; i < 10000; ++i) {
    double v = rng.uniform(-1, 1) * std::pow(10.0, rng.integer(-300, 300));
    Json j = Json::parse(dump(Json{{"v", v}}));
    EXPECT_EQ(j["v"].get<double>(), v);
  }
  Json j = Json::parse(dump(Json{{"v", 0.1}}));
  EXPECT_EQ(j["v"].get<double>(), 0.1);
}

TEST(Json, DocumentLayout) {
  Json d = document("divide", Json::array({"a"}), "verdict", Json{{"x", 1}});
  EXPECT_EQ(d["schema_version"], "1");
  EXPECT_EQ(d["command"]["name"], "divide");
  EXPECT_EQ(d["payload"]["kind"], "verdict");
  EXPECT_EQ(d["payload"]["x"], 1);
  std::string text = dump(d);
  EXPECT_EQ(text.back(), '\n');
  EXPECT_EQ(text.find("schema_version"), text.find('"') + 1);
}

TEST(Json, VerdictAndMatrix) {
  DivisionVerdict v = divide(StochasticMatrix::from_diag({0.7, 0.6}), StochasticMatrix::from_diag({0.9, 0.8}));
  Json j = to_json(v);
  EXPECT_EQ(j["status"], "divisible");
  EXPECT_EQ(j["branch"], "invertible_past");
  EXPECT_NEAR(j["transition"]["diag"]["p"].get<double>(), 0.52 / 0.7, 1e-12);
  EXPECT_EQ(j["transition"]["entries"].size(), 2u);
  DivisionVerdict w = divide(StochasticMatrix::from_diag({0.5, 0.2}), StochasticMatrix::from_diag({0.6, 0.7}));
  EXPECT_TRUE(to_json(w)["transition"].is_null());
}

TEST(Json, ReportTable) {
  CurveSpec s;
  s.grid = {0, 1, 0.25, {}};
  DynamicsCurve c = generate(s);
  Json j = to_json(analyze_curve(c), c);
  ASSERT_EQ(j["table"].size(), 5u);
  EXPECT_EQ(j["table"][0], "D");
  EXPECT_EQ(j["table"][4].get<std::string>().size(), 5u);
  EXPECT_EQ(j["last_full_divisible_past"]["time"], 0.5);
  int total = j["counts"]["divisible"].get<int>() + j["counts"]["indivisible"].get<int>() +
              j["counts"]["unknown"].get<int>();
  EXPECT_EQ(total, 15);
}

TEST(Csv, FormatDouble) {
  EXPECT_EQ(format_double(0.1), "0.10000000000000001");
  EXPECT_EQ(format_double(1.0), "1");
  EXPECT_EQ(std::stod(format_double(1.0 / 3.0)), 1.0 / 3.0);
}

TEST(Csv, CurveRoundTrip) {
  CurveSpec s;
  s.kind = CurveKind::CadlagCycle;
  s.grid = {0, 2, 0.125, {}};
  DynamicsCurve c = generate(s);
  std::istringstream in(curve_csv(c));
  DynamicsCurve back = parse_curve_csv(in);
  ASSERT_EQ(back.size(), c.size());
  for (int k = 0; k < c.size(); ++k) {
    EXPECT_EQ(back.time(k), c.time(k));
    EXPECT_EQ(back.is_jump(k), c.is_jump(k));
    EXPECT_LE(max_abs_diff(back.at(k).matrix(), c.at(k).matrix()), 0.0);
  }
}

TEST(Csv, ThreeByThreeHeader) {
  CurveSpec s;
  s.kind = CurveKind::ThreeConfigBlock;
  s.parameter = 1;
  s.grid = {0, 0.1, 0.05, {}};
  std::string text = curve_csv(generate(s));
  EXPECT_EQ(text.substr(0, text.find('\n')), "t,g11,g12,g13,g21,g22,g23,g31,g32,g33,jump");
  std::istringstream in(text);
  EXPECT_EQ(parse_curve_csv(in).dim(), 3);
}

TEST(Csv, CurveErrors) {
  for (const char* bad : {"x,g11,g12,g21,g22\n0,1,0,0,1\n", "t,g11,g12,g21\n0,1,0,0\n",
                          "t,g11,g12,g21,g22\n0,1,0,0\n", "t,g11,g12,g21,g22\n0,1,0,zero,1\n"}) {
    std::istringstream in(bad);
    try {
      parse_curve_csv(in);
      FAIL() << bad;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::ParseError);
    }
  }
  std::istringstream in("t,g11,g12,g21,g22\n0,1,0,0,1\n1,0.7,0.4,0.3,0.6\n");
  EXPECT_EQ(parse_curve_csv(in).size(), 2);
}

TEST(Csv, SamplesHeader) {
  auto s = sample_divisors({0.7, 0.6}, 3, 1);
  std::string text = samples_csv(s);
  EXPECT_EQ(text.substr(0, 8), "r,s,u,v\n");
  EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 4);
}

TEST(MatrixFile, LinesAreColumns) {
  std::istringstream in("# diag (0.7, 0.6)\n0.7,0.3\n0.4,0.6\n");
  Matrix m = parse_matrix(in);
  EXPECT_EQ(m(0, 0), 0.7);
  EXPECT_EQ(m(1, 0), 0.3);
  EXPECT_EQ(m(0, 1), 0.4);
  std::istringstream bad("0.7,0.3\n0.4\n");
  EXPECT_THROW(parse_matrix(bad), Error);
  EXPECT_THROW(read_matrix_file("/nonexistent/divcone.csv"), Error);
}

TEST(Svg, RegionsAndColours) {
  DiagCoord a{0.7, 0.6};
  RegionPair p = past_regions(a), t = transition_regions(a);
  StochasticMatrix g = StochasticMatrix::from_diag(a);
  std::string svg = regions_svg(a, {p.upper, p.lower, t.upper, t.lower, future_square(g), image_square(g)});
  EXPECT_NE(svg.find("viewBox=\"0 0 512 512\""), std::string::npos);
  auto count = [&](const std::string& needle) {
    std::size_t n = 0;
    for (auto pos = svg.find(needle); pos != std::string::npos; pos = svg.find(needle, pos + 1)) ++n;
    return n;
  };
  EXPECT_EQ(count("fill=\"#9e9e9e\""), 2u);
  EXPECT_EQ(count("fill=\"#00bcd4\""), 2u);
  EXPECT_EQ(count("fill=\"#ffeb3b\""), 1u);
  EXPECT_EQ(count("fill=\"#e040fb\""), 1u);
  EXPECT_EQ(count("stroke=\"#ff9800\""), 1u);
  EXPECT_EQ(svg.substr(svg.size() - 7), "</svg>\n");
}

}  // namespace
}  // namespace divcone::io
