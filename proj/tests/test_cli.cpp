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

#include <sys/wait.h>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include "divcone/cli.hpp"
#include "divcone/io.hpp"

namespace divcone::cli {
namespace {

namespace fs = std::filesystem;
using io::Json;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

Json payload(const Result& r) { return Json::parse(r.out)["payload"]; }

fs::path scratch(const std::string& name) {
  fs::path dir = fs::temp_directory_path() / "divcone_cli_test";
  fs::create_directories(dir);
  return dir / name;
}

void write(const fs::path& p, const std::string& text) { io::write_file(p.string(), text); }

// DIVCONE_UPDATE_GOLDEN=1 rewrites the stored files.
void expect_golden(const std::string& name, const std::string& actual) {
  const fs::path path = fs::path(DIVCONE_GOLDEN_DIR) / name;
  if (std::getenv("DIVCONE_UPDATE_GOLDEN") != nullptr) {
    io::write_file(path.string(), actual);
    return;
  }
  ASSERT_TRUE(fs::exists(path)) << path;
  EXPECT_EQ(io::read_file(path.string()), actual) << name;
}

TEST(Cli, HelpAndParseErrors) {
  EXPECT_EQ(call({"--help"}).code, kOk);
  EXPECT_EQ(call({"divide", "--help"}).code, kOk);
  EXPECT_EQ(call({}).code, kError);
  EXPECT_EQ(call({"bogus"}).code, kError);
  Result r = call({"divide", "--later", "0.7,0.6"});
  EXPECT_EQ(r.code, kError);
  EXPECT_TRUE(r.out.empty());
  EXPECT_FALSE(r.err.empty());
  EXPECT_EQ(call({"divide", "--later", "0.7", "--earlier", "0.9,0.8"}).code, kError);
  EXPECT_EQ(call({"divide", "--later", "1.2,0.6", "--earlier", "0.9,0.8"}).code, kError);
  EXPECT_EQ(call({"sample", "--anchor", "0.7,0.6", "--n", "0"}).code, kError);
  EXPECT_EQ(call({"analyze", "--curve", "nosuch:freq=1"}).code, kError);
}

TEST(Cli, DivideExitCodes) {
  Result d = call({"divide", "--later", "0.7,0.6", "--earlier", "0.9,0.8"});
  ASSERT_EQ(d.code, kOk) << d.err;
  Json p = payload(d);
  EXPECT_EQ(p["kind"], "verdict");
  EXPECT_EQ(p["status"], "divisible");
  EXPECT_NEAR(p["transition"]["diag"]["p"].get<double>(), 0.52 / 0.7, 1e-12);
  EXPECT_NEAR(p["transition"]["diag"]["q"].get<double>(), 0.48 / 0.7, 1e-12);

  EXPECT_EQ(call({"divide", "--later", "0.5,0.2", "--earlier", "0.6,0.7"}).code, kIndivisible);
  EXPECT_EQ(call({"divide", "--later", "0.7,0.6", "--earlier", "0.2,0.1"}).code, kOk);

  fs::path later = scratch("later3.csv"), earlier = scratch("earlier3.csv");
  write(later, "0.8,0.1,0.1\n0.1,0.8,0.1\n0.1,0.1,0.8\n");
  write(earlier, "0.5,0.5,0\n0.5,0.5,0\n0.5,0.5,0\n");
  Result u = call({"divide", "--later", later.string(), "--earlier", earlier.string()});
  EXPECT_EQ(u.code, kUndecided);
  EXPECT_EQ(payload(u)["branch"], "singular_past");
  EXPECT_EQ(call({"divide", "--later", later.string(), "--earlier", later.string()}).code, kOk);
}

TEST(Cli, CurveAtTime) {
  Result r = call({"divide", "--later", "oscillator@0.75", "--earlier", "oscillator@0.6"});
  EXPECT_EQ(r.code, kIndivisible);
  r = call({"divide", "--later", "oscillator@0.25", "--earlier", "oscillator@0.125"});
  ASSERT_EQ(r.code, kOk);
  EXPECT_NEAR(payload(r)["transition"]["diag"]["p"].get<double>(), 0.8826834323650898, 1e-9);
}

TEST(Cli, TolerancePrecedence) {
  // (0.5, 0.5) is degenerate only for tol >= 1e-3.
  auto status = [](std::vector<std::string> extra) {
    std::vector<std::string> a = {"divide", "--later", "0.4995,0.5", "--earlier", "0.7,0.6"};
    a.insert(a.end(), extra.begin(), extra.end());
    Result r = call(a);
    return std::make_pair(r.code, payload(r)["tol"].get<double>());
  };
  unsetenv("DIVCONE_TOL");
  EXPECT_EQ(status({}).second, 1e-9);
  setenv("DIVCONE_TOL", "1e-6", 1);
  EXPECT_EQ(status({}).second, 1e-6);
  EXPECT_EQ(status({"--tol", "1e-4"}).second, 1e-4);
  setenv("DIVCONE_TOL", "garbage", 1);
  EXPECT_EQ(call({"divide", "--later", "0.7,0.6", "--earlier", "0.9,0.8"}).code, kError);
  unsetenv("DIVCONE_TOL");
}

TEST(Cli, RegionsPayload) {
  fs::path svg = scratch("regions.svg");
  Result r = call({"regions", "--anchor", "0.7,0.6", "--svg", svg.string()});
  ASSERT_EQ(r.code, kOk) << r.err;
  Json p = payload(r);
  EXPECT_FALSE(p["degenerate"].get<bool>());
  ASSERT_EQ(p["regions"].size(), 6u);
  std::map<std::string, int> names;
  for (const Json& g : p["regions"]) ++names[g["name"].get<std::string>()];
  EXPECT_EQ(names.size(), 6u);
  for (const Json& g : p["regions"]) EXPECT_GT(g["area"].get<double>(), 0.0);
  EXPECT_EQ(p["colors"]["past_cone"], "gray");
  EXPECT_EQ(p["colors"]["transition_rect"], "cyan");
  EXPECT_EQ(p["colors"]["future_set"], "yellow");
  EXPECT_EQ(p["colors"]["image_parallelogram"], "magenta");
  std::string text = io::read_file(svg.string());
  EXPECT_NE(text.find("#00bcd4"), std::string::npos);
  expect_golden("regions_0.7_0.6.json", r.out);
  expect_golden("regions_0.7_0.6.svg", text);
}

TEST(Cli, RegionsDegenerateAndCorner) {
  Json p = payload(call({"regions", "--anchor", "0.5,0.5"}));
  EXPECT_TRUE(p["degenerate"].get<bool>());
  EXPECT_TRUE(p["regions"][0]["full_square"].get<bool>());
  EXPECT_TRUE(p["regions"][1]["full_square"].get<bool>());
  EXPECT_NEAR(p["regions"][0]["area"].get<double>(), 1.0, 1e-12);
  Json c = payload(call({"regions", "--anchor", "1,1"}));
  EXPECT_NEAR(c["regions"][4]["area"].get<double>(), 1.0, 1e-12);
  EXPECT_NEAR(c["regions"][5]["area"].get<double>(), 1.0, 1e-12);
}

TEST(Cli, AnalyzeOscillator) {
  fs::path report = scratch("osc.json"), csv = scratch("osc.csv");
  Result r = call({"analyze", "--curve", "oscillator:step=0.05", "--report", report.string(), "--csv",
                   csv.string()});
  ASSERT_EQ(r.code, kOk) << r.err;
  EXPECT_EQ(r.out, io::read_file(report.string()));
  Json p = Json::parse(r.out)["payload"];
  EXPECT_EQ(p["curve"]["size"], 21);
  EXPECT_EQ(p["report"]["last_full_divisible_past"]["time"], 0.5);
  EXPECT_EQ(p["report"]["table"][20].get<std::string>().size(), 21u);
  EXPECT_FALSE(p["monotonicity"]["consistent"].is_null());
  EXPECT_EQ(io::read_curve_csv(csv.string()).size(), 21);
}

TEST(Cli, AnalyzeCadlagAndDecay) {
  Json c = payload(call({"analyze", "--curve", "cadlag:step=0.25"}));
  EXPECT_FALSE(c["report"]["proper_events"].empty());
  Json d = payload(call({"analyze", "--curve", "decay:rate=2,end=1,step=0.1"}));
  EXPECT_EQ(d["report"]["counts"]["indivisible"], 0);
  EXPECT_EQ(d["report"]["last_full_divisible_past"]["index"], 10);
  Json k = payload(call({"analyze", "--curve", "cos3:end=0.5,step=0.1"}));
  EXPECT_EQ(k["curve"]["dim"], 3);
  EXPECT_TRUE(k["monotonicity"].is_null());
}

TEST(Cli, AnalyzeCsvCurve) {
  fs::path csv = scratch("c.csv");
  write(csv, "t,g11,g12,g21,g22\n0,1,0,0,1\n1,0.7,0.4,0.3,0.6\n2,0.6,0.3,0.4,0.7\n");
  Json p = payload(call({"analyze", "--curve", csv.string()}));
  EXPECT_EQ(p["curve"]["size"], 3);
  EXPECT_EQ(p["report"]["table"][2], "DID");
}

TEST(Cli, SampleDeterministic) {
  Result a = call({"sample", "--anchor", "0.7,0.6", "--n", "50", "--seed", "42"});
  Result b = call({"sample", "--anchor", "0.7,0.6", "--n", "50", "--seed", "42"});
  ASSERT_EQ(a.code, kOk) << a.err;
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(a.out, call({"sample", "--anchor", "0.7,0.6", "--n", "50", "--seed", "43"}).out);
  EXPECT_EQ(std::count(a.out.begin(), a.out.end(), '\n'), 51);
  expect_golden("sample_0.7_0.6_seed42.csv", a.out);

  fs::path csv = scratch("s.csv");
  Json p = payload(call({"sample", "--anchor", "0.7,0.6", "--n", "2000", "--seed", "42", "--csv", csv.string()}));
  EXPECT_EQ(p["n"], 2000);
  EXPECT_GT(p["mean_center_distance_past"].get<double>(), p["mean_center_distance_transition"].get<double>());
}

TEST(Cli, DivideGolden) {
  Result r = call({"divide", "--later", "0.7,0.6", "--earlier", "0.9,0.8"});
  expect_golden("divide_0.7_0.6_by_0.9_0.8.json", r.out);
  Json d = Json::parse(r.out);
  EXPECT_EQ(d["schema_version"], "1");
  EXPECT_EQ(d["command"]["name"], "divide");
  EXPECT_EQ(d["command"]["args"][0], "divide");
}

TEST(Cli, Info) {
  Result r = call({"info", "--matrix", "0.7,0.6", "--pi", "0.8,0.2", "--pihat", "0.5,0.5"});
  ASSERT_EQ(r.code, kOk) << r.err;
  Json p = payload(r);
  EXPECT_NEAR(p["dobrushin"].get<double>(), 0.3, 1e-12);
  EXPECT_NEAR(p["birkhoff"].get<double>(), 0.3033370452904234, 1e-12);
  EXPECT_TRUE(p["contraction"]["holds"].get<bool>());
  Json bits = payload(call({"info", "--matrix", "0.7,0.6", "--pi", "0.8,0.2", "--pihat", "0.5,0.5", "--bits"}));
  EXPECT_NEAR(bits["relative_entropy"].get<double>() * std::log(2.0),
              p["relative_entropy"].get<double>(), 1e-12);
  Json sw = payload(call({"info", "--matrix", "0,0"}));
  EXPECT_TRUE(sw["birkhoff"].is_object());
  EXPECT_NEAR(sw["dobrushin"].get<double>(), 1.0, 1e-12);
}

TEST(Cli, Sqc) {
  Result r = call({"sqc", "--matrix", "oscillator@0.25", "--theta", "3.141592653589793", "--p0", "1,0"});
  ASSERT_EQ(r.code, kOk) << r.err;
  Json p = payload(r);
  EXPECT_NEAR(p["unitarity_deviation"].get<double>(), 1.0, 1e-12);
  EXPECT_LE(p["channel_roundtrip_error"].get<double>(), 1e-12);
  EXPECT_NEAR(p["density"]["re"][0][1].get<double>(), -0.3535533905932738, 1e-9);
  EXPECT_FALSE(payload(call({"sqc", "--matrix", "0.9,0.2"}))["unistochastic"].get<bool>());
}

TEST(Cli, CoarseModes) {
  fs::path g = scratch("grouping.json");
  write(g, R"({"groups": [[0, 1], [2]], "dispatch": [[0.3, 0.7], [1.0]],
               "candidates": [[[1.0, 0.0], [1.0]]]})");
  Result cg = call({"coarse", "--grouping", g.string(), "--curve", "cos3:end=0.5,step=0.1"});
  ASSERT_EQ(cg.code, kOk) << cg.err;
  EXPECT_EQ(payload(cg)["curve"]["dim"], 2);
  Result dl = call({"coarse", "--grouping", g.string(), "--curve", "oscillator:step=0.25", "--mode", "dilate"});
  ASSERT_EQ(dl.code, kOk) << dl.err;
  EXPECT_EQ(payload(dl)["curve"]["dim"], 3);
  Result tr = call({"coarse", "--grouping", g.string(), "--curve", "cos3:end=0.5,step=0.1", "--mode",
                    "transfer", "--later", "4", "--earlier", "2"});
  ASSERT_EQ(tr.code, kOk) << tr.err;
  EXPECT_EQ(payload(tr)["transfer"]["candidates"].size(), 2u);
  EXPECT_EQ(call({"coarse", "--grouping", g.string(), "--curve", "cos3", "--mode", "x"}).code, kError);
  write(g, R"({"groups": [[0, 1], [1]]})");
  EXPECT_EQ(call({"coarse", "--grouping", g.string(), "--curve", "cos3"}).code, kError);
  write(g, "{not json");
  EXPECT_EQ(call({"coarse", "--grouping", g.string(), "--curve", "cos3"}).code, kError);
}

TEST(Cli, CurveCommand) {
  Json p = payload(call({"curve", "--curve", "cadlag:end=2,step=0.5"}));
  EXPECT_EQ(p["curve"]["jump_indices"].size(), 2u);
  Json c = payload(call({"curve", "--curve", "constant:p=0.7,q=0.6,start=0.1,end=0.3,step=0.1"}));
  EXPECT_EQ(c["curve"]["size"], 3);
  EXPECT_EQ(call({"curve", "--curve", "constant:p=0.7,q=0.6"}).code, kError);
}

TEST(Cli, BinaryExitCodes) {
  const std::string bin = DIVCONE_BINARY;
  auto status = [&](const std::string& args) {
    int rc = std::system((bin + " " + args + " > /dev/null 2>&1").c_str());
    return WEXITSTATUS(rc);
  };
  EXPECT_EQ(status("divide --later 0.7,0.6 --earlier 0.9,0.8"), 0);
  EXPECT_EQ(status("divide --later 0.5,0.2 --earlier 0.6,0.7"), 1);
  EXPECT_EQ(status("divide --later 0.5,0.2"), 2);
  EXPECT_EQ(status("--help"), 0);
}

}  // namespace
}  // namespace divcone::cli
