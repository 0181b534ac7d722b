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

#include "divcone/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace divcone::io {

Json to_json(const Matrix& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json to_json(const StochasticMatrix& g) {
  Json j;
  j["dim"] = g.dim();
  j["entries"] = to_json(g.matrix());
  if (g.dim() == 2) j["diag"] = to_json(g.diag());
  j["det"] = g.det();
  return j;
}

Json to_json(DiagCoord c) { return Json{{"p", c.p}, {"q", c.q}}; }

Json to_json(const Region& r) {
  Json j;
  j["name"] = region_name(r.kind);
  j["anchor"] = to_json(r.anchor);
  j["full_square"] = r.is_full_square();
  Json cs = Json::array();
  for (const HalfPlane& h : r.constraints) {
    cs.push_back(Json{{"a", h.a}, {"b", h.b}, {"c", h.c}, {"strict", h.strict}});
  }
  j["constraints"] = std::move(cs);
  j["scale"] = Json{{"a", r.scale.a}, {"b", r.scale.b}, {"c", r.scale.c}};
  Json poly = Json::array();
  for (Point2 v : r.polygon) poly.push_back(Json::array({v.x, v.y}));
  j["polygon"] = std::move(poly);
  j["area"] = std::abs(polygon_area(r.polygon));
  return j;
}

Json to_json(const DivisionVerdict& v) {
  Json j;
  j["status"] = divisibility_name(v.status);
  j["divisible"] = v.divisible();
  j["branch"] = branch_name(v.branch);
  j["max_violation"] = v.max_violation;
  j["transition"] = v.transition ? to_json(*v.transition) : Json(nullptr);
  return j;
}

Json curve_json(const DynamicsCurve& c) {
  Json j;
  j["size"] = c.size();
  j["dim"] = c.dim();
  j["times"] = c.times();
  Json jumps = Json::array();
  for (int k = 0; k < c.size(); ++k) {
    if (c.is_jump(k)) jumps.push_back(k);
  }
  j["jump_indices"] = std::move(jumps);
  Json ms = Json::array();
  for (const StochasticMatrix& g : c.matrices()) ms.push_back(to_json(g.matrix()));
  j["matrices"] = std::move(ms);
  return j;
}

Json to_json(const DivisionEventReport& rep, const DynamicsCurve& c) {
  Json j;
  j["size"] = rep.size;
  j["times"] = c.times();
  Json table = Json::array();
  int counts[3] = {0, 0, 0};
  for (const auto& row : rep.cells) {
    std::string s;
    for (Divisibility d : row) {
      s.push_back(d == Divisibility::Divisible ? 'D' : d == Divisibility::Indivisible ? 'I' : '?');
      ++counts[static_cast<int>(d)];
    }
    table.push_back(std::move(s));
  }
  j["table"] = std::move(table);
  j["counts"] = Json{{"divisible", counts[0]}, {"indivisible", counts[1]}, {"unknown", counts[2]}};
  j["proper_events"] = rep.proper_events;
  Json pt = Json::array();
  for (int k : rep.proper_events) pt.push_back(c.time(k));
  j["proper_event_times"] = std::move(pt);
  Json sc = Json::array();
  for (const SignChange& s : rep.det_sign_changes) {
    sc.push_back(Json{{"from", s.from},
                      {"to", s.to},
                      {"t_from", c.time(s.from)},
                      {"t_to", c.time(s.to)},
                      {"forced_indivisible", s.forced_indivisible}});
  }
  j["det_sign_changes"] = std::move(sc);
  Json full = Json::array();
  for (bool b : rep.full_past_divisible) full.push_back(b);
  j["full_past_divisible"] = std::move(full);
  if (rep.last_full_divisible_past) {
    j["last_full_divisible_past"] =
        Json{{"index", *rep.last_full_divisible_past}, {"time", c.time(*rep.last_full_divisible_past)}};
  } else {
    j["last_full_divisible_past"] = nullptr;
  }
  return j;
}

Json to_json(const MonotonicityReport& rep) {
  Json steps = Json::array();
  for (const MonotonicityStep& s : rep.steps) {
    steps.push_back(Json{{"from", s.from},
                         {"to", s.to},
                         {"abs_t_before", s.abs_t_before},
                         {"abs_t_after", s.abs_t_after},
                         {"direction", s.direction},
                         {"status", divisibility_name(s.divisible)},
                         {"jump", s.jump},
                         {"consistent", s.consistent}});
  }
  return Json{{"consistent", rep.consistent}, {"recovery_steps", rep.recovery_steps},
              {"steps", std::move(steps)}};
}

Json to_json(const TransferReport& rep) {
  Json j;
  j["original"] = to_json(rep.original);
  j["transition_is_dilation"] = rep.transition_is_dilation;
  Json cs = Json::array();
  for (const TransferCandidate& c : rep.candidates) {
    cs.push_back(Json{{"label", c.label},
                      {"y", to_json(c.y)},
                      {"residual", c.residual},
                      {"holds", c.holds},
                      {"reduced_transition",
                       c.reduced_transition ? to_json(*c.reduced_transition) : Json(nullptr)}});
  }
  j["candidates"] = std::move(cs);
  j["inherits"] = rep.inherits;
  j["reduced_direct"] = to_json(rep.reduced_direct);
  return j;
}

Json document(const std::string& command, Json args, const std::string& kind, Json payload) {
  Json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["command"] = Json{{"name", command}, {"args", std::move(args)}};
  Json p;
  p["kind"] = kind;
  for (auto& [k, v] : payload.items()) p[k] = v;
  doc["payload"] = std::move(p);
  return doc;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string samples_csv(const std::vector<DivisorSample>& samples) {
  std::string out = "r,s,u,v\n";
  for (const DivisorSample& s : samples) {
    out += format_double(s.past.p) + "," + format_double(s.past.q) + "," +
           format_double(s.transition.p) + "," + format_double(s.transition.q) + "\n";
  }
  return out;
}

std::string curve_csv(const DynamicsCurve& c) {
  const int n = c.dim();
  std::string out = "t";
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) out += ",g" + std::to_string(i) + std::to_string(j);
  }
  out += ",jump\n";
  for (int k = 0; k < c.size(); ++k) {
    out += format_double(c.time(k));
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) out += "," + format_double(c.at(k)(i, j));
    }
    out += c.is_jump(k) ? ",1\n" : ",0\n";
  }
  return out;
}

namespace {

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream is(line);
  while (std::getline(is, cur, sep)) out.push_back(cur);
  if (!line.empty() && line.back() == sep) out.emplace_back();
  return out;
}

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

double parse_number(const std::string& s, int line) {
  std::string t = trim(s);
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(t, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (t.empty() || used != t.size()) {
    std::ostringstream os;
    os << "line " << line << ": '" << t << "' is not a number";
    throw Error(ErrorCode::ParseError, os.str());
  }
  return v;
}

bool skip_line(const std::string& line) {
  std::string t = trim(line);
  return t.empty() || t[0] == '#';
}

}  // namespace

DynamicsCurve parse_curve_csv(std::istream& in) {
  std::string line;
  int lineno = 0;
  std::vector<std::string> header;
  while (std::getline(in, line)) {
    ++lineno;
    if (skip_line(line)) continue;
    header = split(line, ',');
    break;
  }
  if (header.empty() || trim(header[0]) != "t") {
    throw Error(ErrorCode::ParseError, "curve CSV needs a header starting with 't'");
  }
  bool has_jump = trim(header.back()) == "jump";
  const std::size_t entries = header.size() - 1 - (has_jump ? 1 : 0);
  const int n = static_cast<int>(std::lround(std::sqrt(static_cast<double>(entries))));
  if (n <= 0 || static_cast<std::size_t>(n * n) != entries) {
    throw Error(ErrorCode::ParseError, "curve CSV needs N*N matrix columns");
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      std::string want = "g" + std::to_string(i + 1) + std::to_string(j + 1);
      if (n < 10 && trim(header[static_cast<std::size_t>(1 + i * n + j)]) != want) {
        throw Error(ErrorCode::ParseError, "curve CSV column " + want + " missing or misplaced");
      }
    }
  }
  std::vector<double> ts;
  std::vector<StochasticMatrix> ms;
  std::vector<bool> jumps;
  while (std::getline(in, line)) {
    ++lineno;
    if (skip_line(line)) continue;
    auto cells = split(line, ',');
    if (cells.size() != header.size()) {
      std::ostringstream os;
      os << "line " << lineno << ": expected " << header.size() << " fields";
      throw Error(ErrorCode::ParseError, os.str());
    }
    ts.push_back(parse_number(cells[0], lineno));
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) m(i, j) = parse_number(cells[static_cast<std::size_t>(1 + i * n + j)], lineno);
    }
    ms.push_back(StochasticMatrix::validate(m, kDefaultTol));
    jumps.push_back(has_jump && parse_number(cells.back(), lineno) != 0.0);
  }
  return DynamicsCurve(std::move(ts), std::move(ms), std::move(jumps));
}

DynamicsCurve read_curve_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::IoError, "cannot open " + path);
  return parse_curve_csv(in);
}

Matrix parse_matrix(std::istream& in) {
  std::vector<std::vector<double>> cols;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (skip_line(line)) continue;
    std::vector<double> col;
    for (const std::string& cell : split(line, ',')) col.push_back(parse_number(cell, lineno));
    cols.push_back(std::move(col));
  }
  const std::size_t n = cols.size();
  if (n == 0) throw Error(ErrorCode::ParseError, "empty matrix file");
  Matrix m(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  for (std::size_t j = 0; j < n; ++j) {
    if (cols[j].size() != n) throw Error(ErrorCode::NonSquare, "matrix file is not square");
    for (std::size_t i = 0; i < n; ++i) m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = cols[j][i];
  }
  return m;
}

Matrix read_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::IoError, "cannot open " + path);
  return parse_matrix(in);
}

namespace {

constexpr double kMargin = 32.0;
constexpr double kSide = 448.0;

std::string px(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

std::string sx(double x) { return px(kMargin + kSide * x); }
std::string sy(double y) { return px(kMargin + kSide * (1.0 - y)); }

struct Style {
  const char* fill;
  double opacity;
};

Style style_for(RegionKind k) {
  switch (k) {
    case RegionKind::PastConeUpper:
    case RegionKind::PastConeLower: return {"#9e9e9e", 0.55};
    case RegionKind::TransitionRectUpper:
    case RegionKind::TransitionRectLower: return {"#00bcd4", 0.55};
    case RegionKind::FutureSet: return {"#ffeb3b", 0.55};
    case RegionKind::ImageParallelogram: return {"#e040fb", 0.55};
  }
  return {"#000000", 1.0};
}

}  // namespace

std::string regions_svg(DiagCoord anchor, const std::vector<Region>& regions) {
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 512 512\" width=\"512\" "
        "height=\"512\">\n";
  os << "  <rect x=\"0\" y=\"0\" width=\"512\" height=\"512\" fill=\"#ffffff\"/>\n";
  os << "  <rect x=\"" << px(kMargin) << "\" y=\"" << px(kMargin) << "\" width=\"" << px(kSide)
     << "\" height=\"" << px(kSide) << "\" fill=\"none\" stroke=\"#000000\" stroke-width=\"1.5\"/>\n";
  for (const Region& r : regions) {
    Style st = style_for(r.kind);
    const auto& poly = r.polygon;
    os << "  <g class=\"region\" data-region=\"" << region_name(r.kind) << "\">";
    if (poly.size() >= 3) {
      os << "<path d=\"M " << sx(poly[0].x) << " " << sy(poly[0].y);
      for (std::size_t i = 1; i < poly.size(); ++i) os << " L " << sx(poly[i].x) << " " << sy(poly[i].y);
      os << " Z\" fill=\"" << st.fill << "\" fill-opacity=\"" << st.opacity
         << "\" stroke=\"" << st.fill << "\" stroke-width=\"1\"/>";
    } else if (poly.size() == 2) {
      os << "<path d=\"M " << sx(poly[0].x) << " " << sy(poly[0].y) << " L " << sx(poly[1].x) << " "
         << sy(poly[1].y) << "\" fill=\"none\" stroke=\"" << st.fill << "\" stroke-width=\"4\"/>";
    } else if (poly.size() == 1) {
      os << "<circle cx=\"" << sx(poly[0].x) << "\" cy=\"" << sy(poly[0].y) << "\" r=\"5\" fill=\""
         << st.fill << "\"/>";
    }
    os << "</g>\n";
  }
  os << "  <line x1=\"" << sx(0) << "\" y1=\"" << sy(1) << "\" x2=\"" << sx(1) << "\" y2=\"" << sy(0)
     << "\" stroke=\"#ff9800\" stroke-width=\"2\"/>\n";
  os << "  <circle cx=\"" << sx(anchor.p) << "\" cy=\"" << sy(anchor.q)
     << "\" r=\"3.5\" fill=\"#000000\"/>\n";
  os << "  <text x=\"" << sx(1) << "\" y=\"" << px(kMargin - 8) << "\" font-size=\"14\" "
        "text-anchor=\"middle\">1</text>\n";
  os << "  <text x=\"" << sx(0) << "\" y=\"" << px(kMargin + kSide + 20) << "\" font-size=\"14\" "
        "text-anchor=\"middle\">&#963;x</text>\n";
  os << "  <text x=\"" << sx(1) << "\" y=\"" << px(kMargin + kSide + 20) << "\" font-size=\"14\" "
        "text-anchor=\"middle\">&#928;A</text>\n";
  os << "  <text x=\"" << sx(0) << "\" y=\"" << px(kMargin - 8) << "\" font-size=\"14\" "
        "text-anchor=\"middle\">&#928;B</text>\n";
  os << "</svg>\n";
  return os.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoError, "cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::IoError, "cannot write " + path);
  out << content;
  if (!out) throw Error(ErrorCode::IoError, "write failed for " + path);
}

}  // namespace divcone::io
