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

#include "divcone/cli.hpp"

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <numbers>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"

#include "divcone/coarse.hpp"
#include "divcone/divisibility.hpp"
#include "divcone/geometry.hpp"
#include "divcone/information.hpp"
#include "divcone/io.hpp"
#include "divcone/sqc.hpp"

namespace divcone::cli {

using io::Json;

namespace {

std::vector<double> parse_numbers(const std::string& s, char sep = ',') {
  std::vector<double> out;
  std::string cell;
  std::istringstream is(s);
  while (std::getline(is, cell, sep)) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(cell, &used);
    } catch (const std::exception&) {
      used = std::string::npos;
    }
    if (used != cell.size() || cell.empty()) {
      throw Error(ErrorCode::ParseError, "'" + cell + "' is not a number");
    }
    out.push_back(v);
  }
  if (out.empty()) throw Error(ErrorCode::ParseError, "empty number list");
  return out;
}

std::optional<DiagCoord> as_pair(const std::string& s) {
  if (s.find(',') == std::string::npos) return std::nullopt;
  try {
    auto v = parse_numbers(s);
    if (v.size() == 2) return DiagCoord{v[0], v[1]};
  } catch (const Error&) {
  }
  return std::nullopt;
}

CurveSpec parse_curve_spec_impl(const std::string& spec);

StochasticMatrix matrix_arg(const std::string& s, double tol) {
  if (auto at = s.rfind('@'); at != std::string::npos) {
    auto t = parse_numbers(s.substr(at + 1));
    if (t.size() != 1) throw Error(ErrorCode::ParseError, "expected curve@time");
    return evaluate_curve(parse_curve_spec_impl(s.substr(0, at)), t[0]);
  }
  if (auto c = as_pair(s)) {
    Matrix m(2, 2);
    m << c->p, 1.0 - c->q, 1.0 - c->p, c->q;
    return StochasticMatrix::validate(m, tol);
  }
  if (!std::filesystem::exists(s)) {
    throw Error(ErrorCode::ParseError, "'" + s + "' is neither p,q nor a readable matrix file");
  }
  return StochasticMatrix::validate(io::read_matrix_file(s), tol);
}

DiagCoord anchor_arg(const std::string& s) {
  auto c = as_pair(s);
  if (!c) throw Error(ErrorCode::ParseError, "anchor must be given as p,q");
  if (!(c->p >= 0.0 && c->p <= 1.0 && c->q >= 0.0 && c->q <= 1.0)) {
    throw Error(ErrorCode::EntryOutOfRange, "anchor outside the unit square");
  }
  return *c;
}

ProbabilityVector vector_arg(const std::string& s) {
  auto v = parse_numbers(s);
  return ProbabilityVector::validate(Eigen::Map<Vector>(v.data(), static_cast<Eigen::Index>(v.size())));
}

double resolve_tol(const std::optional<double>& flag) {
  if (flag) {
    if (!(*flag >= 0.0)) throw Error(ErrorCode::ParseError, "tolerance must be nonnegative");
    return *flag;
  }
  if (const char* env = std::getenv("DIVCONE_TOL"); env != nullptr && *env != '\0') {
    auto v = parse_numbers(env);
    if (v.size() != 1 || !(v[0] >= 0.0)) throw Error(ErrorCode::ParseError, "bad DIVCONE_TOL");
    return v[0];
  }
  return kDefaultTol;
}

Json echo(const std::string& name, const std::vector<std::string>& args) {
  (void)name;
  Json a = Json::array();
  for (std::size_t i = 1; i < args.size(); ++i) a.push_back(args[i]);
  return a;
}

void emit(std::ostream& out, const Json& doc, const std::string& path = {}) {
  std::string text = io::dump(doc);
  if (!path.empty()) io::write_file(path, text);
  out << text;
}

Json matrix_payload(const StochasticMatrix& g) { return io::to_json(g); }

}  // namespace

CurveSpec parse_curve_spec(const std::string& spec) { return parse_curve_spec_impl(spec); }

namespace {

CurveSpec parse_curve_spec_impl(const std::string& spec) {
  CurveSpec cs;
  std::string kind = spec, rest;
  if (auto colon = spec.find(':'); colon != std::string::npos) {
    kind = spec.substr(0, colon);
    rest = spec.substr(colon + 1);
  }
  if (kind == "oscillator") {
    cs.kind = CurveKind::Oscillator;
    cs.parameter = std::numbers::pi / 2.0;
    cs.grid = {0.0, 1.0, 0.01, {}};
  } else if (kind == "decay") {
    cs.kind = CurveKind::Decay;
    cs.parameter = 1.0;
    cs.grid = {0.0, 5.0, 0.05, {}};
  } else if (kind == "cadlag") {
    cs.kind = CurveKind::CadlagCycle;
    cs.grid = {0.0, 4.0, 1.0 / 64.0, {}};
  } else if (kind == "cos3") {
    cs.kind = CurveKind::ThreeConfigBlock;
    cs.parameter = 1.0;
    cs.grid = {0.0, 1.5, 0.01, {}};
  } else if (kind == "constant") {
    cs.kind = CurveKind::Constant;
    cs.grid = {0.0, 1.0, 0.1, {}};
    cs.constant = StochasticMatrix::identity(2);
  } else {
    if (!std::filesystem::exists(spec)) {
      throw Error(ErrorCode::ParseError, "unknown curve kind or missing CSV file: " + spec);
    }
    cs.kind = CurveKind::Sampled;
    cs.sampled = io::read_curve_csv(spec);
    return cs;
  }
  double p = 1.0, q = 1.0;
  bool have_pq = false;
  std::istringstream is(rest);
  std::string item;
  while (std::getline(is, item, ',')) {
    if (item.empty()) continue;
    auto eq = item.find('=');
    if (eq == std::string::npos) throw Error(ErrorCode::ParseError, "expected key=value in " + item);
    std::string key = item.substr(0, eq), val = item.substr(eq + 1);
    if (key == "jumps") {
      cs.grid.jumps = parse_numbers(val, ';');
      continue;
    }
    double v = parse_numbers(val).at(0);
    if (key == "freq" || key == "omega" || key == "rate") {
      cs.parameter = v;
    } else if (key == "start") {
      cs.grid.start = v;
    } else if (key == "end") {
      cs.grid.end = v;
    } else if (key == "step") {
      cs.grid.step = v;
    } else if (key == "p" && cs.kind == CurveKind::Constant) {
      p = v;
      have_pq = true;
    } else if (key == "q" && cs.kind == CurveKind::Constant) {
      q = v;
      have_pq = true;
    } else {
      throw Error(ErrorCode::ParseError, "unknown curve key '" + key + "'");
    }
  }
  if (have_pq) cs.constant = StochasticMatrix::from_diag({p, q});
  return cs;
}

}  // namespace

DynamicsCurve parse_curve(const std::string& spec) { return generate(parse_curve_spec(spec)); }

namespace {

struct Options {
  std::optional<double> tol;
  std::string later, earlier, anchor, svg, json, curve, report, csv, matrix, pi, pihat, p0;
  std::string grouping, mode = "cg";
  double theta = 0.0, phi = 0.0;
  std::size_t n = 1000;
  std::uint64_t seed = 0;
  bool bits = false;
  int later_index = -1, earlier_index = -1;
};

int cmd_divide(const Options& o, const std::vector<std::string>& args, std::ostream& out) {
  const double tol = resolve_tol(o.tol);
  StochasticMatrix later = matrix_arg(o.later, tol);
  StochasticMatrix earlier = matrix_arg(o.earlier, tol);
  DivisionVerdict v = divide(later, earlier, tol);
  Json payload = io::to_json(v);
  payload["later"] = matrix_payload(later);
  payload["earlier"] = matrix_payload(earlier);
  payload["tol"] = tol;
  emit(out, io::document("divide", echo("divide", args), "verdict", std::move(payload)));
  switch (v.status) {
    case Divisibility::Divisible: return kOk;
    case Divisibility::Indivisible: return kIndivisible;
    case Divisibility::Unknown: return kUndecided;
  }
  return kError;
}

std::vector<Region> all_regions(DiagCoord a) {
  StochasticMatrix g = StochasticMatrix::from_diag(a);
  RegionPair past = past_regions(a);
  RegionPair trans = transition_regions(a);
  return {past.upper, past.lower, trans.upper, trans.lower, future_square(g), image_square(g)};
}

int cmd_regions(const Options& o, const std::vector<std::string>& args, std::ostream& out) {
  DiagCoord a = anchor_arg(o.anchor);
  std::vector<Region> regions = all_regions(a);
  Json rs = Json::array();
  for (const Region& r : regions) rs.push_back(io::to_json(r));
  Json payload;
  payload["anchor"] = io::to_json(a);
  payload["degenerate"] = a.degenerate();
  payload["regions"] = std::move(rs);
  payload["colors"] = Json{{"past_cone", "gray"}, {"transition_rect", "cyan"},
                           {"future_set", "yellow"}, {"image_parallelogram", "magenta"}};
  if (!o.svg.empty()) io::write_file(o.svg, io::regions_svg(a, regions));
  emit(out, io::document("regions", echo("regions", args), "regions", std::move(payload)), o.json);
  return kOk;
}

int cmd_analyze(const Options& o, const std::vector<std::string>& args, std::ostream& out) {
  const double tol = resolve_tol(o.tol);
  DynamicsCurve c = parse_curve(o.curve);
  DivisionEventReport rep = analyze_curve(c, tol);
  Json payload;
  payload["curve"] = Json{{"spec", o.curve}, {"size", c.size()}, {"dim", c.dim()}};
  payload["tol"] = tol;
  payload["report"] = io::to_json(rep, c);
  payload["monotonicity"] = c.dim() == 2 ? io::to_json(monotonicity_report(c, tol)) : Json(nullptr);
  if (!o.csv.empty()) io::write_file(o.csv, io::curve_csv(c));
  emit(out, io::document("analyze", echo("analyze", args), "report", std::move(payload)), o.report);
  return kOk;
}

int cmd_sample(const Options& o, const std::vector<std::string>& args, std::ostream& out) {
  const double tol = resolve_tol(o.tol);
  DiagCoord a = anchor_arg(o.anchor);
  std::vector<DivisorSample> s = sample_divisors(a, o.n, o.seed, tol);
  std::string csv = io::samples_csv(s);
  if (o.csv.empty()) {
    out << csv;
    return kOk;
  }
  io::write_file(o.csv, csv);
  double dp = 0.0, dt = 0.0;
  for (const DivisorSample& x : s) {
    dp += std::hypot(x.past.p - 0.5, x.past.q - 0.5);
    dt += std::hypot(x.transition.p - 0.5, x.transition.q - 0.5);
  }
  Json payload;
  payload["anchor"] = io::to_json(a);
  payload["n"] = s.size();
  payload["seed"] = o.seed;
  payload["csv"] = o.csv;
  payload["mean_center_distance_past"] = dp / static_cast<double>(s.size());
  payload["mean_center_distance_transition"] = dt / static_cast<double>(s.size());
  emit(out, io::document("sample", echo("sample", args), "samples", std::move(payload)));
  return kOk;
}

int cmd_info(const Options& o, const std::vector<std::string>& args, std::ostream& out) {
  const double tol = resolve_tol(o.tol);
  StochasticMatrix g = matrix_arg(o.matrix, tol);
  const double unit = o.bits ? std::numbers::ln2 : 1.0;
  Json payload;
  payload["matrix"] = matrix_payload(g);
  payload["entropy_unit"] = o.bits ? "bit" : "nat";
  payload["dobrushin"] = dobrushin_coefficient(g);
  try {
    payload["birkhoff"] = birkhoff_coefficient(g);
  } catch (const Error& e) {
    payload["birkhoff"] = Json{{"error", error_name(e.code())}};
  }
  if (!o.pi.empty() && !o.pihat.empty()) {
    ProbabilityVector pi = vector_arg(o.pi), pihat = vector_arg(o.pihat);
    payload["relative_entropy"] = phi_entropy(PhiKernel::KullbackLeibler, pi, pihat) / unit;
    payload["total_variation"] = phi_entropy(PhiKernel::TotalVariation, pi, pihat);
    if (pi.strictly_positive() && pihat.strictly_positive()) {
      payload["hilbert_metric"] = hilbert_metric(pi.vector(), pihat.vector());
    }
    if (g.dim() == 2) {
      ContractionCheck c = check_contraction(g, pi, pihat);
      payload["contraction"] = Json{{"lhs", c.lhs / unit},
                                    {"rhs", c.rhs / unit},
                                    {"coefficient", c.coefficient},
                                    {"holds", c.holds}};
    }
  }
  emit(out, io::document("info", echo("info", args), "coefficients", std::move(payload)));
  return kOk;
}

Json complex_json(const ComplexMatrix& m) {
  return Json{{"re", io::to_json(Matrix(m.real()))}, {"im", io::to_json(Matrix(m.imag()))}};
}

int cmd_sqc(const Options& o, const std::vector<std::string>& args, std::ostream& out) {
  const double tol = resolve_tol(o.tol);
  StochasticMatrix g = matrix_arg(o.matrix, tol);
  ComplexMatrix th = sh_sqrt(g, o.theta, o.phi);
  KrausSet k = kraus_from_theta(th, std::max(tol, kIdentityTol));
  Json payload;
  payload["matrix"] = matrix_payload(g);
  payload["theta_phase"] = o.theta;
  payload["global_phase"] = o.phi;
  payload["sqrt"] = complex_json(th);
  payload["unitarity_deviation"] = unitarity_deviation(th);
  payload["unistochastic"] = is_unistochastic2(g, tol);
  payload["kraus_residual"] = k.condition_residual();
  payload["channel_roundtrip_error"] =
      max_abs_diff(channel_to_stochastic(k, std::max(tol, kIdentityTol)).matrix(), g.matrix());
  try {
    BirkhoffRatio b = birkhoff_ratio_check(g);
    payload["birkhoff_ratio"] = Json{{"det_gamma", b.det_gamma},
                                     {"det_theta_sq", b.det_theta_sq},
                                     {"ratio", b.ratio},
                                     {"tau_b", b.tau_b},
                                     {"consistent", b.consistent}};
  } catch (const Error& e) {
    payload["birkhoff_ratio"] = Json{{"error", error_name(e.code())}};
  }
  if (!o.p0.empty()) {
    DensityMatrix rho = evolve_density(th, vector_arg(o.p0));
    Json d = complex_json(rho.matrix());
    const Vector pops = rho.populations();
    d["populations"] = std::vector<double>(pops.data(), pops.data() + pops.size());
    d["min_eigenvalue"] = rho.min_eigenvalue();
    d["max_coherence"] = rho.max_coherence();
    payload["density"] = std::move(d);
  }
  emit(out, io::document("sqc", echo("sqc", args), "coefficients", std::move(payload)));
  return kOk;
}

Matrix dispatch_from(const GroupingMatrix& x, const Json& j) {
  if (j.is_null() || (j.is_string() && j.get<std::string>() == "uniform")) {
    return uniform_right_inverse(x);
  }
  if (!j.is_array()) throw Error(ErrorCode::InvalidGrouping, "dispatch must be \"uniform\" or weights");
  return right_inverse(x, j.get<std::vector<std::vector<double>>>());
}

int cmd_coarse(const Options& o, const std::vector<std::string>& args, std::ostream& out) {
  const double tol = resolve_tol(o.tol);
  Json g;
  try {
    g = Json::parse(io::read_file(o.grouping));
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("grouping JSON: ") + e.what());
  }
  if (!g.contains("groups")) throw Error(ErrorCode::InvalidGrouping, "grouping JSON lacks 'groups'");
  auto groups = g.at("groups").get<std::vector<std::vector<int>>>();
  int large = 0;
  for (const auto& grp : groups) {
    for (int j : grp) large = std::max(large, j + 1);
  }
  GroupingMatrix x = GroupingMatrix::from_groups(groups, large);
  Matrix y = dispatch_from(x, g.contains("dispatch") ? g.at("dispatch") : Json(nullptr));
  DynamicsCurve c = parse_curve(o.curve);
  Json payload;
  payload["mode"] = o.mode;
  payload["grouping"] = io::to_json(x.matrix());
  payload["dispatch"] = io::to_json(y);
  if (o.mode == "cg") {
    DynamicsCurve r = coarse_grain_curve(x, y, c);
    payload["curve"] = io::curve_json(r);
    payload["report"] = io::to_json(analyze_curve(r, tol), r);
    emit(out, io::document("coarse", echo("coarse", args), "curve", std::move(payload)));
    return kOk;
  }
  if (o.mode == "dilate") {
    DispatchCurve yc{c.times(), std::vector<Matrix>(static_cast<std::size_t>(c.size()), y)};
    DynamicsCurve d = dilate(x, yc, c);
    payload["curve"] = io::curve_json(d);
    payload["report"] = io::to_json(analyze_curve(d, tol), d);
    emit(out, io::document("coarse", echo("coarse", args), "curve", std::move(payload)));
    return kOk;
  }
  if (o.mode == "transfer") {
    int later = o.later_index < 0 ? c.size() - 1 : o.later_index;
    int earlier = o.earlier_index < 0 ? 0 : o.earlier_index;
    std::vector<Matrix> cands;
    if (g.contains("candidates")) {
      for (const Json& w : g.at("candidates")) cands.push_back(dispatch_from(x, w));
    }
    TransferReport rep = divisibility_transfer_check(x, y, c, later, earlier, cands, tol);
    payload["later"] = Json{{"index", later}, {"time", c.time(later)}};
    payload["earlier"] = Json{{"index", earlier}, {"time", c.time(earlier)}};
    payload["transfer"] = io::to_json(rep);
    emit(out, io::document("coarse", echo("coarse", args), "report", std::move(payload)));
    return kOk;
  }
  throw Error(ErrorCode::ParseError, "mode must be cg, dilate or transfer");
}

int cmd_curve(const Options& o, const std::vector<std::string>& args, std::ostream& out) {
  DynamicsCurve c = parse_curve(o.curve);
  if (!o.csv.empty()) io::write_file(o.csv, io::curve_csv(c));
  Json payload;
  payload["spec"] = o.curve;
  payload["curve"] = io::curve_json(c);
  emit(out, io::document("curve", echo("curve", args), "curve", std::move(payload)));
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Divisibility of stochastic dynamics", "divcone"};
  app.require_subcommand(1, 1);
  Options o;

  auto tol_opt = [&](CLI::App* sub) {
    sub->add_option_function<double>("--tol", [&](const double& v) { o.tol = v; },
                                     "Tolerance (default 1e-9, or DIVCONE_TOL)");
  };

  auto* divide_cmd = app.add_subcommand("divide", "Decide divisibility of a later matrix by an earlier one");
  divide_cmd->add_option("--later", o.later, "p,q, curve@t or matrix file")->required();
  divide_cmd->add_option("--earlier", o.earlier, "p,q, curve@t or matrix file")->required();
  tol_opt(divide_cmd);

  auto* regions_cmd = app.add_subcommand("regions", "Past cones, transition rectangles, future and image sets");
  regions_cmd->add_option("--anchor", o.anchor, "p,q")->required();
  regions_cmd->add_option("--svg", o.svg, "SVG output path");
  regions_cmd->add_option("--json", o.json, "JSON output path");

  auto* analyze_cmd = app.add_subcommand("analyze", "Division-event table of a curve");
  analyze_cmd->add_option("--curve", o.curve, "kind:key=value,... or CSV path")->required();
  analyze_cmd->add_option("--report", o.report, "JSON report path");
  analyze_cmd->add_option("--csv", o.csv, "write the sampled curve as CSV");
  tol_opt(analyze_cmd);

  auto* sample_cmd = app.add_subcommand("sample", "Monte Carlo divisor pairs of an anchor");
  sample_cmd->add_option("--anchor", o.anchor, "p,q")->required();
  sample_cmd->add_option("--n", o.n, "number of samples")->check(CLI::PositiveNumber);
  sample_cmd->add_option("--seed", o.seed, "RNG seed");
  sample_cmd->add_option("--csv", o.csv, "CSV output path");
  tol_opt(sample_cmd);

  auto* info_cmd = app.add_subcommand("info", "Ergodicity coefficients and entropy contraction");
  info_cmd->add_option("--matrix", o.matrix, "p,q, curve@t or matrix file")->required();
  info_cmd->add_option("--pi", o.pi, "probability vector");
  info_cmd->add_option("--pihat", o.pihat, "probability vector");
  info_cmd->add_flag("--bits", o.bits, "report entropies in bits");
  tol_opt(info_cmd);

  auto* sqc_cmd = app.add_subcommand("sqc", "Square roots, Kraus operators and density evolution");
  sqc_cmd->add_option("--matrix", o.matrix, "p,q")->required();
  sqc_cmd->add_option("--theta", o.theta, "relative phase");
  sqc_cmd->add_option("--phi", o.phi, "global phase");
  sqc_cmd->add_option("--p0", o.p0, "initial probability vector");
  tol_opt(sqc_cmd);

  auto* coarse_cmd = app.add_subcommand("coarse", "Coarse graining, dilation and transfer checks");
  coarse_cmd->add_option("--grouping", o.grouping, "grouping JSON")->required();
  coarse_cmd->add_option("--curve", o.curve, "kind:key=value,... or CSV path")->required();
  coarse_cmd->add_option("--mode", o.mode, "cg, dilate or transfer")
      ->check(CLI::IsMember({"cg", "dilate", "transfer"}));
  coarse_cmd->add_option("--later", o.later_index, "later sample index (transfer)");
  coarse_cmd->add_option("--earlier", o.earlier_index, "earlier sample index (transfer)");
  tol_opt(coarse_cmd);

  auto* curve_cmd = app.add_subcommand("curve", "Sample a built-in or CSV curve");
  curve_cmd->add_option("--curve", o.curve, "kind:key=value,... or CSV path")->required();
  curve_cmd->add_option("--csv", o.csv, "CSV output path");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "divcone: " << e.what() << "\n";
    return kError;
  }

  try {
    const std::string name = app.get_subcommands().front()->get_name();
    std::vector<std::string> full = {"divcone"};
    full.insert(full.end(), args.begin(), args.end());
    if (name == "divide") return cmd_divide(o, full, out);
    if (name == "regions") return cmd_regions(o, full, out);
    if (name == "analyze") return cmd_analyze(o, full, out);
    if (name == "sample") return cmd_sample(o, full, out);
    if (name == "info") return cmd_info(o, full, out);
    if (name == "sqc") return cmd_sqc(o, full, out);
    if (name == "coarse") return cmd_coarse(o, full, out);
    if (name == "curve") return cmd_curve(o, full, out);
  } catch (const Error& e) {
    err << "divcone: " << e.what() << "\n";
    return kError;
  } catch (const std::exception& e) {
    err << "divcone: " << e.what() << "\n";
    return kError;
  }
  return kError;
}

}  // namespace divcone::cli
