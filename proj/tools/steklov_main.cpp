#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "steklov/report.hpp"

namespace {

using namespace steklov;

constexpr int kExitOk = 0;
constexpr int kExitInvalidDims = 2;
constexpr int kExitSolverFailure = 3;
constexpr int kExitGateFailure = 4;

constexpr double kOracleGate = 1e-2;
constexpr int kRectVerifyDensity = 64;
constexpr int kBoxVerifyDensity = 16;

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::fputs(text.c_str(), stdout);
    return;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open output file: " + out_path);
  f << text;
}

std::string fmt_gate(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1e", v);
  return buf;
}

std::vector<double> linspace(double lo, double hi, int steps) {
  if (steps < 1) throw DomainError("steps must be at least 1");
  std::vector<double> xs(steps);
  for (int i = 0; i < steps; ++i) {
    xs[i] = steps == 1 ? lo : lo + (hi - lo) * i / (steps - 1);
  }
  return xs;
}

struct RectTarget {
  double a = 1.0;
  nlohmann::json inputs;
};

// --a takes precedence; otherwise a general width x height rectangle maps
// onto [-1,1] x [-a,a] and all reported quantities are in normalized units.
RectTarget resolve_rect(const CLI::App* cmd, double a, double width,
                        double height, double mult_tol) {
  RectTarget t;
  const bool have_a = cmd->count("--a") > 0;
  const bool have_w = cmd->count("--width") > 0;
  const bool have_h = cmd->count("--height") > 0;
  if (have_a == (have_w || have_h)) {
    throw DomainError("give either --a or both --width and --height");
  }
  if (have_a) {
    t.a = a;
    t.inputs = {{"a", a}};
  } else {
    if (!have_w || !have_h) {
      throw DomainError("give either --a or both --width and --height");
    }
    const RectNormalization norm = normalize_rect(width, height);
    t.a = norm.a;
    t.inputs = {{"width", width},
                {"height", height},
                {"a", norm.a},
                {"scale", norm.scale}};
  }
  t.inputs["mult_tol"] = mult_tol;
  return t;
}

int run_rect(const CLI::App* cmd, double a, double width, double height,
             double mult_tol, const std::string& format,
             const std::string& out_path) {
  const RectTarget t = resolve_rect(cmd, a, width, height, mult_tol);
  const RectSpectrum spec = rect_spectrum(t.a, mult_tol);
  std::string text;
  if (format == "json") {
    text = output_record("rect", t.inputs, rect_results(spec),
                         nlohmann::json::array())
               .dump(2) +
           "\n";
  } else if (format == "csv") {
    text = rect_csv(spec);
  } else {
    text = rect_human(spec, t.a);
  }
  emit(text, out_path);
  return kExitOk;
}

int run_box(const std::vector<double>& dims_in, double mult_tol,
            const std::string& format, const std::string& out_path) {
  if (dims_in.size() != 3) throw DomainError("--dims expects three half lengths");
  const BoxDomain dims{dims_in[0], dims_in[1], dims_in[2]};
  const BoxSpectrum spec = box_spectrum(dims, mult_tol);
  nlohmann::json inputs = {
      {"dims", dims_in}, {"mult_tol", mult_tol}};
  std::string text;
  if (format == "json") {
    text = output_record("box", inputs, box_results(spec),
                         box_diagnostics(spec))
               .dump(2) +
           "\n";
  } else if (format == "csv") {
    text = box_csv(spec);
  } else {
    text = box_human(spec, dims);
  }
  emit(text, out_path);
  return kExitOk;
}

struct GridSpec {
  std::vector<double> min;
  std::vector<double> max;
  std::vector<int> steps;
};

// Per-axis grid with the convention that max defaults to 1 and min to
// max/steps, so `sweep box --steps 5 5` covers {0.2, ..., 1.0} per axis.
std::vector<double> axis_grid(const GridSpec& g, std::size_t axis) {
  auto pick = [&](const auto& v, auto fallback) {
    if (v.empty()) return fallback;
    return axis < v.size() ? v[axis] : v.back();
  };
  const int steps = pick(g.steps, 10);
  if (steps < 1) throw DomainError("steps must be at least 1");
  const double hi = pick(g.max, 1.0);
  const double lo = pick(g.min, hi / steps);
  return linspace(lo, hi, steps);
}

int run_sweep_rect(const GridSpec& g, const std::string& format,
                   const std::string& out_path) {
  const std::vector<double> grid = axis_grid(g, 0);
  const auto rows = sweep_rect(grid);
  nlohmann::json inputs = {{"min", grid.front()},
                           {"max", grid.back()},
                           {"steps", static_cast<int>(grid.size())}};
  std::string text;
  if (format == "json") {
    text = output_record("sweep rect", inputs, rect_sweep_results(rows),
                         nlohmann::json::array())
               .dump(2) +
           "\n";
  } else if (format == "csv") {
    text = rect_sweep_csv(rows);
  } else {
    text = rect_sweep_human(rows);
  }
  emit(text, out_path);
  return kExitOk;
}

int run_sweep_box(const GridSpec& g, const std::string& format,
                  const std::string& out_path) {
  const std::vector<double> a_grid = axis_grid(g, 0);
  const std::vector<double> b_grid = axis_grid(g, 1);
  const auto rows = sweep_box(a_grid, b_grid);
  nlohmann::json inputs = {
      {"a_grid", a_grid}, {"b_grid", b_grid}, {"c", 1.0}};
  std::string text;
  if (format == "json") {
    text = output_record("sweep box", inputs, box_sweep_results(rows),
                         nlohmann::json::array())
               .dump(2) +
           "\n";
  } else if (format == "csv") {
    text = box_sweep_csv(rows);
  } else {
    text = box_sweep_human(rows);
  }
  emit(text, out_path);
  return kExitOk;
}

struct CandidateGate {
  std::string family;
  double sigma = 0.0;
  ResidualReport rep;
  bool pass = false;
  std::string error;
};

nlohmann::json gate_json(const CandidateGate& g) {
  nlohmann::json j = {{"family", g.family}, {"sigma", g.sigma}, {"pass", g.pass}};
  if (g.error.empty()) {
    j["interior_residual"] = g.rep.interior_residual;
    j["boundary_residual"] = g.rep.boundary_residual;
    j["rayleigh_gap"] = g.rep.rayleigh_gap;
  } else {
    j["error"] = g.error;
  }
  return j;
}

void print_gate_line(std::ostringstream& os, const CandidateGate& g) {
  if (!g.error.empty()) {
    os << "  " << g.family << ": " << g.error << "  FAIL\n";
    return;
  }
  os << "  " << g.family << "  sigma " << fmt_human(g.sigma) << "  interior "
     << fmt_gate(g.rep.interior_residual) << "  boundary "
     << fmt_gate(g.rep.boundary_residual) << "  rayleigh "
     << fmt_gate(g.rep.rayleigh_gap) << (g.pass ? "  pass" : "  FAIL")
     << "\n";
}

bool gates_pass(const CandidateGate& g, double tol) {
  return g.error.empty() && g.rep.interior_residual < tol &&
         g.rep.boundary_residual < tol && g.rep.rayleigh_gap < tol;
}

int run_verify_rect(const CLI::App* cmd, double a, double width, double height,
                    double mult_tol, double tol, int oracle_grid, bool tamper,
                    const std::string& format, const std::string& out_path) {
  const RectTarget t = resolve_rect(cmd, a, width, height, mult_tol);
  const RectSpectrum spec = rect_spectrum(t.a, mult_tol);
  const double shift = tamper ? 0.1 : 0.0;

  bool all_pass = true;
  std::vector<CandidateGate> gates;
  for (const auto& c : spec.candidates) {
    CandidateGate g;
    g.family = rect_class_name(c.cls.tag);
    g.sigma = c.sigma + shift;
    try {
      g.rep = residual_check(
          [&](double x, double y) { return rect_eigenfunction_eval(c, x, y); },
          g.sigma, RectDomain{t.a}, kRectVerifyDensity);
      g.pass = gates_pass(g, tol);
    } catch (const DegenerateFunction& e) {
      g.error = e.what();
      g.pass = false;
    }
    all_pass = all_pass && g.pass;
    gates.push_back(std::move(g));
  }

  nlohmann::json oracle = nullptr;
  std::string oracle_line;
  if (oracle_grid > 0) {
    const DtnOracleResult fd = fd_dtn_rect(t.a, oracle_grid);
    const double exact = rect_spectrum(fd.a_actual).sigma1;
    const double err = std::abs(fd.sigma1_fd - exact);
    const bool pass = err < kOracleGate;
    all_pass = all_pass && pass;
    oracle = {{"grid_n", fd.grid_n},     {"a_actual", fd.a_actual},
              {"sigma1_fd", fd.sigma1_fd}, {"sigma1_closed_form", exact},
              {"error", err},            {"gate", kOracleGate},
              {"eigenvalues", fd.eigenvalues},
              {"pass", pass}};
    std::ostringstream ol;
    ol << "oracle grid " << fd.grid_n << ": sigma1_fd "
       << fmt_human(fd.sigma1_fd) << "  closed form " << fmt_human(exact)
       << "  error " << fmt_gate(err) << " (gate " << fmt_gate(kOracleGate)
       << ")" << (pass ? "  pass" : "  FAIL") << "\n";
    oracle_line = ol.str();
  }

  std::string text;
  if (format == "json") {
    nlohmann::json inputs = t.inputs;
    inputs["tol"] = tol;
    inputs["oracle_grid"] = oracle_grid;
    if (tamper) inputs["tamper"] = true;
    nlohmann::json cand = nlohmann::json::array();
    for (const auto& g : gates) cand.push_back(gate_json(g));
    nlohmann::json results = {{"tol", tol},
                              {"candidates", cand},
                              {"oracle", oracle},
                              {"passed", all_pass}};
    text = output_record("verify rect", inputs, results,
                         nlohmann::json::array())
               .dump(2) +
           "\n";
  } else {
    std::ostringstream os;
    os << "verify rect a=" << fmt_human(t.a) << " (density "
       << kRectVerifyDensity << ", gate " << fmt_gate(tol) << ")\n";
    for (const auto& g : gates) print_gate_line(os, g);
    os << oracle_line;
    os << "verdict: " << (all_pass ? "PASS" : "FAIL") << "\n";
    text = os.str();
  }
  emit(text, out_path);
  return all_pass ? kExitOk : kExitGateFailure;
}

int run_verify_box(const std::vector<double>& dims_in, double mult_tol,
                   double tol, bool tamper, const std::string& format,
                   const std::string& out_path) {
  if (dims_in.size() != 3) throw DomainError("--dims expects three half lengths");
  const BoxDomain dims{dims_in[0], dims_in[1], dims_in[2]};
  const BoxSpectrum spec = box_spectrum(dims, mult_tol);
  const double shift = tamper ? 0.1 : 0.0;

  bool all_pass = true;
  std::vector<CandidateGate> gates;
  for (const auto& c : spec.candidates) {
    CandidateGate g;
    g.family = family_label(c);
    g.sigma = c.sigma + shift;
    try {
      g.rep = residual_check(
          [&](double x, double y, double z) {
            return box_eigenfunction_eval(c, x, y, z);
          },
          g.sigma, dims, kBoxVerifyDensity);
      g.pass = gates_pass(g, tol);
    } catch (const DegenerateFunction& e) {
      g.error = e.what();
      g.pass = false;
    }
    all_pass = all_pass && g.pass;
    gates.push_back(std::move(g));
  }

  std::string text;
  if (format == "json") {
    nlohmann::json inputs = {
        {"dims", dims_in}, {"mult_tol", mult_tol}, {"tol", tol}};
    if (tamper) inputs["tamper"] = true;
    nlohmann::json cand = nlohmann::json::array();
    for (const auto& g : gates) cand.push_back(gate_json(g));
    nlohmann::json results = {
        {"tol", tol}, {"candidates", cand}, {"passed", all_pass}};
    text = output_record("verify box", inputs, results, box_diagnostics(spec))
               .dump(2) +
           "\n";
  } else {
    std::ostringstream os;
    os << "verify box (density " << kBoxVerifyDensity << ", gate "
       << fmt_gate(tol) << ")\n";
    for (const auto& g : gates) print_gate_line(os, g);
    os << "verdict: " << (all_pass ? "PASS" : "FAIL") << "\n";
    text = os.str();
  }
  emit(text, out_path);
  return all_pass ? kExitOk : kExitGateFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Steklov eigenvalues of rectangles and boxes"};
  app.require_subcommand(1);

  double a = 1.0;
  double width = 0.0;
  double height = 0.0;
  std::vector<double> dims;
  double mult_tol = kDefaultMultTol;
  double tol = 1e-5;
  int oracle_grid = 0;
  bool tamper = false;
  std::string format = "human";
  std::string out_path;
  GridSpec grid;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--format", format, "human, json, or csv")
        ->check(CLI::IsMember({"human", "json", "csv"}));
    cmd->add_option("--out", out_path, "write output to this file");
  };
  auto add_rect_dims = [&](CLI::App* cmd) {
    cmd->add_option("--a", a, "half height of [-1,1] x [-a,a], 0 < a <= 1");
    cmd->add_option("--width", width, "full width of a general rectangle");
    cmd->add_option("--height", height, "full height of a general rectangle");
  };

  CLI::App* rect_cmd = app.add_subcommand(
      "rect", "eigenvalue catalog for the rectangle [-1,1] x [-a,a]");
  add_rect_dims(rect_cmd);
  rect_cmd->add_option("--mult-tol", mult_tol, "eigenspace grouping tolerance");
  add_common(rect_cmd);

  CLI::App* box_cmd = app.add_subcommand(
      "box", "eigenvalue catalog for the box [-a,a] x [-b,b] x [-c,c]");
  box_cmd->add_option("--dims", dims, "half lengths a b c")->expected(3);
  box_cmd->add_option("--mult-tol", mult_tol, "eigenspace grouping tolerance");
  add_common(box_cmd);

  CLI::App* sweep_cmd =
      app.add_subcommand("sweep", "sigma1 and invariant over a parameter grid");
  sweep_cmd->require_subcommand(1);
  CLI::App* sweep_rect_cmd =
      sweep_cmd->add_subcommand("rect", "sweep the aspect ratio a");
  CLI::App* sweep_box_cmd =
      sweep_cmd->add_subcommand("box", "sweep (a, b) with c = 1, b >= a");
  for (CLI::App* cmd : {sweep_rect_cmd, sweep_box_cmd}) {
    cmd->add_option("--min", grid.min, "grid minimum per axis")->expected(1, 2);
    cmd->add_option("--max", grid.max, "grid maximum per axis")->expected(1, 2);
    cmd->add_option("--steps", grid.steps, "grid points per axis")
        ->expected(1, 2);
    add_common(cmd);
  }

  CLI::App* verify_cmd = app.add_subcommand(
      "verify", "residual, Rayleigh, and finite-difference oracle gates");
  verify_cmd->require_subcommand(1);
  CLI::App* verify_rect_cmd =
      verify_cmd->add_subcommand("rect", "verify rectangle candidates");
  add_rect_dims(verify_rect_cmd);
  verify_rect_cmd->add_option("--oracle-grid", oracle_grid,
                              "cells per unit length for the oracle (0 = off)");
  CLI::App* verify_box_cmd =
      verify_cmd->add_subcommand("box", "verify box candidates");
  verify_box_cmd->add_option("--dims", dims, "half lengths a b c")->expected(3);
  for (CLI::App* cmd : {verify_rect_cmd, verify_box_cmd}) {
    cmd->add_option("--tol", tol, "residual gate tolerance");
    cmd->add_option("--mult-tol", mult_tol, "eigenspace grouping tolerance");
    cmd->add_flag("--tamper", tamper)->group("");  // negative-control hook
    add_common(cmd);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInvalidDims;
  }

  try {
    if (rect_cmd->parsed()) {
      return run_rect(rect_cmd, a, width, height, mult_tol, format, out_path);
    }
    if (box_cmd->parsed()) {
      return run_box(dims, mult_tol, format, out_path);
    }
    if (sweep_rect_cmd->parsed()) {
      return run_sweep_rect(grid, format, out_path);
    }
    if (sweep_box_cmd->parsed()) {
      return run_sweep_box(grid, format, out_path);
    }
    if (verify_rect_cmd->parsed()) {
      return run_verify_rect(verify_rect_cmd, a, width, height, mult_tol, tol,
                             oracle_grid, tamper, format, out_path);
    }
    if (verify_box_cmd->parsed()) {
      return run_verify_box(dims, mult_tol, tol, tamper, format, out_path);
    }
  } catch (const DomainError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitInvalidDims;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "solver failure: %s\n", e.what());
    return kExitSolverFailure;
  }
  return kExitInvalidDims;
}
