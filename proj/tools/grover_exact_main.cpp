// grover-exact: CLI front end for the closed-form Grover-iteration library.

#include <complex>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "grover/angles.hpp"
#include "grover/core.hpp"
#include "grover/emit.hpp"
#include "grover/errors.hpp"
#include "grover/scan.hpp"
#include "grover/validate.hpp"
#include "grover/version.hpp"

namespace {

using grover::fmt17;
using nlohmann::json;

constexpr const char* k_phase_matching_note =
    "phase matching beta = -alpha assumed for this scan family";

/// stdout, or --out file plus a timestamped manifest sidecar next to it.
void deliver(const std::string& text, const std::string& out_path,
             const grover::RunManifest& man) {
  if (out_path.empty()) {
    std::fwrite(text.data(), 1, text.size(), stdout);
    return;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open output file: " + out_path);
  f << text;
  if (!f) throw std::runtime_error("write failed: " + out_path);
  f.close();
  std::ofstream mf(out_path + ".manifest.json", std::ios::binary);
  mf << man.to_json(true).dump(2) << "\n";
}

grover::GridSpec parse_grid(const std::string& text, bool angle) {
  const auto c1 = text.find(':');
  const auto c2 = text.find(':', c1 == std::string::npos ? c1 : c1 + 1);
  if (c1 == std::string::npos || c2 == std::string::npos)
    throw std::invalid_argument("grid must be lo:hi:steps, got '" + text + "'");
  const std::string lo = text.substr(0, c1);
  const std::string hi = text.substr(c1 + 1, c2 - c1 - 1);
  const std::string steps = text.substr(c2 + 1);
  grover::GridSpec g{};
  if (angle) {
    g.lo = grover::parse_angle(lo);
    g.hi = grover::parse_angle(hi);
  } else {
    g.lo = grover::parse_angle(lo);  // same grammar; lambda grids just never use "pi"
    g.hi = grover::parse_angle(hi);
  }
  try {
    std::size_t used = 0;
    g.steps = std::stoi(steps, &used);
    if (used != steps.size()) throw std::invalid_argument("");
  } catch (const std::exception&) {
    throw std::invalid_argument("bad grid step count '" + steps + "'");
  }
  return g;
}

json grid_json(const grover::GridSpec& g) {
  return json{{"lo", g.lo}, {"hi", g.hi}, {"steps", g.steps}};
}

struct EvalArgs {
  double lambda = 0.0;
  double xi = 1.0;
  std::string alpha, beta;
  int iters = 0;
  std::string format = "text";
  std::string out;
  bool want_coherence = false;
};

int run_eval(const EvalArgs& a) {
  const double alpha = grover::parse_angle(a.alpha);
  const double beta = grover::parse_angle(a.beta);
  const grover::PhaseConfig phases(alpha, beta);
  const grover::SearchInstance inst(a.lambda, a.xi, a.iters);
  const double p = grover::success_probability(inst, phases);
  std::optional<std::complex<double>> c;
  try {
    c = grover::coherence_ratio(inst, phases);
  } catch (const grover::UndefinedCoherence&) {
    if (a.want_coherence) throw;
  }

  grover::RunManifest man;
  man.subcommand = "eval";
  man.params["lambda"] = a.lambda;
  man.params["xi"] = a.xi;
  grover::put_angle(man.params, "alpha", phases.alpha);
  grover::put_angle(man.params, "beta", phases.beta);
  man.params["iters"] = a.iters;
  man.settings["format"] = a.format;

  std::string text;
  if (a.format == "text") {
    text = "P = " + fmt17(p) + "\n";
    text += c ? "C = (" + fmt17(c->real()) + ", " + fmt17(c->imag()) + ")\n"
              : std::string("C = undefined (initial coherence vanishes)\n");
  } else if (a.format == "csv") {
    text = "lambda,xi,alpha_rad,beta_rad,iters,p,re_c,im_c\n";
    text += grover::csv_row({fmt17(a.lambda), fmt17(a.xi), fmt17(phases.alpha),
                             fmt17(phases.beta), std::to_string(a.iters), fmt17(p),
                             c ? fmt17(c->real()) : "", c ? fmt17(c->imag()) : ""});
  } else {
    json j;
    j["schema_version"] = grover::k_schema_version;
    j["p"] = p;
    j["coherence"] = c ? json{{"re", c->real()}, {"im", c->imag()}} : json(nullptr);
    j["manifest"] = man.to_json(false);
    text = j.dump(2) + "\n";
  }
  deliver(text, a.out, man);
  return 0;
}

struct ScanArgs {
  std::string alpha;
  int iters = 1;
  double xi = 1.0;
  std::string lambda_grid = "0.001:1:4000";
  std::string format = "csv";
  std::string out;
};

int run_scan(const ScanArgs& a) {
  const double alpha = grover::parse_angle(a.alpha);
  const grover::GridSpec grid = parse_grid(a.lambda_grid, false);
  const auto rows = grover::probability_profile(alpha, a.iters, a.xi, grid);

  grover::RunManifest man;
  man.subcommand = "scan";
  grover::put_angle(man.params, "alpha", alpha);
  man.params["iters"] = a.iters;
  man.params["xi"] = a.xi;
  man.params["lambda_grid"] = grid_json(grid);
  man.settings["format"] = a.format;
  man.assumptions.push_back(k_phase_matching_note);

  std::string text;
  if (a.format == "csv") {
    text = "lambda,p\n";
    for (const auto& r : rows) text += grover::csv_row({fmt17(r.lambda), fmt17(r.p)});
  } else if (a.format == "text") {
    text = "# lambda p\n";
    for (const auto& r : rows) text += fmt17(r.lambda) + " " + fmt17(r.p) + "\n";
  } else {
    json j;
    j["schema_version"] = grover::k_schema_version;
    json arr = json::array();
    for (const auto& r : rows) arr.push_back(json{{"lambda", r.lambda}, {"p", r.p}});
    j["rows"] = arr;
    j["manifest"] = man.to_json(false);
    text = j.dump(2) + "\n";
  }
  deliver(text, a.out, man);
  return 0;
}

struct OptimizeArgs {
  int iters = 1;
  double threshold = 0.5;
  std::string alpha_grid = "0.05pi:pi:2000";
  std::string lambda_grid = "0.001:1:4000";
  double refine_tol = 1e-6;
  std::string format = "csv";
  std::string out;
};

int run_optimize(const OptimizeArgs& a) {
  grover::ScanConfig cfg;
  cfg.m = a.iters;
  cfg.threshold = a.threshold;
  cfg.alpha_grid = parse_grid(a.alpha_grid, true);
  cfg.lambda_grid = parse_grid(a.lambda_grid, false);
  cfg.refine_tol = a.refine_tol;
  const grover::ScanResult res = grover::optimize_alpha(cfg);

  grover::RunManifest man;
  man.subcommand = "optimize";
  man.params["iters"] = a.iters;
  man.params["threshold"] = a.threshold;
  man.params["alpha_grid"] = grid_json(cfg.alpha_grid);
  man.params["lambda_grid"] = grid_json(cfg.lambda_grid);
  man.params["refine_tol"] = a.refine_tol;
  man.settings["format"] = a.format;
  man.assumptions.push_back(k_phase_matching_note);

  std::string roots_joined;
  for (std::size_t i = 0; i < res.roots.size(); ++i) {
    if (i) roots_joined += ';';
    roots_joined += fmt17(res.roots[i]);
  }

  std::string text;
  if (a.format == "csv") {
    text = "alpha_rad,alpha_pi,iters,threshold,lambda_min,p_min,roots\n";
    text += grover::csv_row({fmt17(res.alpha), fmt17(res.alpha / grover::k_pi),
                             std::to_string(res.m), fmt17(res.threshold), fmt17(res.lambda_min),
                             fmt17(res.p_min_over_range), roots_joined});
  } else if (a.format == "text") {
    text = "alpha = " + fmt17(res.alpha) + " rad = " + fmt17(res.alpha / grover::k_pi) + " pi\n";
    text += "lambda_min = " + fmt17(res.lambda_min) + "\n";
    text += "p_min_over_range = " + fmt17(res.p_min_over_range) + "\n";
    text += "roots =" + (res.roots.empty() ? std::string(" none") : std::string()) ;
    for (double r : res.roots) text += " " + fmt17(r);
    text += "\n";
  } else {
    json j;
    j["schema_version"] = grover::k_schema_version;
    j["alpha_rad"] = res.alpha;
    j["alpha_pi"] = res.alpha / grover::k_pi;
    j["iters"] = res.m;
    j["threshold"] = res.threshold;
    j["lambda_min"] = res.lambda_min;
    j["p_min_over_range"] = res.p_min_over_range;
    j["roots"] = res.roots;
    j["manifest"] = man.to_json(false);
    text = j.dump(2) + "\n";
  }
  deliver(text, a.out, man);
  return 0;
}

struct SensitivityArgs {
  double lambda = 0.0;
  std::string alpha;
  int iters = 1;
  std::string format = "text";
  std::string out;
};

int run_sensitivity(const SensitivityArgs& a) {
  const double alpha = grover::parse_angle(a.alpha);
  const grover::PhaseConfig phases(alpha, -alpha);
  const double p1 = grover::success_probability(grover::SearchInstance(a.lambda, 1.0, a.iters),
                                                phases);
  const double p0 = grover::success_probability_dephased(a.lambda, phases, a.iters);
  const double ratio = grover::xi_sensitivity(a.lambda, alpha, a.iters);

  grover::RunManifest man;
  man.subcommand = "sensitivity";
  man.params["lambda"] = a.lambda;
  grover::put_angle(man.params, "alpha", alpha);
  man.params["iters"] = a.iters;
  man.settings["format"] = a.format;
  man.assumptions.push_back(k_phase_matching_note);

  std::string text;
  if (a.format == "csv") {
    text = "lambda,alpha_rad,alpha_pi,iters,p_xi0,p_xi1,ratio\n";
    text += grover::csv_row({fmt17(a.lambda), fmt17(alpha), fmt17(alpha / grover::k_pi),
                             std::to_string(a.iters), fmt17(p0), fmt17(p1), fmt17(ratio)});
  } else if (a.format == "text") {
    text = "p_xi0 = " + fmt17(p0) + "\n";
    text += "p_xi1 = " + fmt17(p1) + "\n";
    text += "ratio = " + fmt17(ratio) + "\n";
  } else {
    json j;
    j["schema_version"] = grover::k_schema_version;
    j["lambda"] = a.lambda;
    j["alpha_rad"] = alpha;
    j["alpha_pi"] = alpha / grover::k_pi;
    j["iters"] = a.iters;
    j["p_xi0"] = p0;
    j["p_xi1"] = p1;
    j["ratio"] = ratio;
    j["manifest"] = man.to_json(false);
    text = j.dump(2) + "\n";
  }
  deliver(text, a.out, man);
  return 0;
}

struct ValidateArgs {
  std::uint64_t seed = 12345;
  int n_max = 8;
  std::string format = "text";
  std::string out;
};

int run_validate(const ValidateArgs& a) {
  grover::ValidateOptions opts;
  opts.seed = a.seed;
  opts.n_max = a.n_max;
  const auto checks = grover::run_validation(opts);
  const bool ok = grover::all_passed(checks);

  grover::RunManifest man;
  man.subcommand = "validate";
  man.params["seed"] = a.seed;
  man.params["n_max"] = a.n_max;
  man.settings["format"] = a.format;

  std::string text;
  if (a.format == "text") {
    int passed = 0;
    for (const auto& c : checks) {
      text += (c.pass ? "[PASS] " : "[FAIL] ") + c.name + "  " + c.detail + "\n";
      passed += c.pass ? 1 : 0;
    }
    text += std::to_string(passed) + "/" + std::to_string(checks.size()) + " checks passed\n";
  } else {
    json j;
    j["schema_version"] = grover::k_schema_version;
    json arr = json::array();
    for (const auto& c : checks)
      arr.push_back(json{{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    j["checks"] = arr;
    j["all_passed"] = ok;
    text = j.dump(2) + "\n";
  }
  deliver(text, a.out, man);
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact closed forms and scans for the generalized two-phase Grover iteration"};
  app.set_version_flag("--version", std::string(grover::k_tool_name) + " " + grover::k_version);
  app.require_subcommand(1);

  EvalArgs ev;
  CLI::App* eval = app.add_subcommand("eval", "Success probability and coherence ratio at a point");
  eval->add_option("--lambda", ev.lambda, "Marked fraction in [0,1]")->required();
  eval->add_option("--xi", ev.xi, "Initial coherence parameter in [-1,1]");
  eval->add_option("--alpha", ev.alpha, "Oracle phase (radians, or e.g. 0.5pi)")->required();
  eval->add_option("--beta", ev.beta, "Diffuser phase (radians, or e.g. -0.5pi)")->required();
  eval->add_option("--iters", ev.iters, "Iteration count m >= 0")->required();
  eval->add_option("--format", ev.format)->check(CLI::IsMember({"text", "csv", "json"}));
  eval->add_option("--out", ev.out, "Write output here (plus .manifest.json sidecar)");
  eval->add_flag("--coherence", ev.want_coherence,
                 "Fail (exit 3) if the coherence ratio is undefined");

  ScanArgs sc;
  CLI::App* scan = app.add_subcommand("scan", "P(lambda) profile for beta = -alpha");
  scan->add_option("--alpha", sc.alpha, "Oracle phase")->required();
  scan->add_option("--iters", sc.iters, "Iteration count")->required();
  scan->add_option("--xi", sc.xi, "Coherence parameter");
  scan->add_option("--lambda-grid", sc.lambda_grid, "lo:hi:steps (default 0.001:1:4000)");
  scan->add_option("--format", sc.format)->check(CLI::IsMember({"text", "csv", "json"}));
  scan->add_option("--out", sc.out);

  OptimizeArgs op;
  CLI::App* optimize =
      app.add_subcommand("optimize", "Alpha minimizing the feasible lambda lower bound");
  optimize->add_option("--iters", op.iters, "Iteration count")->required();
  optimize->add_option("--threshold", op.threshold, "Success threshold in (0,1)")->required();
  optimize->add_option("--alpha-grid", op.alpha_grid, "lo:hi:steps (default 0.05pi:pi:2000)");
  optimize->add_option("--lambda-grid", op.lambda_grid, "lo:hi:steps (default 0.001:1:4000)");
  optimize->add_option("--refine-tol", op.refine_tol, "Refinement tolerance (default 1e-6)");
  optimize->add_option("--format", op.format)->check(CLI::IsMember({"text", "csv", "json"}));
  optimize->add_option("--out", op.out);

  SensitivityArgs se;
  CLI::App* sensitivity =
      app.add_subcommand("sensitivity", "Dephased-to-coherent probability ratio");
  sensitivity->add_option("--lambda", se.lambda, "Marked fraction")->required();
  sensitivity->add_option("--alpha", se.alpha, "Oracle phase")->required();
  sensitivity->add_option("--iters", se.iters, "Iteration count")->required();
  sensitivity->add_option("--format", se.format)->check(CLI::IsMember({"text", "csv", "json"}));
  sensitivity->add_option("--out", se.out);

  ValidateArgs va;
  CLI::App* validate = app.add_subcommand("validate", "Self-check suite (exit 0 iff all pass)");
  validate->add_option("--seed", va.seed, "Seed for the randomized grids (default 12345)");
  validate->add_option("--n-max", va.n_max, "Largest full-register size (default 8)");
  validate->add_option("--format", va.format)->check(CLI::IsMember({"text", "json"}));
  validate->add_option("--out", va.out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help / --version
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (*eval) return run_eval(ev);
    if (*scan) return run_scan(sc);
    if (*optimize) return run_optimize(op);
    if (*sensitivity) return run_sensitivity(se);
    if (*validate) return run_validate(va);
  } catch (const grover::UndefinedCoherence& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const grover::NoFeasibleRange& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
