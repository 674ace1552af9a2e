#include "grover/validate.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <stdexcept>

#include "grover/angles.hpp"
#include "grover/core.hpp"
#include "grover/errors.hpp"
#include "grover/oracle.hpp"
#include "grover/rng.hpp"
#include "grover/scan.hpp"

namespace grover {
namespace {

std::string fmt3(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", x);
  return buf;
}

struct Suite {
  std::vector<CheckResult> results;
  void bound(const std::string& name, double err, double tol) {
    results.push_back({name, err <= tol, "max_err=" + fmt3(err) + " tol=" + fmt3(tol)});
  }
  void window(const std::string& name, double value, double center, double half_width) {
    results.push_back({name, std::abs(value - center) <= half_width,
                       "value=" + fmt3(value) + " want=" + fmt3(center) + "+-" +
                           fmt3(half_width)});
  }
  void require(const std::string& name, bool ok, const std::string& detail) {
    results.push_back({name, ok, detail});
  }
};

double oracle_p(double lambda, double xi, int m, const PhaseConfig& ph) {
  return evolve_density(build_g(ph, lambda), build_initial_density(lambda, xi), m)(1, 1).real();
}

cplx oracle_c(double lambda, double xi, int m, const PhaseConfig& ph) {
  const cplx c10 = evolve_density(build_g(ph, lambda), build_initial_density(lambda, xi), m)(1, 0);
  return c10 / (xi * std::sqrt(lambda * (1.0 - lambda)));
}

struct Draw {
  double lambda, xi, alpha, beta;
  int m;
};

Draw random_draw(Rng& rng, int m_max) {
  Draw d;
  d.lambda = rng.uniform(0.0, 1.0);
  d.xi = rng.uniform(-1.0, 1.0);
  d.alpha = rng.uniform(-k_pi, k_pi);
  d.beta = rng.uniform(-k_pi, k_pi);
  d.m = static_cast<int>(rng.uniform_int(0, m_max));
  return d;
}

/// Instances with sin(m phi) ~ 0: solve cos(phi) = cos(k pi / m) for lambda,
/// which is linear in lambda at fixed phases.
std::vector<Draw> singular_draws(Rng& rng, int count) {
  std::vector<Draw> out;
  while (static_cast<int>(out.size()) < count) {
    const double alpha = rng.uniform(-k_pi, k_pi);
    const double beta = rng.uniform(-k_pi, k_pi);
    const double denom = 2.0 * std::sin(0.5 * alpha) * std::sin(0.5 * beta);
    if (std::abs(denom) < 1e-3) continue;
    const int m = static_cast<int>(rng.uniform_int(2, 2000));
    const int k = static_cast<int>(rng.uniform_int(1, m - 1));
    const double target = std::cos(k * k_pi / m);
    const double lambda = (target - std::cos(0.5 * (alpha + beta))) / denom;
    if (!(lambda > 1e-4 && lambda < 1.0 - 1e-4)) continue;
    out.push_back({lambda, rng.uniform(-1.0, 1.0), alpha, beta, m});
  }
  return out;
}

void check_li_li(Suite& s) {
  const PhaseConfig ph(0.5 * k_pi, -0.5 * k_pi);
  double err = std::abs(success_probability(SearchInstance(1.0 / 3.0, 1.0, 1), ph) - 25.0 / 27.0);
  for (int i = 0; i <= 100; ++i) {
    const double lam = i / 100.0;
    err = std::max(err, std::abs(success_probability(SearchInstance(lam, 1.0, 1), ph) -
                                 li_li_polynomial(lam)));
  }
  s.bound("li-li-regression", err, 1e-12);
}

void check_unitarity(Suite& s, Rng& rng) {
  double err = 0.0;
  for (int i = 0; i < 10000; ++i) {
    const Draw d = random_draw(rng, 0);
    const Unitary2 g = build_g(PhaseConfig(d.alpha, d.beta), d.lambda);
    err = std::max(err, max_abs_diff(g * g.adjoint(), Mat2::identity()));
    err = std::max(err, std::abs(std::abs(g.det()) - 1.0));
  }
  s.bound("unitarity", err, 1e-12);
}

void check_axis(Suite& s, Rng& rng) {
  double norm_err = 0.0, rec_err = 0.0;
  int used = 0;
  for (int i = 0; i < 5000 || used < 2000; ++i) {
    const Draw d = random_draw(rng, 0);
    const PhaseConfig ph(d.alpha, d.beta);
    try {
      const PauliDecomposition pd = pauli_decompose(ph, d.lambda);
      norm_err = std::max(
          norm_err, std::abs(pd.n1 * pd.n1 + pd.n2 * pd.n2 + pd.n3 * pd.n3 - 1.0));
      rec_err = std::max(rec_err, max_abs_diff(pauli_reconstruct(pd), build_g(ph, d.lambda)));
      ++used;
    } catch (const DegenerateRotation&) {
    }
    if (i > 100000) break;
  }
  s.bound("axis-normalization", norm_err, 1e-10);
  s.bound("pauli-reconstruction", rec_err, 1e-10);
}

void check_closed_vs_oracle(Suite& s, Rng& rng, double perturbation) {
  double err = 0.0;
  for (int i = 0; i < 10000; ++i) {
    const Draw d = random_draw(rng, 50);
    const PhaseConfig ph(d.alpha, d.beta);
    const double pc = success_probability(SearchInstance(d.lambda, d.xi, d.m), ph) + perturbation;
    err = std::max(err, std::abs(pc - oracle_p(d.lambda, d.xi, d.m, ph)));
  }
  for (const Draw& d : singular_draws(rng, 500)) {
    const PhaseConfig ph(d.alpha, d.beta);
    const double pc = success_probability(SearchInstance(d.lambda, d.xi, d.m), ph) + perturbation;
    err = std::max(err, std::abs(pc - oracle_p(d.lambda, d.xi, d.m, ph)));
  }
  for (int i = 0; i < 200; ++i) {  // sin(phi) ~ 1e-9: exercises the degenerate fallback
    const Draw base = random_draw(rng, 50);
    const PhaseConfig ph(rng.uniform(-1.0, 1.0) * 1e-9, rng.uniform(-1.0, 1.0) * 1e-9);
    const double pc =
        success_probability(SearchInstance(base.lambda, base.xi, base.m), ph) + perturbation;
    err = std::max(err, std::abs(pc - oracle_p(base.lambda, base.xi, base.m, ph)));
  }
  s.bound("closed-vs-oracle", err, 1e-10);
}

void check_range(Suite& s) {
  double excess = 0.0;
  for (int m : {0, 1, 3, 7, 25}) {
    for (int ia = 0; ia <= 60; ++ia) {
      const PhaseConfig ph(-k_pi + ia * (2.0 * k_pi / 60.0), k_pi * (ia % 7 - 3) / 3.0);
      for (int il = 0; il <= 200; ++il) {
        const double p = success_probability(SearchInstance(il / 200.0, 1.0, m), ph);
        excess = std::max({excess, -p, p - 1.0});
      }
    }
  }
  s.bound("probability-range", excess, 1e-10);
}

void check_standard_grover(Suite& s, Rng& rng) {
  const PhaseConfig ph(k_pi, k_pi);
  double err = 0.0;
  for (int i = 0; i < 100; ++i) {
    const double lam = rng.uniform(0.0, 1.0);
    const int m = static_cast<int>(rng.uniform_int(0, 30));
    const double want = std::pow(std::sin((2 * m + 1) * std::asin(std::sqrt(lam))), 2);
    err = std::max(err, std::abs(success_probability(SearchInstance(lam, 1.0, m), ph) - want));
  }
  s.bound("standard-grover", err, 1e-10);
  const bool k_ok = grover_optimal_iterations(0.25) == 1.0 &&
                    grover_optimal_iterations(1.0) == 0.0 &&
                    grover_optimal_iterations_rounded(0.25) == 1;
  s.require("optimal-iterations", k_ok,
            "k(0.25)=" + std::to_string(grover_optimal_iterations(0.25)));
}

void check_coherence(Suite& s, Rng& rng) {
  double err = 0.0;
  for (int i = 0; i < 1000; ++i) {
    Draw d = random_draw(rng, 40);
    d.lambda = rng.uniform(0.01, 0.99);
    const double mag = rng.uniform(0.001, 1.0);
    d.xi = (rng.raw() & 1) ? mag : -mag;
    const PhaseConfig ph(d.alpha, d.beta);
    const cplx cc = coherence_ratio(SearchInstance(d.lambda, d.xi, d.m), ph);
    err = std::max(err, std::abs(cc - oracle_c(d.lambda, d.xi, d.m, ph)));
  }
  const cplx at_zero = coherence_ratio(SearchInstance(0.3, 0.7, 0), PhaseConfig(1.0, -2.0));
  s.bound("coherence-vs-oracle", err, 1e-9);
  s.require("coherence-m0", at_zero == cplx{1.0, 0.0}, "C(m=0) must be exactly 1");
}

void check_dephased(Suite& s, Rng& rng) {
  double err = 0.0;
  for (int i = 0; i < 2000; ++i) {
    const Draw d = random_draw(rng, 40);
    const PhaseConfig ph(d.alpha, d.beta);
    err = std::max(err, std::abs(success_probability_dephased(d.lambda, ph, d.m) -
                                 success_probability(SearchInstance(d.lambda, 0.0, d.m), ph)));
  }
  s.bound("dephased-limit", err, 1e-12);
}

void check_density(Suite& s, Rng& rng) {
  double err = 0.0;
  for (int i = 0; i < 2000; ++i) {
    const Draw d = random_draw(rng, 30);
    const PhaseConfig ph(d.alpha, d.beta);
    const DensityMatrix2 rho =
        evolve_density(build_g(ph, d.lambda), build_initial_density(d.lambda, d.xi), d.m);
    err = std::max(err, max_abs_diff(rho, rho.adjoint()));
    err = std::max(err, std::abs(rho.trace() - cplx{1.0}));
    const double tr = rho.trace().real();
    const double det = rho.det().real();
    const double disc = std::sqrt(std::max(0.0, tr * tr - 4.0 * det));
    err = std::max(err, std::max(0.0, -(0.5 * (tr - disc))));  // eigenvalue >= 0
  }
  s.bound("density-invariants", err, 1e-12);
}

void check_full_register(Suite& s, Rng& rng, int n_max) {
  double err = 0.0;
  for (int n = 2; n <= n_max; ++n) {
    const std::uint32_t dim = std::uint32_t{1} << n;
    std::vector<std::uint32_t> sizes{1, 2, dim / 2, dim - 1};
    std::sort(sizes.begin(), sizes.end());
    sizes.erase(std::unique(sizes.begin(), sizes.end()), sizes.end());
    for (std::uint32_t size : sizes) {
      // random marked set of the given size (partial Fisher-Yates)
      std::vector<std::uint32_t> all(dim);
      for (std::uint32_t i = 0; i < dim; ++i) all[i] = i;
      for (std::uint32_t i = 0; i < size; ++i)
        std::swap(all[i], all[static_cast<std::size_t>(rng.uniform_int(i, dim - 1))]);
      const std::vector<std::uint32_t> marked(all.begin(), all.begin() + size);
      const double lam = static_cast<double>(size) / dim;
      const int pairs = n <= 6 ? 6 : 3;
      for (int t = 0; t < pairs; ++t) {
        const PhaseConfig ph(rng.uniform(-k_pi, k_pi), rng.uniform(-k_pi, k_pi));
        for (int xi01 = 1; xi01 >= 0; --xi01) {
          for (int m = 0; m <= 12; ++m) {
            const double closed =
                success_probability(SearchInstance(lam, xi01 ? 1.0 : 0.0, m), ph);
            err = std::max(err,
                           std::abs(closed - full_circuit_probability(n, marked, ph, m, xi01)));
          }
        }
      }
    }
  }
  s.bound("full-register", err, 1e-9);
}

void check_headline(Suite& s) {
  s.window("threshold-080", lambda_lower_bound(0.268 * k_pi, 3, 0.8), 0.140, 0.005);
  s.window("threshold-090", lambda_lower_bound(0.234 * k_pi, 3, 0.9), 0.229, 0.005);
  const ScanResult opt = optimize_alpha(3, 0.8);
  s.window("optimal-alpha-080", opt.alpha / k_pi, 0.268, 0.005);

  const std::vector<double> roots = exact_success_roots(0.268 * k_pi, 3);
  bool found = false;
  for (double r : roots)
    if (std::abs(r - 0.2965) <= 1e-3) found = true;
  double p_at = 0.0;
  if (found) {
    const PhaseConfig ph(0.268 * k_pi, -0.268 * k_pi);
    p_at = oracle_p(roots.front(), 1.0, 3, ph);
  }
  s.require("exact-success-root", found && p_at > 1.0 - 1e-6,
            "roots=" + std::to_string(roots.size()) + " p=" + fmt3(p_at));

  s.window("xi-sensitivity", xi_sensitivity(0.2, 0.268 * k_pi, 3), 0.60, 0.05);
}

}  // namespace

std::vector<CheckResult> run_validation(const ValidateOptions& opts) {
  if (opts.n_max < 2 || opts.n_max > k_max_qubits)
    throw std::invalid_argument("n_max must be in [2, 14]");
  Suite s;
  Rng rng(opts.seed);
  check_li_li(s);
  check_unitarity(s, rng);
  check_axis(s, rng);
  check_closed_vs_oracle(s, rng, opts.perturbation);
  check_range(s);
  check_standard_grover(s, rng);
  check_coherence(s, rng);
  check_dephased(s, rng);
  check_density(s, rng);
  check_full_register(s, rng, opts.n_max);
  check_headline(s);
  return s.results;
}

}  // namespace grover
