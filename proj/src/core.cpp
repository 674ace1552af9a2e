#include "grover/core.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "grover/angles.hpp"
#include "grover/errors.hpp"
#include "grover/oracle.hpp"

namespace grover {
namespace {

void check_lambda(double lambda) {
  if (!(lambda >= 0.0 && lambda <= 1.0)) throw std::domain_error("lambda must be in [0, 1]");
}

void check_xi(double xi) {
  if (!(xi >= -1.0 && xi <= 1.0)) throw std::domain_error("xi must be in [-1, 1]");
}

struct RawDecomposition {
  double delta;
  double cos_phi, sin_phi, phi;
  double n1, n2, n3;  // meaningful only when sin_phi > k_eps_degenerate
};

RawDecomposition decompose(const PhaseConfig& ph, double lambda) {
  const double s = std::sqrt(lambda * (1.0 - lambda));
  const double ha = 0.5 * ph.alpha, hb = 0.5 * ph.beta;
  RawDecomposition d{};
  d.delta = ha + hb;
  const double c = std::clamp(std::cos(d.delta) + 2.0 * lambda * std::sin(ha) * std::sin(hb),
                              -1.0, 1.0);
  d.cos_phi = c;
  d.sin_phi = std::sqrt(1.0 - c * c);  // phi in [0, pi], so sin(phi) >= 0
  d.phi = std::acos(c);
  if (d.sin_phi > k_eps_degenerate) {
    d.n1 = 2.0 * s * std::sin(hb) * std::cos(ha) / d.sin_phi;
    d.n2 = -2.0 * s * std::sin(ha) * std::sin(hb) / d.sin_phi;
    d.n3 = (std::sin(d.delta) - 2.0 * lambda * std::sin(hb) * std::cos(ha)) / d.sin_phi;
  }
  return d;
}

DensityMatrix2 evolved_by_oracle(const SearchInstance& in, const PhaseConfig& ph) {
  return evolve_density(build_g(ph, in.lambda), build_initial_density(in.lambda, in.xi), in.m);
}

}  // namespace

PhaseConfig::PhaseConfig(double alpha_rad, double beta_rad)
    : alpha(canonicalize_angle(alpha_rad)), beta(canonicalize_angle(beta_rad)) {}

SearchInstance::SearchInstance(double lambda_, double xi_, int m_)
    : lambda(lambda_), xi(xi_), m(m_) {
  check_lambda(lambda);
  check_xi(xi);
  if (m < 0) throw std::domain_error("iteration count must be >= 0");
}

Unitary2 build_g(const PhaseConfig& phases, double lambda) {
  check_lambda(lambda);
  const double s = std::sqrt(lambda * (1.0 - lambda));
  const cplx ea = std::polar(1.0, phases.alpha);
  const cplx eb = std::polar(1.0, phases.beta);
  Unitary2 g;
  g(0, 0) = (1.0 - lambda) + lambda * eb;
  g(0, 1) = ea * (1.0 - eb) * s;
  g(1, 0) = (1.0 - eb) * s;
  g(1, 1) = ea * (lambda + (1.0 - lambda) * eb);
  return g;
}

DensityMatrix2 build_initial_density(double lambda, double xi) {
  check_lambda(lambda);
  check_xi(xi);
  const double off = xi * std::sqrt(lambda * (1.0 - lambda));
  DensityMatrix2 r;
  r(0, 0) = 1.0 - lambda;
  r(0, 1) = off;
  r(1, 0) = off;
  r(1, 1) = lambda;
  return r;
}

PauliDecomposition pauli_decompose(const PhaseConfig& phases, double lambda) {
  check_lambda(lambda);
  const RawDecomposition d = decompose(phases, lambda);
  if (d.sin_phi <= k_eps_degenerate)
    throw DegenerateRotation("rotation angle too close to 0 or pi; axis undefined");
  return PauliDecomposition{d.delta, d.phi, d.n1, d.n2, d.n3};
}

Unitary2 pauli_reconstruct(const PauliDecomposition& d) {
  const cplx phase = std::polar(1.0, d.delta);
  const double c = std::cos(d.phi), s = std::sin(d.phi);
  const cplx i{0.0, 1.0};
  Unitary2 g;
  g(0, 0) = phase * (c - i * (s * d.n3));
  g(0, 1) = phase * (-i * (s * d.n1) - s * d.n2);
  g(1, 0) = phase * (-i * (s * d.n1) + s * d.n2);
  g(1, 1) = phase * (c + i * (s * d.n3));
  return g;
}

double success_probability(const SearchInstance& inst, const PhaseConfig& phases) {
  if (inst.lambda == 0.0 || inst.lambda == 1.0 || inst.m == 0) return inst.lambda;
  const RawDecomposition d = decompose(phases, inst.lambda);
  if (d.sin_phi <= k_eps_degenerate) return evolved_by_oracle(inst, phases)(1, 1).real();
  const double s = std::sqrt(inst.lambda * (1.0 - inst.lambda));
  const double sm = std::sin(inst.m * d.phi), cm = std::cos(inst.m * d.phi);
  const double sm2 = sm * sm;
  return inst.lambda + sm2 * (1.0 - d.n3 * d.n3) * (1.0 - 2.0 * inst.lambda) -
         2.0 * inst.xi * s * (d.n1 * d.n3 * sm2 - d.n2 * sm * cm);
}

double success_probability_dephased(double lambda, const PhaseConfig& phases, int m) {
  check_lambda(lambda);
  if (m < 0) throw std::domain_error("iteration count must be >= 0");
  if (lambda == 0.0 || lambda == 1.0 || m == 0) return lambda;
  const RawDecomposition d = decompose(phases, lambda);
  if (d.sin_phi <= k_eps_degenerate) {
    return evolve_density(build_g(phases, lambda), build_initial_density(lambda, 0.0), m)(1, 1)
        .real();
  }
  const double sm = std::sin(m * d.phi);
  const double t = 1.0 - d.n3 * d.n3;
  return lambda + sm * sm * (t - 2.0 * lambda * t);
}

std::complex<double> coherence_ratio(const SearchInstance& inst, const PhaseConfig& phases) {
  const double s = std::sqrt(inst.lambda * (1.0 - inst.lambda));
  if (inst.xi == 0.0 || s == 0.0)
    throw UndefinedCoherence("initial coherence vanishes (xi = 0 or lambda in {0,1})");
  if (inst.m == 0) return {1.0, 0.0};
  const double xs = inst.xi * s;
  const RawDecomposition d = decompose(phases, inst.lambda);
  if (d.sin_phi <= k_eps_degenerate) {
    const cplx c10 = evolved_by_oracle(inst, phases)(1, 0);
    return c10 / xs;
  }
  const double sm = std::sin(inst.m * d.phi), cm = std::cos(inst.m * d.phi);
  const double sm2 = sm * sm, smcm = sm * cm;
  const double w = 1.0 - 2.0 * inst.lambda;
  const double re =
      1.0 + (sm2 * (d.n1 * d.n3 * w - 2.0 * xs * (1.0 - d.n1 * d.n1)) + smcm * d.n2 * w) / xs;
  const double im =
      (sm2 * (2.0 * xs * d.n1 * d.n2 + d.n2 * d.n3 * w) + smcm * (2.0 * xs * d.n3 - d.n1 * w)) /
      xs;
  return {re, im};
}

double li_li_polynomial(double lambda) {
  check_lambda(lambda);
  const double u = 1.0 - lambda;
  return lambda * (1.0 + 4.0 * u * u);  // = 4l^3 - 8l^2 + 5l
}

double grover_optimal_iterations(double lambda) {
  if (!(lambda > 0.0 && lambda <= 1.0)) throw std::domain_error("lambda must be in (0, 1]");
  // Extended precision so representable answers (1/4 -> 1, 1/2 -> 1/2, 1 -> 0)
  // survive the final rounding to double exactly.
  const long double theta = 2.0L * std::asin(std::sqrt(static_cast<long double>(lambda)));
  const long double k = std::numbers::pi_v<long double> / (2.0L * theta) - 0.5L;
  return static_cast<double>(k);
}

std::int64_t grover_optimal_iterations_rounded(double lambda) {
  const double r = std::floor(grover_optimal_iterations(lambda) + 0.5);  // half-up
  if (r <= 0.0) return 0;
  if (r >= 9.2e18) return std::numeric_limits<std::int64_t>::max();
  return static_cast<std::int64_t>(r);
}

}  // namespace grover
