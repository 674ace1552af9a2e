#pragma once

#include <complex>
#include <cstdint>

#include "grover/mat2.hpp"

namespace grover {

/// One generalized Grover iteration is the oracle phase shift followed by the
/// generalized diffuser:
///
///   U(alpha) = I - (1 - e^{i alpha}) |T><T|          (marked-state phase)
///   V(beta)  = e^{i beta} I + (1 - e^{i beta}) |psi><psi|   (uniform-state phase)
///
/// applied in that order, so as a matrix G = V(beta) * U(alpha). alpha = beta = pi
/// recovers the textbook Grover iteration up to a global phase.
///
/// Everything in this library works in the two-dimensional subspace spanned by
/// the unmarked uniform state |R> (index 0) and the marked uniform state |T>
/// (index 1), with |psi> = sqrt(1-lambda)|R> + sqrt(lambda)|T>.

using Unitary2 = Mat2;
using DensityMatrix2 = Mat2;

/// Oracle and diffuser phases, canonicalized to (-pi, pi] on construction.
struct PhaseConfig {
  double alpha;
  double beta;
  PhaseConfig(double alpha_rad, double beta_rad);
};

/// A problem instance: marked fraction lambda in [0,1], initial coherence
/// parameter xi in [-1,1], iteration count m >= 0. Validated on construction
/// (std::domain_error otherwise).
struct SearchInstance {
  double lambda;
  double xi;
  int m;
  SearchInstance(double lambda_, double xi_, int m_);
};

/// SU(2) data of one iteration: G = e^{i delta} (cos(phi) I - i sin(phi) n.sigma),
/// with delta = (alpha+beta)/2, phi in [0, pi], and the axis sign fixed so that
/// the right-hand side reproduces build_g entrywise (the reconstruction below is
/// an identity, not a convention left to the caller).
struct PauliDecomposition {
  double delta;
  double phi;
  double n1, n2, n3;
};

/// Axis extraction is refused when sin(phi) <= this (DegenerateRotation); the
/// closed-form evaluators switch to the matrix-power fallback at the same cut.
inline constexpr double k_eps_degenerate = 1e-9;

/// The iteration matrix G = V(beta) U(alpha) on span{|R>,|T>}.
/// Throws std::domain_error unless 0 <= lambda <= 1.
Unitary2 build_g(const PhaseConfig& phases, double lambda);

/// rho_0 = [[1-lambda, xi s], [xi s, lambda]] with s = sqrt(lambda(1-lambda)).
/// xi = 1 is the pure uniform start, xi = 0 the fully dephased mixture.
DensityMatrix2 build_initial_density(double lambda, double xi);

/// Rotation angle and axis of G. Throws DegenerateRotation when the axis is
/// undefined (see k_eps_degenerate), std::domain_error on bad lambda.
PauliDecomposition pauli_decompose(const PhaseConfig& phases, double lambda);

/// Reconstruct e^{i delta} (cos(phi) I - i sin(phi) n.sigma) as a matrix.
/// For valid decompositions this equals build_g to floating-point accuracy.
Unitary2 pauli_reconstruct(const PauliDecomposition& d);

/// Success probability <T| rho_m |T> after m iterations, in closed form:
///
///   P = lambda + sin^2(m phi) (1 - n3^2) (1 - 2 lambda)
///       - 2 xi s [ n1 n3 sin^2(m phi) - n2 sin(m phi) cos(m phi) ]
///
/// Exact short-circuits: m = 0 or lambda in {0,1} return lambda untouched.
/// Near-degenerate rotations are evaluated by the matrix-power oracle instead.
double success_probability(const SearchInstance& inst, const PhaseConfig& phases);

/// The xi = 0 specialization P = lambda + sin^2(m phi)(1 - n3^2)(1 - 2 lambda),
/// kept as its own entry point so the dephased branch is testable directly.
double success_probability_dephased(double lambda, const PhaseConfig& phases, int m);

/// Coherence ratio C = <T| rho_m |R> / <T| rho_0 |R>; C = 1 at m = 0.
/// Throws UndefinedCoherence when xi = 0 or lambda in {0,1}. Near-degenerate
/// rotations fall back to the matrix-power oracle.
std::complex<double> coherence_ratio(const SearchInstance& inst, const PhaseConfig& phases);

/// P(lambda) after one iteration of the phase-matched pair alpha = pi/2,
/// beta = -pi/2 with a pure start: P = 4 lambda^3 - 8 lambda^2 + 5 lambda.
/// P >= 25/27 on [1/3, 1].
double li_li_polynomial(double lambda);

/// Optimal (real-valued) iteration count for standard Grover,
/// k = pi / (2 theta) - 1/2 with theta = 2 asin(sqrt(lambda)); evaluated through
/// extended precision so representable results (e.g. lambda = 1/4 -> 1.0) come
/// out exact. Throws std::domain_error unless 0 < lambda <= 1.
double grover_optimal_iterations(double lambda);

/// grover_optimal_iterations rounded half-up to an integer, clamped to >= 0.
std::int64_t grover_optimal_iterations_rounded(double lambda);

}  // namespace grover
