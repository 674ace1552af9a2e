#pragma once

#include <cstdint>
#include <vector>

#include "grover/core.hpp"
#include "grover/mat2.hpp"

namespace grover {

/// Brute-force checks for the closed forms. Two independent references:
/// m-fold conjugation in the 2x2 subspace, and a full 2^n statevector circuit.

inline constexpr int k_max_qubits = 14;

/// rho_m = G^m rho_0 (G^dagger)^m by repeated conjugation.
/// Throws std::invalid_argument if g is not unitary (1e-9), rho0 is not
/// Hermitian with unit trace (1e-9), or m < 0.
DensityMatrix2 evolve_density(const Unitary2& g, const DensityMatrix2& rho0, int m);

/// A full n-qubit register evolved one Grover iteration at a time.
/// O(2^n) per iteration; n is capped at k_max_qubits.
class FullRegister {
 public:
  /// Uniform superposition |psi> over all 2^n basis states.
  static FullRegister uniform(int n, std::vector<std::uint32_t> marked);
  /// |T>: uniform over the marked set only.
  static FullRegister marked_uniform(int n, std::vector<std::uint32_t> marked);
  /// |R>: uniform over the complement of the marked set (requires a nonempty
  /// complement).
  static FullRegister unmarked_uniform(int n, std::vector<std::uint32_t> marked);

  /// Oracle phase on the marked amplitudes, then the diffuser as a rank-1
  /// update: amp <- e^{i beta} amp + (1 - e^{i beta}) <psi|amp> / sqrt(N).
  void apply_iteration(const PhaseConfig& phases);

  double marked_probability() const;
  double norm() const;
  int qubits() const { return n_; }
  double lambda() const;

 private:
  FullRegister(int n, std::vector<std::uint32_t> marked);
  int n_;
  std::vector<std::uint32_t> marked_;  // sorted, deduplicated
  std::vector<cplx> amp_;
};

/// Success probability after m iterations of the full-register circuit.
/// xi01 selects the start: 1 = pure |psi>, 0 = the dephased mixture, evolved as
/// the lambda/(1-lambda)-weighted classical mixture of the |T> and |R> branches.
/// Throws std::invalid_argument on bad n, marked set, m, or xi01 not in {0,1}.
double full_circuit_probability(int n, const std::vector<std::uint32_t>& marked,
                                const PhaseConfig& phases, int m, int xi01);

}  // namespace grover
