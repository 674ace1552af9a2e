#include "grover/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

namespace grover {
namespace {

std::vector<std::uint32_t> checked_marked(int n, std::vector<std::uint32_t> marked) {
  if (n < 1 || n > k_max_qubits) throw std::invalid_argument("qubit count out of range");
  if (marked.empty()) throw std::invalid_argument("marked set must be nonempty");
  std::sort(marked.begin(), marked.end());
  marked.erase(std::unique(marked.begin(), marked.end()), marked.end());
  const std::uint64_t dim = std::uint64_t{1} << n;
  if (marked.back() >= dim) throw std::invalid_argument("marked index out of range");
  return marked;
}

}  // namespace

DensityMatrix2 evolve_density(const Unitary2& g, const DensityMatrix2& rho0, int m) {
  if (m < 0) throw std::invalid_argument("iteration count must be >= 0");
  if (max_abs_diff(g * g.adjoint(), Mat2::identity()) > 1e-9)
    throw std::invalid_argument("g is not unitary");
  if (max_abs_diff(rho0, rho0.adjoint()) > 1e-9 || std::abs(rho0.trace() - cplx{1.0}) > 1e-9)
    throw std::invalid_argument("rho0 is not a density matrix");
  DensityMatrix2 rho = rho0;
  const Unitary2 gd = g.adjoint();
  for (int i = 0; i < m; ++i) rho = g * rho * gd;
  return rho;
}

FullRegister::FullRegister(int n, std::vector<std::uint32_t> marked)
    : n_(n), marked_(std::move(marked)), amp_(std::size_t{1} << n, cplx{0.0}) {}

FullRegister FullRegister::uniform(int n, std::vector<std::uint32_t> marked) {
  FullRegister r(n, checked_marked(n, std::move(marked)));
  const double a = 1.0 / std::sqrt(static_cast<double>(r.amp_.size()));
  std::fill(r.amp_.begin(), r.amp_.end(), cplx{a});
  return r;
}

FullRegister FullRegister::marked_uniform(int n, std::vector<std::uint32_t> marked) {
  FullRegister r(n, checked_marked(n, std::move(marked)));
  const double a = 1.0 / std::sqrt(static_cast<double>(r.marked_.size()));
  for (std::uint32_t idx : r.marked_) r.amp_[idx] = a;
  return r;
}

FullRegister FullRegister::unmarked_uniform(int n, std::vector<std::uint32_t> marked) {
  FullRegister r(n, checked_marked(n, std::move(marked)));
  const std::size_t unmarked = r.amp_.size() - r.marked_.size();
  if (unmarked == 0) throw std::invalid_argument("no unmarked states");
  const double a = 1.0 / std::sqrt(static_cast<double>(unmarked));
  std::fill(r.amp_.begin(), r.amp_.end(), cplx{a});
  for (std::uint32_t idx : r.marked_) r.amp_[idx] = 0.0;
  return r;
}

void FullRegister::apply_iteration(const PhaseConfig& phases) {
  const cplx ea = std::polar(1.0, phases.alpha);
  const cplx eb = std::polar(1.0, phases.beta);
  for (std::uint32_t idx : marked_) amp_[idx] *= ea;
  cplx acc{0.0};
  for (const cplx& a : amp_) acc += a;  // fixed order: deterministic
  const double inv_sqrt_dim = 1.0 / std::sqrt(static_cast<double>(amp_.size()));
  const cplx add = (1.0 - eb) * (acc * inv_sqrt_dim) * inv_sqrt_dim;
  for (cplx& a : amp_) a = eb * a + add;
}

double FullRegister::marked_probability() const {
  double p = 0.0;
  for (std::uint32_t idx : marked_) p += std::norm(amp_[idx]);
  return p;
}

double FullRegister::norm() const {
  double p = 0.0;
  for (const cplx& a : amp_) p += std::norm(a);
  return std::sqrt(p);
}

double FullRegister::lambda() const {
  return static_cast<double>(marked_.size()) / static_cast<double>(amp_.size());
}

double full_circuit_probability(int n, const std::vector<std::uint32_t>& marked,
                                const PhaseConfig& phases, int m, int xi01) {
  if (m < 0) throw std::invalid_argument("iteration count must be >= 0");
  if (xi01 != 0 && xi01 != 1) throw std::invalid_argument("xi01 must be 0 or 1");
  if (xi01 == 1) {
    FullRegister reg = FullRegister::uniform(n, marked);
    for (int i = 0; i < m; ++i) reg.apply_iteration(phases);
    return reg.marked_probability();
  }
  // Dephased start: classical mixture of the marked and unmarked branches.
  FullRegister t = FullRegister::marked_uniform(n, marked);
  const double lam = t.lambda();
  for (int i = 0; i < m; ++i) t.apply_iteration(phases);
  double p = lam * t.marked_probability();
  if (lam < 1.0) {
    FullRegister r = FullRegister::unmarked_uniform(n, marked);
    for (int i = 0; i < m; ++i) r.apply_iteration(phases);
    p += (1.0 - lam) * r.marked_probability();
  }
  return p;
}

}  // namespace grover
