#pragma once

#include <vector>

#include "grover/angles.hpp"
#include "grover/core.hpp"

namespace grover {

/// Threshold scans over the phase-matched family beta = -alpha, xi = 1 unless
/// stated otherwise. All grid work is deterministic: fixed grids, fixed
/// refinement schedules, and results independent of the worker thread count.

/// Inclusive endpoint grid: steps is the number of points (>= 1).
struct GridSpec {
  double lo;
  double hi;
  int steps;
};

struct ScanConfig {
  int m = 1;
  double threshold = 0.5;
  GridSpec alpha_grid{0.05 * k_pi, k_pi, 2000};
  GridSpec lambda_grid{0.001, 1.0, 4000};
  double refine_tol = 1e-6;
};

struct ScanResult {
  double alpha;              // radians
  int m;
  double threshold;
  double lambda_min;         // smallest feasible marked fraction
  double p_min_over_range;   // min P over [lambda_min, 1]
  std::vector<double> roots; // lambda values with P = 1 (exact success)
};

/// Smallest lambda such that P(lambda') >= threshold - refine_tol for every
/// grid lambda' >= lambda (interior dips are refined, not just grid-sampled).
/// Throws NoFeasibleRange if no suffix of the grid qualifies,
/// std::invalid_argument on a malformed config.
double lambda_lower_bound(double alpha, int m, double threshold);
double lambda_lower_bound(double alpha, int m, double threshold, const ScanConfig& cfg);

/// Minimize lambda_lower_bound over the alpha grid, then refine the winning
/// cell by golden-section search down to refine_tol. Ties prefer the smaller
/// alpha. Throws NoFeasibleRange if no alpha is feasible.
ScanResult optimize_alpha(int m, double threshold);
ScanResult optimize_alpha(const ScanConfig& cfg);

/// All lambda in (0,1) where P reaches 1 (within 1e-6, confirmed against the
/// matrix-power oracle) for beta = -alpha, xi = 1. Sorted ascending.
std::vector<double> exact_success_roots(double alpha, int m);
std::vector<double> exact_success_roots(double alpha, int m, const ScanConfig& cfg);

/// P(dephased) / P(coherent) at one point of the beta = -alpha family.
/// Throws std::domain_error when the coherent probability is below 1e-12.
double xi_sensitivity(double lambda, double alpha, int m);

struct ProfilePoint {
  double lambda;
  double p;
};

/// P over a lambda grid at fixed alpha (beta = -alpha), m, xi.
std::vector<ProfilePoint> probability_profile(double alpha, int m, double xi,
                                              const GridSpec& lambda_grid);

/// Worker threads used by the scans: GROVER_EXACT_THREADS if set to a positive
/// integer, otherwise the hardware concurrency (at least 1).
int scan_thread_count();

}  // namespace grover
