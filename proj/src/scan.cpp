#include "grover/scan.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <limits>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "grover/errors.hpp"
#include "grover/oracle.hpp"

namespace grover {
namespace {

constexpr double k_inf = std::numeric_limits<double>::infinity();
constexpr double k_root_tol = 1e-6;

double eval_p(double lambda, double alpha, int m, double xi = 1.0) {
  return success_probability(SearchInstance(lambda, xi, m), PhaseConfig(alpha, -alpha));
}

void check_grid(const GridSpec& g, bool lambda_domain) {
  if (!std::isfinite(g.lo) || !std::isfinite(g.hi) || g.steps < 1 || g.lo > g.hi)
    throw std::invalid_argument("malformed grid");
  if (lambda_domain && !(g.lo >= 0.0 && g.hi <= 1.0))
    throw std::invalid_argument("lambda grid must lie in [0, 1]");
}

void check_config(const ScanConfig& cfg) {
  if (cfg.m < 0) throw std::invalid_argument("iteration count must be >= 0");
  if (!(cfg.threshold > 0.0 && cfg.threshold < 1.0))
    throw std::invalid_argument("threshold must be in (0, 1)");
  if (!(cfg.refine_tol > 0.0) || !std::isfinite(cfg.refine_tol))
    throw std::invalid_argument("refine_tol must be positive");
  check_grid(cfg.alpha_grid, false);
  check_grid(cfg.lambda_grid, true);
}

std::vector<double> grid_points(const GridSpec& g) {
  std::vector<double> xs(static_cast<std::size_t>(g.steps));
  if (g.steps == 1) {
    xs[0] = g.lo;
    return xs;
  }
  const double step = (g.hi - g.lo) / (g.steps - 1);
  for (int i = 0; i < g.steps; ++i) xs[static_cast<std::size_t>(i)] = g.lo + step * i;
  xs.back() = g.hi;  // inclusive endpoint, exactly
  return xs;
}

/// Slot-per-index fill: results are identical for any worker count.
void fill_values(std::vector<double>& out, const std::function<double(int)>& fn, bool parallel) {
  const int n = static_cast<int>(out.size());
  const int workers = parallel ? std::min(scan_thread_count(), n) : 1;
  if (workers <= 1 || n < 64) {
    for (int i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = fn(i);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(workers));
  std::exception_ptr err;
  std::mutex err_mu;
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      const int lo = static_cast<int>(static_cast<long long>(n) * w / workers);
      const int hi = static_cast<int>(static_cast<long long>(n) * (w + 1) / workers);
      try {
        for (int i = lo; i < hi; ++i) out[static_cast<std::size_t>(i)] = fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lk(err_mu);
        if (!err) err = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  if (err) std::rethrow_exception(err);
}

struct RefineResult {
  double x;
  double f;
};

/// Deterministic golden-section minimization; returns the best probe seen
/// (ties prefer smaller x).
RefineResult golden_min(const std::function<double(double)>& f, double lo, double hi, double tol) {
  constexpr double invphi = 0.6180339887498949;
  double a = lo, b = hi;
  double c = b - invphi * (b - a);
  double d = a + invphi * (b - a);
  double fc = f(c), fd = f(d);
  RefineResult best = (fd < fc || (fd == fc && d < c)) ? RefineResult{d, fd} : RefineResult{c, fc};
  for (int it = 0; it < 200 && b - a > tol; ++it) {
    if (fc <= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - invphi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + invphi * (b - a);
      fd = f(d);
    }
    const RefineResult cand =
        (fd < fc || (fd == fc && d < c)) ? RefineResult{d, fd} : RefineResult{c, fc};
    if (cand.f < best.f || (cand.f == best.f && cand.x < best.x)) best = cand;
  }
  return best;
}

/// Smallest x in [lo, hi] with p(x) >= thr, assuming p crosses upward once.
double bisect_crossing(const std::function<double(double)>& p, double lo, double hi, double thr) {
  for (int it = 0; it < 100 && hi - lo > 1e-15; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (p(mid) >= thr) hi = mid; else lo = mid;
  }
  return hi;
}

struct BoundResult {
  double lambda_min;
  double p_min;
};

BoundResult lower_bound_impl(double alpha, const ScanConfig& cfg, bool parallel) {
  const std::vector<double> lam = grid_points(cfg.lambda_grid);
  const int n = static_cast<int>(lam.size());
  const double thr = cfg.threshold;
  const double slack = cfg.refine_tol;
  auto p_of = [&](double l) { return eval_p(l, alpha, cfg.m); };
  std::vector<double> ps(lam.size());
  fill_values(ps, [&](int i) { return p_of(lam[static_cast<std::size_t>(i)]); }, parallel);

  // First grid index whose whole suffix clears the threshold (within slack).
  std::vector<double> sufmin(lam.size());
  double run = k_inf;
  for (int i = n - 1; i >= 0; --i) {
    run = std::min(run, ps[static_cast<std::size_t>(i)]);
    sufmin[static_cast<std::size_t>(i)] = run;
  }
  int first = -1;
  for (int i = 0; i < n; ++i) {
    if (sufmin[static_cast<std::size_t>(i)] >= thr - slack) {
      first = i;
      break;
    }
  }
  if (first < 0) throw NoFeasibleRange("no lambda in the grid meets the threshold");

  int start = first;
  double cur = (first == 0) ? lam[0] : bisect_crossing(p_of, lam[first - 1], lam[first], thr);

  // Interior dips between grid points can undercut the threshold even when the
  // grid values do not; refine every local minimum right of cur and jump past
  // any dip that fails.
  for (int guard = 0; guard < 64; ++guard) {
    bool restarted = false;
    for (int j = std::max(start, 1); j + 1 < n && !restarted; ++j) {
      const std::size_t ju = static_cast<std::size_t>(j);
      if (!(ps[ju] <= ps[ju - 1] && ps[ju] <= ps[ju + 1])) continue;
      if (lam[ju + 1] <= cur) continue;
      const RefineResult dip = golden_min(p_of, lam[ju - 1], lam[ju + 1], 1e-10);
      if (dip.f < thr - slack && dip.x > cur) {
        int k = j + 1;
        while (k < n && ps[static_cast<std::size_t>(k)] < thr - slack) ++k;
        if (k >= n) throw NoFeasibleRange("threshold infeasible past interior dip");
        cur = bisect_crossing(p_of, dip.x, lam[static_cast<std::size_t>(k)], thr);
        start = k;
        restarted = true;
      }
    }
    if (!restarted) break;
  }

  double pmin = p_of(cur);
  for (int j = std::max(start, 1); j < n; ++j) {
    const std::size_t ju = static_cast<std::size_t>(j);
    if (lam[ju] <= cur) continue;
    pmin = std::min(pmin, ps[ju]);
    if (j + 1 < n && ps[ju] <= ps[ju - 1] && ps[ju] <= ps[ju + 1])
      pmin = std::min(pmin, golden_min(p_of, lam[ju - 1], lam[ju + 1], 1e-10).f);
  }
  return {cur, pmin};
}

ScanConfig with_defaults(int m, double threshold) {
  ScanConfig cfg;
  cfg.m = m;
  cfg.threshold = threshold;
  return cfg;
}

}  // namespace

int scan_thread_count() {
  if (const char* env = std::getenv("GROVER_EXACT_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<int>(std::min(v, 64L));
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(std::min(hw, 16u));
}

double lambda_lower_bound(double alpha, int m, double threshold) {
  return lambda_lower_bound(alpha, m, threshold, with_defaults(m, threshold));
}

double lambda_lower_bound(double alpha, int m, double threshold, const ScanConfig& cfg) {
  ScanConfig c = cfg;
  c.m = m;
  c.threshold = threshold;
  check_config(c);
  return lower_bound_impl(alpha, c, true).lambda_min;
}

ScanResult optimize_alpha(int m, double threshold) {
  return optimize_alpha(with_defaults(m, threshold));
}

ScanResult optimize_alpha(const ScanConfig& cfg) {
  check_config(cfg);
  const std::vector<double> alphas = grid_points(cfg.alpha_grid);
  const int n = static_cast<int>(alphas.size());
  auto bound_of = [&](double a) {
    try {
      return lower_bound_impl(a, cfg, false).lambda_min;
    } catch (const NoFeasibleRange&) {
      return k_inf;
    }
  };
  std::vector<double> lmin(alphas.size());
  fill_values(lmin, [&](int i) { return bound_of(alphas[static_cast<std::size_t>(i)]); }, true);
  int best = 0;
  for (int i = 1; i < n; ++i)
    if (lmin[static_cast<std::size_t>(i)] < lmin[static_cast<std::size_t>(best)]) best = i;
  if (lmin[static_cast<std::size_t>(best)] == k_inf)
    throw NoFeasibleRange("no alpha in the grid admits the threshold");

  RefineResult r{alphas[static_cast<std::size_t>(best)], lmin[static_cast<std::size_t>(best)]};
  const double lo = alphas[static_cast<std::size_t>(std::max(0, best - 1))];
  const double hi = alphas[static_cast<std::size_t>(std::min(n - 1, best + 1))];
  if (hi > lo) {
    const RefineResult g = golden_min(bound_of, lo, hi, cfg.refine_tol);
    if (g.f < r.f || (g.f == r.f && g.x < r.x)) r = g;
  }

  const BoundResult fin = lower_bound_impl(r.x, cfg, true);
  ScanResult out;
  out.alpha = r.x;
  out.m = cfg.m;
  out.threshold = cfg.threshold;
  out.lambda_min = fin.lambda_min;
  out.p_min_over_range = fin.p_min;
  out.roots = exact_success_roots(r.x, cfg.m, cfg);
  return out;
}

std::vector<double> exact_success_roots(double alpha, int m) {
  ScanConfig cfg;
  cfg.m = m;
  return exact_success_roots(alpha, m, cfg);
}

std::vector<double> exact_success_roots(double alpha, int m, const ScanConfig& cfg) {
  if (m < 0) throw std::invalid_argument("iteration count must be >= 0");
  check_grid(cfg.lambda_grid, true);
  std::vector<double> roots;
  if (m == 0) return roots;  // P = lambda < 1 everywhere interior
  const std::vector<double> lam = grid_points(cfg.lambda_grid);
  const int n = static_cast<int>(lam.size());
  std::vector<double> ps(lam.size());
  fill_values(ps, [&](int i) { return eval_p(lam[static_cast<std::size_t>(i)], alpha, m); }, true);
  auto neg = [&](double l) { return -eval_p(l, alpha, m); };
  const PhaseConfig ph(alpha, -alpha);
  for (int j = 1; j + 1 < n; ++j) {
    const std::size_t ju = static_cast<std::size_t>(j);
    if (!(ps[ju] >= ps[ju - 1] && ps[ju] >= ps[ju + 1])) continue;
    const RefineResult r = golden_min(neg, lam[ju - 1], lam[ju + 1], 1e-12);
    const double lr = r.x, pr = -r.f;
    if (pr <= 1.0 - k_root_tol) continue;
    if (lr <= 1e-9 || lr >= 1.0 - 1e-9) continue;
    const double po =
        evolve_density(build_g(ph, lr), build_initial_density(lr, 1.0), m)(1, 1).real();
    if (po <= 1.0 - k_root_tol) continue;  // closed form must agree with the oracle
    if (!roots.empty() && lr - roots.back() < 50.0 * cfg.refine_tol) continue;
    roots.push_back(lr);
  }
  return roots;
}

double xi_sensitivity(double lambda, double alpha, int m) {
  const PhaseConfig ph(alpha, -alpha);
  const double p1 = success_probability(SearchInstance(lambda, 1.0, m), ph);
  if (p1 < 1e-12)
    throw std::domain_error("coherent success probability below 1e-12; ratio undefined");
  return success_probability_dephased(lambda, ph, m) / p1;
}

std::vector<ProfilePoint> probability_profile(double alpha, int m, double xi,
                                              const GridSpec& lambda_grid) {
  check_grid(lambda_grid, true);
  (void)SearchInstance(lambda_grid.lo, xi, m);  // validate xi and m up front
  const std::vector<double> lam = grid_points(lambda_grid);
  std::vector<double> ps(lam.size());
  fill_values(ps, [&](int i) { return eval_p(lam[static_cast<std::size_t>(i)], alpha, m, xi); },
              true);
  std::vector<ProfilePoint> out(lam.size());
  for (std::size_t i = 0; i < lam.size(); ++i) out[i] = {lam[i], ps[i]};
  return out;
}

}  // namespace grover
