#include <algorithm>
#include <string>
#include <vector>

#include "doctest.h"
#include "grover/validate.hpp"

using grover::CheckResult;
using grover::ValidateOptions;

namespace {

const CheckResult* find(const std::vector<CheckResult>& checks, const std::string& name) {
  const auto it =
      std::find_if(checks.begin(), checks.end(), [&](const CheckResult& c) { return c.name == name; });
  return it == checks.end() ? nullptr : &*it;
}

TEST_CASE("run_validation passes clean and reports stable check names") {
  ValidateOptions opts;
  opts.seed = 2024;
  opts.n_max = 3;  // keep full-register work small; the acceptance gate goes deeper
  const auto checks = grover::run_validation(opts);
  CHECK(grover::all_passed(checks));
  for (const char* name : {"li-li-regression", "closed-vs-oracle", "pauli-reconstruction",
                           "full-register", "threshold-080", "threshold-090", "optimal-alpha-080",
                           "exact-success-root", "xi-sensitivity"})
    CHECK_MESSAGE(find(checks, name) != nullptr, name);
}

TEST_CASE("run_validation is deterministic for a fixed seed") {
  ValidateOptions opts;
  opts.seed = 31337;
  opts.n_max = 2;
  const auto a = grover::run_validation(opts);
  const auto b = grover::run_validation(opts);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].name == b[i].name);
    CHECK(a[i].pass == b[i].pass);
    CHECK(a[i].detail == b[i].detail);
  }
}

TEST_CASE("the perturbation seam proves the oracle check can fail") {
  ValidateOptions opts;
  opts.seed = 2024;
  opts.n_max = 2;
  opts.perturbation = 1e-6;
  const auto checks = grover::run_validation(opts);
  const CheckResult* c = find(checks, "closed-vs-oracle");
  REQUIRE(c != nullptr);
  CHECK_FALSE(c->pass);
  CHECK_FALSE(grover::all_passed(checks));
}

TEST_CASE("n_max outside 2..14 is rejected") {
  ValidateOptions opts;
  opts.n_max = 1;
  CHECK_THROWS_AS(grover::run_validation(opts), std::invalid_argument);
  opts.n_max = 15;
  CHECK_THROWS_AS(grover::run_validation(opts), std::invalid_argument);
}

}  // namespace
