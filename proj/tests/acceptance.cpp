// One PASS/FAIL line per acceptance criterion; exits nonzero on any FAIL.
// Usage: acceptance [cache_dir]
#include <chrono>
#include <cstdio>
#include <string>
#include <utility>
#include <vector>

#include "gss/verify.hpp"

int main(int argc, char** argv) {
  gss::VerifyOptions opt;
  if (argc > 1) opt.cache_dir = argv[1];
  opt.samples = 1000000;
  const std::vector<std::pair<int, std::string>> criteria{
      {1, "bialgebra-axioms"},   {2, "forest-homology"}, {3, "quotient-homology"}, {4, "indec-acyclic"},
      {5, "wheel-primitive"},    {6, "vertex-page"},     {7, "wheel-differential"}, {8, "bar-spectral"},
      {9, "poincare-series"},    {10, "diagonal-growth"}, {11, "sym-dims"},         {12, "form-identities"},
      {13, "wheel-pairing"},     {14, "linalg-oracle"},
  };
  int failures = 0;
  for (const auto& [n, suite] : criteria) {
    const auto start = std::chrono::steady_clock::now();
    const gss::SuiteReport r = gss::run_suite(suite, opt);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool pass = r.passed() && !r.infeasible;
    failures += !pass;
    std::printf("%s criterion %2d %-18s %s [%s] (%.1fs)\n", pass ? "PASS" : "FAIL", n, suite.c_str(),
                r.target.c_str(), r.truncation.c_str(), secs);
    for (const auto& [k, v] : r.values) std::printf("     %s = %s\n", k.c_str(), v.c_str());
    for (const auto& c : r.checks) {
      if (!c.pass) std::printf("     failed: %s %s\n", c.name.c_str(), c.detail.c_str());
    }
    if (r.infeasible) std::printf("     truncation infeasible\n");
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria pass\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
