#include <catch_amalgamated.hpp>

#include "gss/verify.hpp"

using namespace gss;

TEST_CASE("suite registry", "[verify]") {
  CHECK(suite_names().size() == 14);
  CHECK_THROWS_AS(run_suite("no-such-suite"), std::invalid_argument);
}

TEST_CASE("suite reports are reproducible", "[verify]") {
  VerifyOptions opt;
  opt.samples = 3200;
  for (const char* name : {"indec-acyclic", "poincare-series", "form-identities", "wheel-pairing"}) {
    const SuiteReport a = run_suite(name, opt);
    const SuiteReport b = run_suite(name, opt);
    INFO(name);
    CHECK(a.suite == name);
    CHECK(a.values == b.values);
    REQUIRE(a.checks.size() == b.checks.size());
    for (std::size_t i = 0; i < a.checks.size(); ++i) {
      CHECK(a.checks[i].name == b.checks[i].name);
      CHECK(a.checks[i].pass == b.checks[i].pass);
    }
  }
}

TEST_CASE("a report with a failed check does not pass", "[verify]") {
  SuiteReport r;
  CHECK_FALSE(r.passed());
  r.check("a", true);
  CHECK(r.passed());
  r.check("b", false, "why");
  CHECK_FALSE(r.passed());
}
