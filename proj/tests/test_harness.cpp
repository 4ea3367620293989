#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qvir/sweep.hpp"

using namespace qvir;

namespace {
SweepConfig tiny() {
  SweepConfig cfg;
  cfg.bands = {3};
  cfg.t2s = {4};
  cfg.lmax = 4;
  cfg.order = 6;
  cfg.jobs = 2;
  return cfg;
}
}  // namespace

TEST_CASE("suite registry") {
  const auto& names = suite_names();
  CHECK(std::find(names.begin(), names.end(), "all") != names.end());
  CHECK(std::find(names.begin(), names.end(), "abf") != names.end());
  CHECK_THROWS_AS(run_suite("nonsense", tiny()), std::invalid_argument);
}

TEST_CASE("every suite passes on a small grid") {
  for (const std::string& name : suite_names()) {
    if (name == "all") continue;
    CAPTURE(name);
    Report rep = run_suite(name, tiny());
    CHECK(!rep.empty());
    for (const auto& r : rep) {
      CAPTURE(r.identity);
      CAPTURE(r.indices);
      CAPTURE(r.detail);
      CHECK(r.pass);
    }
  }
}

TEST_CASE("results are deterministic across thread counts") {
  SweepConfig one = tiny();
  one.jobs = 1;
  SweepConfig many = tiny();
  many.jobs = 5;
  for (const std::string& name : {std::string("abf"), std::string("recurrences")}) {
    Report a = run_suite(name, one);
    Report b = run_suite(name, many);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
      CHECK(a[i].identity == b[i].identity);
      CHECK(a[i].indices == b[i].indices);
      CHECK(a[i].pass == b[i].pass);
    }
  }
}
