// Randomized suites: determinism and agreement of the two execution modes.
#include "doctest.h"
#include "gcalc/verify.hpp"

using namespace gcalc;

TEST_CASE("every suite passes a few cases") {
  for (const auto& name : suite_names()) {
    SuiteReport r = run_suite(name, 3, name == "fox-milnor" ? 4 : 12);
    for (const auto& c : r.cases) {
      INFO(name << " case " << c.index << ": " << c.detail);
      CHECK(c.pass);
    }
  }
}

TEST_CASE("serial and parallel runs agree") {
  for (const char* name : {"r3", "stitch-order", "skein"}) {
    SuiteReport a = run_suite(name, 42, 16, Execution::Serial);
    SuiteReport b = run_suite(name, 42, 16, Execution::Parallel);
    REQUIRE(a.cases.size() == b.cases.size());
    for (size_t i = 0; i < a.cases.size(); ++i) {
      CHECK(a.cases[i].index == i);
      CHECK(a.cases[i].pass == b.cases[i].pass);
      CHECK(a.cases[i].detail == b.cases[i].detail);
    }
  }
}

TEST_CASE("seeds select the cases") {
  SuiteReport a = run_suite("gassner", 1, 8);
  SuiteReport b = run_suite("gassner", 1, 8);
  SuiteReport c = run_suite("gassner", 2, 8);
  bool differs = false;
  for (size_t i = 0; i < a.cases.size(); ++i) {
    CHECK(a.cases[i].detail == b.cases[i].detail);
    differs = differs || a.cases[i].detail != c.cases[i].detail;
  }
  CHECK(differs);
  CHECK_THROWS_AS(run_suite("no-such-suite", 1, 1), UnknownSuite);
}

TEST_CASE("random programs") {
  Rng rng(17);
  for (int i = 0; i < 30; ++i) {
    TangleProgram p = random_program(rng, {2, 5, 3});
    GammaElement z = evaluate(p).tangle.gamma;
    CHECK(z.size() >= 3);
    CHECK(validate(z, true).empty());
  }
  BraidWord w = random_braid(rng, 4, 8);
  CHECK(!w.empty());
  CHECK(w.size() <= 8);
  for (const auto& l : w) CHECK((l.index >= 1 && l.index <= 3));
  CHECK(random_braid(rng, 1, 8).empty());
}
