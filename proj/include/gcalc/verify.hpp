// Seeded randomized suites that check the algebraic identities of the engine
// case by case.  Cases are independent and can run on several threads.
#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "gcalc/invariants.hpp"

namespace gcalc {

struct UnknownSuite : Error {
  using Error::Error;
};

using Rng = std::mt19937_64;

// Shape of the random tangle programs used as test elements.
struct ProgramShape {
  int min_crossings = 1;
  int max_crossings = 4;
  int min_open = 1;  // stop stitching once this many strands are left
};

TangleProgram random_program(Rng& rng, const ProgramShape& shape = {});
// A braid word with 1..max_len letters on n strands.
BraidWord random_braid(Rng& rng, int n, int max_len);

struct CaseResult {
  size_t index = 0;
  bool pass = false;
  std::string detail;  // what was compared, or why the case failed
};

struct SuiteReport {
  std::string suite;
  uint64_t seed = 0;
  std::vector<CaseResult> cases;
  size_t passed() const;
  bool all_passed() const { return passed() == cases.size(); }
};

enum class Execution { Serial, Parallel };

const std::vector<std::string>& suite_names();
// Case i draws from an mt19937_64 seeded with (seed, i), so the outcome of a
// case does not depend on the execution mode or on the other cases.
SuiteReport run_suite(const std::string& name, uint64_t seed, size_t cases, Execution mode = Execution::Parallel);

}  // namespace gcalc
