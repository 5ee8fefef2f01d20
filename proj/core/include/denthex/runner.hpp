#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "denthex/condensation.hpp"
#include "denthex/lattice.hpp"

namespace denthex {

enum class Method { Auto, Oracle, Pfaffian, Formula };

Method method_from_name(const std::string& name);

/// Counts the tilings of the dented hexagon. Auto picks: a direct closed-form
/// when the region classifies, theorem 3 when k = 0, theorem 1 when the
/// southwestern side is beta-free, theorem 2 otherwise.
Count count_with_method(const HexDentSpec& spec, Method method);

struct VerifyRow {
  std::string method;
  Count value;
  double seconds;
};
struct VerifyReport {
  std::vector<VerifyRow> rows;
  bool all_agree = false;
};

/// Runs every applicable method and times each.
VerifyReport run_verify(const HexDentSpec& spec);

struct SweepOptions {
  long amax = 2, bmax = 2, cmax = 2, kmax = 1, nmax = 1;
  uint64_t seed = 1;
  long samples = 0;  // 0 = exhaustive over all dent configurations
  int threads = 0;   // 0 = DENTHEX_THREADS or hardware concurrency
};
struct SweepFailure {
  std::string spec_json;
  std::string detail;
};
struct SweepReport {
  long configs = 0;
  std::vector<SweepFailure> failures;
};

/// Cross-checks the oracle against every applicable theorem on each
/// configuration; failures carry a reproducer spec.
SweepReport run_sweep(const SweepOptions& opt);

struct IdentityReport {
  std::vector<std::pair<std::string, bool>> results;  // (name, passed)
  bool all_pass = false;
};

/// Chu-Vandermonde, Pfaff-Saalschuetz, the six contiguous relations, both Kuo
/// condensations and both dent recurrences, each over `trials` random
/// admissible instances.
IdentityReport run_identities(long trials, uint64_t seed);

}  // namespace denthex
