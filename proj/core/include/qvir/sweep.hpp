#pragma once

// Identity sweep harness: named suites that cross-check the enumerated
// generating functions against their bosonic and fermionic closed forms
// over parameter grids, returning one CheckRecord per identity instance.

#include <cstdint>
#include <string>
#include <vector>

#include "qvir/report.hpp"

namespace qvir {

struct SweepConfig {
  std::vector<int> bands{3, 4, 5};  // band-path band sizes
  std::vector<int> t2s{4, 5, 6, 7};  // half-lattice bands, doubled
  int lmax = 8;        // maximum path length (doubled for half-lattice paths)
  std::int64_t order = 12;  // series truncation order for character suites
  int jobs = 0;        // worker threads; 0 = QVIR_JOBS env var, then hardware
};

// Suite names accepted by run_suite: trinomial, abf, half, rabf, bijection,
// characters, recurrences, sharpness, and the catch-all "all".
const std::vector<std::string>& suite_names();

// Runs the named suite over the configured grid.  Results come back in a
// deterministic order independent of the number of worker threads.  An
// unknown suite name throws std::invalid_argument.
Report run_suite(const std::string& suite, const SweepConfig& cfg);

}  // namespace qvir
