#pragma once

#include "lefschetz/instance.hpp"
#include "lefschetz/report.hpp"

namespace lefschetz {

struct VerifyConfig {
  // Comma-separated subset of
  // hilbert,duality,injectivity,wlp,slp,inverse,strata,locus,lemmas, or "all".
  std::string suites = "all";
  int trials = 8;
  std::uint64_t seed = 0;
  int locus_samples = 2;          // lines per locus scan
  int strata_samples = 200;       // random ideal members per histogram
  int pair_samples = 200;         // (z, w) pairs for the span bounds
  int pencil_samples = 3;         // random pencils profiled
  std::uint64_t scan_prime = 3;   // F_p' used by the rank-1 scan
  std::int64_t scan_budget = 200000;
};

// Runs the selected suites in registry order and aggregates one record per
// check. A failed regularity check short-circuits everything else. The same
// (instance, config) always produces the same records, timing aside.
Report run_verify(const Instance& inst, const VerifyConfig& cfg);

// Regenerates until a regular presentation appears; returns it together with
// the number of attempts consumed.
std::pair<Instance, int> gen_regular(int m, int d, const FieldSpec& field, std::uint64_t seed);

}  // namespace lefschetz
