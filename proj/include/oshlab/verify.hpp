#pragma once

// Randomized and exhaustive cross-validation suites. Each suite checks one
// advertised guarantee of the library against an independent brute-force
// computation and reports how many instances it covered.

#include <cstdint>
#include <string>
#include <vector>

#include "oshlab/core.hpp"

namespace oshlab {

struct VerifyOptions {
  std::uint64_t seed = 0x05EE0DABCDE1234FULL;
  // Random-corpus shape: `trials` families for every ground size in
  // [n_min, n_max], cycling through a fixed list of densities.
  int trials = 1000;
  int n_min = 5;
  int n_max = 10;
  // Also sweep every family over [1]..[4] exhaustively.
  bool exhaustive = true;
  // Ground-size cap for constructed witnesses; instances whose construction
  // would exceed it are counted as skipped.
  int max_ground = 22;
  // How many random families per ground size get the expensive per-member
  // invariant checks.
  int invariant_prefix = 200;
};

struct SuiteReport {
  std::string suite;
  bool passed = false;
  std::uint64_t checked = 0;
  std::uint64_t skipped = 0;
  std::string detail;
  double seconds = 0.0;
};

// Iterated single-element shifts produce exactly the direct closure.
SuiteReport verify_shift_closure(const VerifyOptions& opt);

// Size, inclusion, downset, idempotence and complement laws of the three
// trace collections.
SuiteReport verify_closure_laws(const VerifyOptions& opt);

// Every target over [8] whose dyadic criterion sum stays below the chain
// bound (1..3) gets a constructed witness that verifies.
SuiteReport verify_witness_construction(const VerifyOptions& opt);

// Exhaustive searches over tiny grounds agree with the criterion: failures
// of the criterion admit no witness, and any found witness implies it holds.
SuiteReport verify_witness_nonexistence(const VerifyOptions& opt);

// The ballot/cardinality formula for runs of consecutive complete levels
// matches the closure computed by shifting.
SuiteReport verify_consecutive_levels(const VerifyOptions& opt);

// The dominance-minimal-set description of two-level closures matches the
// brute closure on every subset, and the listed sets are genuinely minimal.
SuiteReport verify_two_level_minimals(const VerifyOptions& opt);

// Standard-order witnesses, the per-stage shift invariant, and the
// structural properties of two-level closures (equal prefixes, the
// even-prefix-plus-odd exclusion, the ballot-defect bound).
SuiteReport verify_structural_invariants(const VerifyOptions& opt);

// All seven suites in the order above.
std::vector<SuiteReport> verify_all(const VerifyOptions& opt);

// Suite names accepted by run_verify_suite, in verify_all order.
const std::vector<std::string>& verify_suite_names();

// Runs one suite by name (throws kInvalidParams for unknown names).
SuiteReport run_verify_suite(const std::string& name,
                             const VerifyOptions& opt);

}  // namespace oshlab
