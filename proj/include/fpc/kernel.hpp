#ifndef FPC_KERNEL_HPP
#define FPC_KERNEL_HPP

#include <string>

#include "fpc/derivation.hpp"
#include "fpc/table.hpp"
#include "fpc/unify.hpp"

namespace fpc {

// The trusted checker: a backtracking interpreter of the augmented focused
// proof system.  Every premise-bearing rule consults the clerk/expert table
// for its continuation certificates; soundness does not depend on the table,
// since acceptance always reconstructs a rule-by-rule derivation.

enum class Verdict {
  Accepted,
  Rejected,
  ResourceExhausted,   // configured depth bound hit on some branch
  InvariantViolation,  // one-formula phase-switch invariant broken, or a
                       // malformed root sequent: an encoding bug, not a
                       // proof failure
};

const char* verdict_name(Verdict v);

struct CheckOptions {
  long depth_limit = 10000;  // rule applications per branch
  bool validate_root = true; // require root formulas to be switchable
};

struct CheckStats {
  long rules_tried = 0;
  int decides = 0;
  int mc_restriction_violations = 0;  // (co)induction fired in a context that
                                      // could trigger synchronous rules
  int max_level = 0;
};

struct CheckResult {
  Verdict verdict = Verdict::Rejected;
  Deriv derivation;  // accepted runs only; terms resolved per node
  CheckStats stats;
  std::string message;

  bool accepted() const { return verdict == Verdict::Accepted; }
};

CheckResult check(const FpcTable& table, const Cert& cert, const Sequent& root,
                  const CheckOptions& opts = CheckOptions{});

}  // namespace fpc

#endif
