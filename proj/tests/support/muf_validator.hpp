#ifndef FPC_TESTS_MUF_VALIDATOR_HPP
#define FPC_TESTS_MUF_VALIDATOR_HPP

#include <string>

#include "fpc/derivation.hpp"

namespace fpc::testsupport {

struct Validation {
  bool ok = true;
  std::string error;          // first failure, if any
  int decides = 0;            // phase-switch conclusions seen
  int store_violations = 0;   // negative in the positive zone or vice versa
  int switch_violations = 0;  // phase switches over != 1 stored formula
};

// Replays an erased derivation rule by rule against the certificate-free
// proof system: conclusion shapes, premise sequents (recomputing unfoldings,
// instantiations and equality case analyses independently), eigenvariable
// freshness, store typing, and the one-formula phase-switch invariant.
Validation validate_muf(const Deriv& d);

}  // namespace fpc::testsupport

#endif
