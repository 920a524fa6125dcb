#ifndef FPC_SELFTEST_HPP
#define FPC_SELFTEST_HPP

#include <string>
#include <vector>

#include "fpc/kernel.hpp"

namespace fpc::selftest {

// The built-in example problems: a four-node graph with one cycle, the three
// noetherian transition systems, and the two-process loop systems.
const char* fig1_graph();
const char* fig3_lts();
const char* fig4_lts();

// forall x. (x=1 or x=3) imp (x=1 or x=2 or x=3), the set-inclusion goal
// checkable by decproc against the common table.
Formula subset_goal();
CheckResult check_subset(const Cert& cert);

struct Entry {
  std::string name;
  Verdict expect;
  Verdict got;
  bool pass = false;
};

// Runs the whole golden catalogue (positive and negative cases).
std::vector<Entry> run_all();

}  // namespace fpc::selftest

#endif
