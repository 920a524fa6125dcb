#ifndef FPC_FORMATS_HPP
#define FPC_FORMATS_HPP

#include "fpc/table.hpp"

namespace fpc {

// Clerk/expert tables for the certificate formats.
//
// common_table: the generic constructors.  stop authorizes no search; sync
// drives an unbounded synchronous phase; async the dual asynchronous phase;
// bipole(n) is n nested async(sync(.)) ending in stop; decproc the unbounded
// variant (async(sync(decproc))), subject to the kernel depth bound.  inv and
// coinv carry an explicit (co)invariant whose closure premise is checked by a
// bipole.
//
// The remaining tables extend common_table with the evidence-specific
// clauses: node lists driving a right focus on a reachability goal,
// invariants refuting reachability, and HML assertions refuting simulation
// or bisimulation.
FpcTable common_table();
FpcTable reach_table();
FpcTable nonreach_table();
FpcTable sim_table();
FpcTable nonsim_table();
FpcTable nonbisim_table();

}  // namespace fpc

#endif
