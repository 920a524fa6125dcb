#ifndef FPC_WITNESS_HPP
#define FPC_WITNESS_HPP

#include <optional>
#include <vector>

#include "fpc/cert.hpp"
#include "fpc/problem.hpp"

namespace fpc {

// Untrusted certificate generators and the independent semantic oracles the
// test harness compares kernel verdicts against.  Nothing here is in the
// trusted base.

// Shortest edge path from x to y of length >= 1; returns the intermediate
// nodes only (empty for a single edge), or nullopt if y is unreachable.
std::optional<std::vector<Sym>> find_path(const Graph& g, Sym x, Sym y);

// Nodes reachable from t in >= 0 steps, in BFS discovery order (t first).
std::vector<Sym> reachable_set(const Graph& g, Sym t);

// Floyd-Warshall closure oracle: path(x, y) in >= 1 steps.
bool closure_reachable(const Graph& g, Sym x, Sym y);

// The non-reachability invariant: membership in T x {u} implies falsity,
// where T is the reachable set of {t}.
PredExpr unreach_invariant(const Graph& g, Sym t, Sym u);

using PairSet = std::vector<std::pair<Sym, Sym>>;

// Greatest-fixpoint iteration: all pairs (p, q) with p in l1, q in l2 such
// that q simulates p.
PairSet max_simulation(const Lts& l1, const Lts& l2);

// Partition refinement over the combined system, then cross-system pairing.
// States are identified by name, so systems sharing state names are treated
// as one system.
PairSet max_bisimulation(const Lts& l1, const Lts& l2);

bool pair_in(const PairSet& s, Sym a, Sym b);

// The pairs hit by the simulation game started at (p, q), intersected with
// the maximal simulation; closed under the step condition whenever (p, q) is
// in the maximal simulation.
std::optional<PairSet> sim_invariant(const Lts& l1, Sym p, const Lts& l2, Sym q);

// As sim_invariant, but closed under the two-sided step condition (the
// reverse direction continuing on swapped pairs).
std::optional<PairSet> bisim_invariant(const Lts& l1, Sym p, const Lts& l2, Sym q);

// lam (x y). \/_{(p,q) in S} (x = p and+ y = q)
PredExpr pairs_pred_expr(const PairSet& s);

enum class AssertMode { Sim, Bisim };

// Synthesizes an assertion satisfied by p and not by q from the stage at
// which (p, q) leaves the fixpoint iteration; diamonds witness moves of p,
// negated diamonds (bisim mode) moves of q.  nullopt when (p, q) never
// leaves the fixpoint.  No minimality is attempted.
std::optional<Cert> distinguishing_assertion(const Lts& l1, Sym p, const Lts& l2, Sym q,
                                             AssertMode mode);

// Direct recursive evaluation of assertion satisfaction at a state.
bool hml_eval(const Lts& l, Sym state, const Cert& assertion);

}  // namespace fpc

#endif
