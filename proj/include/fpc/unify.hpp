#ifndef FPC_UNIFY_HPP
#define FPC_UNIFY_HPP

#include <cstddef>
#include <unordered_map>
#include <vector>

#include "fpc/term.hpp"

namespace fpc {

enum class UnifyOutcome { Unified, Clash };

// How eigenvariables participate in unification.
//   Rigid:        eigenvariables act as constants; only logic variables are
//                 instantiated.  This is the notion used by the focused
//                 equality rules (proving an equation).
//   CaseAnalysis: eigenvariables may also be instantiated, as in the
//                 asynchronous equality rules, whose single premise continues
//                 under the most general way the two terms can be equal.
//                 Such bindings are premise-local: the kernel reads them off,
//                 rolls them back, and applies them to the premise text.
enum class UnifyMode { Rigid, CaseAnalysis };

// Mutable binding state for one checking session: a map from variable ids to
// terms plus a trail for chronological backtracking.  Level bookkeeping: when
// a logic variable of level l is bound to a structured term, logic variables
// inside that term are lowered to level l (they must now be resolvable no
// later than the binder), and every eigenvariable inside must already have
// level <= l.
class BindingStore {
public:
  struct Checkpoint {
    size_t depth = 0;
  };

  struct Binding {
    Term var;
    Term value;
  };

  bool is_bound(const TermNode& v) const { return bindings_.count(v.id) != 0; }
  const Term* lookup(const TermNode& v) const {
    auto it = bindings_.find(v.id);
    return it == bindings_.end() ? nullptr : &it->second.value;
  }

  int level_of(const TermNode& v) const {
    auto it = levels_.find(v.id);
    return it == levels_.end() ? v.level : it->second;
  }

  Checkpoint checkpoint() const { return Checkpoint{trail_.size()}; }
  void rollback(Checkpoint cp);

  size_t trail_size() const { return trail_.size(); }
  bool empty() const { return bindings_.empty(); }

  // The bindings made after a checkpoint, in trail order.
  std::vector<Binding> bindings_since(Checkpoint cp) const;

  // Fully dereferences bound variables; unbound variables remain.
  Term resolve(const Term& t) const;

  // The current substitution restricted to logic variables.
  std::vector<std::pair<int, Term>> logic_bindings() const;

  friend UnifyOutcome unify(const Term&, const Term&, BindingStore&, UnifyMode);
  friend struct UnifyWalker;

private:
  struct TrailEntry {
    int id;
    bool is_binding;  // else a level-lowering entry
    int old_level;    // lowering only
  };

  void bind(const Term& v, const Term& t);
  void lower_level(const TermNode& v, int level);

  std::unordered_map<int, Binding> bindings_;
  std::unordered_map<int, int> levels_;  // overrides of creation levels
  std::vector<TrailEntry> trail_;
};

// Attempts to extend the store to a most general unifier of s and t.  On
// Clash the store is left exactly as it was.
UnifyOutcome unify(const Term& s, const Term& t, BindingStore& store,
                   UnifyMode mode = UnifyMode::Rigid);

}  // namespace fpc

#endif
