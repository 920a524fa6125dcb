#include "fpc/kernel.hpp"

#include <pthread.h>

#include <functional>
#include <utility>

namespace fpc {

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Accepted: return "accepted";
    case Verdict::Rejected: return "rejected";
    case Verdict::ResourceExhausted: return "resource-exhausted";
    case Verdict::InvariantViolation: return "invariant-violation";
  }
  return "?";
}

namespace {

struct InvariantViolationError {
  std::string what;
};

// Success continuation: receives the derivation of the current subgoal and
// reports whether the enclosing proof attempt went through.  Returning false
// resumes the search here, so a later premise can force re-enumeration of an
// earlier one (chronological backtracking over clerk/expert alternatives and
// unification outcomes).
using Cont = std::function<bool(Deriv)>;

struct Searcher {
  const FpcTable& table;
  const CheckOptions& opts;
  BindingStore store;
  VarGen vg;
  CheckStats stats;
  bool exhausted = false;

  static Deriv node(RuleId r, Sequent seq, const Cert& cert, int level,
                    std::vector<Deriv> children = {}) {
    auto n = std::make_shared<DerivNode>();
    n->rule = r;
    n->seq = std::move(seq);
    n->cert = cert;
    n->level = level;
    n->children = std::move(children);
    return n;
  }

  static std::vector<Formula> without_front(const std::vector<Formula>& v) {
    return {v.begin() + 1, v.end()};
  }
  static std::vector<Formula> without_back(const std::vector<Formula>& v) {
    return {v.begin(), v.end() - 1};
  }
  static std::vector<Formula> with_front(Formula f, const std::vector<Formula>& v) {
    std::vector<Formula> out;
    out.reserve(v.size() + 1);
    out.push_back(std::move(f));
    out.insert(out.end(), v.begin(), v.end());
    return out;
  }
  static std::vector<Formula> with_back(const std::vector<Formula>& v, Formula f) {
    std::vector<Formula> out = v;
    out.push_back(std::move(f));
    return out;
  }

  bool prove(const Sequent& seq, const Cert& cert, int level, long depth, const Cont& k) {
    if (depth > opts.depth_limit) {
      exhausted = true;
      return false;
    }
    ++stats.rules_tried;
    if (level > stats.max_level) stats.max_level = level;
    switch (seq.kind) {
      case Sequent::Kind::Async:
        if (!seq.gamma.empty()) return left_async(seq, cert, level, depth, k);
        if (!seq.delta.empty()) return right_async(seq, cert, level, depth, k);
        return decide(seq, cert, level, depth, k);
      case Sequent::Kind::FocusR:
        return focus_right(seq, cert, level, depth, k);
      case Sequent::Kind::FocusL:
        return focus_left(seq, cert, level, depth, k);
    }
    return false;
  }

  bool one_premise(RuleId r, const Sequent& seq, const Cert& cert, int level, long depth,
                   const Sequent& premise, const std::vector<Cert>& conts, const Cont& k) {
    for (const Cert& c1 : conts) {
      BindingStore::Checkpoint cp = store.checkpoint();
      if (prove(premise, c1, level, depth + 1,
                [&](Deriv ch) { return k(node(r, seq, cert, level, {std::move(ch)})); }))
        return true;
      store.rollback(cp);
    }
    return false;
  }

  // The asynchronous equality rules continue under the most general way the
  // two terms can be made equal.  The logic-variable part of that unifier is
  // a global commitment (kept in the store, undone only on backtracking);
  // the eigenvariable part is a case analysis local to this premise, so it
  // is substituted into the premise text instead of being left in the store,
  // where it would leak into sibling premises.
  struct CaseSplit {
    bool unifiable = false;
    std::vector<std::pair<Term, Term>> eigen_subst;
  };

  CaseSplit case_split(const Term& s, const Term& t) {
    CaseSplit out;
    BindingStore::Checkpoint cp = store.checkpoint();
    if (unify(s, t, store, UnifyMode::CaseAnalysis) != UnifyOutcome::Unified) return out;
    out.unifiable = true;
    std::vector<std::pair<Term, Term>> logic;
    for (const BindingStore::Binding& b : store.bindings_since(cp)) {
      Term value = store.resolve(b.value);
      if (b.var->kind == TermKind::EigenVar) {
        out.eigen_subst.emplace_back(b.var, value);
      } else {
        logic.emplace_back(b.var, value);
      }
    }
    store.rollback(cp);
    for (const auto& [x, v] : logic) {
      if (unify(x, v, store, UnifyMode::Rigid) != UnifyOutcome::Unified)
        throw InvariantViolationError{"replay of a unifier failed"};
    }
    return out;
  }

  Sequent subst_sequent(const Sequent& s, const std::vector<std::pair<Term, Term>>& subst) {
    if (subst.empty()) return s;
    auto fn = [&subst](const Term& t) { return replace_vars(t, subst); };
    Sequent out = s;
    for (Formula& f : out.nstore) f = map_terms(f, fn);
    for (Formula& f : out.gamma) f = map_terms(f, fn);
    for (Formula& f : out.delta) f = map_terms(f, fn);
    for (Formula& f : out.pstore) f = map_terms(f, fn);
    if (out.focus) out.focus = map_terms(out.focus, fn);
    return out;
  }

  bool left_async(const Sequent& seq, const Cert& cert, int level, long depth, const Cont& k) {
    const Formula f = seq.gamma.front();
    Sequent rest = seq;
    rest.gamma = without_front(seq.gamma);

    switch (f->conn) {
      case Conn::Eq: {
        BindingStore::Checkpoint cp = store.checkpoint();
        CaseSplit cs = case_split(f->s, f->t);
        if (!cs.unifiable) return k(node(RuleId::EqLClash, seq, cert, level));
        bool ok = one_premise(RuleId::EqL, seq, cert, level, depth,
                              subst_sequent(rest, cs.eigen_subst),
                              table.eq_left ? table.eq_left(cert) : std::vector<Cert>{}, k);
        if (!ok) store.rollback(cp);
        return ok;
      }
      case Conn::TruePos:
        return one_premise(RuleId::TruePosL, seq, cert, level, depth, rest,
                           table.true_pos_left ? table.true_pos_left(cert) : std::vector<Cert>{},
                           k);
      case Conn::FalsePos:
        return k(node(RuleId::FalsePosL, seq, cert, level));
      case Conn::AndPos: {
        Sequent p = rest;
        p.gamma = with_front(f->a, with_front(f->b, rest.gamma));
        return one_premise(RuleId::AndPosL, seq, cert, level, depth, p,
                           table.and_pos_left ? table.and_pos_left(cert) : std::vector<Cert>{}, k);
      }
      case Conn::Or: {
        if (!table.or_left) return false;
        for (const auto& [c1, c2] : table.or_left(cert)) {
          BindingStore::Checkpoint cp = store.checkpoint();
          Sequent p1 = rest;
          p1.gamma = with_front(f->a, rest.gamma);
          Sequent p2 = rest;
          p2.gamma = with_front(f->b, rest.gamma);
          Cert cc2 = c2;
          if (prove(p1, c1, level, depth + 1, [&, cc2](Deriv ch1) {
                return prove(p2, cc2, level, depth + 1, [&](Deriv ch2) {
                  return k(node(RuleId::OrL, seq, cert, level, {std::move(ch1), std::move(ch2)}));
                });
              }))
            return true;
          store.rollback(cp);
        }
        return false;
      }
      case Conn::Exists: {
        if (!table.exists_left) return false;
        for (const CertAbs1& abs : table.exists_left(cert)) {
          BindingStore::Checkpoint cp = store.checkpoint();
          Term e = vg.fresh_eigen(level + 1);
          Sequent p = rest;
          p.gamma = with_front(inst_binder(f->a, e), rest.gamma);
          if (prove(p, abs(e), level + 1, depth + 1, [&](Deriv ch) {
                Deriv n = node(RuleId::ExistsL, seq, cert, level, {std::move(ch)});
                const_cast<DerivNode*>(n.get())->intro = {e};
                return k(n);
              }))
            return true;
          store.rollback(cp);
        }
        return false;
      }
      case Conn::Mu: {
        if (table.induction) {
          for (const IndAlt& alt : table.induction(cert)) {
            if (alt.invariant->arity != f->fp->arity) continue;
            note_fixpoint_context(rest);
            BindingStore::Checkpoint cp = store.checkpoint();
            std::vector<Term> ys;
            for (int i = 0; i < f->fp->arity; ++i) ys.push_back(vg.fresh_eigen(level + 1));
            Sequent closure = Sequent::async({}, {unfold_with(f->fp, alt.invariant, ys)},
                                             {apply_pred(alt.invariant, ys)}, {});
            Sequent instance = rest;
            instance.gamma = with_front(apply_pred(alt.invariant, f->args), rest.gamma);
            Cert cont = alt.cont;
            PredExpr inv = alt.invariant;
            if (prove(closure, alt.closure(ys), level + 1, depth + 1, [&, cont, inv](Deriv ch1) {
                  return prove(instance, cont, level + 1, depth + 1, [&](Deriv ch2) {
                    Deriv n =
                        node(RuleId::Ind, seq, cert, level, {std::move(ch1), std::move(ch2)});
                    auto* m = const_cast<DerivNode*>(n.get());
                    m->intro = ys;
                    m->invariant = inv;
                    return k(n);
                  });
                }))
              return true;
            store.rollback(cp);
          }
        }
        Sequent p = rest;
        p.gamma = with_front(unfold(f), rest.gamma);
        return one_premise(RuleId::MuUnfoldL, seq, cert, level, depth, p,
                           table.mu_unfold_left ? table.mu_unfold_left(cert) : std::vector<Cert>{},
                           k);
      }
      case Conn::PredApp:
        throw InvariantViolationError{"free predicate application reached the kernel"};
      default: {
        // negative formula: store it
        Sequent p = rest;
        p.nstore = with_back(rest.nstore, f);
        return one_premise(RuleId::StoreL, seq, cert, level, depth, p,
                           table.store_left ? table.store_left(cert) : std::vector<Cert>{}, k);
      }
    }
  }

  bool right_async(const Sequent& seq, const Cert& cert, int level, long depth, const Cont& k) {
    const Formula f = seq.delta.back();
    Sequent rest = seq;
    rest.delta = without_back(seq.delta);

    switch (f->conn) {
      case Conn::Neq: {
        BindingStore::Checkpoint cp = store.checkpoint();
        CaseSplit cs = case_split(f->s, f->t);
        if (!cs.unifiable) return k(node(RuleId::NeqRClash, seq, cert, level));
        bool ok = one_premise(RuleId::NeqR, seq, cert, level, depth,
                              subst_sequent(rest, cs.eigen_subst),
                              table.neq_right ? table.neq_right(cert) : std::vector<Cert>{}, k);
        if (!ok) store.rollback(cp);
        return ok;
      }
      case Conn::FalseNeg:
        return one_premise(RuleId::FalseNegR, seq, cert, level, depth, rest,
                           table.false_neg_right ? table.false_neg_right(cert)
                                                 : std::vector<Cert>{},
                           k);
      case Conn::TrueNeg:
        return k(node(RuleId::TrueNegR, seq, cert, level));
      case Conn::AndNeg: {
        if (!table.and_neg_right) return false;
        for (const auto& [c1, c2] : table.and_neg_right(cert)) {
          BindingStore::Checkpoint cp = store.checkpoint();
          Sequent p1 = rest;
          p1.delta = with_back(rest.delta, f->a);
          Sequent p2 = rest;
          p2.delta = with_back(rest.delta, f->b);
          Cert cc2 = c2;
          if (prove(p1, c1, level, depth + 1, [&, cc2](Deriv ch1) {
                return prove(p2, cc2, level, depth + 1, [&](Deriv ch2) {
                  return k(
                      node(RuleId::AndNegR, seq, cert, level, {std::move(ch1), std::move(ch2)}));
                });
              }))
            return true;
          store.rollback(cp);
        }
        return false;
      }
      case Conn::Imp: {
        Sequent p = rest;
        p.gamma = with_back(rest.gamma, f->a);
        p.delta = with_back(rest.delta, f->b);
        return one_premise(RuleId::ImpR, seq, cert, level, depth, p,
                           table.imp_right ? table.imp_right(cert) : std::vector<Cert>{}, k);
      }
      case Conn::Forall: {
        if (!table.forall_right) return false;
        for (const CertAbs1& abs : table.forall_right(cert)) {
          BindingStore::Checkpoint cp = store.checkpoint();
          Term e = vg.fresh_eigen(level + 1);
          Sequent p = rest;
          p.delta = with_back(rest.delta, inst_binder(f->a, e));
          if (prove(p, abs(e), level + 1, depth + 1, [&](Deriv ch) {
                Deriv n = node(RuleId::ForallR, seq, cert, level, {std::move(ch)});
                const_cast<DerivNode*>(n.get())->intro = {e};
                return k(n);
              }))
            return true;
          store.rollback(cp);
        }
        return false;
      }
      case Conn::Nu: {
        if (table.coinduction) {
          for (const IndAlt& alt : table.coinduction(cert)) {
            if (alt.invariant->arity != f->fp->arity) continue;
            note_fixpoint_context(rest);
            BindingStore::Checkpoint cp = store.checkpoint();
            std::vector<Term> ys;
            for (int i = 0; i < f->fp->arity; ++i) ys.push_back(vg.fresh_eigen(level + 1));
            Sequent closure = Sequent::async({}, {apply_pred(alt.invariant, ys)},
                                             {unfold_with(f->fp, alt.invariant, ys)}, {});
            Sequent instance = rest;
            instance.delta = with_back(rest.delta, apply_pred(alt.invariant, f->args));
            Cert cont = alt.cont;
            PredExpr inv = alt.invariant;
            if (prove(closure, alt.closure(ys), level + 1, depth + 1, [&, cont, inv](Deriv ch1) {
                  return prove(instance, cont, level + 1, depth + 1, [&](Deriv ch2) {
                    Deriv n =
                        node(RuleId::CoInd, seq, cert, level, {std::move(ch1), std::move(ch2)});
                    auto* m = const_cast<DerivNode*>(n.get());
                    m->intro = ys;
                    m->invariant = inv;
                    return k(n);
                  });
                }))
              return true;
            store.rollback(cp);
          }
        }
        Sequent p = rest;
        p.delta = with_back(rest.delta, unfold(f));
        return one_premise(RuleId::NuUnfoldR, seq, cert, level, depth, p,
                           table.nu_unfold_right ? table.nu_unfold_right(cert)
                                                 : std::vector<Cert>{},
                           k);
      }
      case Conn::PredApp:
        throw InvariantViolationError{"free predicate application reached the kernel"};
      default: {
        // positive formula: store it
        Sequent p = rest;
        p.pstore = with_back(rest.pstore, f);
        return one_premise(RuleId::StoreR, seq, cert, level, depth, p,
                           table.store_right ? table.store_right(cert) : std::vector<Cert>{}, k);
      }
    }
  }

  bool decide(const Sequent& seq, const Cert& cert, int level, long depth, const Cont& k) {
    size_t total = seq.nstore.size() + seq.pstore.size();
    if (total == 0) return false;
    if (total != 1)
      throw InvariantViolationError{"phase switch over " + std::to_string(total) +
                                    " stored formulas; switchable goals keep exactly one"};
    ++stats.decides;
    if (!seq.nstore.empty()) {
      const Formula& f = seq.nstore[0];
      if (!table.decide_left) return false;
      for (const Cert& c1 : table.decide_left(cert, f)) {
        BindingStore::Checkpoint cp = store.checkpoint();
        if (prove(Sequent::focus_left(f), c1, level, depth + 1, [&](Deriv ch) {
              return k(node(RuleId::DecideL, seq, cert, level, {std::move(ch)}));
            }))
          return true;
        store.rollback(cp);
      }
      return false;
    }
    const Formula& f = seq.pstore[0];
    if (!table.decide_right) return false;
    for (const Cert& c1 : table.decide_right(cert, f)) {
      BindingStore::Checkpoint cp = store.checkpoint();
      if (prove(Sequent::focus_right(f), c1, level, depth + 1, [&](Deriv ch) {
            return k(node(RuleId::DecideR, seq, cert, level, {std::move(ch)}));
          }))
        return true;
      store.rollback(cp);
    }
    return false;
  }

  bool focus_right(const Sequent& seq, const Cert& cert, int level, long depth, const Cont& k) {
    const Formula& f = seq.focus;
    switch (f->conn) {
      case Conn::Eq: {
        BindingStore::Checkpoint cp = store.checkpoint();
        if (unify(f->s, f->t, store, UnifyMode::Rigid) == UnifyOutcome::Unified) {
          if (k(node(RuleId::EqR, seq, cert, level))) return true;
          store.rollback(cp);
        }
        return false;
      }
      case Conn::TruePos:
        return k(node(RuleId::TruePosR, seq, cert, level));
      case Conn::FalsePos:
        return false;
      case Conn::AndPos: {
        if (!table.and_pos_right) return false;
        for (const auto& [c1, c2] : table.and_pos_right(cert)) {
          BindingStore::Checkpoint cp = store.checkpoint();
          Cert cc2 = c2;
          if (prove(Sequent::focus_right(f->a), c1, level, depth + 1, [&, cc2](Deriv ch1) {
                return prove(Sequent::focus_right(f->b), cc2, level, depth + 1, [&](Deriv ch2) {
                  return k(
                      node(RuleId::AndPosR, seq, cert, level, {std::move(ch1), std::move(ch2)}));
                });
              }))
            return true;
          store.rollback(cp);
        }
        return false;
      }
      case Conn::Or: {
        if (!table.or_right) return false;
        for (const auto& [c1, br] : table.or_right(cert)) {
          BindingStore::Checkpoint cp = store.checkpoint();
          int branch = br;
          if (prove(Sequent::focus_right(branch == 1 ? f->a : f->b), c1, level, depth + 1,
                    [&, branch](Deriv ch) {
                      Deriv n = node(RuleId::OrR, seq, cert, level, {std::move(ch)});
                      const_cast<DerivNode*>(n.get())->branch = branch;
                      return k(n);
                    }))
            return true;
          store.rollback(cp);
        }
        return false;
      }
      case Conn::Exists: {
        if (!table.exists_right) return false;
        for (const WitnessAlt& alt : table.exists_right(cert)) {
          BindingStore::Checkpoint cp = store.checkpoint();
          Term w = alt.witness ? *alt.witness : vg.fresh_logic(level);
          if (prove(Sequent::focus_right(inst_binder(f->a, w)), alt.cont, level, depth + 1,
                    [&](Deriv ch) {
                      Deriv n = node(RuleId::ExistsR, seq, cert, level, {std::move(ch)});
                      const_cast<DerivNode*>(n.get())->intro = {w};
                      return k(n);
                    }))
            return true;
          store.rollback(cp);
        }
        return false;
      }
      case Conn::Mu: {
        Sequent p = Sequent::focus_right(unfold(f));
        return one_premise(RuleId::MuUnfoldR, seq, cert, level, depth, p,
                           table.mu_unfold_right ? table.mu_unfold_right(cert)
                                                 : std::vector<Cert>{},
                           k);
      }
      case Conn::PredApp:
        throw InvariantViolationError{"free predicate application reached the kernel"};
      default: {
        // negative formula under right focus: release
        Sequent p = Sequent::async({}, {}, {f}, {});
        return one_premise(RuleId::ReleaseR, seq, cert, level, depth, p,
                           table.release_right ? table.release_right(cert) : std::vector<Cert>{},
                           k);
      }
    }
  }

  bool focus_left(const Sequent& seq, const Cert& cert, int level, long depth, const Cont& k) {
    const Formula& f = seq.focus;
    switch (f->conn) {
      case Conn::Neq: {
        // Dual of the focused equality: usable exactly when the two terms
        // can be made equal, retaining the unifier.
        BindingStore::Checkpoint cp = store.checkpoint();
        if (unify(f->s, f->t, store, UnifyMode::Rigid) == UnifyOutcome::Unified) {
          if (k(node(RuleId::NeqL, seq, cert, level))) return true;
          store.rollback(cp);
        }
        return false;
      }
      case Conn::FalseNeg:
        return k(node(RuleId::FalseNegL, seq, cert, level));
      case Conn::TrueNeg:
        return false;
      case Conn::Imp: {
        if (!table.imp_left) return false;
        for (const auto& [ca, cc] : table.imp_left(cert)) {
          BindingStore::Checkpoint cp = store.checkpoint();
          Cert ccc = cc;
          if (prove(Sequent::focus_right(f->a), ca, level, depth + 1, [&, ccc](Deriv ch1) {
                return prove(Sequent::focus_left(f->b), ccc, level, depth + 1, [&](Deriv ch2) {
                  return k(node(RuleId::ImpL, seq, cert, level, {std::move(ch1), std::move(ch2)}));
                });
              }))
            return true;
          store.rollback(cp);
        }
        return false;
      }
      case Conn::AndNeg: {
        if (!table.and_neg_left) return false;
        for (const auto& [c1, br] : table.and_neg_left(cert)) {
          BindingStore::Checkpoint cp = store.checkpoint();
          int branch = br;
          if (prove(Sequent::focus_left(branch == 1 ? f->a : f->b), c1, level, depth + 1,
                    [&, branch](Deriv ch) {
                      Deriv n = node(RuleId::AndNegL, seq, cert, level, {std::move(ch)});
                      const_cast<DerivNode*>(n.get())->branch = branch;
                      return k(n);
                    }))
            return true;
          store.rollback(cp);
        }
        return false;
      }
      case Conn::Forall: {
        if (!table.forall_left) return false;
        for (const WitnessAlt& alt : table.forall_left(cert)) {
          BindingStore::Checkpoint cp = store.checkpoint();
          Term w = alt.witness ? *alt.witness : vg.fresh_logic(level);
          if (prove(Sequent::focus_left(inst_binder(f->a, w)), alt.cont, level, depth + 1,
                    [&](Deriv ch) {
                      Deriv n = node(RuleId::ForallL, seq, cert, level, {std::move(ch)});
                      const_cast<DerivNode*>(n.get())->intro = {w};
                      return k(n);
                    }))
            return true;
          store.rollback(cp);
        }
        return false;
      }
      case Conn::Nu: {
        Sequent p = Sequent::focus_left(unfold(f));
        return one_premise(RuleId::NuUnfoldL, seq, cert, level, depth, p,
                           table.nu_unfold_left ? table.nu_unfold_left(cert)
                                                : std::vector<Cert>{},
                           k);
      }
      case Conn::PredApp:
        throw InvariantViolationError{"free predicate application reached the kernel"};
      default: {
        // positive formula under left focus: release
        Sequent p = Sequent::async({}, {f}, {}, {});
        return one_premise(RuleId::ReleaseL, seq, cert, level, depth, p,
                           table.release_left ? table.release_left(cert) : std::vector<Cert>{},
                           k);
      }
    }
  }

  // The model-checking restriction: when a fixed-point rule consumes an
  // explicit invariant, the remaining context must be fully asynchronous.
  void note_fixpoint_context(const Sequent& rest) {
    bool ok = rest.nstore.empty();
    for (const Formula& g : rest.gamma) ok = ok && purely_positive(g);
    for (const Formula& d : rest.delta) ok = ok && purely_negative(d);
    if (!ok) ++stats.mc_restriction_violations;
  }
};

// The continuation-passing search keeps one native frame per rule of the
// partial derivation, so deep unfolding chains need far more stack than the
// default thread provides.  The search therefore runs on its own thread with
// a generous stack.
void run_with_large_stack(const std::function<void()>& fn) {
  struct Ctx {
    const std::function<void()>* f;
    std::exception_ptr err;
  } ctx{&fn, nullptr};

  pthread_attr_t attr;
  pthread_attr_init(&attr);
  pthread_attr_setstacksize(&attr, 512u * 1024 * 1024);
  pthread_t tid;
  auto entry = [](void* p) -> void* {
    Ctx* c = static_cast<Ctx*>(p);
    try {
      (*c->f)();
    } catch (...) {
      c->err = std::current_exception();
    }
    return nullptr;
  };
  if (pthread_create(&tid, &attr, entry, &ctx) != 0) {
    pthread_attr_destroy(&attr);
    fn();  // fall back to the caller's stack
    return;
  }
  pthread_join(tid, nullptr);
  pthread_attr_destroy(&attr);
  if (ctx.err) std::rethrow_exception(ctx.err);
}

}  // namespace

CheckResult check(const FpcTable& table, const Cert& cert, const Sequent& root,
                  const CheckOptions& opts) {
  CheckResult result;
  if (opts.validate_root) {
    bool ok = true;
    if (root.kind == Sequent::Kind::Async) {
      for (const Formula& f : root.gamma) ok = ok && switchable(f, Side::Left);
      for (const Formula& f : root.nstore) ok = ok && switchable(f, Side::Left);
      for (const Formula& f : root.delta) ok = ok && switchable(f, Side::Right);
      for (const Formula& f : root.pstore) ok = ok && switchable(f, Side::Right);
    } else {
      ok = switchable(root.focus, root.kind == Sequent::Kind::FocusL ? Side::Left : Side::Right);
    }
    if (!ok) {
      result.verdict = Verdict::InvariantViolation;
      result.message = "root sequent contains a non-switchable formula";
      return result;
    }
  }

  Searcher s{table, opts};
  Deriv found;
  try {
    bool ok = false;
    run_with_large_stack([&] {
      ok = s.prove(root, cert, 0, 0, [&](Deriv d) {
        found = std::move(d);
        return true;
      });
    });
    result.stats = s.stats;
    if (ok) {
      // Resolve logic variables to their final values throughout the
      // recorded derivation.
      std::function<Deriv(const Deriv&)> finalize = [&](const Deriv& d) -> Deriv {
        auto n = std::make_shared<DerivNode>(*d);
        auto res = [&](const Term& t) { return s.store.resolve(t); };
        Sequent& q = n->seq;
        for (Formula& f : q.nstore) f = map_terms(f, res);
        for (Formula& f : q.gamma) f = map_terms(f, res);
        for (Formula& f : q.delta) f = map_terms(f, res);
        for (Formula& f : q.pstore) f = map_terms(f, res);
        if (q.focus) q.focus = map_terms(q.focus, res);
        for (Term& t : n->intro) t = s.store.resolve(t);
        std::vector<Deriv> kids;
        kids.reserve(d->children.size());
        for (const Deriv& c : d->children) kids.push_back(finalize(c));
        n->children = std::move(kids);
        return n;
      };
      result.verdict = Verdict::Accepted;
      result.derivation = finalize(found);
    } else if (s.exhausted) {
      result.verdict = Verdict::ResourceExhausted;
      result.message = "depth bound of " + std::to_string(opts.depth_limit) + " hit";
    } else {
      result.verdict = Verdict::Rejected;
    }
  } catch (const InvariantViolationError& e) {
    result.stats = s.stats;
    result.verdict = Verdict::InvariantViolation;
    result.message = e.what;
  }
  return result;
}

}  // namespace fpc
