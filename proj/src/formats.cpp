#include "fpc/formats.hpp"

namespace fpc {

namespace {

// bipole(n) and decproc are shorthands; rewrite the head so the async/sync
// clause sets apply.
Cert expand(const Cert& c) {
  switch (c->kind) {
    case CertKind::Bipole:
      return c_async(c_sync(c->n == 1 ? c_stop() : c_bipole(c->n - 1)));
    case CertKind::Decproc:
      return c_async(c_sync(c_decproc()));
    default:
      return c;
  }
}

bool is_async(const Cert& c) { return c->kind == CertKind::Async; }
bool is_sync(const Cert& c) { return c->kind == CertKind::Sync; }
bool is_hml(const Cert& c) {
  return c->kind == CertKind::HmlConj || c->kind == CertKind::HmlDia ||
         c->kind == CertKind::HmlNegDia;
}

std::vector<Cert> one(Cert c) { return {std::move(c)}; }

}  // namespace

FpcTable common_table() {
  FpcTable t;
  t.name = "common";

  // Asynchronous clerks: async(k) threads itself through every rule of the
  // phase; the listed clauses cover the left rules and their right-hand
  // completions so bipolar bodies (both conjunctions, both quantifiers) can
  // be processed.
  auto pass = [](const Cert& c) -> std::vector<Cert> {
    Cert e = expand(c);
    if (is_async(e)) return {e};
    return {};
  };
  auto pass_pair = [](const Cert& c) -> std::vector<std::pair<Cert, Cert>> {
    Cert e = expand(c);
    if (is_async(e)) return {{e, e}};
    return {};
  };
  auto pass_abs = [](const Cert& c) -> std::vector<CertAbs1> {
    Cert e = expand(c);
    if (is_async(e)) return {[e](const Term&) { return e; }};
    return {};
  };
  t.eq_left = pass;
  t.neq_right = pass;
  t.true_pos_left = pass;
  t.false_neg_right = pass;
  t.and_pos_left = pass;
  t.or_left = pass_pair;
  t.imp_right = pass;
  t.and_neg_right = pass_pair;
  t.exists_left = pass_abs;
  t.forall_right = pass_abs;
  t.mu_unfold_left = pass;
  t.nu_unfold_right = pass;
  t.store_left = pass;
  t.store_right = pass;

  // async has no experts apart from the decide rules, which hand over to the
  // continuation.
  auto decide = [](const Cert& c, const Formula&) -> std::vector<Cert> {
    Cert e = expand(c);
    if (is_async(e)) return {e->child};
    return {};
  };
  t.decide_left = decide;
  t.decide_right = decide;

  // Synchronous experts: sync(k) runs an exhaustive non-deterministic search
  // (both disjuncts, fresh logic variables as witnesses) and releases to its
  // continuation.
  auto sync_pass = [](const Cert& c) -> std::vector<Cert> {
    Cert e = expand(c);
    if (is_sync(e)) return {e};
    return {};
  };
  auto sync_pair = [](const Cert& c) -> std::vector<std::pair<Cert, Cert>> {
    Cert e = expand(c);
    if (is_sync(e)) return {{e, e}};
    return {};
  };
  auto sync_branches = [](const Cert& c) -> std::vector<std::pair<Cert, int>> {
    Cert e = expand(c);
    if (is_sync(e)) return {{e, 1}, {e, 2}};
    return {};
  };
  auto sync_witness = [](const Cert& c) -> std::vector<WitnessAlt> {
    Cert e = expand(c);
    if (is_sync(e)) return {WitnessAlt{e, std::nullopt}};
    return {};
  };
  auto release = [](const Cert& c) -> std::vector<Cert> {
    Cert e = expand(c);
    if (is_sync(e)) return {e->child};
    return {};
  };
  t.and_pos_right = sync_pair;
  t.or_right = sync_branches;
  t.exists_right = sync_witness;
  t.imp_left = sync_pair;
  t.and_neg_left = sync_branches;
  t.forall_left = sync_witness;
  t.mu_unfold_right = sync_pass;
  t.nu_unfold_left = sync_pass;
  t.release_left = release;
  t.release_right = release;

  // inv / coinv hand their invariant to the fixed-point rules; the closure
  // premise is checked by a bipole.
  t.induction = [](const Cert& c) -> std::vector<IndAlt> {
    if (c->kind != CertKind::Inv) return {};
    return {IndAlt{[](const std::vector<Term>&) { return c_bipole(1); }, c->child, c->invariant}};
  };
  t.coinduction = [](const Cert& c) -> std::vector<IndAlt> {
    if (c->kind != CertKind::CoInv) return {};
    return {IndAlt{[](const std::vector<Term>&) { return c_bipole(1); }, c->child, c->invariant}};
  };

  return t;
}

FpcTable reach_table() {
  FpcTable t = common_table();
  t.name = "reach";

  // A node list drives the right focus on the reachability fixed point: each
  // element witnesses one existential, the final empty list selects the
  // base-case disjunct, and the edge subgoals run under sync(stop).  Aside
  // from the initial store, no clerks participate.
  auto base_store = t.store_right;
  t.store_right = [base_store](const Cert& c) {
    if (c->kind == CertKind::Path) return one(c);
    return base_store(c);
  };
  auto base_decide = t.decide_right;
  t.decide_right = [base_decide](const Cert& c, const Formula& f) {
    if (c->kind == CertKind::Path) return one(c);
    return base_decide(c, f);
  };
  auto base_unfold = t.mu_unfold_right;
  t.mu_unfold_right = [base_unfold](const Cert& c) {
    if (c->kind == CertKind::Path) return one(c);
    return base_unfold(c);
  };
  auto base_or = t.or_right;
  t.or_right = [base_or](const Cert& c) -> std::vector<std::pair<Cert, int>> {
    if (c->kind == CertKind::Path) {
      if (c->nodes.empty()) return {{c_sync(c_stop()), 1}};
      return {{c, 2}};
    }
    return base_or(c);
  };
  auto base_ex = t.exists_right;
  t.exists_right = [base_ex](const Cert& c) -> std::vector<WitnessAlt> {
    if (c->kind == CertKind::Path && !c->nodes.empty()) {
      std::vector<Sym> tail(c->nodes.begin() + 1, c->nodes.end());
      return {WitnessAlt{c_path(std::move(tail)), TermNode::make_const(c->nodes.front())}};
    }
    return base_ex(c);
  };
  auto base_and = t.and_pos_right;
  t.and_pos_right = [base_and](const Cert& c) -> std::vector<std::pair<Cert, Cert>> {
    if (c->kind == CertKind::Path) return {{c_sync(c_stop()), c}};
    return base_and(c);
  };
  return t;
}

FpcTable nonreach_table() {
  FpcTable t = common_table();
  t.name = "nonreach";

  // The invariant certificate must survive the initial implication step of
  // the negated goal to reach the induction rule.
  auto base_imp = t.imp_right;
  t.imp_right = [base_imp](const Cert& c) {
    if (c->kind == CertKind::Inv) return one(c);
    return base_imp(c);
  };
  return t;
}

FpcTable sim_table() {
  FpcTable t = common_table();
  t.name = "sim";
  return t;
}

namespace {

// Clauses shared by the two assertion formats.  Assertions ride through the
// asynchronous rules unchanged; a decide picks one conjunct; a diamond
// unfolds the fixed point, instantiates the label, and splits the
// implication, whose transition subgoal runs under sync(stop).
void add_assertion_clauses(FpcTable& t) {
  auto wrap_pass = [](FpcTable::Rel<Cert>& slot) {
    auto base = slot;
    slot = [base](const Cert& c) {
      if (is_hml(c)) return one(c);
      return base(c);
    };
  };
  wrap_pass(t.imp_right);
  wrap_pass(t.false_neg_right);
  wrap_pass(t.store_left);
  wrap_pass(t.eq_left);
  wrap_pass(t.and_pos_left);
  wrap_pass(t.mu_unfold_left);
  wrap_pass(t.release_left);

  auto base_or = t.or_left;
  t.or_left = [base_or](const Cert& c) -> std::vector<std::pair<Cert, Cert>> {
    if (is_hml(c)) return {{c, c}};
    return base_or(c);
  };
  auto base_ex = t.exists_left;
  t.exists_left = [base_ex](const Cert& c) -> std::vector<CertAbs1> {
    if (is_hml(c)) return {[c](const Term&) { return c; }};
    return base_ex(c);
  };
  auto base_decide = t.decide_left;
  t.decide_left = [base_decide](const Cert& c, const Formula& f) -> std::vector<Cert> {
    if (c->kind == CertKind::HmlConj) return c->items;
    return base_decide(c, f);
  };
  auto base_all = t.forall_left;
  t.forall_left = [base_all](const Cert& c) -> std::vector<WitnessAlt> {
    if (c->kind == CertKind::HmlDia) {
      return {WitnessAlt{c->child, TermNode::make_const(c->label)},
              WitnessAlt{c, std::nullopt}};
    }
    if (is_hml(c)) return {WitnessAlt{c, std::nullopt}};
    return base_all(c);
  };
  auto base_impl = t.imp_left;
  t.imp_left = [base_impl](const Cert& c) -> std::vector<std::pair<Cert, Cert>> {
    if (is_hml(c)) return {{c_sync(c_stop()), c}};
    return base_impl(c);
  };
}

}  // namespace

FpcTable nonsim_table() {
  FpcTable t = common_table();
  t.name = "nonsim";
  add_assertion_clauses(t);

  auto base_nu = t.nu_unfold_left;
  t.nu_unfold_left = [base_nu](const Cert& c) {
    if (c->kind == CertKind::HmlDia) return one(c);
    return base_nu(c);
  };
  return t;
}

FpcTable nonbisim_table() {
  FpcTable t = common_table();
  t.name = "nonbisim";
  add_assertion_clauses(t);

  auto base_nu = t.nu_unfold_left;
  t.nu_unfold_left = [base_nu](const Cert& c) {
    if (c->kind == CertKind::HmlDia || c->kind == CertKind::HmlNegDia) return one(c);
    return base_nu(c);
  };

  // A positive diamond selects the first conjunct of the bisimulation body
  // and a negated one the second, which swaps the two processes.  Since
  // bisimilarity is symmetric, the mirrored selections are offered as
  // fallback alternatives, so an assertion may name the distinguishing move
  // of either process.
  auto base_and = t.and_neg_left;
  t.and_neg_left = [base_and](const Cert& c) -> std::vector<std::pair<Cert, int>> {
    if (c->kind == CertKind::HmlDia) return {{c, 1}, {c, 2}};
    if (c->kind == CertKind::HmlNegDia) {
      Cert dia = c_hml_dia(c->label, c->child);
      return {{dia, 2}, {dia, 1}};
    }
    return base_and(c);
  };
  return t;
}

}  // namespace fpc
