#include "support/permissive.hpp"

namespace fpc::testsupport {

namespace {

PredExpr const_pred(int arity, Conn unit) {
  auto p = std::make_shared<PredExprNode>();
  p->arity = arity;
  p->formula = f_unit(unit);
  return p;
}

PredExpr diag_pred(int arity) {
  auto p = std::make_shared<PredExprNode>();
  p->arity = arity;
  Term x = TermNode::make_bound(arity - 1);
  p->formula = f_eq(x, x);
  return p;
}

}  // namespace

FpcTable permissive_table() {
  FpcTable t;
  t.name = "permissive";

  auto any = [](const Cert& c) -> std::vector<Cert> { return {c}; };
  auto any_pair = [](const Cert& c) -> std::vector<std::pair<Cert, Cert>> { return {{c, c}}; };
  auto any_branch = [](const Cert& c) -> std::vector<std::pair<Cert, int>> {
    return {{c, 1}, {c, 2}};
  };
  auto any_witness = [](const Cert& c) -> std::vector<WitnessAlt> {
    return {WitnessAlt{c, std::nullopt}};
  };
  auto any_abs = [](const Cert& c) -> std::vector<CertAbs1> {
    return {[c](const Term&) { return c; }};
  };
  auto any_decide = [](const Cert& c, const Formula&) -> std::vector<Cert> { return {c}; };

  t.eq_left = any;
  t.neq_right = any;
  t.true_pos_left = any;
  t.false_neg_right = any;
  t.and_pos_left = any;
  t.or_left = any_pair;
  t.imp_right = any;
  t.and_neg_right = any_pair;
  t.exists_left = any_abs;
  t.forall_right = any_abs;
  t.mu_unfold_left = any;
  t.nu_unfold_right = any;
  t.store_left = any;
  t.store_right = any;
  t.and_pos_right = any_pair;
  t.or_right = any_branch;
  t.exists_right = any_witness;
  t.imp_left = any_pair;
  t.and_neg_left = any_branch;
  t.forall_left = any_witness;
  t.mu_unfold_right = any;
  t.nu_unfold_left = any;
  t.decide_left = any_decide;
  t.decide_right = any_decide;
  t.release_left = any;
  t.release_right = any;

  // Junk invariants for the fixed-point rules.  They are deliberately
  // uninformative but chosen so their instance premise is consumed rather
  // than stored (an equation or false+), keeping the one-formula
  // phase-switch discipline intact even under this table.
  auto junk = [](const Cert& c) -> std::vector<IndAlt> {
    std::vector<IndAlt> out;
    for (int arity = 1; arity <= 3; ++arity) {
      out.push_back(IndAlt{[c](const std::vector<Term>&) { return c; }, c,
                           const_pred(arity, Conn::FalsePos)});
      out.push_back(IndAlt{[c](const std::vector<Term>&) { return c; }, c, diag_pred(arity)});
    }
    return out;
  };
  t.induction = junk;
  t.coinduction = junk;

  return t;
}

}  // namespace fpc::testsupport
