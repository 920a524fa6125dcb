#include "doctest.h"
#include "fpc/formula.hpp"
#include "fpc/problem.hpp"
#include "fpc/selftest.hpp"
#include "support/oracles.hpp"

using namespace fpc;
using namespace fpc::testsupport;

namespace {

Term k(const char* name) { return TermNode::make_const(name); }

Graph fig1() { return parse_problem(selftest::fig1_graph()).graph; }
Lts fig3() { return parse_problem(selftest::fig3_lts()).lts; }

// Smallish random formulas for the algebraic properties (closed: no binders
// around the generated leaves beyond what the generator introduces).
Formula random_formula(Rng& rng, int depth) {
  if (depth == 0 || rng.chance(0.25)) {
    switch (rng.below(6)) {
      case 0: return f_unit(Conn::TruePos);
      case 1: return f_unit(Conn::FalsePos);
      case 2: return f_unit(Conn::TrueNeg);
      case 3: return f_unit(Conn::FalseNeg);
      case 4: return f_eq(k("a"), k("b"));
      default: return f_neq(k("c"), k("a"));
    }
  }
  switch (rng.below(6)) {
    case 0: return f_and_pos(random_formula(rng, depth - 1), random_formula(rng, depth - 1));
    case 1: return f_and_neg(random_formula(rng, depth - 1), random_formula(rng, depth - 1));
    case 2: return f_or(random_formula(rng, depth - 1), random_formula(rng, depth - 1));
    case 3: return f_imp(random_formula(rng, depth - 1), random_formula(rng, depth - 1));
    case 4: return f_exists(random_formula(rng, depth - 1));
    default: return f_forall(random_formula(rng, depth - 1));
  }
}

}  // namespace

TEST_CASE("polarity of top connectives") {
  CHECK(polarity(f_eq(k("a"), k("b"))) == Polarity::Positive);
  CHECK(polarity(f_nu(encode_bisim(fig3()), {k("6"), k("10")})) == Polarity::Negative);
  CHECK(polarity(f_imp(f_unit(Conn::TruePos), f_unit(Conn::FalseNeg))) == Polarity::Negative);
  CHECK(polarity(f_mu(encode_path(fig1()), {k("a"), k("c")})) == Polarity::Positive);
}

TEST_CASE("purely positive and purely negative") {
  Formula step = f_mu(encode_step(fig1()), {k("a"), k("c")});
  CHECK(purely_positive(step));
  Formula path = f_mu(encode_path(fig1()), {k("a"), k("c")});
  CHECK(purely_positive(path));
  CHECK_FALSE(purely_positive(f_imp(f_unit(Conn::TruePos), f_unit(Conn::FalseNeg))));

  // the section-4 style invariant is purely negative
  PredExpr inv = parse_pred_expr(
      "(lam (x y) (imp (or (and+ (= x b) (= y d)) (and+ (= x c) (= y d))) false-))");
  CHECK(purely_negative(apply_pred(inv, {k("b"), k("d")})));
}

TEST_CASE("de Morgan duality properties") {
  Rng rng(2024);
  for (int i = 0; i < 200; ++i) {
    Formula f = random_formula(rng, 4);
    CHECK(formula_equal(dual(dual(f)), f));
    CHECK(polarity(dual(f)) != polarity(f));
    CHECK(purely_positive(f) == purely_negative(dual(f)));
  }
  // and on a real encoding
  Formula path = f_mu(encode_path(fig1()), {k("a"), k("c")});
  CHECK(formula_equal(dual(dual(path)), path));
  CHECK(purely_negative(dual(path)));
}

TEST_CASE("switchability") {
  Lts l = fig3();
  Formula sim = f_nu(encode_sim(l), {k("1"), k("6")});
  Formula bisim = f_nu(encode_bisim(l), {k("6"), k("10")});
  CHECK(switchable(sim, Side::Right));
  CHECK(switchable(bisim, Side::Right));

  // purely positive formulas are switchable on either side
  Formula path = f_mu(encode_path(fig1()), {k("a"), k("c")});
  CHECK(purely_positive(path));
  CHECK(switchable(path, Side::Right));
  CHECK(switchable(path, Side::Left));

  // and+ of two non-purely-positive formulas under one implication is not
  Formula nu0 = f_nu(encode_sim(l), {k("1"), k("6")});
  Formula bad = f_imp(f_and_pos(nu0, nu0), f_unit(Conn::FalseNeg));
  CHECK_FALSE(switchable(bad, Side::Right));

  // switchability agreement between a right occurrence of a purely positive
  // formula and its left occurrence
  CHECK(switchable(path, Side::Left) == switchable(f_not(path), Side::Right));
}

TEST_CASE("unfold of the reachability fixed point") {
  Graph g = fig1();
  FixBody step = encode_step(g);
  FixBody path = encode_path(g);
  Formula unfolded = unfold(f_mu(path, {k("a"), k("c")}));

  // or(one a c, exists y. (one a y and+ path y c))
  Formula expect =
      f_or(f_mu(step, {k("a"), k("c")}),
           f_exists(f_and_pos(f_mu(step, {k("a"), TermNode::make_bound(0)}),
                              f_mu(path, {TermNode::make_bound(0), k("c")}))));
  CHECK(formula_equal(unfolded, expect));

  // unfolding keeps the recursive occurrences positive (they return as mu)
  CHECK(purely_positive(unfolded));
}

TEST_CASE("unfold without a recursive occurrence") {
  // mu (lam (A x) (= x z)) t  unfolds to  (= t z)
  Formula f = parse_formula("(mu (lam (A x) (= x z)) t)");
  CHECK(formula_equal(unfold(f), f_eq(k("t"), k("z"))));
}

TEST_CASE("unfold of the simulation fixed point") {
  Lts l = fig3();
  Formula unfolded = unfold(f_nu(encode_sim(l), {k("1"), k("6")}));
  REQUIRE(unfolded->conn == Conn::Forall);            // forall a
  REQUIRE(unfolded->a->conn == Conn::Forall);         // forall p'
  const Formula& imp = unfolded->a->a;
  REQUIRE(imp->conn == Conn::Imp);
  CHECK(imp->a->conn == Conn::Mu);                    // one 1 a p'
  CHECK(term_equal(imp->a->args[0], k("1")));
  REQUIRE(imp->b->conn == Conn::Exists);              // exists q'
  const Formula& conj = imp->b->a;
  REQUIRE(conj->conn == Conn::AndPos);
  CHECK(conj->a->conn == Conn::Mu);                   // one 6 a q'
  CHECK(term_equal(conj->a->args[0], k("6")));
  CHECK(conj->b->conn == Conn::Nu);                   // sim p' q'
}

TEST_CASE("apply_pred") {
  PredExpr inv = parse_pred_expr(
      "(lam (x y) (imp (or (and+ (= x b) (= y d)) (and+ (= x c) (= y d))) false-))");
  Formula applied = apply_pred(inv, {k("b"), k("d")});
  Formula expect = parse_formula(
      "(imp (or (and+ (= b b) (= d d)) (and+ (= b c) (= d d))) false-)");
  CHECK(formula_equal(applied, expect));

  PredExpr zero = parse_pred_expr("(lam () true+)");
  CHECK(formula_equal(apply_pred(zero, {}), f_unit(Conn::TruePos)));

  PredExpr pairs = parse_pred_expr(
      "(lam (x y) (or (and+ (= x 21) (= y 23)) (and+ (= x 22) (= y 24))))");
  CHECK(formula_equal(apply_pred(pairs, {k("21"), k("23")}),
                      parse_formula("(or (and+ (= 21 21) (= 23 23)) (and+ (= 21 22) (= 23 24)))")));

  CHECK_THROWS_AS(apply_pred(pairs, {k("21")}), FormulaError);
}

TEST_CASE("surface syntax round-trips") {
  const char* samples[] = {
      "(imp (or (and+ (= x0 b) (= x1 d)) (and+ (= x0 c) (= x1 d))) false-)",
      "(forall y0 (imp (or (= y0 1) (= y0 3)) (or (= y0 1) (or (= y0 2) (= y0 3)))))",
      "(mu (lam (A0 x1 x2) (or (= x1 x2) (exists y3 (and+ (= x1 y3) (A0 y3 x2))))) a c)",
      "true+",
      "(neq a b)",
  };
  for (const char* s : samples) {
    Formula f = parse_formula(s);
    CHECK(formula_equal(parse_formula(formula_to_string(f)), f));
  }

  Rng rng(7);
  for (int i = 0; i < 100; ++i) {
    Formula f = random_formula(rng, 4);
    CHECK(formula_equal(parse_formula(formula_to_string(f)), f));
  }

  PredExpr p = parse_pred_expr("(lam (x y) (or (and+ (= x 21) (= y 23)) (= y x)))");
  PredExpr q = parse_pred_expr(pred_expr_to_string(p));
  CHECK(p->arity == q->arity);
  CHECK(formula_equal(p->formula, q->formula));
}

TEST_CASE("parser rejects ill-formed input") {
  CHECK_THROWS_AS(parse_formula("(= a)"), FormulaError);
  CHECK_THROWS_AS(parse_formula("(foo a b)"), FormulaError);
  CHECK_THROWS_AS(parse_formula("(mu (lam (A x) (A x x)) t)"), FormulaError);  // arity misuse
  CHECK_THROWS_AS(parse_formula("x"), FormulaError);
  CHECK_THROWS(parse_formula("(= a b"));
}
