#ifndef FPC_FORMULA_HPP
#define FPC_FORMULA_HPP

#include <functional>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "fpc/sexpr.hpp"
#include "fpc/term.hpp"

namespace fpc {

// Polarized formulas.  Positive connectives: true+, and+, false+, or, exists,
// =, mu.  Negative: false-, imp, true-, and-, forall, neq, nu.  A predicate
// application inherits the polarity declared for its predicate variable (the
// polarity of the fixed point that binds it), which keeps the purity and
// switchability analyses decidable on open fixed-point bodies.
enum class Conn {
  TruePos,
  FalsePos,
  TrueNeg,
  FalseNeg,
  AndPos,
  AndNeg,
  Or,
  Imp,
  Eq,
  Neq,
  Exists,
  Forall,
  Mu,
  Nu,
  PredApp,
};

enum class Polarity { Positive, Negative };

class FormulaNode;
using Formula = std::shared_ptr<const FormulaNode>;

// Abstraction over one predicate variable and `arity` term variables.
// Term variables use nameless indices: declared variable i is Bound(arity-1-i)
// at the top of `formula` (the last declared variable is innermost).  The
// predicate variable is implicit: PredApp nodes always refer to the body of
// the innermost enclosing fixed point.
struct FixpointBody {
  int arity = 0;
  Formula formula;
};
using FixBody = std::shared_ptr<const FixpointBody>;

// A closed predicate expression (an abstraction over `arity` term variables
// with no free predicate variable), used as an explicit (co)invariant.
struct PredExprNode {
  int arity = 0;
  Formula formula;
};
using PredExpr = std::shared_ptr<const PredExprNode>;

class FormulaNode {
public:
  Conn conn;
  Formula a, b;            // AndPos/AndNeg/Or/Imp children; Exists/Forall body in `a`
  Term s, t;               // Eq/Neq
  FixBody fp;              // Mu/Nu
  std::vector<Term> args;  // Mu/Nu/PredApp
  Polarity pred_pol = Polarity::Positive;  // PredApp only
};

class FormulaError : public std::runtime_error {
public:
  explicit FormulaError(const std::string& what) : std::runtime_error(what) {}
};

Formula f_unit(Conn c);  // TruePos/FalsePos/TrueNeg/FalseNeg
Formula f_and_pos(Formula a, Formula b);
Formula f_and_neg(Formula a, Formula b);
Formula f_or(Formula a, Formula b);
Formula f_imp(Formula a, Formula b);
Formula f_eq(Term s, Term t);
Formula f_neq(Term s, Term t);
Formula f_exists(Formula body);
Formula f_forall(Formula body);
Formula f_mu(FixBody fp, std::vector<Term> args);
Formula f_nu(FixBody fp, std::vector<Term> args);
Formula f_pred_app(std::vector<Term> args, Polarity pol);

// Negation is written as (.) imp false-.
Formula f_not(Formula a);

Polarity polarity(const Formula& f);
bool is_positive(const Formula& f);

// A formula is purely positive (purely negative) when each connective
// occurrence is positive exactly when it sits under an even (odd) number of
// implication antecedents.
bool purely_positive(const Formula& f);
bool purely_negative(const Formula& f);

// Definition-1 switchability, which guarantees one-formula sequents at every
// phase switch: every negatively occurring C and+ D has a purely positive
// conjunct, and every positively occurring C imp D has a purely positive
// antecedent or purely negative consequent.  A left-hand occurrence of B is
// switchable when B imp false- is.
enum class Side { Left, Right };
bool switchable(const Formula& f, Side side);

// De Morgan dual; an involution that flips polarity.
Formula dual(const Formula& f);

// Unfolds mu B ts / nu B ts into B (mu B) ts / B (nu B) ts.
Formula unfold(const Formula& fixpoint);

// Capture-avoiding application of a closed predicate expression.
Formula apply_pred(const PredExpr& pred, const std::vector<Term>& args);

// Instantiates the body of a one-variable binder (exists/forall) with a
// runtime term.
Formula inst_binder(const Formula& body, const Term& t);

// B S ts: the fixed-point body with its predicate variable replaced by an
// explicit predicate expression (used by the induction rules' premises).
Formula unfold_with(const FixBody& fp, const PredExpr& pred, const std::vector<Term>& args);

bool formula_equal(const Formula& x, const Formula& y);

// Structure-preserving map over every runtime term in the formula.
Formula map_terms(const Formula& f, const std::function<Term(const Term&)>& fn);

std::string formula_to_string(const Formula& f);
std::string pred_expr_to_string(const PredExpr& p);

// Surface syntax, e.g.
//   (imp (or (and+ (= x b) (= y d)) (and+ (= x c) (= y d))) false-)
//   (mu (lam (A x z) (or (A x z) ...)) a c)
//   pred expressions: (lam (x y) FORMULA)
// Printing and parsing round-trip structurally.
Formula parse_formula(const Sexpr& e);
Formula parse_formula(const std::string& text);
PredExpr parse_pred_expr(const Sexpr& e);
PredExpr parse_pred_expr(const std::string& text);

}  // namespace fpc

#endif
