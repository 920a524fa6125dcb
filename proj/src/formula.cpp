#include "fpc/formula.hpp"

#include <algorithm>

namespace fpc {

namespace {

std::shared_ptr<FormulaNode> node(Conn c) {
  auto n = std::make_shared<FormulaNode>();
  n->conn = c;
  return n;
}

}  // namespace

Formula f_unit(Conn c) { return node(c); }

Formula f_and_pos(Formula a, Formula b) {
  auto n = node(Conn::AndPos);
  n->a = std::move(a);
  n->b = std::move(b);
  return n;
}

Formula f_and_neg(Formula a, Formula b) {
  auto n = node(Conn::AndNeg);
  n->a = std::move(a);
  n->b = std::move(b);
  return n;
}

Formula f_or(Formula a, Formula b) {
  auto n = node(Conn::Or);
  n->a = std::move(a);
  n->b = std::move(b);
  return n;
}

Formula f_imp(Formula a, Formula b) {
  auto n = node(Conn::Imp);
  n->a = std::move(a);
  n->b = std::move(b);
  return n;
}

Formula f_eq(Term s, Term t) {
  auto n = node(Conn::Eq);
  n->s = std::move(s);
  n->t = std::move(t);
  return n;
}

Formula f_neq(Term s, Term t) {
  auto n = node(Conn::Neq);
  n->s = std::move(s);
  n->t = std::move(t);
  return n;
}

Formula f_exists(Formula body) {
  auto n = node(Conn::Exists);
  n->a = std::move(body);
  return n;
}

Formula f_forall(Formula body) {
  auto n = node(Conn::Forall);
  n->a = std::move(body);
  return n;
}

Formula f_mu(FixBody fp, std::vector<Term> args) {
  if (static_cast<int>(args.size()) != fp->arity)
    throw FormulaError("fixed point applied to wrong number of arguments");
  auto n = node(Conn::Mu);
  n->fp = std::move(fp);
  n->args = std::move(args);
  return n;
}

Formula f_nu(FixBody fp, std::vector<Term> args) {
  if (static_cast<int>(args.size()) != fp->arity)
    throw FormulaError("fixed point applied to wrong number of arguments");
  auto n = node(Conn::Nu);
  n->fp = std::move(fp);
  n->args = std::move(args);
  return n;
}

Formula f_pred_app(std::vector<Term> args, Polarity pol) {
  auto n = node(Conn::PredApp);
  n->args = std::move(args);
  n->pred_pol = pol;
  return n;
}

Formula f_not(Formula a) { return f_imp(std::move(a), f_unit(Conn::FalseNeg)); }

Polarity polarity(const Formula& f) {
  switch (f->conn) {
    case Conn::TruePos:
    case Conn::FalsePos:
    case Conn::AndPos:
    case Conn::Or:
    case Conn::Eq:
    case Conn::Exists:
    case Conn::Mu:
      return Polarity::Positive;
    case Conn::TrueNeg:
    case Conn::FalseNeg:
    case Conn::AndNeg:
    case Conn::Imp:
    case Conn::Neq:
    case Conn::Forall:
    case Conn::Nu:
      return Polarity::Negative;
    case Conn::PredApp:
      return f->pred_pol;
  }
  return Polarity::Positive;
}

bool is_positive(const Formula& f) { return polarity(f) == Polarity::Positive; }

namespace {

// parity = number of implication antecedents crossed, mod 2.
bool purity_walk(const Formula& f, int parity, bool want_positive) {
  bool here_positive = polarity(f) == Polarity::Positive;
  bool expect_positive = want_positive ? (parity == 0) : (parity == 1);
  if (here_positive != expect_positive) return false;
  switch (f->conn) {
    case Conn::AndPos:
    case Conn::AndNeg:
    case Conn::Or:
      return purity_walk(f->a, parity, want_positive) && purity_walk(f->b, parity, want_positive);
    case Conn::Imp:
      return purity_walk(f->a, 1 - parity, want_positive) && purity_walk(f->b, parity, want_positive);
    case Conn::Exists:
    case Conn::Forall:
      return purity_walk(f->a, parity, want_positive);
    case Conn::Mu:
    case Conn::Nu:
      return purity_walk(f->fp->formula, parity, want_positive);
    default:
      return true;
  }
}

bool switchable_walk(const Formula& f, int parity) {
  switch (f->conn) {
    case Conn::AndPos:
      if (parity == 1 && !purely_positive(f->a) && !purely_positive(f->b)) return false;
      return switchable_walk(f->a, parity) && switchable_walk(f->b, parity);
    case Conn::Imp:
      if (parity == 0 && !purely_positive(f->a) && !purely_negative(f->b)) return false;
      return switchable_walk(f->a, 1 - parity) && switchable_walk(f->b, parity);
    case Conn::AndNeg:
    case Conn::Or:
      return switchable_walk(f->a, parity) && switchable_walk(f->b, parity);
    case Conn::Exists:
    case Conn::Forall:
      return switchable_walk(f->a, parity);
    case Conn::Mu:
    case Conn::Nu:
      return switchable_walk(f->fp->formula, parity);
    default:
      return true;
  }
}

}  // namespace

bool purely_positive(const Formula& f) { return purity_walk(f, 0, true); }
bool purely_negative(const Formula& f) { return purity_walk(f, 0, false); }

bool switchable(const Formula& f, Side side) {
  Formula g = side == Side::Right ? f : f_not(f);
  return switchable_walk(g, 0);
}

Formula dual(const Formula& f) {
  switch (f->conn) {
    case Conn::TruePos:
      return f_unit(Conn::FalseNeg);
    case Conn::FalseNeg:
      return f_unit(Conn::TruePos);
    case Conn::FalsePos:
      return f_unit(Conn::TrueNeg);
    case Conn::TrueNeg:
      return f_unit(Conn::FalsePos);
    case Conn::AndPos:
      return f_imp(f->a, dual(f->b));
    case Conn::Imp:
      return f_and_pos(f->a, dual(f->b));
    case Conn::AndNeg:
      return f_or(dual(f->a), dual(f->b));
    case Conn::Or:
      return f_and_neg(dual(f->a), dual(f->b));
    case Conn::Eq:
      return f_neq(f->s, f->t);
    case Conn::Neq:
      return f_eq(f->s, f->t);
    case Conn::Exists:
      return f_forall(dual(f->a));
    case Conn::Forall:
      return f_exists(dual(f->a));
    case Conn::Mu: {
      auto body = std::make_shared<FixpointBody>();
      body->arity = f->fp->arity;
      body->formula = dual(f->fp->formula);
      return f_nu(body, f->args);
    }
    case Conn::Nu: {
      auto body = std::make_shared<FixpointBody>();
      body->arity = f->fp->arity;
      body->formula = dual(f->fp->formula);
      return f_mu(body, f->args);
    }
    case Conn::PredApp:
      return f_pred_app(f->args, f->pred_pol == Polarity::Positive ? Polarity::Negative
                                                                   : Polarity::Positive);
  }
  throw FormulaError("dual: bad connective");
}

namespace {

// Substitutes Bound(depth+i) in a term by closed replacement terms given in
// declaration order (declared variable i is Bound index n-1-i).
Term inst_term(const Term& t, const std::vector<Term>& args, int depth) {
  switch (t->kind) {
    case TermKind::Bound: {
      if (t->index < depth) return t;
      int rel = t->index - depth;
      int n = static_cast<int>(args.size());
      if (rel >= n) throw FormulaError("unbound term index in formula body");
      return args[n - 1 - rel];
    }
    case TermKind::Const: {
      if (t->args.empty()) return t;
      std::vector<Term> as;
      as.reserve(t->args.size());
      bool changed = false;
      for (const Term& x : t->args) {
        Term y = inst_term(x, args, depth);
        changed |= (y.get() != x.get());
        as.push_back(std::move(y));
      }
      if (!changed) return t;
      return TermNode::make_const(t->sym, std::move(as));
    }
    default:
      return t;
  }
}

// One traversal serves unfolding and predicate application.  `depth` counts
// the term binders crossed (including nested fixed-point bodies, whose
// formulas may in general mention outer variables); `fpdepth` counts crossed
// fixed-point bodies, so PredApp nodes are rewritten only when they refer to
// the body being unfolded.  `self` builds the replacement for such a node
// from its instantiated arguments.
using SelfFn = std::function<Formula(std::vector<Term>)>;

Formula inst_formula(const Formula& f, const std::vector<Term>& args, int depth, int fpdepth,
                     const SelfFn& self) {
  switch (f->conn) {
    case Conn::TruePos:
    case Conn::FalsePos:
    case Conn::TrueNeg:
    case Conn::FalseNeg:
      return f;
    case Conn::Eq:
      return f_eq(inst_term(f->s, args, depth), inst_term(f->t, args, depth));
    case Conn::Neq:
      return f_neq(inst_term(f->s, args, depth), inst_term(f->t, args, depth));
    case Conn::AndPos:
      return f_and_pos(inst_formula(f->a, args, depth, fpdepth, self),
                       inst_formula(f->b, args, depth, fpdepth, self));
    case Conn::AndNeg:
      return f_and_neg(inst_formula(f->a, args, depth, fpdepth, self),
                       inst_formula(f->b, args, depth, fpdepth, self));
    case Conn::Or:
      return f_or(inst_formula(f->a, args, depth, fpdepth, self),
                  inst_formula(f->b, args, depth, fpdepth, self));
    case Conn::Imp:
      return f_imp(inst_formula(f->a, args, depth, fpdepth, self),
                   inst_formula(f->b, args, depth, fpdepth, self));
    case Conn::Exists:
      return f_exists(inst_formula(f->a, args, depth + 1, fpdepth, self));
    case Conn::Forall:
      return f_forall(inst_formula(f->a, args, depth + 1, fpdepth, self));
    case Conn::Mu:
    case Conn::Nu: {
      std::vector<Term> as;
      as.reserve(f->args.size());
      for (const Term& x : f->args) as.push_back(inst_term(x, args, depth));
      Formula inner =
          inst_formula(f->fp->formula, args, depth + f->fp->arity, fpdepth + 1, self);
      FixBody fp = f->fp;
      if (inner.get() != f->fp->formula.get()) {
        auto nb = std::make_shared<FixpointBody>();
        nb->arity = f->fp->arity;
        nb->formula = inner;
        fp = nb;
      }
      return f->conn == Conn::Mu ? f_mu(fp, std::move(as)) : f_nu(fp, std::move(as));
    }
    case Conn::PredApp: {
      std::vector<Term> as;
      as.reserve(f->args.size());
      for (const Term& x : f->args) as.push_back(inst_term(x, args, depth));
      if (fpdepth == 0 && self) return self(std::move(as));
      return f_pred_app(std::move(as), f->pred_pol);
    }
  }
  throw FormulaError("instantiate: bad connective");
}

}  // namespace

Formula unfold(const Formula& fixpoint) {
  if (fixpoint->conn != Conn::Mu && fixpoint->conn != Conn::Nu)
    throw FormulaError("unfold requires a mu or nu formula");
  FixBody fp = fixpoint->fp;
  bool is_mu = fixpoint->conn == Conn::Mu;
  SelfFn self = [fp, is_mu](std::vector<Term> as) -> Formula {
    return is_mu ? f_mu(fp, std::move(as)) : f_nu(fp, std::move(as));
  };
  return inst_formula(fp->formula, fixpoint->args, 0, 0, self);
}

Formula apply_pred(const PredExpr& pred, const std::vector<Term>& args) {
  if (static_cast<int>(args.size()) != pred->arity)
    throw FormulaError("predicate expression applied to wrong number of arguments");
  return inst_formula(pred->formula, args, 0, 0, nullptr);
}

Formula inst_binder(const Formula& body, const Term& t) {
  return inst_formula(body, {t}, 0, 0, nullptr);
}

Formula unfold_with(const FixBody& fp, const PredExpr& pred, const std::vector<Term>& args) {
  if (static_cast<int>(args.size()) != fp->arity)
    throw FormulaError("fixed-point body applied to wrong number of arguments");
  if (pred->arity != fp->arity)
    throw FormulaError("invariant arity differs from fixed-point arity");
  SelfFn self = [&pred](std::vector<Term> as) -> Formula { return apply_pred(pred, as); };
  return inst_formula(fp->formula, args, 0, 0, self);
}

bool formula_equal(const Formula& x, const Formula& y) {
  if (x.get() == y.get()) return true;
  if (x->conn != y->conn) return false;
  switch (x->conn) {
    case Conn::TruePos:
    case Conn::FalsePos:
    case Conn::TrueNeg:
    case Conn::FalseNeg:
      return true;
    case Conn::Eq:
    case Conn::Neq:
      return term_equal(x->s, y->s) && term_equal(x->t, y->t);
    case Conn::AndPos:
    case Conn::AndNeg:
    case Conn::Or:
    case Conn::Imp:
      return formula_equal(x->a, y->a) && formula_equal(x->b, y->b);
    case Conn::Exists:
    case Conn::Forall:
      return formula_equal(x->a, y->a);
    case Conn::Mu:
    case Conn::Nu: {
      if (x->args.size() != y->args.size()) return false;
      for (size_t i = 0; i < x->args.size(); ++i)
        if (!term_equal(x->args[i], y->args[i])) return false;
      if (x->fp.get() == y->fp.get()) return true;
      return x->fp->arity == y->fp->arity && formula_equal(x->fp->formula, y->fp->formula);
    }
    case Conn::PredApp: {
      if (x->pred_pol != y->pred_pol || x->args.size() != y->args.size()) return false;
      for (size_t i = 0; i < x->args.size(); ++i)
        if (!term_equal(x->args[i], y->args[i])) return false;
      return true;
    }
  }
  return false;
}

Formula map_terms(const Formula& f, const std::function<Term(const Term&)>& fn) {
  switch (f->conn) {
    case Conn::TruePos:
    case Conn::FalsePos:
    case Conn::TrueNeg:
    case Conn::FalseNeg:
      return f;
    case Conn::Eq:
      return f_eq(fn(f->s), fn(f->t));
    case Conn::Neq:
      return f_neq(fn(f->s), fn(f->t));
    case Conn::AndPos:
      return f_and_pos(map_terms(f->a, fn), map_terms(f->b, fn));
    case Conn::AndNeg:
      return f_and_neg(map_terms(f->a, fn), map_terms(f->b, fn));
    case Conn::Or:
      return f_or(map_terms(f->a, fn), map_terms(f->b, fn));
    case Conn::Imp:
      return f_imp(map_terms(f->a, fn), map_terms(f->b, fn));
    case Conn::Exists:
      return f_exists(map_terms(f->a, fn));
    case Conn::Forall:
      return f_forall(map_terms(f->a, fn));
    case Conn::Mu:
    case Conn::Nu: {
      std::vector<Term> as;
      as.reserve(f->args.size());
      for (const Term& x : f->args) as.push_back(fn(x));
      Formula inner = map_terms(f->fp->formula, fn);
      FixBody fp = f->fp;
      if (inner.get() != f->fp->formula.get()) {
        auto nb = std::make_shared<FixpointBody>();
        nb->arity = f->fp->arity;
        nb->formula = inner;
        fp = nb;
      }
      return f->conn == Conn::Mu ? f_mu(fp, std::move(as)) : f_nu(fp, std::move(as));
    }
    case Conn::PredApp: {
      std::vector<Term> as;
      as.reserve(f->args.size());
      for (const Term& x : f->args) as.push_back(fn(x));
      return f_pred_app(std::move(as), f->pred_pol);
    }
  }
  throw FormulaError("map_terms: bad connective");
}

// ---------------------------------------------------------------------------
// Printing

namespace {

struct PrintEnv {
  std::vector<std::string> term_names;  // innermost last
  std::vector<std::string> pred_names;  // innermost last
  int counter = 0;

  std::string fresh(const char* base) { return base + std::to_string(counter++); }
};

std::string term_str(const Term& t, const PrintEnv& env) {
  switch (t->kind) {
    case TermKind::Bound: {
      int pos = static_cast<int>(env.term_names.size()) - 1 - t->index;
      if (pos < 0) return "$" + std::to_string(t->index);
      return env.term_names[pos];
    }
    case TermKind::Const: {
      if (t->args.empty()) return sym_name(t->sym);
      std::string out = "(" + sym_name(t->sym);
      for (const Term& a : t->args) out += ' ' + term_str(a, env);
      return out + ')';
    }
    case TermKind::LogicVar:
      return "?x" + std::to_string(t->id);
    case TermKind::EigenVar:
      return "!e" + std::to_string(t->id);
  }
  return "?";
}

std::string fmla_str(const Formula& f, PrintEnv& env) {
  switch (f->conn) {
    case Conn::TruePos:
      return "true+";
    case Conn::FalsePos:
      return "false+";
    case Conn::TrueNeg:
      return "true-";
    case Conn::FalseNeg:
      return "false-";
    case Conn::Eq:
      return "(= " + term_str(f->s, env) + ' ' + term_str(f->t, env) + ')';
    case Conn::Neq:
      return "(neq " + term_str(f->s, env) + ' ' + term_str(f->t, env) + ')';
    case Conn::AndPos:
      return "(and+ " + fmla_str(f->a, env) + ' ' + fmla_str(f->b, env) + ')';
    case Conn::AndNeg:
      return "(and- " + fmla_str(f->a, env) + ' ' + fmla_str(f->b, env) + ')';
    case Conn::Or:
      return "(or " + fmla_str(f->a, env) + ' ' + fmla_str(f->b, env) + ')';
    case Conn::Imp:
      return "(imp " + fmla_str(f->a, env) + ' ' + fmla_str(f->b, env) + ')';
    case Conn::Exists:
    case Conn::Forall: {
      std::string v = env.fresh("y");
      env.term_names.push_back(v);
      std::string body = fmla_str(f->a, env);
      env.term_names.pop_back();
      return std::string(f->conn == Conn::Exists ? "(exists " : "(forall ") + v + ' ' + body + ')';
    }
    case Conn::Mu:
    case Conn::Nu: {
      std::string p = env.fresh("A");
      std::vector<std::string> vars;
      for (int i = 0; i < f->fp->arity; ++i) vars.push_back(env.fresh("x"));
      env.pred_names.push_back(p);
      for (const std::string& v : vars) env.term_names.push_back(v);
      std::string body = fmla_str(f->fp->formula, env);
      for (size_t i = 0; i < vars.size(); ++i) env.term_names.pop_back();
      env.pred_names.pop_back();
      std::string out = f->conn == Conn::Mu ? "(mu (lam (" : "(nu (lam (";
      out += p;
      for (const std::string& v : vars) out += ' ' + v;
      out += ") " + body + ')';
      for (const Term& a : f->args) out += ' ' + term_str(a, env);
      return out + ')';
    }
    case Conn::PredApp: {
      std::string p = env.pred_names.empty() ? std::string("A?") : env.pred_names.back();
      if (f->args.empty()) return p;
      std::string out = "(" + p;
      for (const Term& a : f->args) out += ' ' + term_str(a, env);
      return out + ')';
    }
  }
  return "?";
}

}  // namespace

std::string formula_to_string(const Formula& f) {
  PrintEnv env;
  return fmla_str(f, env);
}

std::string pred_expr_to_string(const PredExpr& p) {
  PrintEnv env;
  std::vector<std::string> vars;
  for (int i = 0; i < p->arity; ++i) vars.push_back(env.fresh("x"));
  for (const std::string& v : vars) env.term_names.push_back(v);
  std::string body = fmla_str(p->formula, env);
  std::string out = "(lam (";
  for (size_t i = 0; i < vars.size(); ++i) out += (i ? " " : "") + vars[i];
  return out + ") " + body + ')';
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

struct ParseEnv {
  std::vector<std::string> term_names;  // innermost last
  std::vector<std::string> pred_names;  // innermost last; a name per fixpoint body
  std::vector<int> pred_arities;
  std::vector<Polarity> pred_pols;

  int term_index(const std::string& n) const {
    for (int i = static_cast<int>(term_names.size()) - 1; i >= 0; --i)
      if (term_names[i] == n) return static_cast<int>(term_names.size()) - 1 - i;
    return -1;
  }
};

Term parse_term(const Sexpr& e, const ParseEnv& env) {
  if (e.is_atom) {
    int idx = env.term_index(e.atom);
    if (idx >= 0) return TermNode::make_bound(idx);
    return TermNode::make_const(e.atom);
  }
  if (e.size() == 0 || !e[0].is_atom) throw FormulaError("bad term: " + e.to_string());
  std::vector<Term> args;
  for (size_t i = 1; i < e.size(); ++i) args.push_back(parse_term(e[i], env));
  return TermNode::make_const(e[0].atom, std::move(args));
}

Formula parse_f(const Sexpr& e, ParseEnv& env);

FixBody parse_body(const Sexpr& e, ParseEnv& env, Polarity pol) {
  if (e.is_atom || e.size() != 3 || !e[0].is_atom || e[0].atom != "lam" || !e[1].is_list() ||
      e[1].size() < 1)
    throw FormulaError("expected (lam (P x...) FORMULA): " + e.to_string());
  std::string pname = e[1][0].atom;
  std::vector<std::string> vars;
  for (size_t i = 1; i < e[1].size(); ++i) {
    if (!e[1][i].is_atom) throw FormulaError("bad binder list: " + e[1].to_string());
    vars.push_back(e[1][i].atom);
  }
  env.pred_names.push_back(pname);
  env.pred_arities.push_back(static_cast<int>(vars.size()));
  env.pred_pols.push_back(pol);
  for (const std::string& v : vars) env.term_names.push_back(v);
  Formula body = parse_f(e[2], env);
  for (size_t i = 0; i < vars.size(); ++i) env.term_names.pop_back();
  env.pred_names.pop_back();
  env.pred_arities.pop_back();
  env.pred_pols.pop_back();
  auto fb = std::make_shared<FixpointBody>();
  fb->arity = static_cast<int>(vars.size());
  fb->formula = body;
  return fb;
}

Formula fold_right(const Sexpr& e, ParseEnv& env, Formula (*mk)(Formula, Formula)) {
  if (e.size() < 3) throw FormulaError("connective needs at least two arguments: " + e.to_string());
  Formula acc = parse_f(e[e.size() - 1], env);
  for (size_t i = e.size() - 1; i-- > 1;) acc = mk(parse_f(e[i], env), acc);
  return acc;
}

Formula parse_f(const Sexpr& e, ParseEnv& env) {
  if (e.is_atom) {
    if (e.atom == "true+") return f_unit(Conn::TruePos);
    if (e.atom == "false+") return f_unit(Conn::FalsePos);
    if (e.atom == "true-") return f_unit(Conn::TrueNeg);
    if (e.atom == "false-") return f_unit(Conn::FalseNeg);
    if (!env.pred_names.empty() && e.atom == env.pred_names.back()) {
      if (env.pred_arities.back() != 0)
        throw FormulaError("predicate variable used with wrong arity: " + e.atom);
      return f_pred_app({}, env.pred_pols.back());
    }
    throw FormulaError("unknown formula atom: " + e.atom);
  }
  if (e.size() == 0 || !e[0].is_atom) throw FormulaError("bad formula: " + e.to_string());
  const std::string& head = e[0].atom;
  if (head == "=" || head == "neq") {
    if (e.size() != 3) throw FormulaError(head + " needs two arguments");
    Term s = parse_term(e[1], env);
    Term t = parse_term(e[2], env);
    return head == "=" ? f_eq(s, t) : f_neq(s, t);
  }
  if (head == "and+") return fold_right(e, env, f_and_pos);
  if (head == "and-") return fold_right(e, env, f_and_neg);
  if (head == "or") return fold_right(e, env, f_or);
  if (head == "imp") {
    if (e.size() != 3) throw FormulaError("imp needs two arguments");
    Formula a = parse_f(e[1], env);
    return f_imp(a, parse_f(e[2], env));
  }
  if (head == "exists" || head == "forall") {
    if (e.size() != 3 || !e[1].is_atom) throw FormulaError("expected (" + head + " VAR FORMULA)");
    env.term_names.push_back(e[1].atom);
    Formula body = parse_f(e[2], env);
    env.term_names.pop_back();
    return head == "exists" ? f_exists(body) : f_forall(body);
  }
  if (head == "mu" || head == "nu") {
    if (e.size() < 2) throw FormulaError("expected (" + head + " (lam ...) t...)");
    Polarity pol = head == "mu" ? Polarity::Positive : Polarity::Negative;
    FixBody fb = parse_body(e[1], env, pol);
    std::vector<Term> args;
    for (size_t i = 2; i < e.size(); ++i) args.push_back(parse_term(e[i], env));
    return head == "mu" ? f_mu(fb, std::move(args)) : f_nu(fb, std::move(args));
  }
  if (!env.pred_names.empty() && head == env.pred_names.back()) {
    std::vector<Term> args;
    for (size_t i = 1; i < e.size(); ++i) args.push_back(parse_term(e[i], env));
    if (static_cast<int>(args.size()) != env.pred_arities.back())
      throw FormulaError("predicate variable used with wrong arity: " + head);
    return f_pred_app(std::move(args), env.pred_pols.back());
  }
  throw FormulaError("unknown connective: " + head);
}

}  // namespace

Formula parse_formula(const Sexpr& e) {
  ParseEnv env;
  return parse_f(e, env);
}

Formula parse_formula(const std::string& text) { return parse_formula(parse_sexpr(text)); }

PredExpr parse_pred_expr(const Sexpr& e) {
  if (e.is_atom || e.size() != 3 || !e[0].is_atom || e[0].atom != "lam" || !e[1].is_list())
    throw FormulaError("expected (lam (x...) FORMULA): " + e.to_string());
  ParseEnv env;
  std::vector<std::string> vars;
  for (size_t i = 0; i < e[1].size(); ++i) {
    if (!e[1][i].is_atom) throw FormulaError("bad binder list: " + e[1].to_string());
    vars.push_back(e[1][i].atom);
  }
  for (const std::string& v : vars) env.term_names.push_back(v);
  Formula body = parse_f(e[2], env);
  auto p = std::make_shared<PredExprNode>();
  p->arity = static_cast<int>(vars.size());
  p->formula = body;
  return p;
}

PredExpr parse_pred_expr(const std::string& text) { return parse_pred_expr(parse_sexpr(text)); }

}  // namespace fpc
