#include "support/oracles.hpp"

#include <algorithm>
#include <functional>

namespace fpc::testsupport {

Term Subst::apply(const Term& t) const {
  switch (t->kind) {
    case TermKind::LogicVar: {
      auto it = map.find(t->id);
      if (it == map.end()) return t;
      return apply(it->second);
    }
    case TermKind::Const: {
      if (t->args.empty()) return t;
      std::vector<Term> args;
      for (const Term& a : t->args) args.push_back(apply(a));
      return TermNode::make_const(t->sym, std::move(args));
    }
    default:
      return t;
  }
}

int Subst::level_of(const TermNode& v) const {
  auto it = level.find(v.id);
  return it == level.end() ? v.level : it->second;
}

namespace {

bool occurs(const Subst& s, int id, const Term& t) {
  Term r = s.apply(t);
  if (r->kind == TermKind::LogicVar) return r->id == id;
  if (r->kind == TermKind::Const) {
    for (const Term& a : r->args)
      if (occurs(s, id, a)) return true;
  }
  return false;
}

// levels of all eigenvariables in a fully applied term must not exceed lv;
// logic variables still inside get lowered.
bool bindable(Subst& s, const TermNode& var, const Term& applied, int lv) {
  switch (applied->kind) {
    case TermKind::EigenVar:
      return s.level_of(*applied) <= lv;
    case TermKind::LogicVar:
      if (s.level_of(*applied) > lv) s.level[applied->id] = lv;
      return true;
    case TermKind::Const: {
      for (const Term& a : applied->args)
        if (!bindable(s, var, a, lv)) return false;
      return true;
    }
    default:
      return false;
  }
}

bool nu_rec(Subst& s, const Term& rs, const Term& rt) {
  Term a = s.apply(rs);
  Term b = s.apply(rt);
  if (a->kind == TermKind::LogicVar || b->kind == TermKind::LogicVar) {
    if (a->kind == TermKind::LogicVar && b->kind == TermKind::LogicVar && a->id == b->id)
      return true;
    // Prefer binding the variable whose level admits the other side.
    for (int attempt = 0; attempt < 2; ++attempt) {
      const Term& v = attempt == 0 ? a : b;
      const Term& o = attempt == 0 ? b : a;
      if (v->kind != TermKind::LogicVar) continue;
      if (occurs(s, v->id, o)) continue;
      Subst saved = s;
      if (bindable(s, *v, s.apply(o), s.level_of(*v))) {
        s.map[v->id] = o;
        return true;
      }
      s = saved;
    }
    return false;
  }
  if (a->kind == TermKind::EigenVar || b->kind == TermKind::EigenVar)
    return a->kind == b->kind && a->id == b->id;
  if (a->sym != b->sym || a->args.size() != b->args.size()) return false;
  for (size_t i = 0; i < a->args.size(); ++i)
    if (!nu_rec(s, a->args[i], b->args[i])) return false;
  return true;
}

}  // namespace

std::optional<Subst> naive_unify(const Term& s, const Term& t) {
  Subst out;
  if (nu_rec(out, s, t)) return out;
  return std::nullopt;
}

namespace {

bool match_rec(const Term& pattern, const Term& target, std::map<int, Term>& binding) {
  if (pattern->kind == TermKind::LogicVar) {
    auto it = binding.find(pattern->id);
    if (it != binding.end()) return term_equal(it->second, target);
    binding[pattern->id] = target;
    return true;
  }
  if (pattern->kind != target->kind) return false;
  if (pattern->kind == TermKind::EigenVar) return pattern->id == target->id;
  if (pattern->sym != target->sym || pattern->args.size() != target->args.size()) return false;
  for (size_t i = 0; i < pattern->args.size(); ++i)
    if (!match_rec(pattern->args[i], target->args[i], binding)) return false;
  return true;
}

}  // namespace

bool matches(const Term& pattern, const Term& target) {
  std::map<int, Term> binding;
  return match_rec(pattern, target, binding);
}

Term random_term(Rng& rng, const std::vector<Term>& logic_vars,
                 const std::vector<Term>& eigen_vars, int depth) {
  int pick = rng.below(depth > 0 ? 6 : 4);
  switch (pick) {
    case 0:
      return TermNode::make_const(std::string(1, 'a' + rng.below(3)));
    case 1:
      if (!logic_vars.empty()) return logic_vars[rng.below((int)logic_vars.size())];
      return TermNode::make_const("a");
    case 2:
    case 3:
      if (!eigen_vars.empty() && rng.chance(0.5))
        return eigen_vars[rng.below((int)eigen_vars.size())];
      if (!logic_vars.empty() && pick == 2)
        return logic_vars[rng.below((int)logic_vars.size())];
      return TermNode::make_const(std::string(1, 'a' + rng.below(3)));
    case 4:
      return TermNode::make_const("f", {random_term(rng, logic_vars, eigen_vars, depth - 1)});
    default:
      return TermNode::make_const("g", {random_term(rng, logic_vars, eigen_vars, depth - 1),
                                        random_term(rng, logic_vars, eigen_vars, depth - 1)});
  }
}

Graph random_graph(Rng& rng, int max_nodes, double edge_prob) {
  Graph g;
  int n = 2 + rng.below(max_nodes - 1);
  for (int i = 0; i < n; ++i) g.nodes.push_back(intern("n" + std::to_string(i)));
  for (Sym a : g.nodes)
    for (Sym b : g.nodes)
      if (a != b || rng.chance(0.2)) {
        if (rng.chance(edge_prob)) g.edges.emplace_back(a, b);
      }
  return g;
}

Lts random_lts(Rng& rng, int max_states, int max_labels, double trans_prob) {
  Lts l;
  int n = 2 + rng.below(max_states - 1);
  int k = 1 + rng.below(max_labels);
  for (int i = 0; i < n; ++i) l.states.push_back(intern("s" + std::to_string(i)));
  for (int i = 0; i < k; ++i) l.labels.push_back(intern(std::string(1, 'a' + i)));
  for (Sym p : l.states)
    for (Sym a : l.labels)
      for (Sym q : l.states)
        if (rng.chance(trans_prob)) l.trans.emplace_back(p, a, q);
  return l;
}

Formula normalize_units(const Formula& f) {
  Term ua = TermNode::make_const("ua");
  Term ub = TermNode::make_const("ub");
  switch (f->conn) {
    case Conn::TruePos:
      return f_eq(ua, ua);
    case Conn::FalsePos:
      return f_eq(ua, ub);
    case Conn::FalseNeg:
      return f_neq(ua, ua);
    case Conn::TrueNeg:
      return f_neq(ua, ub);
    case Conn::AndPos:
      return f_and_pos(normalize_units(f->a), normalize_units(f->b));
    case Conn::AndNeg:
      return f_and_neg(normalize_units(f->a), normalize_units(f->b));
    case Conn::Or:
      return f_or(normalize_units(f->a), normalize_units(f->b));
    case Conn::Imp:
      return f_imp(normalize_units(f->a), normalize_units(f->b));
    case Conn::Exists:
      return f_exists(normalize_units(f->a));
    case Conn::Forall:
      return f_forall(normalize_units(f->a));
    case Conn::Mu:
    case Conn::Nu: {
      auto body = std::make_shared<FixpointBody>();
      body->arity = f->fp->arity;
      body->formula = normalize_units(f->fp->formula);
      return f->conn == Conn::Mu ? f_mu(body, f->args) : f_nu(body, f->args);
    }
    default:
      return f;
  }
}

}  // namespace fpc::testsupport
