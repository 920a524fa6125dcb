#include "fpc/unify.hpp"

#include <cstdint>

namespace fpc {

void BindingStore::rollback(Checkpoint cp) {
  while (trail_.size() > cp.depth) {
    TrailEntry e = trail_.back();
    trail_.pop_back();
    if (e.is_binding) {
      bindings_.erase(e.id);
    } else {
      if (e.old_level == INT32_MIN) {
        levels_.erase(e.id);
      } else {
        levels_[e.id] = e.old_level;
      }
    }
  }
}

std::vector<BindingStore::Binding> BindingStore::bindings_since(Checkpoint cp) const {
  std::vector<Binding> out;
  for (size_t i = cp.depth; i < trail_.size(); ++i) {
    if (!trail_[i].is_binding) continue;
    auto it = bindings_.find(trail_[i].id);
    if (it != bindings_.end()) out.push_back(it->second);
  }
  return out;
}

void BindingStore::bind(const Term& v, const Term& t) {
  bindings_.emplace(v->id, Binding{v, t});
  trail_.push_back(TrailEntry{v->id, true, 0});
}

void BindingStore::lower_level(const TermNode& v, int level) {
  auto it = levels_.find(v.id);
  int old = it == levels_.end() ? INT32_MIN : it->second;
  trail_.push_back(TrailEntry{v.id, false, old});
  levels_[v.id] = level;
}

Term BindingStore::resolve(const Term& t) const {
  if (t->is_var()) {
    const Term* b = lookup(*t);
    return b ? resolve(*b) : t;
  }
  if (t->kind == TermKind::Const && !t->args.empty()) {
    std::vector<Term> args;
    args.reserve(t->args.size());
    bool changed = false;
    for (const Term& a : t->args) {
      Term r = resolve(a);
      changed |= (r.get() != a.get());
      args.push_back(std::move(r));
    }
    if (!changed) return t;
    return TermNode::make_const(t->sym, std::move(args));
  }
  return t;
}

std::vector<std::pair<int, Term>> BindingStore::logic_bindings() const {
  std::vector<std::pair<int, Term>> out;
  for (const auto& [id, b] : bindings_)
    if (b.var->kind == TermKind::LogicVar) out.emplace_back(id, resolve(b.value));
  return out;
}

struct UnifyWalker {
  BindingStore& store;
  UnifyMode mode;

  Term deref(Term t) {
    while (t->is_var()) {
      const Term* b = store.lookup(*t);
      if (!b) break;
      t = *b;
    }
    return t;
  }

  // Occurs check plus level admissibility for binding var := t.
  // For a logic variable of level l: every eigenvariable inside t must have
  // level <= l, and unbound logic variables inside are lowered to l.
  // For an eigenvariable of level l (case analysis only): every variable
  // inside t must have level <= l.
  bool admissible(const TermNode& var, const Term& raw, std::vector<const TermNode*>& to_lower) {
    Term t = deref(raw);
    if (t->is_var()) {
      if (t->kind == var.kind && t->id == var.id) return false;  // occurs
      int tl = store.level_of(*t);
      int vl = store.level_of(var);
      if (var.kind == TermKind::LogicVar) {
        if (t->kind == TermKind::EigenVar) return tl <= vl;
        if (tl > vl) to_lower.push_back(t.get());
        return true;
      }
      return tl <= vl;
    }
    if (t->kind == TermKind::Const) {
      for (const Term& a : t->args)
        if (!admissible(var, a, to_lower)) return false;
      return true;
    }
    return true;
  }

  bool try_bind(const Term& vt, const Term& t) {
    const TermNode& var = *vt;
    std::vector<const TermNode*> to_lower;
    if (!admissible(var, t, to_lower)) return false;
    int vl = store.level_of(var);
    for (const TermNode* lv : to_lower) store.lower_level(*lv, vl);
    store.bind(vt, t);
    return true;
  }

  bool unify_rec(Term s, Term t) {
    s = deref(s);
    t = deref(t);
    if (s->is_var() && t->is_var() && s->kind == t->kind && s->id == t->id) return true;

    bool s_logic = s->kind == TermKind::LogicVar;
    bool t_logic = t->kind == TermKind::LogicVar;
    if (s_logic && t_logic) {
      // Bind the newer to the older to keep chains short.
      if (store.level_of(*s) >= store.level_of(*t)) return try_bind(s, t);
      return try_bind(t, s);
    }
    if (s_logic || t_logic) {
      const Term& v = s_logic ? s : t;
      const Term& o = s_logic ? t : s;
      if (try_bind(v, o)) return true;
      // The logic-variable side may be blocked by the level condition while a
      // case-analysis binding of the other side is still admissible.
      if (mode == UnifyMode::CaseAnalysis && o->kind == TermKind::EigenVar) return try_bind(o, v);
      return false;
    }

    bool s_eigen = s->kind == TermKind::EigenVar;
    bool t_eigen = t->kind == TermKind::EigenVar;
    if (s_eigen && t_eigen) {
      if (mode != UnifyMode::CaseAnalysis) return false;  // distinct rigid parameters
      if (store.level_of(*s) >= store.level_of(*t)) return try_bind(s, t);
      return try_bind(t, s);
    }
    if (s_eigen || t_eigen) {
      if (mode != UnifyMode::CaseAnalysis) return false;
      return try_bind(s_eigen ? s : t, s_eigen ? t : s);
    }

    if (s->kind != TermKind::Const || t->kind != TermKind::Const) return false;
    if (s->sym != t->sym || s->args.size() != t->args.size()) return false;
    for (size_t i = 0; i < s->args.size(); ++i)
      if (!unify_rec(s->args[i], t->args[i])) return false;
    return true;
  }
};

UnifyOutcome unify(const Term& s, const Term& t, BindingStore& store, UnifyMode mode) {
  BindingStore::Checkpoint cp = store.checkpoint();
  UnifyWalker w{store, mode};
  if (w.unify_rec(s, t)) return UnifyOutcome::Unified;
  store.rollback(cp);
  return UnifyOutcome::Clash;
}

}  // namespace fpc
