#include "fpc/term.hpp"

#include <mutex>
#include <unordered_map>

namespace fpc {

namespace {

struct NameTable {
  std::mutex mu;
  std::vector<std::string> names;
  std::unordered_map<std::string, Sym> index;
};

NameTable& table() {
  static NameTable t;
  return t;
}

}  // namespace

Sym intern(const std::string& name) {
  NameTable& t = table();
  std::lock_guard<std::mutex> lock(t.mu);
  auto it = t.index.find(name);
  if (it != t.index.end()) return it->second;
  Sym s = static_cast<Sym>(t.names.size());
  t.names.push_back(name);
  t.index.emplace(name, s);
  return s;
}

const std::string& sym_name(Sym s) {
  NameTable& t = table();
  std::lock_guard<std::mutex> lock(t.mu);
  return t.names.at(s);
}

Term TermNode::make_const(Sym s, std::vector<Term> args) {
  auto n = std::make_shared<TermNode>();
  n->kind = TermKind::Const;
  n->sym = s;
  n->args = std::move(args);
  return n;
}

Term TermNode::make_const(const std::string& name, std::vector<Term> args) {
  return make_const(intern(name), std::move(args));
}

Term TermNode::make_logic_var(int id, int level) {
  auto n = std::make_shared<TermNode>();
  n->kind = TermKind::LogicVar;
  n->id = id;
  n->level = level;
  return n;
}

Term TermNode::make_eigen_var(int id, int level) {
  auto n = std::make_shared<TermNode>();
  n->kind = TermKind::EigenVar;
  n->id = id;
  n->level = level;
  return n;
}

Term TermNode::make_bound(int index) {
  auto n = std::make_shared<TermNode>();
  n->kind = TermKind::Bound;
  n->index = index;
  return n;
}

bool term_equal(const Term& a, const Term& b) {
  if (a.get() == b.get()) return true;
  if (a->kind != b->kind) return false;
  switch (a->kind) {
    case TermKind::Const: {
      if (a->sym != b->sym || a->args.size() != b->args.size()) return false;
      for (size_t i = 0; i < a->args.size(); ++i)
        if (!term_equal(a->args[i], b->args[i])) return false;
      return true;
    }
    case TermKind::LogicVar:
    case TermKind::EigenVar:
      return a->id == b->id;
    case TermKind::Bound:
      return a->index == b->index;
  }
  return false;
}

bool occurs_in(const TermNode& var, const Term& t) {
  if (t->is_var()) return t->kind == var.kind && t->id == var.id;
  if (t->kind == TermKind::Const) {
    for (const Term& a : t->args)
      if (occurs_in(var, a)) return true;
  }
  return false;
}

Term replace_vars(const Term& t, const std::vector<std::pair<Term, Term>>& subst) {
  if (t->is_var()) {
    for (const auto& [v, r] : subst)
      if (v->kind == t->kind && v->id == t->id) return r;
    return t;
  }
  if (t->kind == TermKind::Const && !t->args.empty()) {
    std::vector<Term> args;
    args.reserve(t->args.size());
    bool changed = false;
    for (const Term& a : t->args) {
      Term r = replace_vars(a, subst);
      changed |= (r.get() != a.get());
      args.push_back(std::move(r));
    }
    if (!changed) return t;
    return TermNode::make_const(t->sym, std::move(args));
  }
  return t;
}

std::string term_to_string(const Term& t) {
  switch (t->kind) {
    case TermKind::Const: {
      if (t->args.empty()) return sym_name(t->sym);
      std::string out = "(" + sym_name(t->sym);
      for (const Term& a : t->args) out += ' ' + term_to_string(a);
      return out + ')';
    }
    case TermKind::LogicVar:
      return "?x" + std::to_string(t->id);
    case TermKind::EigenVar:
      return "!e" + std::to_string(t->id);
    case TermKind::Bound:
      return "$" + std::to_string(t->index);
  }
  return "?";
}

}  // namespace fpc
