#include "fpc/witness.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

namespace fpc {

std::optional<std::vector<Sym>> find_path(const Graph& g, Sym x, Sym y) {
  // BFS over nodes, seeded with the successors of x so the path has at least
  // one edge (the relation is irreflexive unless a cycle brings x back).
  std::map<Sym, Sym> parent;
  std::deque<Sym> queue;
  for (const auto& [u, v] : g.edges) {
    if (u == x && !parent.count(v)) {
      parent[v] = x;
      queue.push_back(v);
    }
  }
  while (!queue.empty()) {
    Sym n = queue.front();
    queue.pop_front();
    if (n == y) {
      std::vector<Sym> rev;
      for (Sym at = parent.at(y); at != x || !rev.empty(); at = parent.at(at)) {
        rev.push_back(at);
        if (at == x) break;
      }
      // rev holds y's ancestors up to and including x when x appears as an
      // intermediate of a cycle; strip the seed x and reverse.
      std::vector<Sym> out;
      for (auto it = rev.rbegin(); it != rev.rend(); ++it)
        if (!(out.empty() && *it == x)) out.push_back(*it);
      return out;
    }
    for (const auto& [u, v] : g.edges) {
      if (u == n && !parent.count(v)) {
        parent[v] = n;
        queue.push_back(v);
      }
    }
  }
  return std::nullopt;
}

std::vector<Sym> reachable_set(const Graph& g, Sym t) {
  std::vector<Sym> order{t};
  std::set<Sym> seen{t};
  for (size_t i = 0; i < order.size(); ++i) {
    for (const auto& [u, v] : g.edges) {
      if (u == order[i] && !seen.count(v)) {
        seen.insert(v);
        order.push_back(v);
      }
    }
  }
  return order;
}

bool closure_reachable(const Graph& g, Sym x, Sym y) {
  size_t n = g.nodes.size();
  auto idx = [&](Sym s) {
    return std::find(g.nodes.begin(), g.nodes.end(), s) - g.nodes.begin();
  };
  std::vector<std::vector<bool>> r(n, std::vector<bool>(n, false));
  for (const auto& [u, v] : g.edges) r[idx(u)][idx(v)] = true;
  for (size_t k = 0; k < n; ++k)
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j)
        if (r[i][k] && r[k][j]) r[i][j] = true;
  return r[idx(x)][idx(y)];
}

namespace {

Term bound(int i) { return TermNode::make_bound(i); }
Term konst(Sym s) { return TermNode::make_const(s); }

Formula or_chain(std::vector<Formula> ds) {
  if (ds.empty()) return f_unit(Conn::FalsePos);
  Formula acc = ds.back();
  for (size_t i = ds.size() - 1; i-- > 0;) acc = f_or(ds[i], acc);
  return acc;
}

}  // namespace

PredExpr unreach_invariant(const Graph& g, Sym t, Sym u) {
  std::vector<Formula> ds;
  for (Sym v : reachable_set(g, t))
    ds.push_back(f_and_pos(f_eq(bound(1), konst(v)), f_eq(bound(0), konst(u))));
  auto p = std::make_shared<PredExprNode>();
  p->arity = 2;
  p->formula = f_imp(or_chain(std::move(ds)), f_unit(Conn::FalseNeg));
  return p;
}

bool pair_in(const PairSet& s, Sym a, Sym b) {
  return std::find(s.begin(), s.end(), std::make_pair(a, b)) != s.end();
}

namespace {

// Combined system; states are identified by name.
Lts merge_lts(const Lts& l1, const Lts& l2) {
  Lts u = l1;
  for (Sym s : l2.states)
    if (!u.has_state(s)) u.states.push_back(s);
  for (Sym l : l2.labels)
    if (std::find(u.labels.begin(), u.labels.end(), l) == u.labels.end()) u.labels.push_back(l);
  for (const auto& t : l2.trans)
    if (std::find(u.trans.begin(), u.trans.end(), t) == u.trans.end()) u.trans.push_back(t);
  return u;
}

bool sim_step_ok(const Lts& l1, const Lts& l2, const PairSet& s, Sym p, Sym q) {
  for (const auto& [src, a, p2] : l1.trans) {
    if (src != p) continue;
    bool matched = false;
    for (Sym q2 : l2.successors(q, a))
      if (pair_in(s, p2, q2)) {
        matched = true;
        break;
      }
    if (!matched) return false;
  }
  return true;
}

}  // namespace

PairSet max_simulation(const Lts& l1, const Lts& l2) {
  PairSet s;
  for (Sym p : l1.states)
    for (Sym q : l2.states) s.emplace_back(p, q);
  bool changed = true;
  while (changed) {
    changed = false;
    PairSet next;
    for (const auto& [p, q] : s) {
      if (sim_step_ok(l1, l2, s, p, q)) {
        next.emplace_back(p, q);
      } else {
        changed = true;
      }
    }
    s = std::move(next);
  }
  return s;
}

PairSet max_bisimulation(const Lts& l1, const Lts& l2) {
  // Combined state space; transitions of both systems.
  std::vector<Sym> states = l1.states;
  for (Sym s : l2.states)
    if (std::find(states.begin(), states.end(), s) == states.end()) states.push_back(s);
  std::vector<std::tuple<Sym, Sym, Sym>> trans = l1.trans;
  if (&l1 != &l2)
    for (const auto& t : l2.trans)
      if (std::find(trans.begin(), trans.end(), t) == trans.end()) trans.push_back(t);

  std::map<Sym, int> block;
  for (Sym s : states) block[s] = 0;
  bool changed = true;
  while (changed) {
    // Signature: current block plus the set of (label, successor block).
    std::map<Sym, std::pair<int, std::set<std::pair<Sym, int>>>> sig;
    for (Sym s : states) {
      std::set<std::pair<Sym, int>> moves;
      for (const auto& [src, a, dst] : trans)
        if (src == s) moves.emplace(a, block[dst]);
      sig[s] = {block[s], std::move(moves)};
    }
    std::map<std::pair<int, std::set<std::pair<Sym, int>>>, int> renumber;
    std::map<Sym, int> next;
    for (Sym s : states) {
      auto it = renumber.find(sig[s]);
      if (it == renumber.end()) it = renumber.emplace(sig[s], static_cast<int>(renumber.size())).first;
      next[s] = it->second;
    }
    changed = next != block;
    block = std::move(next);
  }

  PairSet out;
  for (Sym p : l1.states)
    for (Sym q : l2.states)
      if (block[p] == block[q]) out.emplace_back(p, q);
  return out;
}

std::optional<PairSet> sim_invariant(const Lts& l1, Sym p, const Lts& l2, Sym q) {
  PairSet max = max_simulation(l1, l2);
  if (!pair_in(max, p, q)) return std::nullopt;
  // Pairs the simulation game can reach from (p, q), kept inside the maximal
  // simulation; closed under the step condition because every matching
  // answer stays reachable.
  PairSet keep{{p, q}};
  for (size_t i = 0; i < keep.size(); ++i) {
    auto [x, y] = keep[i];
    for (const auto& [src, a, x2] : l1.trans) {
      if (src != x) continue;
      for (Sym y2 : l2.successors(y, a))
        if (pair_in(max, x2, y2) && !pair_in(keep, x2, y2)) keep.emplace_back(x2, y2);
    }
  }
  return keep;
}

std::optional<PairSet> bisim_invariant(const Lts& l1, Sym p, const Lts& l2, Sym q) {
  Lts u = merge_lts(l1, l2);
  PairSet max = max_bisimulation(u, u);
  if (!pair_in(max, p, q)) return std::nullopt;
  PairSet keep{{p, q}};
  for (size_t i = 0; i < keep.size(); ++i) {
    auto [x, y] = keep[i];
    for (const auto& [src, a, x2] : u.trans) {
      if (src != x) continue;
      for (Sym y2 : u.successors(y, a))
        if (pair_in(max, x2, y2) && !pair_in(keep, x2, y2)) keep.emplace_back(x2, y2);
    }
    for (const auto& [src, a, y2] : u.trans) {
      if (src != y) continue;
      for (Sym x2 : u.successors(x, a))
        if (pair_in(max, y2, x2) && !pair_in(keep, y2, x2)) keep.emplace_back(y2, x2);
    }
  }
  return keep;
}

PredExpr pairs_pred_expr(const PairSet& s) {
  std::vector<Formula> ds;
  for (const auto& [a, b] : s)
    ds.push_back(f_and_pos(f_eq(bound(1), konst(a)), f_eq(bound(0), konst(b))));
  auto p = std::make_shared<PredExprNode>();
  p->arity = 2;
  p->formula = or_chain(std::move(ds));
  return p;
}

namespace {

struct StageTable {
  // stage at which a pair left the iteration; -1 when it never does
  std::map<std::pair<Sym, Sym>, int> removed_at;

  int stage(Sym a, Sym b) const {
    auto it = removed_at.find({a, b});
    return it == removed_at.end() ? -1 : it->second;
  }
};

// Stages and recursion run over the combined system so bisim-mode pair swaps
// stay within one state space.
StageTable iterate_stages(const Lts& u, AssertMode mode) {
  PairSet live;
  for (Sym p : u.states)
    for (Sym q : u.states) live.emplace_back(p, q);
  StageTable st;
  int stage = 0;
  bool changed = true;
  while (changed) {
    ++stage;
    changed = false;
    PairSet next;
    for (const auto& [p, q] : live) {
      bool ok = sim_step_ok(u, u, live, p, q);
      if (ok && mode == AssertMode::Bisim) {
        // the reverse direction continues on swapped pairs
        for (const auto& [src, a, q2] : u.trans) {
          if (src != q) continue;
          bool matched = false;
          for (Sym p2 : u.successors(p, a))
            if (pair_in(live, q2, p2)) {
              matched = true;
              break;
            }
          if (!matched) {
            ok = false;
            break;
          }
        }
      }
      if (ok) {
        next.emplace_back(p, q);
      } else {
        st.removed_at[{p, q}] = stage;
        changed = true;
      }
    }
    live = std::move(next);
  }
  return st;
}

Cert dist_item(const Lts& u, Sym p, Sym q, AssertMode mode, const StageTable& st) {
  int k = st.stage(p, q);
  // A move of p all of whose answers left the iteration at an earlier stage
  // gives a diamond; in bisim mode an unanswerable move of q gives a negated
  // diamond, recursing on the swapped pairs.
  for (const auto& [src, a, p2] : u.trans) {
    if (src != p) continue;
    bool all_earlier = true;
    std::vector<Sym> qs = u.successors(q, a);
    for (Sym q2 : qs) {
      int s2 = st.stage(p2, q2);
      if (s2 < 0 || s2 >= k) {
        all_earlier = false;
        break;
      }
    }
    if (all_earlier) {
      std::vector<Cert> items;
      for (Sym q2 : qs) items.push_back(dist_item(u, p2, q2, mode, st));
      return c_hml_dia(a, c_hml_conj(std::move(items)));
    }
  }
  if (mode == AssertMode::Bisim) {
    for (const auto& [src, a, q2] : u.trans) {
      if (src != q) continue;
      bool all_earlier = true;
      std::vector<Sym> ps = u.successors(p, a);
      for (Sym p2 : ps) {
        int s2 = st.stage(q2, p2);
        if (s2 < 0 || s2 >= k) {
          all_earlier = false;
          break;
        }
      }
      if (all_earlier) {
        std::vector<Cert> items;
        for (Sym p2 : ps) items.push_back(dist_item(u, q2, p2, mode, st));
        return c_hml_neg_dia(a, c_hml_conj(std::move(items)));
      }
    }
  }
  throw ProblemError("internal: no distinguishing move for a removed pair");
}

}  // namespace

std::optional<Cert> distinguishing_assertion(const Lts& l1, Sym p, const Lts& l2, Sym q,
                                             AssertMode mode) {
  Lts u = merge_lts(l1, l2);
  StageTable st = iterate_stages(u, mode);
  if (st.stage(p, q) < 0) return std::nullopt;
  return c_hml_conj({dist_item(u, p, q, mode, st)});
}

bool hml_eval(const Lts& l, Sym state, const Cert& assertion) {
  switch (assertion->kind) {
    case CertKind::HmlConj: {
      for (const Cert& it : assertion->items)
        if (!hml_eval(l, state, it)) return false;
      return true;
    }
    case CertKind::HmlDia: {
      for (Sym next : l.successors(state, assertion->label))
        if (hml_eval(l, next, assertion->child)) return true;
      return false;
    }
    case CertKind::HmlNegDia: {
      for (Sym next : l.successors(state, assertion->label))
        if (hml_eval(l, next, assertion->child)) return false;
      return true;
    }
    default:
      throw CertError("hml_eval expects an assertion certificate");
  }
}

}  // namespace fpc
