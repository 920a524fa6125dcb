#include "fpc/problem.hpp"

#include <algorithm>
#include <sstream>

#include "fpc/formats.hpp"

namespace fpc {

bool Graph::has_node(Sym s) const {
  return std::find(nodes.begin(), nodes.end(), s) != nodes.end();
}

bool Lts::has_state(Sym s) const {
  return std::find(states.begin(), states.end(), s) != states.end();
}

std::vector<Sym> Lts::successors(Sym state, Sym label) const {
  std::vector<Sym> out;
  for (const auto& [src, lbl, dst] : trans)
    if (src == state && lbl == label) out.push_back(dst);
  return out;
}

Problem parse_problem(const std::string& text) {
  Problem p;
  bool saw_graph = false, saw_lts = false;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string head;
    if (!(ls >> head)) continue;
    auto want = [&](int n, std::vector<std::string>& out) {
      out.clear();
      std::string w;
      while (ls >> w) out.push_back(w);
      if (static_cast<int>(out.size()) != n)
        throw ProblemError("line " + std::to_string(lineno) + ": '" + head + "' takes " +
                           std::to_string(n) + " arguments");
    };
    std::vector<std::string> args;
    if (head == "node") {
      want(1, args);
      saw_graph = true;
      Sym s = intern(args[0]);
      if (!p.graph.has_node(s)) p.graph.nodes.push_back(s);
    } else if (head == "edge") {
      want(2, args);
      saw_graph = true;
      Sym a = intern(args[0]), b = intern(args[1]);
      if (!p.graph.has_node(a) || !p.graph.has_node(b))
        throw ProblemError("line " + std::to_string(lineno) + ": edge endpoint not declared");
      p.graph.edges.emplace_back(a, b);
    } else if (head == "state") {
      want(1, args);
      saw_lts = true;
      Sym s = intern(args[0]);
      if (!p.lts.has_state(s)) p.lts.states.push_back(s);
    } else if (head == "trans") {
      want(3, args);
      saw_lts = true;
      Sym a = intern(args[0]), l = intern(args[1]), b = intern(args[2]);
      if (!p.lts.has_state(a) || !p.lts.has_state(b))
        throw ProblemError("line " + std::to_string(lineno) + ": transition endpoint not declared");
      if (std::find(p.lts.labels.begin(), p.lts.labels.end(), l) == p.lts.labels.end())
        p.lts.labels.push_back(l);
      p.lts.trans.emplace_back(a, l, b);
    } else {
      throw ProblemError("line " + std::to_string(lineno) + ": unknown directive '" + head + "'");
    }
    if (saw_graph && saw_lts)
      throw ProblemError("line " + std::to_string(lineno) +
                         ": a problem is either a graph or a transition system, not both");
  }
  p.kind = saw_lts ? Problem::Kind::Lts : Problem::Kind::Graph;
  return p;
}

const char* claim_kind_name(ClaimKind k) {
  switch (k) {
    case ClaimKind::Reach: return "reach";
    case ClaimKind::Unreach: return "unreach";
    case ClaimKind::Sim: return "sim";
    case ClaimKind::Unsim: return "unsim";
    case ClaimKind::Bisim: return "bisim";
    case ClaimKind::Unbisim: return "unbisim";
  }
  return "?";
}

bool claim_negative(ClaimKind k) {
  return k == ClaimKind::Unreach || k == ClaimKind::Unsim || k == ClaimKind::Unbisim;
}

Claim parse_claim(const std::string& text, const Problem& problem) {
  std::istringstream in(text);
  std::string kind, a, b, extra;
  if (!(in >> kind >> a >> b) || (in >> extra))
    throw ProblemError("goal must be '<kind> <x> <y>': " + text);
  Claim c;
  if (kind == "reach") c.kind = ClaimKind::Reach;
  else if (kind == "unreach") c.kind = ClaimKind::Unreach;
  else if (kind == "sim") c.kind = ClaimKind::Sim;
  else if (kind == "unsim") c.kind = ClaimKind::Unsim;
  else if (kind == "bisim") c.kind = ClaimKind::Bisim;
  else if (kind == "unbisim") c.kind = ClaimKind::Unbisim;
  else throw ProblemError("unknown claim kind: " + kind);
  c.a = intern(a);
  c.b = intern(b);
  bool graph_claim = c.kind == ClaimKind::Reach || c.kind == ClaimKind::Unreach;
  if (graph_claim != (problem.kind == Problem::Kind::Graph))
    throw ProblemError(std::string(claim_kind_name(c.kind)) + " needs a " +
                       (graph_claim ? "graph" : "transition system") + " problem");
  if (graph_claim) {
    if (!problem.graph.has_node(c.a) || !problem.graph.has_node(c.b))
      throw ProblemError("claim endpoint not in the problem signature");
  } else {
    if (!problem.lts.has_state(c.a) || !problem.lts.has_state(c.b))
      throw ProblemError("claim endpoint not in the problem signature");
  }
  return c;
}

namespace {

FixBody make_body(int arity, Formula f) {
  auto b = std::make_shared<FixpointBody>();
  b->arity = arity;
  b->formula = std::move(f);
  return b;
}

Formula or_chain(std::vector<Formula> disjuncts) {
  if (disjuncts.empty()) return f_unit(Conn::FalsePos);
  Formula acc = disjuncts.back();
  for (size_t i = disjuncts.size() - 1; i-- > 0;) acc = f_or(disjuncts[i], acc);
  return acc;
}

Term bound(int i) { return TermNode::make_bound(i); }
Term konst(Sym s) { return TermNode::make_const(s); }

}  // namespace

FixBody encode_step(const Graph& g) {
  std::vector<Formula> ds;
  for (const auto& [u, v] : g.edges)
    ds.push_back(f_and_pos(f_eq(bound(1), konst(u)), f_eq(bound(0), konst(v))));
  return make_body(2, or_chain(std::move(ds)));
}

FixBody encode_path(const Graph& g) {
  FixBody step = encode_step(g);
  // x = 1, z = 0; under the existential: x = 2, z = 1, y = 0.
  Formula base = f_mu(step, {bound(1), bound(0)});
  Formula rec = f_exists(f_and_pos(f_mu(step, {bound(2), bound(0)}),
                                   f_pred_app({bound(0), bound(1)}, Polarity::Positive)));
  return make_body(2, f_or(base, rec));
}

FixBody encode_one(const Lts& l) {
  std::vector<Formula> ds;
  for (const auto& [u, a, w] : l.trans)
    ds.push_back(f_and_pos(f_eq(bound(2), konst(u)),
                           f_and_pos(f_eq(bound(1), konst(a)), f_eq(bound(0), konst(w)))));
  return make_body(3, or_chain(std::move(ds)));
}

namespace {

// One simulation clause: every move of the mover must be answered by the
// responder, the relation continuing on (mover', responder').  The body-level
// indices of mover and responder are passed in; the bisimulation body is the
// negative conjunction of the two orientations.
Formula sim_clause(const FixBody& one, int mover, int responder) {
  // under forall a, forall m': depth 2; under the existential r': depth 3
  Formula antecedent = f_mu(one, {bound(mover + 2), bound(1), bound(0)});
  Formula answer = f_mu(one, {bound(responder + 3), bound(2), bound(0)});
  Formula cont = f_pred_app({bound(1), bound(0)}, Polarity::Negative);
  return f_forall(f_forall(f_imp(antecedent, f_exists(f_and_pos(answer, cont)))));
}

}  // namespace

FixBody encode_sim(const Lts& l) {
  FixBody one = encode_one(l);
  return make_body(2, sim_clause(one, 1, 0));
}

FixBody encode_bisim(const Lts& l) {
  FixBody one = encode_one(l);
  return make_body(2, f_and_neg(sim_clause(one, 1, 0), sim_clause(one, 0, 1)));
}

Formula goal_formula(const Claim& c, const Problem& p) {
  Formula f;
  switch (c.kind) {
    case ClaimKind::Reach:
    case ClaimKind::Unreach:
      f = f_mu(encode_path(p.graph), {konst(c.a), konst(c.b)});
      break;
    case ClaimKind::Sim:
    case ClaimKind::Unsim:
      f = f_nu(encode_sim(p.lts), {konst(c.a), konst(c.b)});
      break;
    case ClaimKind::Bisim:
    case ClaimKind::Unbisim:
      f = f_nu(encode_bisim(p.lts), {konst(c.a), konst(c.b)});
      break;
  }
  if (claim_negative(c.kind)) f = f_not(f);
  if (!switchable(f, Side::Right))
    throw ProblemError("internal: produced goal is not switchable");
  return f;
}

FpcTable table_for_claim(ClaimKind k) {
  switch (k) {
    case ClaimKind::Reach: return reach_table();
    case ClaimKind::Unreach: return nonreach_table();
    case ClaimKind::Sim:
    case ClaimKind::Bisim: return sim_table();
    case ClaimKind::Unsim: return nonsim_table();
    case ClaimKind::Unbisim: return nonbisim_table();
  }
  return common_table();
}

bool claim_allows_neg_dia(ClaimKind k) { return k != ClaimKind::Unsim; }

}  // namespace fpc
