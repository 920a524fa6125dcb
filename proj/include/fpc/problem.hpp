#ifndef FPC_PROBLEM_HPP
#define FPC_PROBLEM_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "fpc/formula.hpp"
#include "fpc/table.hpp"

namespace fpc {

// Problem descriptions and their translation into fixed-point formulas.

struct Graph {
  std::vector<Sym> nodes;
  std::vector<std::pair<Sym, Sym>> edges;  // in input order

  bool has_node(Sym s) const;
};

struct Lts {
  std::vector<Sym> states;
  std::vector<Sym> labels;
  std::vector<std::tuple<Sym, Sym, Sym>> trans;  // (src, label, dst) in input order

  bool has_state(Sym s) const;
  std::vector<Sym> successors(Sym state, Sym label) const;
};

struct Problem {
  enum class Kind { Graph, Lts };
  Kind kind = Kind::Graph;
  Graph graph;
  Lts lts;
};

enum class ClaimKind { Reach, Unreach, Sim, Unsim, Bisim, Unbisim };

struct Claim {
  ClaimKind kind;
  Sym a = 0, b = 0;
};

class ProblemError : public std::runtime_error {
public:
  explicit ProblemError(const std::string& what) : std::runtime_error(what) {}
};

// Line-oriented problem files; '#' starts a comment.  Graphs use
//   node <id>
//   edge <src> <dst>
// and labeled transition systems
//   state <id>
//   trans <src> <lbl> <dst>
// Unknown directives and mixed kinds are errors.
Problem parse_problem(const std::string& text);

// Goals: "reach a c", "unreach b d", "sim 1 6", "unsim 6 1", "bisim p q",
// "unbisim 6 10".  Endpoints must belong to the problem signature and the
// claim kind must match the problem kind.
Claim parse_claim(const std::string& text, const Problem& problem);
const char* claim_kind_name(ClaimKind k);
bool claim_negative(ClaimKind k);

// Fixed-point bodies.  Adjacency and transition relations become disjunctions
// of equality conjuncts in input order (empty relations become false+, a
// single clause stands alone); reachability, simulation and bisimulation are
// built on top of them.
FixBody encode_step(const Graph& g);
FixBody encode_path(const Graph& g);
FixBody encode_one(const Lts& l);
FixBody encode_sim(const Lts& l);
FixBody encode_bisim(const Lts& l);

// The goal formula for a claim; negative claims are (.) imp false-.  Every
// produced goal is switchable on the right.
Formula goal_formula(const Claim& c, const Problem& p);

// The certificate format matching a claim kind.
FpcTable table_for_claim(ClaimKind k);

// Whether negated diamonds are admissible in certificates for this claim.
bool claim_allows_neg_dia(ClaimKind k);

}  // namespace fpc

#endif
