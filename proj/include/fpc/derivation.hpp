#ifndef FPC_DERIVATION_HPP
#define FPC_DERIVATION_HPP

#include <memory>
#include <string>
#include <vector>

#include "fpc/cert.hpp"
#include "fpc/formula.hpp"

namespace fpc {

// The three sequent shapes.  An unfocused sequent has the two storage zones
// (negatives left of the workbenches, positives right) around the working
// lists Gamma and Delta; a focused sequent holds exactly one formula.
struct Sequent {
  enum class Kind { Async, FocusL, FocusR };
  Kind kind = Kind::Async;
  std::vector<Formula> nstore, gamma, delta, pstore;
  Formula focus;

  static Sequent async(std::vector<Formula> ns, std::vector<Formula> g, std::vector<Formula> d,
                       std::vector<Formula> ps) {
    Sequent s;
    s.kind = Kind::Async;
    s.nstore = std::move(ns);
    s.gamma = std::move(g);
    s.delta = std::move(d);
    s.pstore = std::move(ps);
    return s;
  }
  static Sequent goal(Formula f) { return async({}, {}, {std::move(f)}, {}); }
  static Sequent focus_left(Formula f) {
    Sequent s;
    s.kind = Kind::FocusL;
    s.focus = std::move(f);
    return s;
  }
  static Sequent focus_right(Formula f) {
    Sequent s;
    s.kind = Kind::FocusR;
    s.focus = std::move(f);
    return s;
  }
};

std::string sequent_to_string(const Sequent& s);

enum class RuleId {
  // asynchronous left
  EqL,
  EqLClash,
  TruePosL,
  FalsePosL,
  AndPosL,
  OrL,
  ExistsL,
  MuUnfoldL,
  Ind,
  StoreL,
  // asynchronous right
  NeqR,
  NeqRClash,
  FalseNegR,
  TrueNegR,
  AndNegR,
  ImpR,
  ForallR,
  NuUnfoldR,
  CoInd,
  StoreR,
  // phase switches
  DecideL,
  DecideR,
  ReleaseL,
  ReleaseR,
  // synchronous right
  EqR,
  TruePosR,
  AndPosR,
  OrR,
  ExistsR,
  MuUnfoldR,
  // synchronous left
  NeqL,
  FalseNegL,
  ImpL,
  AndNegL,
  ForallL,
  NuUnfoldL,
};

const char* rule_name(RuleId r);
bool is_phase_switch(RuleId r);

// One rule application.  `seq` is the conclusion; `cert` the certificate
// guiding it (null once erased); `intro` holds the fresh eigenvariables of a
// quantifier or (co)induction step, or the witness of a synchronous
// instantiation.  In an accepted derivation all logic variables are resolved
// to their final values; equality-left case instantiations of eigenvariables
// appear textually in their premises.
struct DerivNode;
using Deriv = std::shared_ptr<const DerivNode>;

struct DerivNode {
  RuleId rule;
  Sequent seq;
  Cert cert;
  int level = 0;
  std::vector<Term> intro;
  PredExpr invariant;  // Ind / CoInd
  int branch = 0;      // OrR / AndNegL
  std::vector<Deriv> children;
};

// Deletes every reference to certificates from an accepted derivation.  What
// remains is a plain focused-sequent derivation whose steps can be replayed
// rule by rule.
Deriv erase_certificates(const Deriv& d);

enum class TraceVerbosity { None, Rules, Full };

// Line-oriented serialization, one rule application per line:
//   <rule-name> <sequent-digest> <cert-digest>
// Digests are short stable hashes of the canonical renderings.
std::string format_trace(const Deriv& d, TraceVerbosity v);

size_t count_nodes(const Deriv& d);

}  // namespace fpc

#endif
