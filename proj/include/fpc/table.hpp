#ifndef FPC_TABLE_HPP
#define FPC_TABLE_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "fpc/cert.hpp"
#include "fpc/formula.hpp"

namespace fpc {

// The clerk/expert relation set a certificate format supplies to the kernel.
//
// Each member enumerates the alternatives a rule may continue with for a
// given certificate: an empty result blocks the rule.  Clerks attach to
// asynchronous (unfocused) conclusions, experts to focused ones.  Relations
// must be pure with respect to kernel state; witness terms may be concrete
// terms, or absent to request a fresh logic variable resolved by later
// unification.
//
// Rules with no premises (the closing equality/unit rules) consult nothing:
// the one unification facility decides them, and the derived success/failure
// clerks are then vacuous.
struct WitnessAlt {
  Cert cont;
  std::optional<Term> witness;  // nullopt: fresh logic variable
};

using CertAbs1 = std::function<Cert(const Term&)>;
using CertAbsN = std::function<Cert(const std::vector<Term>&)>;

struct IndAlt {
  CertAbsN closure;    // certificate abstraction for the invariant premise
  Cert cont;           // continuation for the instance premise
  PredExpr invariant;  // the explicit (co)invariant S
};

struct FpcTable {
  std::string name;

  template <typename T>
  using Rel = std::function<std::vector<T>(const Cert&)>;

  // clerks (asynchronous phase)
  Rel<Cert> eq_left;             // = in Gamma, terms unifiable: premise under the mgu
  Rel<Cert> neq_right;           // neq in Delta, terms unifiable: premise under the mgu
  Rel<Cert> true_pos_left;       // drop true+ from Gamma
  Rel<Cert> false_neg_right;     // drop false- from Delta
  Rel<Cert> and_pos_left;
  Rel<std::pair<Cert, Cert>> or_left;
  Rel<Cert> imp_right;
  Rel<std::pair<Cert, Cert>> and_neg_right;
  Rel<CertAbs1> exists_left;     // abstraction applied to the fresh eigenvariable
  Rel<CertAbs1> forall_right;
  Rel<Cert> mu_unfold_left;
  Rel<Cert> nu_unfold_right;
  Rel<Cert> store_left;
  Rel<Cert> store_right;
  Rel<IndAlt> induction;         // mu in Gamma
  Rel<IndAlt> coinduction;       // nu in Delta

  // experts (synchronous phase)
  Rel<std::pair<Cert, Cert>> and_pos_right;
  Rel<std::pair<Cert, int>> or_right;              // branch 1 or 2
  Rel<WitnessAlt> exists_right;
  Rel<std::pair<Cert, Cert>> imp_left;             // (antecedent, consequent)
  Rel<std::pair<Cert, int>> and_neg_left;
  Rel<WitnessAlt> forall_left;
  Rel<Cert> mu_unfold_right;
  Rel<Cert> nu_unfold_left;
  using DecideRel = std::function<std::vector<Cert>(const Cert&, const Formula&)>;
  DecideRel decide_left;                           // stored formula as read-only context
  DecideRel decide_right;
  Rel<Cert> release_left;
  Rel<Cert> release_right;
};

}  // namespace fpc

#endif
