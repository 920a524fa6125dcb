#ifndef FPC_CERT_HPP
#define FPC_CERT_HPP

#include <memory>
#include <string>
#include <vector>

#include "fpc/formula.hpp"
#include "fpc/sexpr.hpp"

namespace fpc {

// Certificate terms.  The generic constructors (stop, sync, async, bipole,
// decproc, inv, coinv) describe focused search behaviors; path lists and HML
// assertions are the evidence-specific formats.
//
// HML assertions: a conjunction certificate holds zero or more diamond items
// (tt is the empty conjunction); a diamond item carries a label and a
// conjunction.  NegDia is the negated diamond admitted for non-bisimulation
// evidence only.
enum class CertKind {
  Stop,
  Sync,     // sync(k)
  Async,    // async(k)
  Bipole,   // bipole(n), n >= 1
  Decproc,
  Inv,      // inv(S, k)
  CoInv,    // coinv(S, k)
  Path,     // list of node constants
  HmlConj,  // /\_i item_i
  HmlDia,   // <label> A
  HmlNegDia // not(<label> A)
};

class CertNode;
using Cert = std::shared_ptr<const CertNode>;

class CertNode {
public:
  CertKind kind;
  Cert child;               // Sync/Async/Inv/CoInv continuation; HmlDia/HmlNegDia body
  int n = 0;                // Bipole
  PredExpr invariant;       // Inv/CoInv
  std::vector<Sym> nodes;   // Path
  Sym label = 0;            // HmlDia/HmlNegDia
  std::vector<Cert> items;  // HmlConj
};

Cert c_stop();
Cert c_sync(Cert k);
Cert c_async(Cert k);
Cert c_bipole(int n);
Cert c_decproc();
Cert c_inv(PredExpr s, Cert k);
Cert c_coinv(PredExpr s, Cert k);
Cert c_path(std::vector<Sym> nodes);
Cert c_hml_conj(std::vector<Cert> items);
Cert c_hml_tt();
Cert c_hml_dia(Sym label, Cert conj);
Cert c_hml_neg_dia(Sym label, Cert conj);

class CertError : public std::runtime_error {
public:
  explicit CertError(const std::string& what) : std::runtime_error(what) {}
};

// Surface syntax:
//   stop | (sync C) | (async C) | (bipole N) | decproc
//   (inv PRED C) | (coinv PRED C)           PRED = (lam (x...) FORMULA)
//   (path (n1 n2 ...))
//   (hml A)   A := tt | (and A...) | (dia LBL A) | (not (dia LBL A))
// With allow_neg_dia=false the parser rejects (not ...) items, implementing
// the restricted non-simulation assertion grammar.
Cert parse_cert(const Sexpr& e, bool allow_neg_dia = true);
Cert parse_cert(const std::string& text, bool allow_neg_dia = true);
std::string cert_to_string(const Cert& c);

bool cert_equal(const Cert& a, const Cert& b);

}  // namespace fpc

#endif
