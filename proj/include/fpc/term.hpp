#ifndef FPC_TERM_HPP
#define FPC_TERM_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace fpc {

// Interned function/constant symbol.  Index into a process-wide name table.
using Sym = uint32_t;

Sym intern(const std::string& name);
const std::string& sym_name(Sym s);

// First-order terms.  Two variable kinds are distinguished:
//   - LogicVar: a placeholder instantiable by unification (proof reconstruction);
//   - EigenVar: a parameter introduced by a quantifier or (co)induction rule.
// Both carry a level, the rank-based encoding of quantifier dependencies: a
// logic variable may only ever denote terms whose eigenvariables were
// introduced no later than it (level <= its own).
//
// Bound is a nameless index and appears only underneath formula binders; a
// runtime term handed to unification never contains one.
enum class TermKind { Const, LogicVar, EigenVar, Bound };

class TermNode;
using Term = std::shared_ptr<const TermNode>;

class TermNode {
public:
  TermKind kind;
  Sym sym = 0;             // Const
  std::vector<Term> args;  // Const
  int id = -1;             // LogicVar / EigenVar: session-unique
  int level = 0;           // LogicVar / EigenVar
  int index = -1;          // Bound

  static Term make_const(Sym s, std::vector<Term> args = {});
  static Term make_const(const std::string& name, std::vector<Term> args = {});
  static Term make_logic_var(int id, int level);
  static Term make_eigen_var(int id, int level);
  static Term make_bound(int index);

  bool is_const() const { return kind == TermKind::Const; }
  bool is_var() const { return kind == TermKind::LogicVar || kind == TermKind::EigenVar; }
};

// Session-local source of fresh variable ids.
class VarGen {
public:
  Term fresh_logic(int level) { return TermNode::make_logic_var(next_++, level); }
  Term fresh_eigen(int level) { return TermNode::make_eigen_var(next_++, level); }
  int next_id() const { return next_; }

private:
  int next_ = 0;
};

bool term_equal(const Term& a, const Term& b);
bool occurs_in(const TermNode& var, const Term& t);
std::string term_to_string(const Term& t);

// Replaces every occurrence of the given variables (matched by id) with the
// paired terms.
Term replace_vars(const Term& t, const std::vector<std::pair<Term, Term>>& subst);

}  // namespace fpc

#endif
