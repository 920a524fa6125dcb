#ifndef FPC_SEXPR_HPP
#define FPC_SEXPR_HPP

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace fpc {

// Minimal s-expression reader/printer used by the formula, certificate and
// trace surfaces.  Atoms are bare tokens; anything between '(' and ')' is a
// list.  ';' starts a comment running to end of line.
struct Sexpr {
  bool is_atom = false;
  std::string atom;
  std::vector<Sexpr> items;

  static Sexpr make_atom(std::string s) {
    Sexpr e;
    e.is_atom = true;
    e.atom = std::move(s);
    return e;
  }
  static Sexpr make_list(std::vector<Sexpr> xs) {
    Sexpr e;
    e.items = std::move(xs);
    return e;
  }

  bool is_list() const { return !is_atom; }
  size_t size() const { return items.size(); }
  const Sexpr& operator[](size_t i) const { return items[i]; }

  std::string to_string() const;
};

class SexprError : public std::runtime_error {
public:
  explicit SexprError(const std::string& what) : std::runtime_error(what) {}
};

// Parses exactly one s-expression; trailing garbage is an error.
Sexpr parse_sexpr(const std::string& text);

}  // namespace fpc

#endif
