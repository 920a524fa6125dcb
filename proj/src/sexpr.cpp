#include "fpc/sexpr.hpp"

#include <cctype>

namespace fpc {

namespace {

struct Reader {
  const std::string& s;
  size_t pos = 0;

  void skip_ws() {
    while (pos < s.size()) {
      if (std::isspace(static_cast<unsigned char>(s[pos]))) {
        ++pos;
      } else if (s[pos] == ';') {
        while (pos < s.size() && s[pos] != '\n') ++pos;
      } else {
        break;
      }
    }
  }

  bool atom_char(char c) const {
    return !std::isspace(static_cast<unsigned char>(c)) && c != '(' && c != ')' && c != ';';
  }

  Sexpr read() {
    skip_ws();
    if (pos >= s.size()) throw SexprError("unexpected end of input");
    if (s[pos] == '(') {
      ++pos;
      std::vector<Sexpr> items;
      while (true) {
        skip_ws();
        if (pos >= s.size()) throw SexprError("missing ')'");
        if (s[pos] == ')') {
          ++pos;
          return Sexpr::make_list(std::move(items));
        }
        items.push_back(read());
      }
    }
    if (s[pos] == ')') throw SexprError("unexpected ')'");
    size_t start = pos;
    while (pos < s.size() && atom_char(s[pos])) ++pos;
    return Sexpr::make_atom(s.substr(start, pos - start));
  }
};

}  // namespace

Sexpr parse_sexpr(const std::string& text) {
  Reader r{text};
  Sexpr e = r.read();
  r.skip_ws();
  if (r.pos != text.size()) throw SexprError("trailing characters after s-expression");
  return e;
}

std::string Sexpr::to_string() const {
  if (is_atom) return atom;
  std::string out = "(";
  for (size_t i = 0; i < items.size(); ++i) {
    if (i) out += ' ';
    out += items[i].to_string();
  }
  out += ')';
  return out;
}

}  // namespace fpc
