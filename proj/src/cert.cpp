#include "fpc/cert.hpp"

namespace fpc {

namespace {

std::shared_ptr<CertNode> node(CertKind k) {
  auto n = std::make_shared<CertNode>();
  n->kind = k;
  return n;
}

}  // namespace

Cert c_stop() { return node(CertKind::Stop); }

Cert c_sync(Cert k) {
  auto n = node(CertKind::Sync);
  n->child = std::move(k);
  return n;
}

Cert c_async(Cert k) {
  auto n = node(CertKind::Async);
  n->child = std::move(k);
  return n;
}

Cert c_bipole(int count) {
  if (count < 1) throw CertError("bipole index must be positive");
  auto n = node(CertKind::Bipole);
  n->n = count;
  return n;
}

Cert c_decproc() { return node(CertKind::Decproc); }

Cert c_inv(PredExpr s, Cert k) {
  auto n = node(CertKind::Inv);
  n->invariant = std::move(s);
  n->child = std::move(k);
  return n;
}

Cert c_coinv(PredExpr s, Cert k) {
  auto n = node(CertKind::CoInv);
  n->invariant = std::move(s);
  n->child = std::move(k);
  return n;
}

Cert c_path(std::vector<Sym> nodes) {
  auto n = node(CertKind::Path);
  n->nodes = std::move(nodes);
  return n;
}

Cert c_hml_conj(std::vector<Cert> items) {
  for (const Cert& c : items)
    if (c->kind != CertKind::HmlDia && c->kind != CertKind::HmlNegDia)
      throw CertError("assertion conjunctions hold diamond items");
  auto n = node(CertKind::HmlConj);
  n->items = std::move(items);
  return n;
}

Cert c_hml_tt() { return c_hml_conj({}); }

Cert c_hml_dia(Sym label, Cert conj) {
  if (conj->kind != CertKind::HmlConj) throw CertError("diamond body must be a conjunction");
  auto n = node(CertKind::HmlDia);
  n->label = label;
  n->child = std::move(conj);
  return n;
}

Cert c_hml_neg_dia(Sym label, Cert conj) {
  if (conj->kind != CertKind::HmlConj) throw CertError("diamond body must be a conjunction");
  auto n = node(CertKind::HmlNegDia);
  n->label = label;
  n->child = std::move(conj);
  return n;
}

namespace {

// Assertions parse to a conjunction; (dia ...) at assertion position is a
// singleton conjunction, and nested (and ...) flatten.
std::vector<Cert> parse_assertion_items(const Sexpr& e, bool allow_neg_dia);

Cert parse_item(const Sexpr& e, bool allow_neg_dia) {
  if (e.is_atom || e.size() == 0 || !e[0].is_atom) throw CertError("bad assertion: " + e.to_string());
  if (e[0].atom == "dia") {
    if (e.size() != 3 || !e[1].is_atom) throw CertError("expected (dia LBL A)");
    return c_hml_dia(intern(e[1].atom), c_hml_conj(parse_assertion_items(e[2], allow_neg_dia)));
  }
  if (e[0].atom == "not") {
    if (!allow_neg_dia) throw CertError("negated diamonds are not allowed for this claim");
    if (e.size() != 2) throw CertError("expected (not (dia LBL A))");
    Cert inner = parse_item(e[1], allow_neg_dia);
    if (inner->kind != CertKind::HmlDia) throw CertError("negation applies to a diamond");
    return c_hml_neg_dia(inner->label, inner->child);
  }
  throw CertError("bad assertion item: " + e.to_string());
}

std::vector<Cert> parse_assertion_items(const Sexpr& e, bool allow_neg_dia) {
  if (e.is_atom) {
    if (e.atom == "tt") return {};
    throw CertError("bad assertion: " + e.atom);
  }
  if (e.size() > 0 && e[0].is_atom && e[0].atom == "and") {
    std::vector<Cert> items;
    for (size_t i = 1; i < e.size(); ++i) {
      auto sub = parse_assertion_items(e[i], allow_neg_dia);
      items.insert(items.end(), sub.begin(), sub.end());
    }
    return items;
  }
  return {parse_item(e, allow_neg_dia)};
}

}  // namespace

Cert parse_cert(const Sexpr& e, bool allow_neg_dia) {
  if (e.is_atom) {
    if (e.atom == "stop") return c_stop();
    if (e.atom == "decproc") return c_decproc();
    if (e.atom == "bipole") return c_bipole(1);
    throw CertError("unknown certificate: " + e.atom);
  }
  if (e.size() == 0 || !e[0].is_atom) throw CertError("bad certificate: " + e.to_string());
  const std::string& head = e[0].atom;
  if (head == "sync" || head == "async") {
    if (e.size() != 2) throw CertError(head + " takes one continuation");
    Cert k = parse_cert(e[1], allow_neg_dia);
    return head == "sync" ? c_sync(k) : c_async(k);
  }
  if (head == "bipole") {
    if (e.size() != 2 || !e[1].is_atom) throw CertError("expected (bipole N)");
    int n;
    try {
      n = std::stoi(e[1].atom);
    } catch (...) {
      throw CertError("expected (bipole N)");
    }
    return c_bipole(n);
  }
  if (head == "inv" || head == "coinv") {
    if (e.size() != 3) throw CertError("expected (" + head + " PRED CERT)");
    PredExpr s = parse_pred_expr(e[1]);
    Cert k = parse_cert(e[2], allow_neg_dia);
    return head == "inv" ? c_inv(s, k) : c_coinv(s, k);
  }
  if (head == "path") {
    if (e.size() != 2 || !e[1].is_list()) throw CertError("expected (path (n1 n2 ...))");
    std::vector<Sym> nodes;
    for (size_t i = 0; i < e[1].size(); ++i) {
      if (!e[1][i].is_atom) throw CertError("path nodes are constants");
      nodes.push_back(intern(e[1][i].atom));
    }
    return c_path(std::move(nodes));
  }
  if (head == "hml") {
    if (e.size() != 2) throw CertError("expected (hml A)");
    return c_hml_conj(parse_assertion_items(e[1], allow_neg_dia));
  }
  throw CertError("unknown certificate: " + head);
}

Cert parse_cert(const std::string& text, bool allow_neg_dia) {
  return parse_cert(parse_sexpr(text), allow_neg_dia);
}

namespace {

std::string assertion_str(const Cert& c) {
  switch (c->kind) {
    case CertKind::HmlConj: {
      if (c->items.empty()) return "tt";
      if (c->items.size() == 1) return assertion_str(c->items[0]);
      std::string out = "(and";
      for (const Cert& it : c->items) out += ' ' + assertion_str(it);
      return out + ')';
    }
    case CertKind::HmlDia:
      return "(dia " + sym_name(c->label) + ' ' + assertion_str(c->child) + ')';
    case CertKind::HmlNegDia:
      return "(not (dia " + sym_name(c->label) + ' ' + assertion_str(c->child) + "))";
    default:
      throw CertError("not an assertion");
  }
}

}  // namespace

std::string cert_to_string(const Cert& c) {
  switch (c->kind) {
    case CertKind::Stop:
      return "stop";
    case CertKind::Sync:
      return "(sync " + cert_to_string(c->child) + ')';
    case CertKind::Async:
      return "(async " + cert_to_string(c->child) + ')';
    case CertKind::Bipole:
      return "(bipole " + std::to_string(c->n) + ')';
    case CertKind::Decproc:
      return "decproc";
    case CertKind::Inv:
      return "(inv " + pred_expr_to_string(c->invariant) + ' ' + cert_to_string(c->child) + ')';
    case CertKind::CoInv:
      return "(coinv " + pred_expr_to_string(c->invariant) + ' ' + cert_to_string(c->child) + ')';
    case CertKind::Path: {
      std::string out = "(path (";
      for (size_t i = 0; i < c->nodes.size(); ++i) out += (i ? " " : "") + sym_name(c->nodes[i]);
      return out + "))";
    }
    case CertKind::HmlConj:
    case CertKind::HmlDia:
    case CertKind::HmlNegDia:
      return "(hml " + assertion_str(c) + ')';
  }
  return "?";
}

bool cert_equal(const Cert& a, const Cert& b) {
  if (a.get() == b.get()) return true;
  if (a->kind != b->kind) return false;
  switch (a->kind) {
    case CertKind::Stop:
    case CertKind::Decproc:
      return true;
    case CertKind::Sync:
    case CertKind::Async:
      return cert_equal(a->child, b->child);
    case CertKind::Bipole:
      return a->n == b->n;
    case CertKind::Inv:
    case CertKind::CoInv:
      return a->invariant->arity == b->invariant->arity &&
             formula_equal(a->invariant->formula, b->invariant->formula) &&
             cert_equal(a->child, b->child);
    case CertKind::Path:
      return a->nodes == b->nodes;
    case CertKind::HmlConj: {
      if (a->items.size() != b->items.size()) return false;
      for (size_t i = 0; i < a->items.size(); ++i)
        if (!cert_equal(a->items[i], b->items[i])) return false;
      return true;
    }
    case CertKind::HmlDia:
    case CertKind::HmlNegDia:
      return a->label == b->label && cert_equal(a->child, b->child);
  }
  return false;
}

}  // namespace fpc
