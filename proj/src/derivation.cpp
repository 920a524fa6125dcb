#include "fpc/derivation.hpp"

#include <cstdint>

namespace fpc {

std::string sequent_to_string(const Sequent& s) {
  auto list = [](const std::vector<Formula>& fs) {
    std::string out = "[";
    for (size_t i = 0; i < fs.size(); ++i) {
      if (i) out += ' ';
      out += formula_to_string(fs[i]);
    }
    return out + ']';
  };
  switch (s.kind) {
    case Sequent::Kind::Async:
      return list(s.nstore) + ' ' + list(s.gamma) + " |- " + list(s.delta) + ' ' + list(s.pstore);
    case Sequent::Kind::FocusL:
      return "<" + formula_to_string(s.focus) + "> |-";
    case Sequent::Kind::FocusR:
      return "|- <" + formula_to_string(s.focus) + ">";
  }
  return "?";
}

const char* rule_name(RuleId r) {
  switch (r) {
    case RuleId::EqL: return "eq_l";
    case RuleId::EqLClash: return "eq_l_clash";
    case RuleId::TruePosL: return "true+_l";
    case RuleId::FalsePosL: return "false+_l";
    case RuleId::AndPosL: return "and+_l";
    case RuleId::OrL: return "or_l";
    case RuleId::ExistsL: return "exists_l";
    case RuleId::MuUnfoldL: return "mu_unfold_l";
    case RuleId::Ind: return "ind";
    case RuleId::StoreL: return "store_l";
    case RuleId::NeqR: return "neq_r";
    case RuleId::NeqRClash: return "neq_r_clash";
    case RuleId::FalseNegR: return "false-_r";
    case RuleId::TrueNegR: return "true-_r";
    case RuleId::AndNegR: return "and-_r";
    case RuleId::ImpR: return "imp_r";
    case RuleId::ForallR: return "forall_r";
    case RuleId::NuUnfoldR: return "nu_unfold_r";
    case RuleId::CoInd: return "coind";
    case RuleId::StoreR: return "store_r";
    case RuleId::DecideL: return "decide_l";
    case RuleId::DecideR: return "decide_r";
    case RuleId::ReleaseL: return "release_l";
    case RuleId::ReleaseR: return "release_r";
    case RuleId::EqR: return "eq_r";
    case RuleId::TruePosR: return "true+_r";
    case RuleId::AndPosR: return "and+_r";
    case RuleId::OrR: return "or_r";
    case RuleId::ExistsR: return "exists_r";
    case RuleId::MuUnfoldR: return "mu_unfold_r";
    case RuleId::NeqL: return "neq_l";
    case RuleId::FalseNegL: return "false-_l";
    case RuleId::ImpL: return "imp_l";
    case RuleId::AndNegL: return "and-_l";
    case RuleId::ForallL: return "forall_l";
    case RuleId::NuUnfoldL: return "nu_unfold_l";
  }
  return "?";
}

bool is_phase_switch(RuleId r) {
  return r == RuleId::DecideL || r == RuleId::DecideR || r == RuleId::ReleaseL ||
         r == RuleId::ReleaseR;
}

Deriv erase_certificates(const Deriv& d) {
  auto n = std::make_shared<DerivNode>(*d);
  n->cert = nullptr;
  std::vector<Deriv> kids;
  kids.reserve(d->children.size());
  for (const Deriv& c : d->children) kids.push_back(erase_certificates(c));
  n->children = std::move(kids);
  return n;
}

namespace {

uint64_t fnv1a(const std::string& s) {
  uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string digest(const std::string& s) {
  static const char* hex = "0123456789abcdef";
  uint64_t h = fnv1a(s);
  std::string out(12, '0');
  for (int i = 11; i >= 0; --i) {
    out[i] = hex[h & 0xf];
    h >>= 4;
  }
  return out;
}

void trace_lines(const Deriv& d, TraceVerbosity v, std::string& out) {
  out += rule_name(d->rule);
  if (v == TraceVerbosity::Full) {
    out += " | " + sequent_to_string(d->seq);
    out += " | ";
    out += d->cert ? cert_to_string(d->cert) : "-";
  } else {
    out += ' ' + digest(sequent_to_string(d->seq));
    out += ' ';
    out += d->cert ? digest(cert_to_string(d->cert)) : "-";
  }
  out += '\n';
  for (const Deriv& c : d->children) trace_lines(c, v, out);
}

}  // namespace

std::string format_trace(const Deriv& d, TraceVerbosity v) {
  if (!d || v == TraceVerbosity::None) return "";
  std::string out;
  trace_lines(d, v, out);
  return out;
}

size_t count_nodes(const Deriv& d) {
  size_t n = 1;
  for (const Deriv& c : d->children) n += count_nodes(c);
  return n;
}

}  // namespace fpc
