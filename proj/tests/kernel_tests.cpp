#include <functional>

#include "doctest.h"
#include "fpc/formats.hpp"
#include "fpc/kernel.hpp"
#include "fpc/problem.hpp"
#include "fpc/selftest.hpp"
#include "fpc/witness.hpp"
#include "support/muf_validator.hpp"
#include "support/oracles.hpp"
#include "support/permissive.hpp"

using namespace fpc;
using namespace fpc::testsupport;

namespace {

Term k(const char* name) { return TermNode::make_const(name); }

CheckResult run_claim(const char* problem_text, const std::string& goal,
                      const std::string& cert_text, long depth = 10000) {
  Problem p = parse_problem(problem_text);
  Claim c = parse_claim(goal, p);
  Cert cert = parse_cert(cert_text, claim_allows_neg_dia(c.kind));
  CheckOptions opts;
  opts.depth_limit = depth;
  return check(table_for_claim(c.kind), cert, Sequent::goal(goal_formula(c, p)), opts);
}

void walk(const Deriv& d, const std::function<void(const Deriv&)>& fn) {
  fn(d);
  for (const Deriv& c : d->children) walk(c, fn);
}

}  // namespace

TEST_CASE("golden examples accept and erase to valid derivations") {
  auto entries = selftest::run_all();
  for (const auto& e : entries) {
    CHECK_MESSAGE(e.pass, e.name, ": expected ", verdict_name(e.expect), ", got ",
                  verdict_name(e.got));
  }
}

TEST_CASE("accepted golden runs: erased derivations replay as certificate-free proofs") {
  struct Case {
    const char* problem;
    const char* goal;
    const char* cert;
  };
  const Case cases[] = {
      {selftest::fig1_graph(), "reach a c", "(path (b))"},
      {selftest::fig1_graph(), "reach a c", "(path (b c b))"},
      {selftest::fig1_graph(), "unreach d a", "(async stop)"},
      {selftest::fig1_graph(), "unreach b d",
       "(inv (lam (x y) (imp (or (and+ (= x b) (= y d)) (and+ (= x c) (= y d))) false-)) "
       "(bipole 1))"},
      {selftest::fig3_lts(), "sim 1 6", "decproc"},
      {selftest::fig3_lts(), "unsim 6 1", "(hml (dia a (and (dia b tt) (dia c tt))))"},
      {selftest::fig3_lts(), "unbisim 6 10", "(hml (dia a (not (dia b tt))))"},
      {selftest::fig4_lts(), "sim 21 23",
       "(coinv (lam (x y) (or (and+ (= x 21) (= y 23)) (and+ (= x 22) (= y 24)))) (bipole 1))"},
  };
  for (const Case& c : cases) {
    CheckResult res = run_claim(c.problem, c.goal, c.cert);
    REQUIRE_MESSAGE(res.accepted(), c.goal, " with ", c.cert);
    CHECK(res.stats.mc_restriction_violations == 0);

    Deriv erased = erase_certificates(res.derivation);
    walk(erased, [](const Deriv& d) { CHECK(d->cert == nullptr); });
    Validation v = validate_muf(erased);
    CHECK_MESSAGE(v.ok, c.goal, ": ", v.error);
    CHECK(v.switch_violations == 0);
    CHECK(v.store_violations == 0);
  }
}

TEST_CASE("empty node list certifies a single edge") {
  // oracle first: a -> b is one edge, no intermediates
  Graph g = parse_problem(selftest::fig1_graph()).graph;
  auto path = find_path(g, intern("a"), intern("b"));
  REQUIRE(path.has_value());
  CHECK(path->empty());
  CHECK(run_claim(selftest::fig1_graph(), "reach a b", "(path ())").accepted());
}

TEST_CASE("subset inclusion under decproc") {
  CheckResult res = selftest::check_subset(c_decproc());
  REQUIRE(res.accepted());

  // the erased proof forks once at the disjunction and closes each branch
  // with a focused equality
  Deriv erased = erase_certificates(res.derivation);
  CHECK(validate_muf(erased).ok);
  int or_splits = 0, eq_closes = 0;
  walk(erased, [&](const Deriv& d) {
    if (d->rule == RuleId::OrL) ++or_splits;
    if (d->rule == RuleId::EqR) ++eq_closes;
  });
  CHECK(or_splits == 1);
  CHECK(eq_closes == 2);

  // 4 is not in the superset
  CHECK(check(common_table(), c_decproc(),
              Sequent::goal(parse_formula(
                  "(forall x (imp (or (= x 1) (= x 4)) (or (= x 1) (= x 2) (= x 3))))")))
            .verdict == Verdict::Rejected);
  // inclusion does not reverse
  CHECK(check(common_table(), c_decproc(),
              Sequent::goal(parse_formula(
                  "(forall x (imp (or (= x 1) (= x 2) (= x 3)) (or (= x 1) (= x 3))))")))
            .verdict == Verdict::Rejected);
}

TEST_CASE("the depth bound converts divergence into resource exhaustion") {
  CheckResult res = run_claim(selftest::fig4_lts(), "sim 21 23", "decproc", 1500);
  CHECK(res.verdict == Verdict::ResourceExhausted);
}

TEST_CASE("verdicts and traces are deterministic") {
  for (const char* cert : {"(path (b))", "(path (c))"}) {
    CheckResult a = run_claim(selftest::fig1_graph(), "reach a c", cert);
    CheckResult b = run_claim(selftest::fig1_graph(), "reach a c", cert);
    CHECK(a.verdict == b.verdict);
    CHECK(a.stats.rules_tried == b.stats.rules_tried);
    if (a.derivation) {
      REQUIRE(b.derivation);
      CHECK(format_trace(a.derivation, TraceVerbosity::Rules) ==
            format_trace(b.derivation, TraceVerbosity::Rules));
    }
  }
}

TEST_CASE("trace serialization is line-oriented rule/digest triples") {
  CheckResult res = run_claim(selftest::fig1_graph(), "reach a c", "(path (b))");
  REQUIRE(res.accepted());
  std::string trace = format_trace(res.derivation, TraceVerbosity::Rules);
  REQUIRE(!trace.empty());
  size_t lines = 0;
  size_t pos = 0;
  while ((pos = trace.find('\n', pos)) != std::string::npos) {
    ++lines;
    ++pos;
  }
  CHECK(lines == count_nodes(res.derivation));
  // first applied rule stores the goal
  CHECK(trace.substr(0, trace.find(' ')) == "store_r");
  // the full rendering shows whole sequents
  std::string full = format_trace(res.derivation, TraceVerbosity::Full);
  CHECK(full.find("|-") != std::string::npos);
  CHECK(format_trace(res.derivation, TraceVerbosity::None).empty());
}

TEST_CASE("a non-switchable root is flagged, not searched") {
  Lts l = parse_problem(selftest::fig3_lts()).lts;
  Formula nu = f_nu(encode_sim(l), {k("1"), k("6")});
  Formula bad = f_imp(f_and_pos(nu, nu), f_unit(Conn::FalseNeg));
  CheckResult res = check(common_table(), c_decproc(), Sequent::goal(bad));
  CHECK(res.verdict == Verdict::InvariantViolation);
}

TEST_CASE("soundness does not depend on the table: permissive table on true claims") {
  Problem p = parse_problem(selftest::fig1_graph());
  Claim c = parse_claim("reach a c", p);
  CheckOptions opts;
  opts.depth_limit = 1000;
  CheckResult res =
      check(permissive_table(), c_stop(), Sequent::goal(goal_formula(c, p)), opts);
  REQUIRE(res.accepted());
  Validation v = validate_muf(erase_certificates(res.derivation));
  CHECK_MESSAGE(v.ok, v.error);
  CHECK(v.switch_violations == 0);
}

TEST_CASE("permissive table cannot prove false claims") {
  struct Case {
    const char* problem;
    const char* goal;
  };
  const Case cases[] = {
      {selftest::fig1_graph(), "reach d a"},
      {selftest::fig3_lts(), "sim 6 1"},
      {selftest::fig3_lts(), "bisim 6 10"},
  };
  CheckOptions opts;
  opts.depth_limit = 1000;
  for (const Case& c : cases) {
    Problem p = parse_problem(c.problem);
    Claim cl = parse_claim(c.goal, p);
    CheckResult res =
        check(permissive_table(), c_stop(), Sequent::goal(goal_formula(cl, p)), opts);
    CHECK_MESSAGE(res.verdict != Verdict::Accepted, c.goal);
  }
}

TEST_CASE("unit connectives agree with their equality encodings") {
  const char* goals[] = {
      "true+",
      "true-",
      "false+",
      "false-",
      "(or true+ false+)",
      "(and+ true+ true+)",
      "(imp false+ false-)",
      "(imp true+ true-)",
      "(imp (and+ true+ false+) false-)",
      "(and- true- (imp (= a b) false-))",
  };
  for (const char* g : goals) {
    Formula f = parse_formula(g);
    CheckResult direct = check(common_table(), c_decproc(), Sequent::goal(f));
    CheckResult encoded = check(common_table(), c_decproc(), Sequent::goal(normalize_units(f)));
    CHECK_MESSAGE(direct.verdict == encoded.verdict, g, ": ", verdict_name(direct.verdict),
                  " vs ", verdict_name(encoded.verdict));
  }
}

TEST_CASE("rejection leaves no derivation") {
  CheckResult res = run_claim(selftest::fig1_graph(), "reach a c", "(path (c))");
  CHECK(res.verdict == Verdict::Rejected);
  CHECK(res.derivation == nullptr);
}
