#include "fpc/selftest.hpp"

#include "fpc/formats.hpp"
#include "fpc/problem.hpp"

namespace fpc::selftest {

const char* fig1_graph() {
  return "# four nodes, one cycle, d isolated\n"
         "node a\nnode b\nnode c\nnode d\n"
         "edge a b\nedge b c\nedge c b\n";
}

const char* fig3_lts() {
  return "# three noetherian systems\n"
         "state 1\nstate 2\nstate 3\nstate 4\nstate 5\n"
         "state 6\nstate 7\nstate 8\nstate 9\n"
         "state 10\nstate 11\nstate 12\nstate 13\nstate 14\nstate 15\n"
         "trans 1 a 2\ntrans 1 a 3\ntrans 2 b 4\ntrans 3 c 5\n"
         "trans 6 a 7\ntrans 7 b 8\ntrans 7 c 9\n"
         "trans 10 a 11\ntrans 10 a 12\ntrans 11 b 13\ntrans 11 c 14\ntrans 12 c 15\n";
}

const char* fig4_lts() {
  return "# two looping systems\n"
         "state 21\nstate 22\nstate 23\nstate 24\nstate 25\n"
         "trans 21 a 22\ntrans 22 b 21\n"
         "trans 23 a 24\ntrans 24 b 23\ntrans 23 c 25\n";
}

Formula subset_goal() {
  return parse_formula(
      "(forall x (imp (or (= x 1) (= x 3)) (or (= x 1) (= x 2) (= x 3))))");
}

CheckResult check_subset(const Cert& cert) {
  return check(common_table(), cert, Sequent::goal(subset_goal()));
}

namespace {

CheckResult run_claim(const char* problem_text, const std::string& goal,
                      const std::string& cert_text) {
  Problem p = parse_problem(problem_text);
  Claim c = parse_claim(goal, p);
  Cert cert = parse_cert(cert_text, claim_allows_neg_dia(c.kind));
  return check(table_for_claim(c.kind), cert, Sequent::goal(goal_formula(c, p)));
}

constexpr const char* kUnreachBD =
    "(inv (lam (x y) (imp (or (and+ (= x b) (= y d)) (and+ (= x c) (= y d))) false-)) "
    "(bipole 1))";
constexpr const char* kCoinvFig4 =
    "(coinv (lam (x y) (or (and+ (= x 21) (= y 23)) (and+ (= x 22) (= y 24)))) (bipole 1))";

}  // namespace

std::vector<Entry> run_all() {
  struct Case {
    const char* name;
    const char* problem;
    const char* goal;
    const char* cert;
    Verdict expect;
  };
  const Case cases[] = {
      {"reach-a-c/path-b", fig1_graph(), "reach a c", "(path (b))", Verdict::Accepted},
      {"reach-a-c/path-bcb", fig1_graph(), "reach a c", "(path (b c b))", Verdict::Accepted},
      {"unreach-d-a/async-stop", fig1_graph(), "unreach d a", "(async stop)", Verdict::Accepted},
      {"unreach-b-d/invariant", fig1_graph(), "unreach b d", kUnreachBD, Verdict::Accepted},
      {"sim-1-6/decproc", fig3_lts(), "sim 1 6", "decproc", Verdict::Accepted},
      {"unsim-6-1/assertion", fig3_lts(), "unsim 6 1", "(hml (dia a (and (dia b tt) (dia c tt))))",
       Verdict::Accepted},
      {"unbisim-6-10/assertion", fig3_lts(), "unbisim 6 10", "(hml (dia a (not (dia b tt))))",
       Verdict::Accepted},
      {"sim-21-23/coinvariant", fig4_lts(), "sim 21 23", kCoinvFig4, Verdict::Accepted},
      {"reach-a-c/bad-path", fig1_graph(), "reach a c", "(path (c))", Verdict::Rejected},
      {"unreach-a-d/misapplied-invariant", fig1_graph(), "unreach a d", kUnreachBD,
       Verdict::Rejected},
      {"unsim-6-1/weak-assertion", fig3_lts(), "unsim 6 1", "(hml (dia a tt))",
       Verdict::Rejected},
      {"unbisim-6-6/reflexive", fig3_lts(), "unbisim 6 6", "(hml (dia a (not (dia b tt))))",
       Verdict::Rejected},
  };

  std::vector<Entry> out;
  for (const Case& c : cases) {
    Entry e;
    e.name = c.name;
    e.expect = c.expect;
    e.got = run_claim(c.problem, c.goal, c.cert).verdict;
    e.pass = e.got == e.expect;
    out.push_back(std::move(e));
  }

  Entry subset;
  subset.name = "subset-1-3-in-1-2-3/decproc";
  subset.expect = Verdict::Accepted;
  subset.got = check_subset(c_decproc()).verdict;
  subset.pass = subset.got == subset.expect;
  out.push_back(std::move(subset));

  Entry subset_bad;
  subset_bad.name = "subset-swapped/decproc";
  subset_bad.expect = Verdict::Rejected;
  subset_bad.got = check(common_table(), c_decproc(),
                         Sequent::goal(parse_formula(
                             "(forall x (imp (or (= x 1) (= x 2) (= x 3)) (or (= x 1) (= x 3))))")))
                       .verdict;
  subset_bad.pass = subset_bad.got == subset_bad.expect;
  out.push_back(std::move(subset_bad));

  return out;
}

}  // namespace fpc::selftest
