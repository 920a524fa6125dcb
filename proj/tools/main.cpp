#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "fpc/formats.hpp"
#include "fpc/kernel.hpp"
#include "fpc/problem.hpp"
#include "fpc/selftest.hpp"
#include "fpc/witness.hpp"

namespace {

constexpr int kExitAccepted = 0;
constexpr int kExitRejected = 1;
constexpr int kExitUsage = 2;
constexpr int kExitExhausted = 3;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw fpc::ProblemError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct CheckArgs {
  std::string problem_path;
  std::string goal;
  std::string cert_text;
  std::string cert_path;
  std::string table = "auto";
  std::string trace = "none";
  long depth = 10000;
};

int run_check(const CheckArgs& a) {
  fpc::Problem problem = fpc::parse_problem(read_file(a.problem_path));
  fpc::Claim claim = fpc::parse_claim(a.goal, problem);
  std::string cert_src = a.cert_text;
  if (!a.cert_path.empty()) cert_src = read_file(a.cert_path);
  fpc::Cert cert = fpc::parse_cert(cert_src, fpc::claim_allows_neg_dia(claim.kind));
  fpc::FpcTable table =
      a.table == "common" ? fpc::common_table() : fpc::table_for_claim(claim.kind);
  fpc::CheckOptions opts;
  opts.depth_limit = a.depth;
  fpc::CheckResult res =
      fpc::check(table, cert, fpc::Sequent::goal(fpc::goal_formula(claim, problem)), opts);

  if (a.trace != "none" && res.derivation) {
    std::cout << fpc::format_trace(res.derivation, a.trace == "full"
                                                       ? fpc::TraceVerbosity::Full
                                                       : fpc::TraceVerbosity::Rules);
  }
  std::cout << fpc::verdict_name(res.verdict);
  if (!res.message.empty()) std::cout << ": " << res.message;
  std::cout << '\n';
  switch (res.verdict) {
    case fpc::Verdict::Accepted: return kExitAccepted;
    case fpc::Verdict::Rejected: return kExitRejected;
    case fpc::Verdict::ResourceExhausted: return kExitExhausted;
    case fpc::Verdict::InvariantViolation: return kExitUsage;
  }
  return kExitUsage;
}

int run_witness(const std::string& problem_path, const std::string& goal) {
  fpc::Problem problem = fpc::parse_problem(read_file(problem_path));
  fpc::Claim claim = fpc::parse_claim(goal, problem);
  const fpc::Graph& g = problem.graph;
  const fpc::Lts& l = problem.lts;
  switch (claim.kind) {
    case fpc::ClaimKind::Reach: {
      auto path = fpc::find_path(g, claim.a, claim.b);
      if (!path) break;
      std::cout << fpc::cert_to_string(fpc::c_path(*path)) << '\n';
      return kExitAccepted;
    }
    case fpc::ClaimKind::Unreach: {
      if (fpc::closure_reachable(g, claim.a, claim.b)) break;
      fpc::Cert cert =
          fpc::c_inv(fpc::unreach_invariant(g, claim.a, claim.b), fpc::c_bipole(1));
      std::cout << fpc::cert_to_string(cert) << '\n';
      return kExitAccepted;
    }
    case fpc::ClaimKind::Sim: {
      auto inv = fpc::sim_invariant(l, claim.a, l, claim.b);
      if (!inv) break;
      std::cout << fpc::cert_to_string(
                       fpc::c_coinv(fpc::pairs_pred_expr(*inv), fpc::c_bipole(1)))
                << '\n';
      return kExitAccepted;
    }
    case fpc::ClaimKind::Bisim: {
      auto inv = fpc::bisim_invariant(l, claim.a, l, claim.b);
      if (!inv) break;
      std::cout << fpc::cert_to_string(
                       fpc::c_coinv(fpc::pairs_pred_expr(*inv), fpc::c_bipole(1)))
                << '\n';
      return kExitAccepted;
    }
    case fpc::ClaimKind::Unsim: {
      auto a = fpc::distinguishing_assertion(l, claim.a, l, claim.b, fpc::AssertMode::Sim);
      if (!a) break;
      std::cout << fpc::cert_to_string(*a) << '\n';
      return kExitAccepted;
    }
    case fpc::ClaimKind::Unbisim: {
      auto a = fpc::distinguishing_assertion(l, claim.a, l, claim.b, fpc::AssertMode::Bisim);
      if (!a) break;
      std::cout << fpc::cert_to_string(*a) << '\n';
      return kExitAccepted;
    }
  }
  std::cout << "claim is false\n";
  return kExitRejected;
}

int run_selftest() {
  auto entries = fpc::selftest::run_all();
  bool all = true;
  for (const auto& e : entries) {
    all = all && e.pass;
    std::cout << (e.pass ? "pass" : "FAIL") << "  " << e.name << "  (expected "
              << fpc::verdict_name(e.expect) << ", got " << fpc::verdict_name(e.got) << ")\n";
  }
  std::cout << (all ? "selftest: all cases pass\n" : "selftest: FAILURES\n");
  return all ? kExitAccepted : kExitRejected;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Foundational proof certificate checker for model-checking claims"};
  app.require_subcommand(1);

  CheckArgs ca;
  CLI::App* chk = app.add_subcommand("check", "check a certificate against a claim");
  chk->add_option("--problem", ca.problem_path, "problem file")->required();
  chk->add_option("--goal", ca.goal, "claim, e.g. 'reach a c'")->required();
  chk->add_option("--cert", ca.cert_text, "certificate text");
  chk->add_option("--cert-file", ca.cert_path, "certificate file");
  chk->add_option("--depth", ca.depth, "rule applications per branch")
      ->check(CLI::PositiveNumber);
  chk->add_option("--trace", ca.trace, "trace verbosity")
      ->check(CLI::IsMember({"none", "rules", "full"}));
  chk->add_option("--table", ca.table, "clerk/expert table")
      ->check(CLI::IsMember({"auto", "common"}));

  std::string wp, wg;
  CLI::App* wit = app.add_subcommand("witness", "generate a certificate for a claim");
  wit->add_option("--problem", wp, "problem file")->required();
  wit->add_option("--goal", wg, "claim, e.g. 'unreach b d'")->required();

  CLI::App* self = app.add_subcommand("selftest", "run the built-in example checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (chk->parsed()) {
      if (ca.cert_text.empty() == ca.cert_path.empty())
        throw fpc::ProblemError("provide exactly one of --cert and --cert-file");
      return run_check(ca);
    }
    if (wit->parsed()) return run_witness(wp, wg);
    if (self->parsed()) return run_selftest();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
