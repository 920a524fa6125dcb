#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "fpc/formats.hpp"
#include "fpc/kernel.hpp"
#include "fpc/problem.hpp"
#include "fpc/selftest.hpp"
#include "fpc/witness.hpp"

namespace py = pybind11;

namespace {

struct RunOutcome {
  std::string verdict;
  std::string trace;
  long rules = 0;
};

RunOutcome run_check(const std::string& problem_text, const std::string& goal,
                     const std::string& cert_text, long depth, bool with_trace) {
  fpc::Problem p = fpc::parse_problem(problem_text);
  fpc::Claim c = fpc::parse_claim(goal, p);
  fpc::Cert cert = fpc::parse_cert(cert_text, fpc::claim_allows_neg_dia(c.kind));
  fpc::CheckOptions opts;
  opts.depth_limit = depth;
  fpc::CheckResult res = fpc::check(fpc::table_for_claim(c.kind), cert,
                                    fpc::Sequent::goal(fpc::goal_formula(c, p)), opts);
  RunOutcome out;
  out.verdict = fpc::verdict_name(res.verdict);
  out.rules = res.stats.rules_tried;
  if (with_trace && res.derivation)
    out.trace = fpc::format_trace(res.derivation, fpc::TraceVerbosity::Rules);
  return out;
}

std::optional<std::string> run_witness(const std::string& problem_text, const std::string& goal) {
  fpc::Problem p = fpc::parse_problem(problem_text);
  fpc::Claim c = fpc::parse_claim(goal, p);
  switch (c.kind) {
    case fpc::ClaimKind::Reach: {
      auto path = fpc::find_path(p.graph, c.a, c.b);
      if (!path) return std::nullopt;
      return fpc::cert_to_string(fpc::c_path(*path));
    }
    case fpc::ClaimKind::Unreach: {
      if (fpc::closure_reachable(p.graph, c.a, c.b)) return std::nullopt;
      return fpc::cert_to_string(
          fpc::c_inv(fpc::unreach_invariant(p.graph, c.a, c.b), fpc::c_bipole(1)));
    }
    case fpc::ClaimKind::Sim: {
      auto inv = fpc::sim_invariant(p.lts, c.a, p.lts, c.b);
      if (!inv) return std::nullopt;
      return fpc::cert_to_string(fpc::c_coinv(fpc::pairs_pred_expr(*inv), fpc::c_bipole(1)));
    }
    case fpc::ClaimKind::Bisim: {
      auto inv = fpc::bisim_invariant(p.lts, c.a, p.lts, c.b);
      if (!inv) return std::nullopt;
      return fpc::cert_to_string(fpc::c_coinv(fpc::pairs_pred_expr(*inv), fpc::c_bipole(1)));
    }
    case fpc::ClaimKind::Unsim: {
      auto a = fpc::distinguishing_assertion(p.lts, c.a, p.lts, c.b, fpc::AssertMode::Sim);
      if (!a) return std::nullopt;
      return fpc::cert_to_string(*a);
    }
    case fpc::ClaimKind::Unbisim: {
      auto a = fpc::distinguishing_assertion(p.lts, c.a, p.lts, c.b, fpc::AssertMode::Bisim);
      if (!a) return std::nullopt;
      return fpc::cert_to_string(*a);
    }
  }
  return std::nullopt;
}

}  // namespace

PYBIND11_MODULE(_fpcheck, m) {
  m.doc() = "Proof certificate checking for model-checking claims";

  py::class_<RunOutcome>(m, "RunOutcome")
      .def_readonly("verdict", &RunOutcome::verdict)
      .def_readonly("trace", &RunOutcome::trace)
      .def_readonly("rules", &RunOutcome::rules);

  m.def("check", &run_check, py::arg("problem"), py::arg("goal"), py::arg("cert"),
        py::arg("depth") = 10000, py::arg("trace") = false,
        "Check a certificate against a claim over a problem description.");
  m.def("witness", &run_witness, py::arg("problem"), py::arg("goal"),
        "Generate a checkable certificate for a true claim, or None.");
  m.def("selftest", [] {
    py::list out;
    for (const auto& e : fpc::selftest::run_all()) {
      py::dict d;
      d["name"] = e.name;
      d["pass"] = e.pass;
      out.append(d);
    }
    return out;
  });
  m.def("fig1_graph", [] { return std::string(fpc::selftest::fig1_graph()); });
  m.def("fig3_lts", [] { return std::string(fpc::selftest::fig3_lts()); });
  m.def("fig4_lts", [] { return std::string(fpc::selftest::fig4_lts()); });
}
