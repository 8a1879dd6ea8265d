// Python bindings. Polynomials cross the boundary as expression strings in
// the CLI syntax; domains as their tags ("int", "rat", "d0", "frac-d0").

#include <sstream>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ccjac/centralizer.hpp"
#include "ccjac/cli.hpp"
#include "ccjac/error.hpp"
#include "ccjac/expr.hpp"
#include "ccjac/golden.hpp"
#include "ccjac/harness.hpp"
#include "ccjac/weyl.hpp"

namespace py = pybind11;
using namespace ccjac;

namespace {

std::vector<std::string> strings(const std::vector<Scalar>& v) {
  std::vector<std::string> out;
  for (const auto& s : v) out.push_back(s.to_string());
  return out;
}

py::dict in_a_dict(const InAOutcome& o) {
  py::dict d;
  if (const auto* r = std::get_if<InAResult>(&o)) {
    d["in_qa"] = true;
    d["coefficients"] = strings(r->coefficients);
    d["in_da"] = r->in_base_domain;
    d["clearing_denominator"] = r->clearing_denominator.to_string();
  } else {
    const auto& m = std::get<NotInQA>(o);
    d["in_qa"] = false;
    d["stage"] = std::string(peel_stage_name(m.stage));
    d["detail"] = m.detail;
    d["in_da"] = false;
  }
  return d;
}

Domain dom(const std::string& tag) { return Domain::from_tag(tag); }

}  // namespace

PYBIND11_MODULE(_ccjac, m) {
  m.doc() = "Jacobian pairs, centralizers and the first Weyl algebra over exact domains";

  static py::exception<Error> error(m, "Error", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::set_error(error, (std::string(errc_name(e.code())) + ": " + e.what()).c_str());
    }
  });

  m.def("jacobian", [](const std::string& p, const std::string& q, const std::string& domain) {
    return jacobian(parse_bipoly(p, dom(domain)), parse_bipoly(q, dom(domain))).to_string();
  }, py::arg("p"), py::arg("q"), py::arg("domain") = "int");

  m.def("is_jacobian_pair", [](const std::string& a, const std::string& b, const std::string& domain) {
    return is_jacobian_pair(parse_bipoly(a, dom(domain)), parse_bipoly(b, dom(domain)));
  }, py::arg("A"), py::arg("B"), py::arg("domain") = "int");

  m.def("commutes", [](const std::string& a, const std::string& w, const std::string& domain) {
    return commutes(parse_bipoly(a, dom(domain)), parse_bipoly(w, dom(domain)));
  }, py::arg("A"), py::arg("w"), py::arg("domain") = "int");

  m.def("express_in_A", [](const std::string& a, const std::string& w, const std::string& domain) {
    return in_a_dict(express_in_A(parse_bipoly(a, dom(domain)), parse_bipoly(w, dom(domain))));
  }, py::arg("A"), py::arg("w"), py::arg("domain") = "int",
     "Decide w in Q(D)[A]; returns coefficients, in_da and the clearing denominator.");

  m.def("mate_search", [](const std::string& a, unsigned max_deg, const std::string& domain)
        -> std::optional<std::string> {
    auto r = mate_search_bounded(parse_bipoly(a, dom(domain)), max_deg);
    if (r.mate) return r.mate->to_string();
    return std::nullopt;
  }, py::arg("A"), py::arg("max_deg"), py::arg("domain") = "int");

  m.def("weyl_mul", [](const std::string& p, const std::string& q, const std::string& domain) {
    return (parse_weyl(p, dom(domain)) * parse_weyl(q, dom(domain))).to_string();
  }, py::arg("p"), py::arg("q"), py::arg("domain") = "int");

  m.def("weyl_commutator", [](const std::string& p, const std::string& q, const std::string& domain) {
    return commutator(parse_weyl(p, dom(domain)), parse_weyl(q, dom(domain))).to_string();
  }, py::arg("p"), py::arg("q"), py::arg("domain") = "int");

  m.def("weyl_express_in_A", [](const std::string& a, const std::string& w, const std::string& domain) {
    return in_a_dict(weyl_express_in_A(parse_weyl(a, dom(domain)), parse_weyl(w, dom(domain))));
  }, py::arg("A"), py::arg("w"), py::arg("domain") = "int");

  m.def("dixmier_mate_search", [](const std::string& a, unsigned max_deg, const std::string& domain)
        -> std::optional<std::string> {
    auto r = dixmier_mate_search_bounded(parse_weyl(a, dom(domain)), max_deg);
    if (r.mate) return r.mate->to_string();
    return std::nullopt;
  }, py::arg("A"), py::arg("max_deg"), py::arg("domain") = "int");

  m.def("useful_equation", [](const std::string& t, unsigned i, const std::string& domain) {
    return useful_equation(parse_unipoly(t, dom(domain)), i).to_string();
  }, py::arg("t"), py::arg("i"), py::arg("domain") = "int");

  m.def("verify_paper_examples", [] {
    std::vector<std::tuple<std::string, bool, std::string>> out;
    for (const auto& c : run_golden_checks()) out.emplace_back(c.name, c.passed, c.detail);
    return out;
  });

  m.def("fuzz", [](std::uint64_t seed, unsigned count, const std::string& domain) {
    GenConfig cfg;
    cfg.seed = seed;
    cfg.instance_count = count;
    cfg.domain = dom(domain);
    cfg.validate();
    py::gil_scoped_release unlocked;
    return campaign(cfg).to_report().render(ReportFormat::Structured);
  }, py::arg("seed"), py::arg("count") = 100, py::arg("domain") = "int",
     "Run a campaign and return its structured report.");

  m.def("run", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = run_command(args, out, err);
    return std::make_tuple(code, out.str(), err.str());
  }, py::arg("args"), "Run one command-line invocation; returns (exit_code, stdout, stderr).");
}
