#include "ccjac/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "ccjac/centralizer.hpp"
#include "ccjac/error.hpp"
#include "ccjac/expr.hpp"
#include "ccjac/golden.hpp"
#include "ccjac/harness.hpp"
#include "ccjac/instance.hpp"
#include "ccjac/report.hpp"
#include "ccjac/weyl.hpp"

namespace ccjac {

namespace {

struct Globals {
  std::string domain_tag = "int";
  bool domain_given = false;
  std::string format = "text";
};

class Session {
 public:
  Session(const Globals& g, std::ostream& out) : out_(out) {
    domain = Domain::from_tag(g.domain_tag);
    format = g.format == "structured" ? ReportFormat::Structured : ReportFormat::Text;
    domain_given_ = g.domain_given;
  }

  Domain domain;
  ReportFormat format;

  int emit(const Report& r, int code) {
    out_ << r.render(format);
    return code;
  }

  InstanceFile load(const std::string& path) const {
    std::ifstream in(path);
    if (!in) throw Error(Errc::InvalidInstance, "cannot read '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    InstanceFile inst = parse_instance(buf.str());
    if (!inst.domain_given) {
      inst.domain = domain;
    } else if (domain_given_ && inst.domain != domain) {
      throw Error(Errc::InvalidInstance, "file domain " + std::string(inst.domain.tag()) +
                                             " conflicts with --domain " +
                                             std::string(domain.tag()));
    }
    return inst;
  }

 private:
  std::ostream& out_;
  bool domain_given_ = false;
};

int verdict_code(bool ok) { return ok ? kExitOk : kExitNegative; }

std::string quote(const std::string& s) {
  if (!s.empty() && s.find_first_of(" \t\"'*()^") == std::string::npos) return s;
  std::string out = "'";
  for (char c : s) {
    if (c == '\'') out += "'\\''"; else out += c;
  }
  return out + "'";
}

const std::string& need(const std::optional<std::string>& v, const char* key) {
  if (!v) throw Error(Errc::InvalidInstance, std::string("instance is missing '") + key + "'");
  return *v;
}

// ---------------------------------------------------------------- commands

int cmd_jac(Session& s, const std::string& a, const std::string& b) {
  BiPoly A = parse_bipoly(a, s.domain), B = parse_bipoly(b, s.domain);
  Report r("jac");
  r.field("domain", std::string(s.domain.tag()));
  r.field("jacobian", jacobian(A, B).to_string());
  return s.emit(r, kExitOk);
}

int cmd_pair(Session& s, const std::string& a, const std::string& b) {
  BiPoly A = parse_bipoly(a, s.domain), B = parse_bipoly(b, s.domain);
  const bool ok = is_jacobian_pair(A, B);
  Report r("pair");
  r.field("domain", std::string(s.domain.tag()));
  r.field("jacobian", jacobian(A, B).to_string());
  r.flag("pair_ok", ok);
  return s.emit(r, verdict_code(ok));
}

int cmd_dep(Session& s, const std::string& a, const std::string& w) {
  BiPoly A = parse_bipoly(a, s.domain), W = parse_bipoly(w, s.domain);
  const BiPoly j = jacobian(A, W);
  Report r("dep");
  r.field("domain", std::string(s.domain.tag()));
  r.field("jacobian", j.to_string());
  r.flag("commutes", j.is_zero());
  return s.emit(r, verdict_code(j.is_zero()));
}

int in_a_report(Session& s, Report& r, bool commuting, const InAOutcome& o) {
  r.flag("commutes", commuting);
  add_in_a(r, o);
  const auto* res = std::get_if<InAResult>(&o);
  return s.emit(r, verdict_code(res && res->in_base_domain));
}

// Membership in Q(D)[A] also makes sense for w with coefficients in Q(D):
// when w does not parse over D it is read over the fraction field, A is
// lifted, and in_da is still judged against D.
template <class Elem, class Parse>
std::pair<Elem, Elem> parse_in_a_operands(Session& s, Report& r, const std::string& a,
                                          const std::string& w, Parse parse) {
  Elem A = parse(a, s.domain);
  try {
    return {A, parse(w, s.domain)};
  } catch (const Error& e) {
    if (e.code() != Errc::CoefficientNotInDomain || s.domain.is_field()) throw;
  }
  const Domain q = s.domain.fraction_field();
  r.field("w_domain", std::string(q.tag()));
  return {A.to_fraction_field(), parse(w, q)};
}

InAOutcome rebase(Domain base, InAOutcome o) {
  if (auto* res = std::get_if<InAResult>(&o); res && res->base != base)
    return InAResult::from_coefficients(base, res->coefficients);
  return o;
}

int cmd_in_a(Session& s, const std::string& a, const std::string& w) {
  Report r("in-a");
  r.field("domain", std::string(s.domain.tag()));
  auto [A, W] = parse_in_a_operands<BiPoly>(s, r, a, w, parse_bipoly);
  return in_a_report(s, r, commutes(A, W), rebase(s.domain, express_in_A(A, W)));
}

int cmd_clear(Session& s, const std::vector<std::string>& cs) {
  std::vector<Scalar> coeffs;
  for (const auto& c : cs) coeffs.push_back(parse_scalar(c, s.domain.fraction_field()));
  ClearedDenominators cd = clear_denominators(s.domain, coeffs);
  Report r("clear-denoms");
  r.field("domain", std::string(s.domain.tag()));
  r.array("coefficients", render_scalars(coeffs));
  r.field("clearing_denominator", cd.d.to_string());
  r.array("scaled", render_scalars(cd.scaled.coeffs()));
  return s.emit(r, kExitOk);
}

template <class Result>
int mate_report(Session& s, const char* kind, unsigned max_deg, const Result& res) {
  Report r(kind);
  r.field("domain", std::string(s.domain.tag()));
  r.field("max_deg", std::to_string(max_deg));
  r.field("mate", res.mate ? res.mate->to_string() : "none");
  r.flag("solvable_over_fraction_field", res.solvable_over_fraction_field);
  if (!res.note.empty()) r.field("note", res.note);
  return s.emit(r, verdict_code(res.mate.has_value()));
}

int cmd_mate(Session& s, const std::string& a, unsigned max_deg, std::size_t budget) {
  return mate_report(s, "mate-search", max_deg,
                     mate_search_bounded(parse_bipoly(a, s.domain), max_deg, {budget}));
}

int cmd_auto(Session& s, const std::string& action, const std::string& word,
             const std::string& arg) {
  InstanceFile inst = s.load(word);
  s.domain = inst.domain;
  TameAutomorphism g = tame_word(inst);
  if (arg.empty()) throw Error(Errc::InvalidInstance, "auto " + action + " needs a polynomial");
  BiPoly p = parse_bipoly(arg, s.domain);
  Report r("auto " + action);
  r.field("domain", std::string(s.domain.tag()));
  r.field("steps", std::to_string(g.word().size()));
  if (action == "apply") {
    r.field("image", apply_automorphism(g, p).to_string());
    return s.emit(r, kExitOk);
  }
  r.field("A", apply_automorphism(g, BiPoly::x(s.domain)).to_string());
  InAResult res = membership_via_automorphism(g, p);
  add_in_a(r, res);
  return s.emit(r, verdict_code(res.in_base_domain));
}

int cmd_weyl_auto(Session& s, const std::string& action, const std::string& word,
                  const std::string& arg) {
  InstanceFile inst = s.load(word);
  s.domain = inst.domain;
  WeylAutomorphism g = weyl_word(inst);
  if (arg.empty()) throw Error(Errc::InvalidInstance, "weyl auto " + action + " needs an element");
  WeylElement p = parse_weyl(arg, s.domain);
  Report r("weyl auto " + action);
  r.field("domain", std::string(s.domain.tag()));
  r.field("steps", std::to_string(g.word().size()));
  if (action == "apply") {
    r.field("image", weyl_apply(g, p).to_string());
    return s.emit(r, kExitOk);
  }
  r.field("A", weyl_apply(g, WeylElement::X(s.domain)).to_string());
  InAResult res = weyl_membership_via_automorphism(g, p);
  add_in_a(r, res);
  return s.emit(r, verdict_code(res.in_base_domain));
}

int cmd_cc_verify(Session& s, const std::string& path) {
  InstanceFile inst = s.load(path);
  s.domain = inst.domain;
  const std::string& a = need(inst.A, "A");
  const std::string& b = need(inst.B, "B");
  const std::string& w = need(inst.w, "w");
  Report r(inst.is_weyl() ? "weyl-cc-verify" : "cc-verify");
  r.field("domain", std::string(s.domain.tag()));
  CCVerdict v;
  std::optional<InAResult> conj;
  if (inst.is_weyl()) {
    WeylElement A = parse_weyl(a, s.domain), W = parse_weyl(w, s.domain);
    v = weyl_verify_cc_instance(A, parse_weyl(b, s.domain), W);
    if (!inst.steps.empty()) {
      WeylAutomorphism g = weyl_word(inst);
      if (!(weyl_apply(g, WeylElement::X(s.domain)) == A)) {
        throw Error(Errc::InvalidInstance, "the word does not map X to A");
      }
      if (v.commutes) conj = weyl_membership_via_automorphism(g, W);
    }
  } else {
    BiPoly A = parse_bipoly(a, s.domain), W = parse_bipoly(w, s.domain);
    v = verify_cc_instance(A, parse_bipoly(b, s.domain), W);
    if (!inst.steps.empty()) {
      TameAutomorphism g = tame_word(inst);
      if (!(apply_automorphism(g, BiPoly::x(s.domain)) == A)) {
        throw Error(Errc::InvalidInstance, "the word does not map x to A");
      }
      if (v.commutes) conj = membership_via_automorphism(g, W);
    }
  }
  add_verdict(r, v);
  if (conj) {
    r.array("conjugation_coefficients", render_scalars(conj->coefficients));
    if (!v.in_qa || !(v.in_qa->witness == conj->witness)) {
      throw Error(Errc::InternalContradiction,
                  "peeling and conjugation disagree on " + path + ": " + r.render(ReportFormat::Structured));
    }
  }
  const bool counterexample = v.pair_ok && v.commutes && !v.in_da;
  return s.emit(r, verdict_code(!counterexample));
}

int cmd_weyl_binary(Session& s, const std::string& op, const std::string& p,
                    const std::string& q) {
  Report r("weyl " + op);
  r.field("domain", std::string(s.domain.tag()));
  auto [P, Q] = op == "in-a" ? parse_in_a_operands<WeylElement>(s, r, p, q, parse_weyl)
                             : std::pair{parse_weyl(p, s.domain), parse_weyl(q, s.domain)};
  if (op == "mul") {
    r.field("product", (P * Q).to_string());
    return s.emit(r, kExitOk);
  }
  if (op == "comm") {
    r.field("commutator", commutator(P, Q).to_string());
    return s.emit(r, kExitOk);
  }
  if (op == "pair") {
    const bool ok = is_dixmier_pair(P, Q);
    r.field("commutator", commutator(P, Q).to_string());
    r.flag("pair_ok", ok);
    return s.emit(r, verdict_code(ok));
  }
  // in-a
  if (!commutator(P, Q).is_zero()) {
    r.flag("commutes", false);
    r.field("in_qa", "not-evaluated");
    return s.emit(r, kExitNegative);
  }
  return in_a_report(s, r, true, rebase(s.domain, weyl_express_in_A(P, Q)));
}

int cmd_weyl_useful(Session& s, const std::string& t, unsigned i) {
  UniPoly u = parse_unipoly(t, s.domain);
  WeylElement lhs = useful_equation(u, i);
  WeylElement rhs = commutator(in_Y(u), WeylElement::X(s.domain).pow(i));
  Report r("weyl useful");
  r.field("domain", std::string(s.domain.tag()));
  r.field("value", lhs.to_string());
  r.flag("matches_commutator", lhs == rhs);
  if (!(lhs == rhs)) {
    throw Error(Errc::InternalContradiction, "useful equation " + lhs.to_string() +
                                                 " differs from the commutator " + rhs.to_string());
  }
  return s.emit(r, kExitOk);
}

int cmd_golden(Session& s) {
  auto checks = run_golden_checks();
  bool all = true;
  for (const auto& c : checks) all = all && c.passed;
  return s.emit(golden_report(checks), verdict_code(all));
}

int cmd_fuzz(Session& s, GenConfig cfg, std::ostream& err) {
  cfg.domain = s.domain;
  CampaignReport rep = campaign(cfg);
  s.emit(rep.to_report(), kExitOk);
  if (rep.contradictions > 0) {
    for (const auto& inst : rep.instances) {
      for (const auto& line : inst.lines) {
        if (line.starts_with("CONTRADICTION")) err << "instance " << inst.index << ": " << line << '\n';
      }
    }
    return kExitContradiction;
  }
  return verdict_code(rep.failed == 0);
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Jacobian-pair, centralizer and Weyl-algebra toolkit", "ccjac"};
  app.fallthrough();
  app.require_subcommand(1);
  Globals g;
  app.add_option("--domain", g.domain_tag, "coefficient domain")
      ->check(CLI::IsMember({"int", "rat", "d0", "frac-d0"}))
      ->each([&](const std::string&) { g.domain_given = true; });
  app.add_option("--format", g.format, "report format")
      ->check(CLI::IsMember({"text", "structured"}));

  std::string a, b;
  std::vector<std::string> coeffs;
  unsigned max_deg = 0;
  std::size_t budget = MateSearchOptions{}.max_unknowns;
  std::string word, path, action, weyl_op;

  auto two = [&](CLI::App* c, const char* n1, const char* n2) {
    c->add_option(n1, a)->required();
    c->add_option(n2, b)->required();
  };
  auto* jac = app.add_subcommand("jac", "Jacobian of A and B");
  two(jac, "A", "B");
  auto* pair = app.add_subcommand("pair", "is Jac(A, B) a unit?");
  two(pair, "A", "B");
  auto* dep = app.add_subcommand("dep", "is Jac(A, w) zero?");
  two(dep, "A", "w");
  auto* in_a = app.add_subcommand("in-a", "decide w in Q(D)[A] and w in D[A]");
  two(in_a, "A", "w");
  auto* clear = app.add_subcommand("clear-denoms", "common denominator of coefficients");
  clear->add_option("coefficients", coeffs)->required();
  auto* mate = app.add_subcommand("mate-search", "bounded search for a Jacobian mate");
  mate->add_option("A", a)->required();
  mate->add_option("--max-deg", max_deg)->required();
  mate->add_option("--max-unknowns", budget);
  auto* autom = app.add_subcommand("auto", "tame automorphism words");
  autom->add_option("action", action)->required()->check(CLI::IsMember({"apply", "invert", "in-a"}));
  autom->add_option("p", a);
  autom->add_option("--word", word)->required();
  auto* cc = app.add_subcommand("cc-verify", "check an instance file");
  cc->add_option("file", path)->required();

  auto* weyl = app.add_subcommand("weyl", "first Weyl algebra");
  weyl->require_subcommand(1);
  std::vector<CLI::App*> weyl_binary;
  for (const char* op : {"mul", "comm", "pair", "in-a"}) {
    auto* c = weyl->add_subcommand(op);
    two(c, "P", "Q");
    weyl_binary.push_back(c);
  }
  weyl_binary[0]->description("normal-ordered product PQ");
  weyl_binary[1]->description("commutator PQ - QP");
  weyl_binary[2]->description("is [P, Q] a unit?");
  weyl_binary[3]->description("decide Q in Q(D)[P] and Q in D[P]");
  auto* wmate = weyl->add_subcommand("mate-search", "bounded search for a Dixmier mate");
  wmate->add_option("A", a)->required();
  wmate->add_option("--max-deg", max_deg)->required();
  wmate->add_option("--max-unknowns", budget);
  auto* wauto = weyl->add_subcommand("auto", "Weyl automorphism words");
  wauto->add_option("action", action)->required()->check(CLI::IsMember({"apply", "invert", "in-a"}));
  wauto->add_option("P", a);
  wauto->add_option("--word", word)->required();
  unsigned useful_i = 0;
  auto* useful = weyl->add_subcommand("useful", "sum_m C(i,m) X^(i-m) t^(m)(Y)");
  useful->add_option("t", a)->required();
  useful->add_option("i", useful_i)->required();

  auto* golden = app.add_subcommand("verify-paper-examples", "re-derive the worked examples");
  GenConfig cfg;
  auto* fuzz = app.add_subcommand("fuzz", "seeded random campaign");
  fuzz->add_option("--seed", cfg.seed);
  fuzz->add_option("--count", cfg.instance_count);
  fuzz->add_option("--word-length-max", cfg.word_length_max);
  fuzz->add_option("--shear-degree-max", cfg.shear_degree_max);
  fuzz->add_option("--coefficient-bound", cfg.coefficient_bound);
  fuzz->add_option("--p-degree-max", cfg.p_degree_max);
  fuzz->add_option("--image-degree-max", cfg.image_degree_max);
  fuzz->add_option("--image-size-max", cfg.image_size_max);

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
  }

  try {
    Session s(g, out);
    if (jac->parsed()) return cmd_jac(s, a, b);
    if (pair->parsed()) return cmd_pair(s, a, b);
    if (dep->parsed()) return cmd_dep(s, a, b);
    if (in_a->parsed()) return cmd_in_a(s, a, b);
    if (clear->parsed()) return cmd_clear(s, coeffs);
    if (mate->parsed()) return cmd_mate(s, a, max_deg, budget);
    if (autom->parsed()) {
      if (action == "invert") {
        InstanceFile inst = s.load(word);
        out << write_instance(word_instance(invert_automorphism(tame_word(inst))));
        return kExitOk;
      }
      return cmd_auto(s, action, word, a);
    }
    if (cc->parsed()) return cmd_cc_verify(s, path);
    if (weyl->parsed()) {
      for (auto* c : weyl_binary) {
        if (c->parsed()) return cmd_weyl_binary(s, c->get_name(), a, b);
      }
      if (wmate->parsed()) {
        return mate_report(s, "weyl mate-search", max_deg,
                           dixmier_mate_search_bounded(parse_weyl(a, s.domain), max_deg, {budget}));
      }
      if (wauto->parsed()) {
        if (action == "invert") {
          InstanceFile inst = s.load(word);
          out << write_instance(word_instance(weyl_invert(weyl_word(inst))));
          return kExitOk;
        }
        return cmd_weyl_auto(s, action, word, a);
      }
      if (useful->parsed()) return cmd_weyl_useful(s, a, useful_i);
    }
    if (golden->parsed()) return cmd_golden(s);
    if (fuzz->parsed()) return cmd_fuzz(s, cfg, err);
    err << app.help();
    return kExitUsage;
  } catch (const Error& e) {
    switch (e.code()) {
      case Errc::InternalContradiction: {
        err << "internal contradiction: " << e.what() << '\n' << "reproduce: ccjac";
        for (const auto& arg : args) err << ' ' << quote(arg);
        err << '\n';
        return kExitContradiction;
      }
      case Errc::NotCommuting:
        err << "error: " << e.what() << '\n';
        return kExitNegative;
      default:
        err << "error (" << errc_name(e.code()) << "): " << e.what() << '\n';
        return kExitUsage;
    }
  }
}

}  // namespace ccjac
