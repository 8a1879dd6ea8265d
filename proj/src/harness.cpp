#include "ccjac/harness.hpp"

#include <array>
#include <sstream>

#include "ccjac/error.hpp"

namespace ccjac {

void GenConfig::validate() const {
  auto need = [](unsigned v, const char* name) {
    if (v == 0) throw Error(Errc::InvalidInstance, std::string(name) + " must be positive");
  };
  need(word_length_max, "word_length_max");
  need(shear_degree_max, "shear_degree_max");
  need(coefficient_bound, "coefficient_bound");
  need(p_degree_max, "p_degree_max");
  need(image_degree_max, "image_degree_max");
  need(image_size_max, "image_size_max");
}

// ---------------------------------------------------------------- rng

Rng Rng::for_instance(std::uint64_t seed, std::uint64_t index) {
  // splitmix64 finaliser over (seed, index)
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return Rng(z ^ (z >> 31));
}

std::uint64_t Rng::below(std::uint64_t n) {
  // rejection sampling keeps the draw unbiased
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
  std::uint64_t v;
  do {
    v = next();
  } while (v >= limit);
  return v % n;
}

long Rng::between(long lo, long hi) {
  return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo) + 1));
}

// ---------------------------------------------------------------- scalars

namespace {

constexpr std::array<Monomial, 6> kD0Monomials = {
    Monomial{0, 0}, Monomial{2, 0}, Monomial{1, 1}, Monomial{0, 2}, Monomial{3, 0}, Monomial{0, 3}};

Rational ratio(long n, long d) {
  Rational q(n, d);
  q.canonicalize();
  return q;
}

long nonzero_between(Rng& rng, long bound) {
  const long v = rng.between(1, bound);
  return rng.coin() ? -v : v;
}

ParamPoly random_d0(Rng& rng, long bound) {
  ParamPoly p;
  const unsigned terms = static_cast<unsigned>(rng.between(1, 2));
  for (unsigned k = 0; k < terms; ++k) {
    const Monomial m = kD0Monomials[rng.below(kD0Monomials.size())];
    p += ParamPoly::monomial(Rational(rng.between(-bound, bound)), m.first, m.second);
  }
  return p;
}

}  // namespace

Scalar random_scalar(Rng& rng, const GenConfig& cfg, bool nonzero) {
  const long bound = cfg.coefficient_bound;
  const Domain d = cfg.domain;
  for (;;) {
    Scalar s = Scalar::zero(d);
    switch (d.kind()) {
      case DomainKind::IntegerRing:
        s = Scalar::from_int(d, rng.between(-bound, bound));
        break;
      case DomainKind::RationalField:
        s = Scalar::from_rational(d, ratio(rng.between(-bound, bound), rng.between(1, bound)));
        break;
      case DomainKind::ParamSubring:
        s = Scalar(random_d0(rng, bound));
        break;
      case DomainKind::ParamFractionField: {
        ParamPoly num = random_d0(rng, bound);
        ParamPoly den = rng.below(4) == 0 ? ParamPoly::monomial(1, 2, 0)
                                          : ParamPoly(Rational(rng.between(1, bound)));
        s = Scalar(ParamFraction(std::move(num), std::move(den)));
        break;
      }
    }
    if (!nonzero || !s.is_zero()) return s;
  }
}

Scalar random_unit(Rng& rng, const GenConfig& cfg) {
  const Domain d = cfg.domain;
  switch (d.kind()) {
    case DomainKind::IntegerRing:
      return Scalar::from_int(d, rng.coin() ? 1 : -1);
    case DomainKind::ParamSubring:
      return Scalar::from_rational(
          d, ratio(nonzero_between(rng, cfg.coefficient_bound), rng.between(1, cfg.coefficient_bound)));
    default:
      return random_scalar(rng, cfg, true);
  }
}

UniPoly random_unipoly(Rng& rng, const GenConfig& cfg, unsigned max_degree) {
  std::vector<Scalar> cs;
  for (unsigned i = 0; i <= max_degree; ++i) cs.push_back(random_scalar(rng, cfg));
  return UniPoly(cfg.domain, std::move(cs));
}

BiPoly random_bipoly(Rng& rng, const GenConfig& cfg, unsigned max_total_degree) {
  BiPoly p(cfg.domain);
  const unsigned terms = static_cast<unsigned>(rng.between(1, 5));
  for (unsigned k = 0; k < terms; ++k) {
    const unsigned deg = static_cast<unsigned>(rng.between(0, max_total_degree));
    const unsigned i = static_cast<unsigned>(rng.between(0, deg));
    p += BiPoly::monomial(random_scalar(rng, cfg), i, deg - i);
  }
  return p;
}

WeylElement random_weyl(Rng& rng, const GenConfig& cfg, unsigned max_total_degree) {
  WeylElement p(cfg.domain);
  const unsigned terms = static_cast<unsigned>(rng.between(1, 5));
  for (unsigned k = 0; k < terms; ++k) {
    const unsigned deg = static_cast<unsigned>(rng.between(0, max_total_degree));
    const unsigned i = static_cast<unsigned>(rng.between(0, deg));
    p += WeylElement::monomial(random_scalar(rng, cfg), i, deg - i);
  }
  return p;
}

// ---------------------------------------------------------------- words

namespace {

constexpr int kRedraws = 8;

unsigned degree_of(const Degree& d) { return d.is_finite() ? d.value() : 0; }

std::size_t size_of(const TermMap& t) {
  std::size_t n = 0;
  for (const auto& [m, c] : t.terms()) {
    if (const auto* p = std::get_if<ParamPoly>(&c.rep())) {
      n += p->terms().size();
    } else if (const auto* f = std::get_if<ParamFraction>(&c.rep())) {
      n += f->num().terms().size() + f->den().terms().size();
    } else {
      ++n;
    }
  }
  return n;
}

template <class E>
bool within_bounds(const E& A, const E& B, const GenConfig& cfg) {
  return degree_of(A.total_degree()) <= cfg.image_degree_max &&
         degree_of(B.total_degree()) <= cfg.image_degree_max &&
         size_of(A.term_map()) <= cfg.image_size_max && size_of(B.term_map()) <= cfg.image_size_max;
}

TameStep random_tame_step(Rng& rng, const GenConfig& cfg) {
  const Domain d = cfg.domain;
  switch (rng.below(3)) {
    case 0: {
      // [[u1, 0], [0, u2]] * [[1, k], [0, 1]] * [[1, 0], [l, 1]]
      const Scalar u1 = random_unit(rng, cfg), u2 = random_unit(rng, cfg);
      const Scalar k = random_scalar(rng, cfg), l = random_scalar(rng, cfg);
      const Scalar one = Scalar::one(d);
      return AffineUnit{u1 * (one + k * l), u1 * k, u2 * l, u2,
                        random_scalar(rng, cfg), random_scalar(rng, cfg)};
    }
    case 1:
      return ShearX{random_unipoly(rng, cfg, static_cast<unsigned>(rng.between(1, cfg.shear_degree_max)))};
    default:
      return ShearY{random_unipoly(rng, cfg, static_cast<unsigned>(rng.between(1, cfg.shear_degree_max)))};
  }
}

WeylStep random_weyl_step(Rng& rng, const GenConfig& cfg) {
  const Domain d = cfg.domain;
  switch (rng.below(4)) {
    case 0: {
      const Scalar k = random_scalar(rng, cfg), l = random_scalar(rng, cfg);
      const Scalar one = Scalar::one(d);
      return LinearSymplectic{one + k * l, k, l, one};
    }
    case 1:
      return UnitScale{random_unit(rng, cfg)};
    case 2:
      return ShearXW{random_unipoly(rng, cfg, static_cast<unsigned>(rng.between(1, cfg.shear_degree_max)))};
    default:
      return ShearYW{random_unipoly(rng, cfg, static_cast<unsigned>(rng.between(1, cfg.shear_degree_max)))};
  }
}

}  // namespace

TamePair gen_tame_pair(Rng& rng, const GenConfig& cfg) {
  const Domain d = cfg.domain;
  TamePair out{TameAutomorphism(d), BiPoly::x(d), BiPoly::y(d)};
  const auto length = rng.below(cfg.word_length_max + 1);
  for (std::uint64_t s = 0; s < length; ++s) {
    for (int attempt = 0; attempt < kRedraws; ++attempt) {
      TameAutomorphism one(d);
      one.push(random_tame_step(rng, cfg));
      BiPoly A = apply_automorphism(one, out.A);
      BiPoly B = apply_automorphism(one, out.B);
      if (!within_bounds(A, B, cfg)) continue;
      out.g.push(one.word().front());
      out.A = std::move(A);
      out.B = std::move(B);
      break;
    }
  }
  return out;
}

CentralizerElement gen_centralizer_element(Rng& rng, const BiPoly& A, const GenConfig& cfg) {
  UniPoly p = random_unipoly(rng, cfg, static_cast<unsigned>(rng.between(0, cfg.p_degree_max)));
  BiPoly w = eval_univariate(p, A);
  return {std::move(w), std::move(p)};
}

WeylPair gen_weyl_pair(Rng& rng, const GenConfig& cfg) {
  const Domain d = cfg.domain;
  WeylPair out{WeylAutomorphism(d), WeylElement::X(d), WeylElement::Y(d)};
  const auto length = rng.below(cfg.word_length_max + 1);
  for (std::uint64_t s = 0; s < length; ++s) {
    for (int attempt = 0; attempt < kRedraws; ++attempt) {
      WeylAutomorphism one(d);
      one.push(random_weyl_step(rng, cfg));
      WeylElement A = weyl_apply(one, out.A);
      WeylElement B = weyl_apply(one, out.B);
      if (!within_bounds(A, B, cfg)) continue;
      out.g.push(one.word().front());
      out.A = std::move(A);
      out.B = std::move(B);
      break;
    }
  }
  return out;
}

WeylCentralizerElement gen_weyl_centralizer_element(Rng& rng, const WeylElement& A,
                                                    const GenConfig& cfg) {
  UniPoly p = random_unipoly(rng, cfg, static_cast<unsigned>(rng.between(0, cfg.p_degree_max)));
  WeylElement w = eval_univariate(p, A);
  return {std::move(w), std::move(p)};
}

// ---------------------------------------------------------------- campaign

namespace {

std::string coeff_list(const UniPoly& p) {
  std::string out = "[";
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
    if (i) out += ", ";
    out += p.coeffs()[i].to_string();
  }
  return out + "]";
}

template <class Word, class ToString>
std::string word_text(const Word& g, ToString to_string) {
  std::string out = "[";
  for (std::size_t i = 0; i < g.word().size(); ++i) {
    if (i) out += "; ";
    out += to_string(g.word()[i]);
  }
  return out + "]";
}

struct Checker {
  InstanceOutcome& out;
  std::string repro;

  void fail(const std::string& what) {
    out.passed = false;
    out.lines.push_back("FAIL " + what + " | " + repro);
  }
  void contradiction(const std::string& what) {
    out.passed = false;
    out.contradiction = true;
    out.lines.push_back("CONTRADICTION " + what + " | " + repro);
  }
};

void run_tame(Rng& rng, const GenConfig& cfg, InstanceOutcome& out) {
  TamePair pair = gen_tame_pair(rng, cfg);
  CentralizerElement ce = gen_centralizer_element(rng, pair.A, cfg);
  Checker check{out, "domain " + std::string(cfg.domain.tag()) +
                         ", word " + word_text(pair.g, step_to_string) + ", A = " +
                         pair.A.to_string() + ", B = " + pair.B.to_string() +
                         ", p = " + coeff_list(ce.p)};
  try {
    const UniPoly expected = ce.p.to_fraction_field();
    CCVerdict v = verify_cc_instance(pair.A, pair.B, ce.w);
    if (!v.pair_ok) return check.fail("tame: (g(x), g(y)) is not a Jacobian pair");
    if (!v.commutes) return check.fail("tame: Jac(A, p(A)) != 0");
    if (!v.in_da) return check.contradiction("tame: automorphism instance with w not in D[A]");
    if (!(v.in_qa->witness == expected)) {
      return check.fail("tame: peeling gave " + coeff_list(v.in_qa->witness));
    }
    InAResult conj = membership_via_automorphism(pair.g, ce.w);
    if (!(conj.witness == v.in_qa->witness)) {
      return check.fail("tame: conjugation gave " + coeff_list(conj.witness));
    }
    out.lines.push_back("tame ok deg(A) " + pair.A.total_degree().to_string() +
                        " deg(w) " + ce.w.total_degree().to_string() + " coefficients " +
                        coeff_list(ce.p));
  } catch (const Error& e) {
    if (e.code() == Errc::InternalContradiction) return check.contradiction(e.what());
    check.fail(std::string("tame: ") + e.what());
  }
}

void run_weyl(Rng& rng, const GenConfig& cfg, InstanceOutcome& out) {
  WeylPair pair = gen_weyl_pair(rng, cfg);
  WeylCentralizerElement ce = gen_weyl_centralizer_element(rng, pair.A, cfg);
  Checker check{out, "domain " + std::string(cfg.domain.tag()) + ", word " +
                         word_text(pair.g, weyl_step_to_string) + ", A = " + pair.A.to_string() +
                         ", B = " + pair.B.to_string() + ", p = " + coeff_list(ce.p)};
  try {
    const UniPoly expected = ce.p.to_fraction_field();
    CCVerdict v = weyl_verify_cc_instance(pair.A, pair.B, ce.w);
    if (!v.pair_ok) return check.fail("weyl: (g(X), g(Y)) is not a Dixmier pair");
    if (!v.commutes) return check.fail("weyl: [A, p(A)] != 0");
    if (!v.in_da) return check.contradiction("weyl: automorphism instance with w not in D[A]");
    if (!(v.in_qa->witness == expected)) {
      return check.fail("weyl: peeling gave " + coeff_list(v.in_qa->witness));
    }
    InAResult conj = weyl_membership_via_automorphism(pair.g, ce.w);
    if (!(conj.witness == v.in_qa->witness)) {
      return check.fail("weyl: conjugation gave " + coeff_list(conj.witness));
    }
    out.lines.push_back("weyl ok deg(A) " + pair.A.total_degree().to_string() +
                        " deg(w) " + ce.w.total_degree().to_string() + " coefficients " +
                        coeff_list(ce.p));
  } catch (const Error& e) {
    if (e.code() == Errc::InternalContradiction) return check.contradiction(e.what());
    check.fail(std::string("weyl: ") + e.what());
  }
}

/// A = c + m*y with m not a unit has no mate; w = e + k*y lies in Q(D)[A]
/// but, with k/m outside D, not in D[A].
void run_control(Rng& rng, const GenConfig& cfg, InstanceOutcome& out) {
  const Domain d = cfg.domain;
  Scalar m = Scalar::zero(d), k = Scalar::zero(d);
  if (d == Domain::integers()) {
    const long mv = rng.between(2, static_cast<long>(cfg.coefficient_bound) + 1);
    long kv;
    do {
      kv = nonzero_between(rng, static_cast<long>(cfg.coefficient_bound) + 2);
    } while (kv % mv == 0);
    m = Scalar::from_int(d, rng.coin() ? mv : -mv);
    k = Scalar::from_int(d, kv);
  } else {
    m = Scalar(ParamPoly::monomial(Rational(nonzero_between(rng, cfg.coefficient_bound)), 2, 0));
    k = Scalar::from_int(d, nonzero_between(rng, cfg.coefficient_bound));
  }
  const BiPoly A = BiPoly::constant(random_scalar(rng, cfg)) + BiPoly::y(d).scaled(m);
  const BiPoly B = random_bipoly(rng, cfg, 3);
  const BiPoly w = BiPoly::constant(random_scalar(rng, cfg)) + BiPoly::y(d).scaled(k);
  Checker check{out, "domain " + std::string(d.tag()) + ", A = " + A.to_string() +
                         ", B = " + B.to_string() + ", w = " + w.to_string()};
  try {
    CCVerdict v = verify_cc_instance(A, B, w);
    if (v.pair_ok) return check.fail("control: c + m*y with m not a unit accepted as a pair");
    if (!v.commutes || !v.in_qa) return check.fail("control: w not found in Q(D)[A]");
    if (v.in_da) return check.fail("control: k/m reported inside D");
    MateSearchResult mate = mate_search_bounded(A, 3);
    if (mate.mate) return check.fail("control: mate found: " + mate.mate->to_string());
    out.lines.push_back("control ok A = " + A.to_string() + " coefficients " +
                        coeff_list(v.in_qa->witness));
  } catch (const Error& e) {
    if (e.code() == Errc::InternalContradiction) return check.contradiction(e.what());
    check.fail(std::string("control: ") + e.what());
  }
}

}  // namespace

CampaignReport campaign(const GenConfig& cfg) {
  cfg.validate();
  CampaignReport rep;
  rep.config = cfg;
  const bool has_non_units = !cfg.domain.is_field();
  for (std::size_t i = 0; i < cfg.instance_count; ++i) {
    InstanceOutcome out;
    out.index = i;
    Rng rng = Rng::for_instance(cfg.seed, i);
    run_tame(rng, cfg, out);
    run_weyl(rng, cfg, out);
    if (has_non_units) run_control(rng, cfg, out);
    if (out.passed) ++rep.passed; else ++rep.failed;
    if (out.contradiction) ++rep.contradictions;
    rep.instances.push_back(std::move(out));
  }
  return rep;
}

Report CampaignReport::to_report() const {
  Report r("fuzz");
  r.field("seed", std::to_string(config.seed));
  r.field("count", std::to_string(config.instance_count));
  r.field("domain", std::string(config.domain.tag()));
  r.field("word_length_max", std::to_string(config.word_length_max));
  r.field("shear_degree_max", std::to_string(config.shear_degree_max));
  r.field("coefficient_bound", std::to_string(config.coefficient_bound));
  r.field("p_degree_max", std::to_string(config.p_degree_max));
  r.field("image_degree_max", std::to_string(config.image_degree_max));
  r.field("image_size_max", std::to_string(config.image_size_max));
  r.field("preamble",
          "pairs come from random tame words, so every pair is an automorphism pair; "
          "no generator of Jacobian pairs that are not automorphisms is known, so that case "
          "is not exercised");
  for (const auto& inst : instances) {
    r.array("instance " + std::to_string(inst.index), inst.lines);
  }
  r.field("passed", std::to_string(passed));
  r.field("failed", std::to_string(failed));
  r.field("contradictions", std::to_string(contradictions));
  return r;
}

}  // namespace ccjac
