#include "ccjac/weyl.hpp"

#include <map>
#include <sstream>

#include "unit_system.hpp"

namespace ccjac {

// ---------------------------------------------------------------- element

WeylElement WeylElement::constant(const Scalar& c) { return monomial(c, 0, 0); }

WeylElement WeylElement::monomial(const Scalar& c, unsigned i, unsigned j) {
  TermMap t(c.domain());
  t.add_term(Monomial{i, j}, c);
  return WeylElement(std::move(t));
}

bool WeylElement::is_constant() const {
  return terms().empty() || (terms().size() == 1 && terms().begin()->first.degree() == 0);
}

Degree WeylElement::total_degree() const {
  return is_zero() ? Degree::neg_infinity() : Degree::of(terms().rbegin()->first.degree());
}

WeylElement WeylElement::to_fraction_field() const {
  TermMap out(domain().fraction_field());
  for (const auto& [m, c] : terms()) out.add_term(m, c.to_fraction());
  return WeylElement(std::move(out));
}

namespace {

/// C(j,k) C(i,k) k!
Integer reorder_coefficient(unsigned j, unsigned i, unsigned k) {
  Integer a, b, f;
  mpz_bin_uiui(a.get_mpz_t(), j, k);
  mpz_bin_uiui(b.get_mpz_t(), i, k);
  mpz_fac_ui(f.get_mpz_t(), k);
  return a * b * f;
}

}  // namespace

WeylElement weyl_mul(const WeylElement& p, const WeylElement& q) {
  p.term_map().check_same_domain(q.term_map());
  const Domain d = p.domain();
  TermMap out(d);
  // X^a Y^b * X^c Y^e = sum_k C(b,k) C(c,k) k! X^(a+c-k) Y^(b+e-k)
  std::map<std::tuple<unsigned, unsigned, unsigned>, Scalar> cache;
  for (const auto& [ml, cl] : p.terms()) {
    for (const auto& [mr, cr] : q.terms()) {
      const Scalar prod = cl * cr;
      const unsigned b = ml.second;
      const unsigned c = mr.first;
      const unsigned top = std::min(b, c);
      for (unsigned k = 0; k <= top; ++k) {
        Monomial m{ml.first + c - k, b + mr.second - k};
        if (k == 0) {
          out.add_term(m, prod);
          continue;
        }
        auto key = std::make_tuple(b, c, k);
        auto it = cache.find(key);
        if (it == cache.end()) {
          it = cache.emplace(key, Scalar::from_rational(d, Rational(reorder_coefficient(b, c, k))))
                   .first;
        }
        out.add_term(m, prod * it->second);
      }
    }
  }
  return WeylElement(std::move(out));
}

WeylElement operator*(const WeylElement& l, const WeylElement& r) { return weyl_mul(l, r); }

WeylElement WeylElement::pow(unsigned e) const {
  WeylElement result = constant(Scalar::one(domain()));
  WeylElement base = *this;
  while (e > 0) {
    if (e & 1u) result = result * base;
    e >>= 1u;
    if (e > 0) base = base * base;
  }
  return result;
}

WeylElement commutator(const WeylElement& p, const WeylElement& q) {
  p.term_map().check_same_domain(q.term_map());
  const Domain d = p.domain();
  TermMap out(d);
  // The k = 0 terms of PQ and QP cancel, so only the corrections remain:
  // [X^a Y^b, X^c Y^e] = sum_{k>=1} (C(b,k) C(c,k) - C(e,k) C(a,k)) k! X^(a+c-k) Y^(b+e-k)
  std::map<std::tuple<unsigned, unsigned, unsigned, unsigned, unsigned>, Scalar> cache;
  for (const auto& [ml, cl] : p.terms()) {
    for (const auto& [mr, cr] : q.terms()) {
      const unsigned a = ml.first, b = ml.second, c = mr.first, e = mr.second;
      const unsigned top = std::max(std::min(b, c), std::min(e, a));
      if (top == 0) continue;
      const Scalar prod = cl * cr;
      for (unsigned k = 1; k <= top; ++k) {
        Integer coef = 0;
        if (k <= std::min(b, c)) coef += reorder_coefficient(b, c, k);
        if (k <= std::min(e, a)) coef -= reorder_coefficient(e, a, k);
        if (coef == 0) continue;
        out.add_term(Monomial{a + c - k, b + e - k},
                     prod * Scalar::from_rational(d, Rational(coef)));
      }
    }
  }
  return WeylElement(std::move(out));
}

WeylElement in_Y(const UniPoly& t) {
  TermMap out(t.domain());
  for (std::size_t j = 0; j < t.coeffs().size(); ++j) {
    out.add_term(Monomial{0, static_cast<unsigned>(j)}, t.coeffs()[j]);
  }
  return WeylElement(std::move(out));
}

WeylElement in_X(const UniPoly& t) {
  TermMap out(t.domain());
  for (std::size_t i = 0; i < t.coeffs().size(); ++i) {
    out.add_term(Monomial{static_cast<unsigned>(i), 0}, t.coeffs()[i]);
  }
  return WeylElement(std::move(out));
}

WeylElement useful_equation(const UniPoly& t, unsigned i) {
  const Domain d = t.domain();
  TermMap out(d);
  UniPoly deriv = t;
  for (unsigned m = 1; m <= i; ++m) {
    deriv = deriv.derivative();
    if (deriv.is_zero()) break;
    Integer binom;
    mpz_bin_uiui(binom.get_mpz_t(), i, m);
    const Scalar factor = Scalar::from_rational(d, Rational(binom));
    for (std::size_t j = 0; j < deriv.coeffs().size(); ++j) {
      out.add_term(Monomial{i - m, static_cast<unsigned>(j)}, deriv.coeffs()[j] * factor);
    }
  }
  return WeylElement(std::move(out));
}

WeylElement eval_univariate(const UniPoly& u, const WeylElement& at) {
  if (u.domain() != at.domain()) {
    throw Error(Errc::DomainMismatch, "univariate polynomial over " +
                                          std::string(u.domain().tag()) +
                                          " evaluated at Weyl element over " +
                                          std::string(at.domain().tag()));
  }
  WeylElement acc(at.domain());
  const auto& cs = u.coeffs();
  for (auto it = cs.rbegin(); it != cs.rend(); ++it) {
    acc = acc * at;
    acc += WeylElement::constant(*it);
  }
  return acc;
}

BiPoly leading_form(const WeylElement& p) { return BiPoly(p.term_map().top_form()); }

bool is_dixmier_pair(const WeylElement& A, const WeylElement& B) {
  WeylElement c = commutator(A, B);
  return c.is_constant() && is_unit(A.domain(), c.coeff(0, 0));
}

WeylMateSearchResult dixmier_mate_search_bounded(const WeylElement& A, unsigned max_total_degree,
                                                 const MateSearchOptions& options) {
  const std::size_t unknowns =
      static_cast<std::size_t>(max_total_degree + 1) * (max_total_degree + 2) / 2;
  if (unknowns > options.max_unknowns) {
    throw Error(Errc::BoundTooLargeForBudget,
                "degree bound " + std::to_string(max_total_degree) + " needs " +
                    std::to_string(unknowns) + " unknowns (budget " +
                    std::to_string(options.max_unknowns) + ")");
  }
  const Domain d = A.domain();
  std::vector<Monomial> basis;
  std::vector<TermMap> images;
  for (unsigned deg = 0; deg <= max_total_degree; ++deg) {
    for (unsigned i = deg + 1; i-- > 0;) {
      Monomial m{i, deg - i};
      basis.push_back(m);
      images.push_back(
          commutator(A, WeylElement::monomial(Scalar::one(d), m.first, m.second)).term_map());
    }
  }
  auto sol = detail::solve_for_unit(d, images);
  WeylMateSearchResult out;
  out.solvable_over_fraction_field = sol.field_solvable;
  out.note = sol.note;
  if (!sol.solution) {
    const std::string bound = "no Dixmier mate of total degree <= " + std::to_string(max_total_degree);
    out.note = out.note.empty() ? bound : bound + " found: " + out.note;
    return out;
  }
  TermMap b(d);
  for (std::size_t k = 0; k < basis.size(); ++k) b.add_term(basis[k], (*sol.solution)[k]);
  WeylElement mate(std::move(b));
  if (!is_dixmier_pair(A, mate)) {
    throw Error(Errc::InternalContradiction,
                "Dixmier mate search produced B = " + mate.to_string() + " that is not a mate");
  }
  out.mate = std::move(mate);
  return out;
}

namespace {

/// Graded peeling, assuming [A, w] = 0 has been checked.
InAOutcome peel(const WeylElement& A, const WeylElement& w) {
  const Domain base = A.domain();
  const Domain field = base.fraction_field();
  const WeylElement a = A.to_fraction_field();
  WeylElement rest = w.to_fraction_field();
  const WeylElement target = rest;

  if (a.is_constant()) {
    if (!rest.is_constant()) {
      return NotInQA{PeelStage::NonConstantResidue, "A is constant but w is not"};
    }
    std::vector<Scalar> cs;
    if (!rest.is_zero()) cs.push_back(rest.coeff(0, 0));
    return InAResult::from_coefficients(base, std::move(cs));
  }

  const unsigned da = a.total_degree().value();
  std::vector<WeylElement> powers{WeylElement::constant(Scalar::one(field)), a};
  auto power = [&](unsigned r) -> const WeylElement& {
    while (powers.size() <= r) powers.push_back(powers.back() * a);
    return powers[r];
  };

  std::map<unsigned, Scalar> found;
  while (!rest.is_zero()) {
    const unsigned dw = rest.total_degree().value();
    if (dw % da != 0) {
      std::ostringstream os;
      os << "total degree " << dw << " of the residue is not a multiple of " << da;
      return NotInQA{PeelStage::DegreeIndivisible, os.str()};
    }
    const unsigned r = dw / da;
    const WeylElement& pr = power(r);
    auto c = constant_ratio(rest.term_map().top_form(), pr.term_map().top_form());
    if (!c) {
      std::ostringstream os;
      os << "leading form of the residue is not a constant multiple of that of A^" << r;
      return NotInQA{PeelStage::NonConstantQuotient, os.str()};
    }
    rest -= pr.scaled(*c);
    auto [it, inserted] = found.try_emplace(r, *c);
    if (!inserted) it->second += *c;
  }

  std::vector<Scalar> cs;
  if (!found.empty()) cs.assign(found.rbegin()->first + 1, Scalar::zero(field));
  for (auto& [r, c] : found) cs[r] = c;
  InAResult res = InAResult::from_coefficients(base, std::move(cs));
  if (eval_univariate(res.witness, a) != target) {
    throw Error(Errc::InternalContradiction,
                "graded peeling witness does not reproduce w: A = " + A.to_string() +
                    ", w = " + w.to_string());
  }
  return res;
}

}  // namespace

InAOutcome weyl_express_in_A(const WeylElement& A, const WeylElement& w) {
  A.term_map().check_same_domain(w.term_map());
  if (!commutator(A, w).is_zero()) {
    throw Error(Errc::NotCommuting, "[A, w] != 0 for A = " + A.to_string() +
                                        ", w = " + w.to_string());
  }
  return peel(A, w);
}

// ---------------------------------------------------------------- automorphisms

std::pair<WeylElement, WeylElement> weyl_step_images(Domain d, const WeylStep& step) {
  const WeylElement X = WeylElement::X(d);
  const WeylElement Y = WeylElement::Y(d);
  return std::visit(
      [&](const auto& s) -> std::pair<WeylElement, WeylElement> {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, ShearYW>) {
          return {X, Y + in_X(s.f)};
        } else if constexpr (std::is_same_v<T, ShearXW>) {
          return {X + in_Y(s.g), Y};
        } else if constexpr (std::is_same_v<T, UnitScale>) {
          return {X.scaled(s.lambda), Y.scaled(divide_exact(Scalar::one(d), s.lambda))};
        } else {
          return {X.scaled(s.m11) + Y.scaled(s.m12), X.scaled(s.m21) + Y.scaled(s.m22)};
        }
      },
      step);
}

namespace {

void check_weyl_step(Domain d, const WeylStep& step) {
  std::visit(
      [&](const auto& s) {
        using T = std::decay_t<decltype(s)>;
        auto in_domain = [&](const Scalar& v) {
          if (!belongs_to(d, v)) {
            throw Error(Errc::DomainMismatch,
                        v.to_string() + " is not in " + std::string(d.tag()));
          }
        };
        if constexpr (std::is_same_v<T, ShearYW>) {
          for (const auto& c : s.f.coeffs()) in_domain(c);
          if (s.f.domain() != d) throw Error(Errc::DomainMismatch, "shear over another domain");
        } else if constexpr (std::is_same_v<T, ShearXW>) {
          for (const auto& c : s.g.coeffs()) in_domain(c);
          if (s.g.domain() != d) throw Error(Errc::DomainMismatch, "shear over another domain");
        } else if constexpr (std::is_same_v<T, UnitScale>) {
          in_domain(s.lambda);
          if (!is_unit(d, s.lambda)) {
            throw Error(Errc::RelationViolation,
                        "scale " + s.lambda.to_string() + " is not a unit");
          }
        } else {
          for (const Scalar* v : {&s.m11, &s.m12, &s.m21, &s.m22}) in_domain(*v);
        }
      },
      step);
  auto [ix, iy] = weyl_step_images(d, step);
  if (commutator(iy, ix) != WeylElement::constant(Scalar::one(d))) {
    throw Error(Errc::RelationViolation,
                "step " + weyl_step_to_string(step) + " does not preserve [Y, X] = 1");
  }
}

WeylStep invert_weyl_step(Domain d, const WeylStep& step) {
  return std::visit(
      [&](const auto& s) -> WeylStep {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, ShearYW>) {
          return ShearYW{s.f.negated()};
        } else if constexpr (std::is_same_v<T, ShearXW>) {
          return ShearXW{s.g.negated()};
        } else if constexpr (std::is_same_v<T, UnitScale>) {
          return UnitScale{divide_exact(Scalar::one(d), s.lambda)};
        } else {
          return LinearSymplectic{s.m22, -s.m12, -s.m21, s.m11};
        }
      },
      step);
}

}  // namespace

WeylAutomorphism::WeylAutomorphism(Domain domain, std::vector<WeylStep> word) : domain_(domain) {
  for (auto& s : word) push(std::move(s));
}

void WeylAutomorphism::push(WeylStep step) {
  check_weyl_step(domain_, step);
  word_.push_back(std::move(step));
}

namespace {

std::string arg(const Scalar& c) {
  return c.needs_parens() ? "(" + c.to_string() + ")" : c.to_string();
}

}  // namespace

std::string weyl_step_to_string(const WeylStep& step) {
  return std::visit(
      [](const auto& s) -> std::string {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, ShearYW>) {
          return "shear-yw " + s.f.to_string('t');
        } else if constexpr (std::is_same_v<T, ShearXW>) {
          return "shear-xw " + s.g.to_string('t');
        } else if constexpr (std::is_same_v<T, UnitScale>) {
          return "scale " + arg(s.lambda);
        } else {
          return "symplectic " + arg(s.m11) + " " + arg(s.m12) + " " + arg(s.m21) + " " +
                 arg(s.m22);
        }
      },
      step);
}

WeylElement weyl_apply(const WeylAutomorphism& g, const WeylElement& p) {
  p.term_map().check_same_domain(WeylElement(g.domain()).term_map());
  const Domain d = g.domain();
  WeylElement out = p;
  for (const auto& step : g.word()) {
    auto [ix, iy] = weyl_step_images(d, step);
    std::vector<WeylElement> xp{WeylElement::constant(Scalar::one(d))};
    std::vector<WeylElement> yp{WeylElement::constant(Scalar::one(d))};
    WeylElement next(d);
    for (const auto& [m, c] : out.terms()) {
      while (xp.size() <= m.first) xp.push_back(xp.back() * ix);
      while (yp.size() <= m.second) yp.push_back(yp.back() * iy);
      next += (xp[m.first] * yp[m.second]).scaled(c);
    }
    out = std::move(next);
  }
  return out;
}

WeylAutomorphism weyl_invert(const WeylAutomorphism& g) {
  WeylAutomorphism inv(g.domain());
  for (auto it = g.word().rbegin(); it != g.word().rend(); ++it) {
    inv.push(invert_weyl_step(g.domain(), *it));
  }
  return inv;
}

InAResult weyl_membership_via_automorphism(const WeylAutomorphism& g, const WeylElement& w) {
  const Domain d = g.domain();
  const WeylElement A = weyl_apply(g, WeylElement::X(d));
  if (!commutator(A, w).is_zero()) {
    throw Error(Errc::NotCommuting, "[A, w] != 0 for A = " + A.to_string());
  }
  const WeylElement u = weyl_apply(weyl_invert(g), w);
  std::vector<Scalar> cs;
  for (const auto& [m, c] : u.terms()) {
    if (m.second != 0) {
      throw Error(Errc::InternalContradiction,
                  "g^-1(w) = " + u.to_string() + " is not in D[X] although [A, w] = 0; A = " +
                      A.to_string() + ", w = " + w.to_string());
    }
    if (cs.size() <= m.first) cs.resize(m.first + 1, Scalar::zero(d));
    cs[m.first] = c;
  }
  std::vector<Scalar> frac;
  frac.reserve(cs.size());
  for (const auto& c : cs) frac.push_back(c.to_fraction());
  return InAResult::from_coefficients(d, std::move(frac));
}

CCVerdict weyl_verify_cc_instance(const WeylElement& A, const WeylElement& B,
                                  const WeylElement& w) {
  A.term_map().check_same_domain(B.term_map());
  A.term_map().check_same_domain(w.term_map());
  CCVerdict v;
  v.pair_ok = is_dixmier_pair(A, B);
  v.commutes = commutator(A, w).is_zero();
  if (!v.commutes) {
    v.notes = "[A, w] != 0; premise fails";
    return v;
  }
  InAOutcome out = peel(A, w);
  if (auto* miss = std::get_if<NotInQA>(&out)) {
    if (v.pair_ok) {
      throw Error(Errc::InternalContradiction,
                  "Dixmier pair with commuting w outside Q(D)[A]: A = " + A.to_string() +
                      ", B = " + B.to_string() + ", w = " + w.to_string() + " (" +
                      miss->detail + ")");
    }
    v.not_in_qa = *miss;
    v.notes = "premise fails: (A, B) is not a Dixmier pair; w is not in Q(D)[A]";
    return v;
  }
  v.in_qa = std::get<InAResult>(std::move(out));
  v.in_da = v.in_qa->in_base_domain;
  if (!v.pair_ok) {
    v.notes = "premise fails: (A, B) is not a Dixmier pair";
  } else if (v.in_da) {
    v.notes = "conclusion holds: w in D[A]";
  } else {
    v.notes = "w in Q(D)[A] but not in D[A]: counterexample candidate";
  }
  return v;
}

Scalar dixmier_scale(const WeylElement& A, const WeylElement& B) {
  WeylElement c = commutator(B, A);
  if (!c.is_constant() || !is_unit(A.domain(), c.coeff(0, 0))) {
    throw Error(Errc::RelationViolation, "(A, B) is not a Dixmier pair");
  }
  return divide_exact(Scalar::one(A.domain()), c.coeff(0, 0));
}

}  // namespace ccjac
