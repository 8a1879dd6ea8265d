#include "ccjac/centralizer.hpp"

#include <map>
#include <sstream>

#include "unit_system.hpp"

namespace ccjac {

std::string_view peel_stage_name(PeelStage stage) {
  switch (stage) {
    case PeelStage::DegreeIndivisible: return "degree";
    case PeelStage::NonConstantQuotient: return "non-constant-quotient";
    case PeelStage::NonConstantResidue: return "non-constant-residue";
  }
  return "unknown";
}

// ---------------------------------------------------------------- denominators

namespace {

Integer lcm(const Integer& a, const Integer& b) {
  Integer r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

bool lifts_into_d0(const Scalar& d, std::span<const Scalar> coefficients) {
  if (!fraction_in_domain(d)) return false;
  for (const auto& c : coefficients) {
    if (!fraction_in_domain(d * c)) return false;
  }
  return true;
}

}  // namespace

ClearedDenominators clear_denominators(Domain base, std::span<const Scalar> coefficients) {
  const Domain field = base.fraction_field();
  for (const auto& c : coefficients) {
    if (c.domain() != field) {
      throw Error(Errc::DomainMismatch, "coefficient " + c.to_string() + " is not in " +
                                            std::string(field.tag()));
    }
  }
  std::vector<Scalar> scaled;
  if (base.is_field()) {
    scaled.assign(coefficients.begin(), coefficients.end());
    return {Scalar::one(base), UniPoly(base, std::move(scaled))};
  }

  if (base == Domain::integers()) {
    Integer d = 1;
    for (const auto& c : coefficients) d = lcm(d, std::get<Rational>(c.rep()).get_den());
    for (const auto& c : coefficients) {
      Rational v = std::get<Rational>(c.rep()) * d;
      scaled.emplace_back(Integer(v.get_num()));
    }
    return {Scalar(d), UniPoly(base, std::move(scaled))};
  }

  // d0: multiply the distinct monic denominators.
  std::vector<ParamPoly> dens;
  for (const auto& c : coefficients) {
    const auto& den = std::get<ParamFraction>(c.rep()).den();
    if (den.is_constant()) continue;
    bool seen = false;
    for (const auto& e : dens) seen = seen || e == den;
    if (!seen) dens.push_back(den);
  }
  ParamPoly prod(Rational(1));
  for (const auto& e : dens) prod = prod * e;

  static const Monomial lifts[] = {{0, 0}, {2, 0}, {1, 1}, {0, 2}, {3, 0}, {0, 3}, {4, 0}};
  Scalar d;
  for (Monomial m : lifts) {
    Scalar candidate(ParamFraction(prod * ParamPoly::monomial(1, m.first, m.second)));
    if (lifts_into_d0(candidate, coefficients)) {
      d = candidate;
      break;
    }
  }
  for (const auto& c : coefficients) scaled.push_back(*fraction_in_domain(d * c));
  return {*fraction_in_domain(d), UniPoly(base, std::move(scaled))};
}

ClearedDenominators clear_denominators(const InAResult& res) {
  return clear_denominators(res.base, res.coefficients);
}

InAResult InAResult::from_coefficients(Domain base, std::vector<Scalar> coefficients) {
  InAResult r;
  r.base = base;
  r.witness = UniPoly(base.fraction_field(), coefficients);
  // Keep the coefficient list aligned with the trimmed witness.
  coefficients.resize(r.witness.coeffs().size(), Scalar::zero(base.fraction_field()));
  r.coefficients = std::move(coefficients);
  r.in_base_domain = true;
  if (!base.is_field()) {
    for (const auto& c : r.coefficients) {
      r.in_base_domain = r.in_base_domain && fraction_in_domain(c).has_value();
    }
  }
  r.clearing_denominator = clear_denominators(base, r.coefficients).d;
  return r;
}

// ---------------------------------------------------------------- predicates

bool is_jacobian_pair(const BiPoly& A, const BiPoly& B) {
  BiPoly j = jacobian(A, B);
  return j.is_constant() && is_unit(A.domain(), eval_at_origin(j));
}

bool commutes(const BiPoly& A, const BiPoly& w) { return jacobian(A, w).is_zero(); }

// ---------------------------------------------------------------- peeling

namespace {

/// Terms of p with y-exponent `row`, re-keyed by their x-exponent.
TermMap y_row(const BiPoly& p, unsigned row) {
  TermMap out(p.domain());
  for (const auto& [m, c] : p.terms()) {
    if (m.second == row) out.add_term(Monomial{m.first, 0}, c);
  }
  return out;
}

unsigned y_degree(const BiPoly& p) {
  unsigned d = 0;
  for (const auto& [m, c] : p.terms()) d = std::max(d, m.second);
  return d;
}

}  // namespace

InAOutcome express_in_A(const BiPoly& A, const BiPoly& w) {
  A.term_map().check_same_domain(w.term_map());
  const Domain base = A.domain();
  const Domain field = base.fraction_field();
  BiPoly a = A.to_fraction_field();
  BiPoly rest = w.to_fraction_field();
  const BiPoly target = rest;

  if (a.is_constant()) {
    if (!rest.is_constant()) {
      return NotInQA{PeelStage::NonConstantResidue, "A is constant but w is not"};
    }
    std::vector<Scalar> cs;
    if (!rest.is_zero()) cs.push_back(eval_at_origin(rest));
    return InAResult::from_coefficients(base, std::move(cs));
  }

  bool swapped = false;
  if (y_degree(a) == 0) {
    a = a.swapped();
    rest = rest.swapped();
    swapped = true;
  }
  const unsigned t = y_degree(a);
  std::vector<BiPoly> powers{BiPoly::constant(Scalar::one(field)), a};
  auto power = [&](unsigned r) -> const BiPoly& {
    while (powers.size() <= r) powers.push_back(powers.back() * a);
    return powers[r];
  };

  std::map<unsigned, Scalar> found;
  while (!rest.is_zero()) {
    const unsigned s = y_degree(rest);
    if (s % t != 0) {
      std::ostringstream os;
      os << (swapped ? "x" : "y") << "-degree " << s << " of the residue is not a multiple of "
         << t;
      return NotInQA{PeelStage::DegreeIndivisible, os.str()};
    }
    const unsigned r = s / t;
    const BiPoly& pr = power(r);
    auto c = constant_ratio(y_row(rest, s), y_row(pr, s));
    if (!c) {
      std::ostringstream os;
      os << "leading coefficient of the residue is not a constant multiple of that of A^" << r;
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
  if (eval_univariate(res.witness, A.to_fraction_field()) != target) {
    throw Error(Errc::InternalContradiction,
                "peeling witness does not reproduce w: A = " + A.to_string() +
                    ", w = " + w.to_string());
  }
  return res;
}

// ---------------------------------------------------------------- mate search

MateSearchResult mate_search_bounded(const BiPoly& A, unsigned max_total_degree,
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
      images.push_back(jacobian(A, BiPoly::monomial(Scalar::one(d), m.first, m.second)).term_map());
    }
  }
  auto sol = detail::solve_for_unit(d, images);
  MateSearchResult out;
  out.solvable_over_fraction_field = sol.field_solvable;
  out.note = sol.note;
  if (!sol.solution) {
    const std::string bound = "no mate of total degree <= " + std::to_string(max_total_degree);
    out.note = out.note.empty() ? bound : bound + " found: " + out.note;
    return out;
  }
  TermMap b(d);
  for (std::size_t k = 0; k < basis.size(); ++k) b.add_term(basis[k], (*sol.solution)[k]);
  BiPoly mate(std::move(b));
  if (!is_jacobian_pair(A, mate)) {
    throw Error(Errc::InternalContradiction,
                "mate search produced B = " + mate.to_string() + " that is not a mate");
  }
  out.mate = std::move(mate);
  return out;
}

// ---------------------------------------------------------------- tame words

namespace {

void check_step(Domain d, const TameStep& step) {
  std::visit(
      [&](const auto& s) {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, AffineUnit>) {
          for (const Scalar* v : {&s.m11, &s.m12, &s.m21, &s.m22, &s.t1, &s.t2}) {
            if (!belongs_to(d, *v)) {
              throw Error(Errc::DomainMismatch,
                          "affine entry " + v->to_string() + " is not in " + std::string(d.tag()));
            }
          }
          Scalar det = s.m11 * s.m22 - s.m12 * s.m21;
          if (!is_unit(d, det)) {
            throw Error(Errc::NotInvertible,
                        "affine determinant " + det.to_string() + " is not a unit");
          }
        } else {
          if (s.f.domain() != d) {
            throw Error(Errc::DomainMismatch, "shear polynomial over " +
                                                  std::string(s.f.domain().tag()) +
                                                  " in a word over " + std::string(d.tag()));
          }
          for (const auto& c : s.f.coeffs()) {
            if (!belongs_to(d, c)) {
              throw Error(Errc::DomainMismatch,
                          "shear coefficient " + c.to_string() + " is not in " + std::string(d.tag()));
            }
          }
        }
      },
      step);
}

std::pair<BiPoly, BiPoly> step_images(Domain d, const TameStep& step) {
  const BiPoly x = BiPoly::x(d);
  const BiPoly y = BiPoly::y(d);
  return std::visit(
      [&](const auto& s) -> std::pair<BiPoly, BiPoly> {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, AffineUnit>) {
          return {x.scaled(s.m11) + y.scaled(s.m12) + BiPoly::constant(s.t1),
                  x.scaled(s.m21) + y.scaled(s.m22) + BiPoly::constant(s.t2)};
        } else if constexpr (std::is_same_v<T, ShearX>) {
          return {x + eval_univariate(s.f, y), y};
        } else {
          return {x, y + eval_univariate(s.f, x)};
        }
      },
      step);
}

TameStep invert_step(const TameStep& step) {
  return std::visit(
      [](const auto& s) -> TameStep {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, AffineUnit>) {
          const Domain d = s.m11.domain();
          Scalar inv = divide_exact(Scalar::one(d), s.m11 * s.m22 - s.m12 * s.m21);
          Scalar n11 = s.m22 * inv, n12 = -s.m12 * inv, n21 = -s.m21 * inv, n22 = s.m11 * inv;
          return AffineUnit{n11, n12, n21, n22, -(n11 * s.t1 + n12 * s.t2),
                            -(n21 * s.t1 + n22 * s.t2)};
        } else {
          return T{s.f.negated()};
        }
      },
      step);
}

}  // namespace

TameAutomorphism::TameAutomorphism(Domain domain, std::vector<TameStep> word) : domain_(domain) {
  for (auto& s : word) push(std::move(s));
}

void TameAutomorphism::push(TameStep step) {
  check_step(domain_, step);
  word_.push_back(std::move(step));
}

namespace {

// Step arguments are separated by spaces, so multi-term scalars are grouped.
std::string arg(const Scalar& c) {
  return c.needs_parens() ? "(" + c.to_string() + ")" : c.to_string();
}

}  // namespace

std::string step_to_string(const TameStep& step) {
  return std::visit(
      [](const auto& s) -> std::string {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, AffineUnit>) {
          return "affine " + arg(s.m11) + " " + arg(s.m12) + " " + arg(s.m21) + " " +
                 arg(s.m22) + " " + arg(s.t1) + " " + arg(s.t2);
        } else if constexpr (std::is_same_v<T, ShearX>) {
          return "shear-x " + s.f.to_string('t');
        } else {
          return "shear-y " + s.f.to_string('t');
        }
      },
      step);
}

BiPoly apply_automorphism(const TameAutomorphism& g, const BiPoly& p) {
  p.term_map().check_same_domain(BiPoly(g.domain()).term_map());
  BiPoly out = p;
  for (const auto& step : g.word()) {
    auto [ix, iy] = step_images(g.domain(), step);
    out = substitute(out, ix, iy);
  }
  return out;
}

TameAutomorphism invert_automorphism(const TameAutomorphism& g) {
  TameAutomorphism inv(g.domain());
  for (auto it = g.word().rbegin(); it != g.word().rend(); ++it) inv.push(invert_step(*it));
  return inv;
}

InAResult membership_via_automorphism(const TameAutomorphism& g, const BiPoly& w) {
  const Domain d = g.domain();
  const BiPoly A = apply_automorphism(g, BiPoly::x(d));
  if (!commutes(A, w)) {
    throw Error(Errc::NotCommuting, "Jac(A, w) != 0 for A = " + A.to_string());
  }
  const BiPoly u = apply_automorphism(invert_automorphism(g), w);
  std::vector<Scalar> cs;
  for (const auto& [m, c] : u.terms()) {
    if (m.second != 0) {
      throw Error(Errc::InternalContradiction,
                  "g^-1(w) = " + u.to_string() + " is not in D[x] although Jac(A, w) = 0; A = " +
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

// ---------------------------------------------------------------- verdicts

CCVerdict verify_cc_instance(const BiPoly& A, const BiPoly& B, const BiPoly& w) {
  A.term_map().check_same_domain(B.term_map());
  A.term_map().check_same_domain(w.term_map());
  CCVerdict v;
  v.pair_ok = is_jacobian_pair(A, B);
  v.commutes = commutes(A, w);
  if (!v.commutes) {
    v.notes = "Jac(A, w) != 0; premise fails";
    return v;
  }
  InAOutcome out = express_in_A(A, w);
  if (auto* miss = std::get_if<NotInQA>(&out)) {
    if (v.pair_ok) {
      throw Error(Errc::InternalContradiction,
                  "Jacobian pair with commuting w outside Q(D)[A]: A = " + A.to_string() +
                      ", B = " + B.to_string() + ", w = " + w.to_string() + " (" +
                      miss->detail + ")");
    }
    v.not_in_qa = *miss;
    v.notes = "premise fails: (A, B) is not a Jacobian pair; w is not in Q(D)[A]";
    return v;
  }
  v.in_qa = std::get<InAResult>(std::move(out));
  v.in_da = v.in_qa->in_base_domain;
  if (!v.pair_ok) {
    v.notes = "premise fails: (A, B) is not a Jacobian pair";
  } else if (v.in_da) {
    v.notes = "conclusion holds: w in D[A]";
  } else {
    v.notes = "w in Q(D)[A] but not in D[A]: counterexample candidate";
  }
  return v;
}

}  // namespace ccjac
