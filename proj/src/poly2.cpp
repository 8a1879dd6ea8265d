#include "ccjac/poly2.hpp"

#include <sstream>

namespace ccjac {

// ---------------------------------------------------------------- UniPoly

UniPoly::UniPoly(Domain domain, std::vector<Scalar> coeffs)
    : domain_(domain), coeffs_(std::move(coeffs)) {
  for (const auto& c : coeffs_) {
    if (c.domain() != domain_) {
      throw Error(Errc::DomainMismatch, "univariate coefficient " + c.to_string() +
                                            " is not in " + std::string(domain_.tag()));
    }
  }
  trim();
}

void UniPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Degree UniPoly::degree() const {
  return coeffs_.empty() ? Degree::neg_infinity() : Degree::of(coeffs_.size() - 1);
}

Scalar UniPoly::coeff(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : Scalar::zero(domain_);
}

UniPoly UniPoly::derivative() const {
  std::vector<Scalar> out;
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    out.push_back(coeffs_[i].times(static_cast<long>(i)));
  }
  return UniPoly(domain_, std::move(out));
}

UniPoly UniPoly::negated() const {
  std::vector<Scalar> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) out.push_back(-c);
  return UniPoly(domain_, std::move(out));
}

UniPoly UniPoly::to_fraction_field() const {
  std::vector<Scalar> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) out.push_back(c.to_fraction());
  return UniPoly(domain_.fraction_field(), std::move(out));
}

std::string UniPoly::to_string(char var) const {
  TermMap tm(domain_);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    tm.add_term(Monomial{static_cast<unsigned>(i), 0}, coeffs_[i]);
  }
  return tm.render(var, '_');
}

// ---------------------------------------------------------------- BiPoly

BiPoly BiPoly::constant(const Scalar& c) { return monomial(c, 0, 0); }

BiPoly BiPoly::monomial(const Scalar& c, unsigned x_exp, unsigned y_exp) {
  BiPoly p(c.domain());
  p.terms_.add_term(Monomial{x_exp, y_exp}, c);
  return p;
}

bool BiPoly::is_constant() const {
  return terms().empty() || (terms().size() == 1 && terms().begin()->first.degree() == 0);
}

Degree BiPoly::total_degree() const {
  return is_zero() ? Degree::neg_infinity() : Degree::of(terms().rbegin()->first.degree());
}

Degree BiPoly::x_degree() const {
  if (is_zero()) return Degree::neg_infinity();
  unsigned d = 0;
  for (const auto& [m, c] : terms()) d = std::max(d, m.first);
  return Degree::of(d);
}

BiPoly operator*(const BiPoly& l, const BiPoly& r) {
  l.terms_.check_same_domain(r.terms_);
  TermMap out(l.domain());
  for (const auto& [ml, cl] : l.terms()) {
    for (const auto& [mr, cr] : r.terms()) {
      out.add_term(Monomial{ml.first + mr.first, ml.second + mr.second}, cl * cr);
    }
  }
  return BiPoly(std::move(out));
}

BiPoly BiPoly::pow(unsigned e) const {
  BiPoly result = constant(Scalar::one(domain()));
  BiPoly base = *this;
  while (e > 0) {
    if (e & 1u) result *= base;
    e >>= 1u;
    if (e > 0) base *= base;
  }
  return result;
}

BiPoly BiPoly::swapped() const {
  TermMap out(domain());
  for (const auto& [m, c] : terms()) out.add_term(Monomial{m.second, m.first}, c);
  return BiPoly(std::move(out));
}

BiPoly BiPoly::to_fraction_field() const {
  TermMap out(domain().fraction_field());
  for (const auto& [m, c] : terms()) out.add_term(m, c.to_fraction());
  return BiPoly(std::move(out));
}

// ---------------------------------------------------------------- operations

BiPoly partial(const BiPoly& p, Var var) {
  TermMap out(p.domain());
  for (const auto& [m, c] : p.terms()) {
    if (var == Var::X && m.first > 0) {
      out.add_term(Monomial{m.first - 1, m.second}, c.times(m.first));
    } else if (var == Var::Y && m.second > 0) {
      out.add_term(Monomial{m.first, m.second - 1}, c.times(m.second));
    }
  }
  return BiPoly(std::move(out));
}

BiPoly jacobian(const BiPoly& p, const BiPoly& q) {
  p.term_map().check_same_domain(q.term_map());
  return partial(p, Var::X) * partial(q, Var::Y) - partial(p, Var::Y) * partial(q, Var::X);
}

BiPoly substitute(const BiPoly& p, const BiPoly& for_x, const BiPoly& for_y) {
  p.term_map().check_same_domain(for_x.term_map());
  p.term_map().check_same_domain(for_y.term_map());
  const Domain d = p.domain();
  if (p.is_zero()) return BiPoly(d);

  // Group by x-exponent: p = sum_i x^i * r_i(y); evaluate each r_i by Horner
  // in for_y, then Horner over i in for_x.
  std::map<unsigned, std::map<unsigned, Scalar>> rows;
  unsigned max_x = 0;
  for (const auto& [m, c] : p.terms()) {
    rows[m.first].emplace(m.second, c);
    max_x = std::max(max_x, m.first);
  }
  auto horner_y = [&](const std::map<unsigned, Scalar>& coeffs) {
    BiPoly acc(d);
    unsigned top = coeffs.rbegin()->first;
    for (unsigned j = top + 1; j-- > 0;) {
      acc *= for_y;
      if (auto it = coeffs.find(j); it != coeffs.end()) acc += BiPoly::constant(it->second);
      if (j == 0) break;
    }
    return acc;
  };
  BiPoly acc(d);
  for (unsigned i = max_x + 1; i-- > 0;) {
    acc *= for_x;
    if (auto it = rows.find(i); it != rows.end()) acc += horner_y(it->second);
    if (i == 0) break;
  }
  return acc;
}

BiPoly eval_univariate(const UniPoly& u, const BiPoly& at) {
  if (u.domain() != at.domain()) {
    throw Error(Errc::DomainMismatch, "univariate polynomial over " +
                                          std::string(u.domain().tag()) +
                                          " evaluated at polynomial over " +
                                          std::string(at.domain().tag()));
  }
  BiPoly acc(at.domain());
  const auto& cs = u.coeffs();
  for (auto it = cs.rbegin(); it != cs.rend(); ++it) {
    acc *= at;
    acc += BiPoly::constant(*it);
  }
  return acc;
}

DegreeAndLead y_degree_and_lead(const BiPoly& p) {
  if (p.is_zero()) return {Degree::neg_infinity(), UniPoly(p.domain())};
  unsigned top = 0;
  for (const auto& [m, c] : p.terms()) top = std::max(top, m.second);
  std::vector<Scalar> lead;
  for (const auto& [m, c] : p.terms()) {
    if (m.second != top) continue;
    if (lead.size() <= m.first) lead.resize(m.first + 1, Scalar::zero(p.domain()));
    lead[m.first] = c;
  }
  return {Degree::of(top), UniPoly(p.domain(), std::move(lead))};
}

Scalar eval_at_origin(const BiPoly& p) { return p.coeff(0, 0); }

std::optional<Scalar> constant_ratio(const TermMap& num, const TermMap& den) {
  num.check_same_domain(den);
  if (den.is_zero()) throw Error(Errc::DivisionNotExact, "constant_ratio by zero");
  if (num.is_zero()) return Scalar::zero(num.domain());
  const auto& [m, dc] = *den.terms().rbegin();
  auto c = try_divide(num.coeff(m), dc);
  if (!c || c->is_zero()) return std::nullopt;
  if (den.scaled(*c) != num) return std::nullopt;
  return c;
}

}  // namespace ccjac
