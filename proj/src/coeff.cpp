#include "ccjac/coeff.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

namespace ccjac {

std::string_view errc_name(Errc code) {
  switch (code) {
    case Errc::DivisionNotExact: return "DivisionNotExact";
    case Errc::DomainMismatch: return "DomainMismatch";
    case Errc::InvalidDomain: return "InvalidDomain";
    case Errc::NotCommuting: return "NotCommuting";
    case Errc::InternalContradiction: return "InternalContradiction";
    case Errc::BoundTooLargeForBudget: return "BoundTooLargeForBudget";
    case Errc::RelationViolation: return "RelationViolation";
    case Errc::NotInvertible: return "NotInvertible";
    case Errc::SyntaxError: return "SyntaxError";
    case Errc::VariableNotAllowed: return "VariableNotAllowed";
    case Errc::ExponentNegative: return "ExponentNegative";
    case Errc::CoefficientNotInDomain: return "CoefficientNotInDomain";
    case Errc::InvalidInstance: return "InvalidInstance";
  }
  return "Unknown";
}

// ---------------------------------------------------------------- Domain

Domain Domain::from_tag(std::string_view tag) {
  if (tag == "int") return integers();
  if (tag == "rat") return rationals();
  if (tag == "d0") return d0();
  if (tag == "frac-d0") return frac_d0();
  if (tag.starts_with("gf") || tag.starts_with("mod") || tag.starts_with("z/") ||
      tag.starts_with("Z/") || tag.starts_with("fp")) {
    throw Error(Errc::InvalidDomain,
                "domain '" + std::string(tag) +
                    "' has positive characteristic; only characteristic zero is supported");
  }
  throw Error(Errc::InvalidDomain,
              "unknown domain '" + std::string(tag) + "' (expected int, rat, d0 or frac-d0)");
}

std::string_view Domain::tag() const {
  switch (kind_) {
    case DomainKind::IntegerRing: return "int";
    case DomainKind::RationalField: return "rat";
    case DomainKind::ParamSubring: return "d0";
    case DomainKind::ParamFractionField: return "frac-d0";
  }
  return "int";
}

// ---------------------------------------------------------------- ParamPoly

ParamPoly::ParamPoly(const Rational& constant) {
  if (constant != 0) terms_.emplace(Monomial{}, constant);
}

ParamPoly ParamPoly::monomial(const Rational& c, unsigned a_exp, unsigned b_exp) {
  ParamPoly p;
  if (c != 0) p.terms_.emplace(Monomial{a_exp, b_exp}, c);
  return p;
}

bool ParamPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.degree() == 0);
}

Rational ParamPoly::constant_term() const {
  auto it = terms_.find(Monomial{});
  return it == terms_.end() ? Rational(0) : it->second;
}

int ParamPoly::total_degree() const {
  return terms_.empty() ? -1 : static_cast<int>(terms_.rbegin()->first.degree());
}

void ParamPoly::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

ParamPoly ParamPoly::operator-() const {
  ParamPoly r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

ParamPoly& ParamPoly::operator+=(const ParamPoly& rhs) {
  for (const auto& [m, c] : rhs.terms_) add_term(m, c);
  return *this;
}

ParamPoly& ParamPoly::operator-=(const ParamPoly& rhs) {
  for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
  return *this;
}

ParamPoly operator*(const ParamPoly& l, const ParamPoly& r) {
  ParamPoly out;
  for (const auto& [ml, cl] : l.terms_) {
    for (const auto& [mr, cr] : r.terms_) {
      out.add_term(Monomial{ml.first + mr.first, ml.second + mr.second}, cl * cr);
    }
  }
  return out;
}

ParamPoly ParamPoly::scaled(const Rational& c) const {
  if (c == 0) return {};
  ParamPoly r = *this;
  for (auto& [m, v] : r.terms_) v *= c;
  return r;
}

std::optional<ParamPoly> ParamPoly::divide(const ParamPoly& divisor) const {
  if (divisor.is_zero()) {
    throw Error(Errc::DivisionNotExact, "division by zero");
  }
  ParamPoly rem = *this;
  ParamPoly quot;
  const auto& [lm, lc] = divisor.leading();
  while (!rem.is_zero()) {
    const auto& [rm, rc] = rem.leading();
    // If divisor | rem then lt(divisor) | lt(rem) under any monomial order.
    if (rm.first < lm.first || rm.second < lm.second) return std::nullopt;
    ParamPoly t = monomial(rc / lc, rm.first - lm.first, rm.second - lm.second);
    quot += t;
    rem -= t * divisor;
  }
  return quot;
}

namespace {

void render_monomial(std::ostream& os, const Rational& c, Monomial m, char v1, char v2,
                     bool first_term) {
  Rational mag = abs(c);
  if (!first_term) {
    os << (c < 0 ? " - " : " + ");
  } else if (c < 0) {
    os << '-';
  }
  bool wrote = false;
  if (mag != 1 || m.degree() == 0) {
    os << mag.get_str();
    wrote = true;
  }
  auto power = [&](char v, unsigned e) {
    if (e == 0) return;
    if (wrote) os << '*';
    os << v;
    if (e > 1) os << '^' << e;
    wrote = true;
  };
  power(v1, m.first);
  power(v2, m.second);
}

}  // namespace

std::string ParamPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    render_monomial(os, it->second, it->first, 'a', 'b', first);
    first = false;
  }
  return os.str();
}

// ---------------------------------------------------------------- ParamFraction

ParamFraction::ParamFraction(ParamPoly num) : num_(std::move(num)), den_(Rational(1)) {}

ParamFraction::ParamFraction(ParamPoly num, ParamPoly den)
    : num_(std::move(num)), den_(std::move(den)) {
  normalize();
}

namespace {

ParamPoly strip_monomial(const ParamPoly& p, unsigned a_exp, unsigned b_exp) {
  ParamPoly out;
  for (const auto& [m, c] : p.terms()) {
    out += ParamPoly::monomial(c, m.first - a_exp, m.second - b_exp);
  }
  return out;
}

}  // namespace

void ParamFraction::normalize() {
  if (den_.is_zero()) throw Error(Errc::DivisionNotExact, "division by zero");
  if (num_.is_zero()) {
    den_ = ParamPoly(Rational(1));
    return;
  }
  unsigned min_a = std::numeric_limits<unsigned>::max();
  unsigned min_b = std::numeric_limits<unsigned>::max();
  for (const auto* p : {&num_, &den_}) {
    for (const auto& [m, c] : p->terms()) {
      min_a = std::min(min_a, m.first);
      min_b = std::min(min_b, m.second);
    }
  }
  if (min_a > 0 || min_b > 0) {
    num_ = strip_monomial(num_, min_a, min_b);
    den_ = strip_monomial(den_, min_a, min_b);
  }
  if (!den_.is_constant()) {
    if (auto q = num_.divide(den_)) {
      num_ = std::move(*q);
      den_ = ParamPoly(Rational(1));
    } else if (auto q2 = den_.divide(num_)) {
      num_ = ParamPoly(Rational(1));
      den_ = std::move(*q2);
    }
  }
  Rational lc = den_.leading().second;
  if (lc != 1) {
    Rational inv = 1 / lc;
    num_ = num_.scaled(inv);
    den_ = den_.scaled(inv);
  }
}

ParamFraction ParamFraction::operator-() const {
  ParamFraction r = *this;
  r.num_ = -r.num_;
  return r;
}

ParamFraction operator+(const ParamFraction& l, const ParamFraction& r) {
  if (l.den_ == r.den_) return ParamFraction(l.num_ + r.num_, l.den_);
  return ParamFraction(l.num_ * r.den_ + r.num_ * l.den_, l.den_ * r.den_);
}

ParamFraction operator-(const ParamFraction& l, const ParamFraction& r) { return l + (-r); }

ParamFraction operator*(const ParamFraction& l, const ParamFraction& r) {
  return ParamFraction(l.num_ * r.num_, l.den_ * r.den_);
}

ParamFraction operator/(const ParamFraction& l, const ParamFraction& r) {
  if (r.is_zero()) throw Error(Errc::DivisionNotExact, "division by zero");
  return ParamFraction(l.num_ * r.den_, l.den_ * r.num_);
}

bool operator==(const ParamFraction& l, const ParamFraction& r) {
  return l.num_ * r.den_ == r.num_ * l.den_;
}

std::string ParamFraction::to_string() const {
  if (den_ == ParamPoly(Rational(1))) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

// ---------------------------------------------------------------- Scalar

namespace {

[[noreturn]] void mismatch(const Scalar& l, const Scalar& r) {
  throw Error(Errc::DomainMismatch, "domain mismatch: " + std::string(l.domain().tag()) +
                                        " vs " + std::string(r.domain().tag()));
}

template <class Op>
Scalar binary(const Scalar& l, const Scalar& r, Op op) {
  if (l.rep().index() != r.rep().index()) mismatch(l, r);
  return std::visit(
      [&](const auto& a) -> Scalar {
        using T = std::decay_t<decltype(a)>;
        return Scalar(T(op(a, std::get<T>(r.rep()))));
      },
      l.rep());
}

}  // namespace

Scalar Scalar::from_int(Domain d, long v) {
  switch (d.kind()) {
    case DomainKind::IntegerRing: return Scalar(Integer(v));
    case DomainKind::RationalField: return Scalar(Rational(v));
    case DomainKind::ParamSubring: return Scalar(ParamPoly(Rational(v)));
    case DomainKind::ParamFractionField: return Scalar(ParamFraction(ParamPoly(Rational(v))));
  }
  return Scalar(Integer(v));
}

Scalar Scalar::from_rational(Domain d, const Rational& v) {
  switch (d.kind()) {
    case DomainKind::IntegerRing:
      if (v.get_den() != 1) {
        throw Error(Errc::CoefficientNotInDomain, v.get_str() + " is not an integer");
      }
      return Scalar(Integer(v.get_num()));
    case DomainKind::RationalField: return Scalar(v);
    case DomainKind::ParamSubring: return Scalar(ParamPoly(v));
    case DomainKind::ParamFractionField: return Scalar(ParamFraction(ParamPoly(v)));
  }
  return Scalar(v);
}

Domain Scalar::domain() const {
  switch (rep_.index()) {
    case 0: return Domain::integers();
    case 1: return Domain::rationals();
    case 2: return Domain::d0();
    default: return Domain::frac_d0();
  }
}

bool Scalar::is_zero() const {
  return std::visit(
      [](const auto& v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Integer> || std::is_same_v<T, Rational>) {
          return v == 0;
        } else {
          return v.is_zero();
        }
      },
      rep_);
}

bool Scalar::is_one() const {
  auto r = as_rational();
  return r && *r == 1;
}

bool Scalar::is_rational_constant() const { return as_rational().has_value(); }

std::optional<Rational> Scalar::as_rational() const {
  switch (rep_.index()) {
    case 0: return Rational(std::get<Integer>(rep_));
    case 1: return std::get<Rational>(rep_);
    case 2: {
      const auto& p = std::get<ParamPoly>(rep_);
      if (!p.is_constant()) return std::nullopt;
      return p.constant_term();
    }
    default: {
      const auto& f = std::get<ParamFraction>(rep_);
      if (!f.num().is_constant() || !f.den().is_constant()) return std::nullopt;
      return Rational(f.num().constant_term() / f.den().constant_term());
    }
  }
}

Scalar Scalar::operator-() const {
  return std::visit(
      [](const auto& v) {
        using T = std::decay_t<decltype(v)>;
        return Scalar(T(-v));
      },
      rep_);
}

Scalar operator+(const Scalar& l, const Scalar& r) {
  return binary(l, r, [](const auto& a, const auto& b) { return a + b; });
}

Scalar operator-(const Scalar& l, const Scalar& r) {
  return binary(l, r, [](const auto& a, const auto& b) { return a - b; });
}

Scalar operator*(const Scalar& l, const Scalar& r) {
  return binary(l, r, [](const auto& a, const auto& b) { return a * b; });
}

Scalar Scalar::times(long n) const { return *this * from_int(domain(), n); }

bool operator==(const Scalar& l, const Scalar& r) {
  if (l.rep_.index() != r.rep_.index()) return false;
  return std::visit(
      [&](const auto& a) {
        using T = std::decay_t<decltype(a)>;
        return a == std::get<T>(r.rep_);
      },
      l.rep_);
}

Scalar Scalar::to_fraction() const {
  switch (rep_.index()) {
    case 0: return Scalar(Rational(std::get<Integer>(rep_)));
    case 2: return Scalar(ParamFraction(std::get<ParamPoly>(rep_)));
    default: return *this;
  }
}

std::string Scalar::to_string() const {
  switch (rep_.index()) {
    case 0: return std::get<Integer>(rep_).get_str();
    case 1: return std::get<Rational>(rep_).get_str();
    case 2: return std::get<ParamPoly>(rep_).to_string();
    default: return std::get<ParamFraction>(rep_).to_string();
  }
}

bool Scalar::needs_parens() const {
  switch (rep_.index()) {
    case 2: return std::get<ParamPoly>(rep_).terms().size() > 1;
    case 3: {
      const auto& f = std::get<ParamFraction>(rep_);
      return f.den() == ParamPoly(Rational(1)) && f.num().terms().size() > 1;
    }
    default: return false;
  }
}

bool Scalar::is_negative_looking() const {
  switch (rep_.index()) {
    case 0: return std::get<Integer>(rep_) < 0;
    case 1: return std::get<Rational>(rep_) < 0;
    case 2: {
      const auto& p = std::get<ParamPoly>(rep_);
      return p.terms().size() == 1 && p.leading().second < 0;
    }
    default: {
      const auto& f = std::get<ParamFraction>(rep_);
      return f.den() == ParamPoly(Rational(1)) && f.num().terms().size() == 1 &&
             f.num().leading().second < 0;
    }
  }
}

std::optional<Scalar> try_divide(const Scalar& x, const Scalar& y) {
  if (x.rep().index() != y.rep().index()) mismatch(x, y);
  if (y.is_zero()) throw Error(Errc::DivisionNotExact, "division by zero");
  switch (x.rep().index()) {
    case 0: {
      const auto& a = std::get<Integer>(x.rep());
      const auto& b = std::get<Integer>(y.rep());
      if (!mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t())) return std::nullopt;
      Integer q;
      mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
      return Scalar(q);
    }
    case 1: return Scalar(Rational(std::get<Rational>(x.rep()) / std::get<Rational>(y.rep())));
    case 2: {
      auto q = std::get<ParamPoly>(x.rep()).divide(std::get<ParamPoly>(y.rep()));
      if (!q || !d0_member(*q)) return std::nullopt;
      return Scalar(std::move(*q));
    }
    default:
      return Scalar(std::get<ParamFraction>(x.rep()) / std::get<ParamFraction>(y.rep()));
  }
}

Scalar divide_exact(const Scalar& x, const Scalar& y) {
  auto q = try_divide(x, y);
  if (!q) {
    throw Error(Errc::DivisionNotExact, x.to_string() + " / " + y.to_string() +
                                            " leaves " + std::string(x.domain().tag()));
  }
  return *q;
}

bool is_unit(Domain d, const Scalar& e) {
  if (e.domain() != d) {
    throw Error(Errc::DomainMismatch, "element of " + std::string(e.domain().tag()) +
                                          " tested against " + std::string(d.tag()));
  }
  switch (d.kind()) {
    case DomainKind::IntegerRing: {
      const auto& v = std::get<Integer>(e.rep());
      return v == 1 || v == -1;
    }
    case DomainKind::ParamSubring: {
      const auto& p = std::get<ParamPoly>(e.rep());
      return !p.is_zero() && p.is_constant();
    }
    default: return !e.is_zero();
  }
}

bool d0_monomial(Monomial m) {
  switch (m.degree()) {
    case 1: return false;
    case 3: return m.first == 0 || m.second == 0;
    default: return true;
  }
}

bool d0_member(const ParamPoly& p) {
  return std::all_of(p.terms().begin(), p.terms().end(),
                     [](const auto& t) { return d0_monomial(t.first); });
}

std::optional<Scalar> fraction_in_domain(const Scalar& f) {
  switch (f.rep().index()) {
    case 0: return f;
    case 1: {
      const auto& q = std::get<Rational>(f.rep());
      if (q.get_den() != 1) return std::nullopt;
      return Scalar(Integer(q.get_num()));
    }
    case 2: {
      if (!d0_member(std::get<ParamPoly>(f.rep()))) return std::nullopt;
      return f;
    }
    default: {
      const auto& fr = std::get<ParamFraction>(f.rep());
      auto q = fr.num().divide(fr.den());
      if (!q || !d0_member(*q)) return std::nullopt;
      return Scalar(std::move(*q));
    }
  }
}

bool belongs_to(Domain d, const Scalar& e) {
  if (e.domain() != d) return false;
  if (d == Domain::d0()) return d0_member(std::get<ParamPoly>(e.rep()));
  return true;
}

}  // namespace ccjac
