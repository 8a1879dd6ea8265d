#pragma once

// Exact coefficient domains.
//
//   int      the integers Z
//   rat      the rationals Q
//   d0       the monomial subring Q[a^2, ab, b^2, a^3, b^3] of Q[a, b]
//   frac-d0  its fraction field, which equals Q(a, b)
//
// Elements carry their own representation; binary operations on elements of
// different domains throw Errc::DomainMismatch.

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>

#include <gmpxx.h>

#include "ccjac/error.hpp"

namespace ccjac {

using Integer = mpz_class;
using Rational = mpq_class;

enum class DomainKind {
  IntegerRing,
  RationalField,
  ParamSubring,
  ParamFractionField,
};

class Domain {
 public:
  constexpr Domain() = default;
  constexpr explicit Domain(DomainKind kind) : kind_(kind) {}

  static constexpr Domain integers() { return Domain(DomainKind::IntegerRing); }
  static constexpr Domain rationals() { return Domain(DomainKind::RationalField); }
  static constexpr Domain d0() { return Domain(DomainKind::ParamSubring); }
  static constexpr Domain frac_d0() { return Domain(DomainKind::ParamFractionField); }

  /// Parses one of "int", "rat", "d0", "frac-d0". Anything else, in
  /// particular a positive-characteristic ring, is rejected.
  static Domain from_tag(std::string_view tag);

  constexpr DomainKind kind() const { return kind_; }
  std::string_view tag() const;

  constexpr bool is_field() const {
    return kind_ == DomainKind::RationalField || kind_ == DomainKind::ParamFractionField;
  }
  constexpr bool has_parameters() const {
    return kind_ == DomainKind::ParamSubring || kind_ == DomainKind::ParamFractionField;
  }

  /// Q(D). A field is its own fraction field; Q(Z) is represented by Q.
  constexpr Domain fraction_field() const {
    switch (kind_) {
      case DomainKind::IntegerRing: return rationals();
      case DomainKind::ParamSubring: return frac_d0();
      default: return *this;
    }
  }

  friend constexpr bool operator==(Domain, Domain) = default;

 private:
  DomainKind kind_ = DomainKind::IntegerRing;
};

/// Exponent pair. Ordered graded-lexicographically: total degree first,
/// then the first exponent.
struct Monomial {
  unsigned first = 0;
  unsigned second = 0;

  constexpr unsigned degree() const { return first + second; }

  friend constexpr bool operator==(Monomial, Monomial) = default;
  friend constexpr std::strong_ordering operator<=>(Monomial l, Monomial r) {
    if (auto c = l.degree() <=> r.degree(); c != 0) return c;
    return l.first <=> r.first;
  }
};

/// Polynomial in the parameters a, b over Q. Sparse, no stored zeros.
class ParamPoly {
 public:
  using Terms = std::map<Monomial, Rational>;

  ParamPoly() = default;
  explicit ParamPoly(const Rational& constant);
  static ParamPoly monomial(const Rational& c, unsigned a_exp, unsigned b_exp);
  static ParamPoly a() { return monomial(1, 1, 0); }
  static ParamPoly b() { return monomial(1, 0, 1); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Constant coefficient (zero when absent).
  Rational constant_term() const;
  int total_degree() const;  // -1 for the zero polynomial
  /// Largest monomial under graded-lex order; requires non-zero.
  const std::pair<const Monomial, Rational>& leading() const { return *terms_.rbegin(); }

  ParamPoly operator-() const;
  ParamPoly& operator+=(const ParamPoly& rhs);
  ParamPoly& operator-=(const ParamPoly& rhs);
  friend ParamPoly operator+(ParamPoly l, const ParamPoly& r) { return l += r; }
  friend ParamPoly operator-(ParamPoly l, const ParamPoly& r) { return l -= r; }
  friend ParamPoly operator*(const ParamPoly& l, const ParamPoly& r);
  ParamPoly scaled(const Rational& c) const;
  friend bool operator==(const ParamPoly&, const ParamPoly&) = default;

  /// Quotient in Q[a,b] when `divisor` divides exactly, otherwise empty.
  std::optional<ParamPoly> divide(const ParamPoly& divisor) const;

  std::string to_string() const;

 private:
  void add_term(const Monomial& m, const Rational& c);
  Terms terms_;
};

/// Element of Q(a,b) as numerator/denominator. The denominator is non-zero
/// and monic under graded-lex order; common monomial factors and exact
/// quotients are cancelled, but no polynomial gcd is taken, so two equal
/// fractions may still differ in representation. Equality is decided by
/// cross-multiplication.
class ParamFraction {
 public:
  ParamFraction() : den_(Rational(1)) {}
  explicit ParamFraction(ParamPoly num);
  ParamFraction(ParamPoly num, ParamPoly den);

  const ParamPoly& num() const { return num_; }
  const ParamPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  ParamFraction operator-() const;
  friend ParamFraction operator+(const ParamFraction& l, const ParamFraction& r);
  friend ParamFraction operator-(const ParamFraction& l, const ParamFraction& r);
  friend ParamFraction operator*(const ParamFraction& l, const ParamFraction& r);
  /// Throws Errc::DivisionNotExact on a zero divisor.
  friend ParamFraction operator/(const ParamFraction& l, const ParamFraction& r);
  friend bool operator==(const ParamFraction& l, const ParamFraction& r);

  std::string to_string() const;

 private:
  void normalize();
  ParamPoly num_;
  ParamPoly den_;
};

/// Runtime-typed element of one of the four domains.
class Scalar {
 public:
  using Rep = std::variant<Integer, Rational, ParamPoly, ParamFraction>;

  Scalar() : rep_(Integer(0)) {}
  Scalar(Integer v) : rep_(std::move(v)) {}
  Scalar(Rational v) : rep_(std::move(v)) { std::get<Rational>(rep_).canonicalize(); }
  Scalar(ParamPoly v) : rep_(std::move(v)) {}
  Scalar(ParamFraction v) : rep_(std::move(v)) {}

  static Scalar zero(Domain d) { return from_int(d, 0); }
  static Scalar one(Domain d) { return from_int(d, 1); }
  static Scalar from_int(Domain d, long v);
  /// Throws Errc::CoefficientNotInDomain for a non-integer over Z.
  static Scalar from_rational(Domain d, const Rational& v);

  const Rep& rep() const { return rep_; }
  Domain domain() const;
  bool is_zero() const;
  bool is_one() const;
  /// True for elements of Z or Q, and for parametric elements free of a, b.
  bool is_rational_constant() const;
  /// The value as a rational, when is_rational_constant().
  std::optional<Rational> as_rational() const;

  Scalar operator-() const;
  friend Scalar operator+(const Scalar& l, const Scalar& r);
  friend Scalar operator-(const Scalar& l, const Scalar& r);
  friend Scalar operator*(const Scalar& l, const Scalar& r);
  Scalar& operator+=(const Scalar& r) { return *this = *this + r; }
  Scalar& operator-=(const Scalar& r) { return *this = *this - r; }
  Scalar& operator*=(const Scalar& r) { return *this = *this * r; }
  /// Multiplication by an integer through the embedding Z -> D.
  Scalar times(long n) const;
  friend bool operator==(const Scalar& l, const Scalar& r);

  /// Embedding into Q(D).
  Scalar to_fraction() const;

  std::string to_string() const;
  /// True when the rendering must be parenthesized as a factor.
  bool needs_parens() const;
  /// True when the rendering starts with '-'.
  bool is_negative_looking() const;

 private:
  Rep rep_;
};

/// Exact quotient in the element's domain; empty when it leaves the domain.
/// Throws Errc::DomainMismatch for mixed domains and Errc::DivisionNotExact
/// for a zero divisor.
std::optional<Scalar> try_divide(const Scalar& x, const Scalar& y);
/// As try_divide, but throws Errc::DivisionNotExact instead of returning empty.
Scalar divide_exact(const Scalar& x, const Scalar& y);

/// Membership in the unit group of `d`.
bool is_unit(Domain d, const Scalar& e);

/// True iff every monomial of p lies in Q[a^2, ab, b^2, a^3, b^3].
bool d0_member(const ParamPoly& p);
/// Monomial membership rule: degree 1 is excluded, degree 3 admits only a^3
/// and b^3, every other degree is admitted.
bool d0_monomial(Monomial m);

/// For f in Q(D) with D = Z or d0: the element of D it equals, if any.
std::optional<Scalar> fraction_in_domain(const Scalar& f);

/// Whether `e` is a valid element of `d` (representation and, for d0,
/// subring membership).
bool belongs_to(Domain d, const Scalar& e);

}  // namespace ccjac
