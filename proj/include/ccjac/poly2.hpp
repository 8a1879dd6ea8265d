#pragma once

// Sparse bivariate polynomials D[x,y] and univariate polynomials D[t].

#include <optional>
#include <string>
#include <vector>

#include "ccjac/coeff.hpp"
#include "ccjac/terms.hpp"

namespace ccjac {

/// Polynomial degree with a distinguished -infinity for the zero polynomial.
class Degree {
 public:
  static constexpr Degree neg_infinity() { return Degree(); }
  static constexpr Degree of(unsigned d) { return Degree(d); }

  constexpr bool is_finite() const { return finite_; }
  /// Requires is_finite().
  constexpr unsigned value() const { return value_; }

  friend constexpr bool operator==(Degree, Degree) = default;
  friend constexpr bool operator<(Degree l, Degree r) {
    if (!l.finite_) return r.finite_;
    return r.finite_ && l.value_ < r.value_;
  }

  std::string to_string() const { return finite_ ? std::to_string(value_) : "-inf"; }

 private:
  constexpr Degree() = default;
  constexpr explicit Degree(unsigned v) : finite_(true), value_(v) {}
  bool finite_ = false;
  unsigned value_ = 0;
};

class BiPoly;

/// c_0 + c_1 t + ... + c_m t^m, trailing-zero free.
class UniPoly {
 public:
  explicit UniPoly(Domain domain = Domain::integers()) : domain_(domain) {}
  UniPoly(Domain domain, std::vector<Scalar> coeffs);

  Domain domain() const { return domain_; }
  const std::vector<Scalar>& coeffs() const { return coeffs_; }
  Degree degree() const;
  bool is_zero() const { return coeffs_.empty(); }
  /// Coefficient of t^i, zero past the end.
  Scalar coeff(std::size_t i) const;

  UniPoly derivative() const;
  UniPoly negated() const;
  UniPoly to_fraction_field() const;
  friend bool operator==(const UniPoly&, const UniPoly&) = default;

  std::string to_string(char var = 't') const;

 private:
  void trim();
  Domain domain_;
  std::vector<Scalar> coeffs_;
};

/// Element of D[x,y].
class BiPoly {
 public:
  explicit BiPoly(Domain domain = Domain::integers()) : terms_(domain) {}
  explicit BiPoly(TermMap terms) : terms_(std::move(terms)) {}

  static BiPoly constant(const Scalar& c);
  static BiPoly x(Domain d) { return monomial(Scalar::one(d), 1, 0); }
  static BiPoly y(Domain d) { return monomial(Scalar::one(d), 0, 1); }
  static BiPoly monomial(const Scalar& c, unsigned x_exp, unsigned y_exp);

  Domain domain() const { return terms_.domain(); }
  const TermMap& term_map() const { return terms_; }
  const TermMap::Map& terms() const { return terms_.terms(); }
  bool is_zero() const { return terms_.is_zero(); }
  bool is_constant() const;
  Scalar coeff(unsigned x_exp, unsigned y_exp) const { return terms_.coeff({x_exp, y_exp}); }

  Degree total_degree() const;
  Degree x_degree() const;

  BiPoly operator-() const { return BiPoly(terms_.negated()); }
  BiPoly& operator+=(const BiPoly& r) { terms_ += r.terms_; return *this; }
  BiPoly& operator-=(const BiPoly& r) { terms_ -= r.terms_; return *this; }
  friend BiPoly operator+(BiPoly l, const BiPoly& r) { return l += r; }
  friend BiPoly operator-(BiPoly l, const BiPoly& r) { return l -= r; }
  friend BiPoly operator*(const BiPoly& l, const BiPoly& r);
  BiPoly& operator*=(const BiPoly& r) { return *this = *this * r; }
  BiPoly scaled(const Scalar& c) const { return BiPoly(terms_.scaled(c)); }
  BiPoly pow(unsigned e) const;
  friend bool operator==(const BiPoly&, const BiPoly&) = default;

  /// Exchanges the roles of x and y.
  BiPoly swapped() const;
  BiPoly to_fraction_field() const;

  std::string to_string() const { return terms_.render('x', 'y'); }

 private:
  TermMap terms_;
};

enum class Var { X, Y };

/// Formal partial derivative.
BiPoly partial(const BiPoly& p, Var var);

/// p_x q_y - p_y q_x.
BiPoly jacobian(const BiPoly& p, const BiPoly& q);

/// p(for_x, for_y).
BiPoly substitute(const BiPoly& p, const BiPoly& for_x, const BiPoly& for_y);

/// sum c_i at^i by Horner's rule.
BiPoly eval_univariate(const UniPoly& u, const BiPoly& at);

struct DegreeAndLead {
  Degree degree;
  /// Coefficient polynomial in x of y^degree; zero when degree is -inf.
  UniPoly lead;
};

/// Largest y-exponent and its x-coefficient.
DegreeAndLead y_degree_and_lead(const BiPoly& p);

/// Constant term.
Scalar eval_at_origin(const BiPoly& p);

/// A constant c with c * den == num, if one exists. `den` must be non-zero
/// and both must lie over a field.
std::optional<Scalar> constant_ratio(const TermMap& num, const TermMap& den);

}  // namespace ccjac
