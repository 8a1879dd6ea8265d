#pragma once

// The first Weyl algebra A_1(D) = D<X, Y> / ([Y, X] = 1), stored in normal
// order: every monomial is X^i Y^j.

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "ccjac/centralizer.hpp"
#include "ccjac/coeff.hpp"
#include "ccjac/poly2.hpp"
#include "ccjac/terms.hpp"

namespace ccjac {

class WeylElement {
 public:
  explicit WeylElement(Domain domain = Domain::integers()) : terms_(domain) {}
  explicit WeylElement(TermMap terms) : terms_(std::move(terms)) {}

  static WeylElement constant(const Scalar& c);
  static WeylElement X(Domain d) { return monomial(Scalar::one(d), 1, 0); }
  static WeylElement Y(Domain d) { return monomial(Scalar::one(d), 0, 1); }
  /// c X^i Y^j
  static WeylElement monomial(const Scalar& c, unsigned i, unsigned j);

  Domain domain() const { return terms_.domain(); }
  const TermMap& term_map() const { return terms_; }
  const TermMap::Map& terms() const { return terms_.terms(); }
  bool is_zero() const { return terms_.is_zero(); }
  bool is_constant() const;
  Scalar coeff(unsigned i, unsigned j) const { return terms_.coeff({i, j}); }
  Degree total_degree() const;

  WeylElement operator-() const { return WeylElement(terms_.negated()); }
  WeylElement& operator+=(const WeylElement& r) { terms_ += r.terms_; return *this; }
  WeylElement& operator-=(const WeylElement& r) { terms_ -= r.terms_; return *this; }
  friend WeylElement operator+(WeylElement l, const WeylElement& r) { return l += r; }
  friend WeylElement operator-(WeylElement l, const WeylElement& r) { return l -= r; }
  friend WeylElement operator*(const WeylElement& l, const WeylElement& r);
  WeylElement scaled(const Scalar& c) const { return WeylElement(terms_.scaled(c)); }
  WeylElement pow(unsigned e) const;
  friend bool operator==(const WeylElement&, const WeylElement&) = default;

  WeylElement to_fraction_field() const;

  std::string to_string() const { return terms_.render('X', 'Y'); }

 private:
  TermMap terms_;
};

/// Normal-ordered product, using Y^j X^i = sum_k C(j,k) C(i,k) k! X^(i-k) Y^(j-k).
WeylElement weyl_mul(const WeylElement& p, const WeylElement& q);

/// PQ - QP.
WeylElement commutator(const WeylElement& p, const WeylElement& q);

/// sum_{m>=1} C(i,m) X^(i-m) t^(m)(Y), which equals [t(Y), X^i].
WeylElement useful_equation(const UniPoly& t, unsigned i);

/// u(at) by Horner's rule.
WeylElement eval_univariate(const UniPoly& u, const WeylElement& at);

/// t(Y) as an element of A_1(D).
WeylElement in_Y(const UniPoly& t);
/// t(X) as an element of A_1(D).
WeylElement in_X(const UniPoly& t);

/// Top total-degree part, read as a commutative form in x, y.
BiPoly leading_form(const WeylElement& p);

/// [A, B] is a unit of D.
bool is_dixmier_pair(const WeylElement& A, const WeylElement& B);

struct WeylMateSearchResult {
  std::optional<WeylElement> mate;
  bool solvable_over_fraction_field = false;
  std::string note;
};

/// B of total degree <= bound with [A, B] a unit; empty means none within the
/// bound.
WeylMateSearchResult dixmier_mate_search_bounded(const WeylElement& A, unsigned max_total_degree,
                                                 const MateSearchOptions& options = {});

/// Decides w in Q(D)[A] for commuting A, w by peeling top total-degree forms.
/// Throws Errc::NotCommuting when [A, w] != 0.
InAOutcome weyl_express_in_A(const WeylElement& A, const WeylElement& w);

// ---------------------------------------------------------------- automorphisms

/// (X, Y) -> (X, Y + f(X))
struct ShearYW {
  UniPoly f;
};
/// (X, Y) -> (X + g(Y), Y)
struct ShearXW {
  UniPoly g;
};
/// (X, Y) -> (lambda X, lambda^-1 Y), lambda a unit.
struct UnitScale {
  Scalar lambda;
};
/// (X, Y) -> (m11 X + m12 Y, m21 X + m22 Y), m11 m22 - m12 m21 = 1.
struct LinearSymplectic {
  Scalar m11, m12, m21, m22;
};

using WeylStep = std::variant<ShearYW, ShearXW, UnitScale, LinearSymplectic>;

/// Word of elementary automorphisms of A_1(D), substituted left to right.
/// Each step is checked to satisfy [image of Y, image of X] = 1.
class WeylAutomorphism {
 public:
  explicit WeylAutomorphism(Domain domain) : domain_(domain) {}
  /// Throws Errc::RelationViolation or Errc::DomainMismatch.
  WeylAutomorphism(Domain domain, std::vector<WeylStep> word);

  Domain domain() const { return domain_; }
  const std::vector<WeylStep>& word() const { return word_; }
  void push(WeylStep step);

 private:
  Domain domain_;
  std::vector<WeylStep> word_;
};

std::string weyl_step_to_string(const WeylStep& step);

/// Images of X and Y under one step.
std::pair<WeylElement, WeylElement> weyl_step_images(Domain d, const WeylStep& step);

WeylElement weyl_apply(const WeylAutomorphism& g, const WeylElement& p);
WeylAutomorphism weyl_invert(const WeylAutomorphism& g);

/// w in D[A] for A = g(X), read off from g^{-1}(w) in D[X].
/// Throws Errc::NotCommuting or Errc::InternalContradiction.
InAResult weyl_membership_via_automorphism(const WeylAutomorphism& g, const WeylElement& w);

/// Weyl twin of verify_cc_instance: pair_ok means [A, B] is a unit, commutes
/// means [A, w] = 0. Throws Errc::InternalContradiction when both hold but
/// w is not in Q(D)[A].
CCVerdict weyl_verify_cc_instance(const WeylElement& A, const WeylElement& B,
                                  const WeylElement& w);

/// lambda with [lambda B, A] = 1, for a Dixmier pair (A, B); then
/// (X, Y) -> (A, lambda B) respects the defining relation.
Scalar dixmier_scale(const WeylElement& A, const WeylElement& B);

}  // namespace ccjac
