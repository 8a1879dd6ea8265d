#pragma once

#include <map>
#include <string>

#include "ccjac/coeff.hpp"

namespace ccjac {

/// Sparse map from exponent pairs to non-zero coefficients of one domain.
/// Shared storage for commutative polynomials and normal-ordered Weyl
/// elements; multiplication lives with the owning type.
class TermMap {
 public:
  using Map = std::map<Monomial, Scalar>;

  explicit TermMap(Domain domain = Domain::integers()) : domain_(domain) {}

  Domain domain() const { return domain_; }
  const Map& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  /// Coefficient of the given monomial, zero when absent.
  Scalar coeff(Monomial m) const;
  void add_term(Monomial m, const Scalar& c);

  TermMap& operator+=(const TermMap& rhs);
  TermMap& operator-=(const TermMap& rhs);
  TermMap negated() const;
  TermMap scaled(const Scalar& c) const;
  friend bool operator==(const TermMap& l, const TermMap& r);

  /// Highest total degree, -1 for zero.
  int total_degree() const;
  /// Part of top total degree.
  TermMap top_form() const;

  /// Graded-lex descending rendering with explicit '*' and '^'.
  std::string render(char v1, char v2) const;

  void check_same_domain(const TermMap& other) const;

 private:
  Domain domain_;
  Map terms_;
};

}  // namespace ccjac
