#pragma once

// Jacobian pairs, polynomial-in-A membership and tame automorphisms of D[x,y].

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "ccjac/coeff.hpp"
#include "ccjac/poly2.hpp"

namespace ccjac {

/// w = sum c_i A^i with c_i in Q(D).
struct InAResult {
  Domain base = Domain::integers();
  std::vector<Scalar> coefficients;  // over Q(D)
  bool in_base_domain = false;
  Scalar clearing_denominator;  // d in D with d * c_i in D for every i
  UniPoly witness;              // over Q(D)

  /// Assembles the result from coefficients, filling the derived fields.
  static InAResult from_coefficients(Domain base, std::vector<Scalar> coefficients);
};

enum class PeelStage {
  DegreeIndivisible,    // deg w is not a multiple of deg A
  NonConstantQuotient,  // leading forms are not proportional over Q(D)
  NonConstantResidue,   // A is constant but w is not
};

std::string_view peel_stage_name(PeelStage stage);

struct NotInQA {
  PeelStage stage;
  std::string detail;
};

using InAOutcome = std::variant<InAResult, NotInQA>;

/// Jac(A, B) is a unit of the coefficient domain.
bool is_jacobian_pair(const BiPoly& A, const BiPoly& B);

/// Jac(A, w) == 0.
bool commutes(const BiPoly& A, const BiPoly& w);

/// Decides w in Q(D)[A] by peeling leading y-coefficients (x-coefficients
/// when A is free of y), returning the coefficients on success.
InAOutcome express_in_A(const BiPoly& A, const BiPoly& w);

struct ClearedDenominators {
  Scalar d;
  UniPoly scaled;  // d * witness, over D
};

/// Over Z the least common multiple of the reduced denominators; over d0 a
/// product of pairwise non-associate denominators, lifted into d0 by a
/// monomial factor when needed; over a field 1.
ClearedDenominators clear_denominators(Domain base, std::span<const Scalar> coefficients);
ClearedDenominators clear_denominators(const InAResult& res);

struct MateSearchOptions {
  /// Maximum number of unknown coefficients, i.e. monomials of degree <= bound.
  std::size_t max_unknowns = 496;
};

struct MateSearchResult {
  std::optional<BiPoly> mate;
  /// Jac(A, B) = 1 has a solution over Q(D) within the bound.
  bool solvable_over_fraction_field = false;
  std::string note;
};

/// Looks for B of total degree <= bound with Jac(A, B) a unit. An empty
/// result only means that no mate exists within the bound.
MateSearchResult mate_search_bounded(const BiPoly& A, unsigned max_total_degree,
                                     const MateSearchOptions& options = {});

// ---------------------------------------------------------------- tame words

/// (x, y) -> (m11 x + m12 y + t1, m21 x + m22 y + t2), determinant a unit.
struct AffineUnit {
  Scalar m11, m12, m21, m22, t1, t2;
};
/// (x, y) -> (x + f(y), y)
struct ShearX {
  UniPoly f;
};
/// (x, y) -> (x, y + f(x))
struct ShearY {
  UniPoly f;
};

using TameStep = std::variant<AffineUnit, ShearX, ShearY>;

/// Word of elementary automorphisms of D[x,y]. Applying the word substitutes
/// its steps from left to right.
class TameAutomorphism {
 public:
  explicit TameAutomorphism(Domain domain) : domain_(domain) {}
  /// Throws Errc::NotInvertible or Errc::DomainMismatch for an invalid step.
  TameAutomorphism(Domain domain, std::vector<TameStep> word);

  Domain domain() const { return domain_; }
  const std::vector<TameStep>& word() const { return word_; }
  void push(TameStep step);

 private:
  Domain domain_;
  std::vector<TameStep> word_;
};

std::string step_to_string(const TameStep& step);

BiPoly apply_automorphism(const TameAutomorphism& g, const BiPoly& p);
TameAutomorphism invert_automorphism(const TameAutomorphism& g);

/// w in D[A] for A = g(x), read off from g^{-1}(w) in D[x].
/// Throws Errc::NotCommuting, or Errc::InternalContradiction when g^{-1}(w)
/// involves y.
InAResult membership_via_automorphism(const TameAutomorphism& g, const BiPoly& w);

struct CCVerdict {
  bool pair_ok = false;
  bool commutes = false;
  std::optional<InAResult> in_qa;
  std::optional<NotInQA> not_in_qa;
  bool in_da = false;
  std::string notes;
};

/// Checks one instance of the centralizer conjecture. Throws
/// Errc::InternalContradiction if the pair and commutation premises hold but
/// w is not in Q(D)[A].
CCVerdict verify_cc_instance(const BiPoly& A, const BiPoly& B, const BiPoly& w);

}  // namespace ccjac
