#pragma once

// Expression front end.
//
// Grammar (explicit '*', no juxtaposition):
//   expr    := term (('+' | '-') term)*
//   term    := unary (('*' | '/') unary)*
//   unary   := '-' unary | power
//   power   := primary ('^' INT)?
//   primary := INT | VAR | '(' expr ')'
//
// Variables: x, y in commutative context; X, Y in Weyl context; t in
// univariate context; the parameters a, b only over d0 and frac-d0.
// Division is only allowed by expressions free of the main variables.

#include <string>
#include <string_view>
#include <vector>

#include "ccjac/coeff.hpp"
#include "ccjac/poly2.hpp"
#include "ccjac/weyl.hpp"

namespace ccjac {

enum class ExprContext { Commutative, Weyl, Univariate };

struct SourcePos {
  unsigned line = 1;
  unsigned column = 1;
};

struct ExprAst {
  enum class Kind { Literal, Variable, Sum, Difference, Product, Quotient, Power, Negation, Group };

  Kind kind = Kind::Literal;
  SourcePos pos;
  Rational value;  // Literal
  char variable = 0;
  unsigned exponent = 0;  // Power
  std::vector<ExprAst> children;
};

/// Throws Errc::SyntaxError, Errc::VariableNotAllowed or
/// Errc::ExponentNegative; messages carry "line:column".
ExprAst parse(std::string_view text, ExprContext context, Domain domain);

/// Throws Errc::CoefficientNotInDomain when a coefficient leaves `domain`.
BiPoly lower_commutative(const ExprAst& ast, Domain domain);
WeylElement lower_weyl(const ExprAst& ast, Domain domain);
UniPoly lower_univariate(const ExprAst& ast, Domain domain);

BiPoly parse_bipoly(std::string_view text, Domain domain);
WeylElement parse_weyl(std::string_view text, Domain domain);
UniPoly parse_unipoly(std::string_view text, Domain domain);
/// A constant of `domain` (only the parameters a, b may appear).
Scalar parse_scalar(std::string_view text, Domain domain);

}  // namespace ccjac
