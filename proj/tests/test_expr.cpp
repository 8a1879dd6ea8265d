#include <functional>

#include <gtest/gtest.h>

#include "ccjac/expr.hpp"
#include "support.hpp"

using namespace ccjac;
using ccjac::test::Gen;

namespace {

Errc code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error";
  return Errc::InvalidInstance;
}

const Domain Zd = Domain::integers();

}  // namespace

TEST(Expr, RoundTripCommutative) {
  Gen g(51);
  const Domain ds[] = {Zd, Domain::rationals(), Domain::d0(), Domain::frac_d0()};
  for (int n = 0; n < 500; ++n) {
    const Domain d = ds[n % 4];
    BiPoly p = g.bipoly(d, 4, 9);
    EXPECT_EQ(parse_bipoly(p.to_string(), d), p) << d.tag() << ": " << p.to_string();
  }
}

TEST(Expr, RoundTripWeylAndUnivariate) {
  Gen g(52);
  for (int n = 0; n < 500; ++n) {
    const Domain d = n % 2 ? Domain::rationals() : Domain::d0();
    WeylElement p = g.weyl(d, 4, 9);
    EXPECT_EQ(parse_weyl(p.to_string(), d), p) << p.to_string();
    UniPoly u = g.unipoly(d, 5, 9);
    EXPECT_EQ(parse_unipoly(u.to_string(), d), u) << u.to_string();
  }
}

TEST(Expr, FractionRoundTrip) {
  const Domain f = Domain::frac_d0();
  for (const char* s : {"x/(a+b)", "(a^2-b)/(a*b^3)*x*y", "-x/a+y/(b-1)"}) {
    BiPoly p = parse_bipoly(s, f);
    EXPECT_EQ(parse_bipoly(p.to_string(), f), p) << p.to_string();
  }
}

TEST(Expr, Precedence) {
  EXPECT_EQ(parse_bipoly("-x^2", Zd), parse_bipoly("-(x^2)", Zd));
  EXPECT_EQ(parse_bipoly("2*x+3*x*y-4", Zd), parse_bipoly("(2*x)+((3*x)*y)-4", Zd));
  EXPECT_EQ(parse_bipoly("x-y-1", Zd), parse_bipoly("(x-y)-1", Zd));
  EXPECT_EQ(parse_bipoly("x/2*4", Domain::rationals()), parse_bipoly("2*x", Domain::rationals()));
  EXPECT_EQ(parse_bipoly(" ( x + y ) ^ 2 ", Zd), parse_bipoly("x^2+2*x*y+y^2", Zd));
  EXPECT_EQ(parse_scalar("a*b-3", Domain::d0()),
            Scalar(ParamPoly::monomial(1, 1, 1) - ParamPoly(Rational(3))));
}

TEST(Expr, Errors) {
  EXPECT_EQ(code_of([] { parse_bipoly("x+", Zd); }), Errc::SyntaxError);
  EXPECT_EQ(code_of([] { parse_bipoly("2x", Zd); }), Errc::SyntaxError);
  EXPECT_EQ(code_of([] { parse_bipoly("(x", Zd); }), Errc::SyntaxError);
  EXPECT_EQ(code_of([] { parse_bipoly("x $ y", Zd); }), Errc::SyntaxError);
  EXPECT_EQ(code_of([] { parse_bipoly("X", Zd); }), Errc::VariableNotAllowed);
  EXPECT_EQ(code_of([] { parse_weyl("x", Zd); }), Errc::VariableNotAllowed);
  EXPECT_EQ(code_of([] { parse_bipoly("a*x", Zd); }), Errc::VariableNotAllowed);
  EXPECT_EQ(code_of([] { parse_unipoly("x", Zd); }), Errc::VariableNotAllowed);
  EXPECT_EQ(code_of([] { parse_bipoly("x^-1", Zd); }), Errc::ExponentNegative);
  EXPECT_EQ(code_of([] { parse_bipoly("x/2", Zd); }), Errc::CoefficientNotInDomain);
  EXPECT_EQ(code_of([] { parse_bipoly("a*x", Domain::d0()); }), Errc::CoefficientNotInDomain);
  EXPECT_NE(code_of([] { parse_bipoly("1/x", Domain::rationals()); }), Errc::InvalidInstance);
  EXPECT_NE(code_of([] { parse_bipoly("x/0", Domain::rationals()); }), Errc::InvalidInstance);
}

TEST(Expr, ErrorPositions) {
  try {
    parse_bipoly("x + * y", Zd);
    FAIL();
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("1:5"), std::string::npos) << e.what();
  }
}

TEST(Expr, Ast) {
  ExprAst ast = parse("(x+1)^3", ExprContext::Commutative, Zd);
  EXPECT_EQ(ast.kind, ExprAst::Kind::Power);
  EXPECT_EQ(ast.exponent, 3u);
  ASSERT_EQ(ast.children.size(), 1u);
  EXPECT_EQ(lower_commutative(ast, Zd), parse_bipoly("x^3+3*x^2+3*x+1", Zd));
}
