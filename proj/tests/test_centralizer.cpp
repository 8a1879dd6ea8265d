#include <numeric>

#include <gtest/gtest.h>

#include "ccjac/centralizer.hpp"
#include "ccjac/expr.hpp"
#include "support.hpp"

using namespace ccjac;
using ccjac::test::Gen;

namespace {

const Domain Zd = Domain::integers();
const Domain Q = Domain::rationals();

BiPoly P(const char* s, Domain d = Zd) { return parse_bipoly(s, d); }
Scalar Z(long v) { return Scalar(Integer(v)); }
Scalar R(long n, long d) { return Scalar(Rational(n, d)); }

InAResult ok(const InAOutcome& o) {
  if (auto* r = std::get_if<InAResult>(&o)) return *r;
  ADD_FAILURE() << "NotInQA: " << std::get<NotInQA>(o).detail;
  return {};
}

// A random word over Z: unimodular affine maps and shears.
TameAutomorphism random_word(Gen& g, unsigned length) {
  TameAutomorphism w(Zd);
  for (unsigned i = 0; i < length; ++i) {
    switch (g.between(0, 2)) {
      case 0: {
        const long k = g.between(-2, 2), l = g.between(-2, 2);
        const Scalar u = g.coin() ? Z(1) : Z(-1);
        w.push(AffineUnit{u * Z(1 + k * l), u * Z(k), Z(l), Z(1), Z(g.between(-2, 2)),
                          Z(g.between(-2, 2))});
        break;
      }
      case 1: w.push(ShearX{g.unipoly(Zd, 2, 2)}); break;
      default: w.push(ShearY{g.unipoly(Zd, 2, 2)}); break;
    }
  }
  return w;
}

Integer brute_force_lcm(const std::vector<Rational>& cs) {
  for (Integer d = 1;; ++d) {
    bool all = true;
    for (const auto& c : cs) {
      Rational t = c * Rational(d);
      if (t.get_den() != 1) { all = false; break; }
    }
    if (all) return d;
  }
}

}  // namespace

TEST(InA, AffineExample) {
  const InAResult r = ok(express_in_A(P("2+3*y"), P("1+y")));
  EXPECT_EQ(r.coefficients, (std::vector<Scalar>{R(1, 3), R(1, 3)}));
  EXPECT_FALSE(r.in_base_domain);
  EXPECT_EQ(r.clearing_denominator, Z(3));
  EXPECT_EQ(eval_univariate(r.witness, P("2+3*y", Q)), P("1+y", Q));
}

TEST(InA, Failures) {
  // free of y: peeled in x
  EXPECT_TRUE(std::holds_alternative<InAResult>(express_in_A(P("x^2"), P("x^4+3"))));
  EXPECT_TRUE(std::holds_alternative<NotInQA>(express_in_A(P("x^2"), P("x^3"))));
  InAOutcome r = express_in_A(P("y^2"), P("y^3"));
  auto m = std::get_if<NotInQA>(&r);
  ASSERT_TRUE(m);
  EXPECT_EQ(m->stage, PeelStage::DegreeIndivisible);
  r = express_in_A(P("y"), P("x*y"));
  m = std::get_if<NotInQA>(&r);
  ASSERT_TRUE(m);
  EXPECT_EQ(m->stage, PeelStage::NonConstantQuotient);
  r = express_in_A(P("5"), P("x"));
  m = std::get_if<NotInQA>(&r);
  ASSERT_TRUE(m);
  EXPECT_EQ(m->stage, PeelStage::NonConstantResidue);
  EXPECT_TRUE(std::holds_alternative<InAResult>(express_in_A(P("5"), P("7"))));
}

TEST(InA, ParametricCube) {
  const Domain f = Domain::frac_d0();
  auto o = express_in_A(parse_bipoly("(a*x+b*y)^2", f), parse_bipoly("(a*x+b*y)^3", f));
  auto* m = std::get_if<NotInQA>(&o);
  ASSERT_TRUE(m);
  EXPECT_EQ(m->stage, PeelStage::DegreeIndivisible);
  auto o2 = express_in_A(parse_bipoly("(a*x+b*y)^2", f), parse_bipoly("(a*x+b*y)^4", f));
  EXPECT_EQ(ok(o2).coefficients.size(), 3u);
}

TEST(InA, PeelingAgreesWithConjugation) {
  Gen g(31);
  for (int n = 0; n < 100; ++n) {
    TameAutomorphism word = random_word(g, static_cast<unsigned>(g.between(1, 3)));
    BiPoly A = apply_automorphism(word, BiPoly::x(Zd));
    if (A.total_degree().value() > 8) continue;
    UniPoly p = g.unipoly(Zd, 3);
    BiPoly w = eval_univariate(p, A);
    const InAResult peeled = ok(express_in_A(A, w));
    InAResult conj = membership_via_automorphism(word, w);
    EXPECT_TRUE(peeled.in_base_domain);
    EXPECT_EQ(peeled.coefficients, conj.coefficients);
    EXPECT_EQ(peeled.witness, p.to_fraction_field());
  }
}

TEST(Automorphism, ApplyIsSubstitutionAndInverseUndoes) {
  Gen g(32);
  for (int n = 0; n < 100; ++n) {
    TameAutomorphism word = random_word(g, static_cast<unsigned>(g.between(1, 3)));
    BiPoly p = g.bipoly(Zd, 2);
    BiPoly gx = apply_automorphism(word, BiPoly::x(Zd));
    BiPoly gy = apply_automorphism(word, BiPoly::y(Zd));
    EXPECT_EQ(apply_automorphism(word, p), substitute(p, gx, gy));
    EXPECT_EQ(apply_automorphism(invert_automorphism(word), apply_automorphism(word, p)), p);
    EXPECT_TRUE(is_unit(Zd, eval_at_origin(jacobian(gx, gy))));
    EXPECT_TRUE(jacobian(gx, gy).is_constant());
  }
}

TEST(Automorphism, WordOrder) {
  // left to right: shear-x t^2 then swap-like affine
  TameAutomorphism g(Zd);
  g.push(ShearX{parse_unipoly("t^2", Zd)});
  g.push(AffineUnit{Z(0), Z(1), Z(1), Z(0), Z(0), Z(0)});
  EXPECT_EQ(apply_automorphism(g, BiPoly::x(Zd)), P("y+x^2"));
  EXPECT_THROW(g.push(AffineUnit{Z(2), Z(0), Z(0), Z(1), Z(0), Z(0)}), Error);
}

TEST(Automorphism, MembershipRejectsNonCommuting) {
  TameAutomorphism g(Zd);
  g.push(ShearX{parse_unipoly("t^2", Zd)});
  EXPECT_THROW(membership_via_automorphism(g, P("y")), Error);
}

TEST(ClearDenominators, LcmOverIntegersMatchesBruteForce) {
  Gen g(33);
  for (int n = 0; n < 200; ++n) {
    std::vector<Scalar> cs;
    std::vector<Rational> rs;
    const long len = g.between(1, 4);
    for (long i = 0; i < len; ++i) {
      const long num = g.between(-9, 9);
      const Rational r = test::rat(num, g.between(1, 12));
      rs.push_back(r);
      cs.emplace_back(r);
    }
    auto cd = clear_denominators(Zd, cs);
    EXPECT_EQ(cd.d, Scalar(brute_force_lcm(rs)));
    for (std::size_t i = 0; i < cs.size(); ++i)
      EXPECT_EQ(cd.scaled.coeff(i).to_fraction(), (cs[i] * cd.d.to_fraction()));
  }
}

TEST(ClearDenominators, OverD0AndFields) {
  const Domain d0 = Domain::d0();
  const Scalar half(ParamFraction(ParamPoly(Rational(1)), ParamPoly::monomial(1, 2, 0)));
  auto cd = clear_denominators(d0, std::vector<Scalar>{half, Scalar(ParamFraction(ParamPoly(Rational(3))))});
  EXPECT_TRUE(belongs_to(d0, cd.d));
  for (const Scalar& c : cd.scaled.coeffs()) EXPECT_TRUE(belongs_to(d0, c));
  EXPECT_EQ(clear_denominators(Q, std::vector<Scalar>{R(1, 7)}).d, Scalar(Rational(1)));
}

TEST(Pair, Predicates) {
  EXPECT_TRUE(is_jacobian_pair(P("x+y^2"), P("y")));
  EXPECT_FALSE(is_jacobian_pair(P("2+3*y"), P("x")));
  EXPECT_TRUE(is_jacobian_pair(P("2+3*y", Q), P("-x/3", Q)));
  EXPECT_TRUE(commutes(P("x+y^2"), P("(x+y^2)^2")));
  EXPECT_FALSE(commutes(P("x"), P("y")));
  const Domain d0 = Domain::d0();
  EXPECT_FALSE(is_jacobian_pair(parse_bipoly("(a*x+b*y)^2", d0), parse_bipoly("x*y", d0)));
}

TEST(Pair, JacobianOfSquareHasZeroConstantTerm) {
  // Jac(h^2, B) = 2h Jac(h, B) vanishes wherever h does
  Gen g(34);
  const Domain d0 = Domain::d0();
  BiPoly A = parse_bipoly("(a*x+b*y)^2", d0);
  for (int n = 0; n < 50; ++n) {
    BiPoly B = g.bipoly(d0, 3);
    EXPECT_TRUE(eval_at_origin(jacobian(A, B)).is_zero());
    EXPECT_FALSE(is_jacobian_pair(A, B));
  }
}

TEST(MateSearch, AffineOverIntegersAndRationals) {
  auto none = mate_search_bounded(P("2+3*y"), 6);
  EXPECT_FALSE(none.mate);
  EXPECT_TRUE(none.solvable_over_fraction_field);
  auto some = mate_search_bounded(P("2+3*y", Q), 1);
  ASSERT_TRUE(some.mate);
  EXPECT_TRUE(is_jacobian_pair(P("2+3*y", Q), *some.mate));
}

TEST(MateSearch, FindsMatesOfTameImages) {
  Gen g(35);
  for (int n = 0; n < 30; ++n) {
    TameAutomorphism word = random_word(g, 2);
    BiPoly A = apply_automorphism(word, BiPoly::x(Zd));
    BiPoly B = apply_automorphism(word, BiPoly::y(Zd));
    const unsigned bound = B.total_degree().value();
    if (A.total_degree().value() > 4 || bound > 4) continue;
    auto r = mate_search_bounded(A, bound);
    ASSERT_TRUE(r.mate) << A.to_string() << ": " << r.note;
    EXPECT_TRUE(is_jacobian_pair(A, *r.mate));
  }
}

TEST(MateSearch, Budget) {
  EXPECT_THROW(mate_search_bounded(P("x"), 40, {10}), Error);
}

TEST(Verdict, Instances) {
  auto v = verify_cc_instance(P("x+y^2"), P("y"), P("(x+y^2)^2-1"));
  EXPECT_TRUE(v.pair_ok && v.commutes && v.in_da);
  auto n = verify_cc_instance(P("2+3*y"), P("x"), P("1+y"));
  EXPECT_FALSE(n.pair_ok);
  EXPECT_TRUE(n.commutes);
  EXPECT_FALSE(n.in_da);
  auto c = verify_cc_instance(P("x"), P("y"), P("y"));
  EXPECT_FALSE(c.commutes);
  EXPECT_FALSE(c.in_da);
}
