#include <gtest/gtest.h>

#include "ccjac/expr.hpp"
#include "ccjac/weyl.hpp"
#include "support.hpp"

using namespace ccjac;
using ccjac::test::act;
using ccjac::test::Dense;
using ccjac::test::Gen;

namespace {

const Domain Zd = Domain::integers();
const Domain Q = Domain::rationals();

WeylElement W(const char* s, Domain d = Zd) { return parse_weyl(s, d); }
Scalar Z(long v) { return Scalar(Integer(v)); }

Dense t_pow(unsigned n) {
  Dense f(n + 1, Rational(0));
  f[n] = 1;
  return f;
}

WeylAutomorphism random_word(Gen& g, unsigned length) {
  WeylAutomorphism w(Zd);
  for (unsigned i = 0; i < length; ++i) {
    switch (g.between(0, 3)) {
      case 0: w.push(ShearYW{g.unipoly(Zd, 2, 2)}); break;
      case 1: w.push(ShearXW{g.unipoly(Zd, 2, 2)}); break;
      case 2: w.push(UnitScale{Z(-1)}); break;
      default: {
        const long k = g.between(-2, 2), l = g.between(-2, 2);
        w.push(LinearSymplectic{Z(1 + k * l), Z(k), Z(l), Z(1)});
      }
    }
  }
  return w;
}

}  // namespace

TEST(Weyl, DefiningRelation) {
  EXPECT_EQ(W("Y*X"), W("X*Y+1"));
  EXPECT_EQ(commutator(W("Y"), W("X")), W("1"));
  EXPECT_EQ(W("Y^2*X^2"), W("X^2*Y^2+4*X*Y+2"));
  EXPECT_EQ(W("(a*X+b*Y)^2", Domain::d0()), W("a^2*X^2+2*a*b*X*Y+b^2*Y^2+a*b", Domain::d0()));
}

TEST(Weyl, ProductMatchesDifferentialOperators) {
  Gen g(41);
  for (int n = 0; n < 200; ++n) {
    WeylElement p = g.weyl(Q, 5), q = g.weyl(Q, 5);
    WeylElement pq = weyl_mul(p, q);
    for (unsigned k = 0; k <= 10; ++k) {
      EXPECT_EQ(act(pq, t_pow(k)), act(p, act(q, t_pow(k)))) << p.to_string() << " * " << q.to_string();
    }
  }
}

TEST(Weyl, RingAxioms) {
  Gen g(42);
  for (int n = 0; n < 200; ++n) {
    WeylElement p = g.weyl(Zd, 3), q = g.weyl(Zd, 3), r = g.weyl(Zd, 3);
    EXPECT_EQ((p * q) * r, p * (q * r));
    EXPECT_EQ(p * (q + r), p * q + p * r);
    EXPECT_EQ((p + q) * r, p * r + q * r);
    EXPECT_EQ(p * WeylElement::constant(Z(1)), p);
  }
}

TEST(Weyl, BracketAxioms) {
  Gen g(43);
  for (int n = 0; n < 200; ++n) {
    WeylElement p = g.weyl(Zd, 3), q = g.weyl(Zd, 3), r = g.weyl(Zd, 3);
    EXPECT_EQ(commutator(p, q), p * q - q * p);
    EXPECT_EQ(commutator(p, q), -commutator(q, p));
    EXPECT_TRUE((commutator(p, commutator(q, r)) + commutator(q, commutator(r, p)) +
                 commutator(r, commutator(p, q)))
                    .is_zero());
    EXPECT_EQ(commutator(p, q * r), commutator(p, q) * r + q * commutator(p, r));
  }
}

TEST(Weyl, LeadingFormsMultiply) {
  Gen g(44);
  for (Domain d : {Zd, Domain::d0()}) {
    for (int n = 0; n < 200; ++n) {
      WeylElement p = g.weyl(d, 4), q = g.weyl(d, 4);
      EXPECT_EQ(leading_form(p * q), leading_form(p) * leading_form(q));
    }
  }
}

TEST(Weyl, UsefulEquation) {
  EXPECT_EQ(useful_equation(parse_unipoly("t", Zd), 2), W("2*X"));
  EXPECT_EQ(useful_equation(parse_unipoly("t^2", Zd), 1), W("2*Y"));
  Gen g(45);
  for (int n = 0; n < 50; ++n) {
    UniPoly t = g.unipoly(Zd, 6);
    for (unsigned i = 0; i <= 6; ++i)
      EXPECT_EQ(useful_equation(t, i), commutator(in_Y(t), in_X(parse_unipoly("t", Zd)).pow(i)));
  }
}

TEST(Weyl, BracketWithAffineY) {
  // [B, 2 + 3Y] = -sum 3 i b_ij X^(i-1) Y^j
  Gen g(46);
  const WeylElement A = W("2+3*Y");
  for (int n = 0; n < 50; ++n) {
    WeylElement B = g.weyl(Zd, 4);
    WeylElement expect(Zd);
    for (const auto& [m, c] : B.terms())
      if (m.first > 0) expect -= WeylElement::monomial(c.times(3 * static_cast<long>(m.first)), m.first - 1, m.second);
    EXPECT_EQ(commutator(B, A), expect);
  }
  EXPECT_EQ(commutator(W("X*Y"), A), W("-3*Y"));
}

TEST(Weyl, InA) {
  auto o = weyl_express_in_A(W("2+3*Y"), W("1+Y"));
  auto* r = std::get_if<InAResult>(&o);
  ASSERT_TRUE(r);
  EXPECT_EQ(r->coefficients, (std::vector<Scalar>{Scalar(Rational(1, 3)), Scalar(Rational(1, 3))}));
  EXPECT_FALSE(r->in_base_domain);
  EXPECT_THROW(weyl_express_in_A(W("X"), W("Y")), Error);
  const Domain f = Domain::frac_d0();
  auto m = weyl_express_in_A(W("(a*X+b*Y)^2", f), W("(a*X+b*Y)^3", f));
  ASSERT_TRUE(std::holds_alternative<NotInQA>(m));
  EXPECT_EQ(std::get<NotInQA>(m).stage, PeelStage::DegreeIndivisible);
}

TEST(Weyl, PeelingAgreesWithConjugation) {
  Gen g(47);
  for (int n = 0; n < 100; ++n) {
    WeylAutomorphism word = random_word(g, static_cast<unsigned>(g.between(1, 3)));
    WeylElement A = weyl_apply(word, WeylElement::X(Zd));
    if (A.total_degree().value() > 6) continue;
    UniPoly p = g.unipoly(Zd, 3);
    WeylElement w = eval_univariate(p, A);
    auto o = weyl_express_in_A(A, w);
    ASSERT_TRUE(std::holds_alternative<InAResult>(o)) << A.to_string();
    const auto& peeled = std::get<InAResult>(o);
    EXPECT_TRUE(peeled.in_base_domain);
    EXPECT_EQ(peeled.coefficients, weyl_membership_via_automorphism(word, w).coefficients);
    EXPECT_EQ(peeled.witness, p.to_fraction_field());
  }
}

TEST(Weyl, AutomorphismsRespectTheRelation) {
  Gen g(48);
  for (int n = 0; n < 100; ++n) {
    WeylAutomorphism word = random_word(g, static_cast<unsigned>(g.between(1, 4)));
    WeylElement gx = weyl_apply(word, WeylElement::X(Zd));
    WeylElement gy = weyl_apply(word, WeylElement::Y(Zd));
    EXPECT_EQ(commutator(gy, gx), W("1"));
    WeylElement p = g.weyl(Zd, 2);
    EXPECT_EQ(weyl_apply(weyl_invert(word), weyl_apply(word, p)), p);
  }
  EXPECT_THROW(WeylAutomorphism(Zd, {UnitScale{Z(2)}}), Error);
  EXPECT_THROW(WeylAutomorphism(Zd, {LinearSymplectic{Z(1), Z(1), Z(1), Z(1)}}), Error);
}

TEST(Weyl, DixmierPairsAndMates) {
  EXPECT_TRUE(is_dixmier_pair(W("Y"), W("X")));
  EXPECT_FALSE(is_dixmier_pair(W("2+3*Y"), W("X")));
  EXPECT_FALSE(dixmier_mate_search_bounded(W("2+3*Y"), 6).mate);
  auto r = dixmier_mate_search_bounded(W("2+3*Y", Q), 1);
  ASSERT_TRUE(r.mate);
  EXPECT_TRUE(is_dixmier_pair(W("2+3*Y", Q), *r.mate));
  EXPECT_FALSE(dixmier_mate_search_bounded(W("(a*X+b*Y)^2", Domain::d0()), 4).mate);
  const Scalar lambda = dixmier_scale(W("Y"), W("X"));
  EXPECT_EQ(commutator(W("X").scaled(lambda), W("Y")), W("1"));
}

TEST(Weyl, Verdict) {
  auto v = weyl_verify_cc_instance(W("X+Y^2"), W("Y"), W("(X+Y^2)^2"));
  EXPECT_TRUE(v.pair_ok && v.commutes && v.in_da);
  auto n = weyl_verify_cc_instance(W("2+3*Y"), W("X"), W("1+Y"));
  EXPECT_FALSE(n.pair_ok);
  EXPECT_FALSE(n.in_da);
}
