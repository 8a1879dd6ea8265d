#include <gtest/gtest.h>

#include "ccjac/expr.hpp"
#include "ccjac/instance.hpp"
#include "ccjac/report.hpp"
#include "support.hpp"

using namespace ccjac;

namespace {

const Domain Zd = Domain::integers();

std::string error_of(std::string_view text) {
  try {
    parse_instance(text);
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::InvalidInstance);
    return e.what();
  }
  ADD_FAILURE() << "accepted: " << text;
  return "";
}

}  // namespace

TEST(Instance, Parse) {
  InstanceFile f = parse_instance(
      "# comment\n"
      "version: ccjac/1\n"
      "task: cc-verify\n"
      "domain: int\n"
      "A: x + y^2\n"
      "B: y\n"
      "w: (x + y^2)^3 + 2   # trailing comment\n"
      "step: shear-x t^2\n");
  EXPECT_EQ(f.task, "cc-verify");
  EXPECT_TRUE(f.domain_given);
  EXPECT_EQ(*f.A, "x + y^2");
  EXPECT_EQ(*f.w, "(x + y^2)^3 + 2");
  ASSERT_EQ(f.steps.size(), 1u);
  TameAutomorphism g = tame_word(f);
  EXPECT_EQ(apply_automorphism(g, BiPoly::x(Zd)), parse_bipoly(*f.A, Zd));
  EXPECT_FALSE(f.is_weyl());
}

TEST(Instance, Errors) {
  EXPECT_NE(error_of("task: jac\n").find("version"), std::string::npos);
  EXPECT_NE(error_of("version: ccjac/2\n").find("line 1"), std::string::npos);
  EXPECT_NE(error_of("version: ccjac/1\ncolour: red\n").find("line 2"), std::string::npos);
  EXPECT_NE(error_of("version: ccjac/1\nA: x\nA: y\n").find("line 3"), std::string::npos);
  EXPECT_NE(error_of("version: ccjac/1\ntask: solve\n").find("line 2"), std::string::npos);
  error_of("version: ccjac/1\nno colon here\n");
  error_of("version: ccjac/1\nmax-deg: -3\n");
}

TEST(Instance, RoundTrip) {
  InstanceFile f;
  f.task = "weyl-cc-verify";
  f.domain = Domain::d0();
  f.domain_given = true;
  f.A = "(a*X+b*Y)^2";
  f.B = "X";
  f.w = "1";
  f.max_deg = 4;
  f.steps = {"shear-yw t^2", "scale -1", "symplectic 1 1 0 1"};
  InstanceFile g = parse_instance(write_instance(f));
  EXPECT_EQ(g.task, f.task);
  EXPECT_EQ(g.domain, f.domain);
  EXPECT_EQ(g.A, f.A);
  EXPECT_EQ(g.max_deg, f.max_deg);
  EXPECT_EQ(g.steps, f.steps);
  EXPECT_TRUE(g.is_weyl());
}

TEST(Instance, WordsRoundTrip) {
  test::Gen gen(71);
  for (int n = 0; n < 50; ++n) {
    TameAutomorphism t(Zd);
    t.push(ShearX{gen.unipoly(Zd, 3)});
    t.push(AffineUnit{Scalar(Integer(0)), Scalar(Integer(1)), Scalar(Integer(-1)),
                      Scalar(Integer(0)), gen.scalar(Zd), gen.scalar(Zd)});
    t.push(ShearY{gen.unipoly(Zd, 2)});
    InstanceFile f = parse_instance(write_instance(word_instance(t)));
    f.domain = Zd;
    EXPECT_EQ(apply_automorphism(tame_word(f), BiPoly::x(Zd)), apply_automorphism(t, BiPoly::x(Zd)));

    const Domain d0 = Domain::d0();
    WeylAutomorphism w(d0);
    w.push(ShearYW{gen.unipoly(d0, 2)});
    w.push(UnitScale{Scalar(ParamPoly(Rational(-1)))});
    InstanceFile h = parse_instance(write_instance(word_instance(w)));
    EXPECT_EQ(h.domain, d0);
    EXPECT_EQ(weyl_apply(weyl_word(h), WeylElement::Y(d0)), weyl_apply(w, WeylElement::Y(d0)));
  }
}

TEST(Instance, Steps) {
  EXPECT_THROW(parse_tame_step("shear-z t", Zd), Error);
  EXPECT_THROW(parse_tame_step("affine 1 0 0", Zd), Error);
  // steps parse syntactically; the relation is checked when the word is built
  EXPECT_THROW(WeylAutomorphism(Zd, {parse_weyl_step("scale 2", Zd)}), Error);
  EXPECT_THROW(parse_weyl_step("scale", Zd), Error);
  auto s = parse_tame_step("affine 0 1 1 0 (1+2) -3", Zd);
  ASSERT_TRUE(std::holds_alternative<AffineUnit>(s));
  EXPECT_EQ(std::get<AffineUnit>(s).t1, Scalar(Integer(3)));
}

TEST(Report, Formats) {
  Report r("demo");
  r.field("domain", "int").flag("ok", true).array("coefficients", {"1/3", "1/3"}).array("none", {});
  EXPECT_EQ(r.render(ReportFormat::Structured),
            "format: ccjac/1\nreport: demo\ndomain: int\nok: true\ncoefficients: [1/3, 1/3]\nnone: []\n");
  EXPECT_EQ(r.render(ReportFormat::Text),
            "demo\n  domain        int\n  ok            true\n  coefficients  1/3, 1/3\n"
            "  none          (none)\n");
}

TEST(Report, InA) {
  Report r("in-a");
  add_in_a(r, InAResult::from_coefficients(Zd, {Scalar(Rational(1, 3)), Scalar(Rational(1, 3))}));
  EXPECT_EQ(r.render(ReportFormat::Structured),
            "format: ccjac/1\nreport: in-a\nin_qa: true\ncoefficients: [1/3, 1/3]\nin_da: false\n"
            "clearing_denominator: 3\n");
}
