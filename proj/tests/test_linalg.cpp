#include <gtest/gtest.h>

#include "ccjac/linalg.hpp"
#include "support.hpp"

using namespace ccjac;
using namespace ccjac::linalg;
using ccjac::test::Gen;

namespace {

template <class T>
Matrix<T> mul(const Matrix<T>& a, const Matrix<T>& b) {
  Matrix<T> c(a.rows(), b.cols(), T(0));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j)
      for (std::size_t k = 0; k < a.cols(); ++k) c(i, j) += a(i, k) * b(k, j);
  return c;
}

// Determinant by cofactor expansion; only used on small matrices.
Integer det(const IntMatrix& m) {
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  if (n == 1) return m(0, 0);
  Integer acc = 0;
  for (std::size_t c = 0; c < n; ++c) {
    IntMatrix minor(n - 1, n - 1);
    for (std::size_t i = 1; i < n; ++i)
      for (std::size_t j = 0, k = 0; j < n; ++j)
        if (j != c) minor(i - 1, k++) = m(i, j);
    const Integer term = m(0, c) * det(minor);
    acc += (c % 2 ? -term : term);
  }
  return acc;
}

IntMatrix random_matrix(Gen& g, std::size_t r, std::size_t c) {
  IntMatrix m(r, c, Integer(0));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = g.between(-6, 6);
  return m;
}

}  // namespace

TEST(Smith, Decomposition) {
  Gen g(61);
  for (int n = 0; n < 200; ++n) {
    const auto r = static_cast<std::size_t>(g.between(1, 5)), c = static_cast<std::size_t>(g.between(1, 5));
    IntMatrix m = random_matrix(g, r, c);
    SmithForm f = smith_normal_form(m);
    EXPECT_TRUE(abs(det(f.U)) == 1);
    EXPECT_TRUE(abs(det(f.V)) == 1);
    IntMatrix s = mul(mul(f.U, m), f.V);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) {
        EXPECT_EQ(s(i, j), f.S(i, j));
        if (i != j) EXPECT_EQ(s(i, j), 0);
      }
    for (std::size_t i = 0; i + 1 < f.rank; ++i) {
      EXPECT_GT(f.S(i, i), 0);
      EXPECT_TRUE(f.S(i + 1, i + 1) % f.S(i, i) == 0);
    }
  }
}

TEST(Smith, IntegralSolve) {
  Gen g(62);
  for (int n = 0; n < 200; ++n) {
    IntMatrix m = random_matrix(g, 3, 4);
    std::vector<Integer> x0(4);
    for (auto& v : x0) v = g.between(-4, 4);
    std::vector<Integer> rhs(3, 0);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 4; ++j) rhs[i] += m(i, j) * x0[j];
    auto x = solve_integral(m, rhs);
    ASSERT_TRUE(x);
    for (std::size_t i = 0; i < 3; ++i) {
      Integer acc = 0;
      for (std::size_t j = 0; j < 4; ++j) acc += m(i, j) * (*x)[j];
      EXPECT_EQ(acc, rhs[i]);
    }
  }
  IntMatrix two(1, 1, Integer(2));
  EXPECT_FALSE(solve_integral(two, {Integer(1)}));
}

TEST(Rational, Solve) {
  Gen g(63);
  for (int n = 0; n < 100; ++n) {
    Matrix<Rational> m(3, 3, Rational(0));
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) {
        const long n = g.between(-5, 5);
        m(i, j) = test::rat(n, g.between(1, 3));
      }
    std::vector<Rational> rhs{Rational(g.between(-3, 3)), Rational(1), Rational(0)};
    auto x = solve_rational(m, rhs);
    if (!x) continue;
    for (std::size_t i = 0; i < 3; ++i) {
      Rational acc = 0;
      for (std::size_t j = 0; j < 3; ++j) acc += m(i, j) * (*x)[j];
      EXPECT_EQ(acc, rhs[i]);
    }
  }
  Matrix<Rational> z(1, 1, Rational(0));
  EXPECT_FALSE(solve_rational(z, {Rational(1)}));
}

TEST(Param, Solve) {
  // [[a, b], [b, a]] x = [1, 0]  ->  x = [a, -b] / (a^2 - b^2)
  const ParamPoly a = ParamPoly::a(), b = ParamPoly::b();
  Matrix<ParamPoly> m(2, 2);
  m(0, 0) = a; m(0, 1) = b; m(1, 0) = b; m(1, 1) = a;
  auto x = solve_param(m, {ParamPoly(Rational(1)), ParamPoly()});
  ASSERT_TRUE(x);
  const ParamPoly den = a * a - b * b;
  EXPECT_EQ((*x)[0], ParamFraction(a, den));
  EXPECT_EQ((*x)[1], ParamFraction(-b, den));
}
