#include "ccjac/linalg.hpp"

#include <algorithm>

namespace ccjac::linalg {

namespace {

void row_axpy(IntMatrix& m, std::size_t dst, std::size_t src, const Integer& q) {
  // row_dst -= q * row_src
  for (std::size_t c = 0; c < m.cols(); ++c) m(dst, c) -= q * m(src, c);
}

void col_axpy(IntMatrix& m, std::size_t dst, std::size_t src, const Integer& q) {
  for (std::size_t r = 0; r < m.rows(); ++r) m(r, dst) -= q * m(r, src);
}

Integer tdiv(const Integer& a, const Integer& b) {
  Integer q;
  mpz_tdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  SmithForm f{IntMatrix::identity(rows), m, IntMatrix::identity(cols), 0};
  IntMatrix& S = f.S;
  const std::size_t diag = std::min(rows, cols);

  for (std::size_t t = 0; t < diag; ++t) {
    // Smallest non-zero magnitude in the trailing block becomes the pivot.
    auto bring_min_to_pivot = [&](bool whole_block) {
      std::size_t br = rows, bc = cols;
      for (std::size_t i = t; i < rows; ++i) {
        for (std::size_t j = t; j < cols; ++j) {
          if (!whole_block && i != t && j != t) continue;
          if (S(i, j) == 0) continue;
          if (br == rows || abs(S(i, j)) < abs(S(br, bc))) {
            br = i;
            bc = j;
          }
        }
      }
      if (br == rows) return false;
      S.swap_rows(t, br);
      f.U.swap_rows(t, br);
      S.swap_cols(t, bc);
      f.V.swap_cols(t, bc);
      return true;
    };

    if (!bring_min_to_pivot(true)) break;

    for (;;) {
      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (S(i, t) == 0) continue;
        Integer q = tdiv(S(i, t), S(t, t));
        row_axpy(S, i, t, q);
        row_axpy(f.U, i, t, q);
        if (S(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (S(t, j) == 0) continue;
        Integer q = tdiv(S(t, j), S(t, t));
        col_axpy(S, j, t, q);
        col_axpy(f.V, j, t, q);
        if (S(t, j) != 0) clean = false;
      }
      if (!clean) {
        bring_min_to_pivot(false);
        continue;
      }
      // Divisibility of the trailing block by the pivot.
      bool divides = true;
      for (std::size_t i = t + 1; i < rows && divides; ++i) {
        for (std::size_t j = t + 1; j < cols; ++j) {
          if (!mpz_divisible_p(S(i, j).get_mpz_t(), S(t, t).get_mpz_t())) {
            for (std::size_t c = 0; c < cols; ++c) S(t, c) += S(i, c);
            for (std::size_t c = 0; c < rows; ++c) f.U(t, c) += f.U(i, c);
            divides = false;
            break;
          }
        }
      }
      if (divides) break;
    }
    if (S(t, t) < 0) {
      for (std::size_t c = 0; c < cols; ++c) S(t, c) = -S(t, c);
      for (std::size_t c = 0; c < rows; ++c) f.U(t, c) = -f.U(t, c);
    }
    f.rank = t + 1;
  }
  return f;
}

std::optional<std::vector<Integer>> solve_integral(const IntMatrix& m,
                                                   const std::vector<Integer>& rhs) {
  const SmithForm f = smith_normal_form(m);
  std::vector<Integer> ur(m.rows(), Integer(0));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t k = 0; k < m.rows(); ++k) ur[i] += f.U(i, k) * rhs[k];
  }
  std::vector<Integer> y(m.cols(), Integer(0));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (i < f.rank) {
      const Integer& s = f.S(i, i);
      if (!mpz_divisible_p(ur[i].get_mpz_t(), s.get_mpz_t())) return std::nullopt;
      mpz_divexact(y[i].get_mpz_t(), ur[i].get_mpz_t(), s.get_mpz_t());
    } else if (ur[i] != 0) {
      return std::nullopt;
    }
  }
  std::vector<Integer> x(m.cols(), Integer(0));
  for (std::size_t i = 0; i < m.cols(); ++i) {
    for (std::size_t k = 0; k < f.rank; ++k) x[i] += f.V(i, k) * y[k];
  }
  return x;
}

std::optional<std::vector<Rational>> solve_rational(const Matrix<Rational>& m,
                                                    const std::vector<Rational>& rhs) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  Matrix<Rational> a(rows, cols + 1, Rational(0));
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) a(i, j) = m(i, j);
    a(i, cols) = rhs[i];
  }
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a(p, c) == 0) ++p;
    if (p == rows) continue;
    a.swap_rows(p, r);
    Rational inv = 1 / a(r, c);
    for (std::size_t j = c; j <= cols; ++j) a(r, j) *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a(i, c) == 0) continue;
      Rational factor = a(i, c);
      for (std::size_t j = c; j <= cols; ++j) a(i, j) -= factor * a(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < rows; ++i) {
    if (a(i, cols) != 0) return std::nullopt;
  }
  std::vector<Rational> x(cols, Rational(0));
  for (std::size_t k = 0; k < pivots.size(); ++k) x[pivots[k]] = a(k, cols);
  return x;
}

namespace {

std::size_t weight(const ParamPoly& p) {
  return static_cast<std::size_t>(p.total_degree()) * 1024 + p.terms().size();
}

}  // namespace

std::optional<std::vector<ParamFraction>> solve_param(const Matrix<ParamPoly>& m,
                                                      const std::vector<ParamPoly>& rhs) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  Matrix<ParamPoly> a(rows, cols + 1);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) a(i, j) = m(i, j);
    a(i, cols) = rhs[i];
  }
  ParamPoly prev(Rational(1));
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = rows;
    for (std::size_t i = r; i < rows; ++i) {
      if (a(i, c).is_zero()) continue;
      if (p == rows || weight(a(i, c)) < weight(a(p, c))) p = i;
    }
    if (p == rows) continue;
    a.swap_rows(p, r);
    const ParamPoly piv = a(r, c);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r) continue;
      const ParamPoly lead = a(i, c);
      for (std::size_t j = 0; j <= cols; ++j) {
        if (j == c) continue;
        ParamPoly v = piv * a(i, j);
        if (!lead.is_zero()) v -= lead * a(r, j);
        auto q = v.divide(prev);
        if (!q) {
          throw Error(Errc::InternalContradiction,
                      "fraction-free elimination produced an inexact division");
        }
        a(i, j) = std::move(*q);
      }
      a(i, c) = ParamPoly();
    }
    prev = piv;
    pivots.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < rows; ++i) {
    if (!a(i, cols).is_zero()) return std::nullopt;
  }
  std::vector<ParamFraction> x(cols);
  for (std::size_t k = 0; k < pivots.size(); ++k) {
    x[pivots[k]] = ParamFraction(a(k, cols), a(k, pivots[k]));
  }
  return x;
}

std::optional<std::vector<Scalar>> solve_over_fraction_field(const Matrix<Scalar>& m,
                                                             const std::vector<Scalar>& rhs) {
  if (m.rows() == 0 || m.cols() == 0) {
    for (const auto& v : rhs) {
      if (!v.is_zero()) return std::nullopt;
    }
    std::vector<Scalar> x;
    return x;
  }
  const Domain d = m(0, 0).domain();
  const Domain field = d.fraction_field();
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();

  if (field == Domain::rationals()) {
    Matrix<Rational> q(rows, cols, Rational(0));
    std::vector<Rational> b(rows);
    for (std::size_t i = 0; i < rows; ++i) {
      for (std::size_t j = 0; j < cols; ++j) q(i, j) = *m(i, j).as_rational();
      b[i] = *rhs[i].as_rational();
    }
    auto x = solve_rational(q, b);
    if (!x) return std::nullopt;
    std::vector<Scalar> out;
    for (auto& v : *x) out.emplace_back(v);
    return out;
  }

  // Parametric: clear each row's denominators to reach Q[a,b].
  Matrix<ParamPoly> pm(rows, cols);
  std::vector<ParamPoly> pb(rows);
  for (std::size_t i = 0; i < rows; ++i) {
    std::vector<ParamFraction> row;
    row.reserve(cols + 1);
    for (std::size_t j = 0; j <= cols; ++j) {
      const Scalar& s = j < cols ? m(i, j) : rhs[i];
      row.push_back(std::get<ParamFraction>(s.to_fraction().rep()));
    }
    ParamPoly scale(Rational(1));
    for (const auto& f : row) {
      if (!f.den().is_constant() && !scale.divide(f.den())) scale = scale * f.den();
    }
    for (std::size_t j = 0; j <= cols; ++j) {
      auto q = (row[j].num() * scale).divide(row[j].den());
      if (!q) {
        throw Error(Errc::InternalContradiction, "row scaling failed to clear a denominator");
      }
      (j < cols ? pm(i, j) : pb[i]) = std::move(*q);
    }
  }
  auto x = solve_param(pm, pb);
  if (!x) return std::nullopt;
  std::vector<Scalar> out;
  for (auto& v : *x) out.emplace_back(std::move(v));
  return out;
}

}  // namespace ccjac::linalg
