#pragma once

// Exact linear systems for the bounded mate searches.

#include <cstddef>
#include <optional>
#include <vector>

#include "ccjac/coeff.hpp"

namespace ccjac::linalg {

template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill = T())
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n, T(0));
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntMatrix = Matrix<Integer>;

/// U * M * V = S with U, V unimodular and S diagonal, s_1 | s_2 | ..., s_i > 0.
struct SmithForm {
  IntMatrix U;
  IntMatrix S;
  IntMatrix V;
  std::size_t rank = 0;
};

SmithForm smith_normal_form(const IntMatrix& m);

/// Some integral x with m * x = rhs, or empty when none exists.
std::optional<std::vector<Integer>> solve_integral(const IntMatrix& m,
                                                   const std::vector<Integer>& rhs);

/// Reduced row-echelon solve over Q; free variables set to zero.
std::optional<std::vector<Rational>> solve_rational(const Matrix<Rational>& m,
                                                    const std::vector<Rational>& rhs);

/// Fraction-free Gauss-Jordan over Q[a,b]; the solution lies in Q(a,b) with
/// free variables set to zero.
std::optional<std::vector<ParamFraction>> solve_param(const Matrix<ParamPoly>& m,
                                                      const std::vector<ParamPoly>& rhs);

/// Solves m * x = rhs over Q(D) for entries of any single domain D.
/// Returned entries live in Q(D).
std::optional<std::vector<Scalar>> solve_over_fraction_field(const Matrix<Scalar>& m,
                                                             const std::vector<Scalar>& rhs);

}  // namespace ccjac::linalg
