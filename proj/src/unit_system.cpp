#include "unit_system.hpp"

#include <map>

#include "ccjac/linalg.hpp"

namespace ccjac::detail {

UnitSystemSolution solve_for_unit(Domain d, const std::vector<TermMap>& images) {
  std::map<Monomial, std::size_t> row_of;
  row_of.emplace(Monomial{}, 0);
  for (const auto& img : images) {
    for (const auto& [m, c] : img.terms()) row_of.emplace(m, 0);
  }
  std::size_t next = 0;
  for (auto& [m, idx] : row_of) idx = next++;

  const std::size_t rows = row_of.size();
  const std::size_t cols = images.size();
  const std::size_t unit_row = row_of.at(Monomial{});

  UnitSystemSolution out;

  if (d == Domain::integers()) {
    linalg::Matrix<Rational> q(rows, cols, Rational(0));
    std::vector<Rational> qb(rows, Rational(0));
    linalg::IntMatrix z(rows, cols, Integer(0));
    std::vector<Integer> zb(rows, Integer(0));
    for (std::size_t k = 0; k < cols; ++k) {
      for (const auto& [m, c] : images[k].terms()) {
        const Integer& v = std::get<Integer>(c.rep());
        q(row_of.at(m), k) = Rational(v);
        z(row_of.at(m), k) = v;
      }
    }
    qb[unit_row] = 1;
    zb[unit_row] = 1;
    auto rational = linalg::solve_rational(q, qb);
    if (!rational) return out;
    out.field_solvable = true;
    bool integral = true;
    for (const auto& v : *rational) integral = integral && v.get_den() == 1;
    std::vector<Integer> sol;
    if (integral) {
      for (const auto& v : *rational) sol.emplace_back(v.get_num());
    } else {
      auto snf = linalg::solve_integral(z, zb);
      if (!snf) {
        out.note = "solvable over Q but not over Z (Smith normal form)";
        return out;
      }
      sol = std::move(*snf);
    }
    std::vector<Scalar> s;
    for (auto& v : sol) s.emplace_back(std::move(v));
    out.solution = std::move(s);
    return out;
  }

  linalg::Matrix<Scalar> m(rows, cols, Scalar::zero(d));
  std::vector<Scalar> rhs(rows, Scalar::zero(d));
  for (std::size_t k = 0; k < cols; ++k) {
    for (const auto& [mono, c] : images[k].terms()) m(row_of.at(mono), k) = c;
  }
  rhs[unit_row] = Scalar::one(d);
  auto sol = linalg::solve_over_fraction_field(m, rhs);
  if (!sol) return out;
  out.field_solvable = true;
  if (d.is_field()) {
    out.solution = std::move(*sol);
    return out;
  }
  std::vector<Scalar> base;
  for (const auto& v : *sol) {
    auto e = fraction_in_domain(v);
    if (!e) {
      out.note =
          "solvable over the fraction field; the particular solution is not in the base "
          "domain (inconclusive)";
      return out;
    }
    base.push_back(std::move(*e));
  }
  out.solution = std::move(base);
  return out;
}

}  // namespace ccjac::detail
