#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ccjac/terms.hpp"

namespace ccjac::detail {

struct UnitSystemSolution {
  std::optional<std::vector<Scalar>> solution;  // over D
  bool field_solvable = false;
  std::string note;
};

/// Coefficients x_k in D with sum_k x_k * images[k] == 1, when they exist.
/// Over Z integrality is decided exactly through the Smith normal form; over
/// d0 only the particular fraction-field solution is tested for membership.
UnitSystemSolution solve_for_unit(Domain d, const std::vector<TermMap>& images);

}  // namespace ccjac::detail
