#pragma once

// Fixed worked examples with known answers, re-derived on every run.

#include <string>
#include <vector>

#include "ccjac/report.hpp"

namespace ccjac {

struct GoldenCheck {
  std::string name;
  bool passed = false;
  std::string detail;  // what was computed
};

std::vector<GoldenCheck> run_golden_checks();
Report golden_report(const std::vector<GoldenCheck>& checks);

}  // namespace ccjac
