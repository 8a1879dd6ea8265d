#pragma once

// Reports. The structured form is a line-based schema:
//
//   format: ccjac/1
//   report: <command>
//   <key>: <value>
//   <key>: [<v1>, <v2>, ...]
//
// Keys keep insertion order, values are exact integers, p/q rationals or
// rendered polynomials (never floating point), and nothing time-dependent is
// written, so equal inputs give byte-identical reports.

#include <span>
#include <string>
#include <variant>
#include <vector>

#include "ccjac/centralizer.hpp"

namespace ccjac {

enum class ReportFormat { Text, Structured };

class Report {
 public:
  explicit Report(std::string kind) : kind_(std::move(kind)) {}

  Report& field(std::string key, std::string value);
  Report& flag(std::string key, bool value);
  Report& array(std::string key, std::vector<std::string> values);

  const std::string& kind() const { return kind_; }
  std::string render(ReportFormat format) const;

 private:
  using Value = std::variant<std::string, std::vector<std::string>>;
  std::string kind_;
  std::vector<std::pair<std::string, Value>> entries_;
};

std::vector<std::string> render_scalars(std::span<const Scalar> values);

/// in_qa, coefficients, in_da, clearing_denominator (or the failure stage).
void add_in_a(Report& r, const InAOutcome& outcome);
/// pair_ok, commutes, in_qa..., in_da, notes.
void add_verdict(Report& r, const CCVerdict& v);

}  // namespace ccjac
