#include "ccjac/report.hpp"

#include <algorithm>
#include <sstream>

#include "ccjac/instance.hpp"

namespace ccjac {

Report& Report::field(std::string key, std::string value) {
  entries_.emplace_back(std::move(key), std::move(value));
  return *this;
}

Report& Report::flag(std::string key, bool value) {
  return field(std::move(key), value ? "true" : "false");
}

Report& Report::array(std::string key, std::vector<std::string> values) {
  entries_.emplace_back(std::move(key), std::move(values));
  return *this;
}

namespace {

std::string join(const std::vector<std::string>& v, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += sep;
    out += v[i];
  }
  return out;
}

}  // namespace

std::string Report::render(ReportFormat format) const {
  std::ostringstream out;
  if (format == ReportFormat::Structured) {
    out << "format: " << kFormatVersion << '\n' << "report: " << kind_ << '\n';
    for (const auto& [key, value] : entries_) {
      out << key << ": ";
      if (auto* s = std::get_if<std::string>(&value)) {
        out << *s;
      } else {
        out << '[' << join(std::get<std::vector<std::string>>(value), ", ") << ']';
      }
      out << '\n';
    }
    return out.str();
  }

  std::size_t width = 0;
  for (const auto& e : entries_) width = std::max(width, e.first.size());
  out << kind_ << '\n';
  for (const auto& [key, value] : entries_) {
    out << "  " << key << std::string(width - key.size() + 2, ' ');
    if (auto* s = std::get_if<std::string>(&value)) {
      out << *s;
    } else {
      const auto& v = std::get<std::vector<std::string>>(value);
      out << (v.empty() ? "(none)" : join(v, ", "));
    }
    out << '\n';
  }
  return out.str();
}

std::vector<std::string> render_scalars(std::span<const Scalar> values) {
  std::vector<std::string> out;
  out.reserve(values.size());
  for (const auto& v : values) out.push_back(v.to_string());
  return out;
}

void add_in_a(Report& r, const InAOutcome& outcome) {
  if (const auto* res = std::get_if<InAResult>(&outcome)) {
    r.flag("in_qa", true);
    r.array("coefficients", render_scalars(res->coefficients));
    r.flag("in_da", res->in_base_domain);
    r.field("clearing_denominator", res->clearing_denominator.to_string());
    return;
  }
  const auto& miss = std::get<NotInQA>(outcome);
  r.flag("in_qa", false);
  r.field("stage", std::string(peel_stage_name(miss.stage)));
  r.field("detail", miss.detail);
  r.flag("in_da", false);
}

void add_verdict(Report& r, const CCVerdict& v) {
  r.flag("pair_ok", v.pair_ok);
  r.flag("commutes", v.commutes);
  if (v.in_qa) {
    add_in_a(r, *v.in_qa);
  } else if (v.not_in_qa) {
    add_in_a(r, *v.not_in_qa);
  } else {
    r.field("in_qa", "not-evaluated");
    r.flag("in_da", false);
  }
  r.field("notes", v.notes);
}

}  // namespace ccjac
