#include "ccjac/instance.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <sstream>

#include "ccjac/error.hpp"
#include "ccjac/expr.hpp"

namespace ccjac {

namespace {

constexpr std::array<std::string_view, 13> kTasks = {
    "jac",       "pair",      "dep",       "in-a",      "mate-search",
    "cc-verify", "weyl-comm", "weyl-pair", "weyl-in-a", "weyl-mate-search",
    "weyl-cc-verify", "auto", "weyl-auto"};

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

[[noreturn]] void bad(unsigned line, const std::string& what) {
  throw Error(Errc::InvalidInstance, "line " + std::to_string(line) + ": " + what);
}

/// Whitespace-separated words, except inside parentheses.
std::vector<std::string> split_args(std::string_view s) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  for (char c : s) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if ((c == ' ' || c == '\t') && depth == 0) {
      if (!cur.empty()) out.push_back(std::move(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(std::move(cur));
  return out;
}

std::pair<std::string_view, std::string_view> head_and_rest(std::string_view text) {
  text = trim(text);
  const auto sp = text.find_first_of(" \t");
  if (sp == std::string_view::npos) return {text, {}};
  return {text.substr(0, sp), trim(text.substr(sp))};
}

std::vector<Scalar> scalar_args(std::string_view kind, std::string_view rest, std::size_t n,
                                Domain domain) {
  auto words = split_args(rest);
  if (words.size() != n) {
    throw Error(Errc::InvalidInstance, std::string(kind) + " expects " + std::to_string(n) +
                                           " arguments, got " + std::to_string(words.size()));
  }
  std::vector<Scalar> out;
  for (const auto& w : words) out.push_back(parse_scalar(w, domain));
  return out;
}

UniPoly shear_arg(std::string_view kind, std::string_view rest, Domain domain) {
  if (rest.empty()) throw Error(Errc::InvalidInstance, std::string(kind) + " needs a polynomial in t");
  return parse_unipoly(rest, domain);
}

}  // namespace

InstanceFile parse_instance(std::string_view text) {
  InstanceFile inst;
  inst.version.clear();
  unsigned lineno = 0;
  std::istringstream in{std::string(text)};
  std::string raw;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string_view line = raw;
    // '#' never occurs in an expression, so it always starts a comment
    line = trim(line.substr(0, line.find('#')));
    if (line.empty()) continue;
    const auto colon = line.find(':');
    if (colon == std::string_view::npos) bad(lineno, "expected 'key: value'");
    const std::string_view key = trim(line.substr(0, colon));
    const std::string_view value = trim(line.substr(colon + 1));
    auto once = [&](bool already) {
      if (already) bad(lineno, "duplicate key '" + std::string(key) + "'");
    };
    if (key == "version") {
      once(!inst.version.empty());
      if (value != kFormatVersion) {
        bad(lineno, "unsupported version '" + std::string(value) + "'");
      }
      inst.version = value;
    } else if (key == "task") {
      once(!inst.task.empty());
      if (std::find(kTasks.begin(), kTasks.end(), value) == kTasks.end()) {
        bad(lineno, "unknown task '" + std::string(value) + "'");
      }
      inst.task = value;
    } else if (key == "domain") {
      once(inst.domain_given);
      try {
        inst.domain = Domain::from_tag(value);
      } catch (const Error& e) {
        bad(lineno, e.what());
      }
      inst.domain_given = true;
    } else if (key == "A" || key == "B" || key == "w") {
      auto& slot = key == "A" ? inst.A : key == "B" ? inst.B : inst.w;
      once(slot.has_value());
      if (value.empty()) bad(lineno, "empty expression for " + std::string(key));
      slot = std::string(value);
    } else if (key == "max-deg") {
      once(inst.max_deg.has_value());
      unsigned v = 0;
      auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), v);
      if (ec != std::errc() || ptr != value.data() + value.size()) {
        bad(lineno, "max-deg must be a non-negative integer");
      }
      inst.max_deg = v;
    } else if (key == "step") {
      if (value.empty()) bad(lineno, "empty step");
      inst.steps.emplace_back(value);
    } else {
      bad(lineno, "unknown key '" + std::string(key) + "'");
    }
  }
  if (inst.version.empty()) {
    throw Error(Errc::InvalidInstance, "missing 'version: " + std::string(kFormatVersion) + "'");
  }
  return inst;
}

std::string write_instance(const InstanceFile& inst) {
  std::ostringstream out;
  out << "version: " << inst.version << '\n';
  if (!inst.task.empty()) out << "task: " << inst.task << '\n';
  out << "domain: " << inst.domain.tag() << '\n';
  if (inst.A) out << "A: " << *inst.A << '\n';
  if (inst.B) out << "B: " << *inst.B << '\n';
  if (inst.w) out << "w: " << *inst.w << '\n';
  if (inst.max_deg) out << "max-deg: " << *inst.max_deg << '\n';
  for (const auto& s : inst.steps) out << "step: " << s << '\n';
  return out.str();
}

TameStep parse_tame_step(std::string_view text, Domain domain) {
  auto [kind, rest] = head_and_rest(text);
  if (kind == "affine") {
    auto v = scalar_args(kind, rest, 6, domain);
    return AffineUnit{v[0], v[1], v[2], v[3], v[4], v[5]};
  }
  if (kind == "shear-x") return ShearX{shear_arg(kind, rest, domain)};
  if (kind == "shear-y") return ShearY{shear_arg(kind, rest, domain)};
  throw Error(Errc::InvalidInstance, "unknown step '" + std::string(kind) +
                                         "' (expected affine, shear-x or shear-y)");
}

WeylStep parse_weyl_step(std::string_view text, Domain domain) {
  auto [kind, rest] = head_and_rest(text);
  if (kind == "shear-xw") return ShearXW{shear_arg(kind, rest, domain)};
  if (kind == "shear-yw") return ShearYW{shear_arg(kind, rest, domain)};
  if (kind == "scale") return UnitScale{scalar_args(kind, rest, 1, domain)[0]};
  if (kind == "symplectic") {
    auto v = scalar_args(kind, rest, 4, domain);
    return LinearSymplectic{v[0], v[1], v[2], v[3]};
  }
  throw Error(Errc::InvalidInstance, "unknown Weyl step '" + std::string(kind) +
                                         "' (expected shear-xw, shear-yw, scale or symplectic)");
}

TameAutomorphism tame_word(const InstanceFile& inst) {
  TameAutomorphism g(inst.domain);
  for (const auto& s : inst.steps) g.push(parse_tame_step(s, inst.domain));
  return g;
}

WeylAutomorphism weyl_word(const InstanceFile& inst) {
  WeylAutomorphism g(inst.domain);
  for (const auto& s : inst.steps) g.push(parse_weyl_step(s, inst.domain));
  return g;
}

InstanceFile word_instance(const TameAutomorphism& g) {
  InstanceFile inst;
  inst.task = "auto";
  inst.domain = g.domain();
  inst.domain_given = true;
  for (const auto& s : g.word()) inst.steps.push_back(step_to_string(s));
  return inst;
}

InstanceFile word_instance(const WeylAutomorphism& g) {
  InstanceFile inst;
  inst.task = "weyl-auto";
  inst.domain = g.domain();
  inst.domain_given = true;
  for (const auto& s : g.word()) inst.steps.push_back(weyl_step_to_string(s));
  return inst;
}

}  // namespace ccjac
