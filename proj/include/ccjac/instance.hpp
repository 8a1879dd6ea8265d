#pragma once

// Instance files: one `key: value` pair per line, '#' starts a comment.
//
//   version: ccjac/1
//   task: cc-verify
//   domain: int
//   A: x + y^2
//   B: y
//   w: (x + y^2)^3 + 2
//   step: shear-x t^2
//
// Keys: version (required), task, domain, A, B, w, max-deg, step (repeatable,
// applied in file order). Unknown keys are rejected.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ccjac/centralizer.hpp"
#include "ccjac/coeff.hpp"
#include "ccjac/weyl.hpp"

namespace ccjac {

inline constexpr std::string_view kFormatVersion = "ccjac/1";

struct InstanceFile {
  std::string version{kFormatVersion};
  std::string task;
  Domain domain = Domain::integers();
  bool domain_given = false;
  std::optional<std::string> A, B, w;
  std::optional<unsigned> max_deg;
  std::vector<std::string> steps;

  bool is_weyl() const { return task.starts_with("weyl-"); }
};

/// Throws Errc::InvalidInstance with the offending line number.
InstanceFile parse_instance(std::string_view text);
std::string write_instance(const InstanceFile& inst);

/// "affine m11 m12 m21 m22 t1 t2", "shear-x <t-expr>", "shear-y <t-expr>".
TameStep parse_tame_step(std::string_view text, Domain domain);
/// "shear-xw <t-expr>", "shear-yw <t-expr>", "scale l", "symplectic m11 m12 m21 m22".
WeylStep parse_weyl_step(std::string_view text, Domain domain);

TameAutomorphism tame_word(const InstanceFile& inst);
WeylAutomorphism weyl_word(const InstanceFile& inst);

/// Instance holding just the steps of a word.
InstanceFile word_instance(const TameAutomorphism& g);
InstanceFile word_instance(const WeylAutomorphism& g);

}  // namespace ccjac
