#pragma once

// Seeded random instances and fuzz campaigns. Everything generated is a pure
// function of the seed: instance i draws from its own stream derived from
// (seed, i), so campaigns are reproducible and instances are independent.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "ccjac/centralizer.hpp"
#include "ccjac/report.hpp"
#include "ccjac/weyl.hpp"

namespace ccjac {

struct GenConfig {
  std::uint64_t seed = 0;
  unsigned word_length_max = 4;
  unsigned shear_degree_max = 3;
  unsigned coefficient_bound = 3;
  unsigned p_degree_max = 4;
  /// Steps that would push the image of x or y past this total degree are
  /// redrawn; tame compositions otherwise blow up degrees multiplicatively.
  unsigned image_degree_max = 12;
  /// Same for the number of terms of an image, counting every monomial in
  /// x, y and the parameters a, b; keeps parametric coefficients small.
  unsigned image_size_max = 64;
  unsigned instance_count = 100;
  Domain domain = Domain::integers();

  /// Throws Errc::InvalidInstance when a bound is zero.
  void validate() const;
};

/// Bounded draws on top of mt19937_64; the reduction is written out so the
/// stream does not depend on the standard library's distributions.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  static Rng for_instance(std::uint64_t seed, std::uint64_t index);

  std::uint64_t next() { return engine_(); }
  /// Uniform in [0, n), n > 0.
  std::uint64_t below(std::uint64_t n);
  /// Uniform in [lo, hi].
  long between(long lo, long hi);
  bool coin() { return (next() >> 63) != 0; }

 private:
  std::mt19937_64 engine_;
};

/// Random element of cfg.domain with small coefficients.
Scalar random_scalar(Rng& rng, const GenConfig& cfg, bool nonzero = false);
/// Random unit of cfg.domain.
Scalar random_unit(Rng& rng, const GenConfig& cfg);
UniPoly random_unipoly(Rng& rng, const GenConfig& cfg, unsigned max_degree);
BiPoly random_bipoly(Rng& rng, const GenConfig& cfg, unsigned max_total_degree);
WeylElement random_weyl(Rng& rng, const GenConfig& cfg, unsigned max_total_degree);

struct TamePair {
  TameAutomorphism g;
  BiPoly A, B;
};

/// A = g(x), B = g(y) for a random word g of length <= word_length_max.
TamePair gen_tame_pair(Rng& rng, const GenConfig& cfg);

struct CentralizerElement {
  BiPoly w;
  UniPoly p;
};

/// w = p(A) for a random p of degree <= p_degree_max.
CentralizerElement gen_centralizer_element(Rng& rng, const BiPoly& A, const GenConfig& cfg);

struct WeylPair {
  WeylAutomorphism g;
  WeylElement A, B;
};

WeylPair gen_weyl_pair(Rng& rng, const GenConfig& cfg);

struct WeylCentralizerElement {
  WeylElement w;
  UniPoly p;
};

WeylCentralizerElement gen_weyl_centralizer_element(Rng& rng, const WeylElement& A,
                                                    const GenConfig& cfg);

struct InstanceOutcome {
  std::size_t index = 0;
  bool passed = true;
  bool contradiction = false;
  /// One line per sub-check; failures and contradictions carry the instance.
  std::vector<std::string> lines;
};

struct CampaignReport {
  GenConfig config;
  std::vector<InstanceOutcome> instances;
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::size_t contradictions = 0;

  Report to_report() const;
};

/// Runs instance_count instances. Each instance checks a tame commutative
/// pair, its Weyl twin and, over domains with non-units, a control pair
/// A = c + m*y that has no mate.
CampaignReport campaign(const GenConfig& cfg);

}  // namespace ccjac
