#pragma once

// Test-side generators and oracles. Generators draw from their own
// mt19937_64 so the suites do not lean on the library's fuzz harness.

#include <cstdint>
#include <map>
#include <ostream>
#include <random>
#include <vector>

#include "ccjac/coeff.hpp"
#include "ccjac/poly2.hpp"
#include "ccjac/weyl.hpp"

namespace ccjac {

// gtest prints through these
inline std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }
inline std::ostream& operator<<(std::ostream& os, const BiPoly& p) { return os << p.to_string(); }
inline std::ostream& operator<<(std::ostream& os, const WeylElement& p) { return os << p.to_string(); }
inline std::ostream& operator<<(std::ostream& os, const UniPoly& p) { return os << p.to_string(); }

}  // namespace ccjac

namespace ccjac::test {

/// Canonical n/d; gmpxx leaves the two-argument constructor unreduced.
inline Rational rat(long n, long d) {
  Rational r(n, d);
  r.canonicalize();
  return r;
}

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : eng_(seed) {}

  long between(long lo, long hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
    std::uint64_t v;
    do v = eng_(); while (v >= limit);
    return lo + static_cast<long>(v % span);
  }
  bool coin() { return between(0, 1) == 1; }

  Scalar scalar(Domain d, long bound = 3) {
    switch (d.kind()) {
      case DomainKind::IntegerRing:
        return Scalar(Integer(between(-bound, bound)));
      case DomainKind::RationalField:
        {
        const long n = between(-bound, bound);
        return Scalar(rat(n, between(1, bound)));
      }
      case DomainKind::ParamSubring:
      case DomainKind::ParamFractionField: {
        // a rational constant or a short sum of d0 generators
        static const unsigned gens[][2] = {{0, 0}, {2, 0}, {1, 1}, {0, 2}, {3, 0}, {0, 3}};
        ParamPoly p;
        const long n = between(0, 2);
        for (long i = 0; i < n; ++i) {
          const auto& g = gens[between(0, 5)];
          p += ParamPoly::monomial(Rational(between(-bound, bound)), g[0], g[1]);
        }
        if (d.kind() == DomainKind::ParamSubring) return Scalar(p);
        return Scalar(ParamFraction(p));
      }
    }
    return Scalar();
  }

  Scalar nonzero_scalar(Domain d, long bound = 3) {
    for (;;) {
      Scalar s = scalar(d, bound);
      if (!s.is_zero()) return s;
    }
  }

  BiPoly bipoly(Domain d, unsigned max_deg, long bound = 3) {
    BiPoly p(d);
    const long n = between(0, 2 + 2 * static_cast<long>(max_deg));
    for (long i = 0; i < n; ++i) {
      const unsigned deg = static_cast<unsigned>(between(0, max_deg));
      const unsigned ex = static_cast<unsigned>(between(0, deg));
      p += BiPoly::monomial(scalar(d, bound), ex, deg - ex);
    }
    return p;
  }

  WeylElement weyl(Domain d, unsigned max_deg, long bound = 3) {
    return WeylElement(bipoly(d, max_deg, bound).term_map());
  }

  UniPoly unipoly(Domain d, unsigned max_deg, long bound = 3) {
    std::vector<Scalar> c;
    const unsigned deg = static_cast<unsigned>(between(0, max_deg));
    for (unsigned i = 0; i <= deg; ++i) c.push_back(scalar(d, bound));
    return UniPoly(d, c);
  }

  /// Non-constant univariate polynomial of degree exactly `deg`.
  UniPoly unipoly_of_degree(Domain d, unsigned deg, long bound = 3) {
    std::vector<Scalar> c;
    for (unsigned i = 0; i < deg; ++i) c.push_back(scalar(d, bound));
    c.push_back(nonzero_scalar(d, bound));
    return UniPoly(d, c);
  }

 private:
  std::mt19937_64 eng_;
};

/// Value of p at a rational point; p must be over int or rat.
inline Rational eval_at(const BiPoly& p, const Rational& x, const Rational& y) {
  Rational acc = 0;
  for (const auto& [m, c] : p.terms()) {
    Rational term = *c.as_rational();
    for (unsigned i = 0; i < m.first; ++i) term *= x;
    for (unsigned j = 0; j < m.second; ++j) term *= y;
    acc += term;
  }
  return acc;
}

/// Dense rational polynomial in t, index = exponent.
using Dense = std::vector<Rational>;

inline void trim(Dense& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

/// Action of a normal-ordered element on Q[t]: X multiplies by t and Y
/// differentiates, which realizes YX - XY = 1.
inline Dense act(const WeylElement& p, const Dense& f) {
  Dense out;
  for (const auto& [m, c] : p.terms()) {
    Dense g = f;
    for (unsigned j = 0; j < m.second; ++j) {
      Dense d;
      for (std::size_t k = 1; k < g.size(); ++k) d.push_back(g[k] * Rational(static_cast<long>(k)));
      g = d;
    }
    const Rational cr = *c.as_rational();
    if (out.size() < g.size() + m.first) out.resize(g.size() + m.first);
    for (std::size_t k = 0; k < g.size(); ++k) out[k + m.first] += cr * g[k];
  }
  trim(out);
  return out;
}

}  // namespace ccjac::test
