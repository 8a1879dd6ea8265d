#include "ccjac/terms.hpp"

#include <sstream>

namespace ccjac {

void TermMap::check_same_domain(const TermMap& other) const {
  if (domain_ != other.domain_) {
    throw Error(Errc::DomainMismatch, "domain mismatch: " + std::string(domain_.tag()) +
                                          " vs " + std::string(other.domain_.tag()));
  }
}

Scalar TermMap::coeff(Monomial m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Scalar::zero(domain_) : it->second;
}

void TermMap::add_term(Monomial m, const Scalar& c) {
  if (c.domain() != domain_) {
    throw Error(Errc::DomainMismatch, "coefficient of " + std::string(c.domain().tag()) +
                                          " added to polynomial over " +
                                          std::string(domain_.tag()));
  }
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

TermMap& TermMap::operator+=(const TermMap& rhs) {
  check_same_domain(rhs);
  for (const auto& [m, c] : rhs.terms_) add_term(m, c);
  return *this;
}

TermMap& TermMap::operator-=(const TermMap& rhs) {
  check_same_domain(rhs);
  for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
  return *this;
}

TermMap TermMap::negated() const {
  TermMap r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

TermMap TermMap::scaled(const Scalar& c) const {
  TermMap r(domain_);
  if (c.is_zero()) return r;
  for (const auto& [m, v] : terms_) r.add_term(m, v * c);
  return r;
}

bool operator==(const TermMap& l, const TermMap& r) {
  return l.domain_ == r.domain_ && l.terms_ == r.terms_;
}

int TermMap::total_degree() const {
  return terms_.empty() ? -1 : static_cast<int>(terms_.rbegin()->first.degree());
}

TermMap TermMap::top_form() const {
  TermMap r(domain_);
  const int d = total_degree();
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (static_cast<int>(it->first.degree()) != d) break;
    r.terms_.emplace(it->first, it->second);
  }
  return r;
}

std::string TermMap::render(char v1, char v2) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    Scalar mag = c;
    if (c.is_negative_looking()) {
      os << (first ? "-" : " - ");
      mag = -c;
    } else if (!first) {
      os << " + ";
    }
    first = false;
    bool wrote = false;
    if (!mag.is_one() || m.degree() == 0) {
      if (mag.needs_parens()) {
        os << '(' << mag.to_string() << ')';
      } else {
        os << mag.to_string();
      }
      wrote = true;
    }
    auto power = [&](char v, unsigned e) {
      if (e == 0) return;
      if (wrote) os << '*';
      os << v;
      if (e > 1) os << '^' << e;
      wrote = true;
    };
    power(v1, m.first);
    power(v2, m.second);
  }
  return os.str();
}

}  // namespace ccjac
