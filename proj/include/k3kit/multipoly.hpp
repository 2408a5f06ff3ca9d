#pragma once

// Commutative polynomials over Q in formal generators x_0, x_1, ...
// Enough to run the Chern-character identities on symbols.

#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "k3kit/numeric.hpp"

namespace k3kit {

class MultiPoly {
 public:
  using Monomial = std::vector<unsigned>;  // exponent per generator, trailing zeros trimmed

  MultiPoly() = default;
  MultiPoly(const Rational& c) {  // NOLINT: implicit scalar embedding
    if (c != 0) terms_[{}] = c;
  }

  static MultiPoly generator(std::size_t index) {
    Monomial m(index + 1, 0);
    m[index] = 1;
    MultiPoly p;
    p.terms_[m] = 1;
    return p;
  }

  const std::map<Monomial, Rational>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  MultiPoly operator+(const MultiPoly& rhs) const {
    MultiPoly out = *this;
    for (const auto& [m, c] : rhs.terms_) out.add_term(m, c);
    return out;
  }
  MultiPoly operator-(const MultiPoly& rhs) const {
    MultiPoly out = *this;
    for (const auto& [m, c] : rhs.terms_) out.add_term(m, -c);
    return out;
  }
  MultiPoly operator*(const MultiPoly& rhs) const {
    MultiPoly out;
    for (const auto& [ma, ca] : terms_) {
      for (const auto& [mb, cb] : rhs.terms_) {
        Monomial m(std::max(ma.size(), mb.size()), 0);
        for (std::size_t i = 0; i < ma.size(); ++i) m[i] += ma[i];
        for (std::size_t i = 0; i < mb.size(); ++i) m[i] += mb[i];
        out.add_term(m, ca * cb);
      }
    }
    return out;
  }
  bool operator==(const MultiPoly& rhs) const { return terms_ == rhs.terms_; }

  std::string to_string(const std::string& prefix = "a") const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
      os << (first ? "" : " + ") << c;
      for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i] == 0) continue;
        os << '*' << prefix << i;
        if (m[i] > 1) os << '^' << m[i];
      }
      first = false;
    }
    return os.str();
  }

 private:
  void add_term(Monomial m, const Rational& c) {
    while (!m.empty() && m.back() == 0) m.pop_back();
    Rational& slot = terms_[m];
    slot += c;
    if (slot == 0) terms_.erase(m);
  }

  std::map<Monomial, Rational> terms_;
};

}  // namespace k3kit
