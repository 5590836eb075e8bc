#include "polarlink/monomial.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace polarlink {

Monomial::Monomial(std::size_t nvars) {
  if (nvars > kMaxVariables) throw std::length_error("too many variables");
  nvars_ = static_cast<std::uint8_t>(nvars);
}

Monomial::Monomial(std::initializer_list<unsigned> exponents)
    : Monomial(std::span<const unsigned>(exponents.begin(), exponents.size())) {}

Monomial::Monomial(std::span<const unsigned> exponents) : Monomial(exponents.size()) {
  for (std::size_t i = 0; i < exponents.size(); ++i) set(i, exponents[i]);
}

Monomial Monomial::variable(std::size_t nvars, std::size_t index, unsigned power) {
  Monomial m(nvars);
  m.set(index, power);
  return m;
}

void Monomial::set(std::size_t i, unsigned e) {
  if (i >= nvars_) throw std::out_of_range("variable index out of range");
  if (e > std::numeric_limits<Exponent>::max()) throw std::overflow_error("exponent overflow");
  degree_ = degree_ - exp_[i] + e;
  exp_[i] = static_cast<Exponent>(e);
}

bool Monomial::divides(const Monomial& other) const {
  if (degree_ > other.degree_) return false;
  for (std::size_t i = 0; i < nvars_; ++i)
    if (exp_[i] > other.exp_[i]) return false;
  return true;
}

Monomial Monomial::divided_by(const Monomial& divisor) const {
  Monomial r = *this;
  for (std::size_t i = 0; i < nvars_; ++i) r.exp_[i] = static_cast<Exponent>(exp_[i] - divisor.exp_[i]);
  r.degree_ = degree_ - divisor.degree_;
  return r;
}

Monomial Monomial::lcm(const Monomial& other) const {
  Monomial r(nvars_);
  for (std::size_t i = 0; i < nvars_; ++i) r.set(i, std::max(exp_[i], other.exp_[i]));
  return r;
}

bool Monomial::coprime(const Monomial& other) const {
  for (std::size_t i = 0; i < nvars_; ++i)
    if (exp_[i] != 0 && other.exp_[i] != 0) return false;
  return true;
}

std::uint32_t Monomial::support() const {
  std::uint32_t mask = 0;
  for (std::size_t i = 0; i < nvars_; ++i)
    if (exp_[i] != 0) mask |= (1u << i);
  return mask;
}

Monomial Monomial::resized(std::size_t nvars) const {
  Monomial r(nvars);
  for (std::size_t i = 0; i < nvars_; ++i) {
    if (i < nvars) {
      r.set(i, exp_[i]);
    } else if (exp_[i] != 0) {
      throw std::invalid_argument("cannot drop a variable that occurs in a monomial");
    }
  }
  return r;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial r = a;
  for (std::size_t i = 0; i < a.nvars_; ++i) {
    const unsigned e = unsigned(a.exp_[i]) + b.exp_[i];
    if (e > std::numeric_limits<Monomial::Exponent>::max()) throw std::overflow_error("exponent overflow");
    r.exp_[i] = static_cast<Monomial::Exponent>(e);
  }
  r.degree_ = a.degree_ + b.degree_;
  return r;
}

std::size_t Monomial::hash() const {
  std::size_t h = nvars_;
  for (std::size_t i = 0; i < nvars_; ++i) h = h * 1000003u ^ exp_[i];
  return h;
}

std::strong_ordering revlex_compare(const Monomial& a, const Monomial& b) {
  for (std::size_t i = a.nvars(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i] ? std::strong_ordering::greater : std::strong_ordering::less;
  }
  return std::strong_ordering::equal;
}

std::strong_ordering MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  switch (kind_) {
    case Kind::DegRevLex:
      if (a.degree() != b.degree()) return a.degree() <=> b.degree();
      return revlex_compare(a, b);
    case Kind::NegDegRevLex:
      if (a.degree() != b.degree()) return b.degree() <=> a.degree();
      return revlex_compare(a, b);
    case Kind::EliminateLast: {
      const std::size_t t = a.nvars() - 1;
      if (a[t] != b[t]) return a[t] <=> b[t];
      if (a.degree() != b.degree()) return a.degree() <=> b.degree();
      return revlex_compare(a, b);
    }
  }
  return std::strong_ordering::equal;
}

std::string MonomialOrder::name() const {
  switch (kind_) {
    case Kind::DegRevLex: return "global-degrevlex";
    case Kind::NegDegRevLex: return "local-negdegrevlex";
    case Kind::EliminateLast: return "eliminate-last";
  }
  return "?";
}

std::vector<Monomial> monomials_of_degree(std::size_t nvars, unsigned degree) {
  std::vector<Monomial> out;
  Monomial current(nvars);
  // Fill variables left to right; the last one takes the remainder.
  auto recurse = [&](auto&& self, std::size_t var, unsigned remaining) -> void {
    if (var + 1 == nvars) {
      current.set(var, remaining);
      out.push_back(current);
      current.set(var, 0);
      return;
    }
    for (unsigned e = remaining + 1; e-- > 0;) {
      current.set(var, e);
      self(self, var + 1, remaining - e);
    }
    current.set(var, 0);
  };
  if (nvars == 0) {
    if (degree == 0) out.push_back(current);
    return out;
  }
  recurse(recurse, 0, degree);
  return out;
}

std::string to_string(const Monomial& m, std::span<const std::string> names) {
  if (m.is_one()) return "1";
  std::string s;
  for (std::size_t i = 0; i < m.nvars(); ++i) {
    if (m[i] == 0) continue;
    if (!s.empty()) s += '*';
    s += i < names.size() ? names[i] : "z" + std::to_string(i);
    if (m[i] > 1) s += '^' + std::to_string(m[i]);
  }
  return s;
}

}  // namespace polarlink
