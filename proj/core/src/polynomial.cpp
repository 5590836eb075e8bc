#include "polarlink/polynomial.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

namespace polarlink {
namespace {

constexpr MonomialOrder kCanonical = MonomialOrder::global();

bool canonical_greater(const Term& a, const Term& b) { return kCanonical.greater(a.monomial, b.monomial); }

// Merges two canonical term lists, computing a + sign * b.
std::vector<Term> merge(std::span<const Term> a, std::span<const Term> b, bool subtract) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && kCanonical.greater(a[i].monomial, b[j].monomial))) {
      out.push_back(a[i++]);
    } else if (i == a.size() || kCanonical.greater(b[j].monomial, a[i].monomial)) {
      out.push_back({b[j].monomial, subtract ? -b[j].coefficient : b[j].coefficient});
      ++j;
    } else {
      Rational c = subtract ? a[i].coefficient - b[j].coefficient : a[i].coefficient + b[j].coefficient;
      if (!c.is_zero()) out.push_back({a[i].monomial, std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

Polynomial::Polynomial(std::size_t nvars, std::vector<Term> terms) : nvars_(nvars), terms_(std::move(terms)) {
  for (const auto& t : terms_)
    if (t.monomial.nvars() != nvars_) throw std::invalid_argument("term has wrong number of variables");
  normalize();
}

void Polynomial::normalize() {
  std::sort(terms_.begin(), terms_.end(), canonical_greater);
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!out.empty() && out.back().monomial == t.monomial) {
      out.back().coefficient += t.coefficient;
    } else {
      if (!out.empty() && out.back().coefficient.is_zero()) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && out.back().coefficient.is_zero()) out.pop_back();
  terms_ = std::move(out);
}

Polynomial Polynomial::constant(std::size_t nvars, const Rational& c) {
  Polynomial p(nvars);
  if (!c.is_zero()) p.terms_.push_back({Monomial(nvars), c});
  return p;
}

Polynomial Polynomial::variable(std::size_t nvars, std::size_t index) {
  Polynomial p(nvars);
  p.terms_.push_back({Monomial::variable(nvars, index), Rational(1)});
  return p;
}

Polynomial Polynomial::monomial(const Monomial& m, const Rational& c) {
  Polynomial p(m.nvars());
  if (!c.is_zero()) p.terms_.push_back({m, c});
  return p;
}

Rational Polynomial::constant_term() const {
  if (!terms_.empty() && terms_.back().monomial.is_one()) return terms_.back().coefficient;
  return Rational(0);
}

Rational Polynomial::coefficient(const Monomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m, [](const Term& t, const Monomial& key) {
    return kCanonical.greater(t.monomial, key);
  });
  if (it != terms_.end() && it->monomial == m) return it->coefficient;
  return Rational(0);
}

int Polynomial::total_degree() const {
  return terms_.empty() ? -1 : static_cast<int>(terms_.front().monomial.degree());
}

const Term& Polynomial::leading_term(const MonomialOrder& order) const {
  if (terms_.empty()) throw std::logic_error("leading term of zero polynomial");
  if (order == kCanonical) return terms_.front();
  const Term* best = &terms_.front();
  for (const auto& t : terms_)
    if (order.greater(t.monomial, best->monomial)) best = &t;
  return *best;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.nvars_ != nvars_) throw std::invalid_argument("variable count mismatch");
  terms_ = merge(terms_, o.terms_, false);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.nvars_ != nvars_) throw std::invalid_argument("variable count mismatch");
  terms_ = merge(terms_, o.terms_, true);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
  } else {
    for (auto& t : terms_) t.coefficient *= c;
  }
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.nvars_ != b.nvars_) throw std::invalid_argument("variable count mismatch");
  std::unordered_map<Monomial, Rational, MonomialHash> acc;
  acc.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& s : a.terms_)
    for (const auto& t : b.terms_) acc[s.monomial * t.monomial] += s.coefficient * t.coefficient;
  std::vector<Term> terms;
  terms.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (!c.is_zero()) terms.push_back({m, std::move(c)});
  return Polynomial(a.nvars_, std::move(terms));
}

Polynomial operator-(Polynomial a) {
  for (auto& t : a.terms_) t.coefficient = -t.coefficient;
  return a;
}

Polynomial Polynomial::times_monomial(const Monomial& m, const Rational& c) const {
  Polynomial out(nvars_);
  if (c.is_zero()) return out;
  out.terms_.reserve(terms_.size());
  // Multiplying by a monomial preserves any monomial order.
  for (const auto& t : terms_) out.terms_.push_back({t.monomial * m, t.coefficient * c});
  return out;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial result = constant(nvars_, Rational(1));
  Polynomial base = *this;
  while (e) {
    if (e & 1u) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

Polynomial Polynomial::monic(const MonomialOrder& order) const {
  if (is_zero()) return *this;
  const Rational inv = Rational(1) / leading_term(order).coefficient;
  return *this * inv;
}

Polynomial Polynomial::resized(std::size_t nvars) const {
  std::vector<Term> terms;
  terms.reserve(terms_.size());
  for (const auto& t : terms_) terms.push_back({t.monomial.resized(nvars), t.coefficient});
  return Polynomial(nvars, std::move(terms));
}

Polynomial Polynomial::restrict_to_zero(std::size_t index) const {
  if (index >= nvars_) throw std::out_of_range("variable index out of range");
  std::vector<Term> terms;
  for (const auto& t : terms_) {
    if (t.monomial[index] != 0) continue;
    Monomial m(nvars_ - 1);
    for (std::size_t i = 0, j = 0; i < nvars_; ++i)
      if (i != index) m.set(j++, t.monomial[i]);
    terms.push_back({m, t.coefficient});
  }
  return Polynomial(nvars_ - 1, std::move(terms));
}

std::string Polynomial::to_string(std::span<const std::string> names) const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& t : terms_) {
    Rational c = t.coefficient;
    if (first) {
      if (c.sign() < 0) {
        s += "-";
        c = -c;
      }
    } else {
      s += c.sign() < 0 ? " - " : " + ";
      if (c.sign() < 0) c = -c;
    }
    first = false;
    if (t.monomial.is_one()) {
      s += c.str();
    } else if (c.is_one()) {
      s += polarlink::to_string(t.monomial, names);
    } else {
      s += c.str() + "*" + polarlink::to_string(t.monomial, names);
    }
  }
  return s;
}

std::optional<unsigned> order_of_vanishing(const Polynomial& p) {
  if (p.is_zero()) return std::nullopt;
  unsigned best = p.terms().front().monomial.degree();
  for (const auto& t : p.terms()) best = std::min(best, t.monomial.degree());
  return best;
}

Polynomial partial_derivative(const Polynomial& p, std::size_t index) {
  if (index >= p.nvars()) throw std::out_of_range("variable index out of range");
  std::vector<Term> terms;
  for (const auto& t : p.terms()) {
    const unsigned e = t.monomial[index];
    if (e == 0) continue;
    Monomial m = t.monomial;
    m.set(index, e - 1);
    terms.push_back({m, t.coefficient * Rational(static_cast<long>(e))});
  }
  return Polynomial(p.nvars(), std::move(terms));
}

Polynomial substitute_linear(const Polynomial& p, const RationalMatrix& matrix) {
  const std::size_t n = p.nvars();
  if (matrix.size() != n) throw std::invalid_argument("substitution matrix has wrong size");
  if (matrix.determinant().is_zero()) throw std::invalid_argument("substitution matrix is singular");

  std::vector<Polynomial> images;
  images.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Term> terms;
    for (std::size_t j = 0; j < n; ++j)
      if (!matrix(i, j).is_zero()) terms.push_back({Monomial::variable(n, j), matrix(i, j)});
    images.emplace_back(n, std::move(terms));
  }
  // powers[i][e] = images[i]^e, filled lazily.
  std::vector<std::vector<Polynomial>> powers(n);
  auto power = [&](std::size_t i, unsigned e) -> const Polynomial& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(Polynomial::constant(n, Rational(1)));
    while (cache.size() <= e) cache.push_back(cache.back() * images[i]);
    return cache[e];
  };

  Polynomial result(n);
  for (const auto& t : p.terms()) {
    Polynomial product = Polynomial::constant(n, t.coefficient);
    for (std::size_t i = 0; i < n; ++i)
      if (t.monomial[i] != 0) product = product * power(i, t.monomial[i]);
    result += product;
  }
  return result;
}

Polynomial divide_exact(const Polynomial& p, const Polynomial& divisor) {
  if (divisor.is_zero()) throw std::domain_error("division by zero polynomial");
  const Term& lead = divisor.terms().front();
  Polynomial remainder = p;
  std::vector<Term> quotient;
  while (!remainder.is_zero()) {
    const Term& top = remainder.terms().front();
    if (!lead.monomial.divides(top.monomial)) throw std::domain_error("polynomial division is not exact");
    const Monomial m = top.monomial.divided_by(lead.monomial);
    const Rational c = top.coefficient / lead.coefficient;
    quotient.push_back({m, c});
    remainder -= divisor.times_monomial(m, c);
  }
  return Polynomial(p.nvars(), std::move(quotient));
}

std::vector<std::string> default_variable_names(std::size_t nvars) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < nvars; ++i) names.push_back("z" + std::to_string(i));
  return names;
}

}  // namespace polarlink
