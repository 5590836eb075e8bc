#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "polarlink/matrix.hpp"
#include "polarlink/monomial.hpp"
#include "polarlink/rational.hpp"

namespace polarlink {

struct Term {
  Monomial monomial;
  Rational coefficient;

  friend bool operator==(const Term&, const Term&) = default;
};

/// Multivariate polynomial with exact rational coefficients.
///
/// Terms are kept in canonical form: no zero coefficients, no repeated
/// monomials, sorted descending in global degrevlex. Two polynomials are equal
/// iff their term vectors are equal.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::size_t nvars) : nvars_(nvars) {}
  /// Arbitrary terms; combined, zero-filtered and sorted.
  Polynomial(std::size_t nvars, std::vector<Term> terms);

  static Polynomial constant(std::size_t nvars, const Rational& c);
  static Polynomial variable(std::size_t nvars, std::size_t index);
  static Polynomial monomial(const Monomial& m, const Rational& c = Rational(1));

  std::size_t nvars() const { return nvars_; }
  std::span<const Term> terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].monomial.is_one()); }
  /// Coefficient of the monomial 1, i.e. the value at the origin.
  Rational constant_term() const;
  Rational coefficient(const Monomial& m) const;

  /// Maximal total degree; -1 for the zero polynomial.
  int total_degree() const;
  /// Largest term under `order`. Precondition: nonzero.
  const Term& leading_term(const MonomialOrder& order) const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }
  Polynomial& operator*=(const Rational& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  friend Polynomial operator-(Polynomial a);
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  Polynomial times_monomial(const Monomial& m, const Rational& c) const;
  Polynomial pow(unsigned e) const;

  /// Scales so the leading coefficient under `order` is 1.
  Polynomial monic(const MonomialOrder& order) const;

  /// Same polynomial in a ring with `nvars` variables (see Monomial::resized).
  Polynomial resized(std::size_t nvars) const;
  /// Sets variable `index` to zero and removes it from the ring.
  Polynomial restrict_to_zero(std::size_t index) const;

  std::string to_string(std::span<const std::string> names) const;

 private:
  std::size_t nvars_ = 0;
  std::vector<Term> terms_;

  void normalize();
};

/// Minimal total degree of a term (the multiplicity at the origin);
/// std::nullopt stands for infinity and is returned for the zero polynomial.
std::optional<unsigned> order_of_vanishing(const Polynomial& p);

/// Formal partial derivative with respect to variable `index`.
/// Throws std::out_of_range for a bad index.
Polynomial partial_derivative(const Polynomial& p, std::size_t index);

/// Composes p with the linear map given by `matrix`: variable i is replaced by
/// sum_j matrix(i, j) * z_j. Throws std::invalid_argument if the matrix is
/// singular or has the wrong size.
Polynomial substitute_linear(const Polynomial& p, const RationalMatrix& matrix);

/// Exact quotient p / divisor. Throws std::domain_error when the division
/// leaves a remainder.
Polynomial divide_exact(const Polynomial& p, const Polynomial& divisor);

/// Default variable names z0, z1, ...
std::vector<std::string> default_variable_names(std::size_t nvars);

}  // namespace polarlink
