#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "polarlink/monomial.hpp"
#include "polarlink/polynomial.hpp"

namespace polarlink {

/// Finitely generated ideal in Q[z_0, ..., z_{nvars-1}]. Zero generators are
/// dropped on construction.
class Ideal {
 public:
  explicit Ideal(std::size_t nvars = 0) : nvars_(nvars) {}
  Ideal(std::size_t nvars, std::vector<Polynomial> generators);

  static Ideal unit(std::size_t nvars);
  /// The ideal (z_0, ..., z_{count-1}).
  static Ideal coordinate(std::size_t nvars, std::size_t count);

  std::size_t nvars() const { return nvars_; }
  std::span<const Polynomial> generators() const { return generators_; }
  bool is_zero() const { return generators_.empty(); }
  /// True when some generator is a nonzero constant.
  bool has_unit_generator() const;

  friend Ideal operator+(const Ideal& a, const Ideal& b);

  std::string to_string(std::span<const std::string> names) const;

 private:
  std::size_t nvars_ = 0;
  std::vector<Polynomial> generators_;
};

/// Generating set whose leading terms generate the leading ideal of `ideal`
/// under `order`. For global orders `reduced` is true and the basis is the
/// unique reduced Groebner basis, sorted by descending leading monomial. For the
/// local order it is a minimal standard basis of the localization at the origin.
struct StandardBasis {
  Ideal ideal;
  MonomialOrder order;
  std::vector<Polynomial> basis;
  bool reduced = false;

  std::vector<Monomial> leading_monomials() const;
  /// Leading ideal contains 1.
  bool is_unit() const;
  /// Canonical printable form, e.g. "[x, y^2 - z]".
  std::string to_string(std::span<const std::string> names) const;
};

/// Reduced Groebner basis by Buchberger's algorithm with the product and chain
/// criteria. Throws std::invalid_argument for a local order.
StandardBasis groebner_basis(const Ideal& ideal, MonomialOrder order = MonomialOrder::global());

/// Standard basis for the local order via Mora's tangent cone algorithm.
/// Throws std::invalid_argument for a global order.
StandardBasis mora_standard_basis(const Ideal& ideal, MonomialOrder order = MonomialOrder::local());

/// Dispatches on the order kind.
StandardBasis standard_basis(const Ideal& ideal, MonomialOrder order);

/// Remainder of `p` modulo the basis. Global orders give the fully reduced
/// remainder; the local order gives Mora's weak normal form. Either way the
/// result is zero iff p is in the ideal (in the local ring, for local orders).
Polynomial normal_form(const Polynomial& p, const StandardBasis& basis);

bool contains(const StandardBasis& basis, const Polynomial& p);

/// Eliminates the last variable: returns I ∩ Q[z_0..z_{n-2}] as an ideal in
/// one variable fewer.
Ideal eliminate_last_variable(const Ideal& ideal);

/// I ∩ J via the tag-variable ideal t·I + (1−t)·J.
Ideal intersect(const Ideal& a, const Ideal& b);

/// I : (g) = (I ∩ (g)) / g.
Ideal quotient_by_element(const Ideal& ideal, const Polynomial& g);

/// I : J as the intersection of the quotients by the generators of J.
/// Only global orders are accepted. Throws std::invalid_argument if J is zero.
Ideal ideal_quotient(const Ideal& ideal, const Ideal& by, MonomialOrder order = MonomialOrder::global());

struct Saturation {
  Ideal ideal;             ///< generated by the reduced Groebner basis of I : J^∞
  StandardBasis basis;     ///< that reduced Groebner basis
  unsigned exponent = 0;   ///< number of quotient steps that enlarged the ideal
};

/// I : J^∞ by iterating ideal_quotient until the reduced Groebner basis stops
/// changing.
Saturation saturate(const Ideal& ideal, const Ideal& by, MonomialOrder order = MonomialOrder::global());

/// Krull dimension of Q[z]/LT, where LT is the leading monomial ideal of the
/// basis, via maximal independent variable sets. -1 for the unit ideal. For
/// the local order this is the dimension of the local ring at the origin.
int dimension(const StandardBasis& basis);

/// Monomials outside the leading ideal. Empty result with `complete == false`
/// when there are infinitely many.
struct StandardMonomials {
  std::vector<Monomial> monomials;
  bool complete = true;
};
StandardMonomials standard_monomials(const StandardBasis& basis);

/// dim_Q of the local ring at the origin modulo I; std::nullopt when the
/// ideal is positive dimensional at the origin. A unit at the origin gives 0.
std::optional<std::size_t> local_colength(const Ideal& ideal);

}  // namespace polarlink
