#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace polarlink {

/// Hard limit on the number of ring variables, including the auxiliary
/// tag variable used internally for intersections.
inline constexpr std::size_t kMaxVariables = 10;

/// Exponent vector of a monomial in a fixed number of variables.
class Monomial {
 public:
  using Exponent = std::uint16_t;

  Monomial() = default;
  explicit Monomial(std::size_t nvars);
  Monomial(std::initializer_list<unsigned> exponents);
  explicit Monomial(std::span<const unsigned> exponents);

  static Monomial variable(std::size_t nvars, std::size_t index, unsigned power = 1);

  std::size_t nvars() const { return nvars_; }
  unsigned degree() const { return degree_; }
  unsigned operator[](std::size_t i) const { return exp_[i]; }
  void set(std::size_t i, unsigned e);

  bool is_one() const { return degree_ == 0; }
  bool divides(const Monomial& other) const;
  /// Caller guarantees divisor.divides(*this).
  Monomial divided_by(const Monomial& divisor) const;
  Monomial lcm(const Monomial& other) const;
  bool coprime(const Monomial& other) const;
  /// Variables with nonzero exponent, as a bitmask.
  std::uint32_t support() const;

  /// Same exponents in a ring with `nvars` variables; trailing variables are
  /// dropped (must be zero) or padded with zero.
  Monomial resized(std::size_t nvars) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.nvars_ == b.nvars_ && a.exp_ == b.exp_;
  }

  std::size_t hash() const;

 private:
  std::array<Exponent, kMaxVariables> exp_{};
  std::uint8_t nvars_ = 0;
  unsigned degree_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

/// Monomial orders used by the engine.
///
/// - `DegRevLex`: global degree reverse lexicographic, last variable cheapest.
/// - `NegDegRevLex`: the local twin; lower total degree ranks larger, ties are
///   broken as in degrevlex. Leading terms are lowest-degree terms, which is
///   what makes standard bases compute in the local ring at the origin.
/// - `EliminateLast`: block order with the last variable in its own block,
///   ranked above everything else; the rest is degrevlex. Used to eliminate a
///   tag variable appended at the end.
class MonomialOrder {
 public:
  enum class Kind { DegRevLex, NegDegRevLex, EliminateLast };

  constexpr MonomialOrder() = default;
  constexpr explicit MonomialOrder(Kind kind) : kind_(kind) {}

  static constexpr MonomialOrder global() { return MonomialOrder(Kind::DegRevLex); }
  static constexpr MonomialOrder local() { return MonomialOrder(Kind::NegDegRevLex); }
  static constexpr MonomialOrder eliminate_last() { return MonomialOrder(Kind::EliminateLast); }

  constexpr Kind kind() const { return kind_; }
  constexpr bool is_global() const { return kind_ != Kind::NegDegRevLex; }
  constexpr bool is_local() const { return kind_ == Kind::NegDegRevLex; }

  std::strong_ordering compare(const Monomial& a, const Monomial& b) const;
  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

  std::string name() const;

  friend constexpr bool operator==(MonomialOrder a, MonomialOrder b) { return a.kind_ == b.kind_; }

 private:
  Kind kind_ = Kind::DegRevLex;
};

/// Reverse-lexicographic tie break used by both degree orders: the monomial
/// with the smaller exponent in the last differing variable is larger.
std::strong_ordering revlex_compare(const Monomial& a, const Monomial& b);

/// All monomials in `nvars` variables of total degree exactly `degree`.
std::vector<Monomial> monomials_of_degree(std::size_t nvars, unsigned degree);

std::string to_string(const Monomial& m, std::span<const std::string> names);

}  // namespace polarlink
