#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "polarlink/polar.hpp"

namespace polarlink {

/// The invariants of f that the link calculus needs: γ^0..γ^{n+1}, mult_0(f)
/// and the critical dimension s.
struct PolarData {
  std::size_t n = 0;
  std::vector<long> gamma;
  unsigned mult = 0;
  int s = 0;

  static PolarData from(const GammaProfile& profile);
};

/// Ranks λ^0..λ^n of the chain complex, λ^k = γ^k + γ^{k+1}.
struct LambdaProfile {
  std::vector<long> lambda;
};

LambdaProfile lambda_from_gamma(const std::vector<long>& gamma);
inline LambdaProfile lambda_from_gamma(const GammaProfile& g) { return lambda_from_gamma(g.gamma); }

/// 0 → Z^{λ^0} → ... → Z^{λ^n} → 0 with cohomology at term k isomorphic to
/// the reduced cohomology of the real link in degree n + k - 1.
struct ChainComplexSpec {
  std::vector<long> ranks;
  std::vector<long> cohomology_degrees;
};

ChainComplexSpec chain_complex(const LambdaProfile& lambda);

struct TelescopeSums {
  long forward = 0;   ///< Σ_{k≤p} (-1)^k λ^k
  long backward = 0;  ///< Σ_{k≤p} (-1)^k λ^{n-k}
};

/// Both alternating sums up to p, checked against (-1)^p γ^{p+1} and
/// 1 + (-1)^p γ^{n-p}. Throws TelescopeViolation on mismatch.
TelescopeSums telescope_sums(const LambdaProfile& lambda, const std::vector<long>& gamma, std::size_t p);

/// One Morse link inequality: Σ_i sign_i * b̃^{degree_i} <= rhs.
struct BoundRow {
  int family = 1;
  std::size_t p = 0;
  std::vector<long> degrees;
  std::vector<int> signs;
  long rhs = 0;
  std::optional<long> lhs;    ///< filled when Betti data is supplied
  std::optional<bool> holds;

  std::string statement() const;
};

/// Family 1 (bounds by γ^{p+1}) and family 2 (bounds by (-1)^p + γ^{n-p}) for
/// p = 0..n, in that order per p. Right sides come from γ; each is verified
/// against the signed λ telescope sum.
std::vector<BoundRow> morse_bounds(const LambdaProfile& lambda, const std::vector<long>& gamma);

/// User-supplied reduced Betti numbers b̃^0..b̃^{2n-1}, and optionally the
/// number of irreducible components of X at 0.
struct BettiVector {
  std::vector<long> reduced;
  std::optional<long> components;
};

struct FeasibilityVerdict {
  std::string check;
  bool pass = false;
  std::string detail;
};

/// Degrees where b̃^k may be nonzero: {0, 2n-1} ∪ [n-1, n+s].
std::vector<long> support_window(std::size_t n, int s);

/// Rank-level necessary conditions on a hypothetical Betti vector: support
/// window, both inequality families, vanishing Euler characteristic of the
/// link, and the component count conditions when c is given. Torsion is not
/// seen. Throws std::invalid_argument when the vector length is not 2n.
std::vector<FeasibilityVerdict> betti_feasibility(const BettiVector& betti, const PolarData& data);

/// The n = 1 exact sequence 0 → H̃^0 → Z^{mult-1} → Z^{mult} → H̃^1 → 0.
struct N1ExactSequence {
  long middle_left = 0;   ///< mult - 1
  long middle_right = 0;  ///< mult
  std::optional<long> b0;
  std::optional<long> b1;
  std::vector<FeasibilityVerdict> verdicts;  ///< only with Betti data
};

/// Throws std::invalid_argument unless n == 1.
N1ExactSequence n1_exact_sequence(const PolarData& data, const std::optional<BettiVector>& betti = std::nullopt);

}  // namespace polarlink
