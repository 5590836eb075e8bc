#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "polarlink/ideal.hpp"
#include "polarlink/polar.hpp"
#include "polarlink/polynomial.hpp"

// Independent cross-checks for the engine. Nothing here calls Mora's
// algorithm or the Groebner machinery on the quantity being checked: colengths
// come from plain linear algebra on truncated multiples of the generators.

namespace polarlink::oracle {

struct OracleVerdict {
  std::string name;
  long expected = 0;
  long actual = 0;
  bool pass = false;
  std::string context;
};

OracleVerdict make_verdict(std::string name, long expected, long actual, std::string context);

struct TruncatedColength {
  std::size_t value = 0;  ///< dim_Q of Q[z]_{<D} / (I + m^D)
  unsigned degree_cap = 0;
  bool stable = false;    ///< value certified equal to the local colength
};

/// Exact Gaussian elimination on the span of m*g truncated below degree D,
/// for all generators g and monomials m. `stable` is set when the D and D+1
/// values agree and every monomial of degree D-1 lies in I + m^D (which
/// forces m^(D-1) ⊆ I locally).
TruncatedColength truncated_colength(const Ideal& ideal, unsigned degree_cap);

/// Hard upper limit for the degree cap; POLARLINK_MAX_DEGREE overrides the
/// built-in 40.
unsigned max_degree_cap();

/// 2 * deg(f) + 4.
unsigned default_degree_cap(const Polynomial& f);

/// Runs truncated_colength starting at `start`, doubling the cap until the
/// value is stable or the cap would exceed max_degree_cap().
TruncatedColength colength_until_stable(const Ideal& ideal, unsigned start);

/// (d-1)^(n+1-k): polar multiplicities of the Fermat polynomial of degree d
/// in n+1 variables.
long bezout_gamma(long n, long d, long k);

/// Compares the engine's local colength with the truncated oracle.
OracleVerdict colength_agreement(const Ideal& ideal, unsigned start_cap, const std::string& context);

/// Checks local_colength(Γ^1 + (f)) = μ(f) + μ(f|{z_0=0}) in the frame.
/// Throws NonIsolatedError when μ(f) is infinite and std::domain_error when
/// the hyperplane section is not isolated in this frame. When `witnesses` is
/// given, the three zero-dimensional ideals whose colengths were taken are
/// appended to it.
OracleVerdict teissier_check(const Polynomial& f, const CoordinateFrame& frame,
                             std::vector<Ideal>* witnesses = nullptr);

/// The three conventions γ^0 = 0, γ^{n+1} = 1, γ^n = mult - 1.
std::vector<OracleVerdict> gamma_identity_audit(const std::vector<long>& gamma, unsigned mult);
std::vector<OracleVerdict> gamma_identity_audit(const GammaProfile& profile);

}  // namespace polarlink::oracle
