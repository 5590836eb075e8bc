#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "polarlink/ideal.hpp"
#include "polarlink/matrix.hpp"
#include "polarlink/polynomial.hpp"

namespace polarlink {

/// Records which random draw produced a frame.
struct SeedTrace {
  std::uint64_t seed = 0;
  std::size_t trial = 0;
  std::size_t attempts = 1;  ///< matrices drawn until one was invertible
};

/// Invertible integer change of coordinates. Old coordinates x relate to the
/// frame coordinates z by x = matrix * z, so f in the frame is f(matrix * z).
/// The generic linear form of the complex link is z_0.
struct CoordinateFrame {
  RationalMatrix matrix;
  SeedTrace trace;

  static CoordinateFrame identity(std::size_t nvars);
  /// Entries uniform in [-bound, bound]; redrawn until the determinant is
  /// nonzero. Depends only on (nvars, seed, trial, bound).
  static CoordinateFrame sample(std::size_t nvars, std::uint64_t seed, std::size_t trial, int bound);

  Polynomial apply(const Polynomial& f) const { return substitute_linear(f, matrix); }
};

/// Ideal of all partial derivatives. Throws ExcludedInputError when f is zero
/// or does not vanish at the origin.
Ideal jacobian_ideal(const Polynomial& f);

/// Local dimension s of the critical locus at the origin. Throws
/// ExcludedInputError(SmoothOrigin) when some partial is a unit at 0.
int critical_dimension(const Polynomial& f);

struct PolarIdeal {
  Ideal ideal;                  ///< saturated, generated by its reduced Groebner basis
  unsigned saturation_exponent = 0;
};

/// (∂f/∂z_k, ..., ∂f/∂z_n) : J(f)^∞ for f already written in frame coordinates.
PolarIdeal polar_ideal_in_frame(const Polynomial& f_in_frame, std::size_t k);

/// Same as above with the frame applied to f first.
PolarIdeal polar_ideal(const Polynomial& f, const CoordinateFrame& frame, std::size_t k);

/// Outcome of one polar multiplicity evaluation in one frame.
struct GammaValue {
  enum class Status { Valid, ImproperIntersection, WrongPolarDimension };

  std::size_t k = 0;
  Status status = Status::Valid;
  long value = 0;                 ///< meaningful when Valid
  int polar_local_dimension = 0;  ///< -1 when Γ^k misses the origin
  unsigned saturation_exponent = 0;
  /// Polar ideal plus (z_0..z_{k-1}), the zero-dimensional ideal whose local
  /// colength is the value. Empty for the conventional k=0 and k=n+1.
  std::optional<Ideal> intersection_ideal;

  bool valid() const { return status == Status::Valid; }
};

std::string to_string(GammaValue::Status status);

/// γ^k in one frame, for f already written in frame coordinates. k ranges
/// over 0..n+1 where n+1 is the number of variables.
GammaValue gamma_k_in_frame(const Polynomial& f_in_frame, std::size_t k);

GammaValue gamma_k(const Polynomial& f, const CoordinateFrame& frame, std::size_t k);

struct GammaOptions {
  std::size_t trials = 5;
  std::uint64_t seed = 0;
  int bound = 10;
  bool parallel = true;
};

struct TrialRecord {
  CoordinateFrame frame;
  std::vector<GammaValue> values;  ///< k = 1..n
};

/// Polar multiplicities of f: the minimum valid value over sampled frames.
struct GammaProfile {
  std::size_t n = 0;              ///< number of variables minus one
  std::vector<long> gamma;        ///< γ^0 .. γ^{n+1}
  unsigned mult = 0;
  int s = 0;                      ///< dim of the critical locus at 0
  std::size_t trials = 0;
  bool stable = false;
  std::vector<std::size_t> agreement;  ///< per k = 0..n+1, frames attaining the minimum
  std::vector<TrialRecord> per_trial;
};

/// Samples frames and aggregates γ^k. Throws ExcludedInputError,
/// NoValidFrameError, or GammaIdentityViolation.
GammaProfile gamma_profile(const Polynomial& f, const GammaOptions& options = {});

/// Local colength of the Jacobian ideal; std::nullopt when the singularity
/// is not isolated. Zero at a smooth point.
std::optional<std::size_t> milnor_number(const Polynomial& g);

}  // namespace polarlink
