#include "polarlink/polar.hpp"

#include <algorithm>
#include <future>
#include <limits>
#include <random>
#include <stdexcept>

#include "polarlink/errors.hpp"

namespace polarlink {
namespace {

// Uniform integer in [-bound, bound] from raw engine output, so the draw does
// not depend on the standard library's distribution implementation.
long draw_entry(std::mt19937_64& rng, int bound) {
  const std::uint64_t range = 2 * static_cast<std::uint64_t>(bound) + 1;
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % range;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return static_cast<long>(x % range) - bound;
}

void check_standing_assumptions(const Polynomial& f) {
  if (f.is_zero()) throw ExcludedInputError(ExcludedInputError::Reason::LocallyConstant);
  if (!f.constant_term().is_zero()) throw ExcludedInputError(ExcludedInputError::Reason::NonzeroAtOrigin);
}

Ideal partials_ideal(const Polynomial& f) {
  std::vector<Polynomial> gens;
  for (std::size_t i = 0; i < f.nvars(); ++i) gens.push_back(partial_derivative(f, i));
  return Ideal(f.nvars(), std::move(gens));
}

}  // namespace

CoordinateFrame CoordinateFrame::identity(std::size_t nvars) {
  return CoordinateFrame{RationalMatrix::identity(nvars), SeedTrace{}};
}

CoordinateFrame CoordinateFrame::sample(std::size_t nvars, std::uint64_t seed, std::size_t trial, int bound) {
  if (bound < 1) throw std::invalid_argument("frame entry bound must be at least 1");
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(trial), static_cast<std::uint32_t>(nvars)};
  std::mt19937_64 rng(seq);
  CoordinateFrame frame{RationalMatrix(nvars), SeedTrace{seed, trial, 0}};
  do {
    ++frame.trace.attempts;
    for (std::size_t r = 0; r < nvars; ++r)
      for (std::size_t c = 0; c < nvars; ++c) frame.matrix(r, c) = Rational(draw_entry(rng, bound));
  } while (frame.matrix.determinant().is_zero());
  return frame;
}

Ideal jacobian_ideal(const Polynomial& f) {
  check_standing_assumptions(f);
  return partials_ideal(f);
}

int critical_dimension(const Polynomial& f) {
  const Ideal jac = jacobian_ideal(f);
  if (f.is_constant()) throw ExcludedInputError(ExcludedInputError::Reason::LocallyConstant);
  for (std::size_t i = 0; i < f.nvars(); ++i)
    if (!partial_derivative(f, i).constant_term().is_zero())
      throw ExcludedInputError(ExcludedInputError::Reason::SmoothOrigin);
  return dimension(mora_standard_basis(jac));
}

PolarIdeal polar_ideal_in_frame(const Polynomial& f_in_frame, std::size_t k) {
  const std::size_t nvars = f_in_frame.nvars();
  if (k < 1 || k >= nvars) throw std::out_of_range("polar dimension k must lie in 1..n");
  std::vector<Polynomial> gens;
  for (std::size_t i = k; i < nvars; ++i) gens.push_back(partial_derivative(f_in_frame, i));
  const Ideal partial(nvars, std::move(gens));
  const Ideal jac = partials_ideal(f_in_frame);
  if (partial.is_zero()) return PolarIdeal{partial, 0};
  Saturation sat = saturate(partial, jac);
  return PolarIdeal{std::move(sat.ideal), sat.exponent};
}

PolarIdeal polar_ideal(const Polynomial& f, const CoordinateFrame& frame, std::size_t k) {
  return polar_ideal_in_frame(frame.apply(f), k);
}

std::string to_string(GammaValue::Status status) {
  switch (status) {
    case GammaValue::Status::Valid: return "valid";
    case GammaValue::Status::ImproperIntersection: return "improper-intersection";
    case GammaValue::Status::WrongPolarDimension: return "wrong-polar-dimension";
  }
  return "?";
}

GammaValue gamma_k_in_frame(const Polynomial& f_in_frame, std::size_t k) {
  const std::size_t nvars = f_in_frame.nvars();
  GammaValue out;
  out.k = k;
  if (k == 0) return out;
  if (k == nvars) {
    out.value = 1;
    return out;
  }
  if (k > nvars) throw std::out_of_range("polar dimension k must lie in 0..n+1");

  const PolarIdeal polar = polar_ideal_in_frame(f_in_frame, k);
  out.saturation_exponent = polar.saturation_exponent;
  out.polar_local_dimension = dimension(mora_standard_basis(polar.ideal));
  const Ideal cut = polar.ideal + Ideal::coordinate(nvars, k);
  if (out.polar_local_dimension < 0) {
    // Γ^k does not pass through the origin.
    out.intersection_ideal = cut;
    return out;
  }
  if (out.polar_local_dimension != static_cast<int>(k)) {
    out.status = GammaValue::Status::WrongPolarDimension;
    return out;
  }
  const auto colength = local_colength(cut);
  out.intersection_ideal = cut;
  if (!colength) {
    out.status = GammaValue::Status::ImproperIntersection;
    return out;
  }
  out.value = static_cast<long>(*colength);
  return out;
}

GammaValue gamma_k(const Polynomial& f, const CoordinateFrame& frame, std::size_t k) {
  return gamma_k_in_frame(frame.apply(f), k);
}

GammaProfile gamma_profile(const Polynomial& f, const GammaOptions& options) {
  if (options.trials < 1) throw std::invalid_argument("at least one trial is required");
  if (f.nvars() < 2) throw std::invalid_argument("at least two variables are required (n >= 1)");

  GammaProfile profile;
  profile.s = critical_dimension(f);
  profile.n = f.nvars() - 1;
  profile.mult = *order_of_vanishing(f);
  profile.trials = options.trials;

  const std::size_t n = profile.n;
  auto run_trial = [&f, &options, n](std::size_t trial) {
    TrialRecord rec{CoordinateFrame::sample(n + 1, options.seed, trial, options.bound), {}};
    const Polynomial g = rec.frame.apply(f);
    for (std::size_t k = 1; k <= n; ++k) rec.values.push_back(gamma_k_in_frame(g, k));
    return rec;
  };

  if (options.parallel && options.trials > 1) {
    std::vector<std::future<TrialRecord>> futures;
    for (std::size_t t = 0; t < options.trials; ++t) futures.push_back(std::async(std::launch::async, run_trial, t));
    for (auto& fut : futures) profile.per_trial.push_back(fut.get());
  } else {
    for (std::size_t t = 0; t < options.trials; ++t) profile.per_trial.push_back(run_trial(t));
  }

  profile.gamma.assign(n + 2, 0);
  profile.agreement.assign(n + 2, options.trials);
  profile.gamma[n + 1] = 1;
  const std::size_t majority = (options.trials + 1) / 2;
  profile.stable = true;
  for (std::size_t k = 1; k <= n; ++k) {
    std::optional<long> best;
    std::string failures;
    for (const auto& rec : profile.per_trial) {
      const GammaValue& v = rec.values[k - 1];
      if (!v.valid()) {
        failures = to_string(v.status);
        continue;
      }
      if (!best || v.value < *best) best = v.value;
    }
    if (!best) throw NoValidFrameError(k, failures);
    std::size_t hits = 0;
    for (const auto& rec : profile.per_trial) {
      const GammaValue& v = rec.values[k - 1];
      if (v.valid() && v.value == *best) ++hits;
    }
    profile.gamma[k] = *best;
    profile.agreement[k] = hits;
    if (hits < majority) profile.stable = false;
  }

  if (profile.gamma[n] != static_cast<long>(profile.mult) - 1)
    throw GammaIdentityViolation("gamma^n = " + std::to_string(profile.gamma[n]) + " but mult_0(f) - 1 = " +
                                 std::to_string(static_cast<long>(profile.mult) - 1));
  return profile;
}

std::optional<std::size_t> milnor_number(const Polynomial& g) {
  if (!g.constant_term().is_zero()) throw std::invalid_argument("milnor_number requires g(0) = 0");
  return local_colength(partials_ideal(g));
}

}  // namespace polarlink
