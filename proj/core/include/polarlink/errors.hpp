#pragma once

#include <stdexcept>
#include <string>

namespace polarlink {

/// Inputs outside the standing assumptions: f must vanish at the origin, be
/// nonconstant, and be singular there.
class ExcludedInputError : public std::runtime_error {
 public:
  enum class Reason { LocallyConstant, NonzeroAtOrigin, SmoothOrigin };

  explicit ExcludedInputError(Reason reason) : std::runtime_error(describe(reason)), reason_(reason) {}

  Reason reason() const { return reason_; }

  static std::string describe(Reason reason) {
    switch (reason) {
      case Reason::LocallyConstant: return "f is locally constant";
      case Reason::NonzeroAtOrigin: return "f(0) != 0";
      case Reason::SmoothOrigin: return "origin is a smooth point of V(f)";
    }
    return "excluded input";
  }

 private:
  Reason reason_;
};

/// Every sampled frame failed the genericity checks for some dimension k.
class NoValidFrameError : public std::runtime_error {
 public:
  NoValidFrameError(std::size_t k, const std::string& detail)
      : std::runtime_error("no valid frame for k=" + std::to_string(k) + ": " + detail), k_(k) {}
  std::size_t k() const { return k_; }

 private:
  std::size_t k_;
};

/// The computed top polar multiplicity disagrees with mult_0(f) - 1.
class GammaIdentityViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An alternating sum of lambda ranks disagrees with its closed form.
class TelescopeViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A check that needs an isolated singularity was given a non-isolated one.
class NonIsolatedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace polarlink
