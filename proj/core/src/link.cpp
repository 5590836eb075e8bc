#include "polarlink/link.hpp"

#include <algorithm>
#include <stdexcept>

#include "polarlink/errors.hpp"

namespace polarlink {
namespace {

long sign_of(std::size_t k) { return (k % 2 == 0) ? 1 : -1; }

std::string join(const std::vector<long>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

void check_gamma(const std::vector<long>& gamma) {
  if (gamma.size() < 3) throw std::invalid_argument("gamma vector needs n+2 >= 3 entries");
}

}  // namespace

PolarData PolarData::from(const GammaProfile& profile) {
  return PolarData{profile.n, profile.gamma, profile.mult, profile.s};
}

LambdaProfile lambda_from_gamma(const std::vector<long>& gamma) {
  check_gamma(gamma);
  LambdaProfile out;
  for (std::size_t k = 0; k + 1 < gamma.size(); ++k) out.lambda.push_back(gamma[k] + gamma[k + 1]);
  return out;
}

ChainComplexSpec chain_complex(const LambdaProfile& lambda) {
  const long n = static_cast<long>(lambda.lambda.size()) - 1;
  ChainComplexSpec spec{lambda.lambda, {}};
  for (long k = 0; k <= n; ++k) spec.cohomology_degrees.push_back(n + k - 1);
  return spec;
}

TelescopeSums telescope_sums(const LambdaProfile& lambda, const std::vector<long>& gamma, std::size_t p) {
  check_gamma(gamma);
  const std::size_t n = gamma.size() - 2;
  if (lambda.lambda.size() != n + 1) throw std::invalid_argument("lambda and gamma lengths disagree");
  if (p > n) throw std::out_of_range("p must lie in 0..n");
  TelescopeSums sums;
  for (std::size_t k = 0; k <= p; ++k) {
    sums.forward += sign_of(k) * lambda.lambda[k];
    sums.backward += sign_of(k) * lambda.lambda[n - k];
  }
  const long forward_closed = sign_of(p) * gamma[p + 1];
  const long backward_closed = 1 + sign_of(p) * gamma[n - p];
  if (sums.forward != forward_closed || sums.backward != backward_closed)
    throw TelescopeViolation("telescope mismatch at p=" + std::to_string(p) + ": " + std::to_string(sums.forward) +
                             " vs " + std::to_string(forward_closed) + ", " + std::to_string(sums.backward) + " vs " +
                             std::to_string(backward_closed));
  return sums;
}

std::string BoundRow::statement() const {
  std::string s;
  for (std::size_t i = 0; i < degrees.size(); ++i) {
    const std::string term = "b" + std::to_string(degrees[i]);
    if (i == 0) {
      s += signs[i] < 0 ? "-" + term : term;
    } else {
      s += signs[i] < 0 ? " - " + term : " + " + term;
    }
  }
  return s + " <= " + std::to_string(rhs);
}

std::vector<BoundRow> morse_bounds(const LambdaProfile& lambda, const std::vector<long>& gamma) {
  check_gamma(gamma);
  const std::size_t n = gamma.size() - 2;
  std::vector<BoundRow> rows;
  for (std::size_t p = 0; p <= n; ++p) {
    const TelescopeSums sums = telescope_sums(lambda, gamma, p);
    BoundRow first{1, p, {}, {}, gamma[p + 1], std::nullopt, std::nullopt};
    BoundRow second{2, p, {}, {}, sign_of(p) + gamma[n - p], std::nullopt, std::nullopt};
    if (first.rhs != sign_of(p) * sums.forward || second.rhs != sign_of(p) * sums.backward)
      throw TelescopeViolation("bound right side disagrees with signed lambda sum at p=" + std::to_string(p));
    for (std::size_t k = 0; k <= p; ++k) {
      const int sign = static_cast<int>(sign_of(p) * sign_of(k));
      first.degrees.push_back(static_cast<long>(n + k) - 1);
      first.signs.push_back(sign);
      second.degrees.push_back(static_cast<long>(2 * n - k) - 1);
      second.signs.push_back(sign);
    }
    rows.push_back(std::move(first));
    rows.push_back(std::move(second));
  }
  return rows;
}

std::vector<long> support_window(std::size_t n, int s) {
  std::vector<long> degrees;
  const long top = 2 * static_cast<long>(n) - 1;
  for (long k = 0; k <= top; ++k) {
    const bool in_band = k >= static_cast<long>(n) - 1 && k <= static_cast<long>(n) + s;
    if (k == 0 || k == top || in_band) degrees.push_back(k);
  }
  return degrees;
}

std::vector<FeasibilityVerdict> betti_feasibility(const BettiVector& betti, const PolarData& data) {
  const std::size_t n = data.n;
  if (betti.reduced.size() != 2 * n)
    throw std::invalid_argument("Betti vector must have 2n = " + std::to_string(2 * n) + " entries, got " +
                                std::to_string(betti.reduced.size()));
  if (std::any_of(betti.reduced.begin(), betti.reduced.end(), [](long b) { return b < 0; }))
    throw std::invalid_argument("Betti numbers must be nonnegative");

  std::vector<FeasibilityVerdict> out;

  const auto window = support_window(n, data.s);
  std::vector<long> offending;
  for (long k = 0; k < static_cast<long>(2 * n); ++k)
    if (betti.reduced[k] != 0 && std::find(window.begin(), window.end(), k) == window.end()) offending.push_back(k);
  out.push_back({"support_window", offending.empty(),
                 offending.empty() ? "nonzero only in degrees {" + join(window) + "}"
                                   : "nonzero outside window in degrees {" + join(offending) + "}"});

  auto rows = morse_bounds(lambda_from_gamma(data.gamma), data.gamma);
  for (auto& row : rows) {
    long lhs = 0;
    for (std::size_t i = 0; i < row.degrees.size(); ++i) lhs += row.signs[i] * betti.reduced[row.degrees[i]];
    const bool ok = lhs <= row.rhs;
    out.push_back({"family" + std::to_string(row.family) + "_p" + std::to_string(row.p), ok,
                   row.statement() + " with lhs=" + std::to_string(lhs)});
  }

  long euler = 0;
  for (std::size_t k = 0; k < betti.reduced.size(); ++k) euler += sign_of(k) * betti.reduced[k];
  out.push_back({"euler_characteristic", euler == -1,
                 "reduced Euler characteristic " + std::to_string(euler) + " (must be -1)"});

  if (betti.components) {
    const long c = *betti.components;
    const long top = betti.reduced[2 * n - 1];
    out.push_back({"components_match_top_degree", top == c,
                   "b" + std::to_string(2 * n - 1) + "=" + std::to_string(top) + ", c=" + std::to_string(c)});
    out.push_back({"components_at_most_mult", c <= static_cast<long>(data.mult),
                   "c=" + std::to_string(c) + " <= mult=" + std::to_string(data.mult)});
    if (c != 1)
      out.push_back({"reducible_needs_s_eq_n_minus_1", data.s == static_cast<int>(n) - 1,
                     "s=" + std::to_string(data.s) + ", n-1=" + std::to_string(static_cast<long>(n) - 1)});
  }

  if (n == 1) {
    const auto seq = n1_exact_sequence(data, betti);
    out.insert(out.end(), seq.verdicts.begin(), seq.verdicts.end());
  }
  return out;
}

N1ExactSequence n1_exact_sequence(const PolarData& data, const std::optional<BettiVector>& betti) {
  if (data.n != 1) throw std::invalid_argument("n1_exact_sequence requires n = 1");
  N1ExactSequence seq;
  seq.middle_left = static_cast<long>(data.mult) - 1;
  seq.middle_right = static_cast<long>(data.mult);
  if (betti) {
    if (betti->reduced.size() != 2) throw std::invalid_argument("Betti vector must have 2 entries for n = 1");
    seq.b0 = betti->reduced[0];
    seq.b1 = betti->reduced[1];
    seq.verdicts.push_back({"n1_relation_b1_eq_b0_plus_1", *seq.b1 == *seq.b0 + 1,
                            "b1=" + std::to_string(*seq.b1) + ", b0+1=" + std::to_string(*seq.b0 + 1)});
    seq.verdicts.push_back({"n1_b0_injects", *seq.b0 <= seq.middle_left,
                            "b0=" + std::to_string(*seq.b0) + " <= mult-1=" + std::to_string(seq.middle_left)});
  }
  return seq;
}

}  // namespace polarlink
