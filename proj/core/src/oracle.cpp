#include "polarlink/oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>
#include <unordered_map>
#include <utility>

#include "polarlink/errors.hpp"

namespace polarlink::oracle {
namespace {

using SparseRow = std::vector<std::pair<std::uint32_t, mpz_class>>;

// Divides out the content and makes the leading entry positive.
void make_primitive(SparseRow& row) {
  mpz_class g = 0;
  for (const auto& e : row) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), e.second.get_mpz_t());
    if (g == 1) break;
  }
  if (row.front().second < 0) g = -g;
  if (g != 1)
    for (auto& e : row) mpz_divexact(e.second.get_mpz_t(), e.second.get_mpz_t(), g.get_mpz_t());
}

// row := a*row - b*pivot with a, b chosen to cancel the shared leading column.
void eliminate(SparseRow& row, const SparseRow& pivot) {
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), row.front().second.get_mpz_t(), pivot.front().second.get_mpz_t());
  const mpz_class a = pivot.front().second / g;
  const mpz_class b = row.front().second / g;
  SparseRow out;
  out.reserve(row.size() + pivot.size());
  std::size_t i = 1, j = 1;
  while (i < row.size() || j < pivot.size()) {
    if (j == pivot.size() || (i < row.size() && row[i].first < pivot[j].first)) {
      out.emplace_back(row[i].first, a * row[i].second);
      ++i;
    } else if (i == row.size() || pivot[j].first < row[i].first) {
      out.emplace_back(pivot[j].first, -b * pivot[j].second);
      ++j;
    } else {
      mpz_class v = a * row[i].second - b * pivot[j].second;
      if (v != 0) out.emplace_back(row[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  row = std::move(out);
  if (!row.empty()) make_primitive(row);
}

// Generators that are a bare variable z_i let the quotient be computed with
// z_i = 0 in one variable fewer.
std::vector<Polynomial> drop_variable_generators(const Ideal& ideal, std::size_t& nvars) {
  std::vector<Polynomial> gens(ideal.generators().begin(), ideal.generators().end());
  nvars = ideal.nvars();
  bool changed = true;
  while (changed && nvars > 1) {
    changed = false;
    for (std::size_t g = 0; g < gens.size() && !changed; ++g) {
      const auto& terms = gens[g].terms();
      if (terms.size() != 1 || terms.front().monomial.degree() != 1) continue;
      std::size_t var = 0;
      while (terms.front().monomial[var] == 0) ++var;
      std::vector<Polynomial> next;
      for (std::size_t h = 0; h < gens.size(); ++h) {
        if (h == g) continue;
        Polynomial r = gens[h].restrict_to_zero(var);
        if (!r.is_zero()) next.push_back(std::move(r));
      }
      gens = std::move(next);
      --nvars;
      changed = true;
    }
  }
  return gens;
}

// Echelon form of the span of all m*g truncated below degree `cap`, with the
// pivot of each row at its lowest column. Rows m*g with deg(m) + ord(g) = d
// vanish below degree d, so the pivots lying in degrees < d are exactly the
// echelon form for the cap d as well.
class TruncatedEchelon {
 public:
  TruncatedEchelon(const std::vector<Polynomial>& gens, std::size_t n, unsigned cap) : cap_(cap) {
    for (unsigned d = 0; d < cap; ++d) {
      degree_start_.push_back(columns_.size());
      auto layer = monomials_of_degree(n, d);
      columns_.insert(columns_.end(), layer.begin(), layer.end());
    }
    degree_start_.push_back(columns_.size());
    std::unordered_map<Monomial, std::uint32_t, MonomialHash> index;
    index.reserve(columns_.size());
    for (std::uint32_t c = 0; c < columns_.size(); ++c) index.emplace(columns_[c], c);

    std::vector<unsigned> low;
    std::vector<mpz_class> denominators;
    for (const auto& g : gens) {
      low.push_back(*order_of_vanishing(g));
      mpz_class l = 1;
      for (const auto& t : g.terms()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), t.coefficient.gmp().get_den_mpz_t());
      denominators.push_back(std::move(l));
    }

    pivots_.resize(columns_.size());
    missing_.assign(cap, 0);
    for (unsigned d = 0; d < cap; ++d) missing_[d] = degree_start_[d + 1] - degree_start_[d];
    // Multipliers by increasing degree so that low columns get pivots first.
    for (const auto& m : columns_) {
      for (std::size_t gi = 0; gi < gens.size(); ++gi) {
        const unsigned first = m.degree() + low[gi];
        if (first >= cap || saturated_from(first)) continue;
        SparseRow row;
        for (const auto& t : gens[gi].terms()) {
          const Monomial prod = t.monomial * m;
          if (prod.degree() >= cap) continue;
          row.emplace_back(index.at(prod), denominators[gi] / t.coefficient.denominator() * t.coefficient.numerator());
        }
        std::sort(row.begin(), row.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
        if (!row.empty()) make_primitive(row);
        while (!row.empty()) {
          const std::uint32_t lead = row.front().first;
          if (!pivots_[lead]) {
            pivots_[lead] = std::move(row);
            --missing_[columns_[lead].degree()];
            break;
          }
          eliminate(row, *pivots_[lead]);
        }
      }
    }
  }

  /// dim of Q[z]_{<d} / (I + m^d) for d <= cap.
  std::size_t quotient_dimension(unsigned d) const {
    std::size_t free = 0;
    for (unsigned e = 0; e < d; ++e) free += missing_[e];
    return free;
  }

  /// Every monomial of degree d-1 lies in I + m^d.
  bool covered(unsigned d) const { return d >= 1 && missing_[d - 1] == 0; }

 private:
  // All columns of degree >= d are pivots, so any row starting there reduces to zero.
  bool saturated_from(unsigned d) const {
    for (unsigned e = d; e < cap_; ++e)
      if (missing_[e] != 0) return false;
    return true;
  }

  unsigned cap_;
  std::vector<Monomial> columns_;
  std::vector<std::size_t> degree_start_;
  std::vector<std::optional<SparseRow>> pivots_;
  std::vector<std::size_t> missing_;
};

}  // namespace

OracleVerdict make_verdict(std::string name, long expected, long actual, std::string context) {
  return OracleVerdict{std::move(name), expected, actual, expected == actual, std::move(context)};
}

TruncatedColength truncated_colength(const Ideal& ideal, unsigned degree_cap) {
  if (degree_cap < 1) throw std::invalid_argument("degree cap must be at least 1");
  std::size_t n = 0;
  const std::vector<Polynomial> gens = drop_variable_generators(ideal, n);
  const TruncatedEchelon echelon(gens, n, degree_cap + 1);
  const std::size_t value = echelon.quotient_dimension(degree_cap);
  const bool stable = echelon.covered(degree_cap) && echelon.quotient_dimension(degree_cap + 1) == value;
  return TruncatedColength{value, degree_cap, stable};
}

unsigned max_degree_cap() {
  if (const char* env = std::getenv("POLARLINK_MAX_DEGREE")) {
    try {
      const long v = std::stol(env);
      if (v >= 1) return static_cast<unsigned>(v);
    } catch (const std::exception&) {
    }
  }
  return 40;
}

unsigned default_degree_cap(const Polynomial& f) {
  return 2 * static_cast<unsigned>(std::max(f.total_degree(), 0)) + 4;
}

TruncatedColength colength_until_stable(const Ideal& ideal, unsigned start) {
  const unsigned hard_cap = max_degree_cap();
  unsigned cap = std::min(std::max(start, 1u), hard_cap);
  while (true) {
    TruncatedColength r = truncated_colength(ideal, cap);
    if (r.stable || cap >= hard_cap) return r;
    cap = std::min(cap * 2, hard_cap);
  }
}

long bezout_gamma(long n, long d, long k) {
  if (d < 2 || n < 1 || k < 1 || k > n) throw std::invalid_argument("bezout_gamma needs d >= 2, n >= 1, 1 <= k <= n");
  long r = 1;
  for (long i = 0; i < n + 1 - k; ++i) r *= d - 1;
  return r;
}

OracleVerdict colength_agreement(const Ideal& ideal, unsigned start_cap, const std::string& context) {
  const auto engine = local_colength(ideal);
  const TruncatedColength brute = colength_until_stable(ideal, start_cap);
  OracleVerdict v;
  v.name = "colength";
  v.context = context + " cap=" + std::to_string(brute.degree_cap);
  v.expected = brute.stable ? static_cast<long>(brute.value) : -1;
  v.actual = engine ? static_cast<long>(*engine) : -1;
  v.pass = engine.has_value() && brute.stable && v.expected == v.actual;
  return v;
}

OracleVerdict teissier_check(const Polynomial& f, const CoordinateFrame& frame, std::vector<Ideal>* witnesses) {
  const Polynomial g = frame.apply(f);
  const auto mu = milnor_number(g);
  if (!mu) throw NonIsolatedError("teissier_check needs an isolated singularity");
  const Polynomial section = g.restrict_to_zero(0);
  const auto mu_section = milnor_number(section);
  if (!mu_section) throw std::domain_error("hyperplane section z0 = 0 is not isolated in this frame");
  const PolarIdeal polar = polar_ideal_in_frame(g, 1);
  const Ideal polar_on_f = polar.ideal + Ideal(g.nvars(), {g});
  const auto lhs = local_colength(polar_on_f);
  if (!lhs) throw std::domain_error("polar curve meets V(f) improperly in this frame");
  if (witnesses) {
    auto partials = [](const Polynomial& p) {
      std::vector<Polynomial> gens;
      for (std::size_t i = 0; i < p.nvars(); ++i) gens.push_back(partial_derivative(p, i));
      return Ideal(p.nvars(), std::move(gens));
    };
    witnesses->push_back(polar_on_f);
    witnesses->push_back(partials(g));
    witnesses->push_back(partials(section));
  }
  return make_verdict("teissier", static_cast<long>(*mu + *mu_section), static_cast<long>(*lhs),
                      "mu=" + std::to_string(*mu) + " mu_section=" + std::to_string(*mu_section) +
                          " frame=" + frame.matrix.to_string());
}

std::vector<OracleVerdict> gamma_identity_audit(const std::vector<long>& gamma, unsigned mult) {
  if (gamma.size() < 3) throw std::invalid_argument("gamma vector needs n+2 >= 3 entries");
  const std::size_t n = gamma.size() - 2;
  return {
      make_verdict("gamma_0_is_zero", 0, gamma[0], "gamma^0"),
      make_verdict("gamma_top_is_one", 1, gamma[n + 1], "gamma^" + std::to_string(n + 1)),
      make_verdict("gamma_n_is_mult_minus_one", static_cast<long>(mult) - 1, gamma[n],
                   "gamma^" + std::to_string(n) + " vs mult=" + std::to_string(mult)),
  };
}

std::vector<OracleVerdict> gamma_identity_audit(const GammaProfile& profile) {
  return gamma_identity_audit(profile.gamma, profile.mult);
}

}  // namespace polarlink::oracle
