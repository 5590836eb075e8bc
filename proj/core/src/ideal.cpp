#include "polarlink/ideal.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>
#include <unordered_set>
#include <utility>

namespace polarlink {

// ---------------------------------------------------------------------------
// Ideal

Ideal::Ideal(std::size_t nvars, std::vector<Polynomial> generators) : nvars_(nvars) {
  for (auto& g : generators) {
    if (g.nvars() != nvars) throw std::invalid_argument("generator has wrong number of variables");
    if (!g.is_zero()) generators_.push_back(std::move(g));
  }
}

Ideal Ideal::unit(std::size_t nvars) { return Ideal(nvars, {Polynomial::constant(nvars, Rational(1))}); }

Ideal Ideal::coordinate(std::size_t nvars, std::size_t count) {
  std::vector<Polynomial> gens;
  for (std::size_t i = 0; i < count; ++i) gens.push_back(Polynomial::variable(nvars, i));
  return Ideal(nvars, std::move(gens));
}

bool Ideal::has_unit_generator() const {
  return std::any_of(generators_.begin(), generators_.end(), [](const Polynomial& g) { return g.is_constant(); });
}

Ideal operator+(const Ideal& a, const Ideal& b) {
  if (a.nvars_ != b.nvars_) throw std::invalid_argument("variable count mismatch");
  std::vector<Polynomial> gens = a.generators_;
  gens.insert(gens.end(), b.generators_.begin(), b.generators_.end());
  return Ideal(a.nvars_, std::move(gens));
}

std::string Ideal::to_string(std::span<const std::string> names) const {
  std::string s = "(";
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    if (i) s += ", ";
    s += generators_[i].to_string(names);
  }
  return s + ")";
}

std::vector<Monomial> StandardBasis::leading_monomials() const {
  std::vector<Monomial> out;
  out.reserve(basis.size());
  for (const auto& g : basis) out.push_back(g.leading_term(order).monomial);
  return out;
}

bool StandardBasis::is_unit() const {
  return std::any_of(basis.begin(), basis.end(), [this](const Polynomial& g) {
    return g.leading_term(order).monomial.is_one();
  });
}

std::string StandardBasis::to_string(std::span<const std::string> names) const {
  std::string s = "[";
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (i) s += ", ";
    s += basis[i].to_string(names);
  }
  return s + "]";
}

// ---------------------------------------------------------------------------
// Working representation: terms sorted descending in the active order.

namespace {

struct WorkPoly {
  std::vector<Term> terms;
  unsigned max_degree = 0;

  bool zero() const { return terms.empty(); }
  const Term& lead() const { return terms.front(); }
  const Monomial& lm() const { return terms.front().monomial; }
  int ecart() const { return static_cast<int>(max_degree) - static_cast<int>(lm().degree()); }

  void refresh() {
    max_degree = 0;
    for (const auto& t : terms) max_degree = std::max(max_degree, t.monomial.degree());
  }
};

class Engine {
 public:
  Engine(std::size_t nvars, MonomialOrder order) : nvars_(nvars), order_(order) {}

  WorkPoly from(const Polynomial& p) const {
    WorkPoly w;
    w.terms.assign(p.terms().begin(), p.terms().end());
    if (!(order_ == MonomialOrder::global()))
      std::sort(w.terms.begin(), w.terms.end(),
                [this](const Term& a, const Term& b) { return order_.greater(a.monomial, b.monomial); });
    w.refresh();
    return w;
  }

  Polynomial to(const WorkPoly& w) const { return Polynomial(nvars_, w.terms); }

  void make_monic(WorkPoly& w) const {
    if (w.zero() || w.lead().coefficient.is_one()) return;
    const Rational inv = Rational(1) / w.lead().coefficient;
    for (auto& t : w.terms) t.coefficient *= inv;
  }

  // h - c * m * g, restricted to terms of h from index `from` on; terms of h
  // before `from` are kept verbatim (they dominate every term of m*g).
  void subtract_multiple(WorkPoly& h, std::size_t from, const WorkPoly& g, const Monomial& m,
                         const Rational& c) const {
    std::vector<Term> out;
    out.reserve(h.terms.size() + g.terms.size());
    for (std::size_t i = 0; i < from; ++i) out.push_back(std::move(h.terms[i]));
    std::size_t i = from, j = 0;
    while (i < h.terms.size() || j < g.terms.size()) {
      if (j == g.terms.size()) {
        out.push_back(std::move(h.terms[i++]));
        continue;
      }
      Monomial gm = g.terms[j].monomial * m;
      if (i == h.terms.size()) {
        out.push_back({std::move(gm), -(g.terms[j].coefficient * c)});
        ++j;
        continue;
      }
      const auto cmp = order_.compare(h.terms[i].monomial, gm);
      if (cmp > 0) {
        out.push_back(std::move(h.terms[i++]));
      } else if (cmp < 0) {
        out.push_back({std::move(gm), -(g.terms[j].coefficient * c)});
        ++j;
      } else {
        Rational v = h.terms[i].coefficient - g.terms[j].coefficient * c;
        if (!v.is_zero()) out.push_back({std::move(gm), std::move(v)});
        ++i;
        ++j;
      }
    }
    h.terms = std::move(out);
    h.refresh();
  }

  WorkPoly spoly(const WorkPoly& f, const WorkPoly& g) const {
    const Monomial l = f.lm().lcm(g.lm());
    WorkPoly s;
    const Monomial mf = l.divided_by(f.lm());
    s.terms.reserve(f.terms.size());
    const Rational cf = Rational(1) / f.lead().coefficient;
    for (const auto& t : f.terms) s.terms.push_back({t.monomial * mf, t.coefficient * cf});
    s.refresh();
    subtract_multiple(s, 0, g, l.divided_by(g.lm()), Rational(1) / g.lead().coefficient);
    return s;
  }

  const WorkPoly* find_divisor(const Monomial& m, const std::vector<WorkPoly>& basis) const {
    for (const auto& g : basis)
      if (g.lm().divides(m)) return &g;
    return nullptr;
  }

  // Reduces the leading term until it is not divisible by any leading monomial.
  void top_reduce(WorkPoly& h, const std::vector<WorkPoly>& basis) const {
    while (!h.zero()) {
      const WorkPoly* g = find_divisor(h.lm(), basis);
      if (!g) return;
      subtract_multiple(h, 0, *g, h.lm().divided_by(g->lm()), h.lead().coefficient / g->lead().coefficient);
    }
  }

  // Reduces every term (global orders only).
  void full_reduce(WorkPoly& h, const std::vector<WorkPoly>& basis) const {
    std::size_t pos = 0;
    while (pos < h.terms.size()) {
      const WorkPoly* g = find_divisor(h.terms[pos].monomial, basis);
      if (!g) {
        ++pos;
        continue;
      }
      const Monomial m = h.terms[pos].monomial.divided_by(g->lm());
      const Rational c = h.terms[pos].coefficient / g->lead().coefficient;
      subtract_multiple(h, pos, *g, m, c);
    }
  }

  // Mora's weak normal form: reducers are chosen with minimal ecart, and the
  // current remainder joins the reducer set whenever its ecart is smaller than
  // the chosen reducer's.
  WorkPoly mora_normal_form(WorkPoly h, const std::vector<WorkPoly>& basis) const {
    std::deque<WorkPoly> extra;
    std::vector<const WorkPoly*> reducers;
    reducers.reserve(basis.size());
    for (const auto& g : basis) reducers.push_back(&g);
    while (!h.zero()) {
      const WorkPoly* best = nullptr;
      for (const WorkPoly* g : reducers) {
        if (!g->lm().divides(h.lm())) continue;
        if (!best || g->ecart() < best->ecart()) best = g;
      }
      if (!best) break;
      if (best->ecart() > h.ecart()) {
        extra.push_back(h);
        reducers.push_back(&extra.back());
      }
      subtract_multiple(h, 0, *best, h.lm().divided_by(best->lm()), h.lead().coefficient / best->lead().coefficient);
    }
    return h;
  }

  std::size_t nvars() const { return nvars_; }
  const MonomialOrder& order() const { return order_; }

 private:
  std::size_t nvars_;
  MonomialOrder order_;
};

struct Pair {
  std::size_t i, j;
  Monomial lcm;
};

// Drops elements whose leading monomial is divisible by another element's.
std::vector<WorkPoly> minimalize(std::vector<WorkPoly> basis) {
  std::vector<bool> keep(basis.size(), true);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = 0; j < basis.size() && keep[i]; ++j) {
      if (i == j || !basis[j].lm().divides(basis[i].lm())) continue;
      // Equal leading monomials: keep the earliest.
      keep[i] = basis[j].lm() == basis[i].lm() && j > i;
    }
  }
  std::vector<WorkPoly> out;
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (keep[i]) out.push_back(std::move(basis[i]));
  return out;
}

std::vector<Polynomial> buchberger(const Ideal& ideal, const Engine& eng) {
  std::vector<WorkPoly> basis;
  std::vector<Pair> pairs;
  std::set<std::pair<std::size_t, std::size_t>> pending;
  bool unit = false;

  auto add = [&](WorkPoly h) {
    eng.make_monic(h);
    if (h.lm().is_one()) unit = true;
    const std::size_t k = basis.size();
    for (std::size_t i = 0; i < k; ++i) {
      pairs.push_back({i, k, basis[i].lm().lcm(h.lm())});
      pending.insert({i, k});
    }
    basis.push_back(std::move(h));
  };

  for (const auto& g : ideal.generators()) {
    WorkPoly w = eng.from(g);
    eng.top_reduce(w, basis);
    if (!w.zero()) add(std::move(w));
    if (unit) break;
  }

  while (!pairs.empty() && !unit) {
    auto it = std::min_element(pairs.begin(), pairs.end(), [&](const Pair& a, const Pair& b) {
      return eng.order().compare(a.lcm, b.lcm) < 0;
    });
    const Pair p = *it;
    pairs.erase(it);
    pending.erase({p.i, p.j});

    const WorkPoly& f = basis[p.i];
    const WorkPoly& g = basis[p.j];
    if (f.lm().coprime(g.lm())) continue;
    bool chain = false;
    for (std::size_t k = 0; k < basis.size() && !chain; ++k) {
      if (k == p.i || k == p.j || !basis[k].lm().divides(p.lcm)) continue;
      const bool ik = pending.count({std::min(p.i, k), std::max(p.i, k)}) != 0;
      const bool jk = pending.count({std::min(p.j, k), std::max(p.j, k)}) != 0;
      chain = !ik && !jk;
    }
    if (chain) continue;

    WorkPoly s = eng.spoly(f, g);
    eng.top_reduce(s, basis);
    if (!s.zero()) add(std::move(s));
  }

  if (unit) return {Polynomial::constant(eng.nvars(), Rational(1))};

  std::vector<WorkPoly> minimal = minimalize(std::move(basis));
  // Tail-reduce each element against the others.
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<WorkPoly> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    eng.full_reduce(minimal[i], others);
    eng.make_monic(minimal[i]);
  }
  std::sort(minimal.begin(), minimal.end(),
            [&](const WorkPoly& a, const WorkPoly& b) { return eng.order().greater(a.lm(), b.lm()); });
  std::vector<Polynomial> out;
  for (const auto& w : minimal) out.push_back(eng.to(w));
  return out;
}

std::vector<Polynomial> mora(const Ideal& ideal, const Engine& eng) {
  std::vector<WorkPoly> basis;
  std::vector<Pair> pairs;
  bool unit = false;

  auto add = [&](WorkPoly h) {
    eng.make_monic(h);
    if (h.lm().is_one()) unit = true;
    const std::size_t k = basis.size();
    for (std::size_t i = 0; i < k; ++i) pairs.push_back({i, k, basis[i].lm().lcm(h.lm())});
    basis.push_back(std::move(h));
  };

  for (const auto& g : ideal.generators()) {
    WorkPoly w = eng.mora_normal_form(eng.from(g), basis);
    if (!w.zero()) add(std::move(w));
    if (unit) break;
  }

  // No pair criteria here: the product criterion's usual proof needs a
  // well-order.
  while (!pairs.empty() && !unit) {
    auto it = std::min_element(pairs.begin(), pairs.end(), [&](const Pair& a, const Pair& b) {
      if (a.lcm.degree() != b.lcm.degree()) return a.lcm.degree() < b.lcm.degree();
      return eng.order().compare(a.lcm, b.lcm) > 0;
    });
    const Pair p = *it;
    pairs.erase(it);
    WorkPoly h = eng.mora_normal_form(eng.spoly(basis[p.i], basis[p.j]), basis);
    if (!h.zero()) add(std::move(h));
  }

  if (unit) return {Polynomial::constant(eng.nvars(), Rational(1))};

  std::vector<WorkPoly> minimal = minimalize(std::move(basis));
  std::sort(minimal.begin(), minimal.end(),
            [&](const WorkPoly& a, const WorkPoly& b) { return eng.order().greater(a.lm(), b.lm()); });
  std::vector<Polynomial> out;
  for (const auto& w : minimal) out.push_back(eng.to(w));
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// Public operations

StandardBasis groebner_basis(const Ideal& ideal, MonomialOrder order) {
  if (!order.is_global()) throw std::invalid_argument("groebner_basis requires a global order");
  Engine eng(ideal.nvars(), order);
  return StandardBasis{ideal, order, buchberger(ideal, eng), true};
}

StandardBasis mora_standard_basis(const Ideal& ideal, MonomialOrder order) {
  if (!order.is_local()) throw std::invalid_argument("mora_standard_basis requires a local order");
  Engine eng(ideal.nvars(), order);
  return StandardBasis{ideal, order, mora(ideal, eng), false};
}

StandardBasis standard_basis(const Ideal& ideal, MonomialOrder order) {
  return order.is_local() ? mora_standard_basis(ideal, order) : groebner_basis(ideal, order);
}

Polynomial normal_form(const Polynomial& p, const StandardBasis& basis) {
  Engine eng(basis.ideal.nvars(), basis.order);
  std::vector<WorkPoly> gens;
  gens.reserve(basis.basis.size());
  for (const auto& g : basis.basis) gens.push_back(eng.from(g));
  WorkPoly h = eng.from(p);
  if (basis.order.is_local()) {
    h = eng.mora_normal_form(std::move(h), gens);
  } else {
    eng.full_reduce(h, gens);
  }
  return eng.to(h);
}

bool contains(const StandardBasis& basis, const Polynomial& p) { return normal_form(p, basis).is_zero(); }

Ideal eliminate_last_variable(const Ideal& ideal) {
  if (ideal.nvars() < 1) throw std::invalid_argument("no variable to eliminate");
  const std::size_t n = ideal.nvars() - 1;
  const StandardBasis gb = groebner_basis(ideal, MonomialOrder::eliminate_last());
  std::vector<Polynomial> kept;
  for (const auto& g : gb.basis) {
    const bool free_of_tag = std::all_of(g.terms().begin(), g.terms().end(),
                                         [n](const Term& t) { return t.monomial[n] == 0; });
    if (free_of_tag) kept.push_back(g.resized(n));
  }
  return Ideal(n, std::move(kept));
}

Ideal intersect(const Ideal& a, const Ideal& b) {
  if (a.nvars() != b.nvars()) throw std::invalid_argument("variable count mismatch");
  const std::size_t n = a.nvars();
  if (a.is_zero() || b.is_zero()) return Ideal(n);
  if (a.has_unit_generator()) return b;
  if (b.has_unit_generator()) return a;
  const Polynomial t = Polynomial::variable(n + 1, n);
  const Polynomial one_minus_t = Polynomial::constant(n + 1, Rational(1)) - t;
  std::vector<Polynomial> gens;
  for (const auto& f : a.generators()) gens.push_back(t * f.resized(n + 1));
  for (const auto& g : b.generators()) gens.push_back(one_minus_t * g.resized(n + 1));
  return eliminate_last_variable(Ideal(n + 1, std::move(gens)));
}

Ideal quotient_by_element(const Ideal& ideal, const Polynomial& g) {
  const std::size_t n = ideal.nvars();
  if (g.is_zero()) throw std::invalid_argument("quotient by the zero polynomial");
  if (g.is_constant()) return ideal;
  if (contains(groebner_basis(ideal), g)) return Ideal::unit(n);
  const Ideal meet = intersect(ideal, Ideal(n, {g}));
  std::vector<Polynomial> gens;
  for (const auto& h : meet.generators()) gens.push_back(divide_exact(h, g));
  return Ideal(n, std::move(gens));
}

Ideal ideal_quotient(const Ideal& ideal, const Ideal& by, MonomialOrder order) {
  if (!order.is_global()) throw std::invalid_argument("ideal_quotient is computed with a global order");
  if (by.is_zero()) throw std::invalid_argument("quotient by the zero ideal");
  if (ideal.nvars() != by.nvars()) throw std::invalid_argument("variable count mismatch");
  if (by.has_unit_generator()) return ideal;
  std::optional<Ideal> acc;
  for (const auto& g : by.generators()) {
    Ideal q = quotient_by_element(ideal, g);
    if (q.has_unit_generator()) continue;
    acc = acc ? intersect(*acc, q) : std::move(q);
  }
  return acc ? *acc : Ideal::unit(ideal.nvars());
}

Saturation saturate(const Ideal& ideal, const Ideal& by, MonomialOrder order) {
  if (by.is_zero()) throw std::invalid_argument("saturation by the zero ideal");
  StandardBasis current = groebner_basis(ideal, order);
  unsigned exponent = 0;
  while (true) {
    const Ideal current_ideal(ideal.nvars(), current.basis);
    if (current.is_unit()) break;
    StandardBasis next = groebner_basis(ideal_quotient(current_ideal, by, order), order);
    if (next.basis == current.basis) break;
    current = std::move(next);
    ++exponent;
  }
  Ideal result(ideal.nvars(), current.basis);
  current.ideal = result;
  return Saturation{std::move(result), std::move(current), exponent};
}

int dimension(const StandardBasis& basis) {
  const std::size_t n = basis.ideal.nvars();
  const auto lms = basis.leading_monomials();
  for (const auto& m : lms)
    if (m.is_one()) return -1;
  std::vector<std::uint32_t> supports;
  for (const auto& m : lms) supports.push_back(m.support());
  int best = 0;
  for (std::uint32_t subset = 0; subset < (1u << n); ++subset) {
    const int size = __builtin_popcount(subset);
    if (size <= best) continue;
    const bool independent = std::none_of(supports.begin(), supports.end(),
                                          [subset](std::uint32_t s) { return (s & ~subset) == 0; });
    if (independent) best = size;
  }
  return best;
}

StandardMonomials standard_monomials(const StandardBasis& basis) {
  const int dim = dimension(basis);
  if (dim < 0) return {{}, true};
  if (dim > 0) return {{}, false};
  const auto lms = basis.leading_monomials();
  auto in_leading_ideal = [&](const Monomial& m) {
    return std::any_of(lms.begin(), lms.end(), [&](const Monomial& l) { return l.divides(m); });
  };
  const std::size_t n = basis.ideal.nvars();
  std::vector<Monomial> found;
  std::unordered_set<Monomial, MonomialHash> seen;
  std::deque<Monomial> queue{Monomial(n)};
  seen.insert(Monomial(n));
  while (!queue.empty()) {
    Monomial m = queue.front();
    queue.pop_front();
    if (in_leading_ideal(m)) continue;
    found.push_back(m);
    for (std::size_t i = 0; i < n; ++i) {
      Monomial next = m * Monomial::variable(n, i);
      if (seen.insert(next).second) queue.push_back(next);
    }
  }
  const MonomialOrder canonical = MonomialOrder::global();
  std::sort(found.begin(), found.end(), [&](const Monomial& a, const Monomial& b) { return canonical.compare(a, b) < 0; });
  return {std::move(found), true};
}

std::optional<std::size_t> local_colength(const Ideal& ideal) {
  const StandardBasis sb = mora_standard_basis(ideal);
  const auto sm = standard_monomials(sb);
  if (!sm.complete) return std::nullopt;
  return sm.monomials.size();
}

}  // namespace polarlink
