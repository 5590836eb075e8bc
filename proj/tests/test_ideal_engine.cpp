#include <algorithm>
#include <random>

#include "doctest.h"
#include "polarlink/ideal.hpp"
#include "polarlink/matrix.hpp"
#include "polarlink/parser.hpp"

using namespace polarlink;

namespace {

const std::vector<std::string> XY{"x", "y"};
const std::vector<std::string> XYZ{"x", "y", "z"};

Polynomial P(const std::string& text, const std::vector<std::string>& vars = XY) {
  return parse_polynomial(text, vars);
}

Ideal I(std::initializer_list<const char*> gens, const std::vector<std::string>& vars = XY) {
  std::vector<Polynomial> ps;
  for (const char* g : gens) ps.push_back(P(g, vars));
  return Ideal(vars.size(), std::move(ps));
}

bool same_ideal(const Ideal& a, const Ideal& b) {
  return groebner_basis(a).basis == groebner_basis(b).basis;
}

Polynomial spoly(const Polynomial& f, const Polynomial& g, const MonomialOrder& order) {
  const auto& lf = f.leading_term(order);
  const auto& lg = g.leading_term(order);
  const Monomial l = lf.monomial.lcm(lg.monomial);
  return f.times_monomial(l.divided_by(lf.monomial), Rational(1) / lf.coefficient) -
         g.times_monomial(l.divided_by(lg.monomial), Rational(1) / lg.coefficient);
}

Polynomial random_poly(std::mt19937_64& rng, std::size_t nvars, unsigned max_degree, std::size_t terms,
                       bool no_constant = false) {
  std::uniform_int_distribution<int> coef(-4, 4);
  std::uniform_int_distribution<unsigned> exp(0, max_degree);
  std::vector<Term> out;
  for (std::size_t t = 0; t < terms; ++t) {
    Monomial m(nvars);
    unsigned budget = max_degree;
    for (std::size_t i = 0; i < nvars; ++i) {
      const unsigned e = std::min(exp(rng), budget);
      m.set(i, e);
      budget -= e;
    }
    if (no_constant && m.is_one()) m.set(0, 1);
    out.push_back({m, Rational(coef(rng))});
  }
  return Polynomial(nvars, std::move(out));
}

RationalMatrix random_invertible(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<long> entry(-3, 3);
  while (true) {
    RationalMatrix m(n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) m(r, c) = Rational(entry(rng));
    if (!m.determinant().is_zero()) return m;
  }
}

Ideal transformed(const Ideal& ideal, const RationalMatrix& m) {
  std::vector<Polynomial> gens;
  for (const auto& g : ideal.generators()) gens.push_back(substitute_linear(g, m));
  return Ideal(ideal.nvars(), std::move(gens));
}

}  // namespace

TEST_CASE("groebner basis examples") {
  const auto b = groebner_basis(I({"x", "y"}));
  CHECK(b.reduced);
  CHECK(b.basis == std::vector<Polynomial>{P("x"), P("y")});

  const auto c = groebner_basis(I({"x^2-y", "x^3"}));
  CHECK(contains(c, P("x^3")));
  CHECK(normal_form(P("x^3"), c).is_zero());
  CHECK(contains(c, P("y^2")));
  CHECK(contains(c, P("x*y")));

  const auto z = groebner_basis(Ideal(2));
  CHECK(z.basis.empty());
  CHECK_FALSE(z.is_unit());
  CHECK(groebner_basis(I({"x+1", "x"})).is_unit());
  CHECK_THROWS_AS(groebner_basis(I({"x"}), MonomialOrder::local()), std::invalid_argument);
}

TEST_CASE("mora standard basis examples") {
  const auto a = mora_standard_basis(I({"x+x^2"}));
  REQUIRE(a.leading_monomials().size() == 1);
  CHECK(a.leading_monomials()[0] == Monomial{1, 0});
  CHECK(local_colength(I({"x+x^2", "y"})) == 1u);

  const auto b = mora_standard_basis(I({"y^2", "x^2+y^3"}));
  auto lms = b.leading_monomials();
  std::sort(lms.begin(), lms.end(), [](const Monomial& p, const Monomial& q) { return p.hash() < q.hash(); });
  CHECK(std::find(lms.begin(), lms.end(), Monomial{0, 2}) != lms.end());
  CHECK(std::find(lms.begin(), lms.end(), Monomial{2, 0}) != lms.end());
  const auto sm = standard_monomials(b);
  CHECK(sm.complete);
  CHECK(sm.monomials.size() == 4);
  CHECK(normal_form(P("y^3"), b).is_zero());

  const auto c = mora_standard_basis(I({"x"}));
  CHECK(c.basis == std::vector<Polynomial>{P("x")});
  CHECK_THROWS_AS(mora_standard_basis(I({"x"}), MonomialOrder::global()), std::invalid_argument);
}

TEST_CASE("units of the local ring") {
  // 1 + x is invertible at the origin
  CHECK(mora_standard_basis(I({"1+x"})).is_unit());
  CHECK(local_colength(I({"x*(1+y)", "y"})) == 1u);
  CHECK(local_colength(I({"1+x"})) == 0u);
  CHECK(contains(mora_standard_basis(I({"x+x*y"})), P("x")));
  CHECK_FALSE(contains(groebner_basis(I({"x+x*y"})), P("x")));
}

TEST_CASE("normal forms") {
  CHECK(normal_form(P("x^2"), groebner_basis(I({"x", "y"}))).is_zero());
  CHECK(normal_form(P("x+1"), groebner_basis(I({"x"}))) == P("1"));
}

TEST_CASE("ideal quotients") {
  CHECK(same_ideal(ideal_quotient(I({"x^2", "x*y"}), I({"x"})), I({"x", "y"})));
  CHECK(same_ideal(ideal_quotient(I({"x"}), I({"y"})), I({"x"})));
  const auto i = I({"x^2+y^3", "x*y"});
  CHECK(same_ideal(ideal_quotient(i, I({"1"})), i));
  CHECK(same_ideal(quotient_by_element(I({"x*y"}), P("x")), I({"y"})));
  CHECK(groebner_basis(quotient_by_element(I({"x"}), P("x*y"))).is_unit());
  CHECK_THROWS_AS(ideal_quotient(i, Ideal(2)), std::invalid_argument);
  CHECK_THROWS_AS(ideal_quotient(i, I({"x"}), MonomialOrder::local()), std::invalid_argument);
}

TEST_CASE("saturation") {
  const auto a = saturate(I({"x^2", "x*y"}), I({"x", "y"}));
  CHECK(same_ideal(a.ideal, I({"x"})));
  CHECK(a.exponent >= 1);
  CHECK(same_ideal(saturate(I({"x*y"}), I({"x"})).ideal, I({"y"})));
  const auto i = I({"x^2+y^3"});
  const auto b = saturate(i, I({"1"}));
  CHECK(same_ideal(b.ideal, i));
  CHECK(b.exponent == 0);
  CHECK(same_ideal(saturate(I({"x^3*y"}), I({"x"})).ideal, I({"y"})));
}

TEST_CASE("intersection and elimination") {
  CHECK(same_ideal(intersect(I({"x"}), I({"y"})), I({"x*y"})));
  CHECK(same_ideal(intersect(I({"x^2", "y"}), I({"x", "y^2"})), I({"x^2", "x*y", "y^2"})));
  const auto e = eliminate_last_variable(I({"x-z^2", "y-z^3"}, XYZ));
  CHECK(e.nvars() == 2);
  CHECK(same_ideal(e, I({"x^3-y^2"})));
}

TEST_CASE("dimension") {
  CHECK(dimension(groebner_basis(I({"x", "y"}))) == 0);
  CHECK(dimension(groebner_basis(I({"x*y"}))) == 1);
  CHECK(dimension(groebner_basis(I({"1"}))) == -1);
  CHECK(dimension(groebner_basis(Ideal(3))) == 3);
  CHECK(dimension(groebner_basis(I({"x*y", "x*z"}, XYZ))) == 2);
  CHECK(dimension(mora_standard_basis(I({"x*(x-1)", "y"}))) == 0);
  // the point (1, 0) is not at the origin
  CHECK(dimension(mora_standard_basis(I({"x-1"}))) == -1);
}

TEST_CASE("local colength") {
  CHECK(local_colength(I({"x", "y^2"})) == 2u);
  CHECK(local_colength(I({"y^2", "x^2+y^3"})) == 4u);
  CHECK_FALSE(local_colength(I({"x*y"})).has_value());
  // a second intersection point away from 0 is invisible locally
  CHECK(local_colength(I({"y", "x^2*(x-1)"})) == 2u);
}

TEST_CASE("property: Buchberger criterion holds for computed bases") {
  std::mt19937_64 rng(99);
  const auto order = MonomialOrder::global();
  for (int round = 0; round < 15; ++round) {
    const Ideal ideal(3, {random_poly(rng, 3, 3, 3), random_poly(rng, 3, 3, 3), random_poly(rng, 3, 2, 3)});
    const auto b = groebner_basis(ideal);
    for (std::size_t i = 0; i < b.basis.size(); ++i)
      for (std::size_t j = i + 1; j < b.basis.size(); ++j)
        CHECK(normal_form(spoly(b.basis[i], b.basis[j], order), b).is_zero());
    for (const auto& g : ideal.generators()) CHECK(contains(b, g));
    for (const auto& g : b.basis) CHECK(g.leading_term(order).coefficient.is_one());
  }
}

TEST_CASE("property: reduced basis does not depend on generator order") {
  std::mt19937_64 rng(123);
  for (int round = 0; round < 10; ++round) {
    std::vector<Polynomial> gens{random_poly(rng, 3, 3, 3), random_poly(rng, 3, 3, 3), random_poly(rng, 3, 2, 4)};
    const auto reference = groebner_basis(Ideal(3, gens)).basis;
    std::sort(gens.begin(), gens.end(), [](const Polynomial& a, const Polynomial& b) { return a.size() < b.size(); });
    do {
      CHECK(groebner_basis(Ideal(3, gens)).basis == reference);
    } while (std::next_permutation(gens.begin(), gens.end(),
                                   [](const Polynomial& a, const Polynomial& b) { return a.size() < b.size(); }));
    // scaling a generator does not change the ideal
    gens[0] *= Rational(-7, 3);
    CHECK(groebner_basis(Ideal(3, gens)).basis == reference);
  }
}

TEST_CASE("property: I ⊆ I:J ⊆ I:J^∞") {
  std::mt19937_64 rng(2024);
  for (int round = 0; round < 8; ++round) {
    const Ideal i(2, {random_poly(rng, 2, 3, 3, true) * random_poly(rng, 2, 2, 2, true),
                      random_poly(rng, 2, 3, 3, true)});
    const Ideal j(2, {random_poly(rng, 2, 1, 2, true)});
    if (j.is_zero()) continue;
    const auto q = groebner_basis(ideal_quotient(i, j));
    const auto s = saturate(i, j);
    for (const auto& g : i.generators()) CHECK(contains(q, g));
    for (const auto& g : q.basis) CHECK(contains(s.basis, g));
    // every element of the quotient times J lands in I
    const auto gi = groebner_basis(i);
    for (const auto& g : q.basis)
      for (const auto& h : j.generators()) CHECK(contains(gi, g * h));
  }
}

TEST_CASE("property: dimension is invariant under linear changes of coordinates") {
  std::mt19937_64 rng(77);
  const std::vector<Ideal> ideals{
      I({"x*y", "x*z"}, XYZ),         I({"x^2+y^2", "z"}, XYZ),      I({"y^2-x^2*z"}, XYZ),
      I({"x*y*z"}, XYZ),              I({"x", "y", "z"}, XYZ),       I({"x^2", "y^3", "x*z"}, XYZ),
      I({"x-y^2", "y-z^2"}, XYZ),     I({"x*y-z^2", "x^3"}, XYZ),    I({"x^2*y+z^2", "x*y"}, XYZ),
      I({"x^3+y^3+z^3"}, XYZ),        I({"x*(y-1)", "y*(y-1)"}, XYZ), I({"1+x"}, XYZ),
  };
  for (const auto& ideal : ideals) {
    const int global = dimension(groebner_basis(ideal));
    const int local = dimension(mora_standard_basis(ideal));
    for (int t = 0; t < 2; ++t) {
      const auto m = random_invertible(rng, 3);
      const auto moved = transformed(ideal, m);
      CHECK(dimension(groebner_basis(moved)) == global);
      CHECK(dimension(mora_standard_basis(moved)) == local);
      if (local == 0) CHECK(local_colength(moved) == local_colength(ideal));
    }
  }
}

TEST_CASE("property: membership by normal form agrees with membership by quotient") {
  std::mt19937_64 rng(555);
  for (int round = 0; round < 12; ++round) {
    const Ideal ideal(2, {random_poly(rng, 2, 2, 3), random_poly(rng, 2, 3, 3)});
    const auto b = groebner_basis(ideal);
    const auto a = random_poly(rng, 2, 2, 2);
    const auto member = a * ideal.generators()[0] + ideal.generators().back();
    const auto other = random_poly(rng, 2, 3, 3);
    for (const auto& p : {member, other}) {
      if (p.is_zero()) continue;
      // p ∈ I  iff  I : (p) is the unit ideal
      const bool by_quotient = groebner_basis(quotient_by_element(ideal, p)).is_unit();
      CHECK(contains(b, p) == by_quotient);
    }
    CHECK(contains(b, member));
  }
}
