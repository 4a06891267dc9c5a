#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "gbx/polynomial.hpp"
#include "gbx/rational.hpp"
#include "gbx/fp.hpp"
#include "oracles.hpp"

using namespace gbx;

namespace {

const Rational Q0;

// tiny literal builder: list of (coef, exps)
Polynomial<Rational> poly(int n, std::initializer_list<std::pair<long, std::vector<int>>> terms) {
  Polynomial<Rational> f(n, Q0);
  for (const auto& [c, e] : terms) f.add_term(Monomial(e), Rational(c));
  return f;
}

Monomial mono(std::vector<int> e) { return Monomial(std::move(e)); }

}  // namespace

TEST_CASE("term order matches the stated convention") {
  const TermOrder deglex{OrderKind::deglex, 2};
  const TermOrder lex{OrderKind::lex, 2};

  // x_2 < x_1 for both orders
  CHECK(deglex.less(mono({0, 1}), mono({1, 0})));
  CHECK(lex.less(mono({0, 1}), mono({1, 0})));
  // equal degree falls back to lex: x_2^2 < x_1 x_2
  CHECK(deglex.less(mono({0, 2}), mono({1, 1})));
  // pure lex ignores degree: x_2^5 < x_1
  CHECK(lex.less(mono({0, 5}), mono({1, 0})));
  // deglex is degree compatible: x_2^2 > x_1
  CHECK(deglex.greater(mono({0, 2}), mono({1, 0})));
  CHECK(deglex.compare(mono({2, 1}), mono({2, 1})) == 0);

  const TermOrder wrong{OrderKind::deglex, 3};
  CHECK_THROWS_AS(wrong.compare(mono({0, 1}), mono({1, 0})), std::invalid_argument);
}

TEST_CASE("term order properties on random triples") {
  std::mt19937_64 rng(7);
  for (OrderKind kind : {OrderKind::lex, OrderKind::deglex}) {
    const TermOrder ord{kind, 3};
    for (int trial = 0; trial < 300; ++trial) {
      const Monomial u = testing::random_monomial(3, 4, rng);
      const Monomial v = testing::random_monomial(3, 4, rng);
      const Monomial w = testing::random_monomial(3, 4, rng);
      // antisymmetry and totality
      CHECK(ord.compare(u, v) == -ord.compare(v, u));
      CHECK((ord.compare(u, v) == 0) == (u == v));
      // transitivity
      if (ord.compare(u, v) <= 0 && ord.compare(v, w) <= 0) CHECK(ord.compare(u, w) <= 0);
      // 1 is minimal, multiplicativity
      CHECK(ord.compare(Monomial::one(3), u) <= 0);
      if (ord.less(u, v)) CHECK(ord.less(u * w, v * w));
    }
  }
}

TEST_CASE("leading terms") {
  const TermOrder deglex{OrderKind::deglex, 2};
  const auto f = poly(2, {{1, {1, 0}}, {1, {0, 1}}});  // x1 + x2
  CHECK(f.leading_monomial(deglex) == mono({1, 0}));
  const auto c = poly(2, {{-3, {0, 0}}});
  CHECK(c.leading_monomial(deglex) == Monomial::one(2));
  CHECK_THROWS_AS(Polynomial<Rational>(2, Q0).leading_term(deglex), std::domain_error);
}

TEST_CASE("no zero coefficients stored") {
  Polynomial<Rational> f(2, Q0);
  f.add_term(mono({1, 1}), Rational(2));
  f.add_term(mono({1, 1}), Rational(-2));
  CHECK(f.is_zero());
  CHECK(f.term_count() == 0);
  f.add_term(mono({0, 1}), Rational(0));
  CHECK(f.is_zero());
}

TEST_CASE("reduce examples") {
  const TermOrder deglex{OrderKind::deglex, 2};
  // x1^2 mod {x1^2 - 1} -> 1
  const auto f1 = poly(2, {{1, {2, 0}}});
  const auto g1 = poly(2, {{1, {2, 0}}, {-1, {0, 0}}});
  CHECK(reduce(f1, {g1}, deglex) == poly(2, {{1, {0, 0}}}));
  // x1 x2 mod {x1 - x2} -> x2^2
  const auto f2 = poly(2, {{1, {1, 1}}});
  const auto g2 = poly(2, {{1, {1, 0}}, {-1, {0, 1}}});
  CHECK(reduce(f2, {g2}, deglex) == poly(2, {{1, {0, 2}}}));
  // empty divisor list
  CHECK(reduce(f2, std::vector<Polynomial<Rational>>{}, deglex) == f2);
  // zero input
  CHECK(reduce(Polynomial<Rational>(2, Q0), {g2}, deglex).is_zero());
}

TEST_CASE("reduce properties on random inputs") {
  std::mt19937_64 rng(20240812);
  std::uniform_int_distribution<int> cd(-3, 3);
  auto coef = [&](auto& r) { return Rational(cd(r)); };
  const TermOrder deglex{OrderKind::deglex, 2};

  for (int trial = 0; trial < 60; ++trial) {
    const auto f = testing::random_polynomial(2, 3, 5, Q0, rng, coef);
    std::vector<Polynomial<Rational>> basis;
    for (int i = 0; i < 2; ++i) {
      auto g = testing::random_polynomial(2, 2, 3, Q0, rng, coef);
      if (!g.is_zero()) basis.push_back(g);
    }
    const auto r = reduce(f, basis, deglex);
    // idempotence
    CHECK(reduce(r, basis, deglex) == r);
    // degree never grows under a degree-compatible order
    if (!f.is_zero()) CHECK(r.degree() <= f.degree());
    // no monomial of the normal form is reducible
    for (const auto& [m, c] : r.terms())
      for (const auto& g : basis) CHECK(!g.leading_monomial(deglex).divides(m));
  }
}

TEST_CASE("reduction preserves values at common zeros") {
  // divisors vanishing at v: reduce cannot change the value at v
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<int> cd(-3, 3);
  auto coef = [&](auto& r) { return Rational(cd(r)); };
  const TermOrder deglex{OrderKind::deglex, 2};
  const std::vector<Rational> v{Rational(1), Rational(-2)};

  for (int trial = 0; trial < 60; ++trial) {
    std::vector<Polynomial<Rational>> basis;
    for (int i = 0; i < 2; ++i) {
      auto g = testing::random_polynomial(2, 2, 4, Q0, rng, coef);
      if (g.is_zero()) continue;
      g.add_term(Monomial::one(2), -g.evaluate(v));  // force g(v) = 0
      if (!g.is_zero()) basis.push_back(g);
    }
    const auto f = testing::random_polynomial(2, 3, 5, Q0, rng, coef);
    CHECK(reduce(f, basis, deglex).evaluate(v) == f.evaluate(v));
  }
}

TEST_CASE("s-polynomial examples") {
  const TermOrder deglex{OrderKind::deglex, 2};
  const auto f = poly(2, {{1, {2, 0}}, {-1, {0, 0}}});  // x1^2 - 1
  const auto g = poly(2, {{1, {1, 1}}, {-1, {0, 0}}});  // x1 x2 - 1
  CHECK(s_polynomial(f, g, deglex) == poly(2, {{1, {1, 0}}, {-1, {0, 1}}}));  // x1 - x2
  CHECK(s_polynomial(f, f, deglex).is_zero());
  const auto m1 = poly(2, {{1, {2, 0}}});
  const auto m2 = poly(2, {{1, {0, 2}}});
  CHECK(s_polynomial(m1, m2, deglex).is_zero());
  CHECK_THROWS_AS(s_polynomial(f, Polynomial<Rational>(2, Q0), deglex), std::domain_error);
}

TEST_CASE("evaluation") {
  const auto f = poly(2, {{1, {1, 0}}, {1, {0, 1}}});
  CHECK(f.evaluate({Rational(1), Rational(-1)}).is_zero());
  CHECK(poly(2, {{1, {0, 0}}}).evaluate({Rational(5), Rational(7)}).is_one());
  CHECK_THROWS_AS(f.evaluate({Rational(1)}), std::invalid_argument);

  const Fp w(0, 5);
  Polynomial<Fp> g(3, w);
  g.add_term(mono({1, 1, 1}), Fp(2, 5));
  CHECK(g.evaluate({Fp(1, 5), Fp(2, 5), Fp(3, 5)}) == Fp(12, 5));
}

TEST_CASE("elementary symmetric polynomials") {
  CHECK(elementary_symmetric({2, 3}, 0, 3, Q0) == poly(3, {{1, {0, 0, 0}}}));
  CHECK(elementary_symmetric({2, 3}, 1, 3, Q0) == poly(3, {{1, {0, 1, 0}}, {1, {0, 0, 1}}}));
  CHECK(elementary_symmetric({1, 2, 3}, 2, 3, Q0) ==
        poly(3, {{1, {1, 1, 0}}, {1, {1, 0, 1}}, {1, {0, 1, 1}}}));
  CHECK_THROWS_AS(elementary_symmetric({1, 2}, 3, 3, Q0), std::invalid_argument);
  CHECK_THROWS_AS(elementary_symmetric({0, 2}, 1, 3, Q0), std::invalid_argument);
  CHECK_THROWS_AS(elementary_symmetric({2, 2}, 1, 3, Q0), std::invalid_argument);

  // sigma_{J,i}(1,...,1) = C(|J|, i)
  const auto s = elementary_symmetric({1, 2, 3, 4}, 2, 4, Q0);
  CHECK(s.evaluate(std::vector<Rational>(4, Rational(1))) == Rational(6));
}

TEST_CASE("polynomial arithmetic sanity") {
  const auto f = poly(2, {{1, {1, 0}}, {2, {0, 1}}});
  const auto g = poly(2, {{1, {1, 0}}, {-1, {0, 0}}});
  CHECK((f + g) - g == f);
  CHECK(f * g == g * f);
  CHECK((f * g).degree() == f.degree() + g.degree());
  CHECK((-f) + f == Polynomial<Rational>(2, Q0));
  CHECK(f.scaled(Rational(0)).is_zero());
  CHECK_THROWS_AS(f + Polynomial<Rational>(3, Q0), std::invalid_argument);
}
