#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "gbx/closedform.hpp"
#include "gbx/boundcert.hpp"
#include "gbx/pointideal.hpp"
#include "oracles.hpp"

using namespace gbx;

namespace {

Monomial mono(std::vector<int> e) { return Monomial(std::move(e)); }

std::set<std::vector<int>> class_exponents(const ExponentClass& c) {
  std::set<std::vector<int>> out;
  for (const auto& m : c.representatives) out.insert(m.exponents());
  return out;
}

std::uint64_t mask_of(std::initializer_list<int> elems) {
  std::uint64_t m = 0;
  for (int e : elems) m |= std::uint64_t{1} << (e - 1);
  return m;
}

}  // namespace

TEST_CASE("shift equivalence classes") {
  const auto c1 = equiv_class(mono({0, 1}), 2);
  CHECK(class_exponents(c1) == std::set<std::vector<int>>{{0, 1}, {1, 0}});

  const auto c2 = equiv_class(mono({0, 0}), 3);
  CHECK(class_exponents(c2) == std::set<std::vector<int>>{{0, 0}, {1, 1}, {2, 2}});

  for (long long p : {2, 3, 5}) {
    const auto c = equiv_class(mono({1, 0, 1}), p);
    CHECK(c.representatives.size() == static_cast<std::size_t>(p));
  }
  CHECK_THROWS_AS(equiv_class(mono({3, 0}), 3), std::invalid_argument);
}

TEST_CASE("class minima") {
  const TermOrder deglex2{OrderKind::deglex, 2};
  const auto m22 = min_set(2, 2, deglex2);
  REQUIRE(m22.monomials.size() == 2);
  CHECK(m22.monomials[0] == Monomial::one(2));
  CHECK(m22.monomials[1] == mono({0, 1}));

  const auto m23 = min_set(2, 3, deglex2);
  REQUIRE(m23.monomials.size() == 3);
  CHECK(m23.monomials[0] == Monomial::one(2));
  CHECK(m23.monomials[1] == mono({0, 1}));
  CHECK(m23.monomials[2] == mono({1, 0}));

  const TermOrder deglex3{OrderKind::deglex, 3};
  CHECK(min_set(3, 3, deglex3).monomials.size() == 9);  // p^{n-1}
}

TEST_CASE("B_j enumeration") {
  const auto b0 = enumerate_B(2, 2, 0);
  REQUIRE(b0.size() == 2);
  const Cyclotomic one(2, Rational(1)), minus(2, Rational(-1));
  CHECK(b0[0] == std::vector<Cyclotomic>{one, one});
  CHECK(b0[1] == std::vector<Cyclotomic>{minus, minus});

  const auto b1 = enumerate_B(2, 2, 1);
  REQUIRE(b1.size() == 2);
  CHECK(b1[0] == std::vector<Cyclotomic>{one, minus});
  CHECK(b1[1] == std::vector<Cyclotomic>{minus, one});

  CHECK(enumerate_B(3, 3, 2).size() == 9);  // p^{n-1}
  CHECK_THROWS_AS(enumerate_B(2, 3, 3), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_B(20, 3, 0), guard_error);
}

TEST_CASE("closed-form basis members vanish on their class") {
  const TermOrder deglex2{OrderKind::deglex, 2};
  const TermOrder deglex3{OrderKind::deglex, 3};
  const struct { int n; long long p; } cases[] = {{2, 2}, {2, 3}, {3, 3}, {4, 2}, {3, 2}};
  for (const auto& c : cases) {
    const TermOrder& order = c.n == 2 ? deglex2 : (c.n == 3 ? deglex3 : TermOrder{OrderKind::deglex, c.n});
    for (long long j = 0; j < c.p; ++j) {
      const auto basis = basis_root_of_unity(c.n, c.p, j, order);
      const auto points = enumerate_B(c.n, c.p, j);
      for (const auto& g : basis.polys)
        for (const auto& pt : points) CHECK(g.evaluate(pt).is_zero());
    }
  }
}

TEST_CASE("closed-form basis at (2,2,0) is the expected four-element set") {
  const TermOrder deglex2{OrderKind::deglex, 2};
  const auto basis = basis_root_of_unity(2, 2, 0, deglex2);
  REQUIRE(basis.polys.size() == 4);
  CHECK(!basis.reduced);
  const Cyclotomic z(2);
  const Cyclotomic one = z.one_like();
  auto lit = [&](std::vector<int> hi, std::vector<int> lo) {
    Polynomial<Cyclotomic> f(2, z);
    f.add_term(Monomial(std::move(hi)), one);
    f.add_term(Monomial(std::move(lo)), -one);
    return f;
  };
  CHECK(testing::same_polynomial_set(
      basis.polys, {lit({1, 0}, {0, 1}), lit({1, 1}, {0, 0}), lit({2, 0}, {0, 0}),
                    lit({0, 2}, {0, 0})}));
  // the verbatim set is a basis but not reduced
  CHECK(is_groebner(basis.polys, deglex2));
  CHECK(!is_reduced_basis(basis.polys, deglex2));
}

TEST_CASE("closed-form basis at (2,3,0) lists the class rewrites") {
  const TermOrder deglex2{OrderKind::deglex, 2};
  const auto basis = basis_root_of_unity(2, 3, 0, deglex2);
  const Cyclotomic z(3);
  const Cyclotomic one = z.one_like();
  auto lit = [&](std::vector<int> hi, std::vector<int> lo) {
    Polynomial<Cyclotomic> f(2, z);
    f.add_term(Monomial(std::move(hi)), one);
    f.add_term(Monomial(std::move(lo)), -one);
    return f;
  };
  auto contains = [&](const Polynomial<Cyclotomic>& want) {
    for (const auto& g : basis.polys)
      if (g == want) return true;
    return false;
  };
  CHECK(contains(lit({1, 1}, {0, 0})));  // x1 x2 - 1
  CHECK(contains(lit({0, 2}, {1, 0})));  // x2^2 - x1
  CHECK(basis.polys.size() == 8);
}

TEST_CASE("nonzero class index scales by the shifted root") {
  // on B_j the rewrite b - w^{kj} a must vanish; spot-check the coefficient
  // for (n,p) = (2,3), j = 1: class of (1,0) has minimum x1 and member x2^2
  // with shift k = 2, so the member polynomial is x2^2 - w^2 x1.
  const TermOrder deglex2{OrderKind::deglex, 2};
  const auto basis = basis_root_of_unity(2, 3, 1, deglex2);
  Polynomial<Cyclotomic> want(2, Cyclotomic(3));
  want.add_term(mono({0, 2}), Cyclotomic(3, Rational(1)));
  want.add_term(mono({1, 0}), -Cyclotomic::omega(3, 2));
  bool found = false;
  for (const auto& g : basis.polys)
    if (g == want) found = true;
  CHECK(found);
}

TEST_CASE("staircase of every class ideal equals the class minima") {
  const struct { int n; long long p; } cases[] = {{2, 2}, {2, 3}, {3, 3}, {4, 2}};
  for (const auto& c : cases)
    for (OrderKind kind : {OrderKind::lex, OrderKind::deglex}) {
      const TermOrder order{kind, c.n};
      const auto want = min_set(c.n, c.p, order);
      for (long long j = 0; j < c.p; ++j) {
        const auto basis = autoreduce(basis_root_of_unity(c.n, c.p, j, order), VerifyInput::no);
        const auto sm = standard_monomials(basis);
        REQUIRE(sm.monomials.size() == want.monomials.size());
        for (std::size_t i = 0; i < sm.monomials.size(); ++i)
          CHECK(sm.monomials[i] == want.monomials[i]);
      }
    }
}

TEST_CASE("closed form agrees with the incremental construction") {
  const struct { int n; long long p; } cases[] = {{2, 2}, {2, 3}, {3, 3}};
  for (const auto& c : cases)
    for (OrderKind kind : {OrderKind::lex, OrderKind::deglex})
      for (long long j = 0; j < c.p; ++j) {
        const TermOrder order{kind, c.n};
        const auto closed = autoreduce(basis_root_of_unity(c.n, c.p, j, order), VerifyInput::no);
        const auto points = enumerate_B(c.n, c.p, j);
        const auto incremental =
            vanishing_basis(PointSet<Cyclotomic>(c.n, points), order);
        REQUIRE(closed.polys.size() == incremental.polys.size());
        for (std::size_t i = 0; i < closed.polys.size(); ++i)
          CHECK(closed.polys[i] == incremental.polys[i]);
      }
}

TEST_CASE("low-degree monomials are class minima when p divides n") {
  const struct { int n; long long p; } cases[] = {{2, 2}, {4, 2}, {3, 3}, {6, 3}};
  for (const auto& c : cases) {
    const TermOrder order{OrderKind::deglex, c.n};
    const auto minima = min_set(c.n, c.p, order);
    std::set<std::vector<int>> min_exps;
    for (const auto& m : minima.monomials) min_exps.insert(m.exponents());
    // every monomial of D with degree < n(p-1)/p lies in Min
    const long long threshold_num = static_cast<long long>(c.n) * (c.p - 1);
    std::vector<int> e(static_cast<std::size_t>(c.n), 0);
    while (true) {
      long long deg = 0;
      for (int x : e) deg += x;
      if (deg * c.p < threshold_num) CHECK(min_exps.count(e) == 1);
      int i = c.n - 1;
      while (i >= 0 && e[static_cast<std::size_t>(i)] == c.p - 1) {
        e[static_cast<std::size_t>(i)] = 0;
        --i;
      }
      if (i < 0) break;
      ++e[static_cast<std::size_t>(i)];
    }
  }
}

TEST_CASE("H_t families") {
  CHECK(hset_family(1, 8) == std::vector<std::vector<int>>{{1}});
  CHECK(hset_family(2, 8) == std::vector<std::vector<int>>{{2, 3}});
  CHECK(hset_family(3, 8) == std::vector<std::vector<int>>{{2, 4, 5}, {3, 4, 5}});
  for (int t = 1; t <= 4; ++t)
    for (const auto& h : hset_family(t, 10)) {
      CHECK(is_hset(h, 10));
      CHECK(h.back() == 2 * t - 1);
      if (t > 1) CHECK(h[h.size() - 2] == 2 * t - 2);
    }
  CHECK(!is_hset({1, 3}, 8));
  CHECK(!is_hset({2, 3, 4}, 8));
  CHECK_THROWS_AS(hset_family(5, 8), std::invalid_argument);
  CHECK_THROWS_AS(hset_family(0, 8), std::invalid_argument);
}

TEST_CASE("f polynomials match their closed forms") {
  const Rational Q0;
  const int n = 5;
  for (int d = 0; d <= n; ++d) {
    // f_{{1},d} = x1 + ... + xn - d
    Polynomial<Rational> want(n, Q0);
    for (int i = 1; i <= n; ++i) want.add_term(Monomial::variable(n, i), Rational(1));
    want.add_term(Monomial::one(n), Rational(-d));
    CHECK(f_polynomial({1}, d, n) == want);

    // f_{{2,3},d} = sigma_{U,2} - (d-1) sigma_{U,1} + C(d,2), U = {2..n}
    std::vector<int> u;
    for (int i = 2; i <= n; ++i) u.push_back(i);
    Polynomial<Rational> want2 = elementary_symmetric(u, 2, n, Q0);
    want2 += elementary_symmetric(u, 1, n, Q0).scaled(Rational(-(d - 1)));
    want2 += Polynomial<Rational>::constant(n, Rational(mpz_class(d * (d - 1) / 2)));
    CHECK(f_polynomial({2, 3}, d, n) == want2);
  }
  CHECK_THROWS_AS(f_polynomial({1, 3}, 2, 8), std::invalid_argument);
}

TEST_CASE("f polynomials have degree t with leading monomial x_H") {
  const TermOrder order{OrderKind::deglex, 8};
  for (int t = 1; t <= 4; ++t)
    for (const auto& h : hset_family(t, 8))
      for (int d : {t, 4, 8}) {
        const auto f = f_polynomial(h, d, 8);
        CHECK(f.degree() == t);
        const auto [lm, lc] = f.leading_term(order);
        CHECK(lm == Monomial::squarefree(8, h));
        CHECK(lc.is_one());
        // the lex order with x_n < ... < x_1 picks the same leading monomial
        CHECK(f.leading_monomial(TermOrder{OrderKind::lex, 8}) == lm);
      }
}

TEST_CASE("f polynomials vanish on characteristic vectors of d-sets") {
  const Rational Q0;
  for (int n = 2; n <= 8; ++n)
    for (int t = 1; 2 * t <= n; ++t)
      for (int d = 0; d <= n; ++d)
        for (const auto& h : hset_family(t, n)) {
          const auto f = f_polynomial(h, d, n);
          for (const auto& v : characteristic_points(n, d, Q0))
            CHECK(f.evaluate(v).is_zero());
        }
}

TEST_CASE("D_d families") {
  const auto d1 = dd_family(1, 4);
  REQUIRE(d1.size() == 3);
  CHECK(d1[0] == mono({0, 1, 1, 0}));
  CHECK(d1[1] == mono({0, 1, 0, 1}));
  CHECK(d1[2] == mono({0, 0, 1, 1}));

  const auto d0 = dd_family(0, 2);
  REQUIRE(d0.size() == 2);
  CHECK(d0[0] == mono({1, 0}));
  CHECK(d0[1] == mono({0, 1}));

  CHECK(!is_dd_set({1, 3}, 1));
  CHECK(is_dd_set({2, 3}, 1));
  CHECK(dd_family(4, 8).empty());  // u_4 >= 8 leaves no room for u_5
}

TEST_CASE("uniform family basis at (2,1)") {
  const TermOrder order{OrderKind::deglex, 2};
  const Fp w(0, 2);
  const auto basis = basis_uniform(2, 1, w, order);
  REQUIRE(basis.polys.size() == 2);
  CHECK(basis.reduced);
  // x1 + x2 - 1 and x2^2 - x2 over F_2
  Polynomial<Fp> f1(2, w);
  f1.add_term(mono({1, 0}), Fp(1, 2));
  f1.add_term(mono({0, 1}), Fp(1, 2));
  f1.add_term(mono({0, 0}), Fp(-1, 2));
  Polynomial<Fp> f2(2, w);
  f2.add_term(mono({0, 2}), Fp(1, 2));
  f2.add_term(mono({0, 1}), Fp(-1, 2));
  CHECK(testing::same_polynomial_set(basis.polys, {f1, f2}));
}

TEST_CASE("uniform family basis matches the incremental construction") {
  const struct { int n; int d; } cases[] = {{2, 1}, {4, 2}};
  for (const auto& c : cases)
    for (long long p : {2, 3}) {
      const TermOrder order{OrderKind::deglex, c.n};
      const Fp w(0, p);
      const auto closed = basis_uniform(c.n, c.d, w, order);
      CHECK(closed.reduced);
      const auto points = characteristic_points(c.n, c.d, w);
      const auto incremental = vanishing_basis(PointSet<Fp>(c.n, points), order);
      REQUIRE(closed.polys.size() == incremental.polys.size());
      for (std::size_t i = 0; i < closed.polys.size(); ++i)
        CHECK(closed.polys[i] == incremental.polys[i]);
    }
}

TEST_CASE("uniform family staircase counts") {
  const TermOrder order{OrderKind::deglex, 4};
  const auto basis = basis_uniform(4, 2, Fp(0, 3), order);
  CHECK(standard_monomials(basis).monomials.size() == 6);  // C(4,2)
  for (const auto& g : basis.polys)
    for (const auto& v : characteristic_points(4, 2, Fp(0, 3)))
      CHECK(g.evaluate(v).is_zero());
  CHECK_THROWS_AS(basis_uniform(4, 3, Fp(0, 3), order), std::invalid_argument);
}

TEST_CASE("lazy uniform scan agrees with the materialized basis") {
  // n = 8, d = 4 over F_2: for several 6-subsets C, the first nonvanishing
  // member of the materialized basis must match the closed-form scan.
  const int n = 8, d = 4;
  const long long p = 2;
  const TermOrder order{OrderKind::deglex, n};
  const Fp w(0, p);
  const auto basis = basis_uniform(n, d, w, order);
  REQUIRE(basis.reduced);

  const std::uint64_t masks[] = {mask_of({1, 2, 3, 4, 5, 6}), mask_of({1, 2, 4, 6, 7, 8}),
                                 mask_of({3, 4, 5, 6, 7, 8}), mask_of({1, 3, 5, 6, 7, 8})};
  for (const std::uint64_t c_mask : masks) {
    std::vector<Fp> h(static_cast<std::size_t>(n), Fp(0, p));
    for (int i = 1; i <= n; ++i)
      if ((c_mask >> (i - 1)) & 1) h[static_cast<std::size_t>(i - 1)] = Fp(1, p);
    const Monomial via_basis = new_standard_monomial(basis, h);
    const Monomial via_scan = uniform_new_standard_monomial_fp(n, d, p, c_mask);
    CHECK(via_basis == via_scan);
  }
}
