#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "gbx/groebner.hpp"
#include "gbx/exactnum.hpp"
#include "oracles.hpp"

using namespace gbx;

namespace {

const Rational Q0;
const TermOrder DL2{OrderKind::deglex, 2};

Polynomial<Rational> poly(int n, std::initializer_list<std::pair<long, std::vector<int>>> terms) {
  Polynomial<Rational> f(n, Q0);
  for (const auto& [c, e] : terms) f.add_term(Monomial(e), Rational(c));
  return f;
}

Monomial mono(std::vector<int> e) { return Monomial(std::move(e)); }

// Closed-form basis of I(B_0) at n = 2, p = 3, assembled by hand from the
// three shift classes of {0,1,2}^2, over Q(w_3).
std::vector<Polynomial<Cyclotomic>> b0_basis_2_3() {
  const Cyclotomic z(3);
  const Cyclotomic one = z.one_like();
  auto make = [&](std::vector<int> hi, std::vector<int> lo) {
    Polynomial<Cyclotomic> f(2, z);
    f.add_term(Monomial(std::move(hi)), one);
    f.add_term(Monomial(std::move(lo)), -one);
    return f;
  };
  return {
      make({1, 1}, {0, 0}), make({2, 2}, {0, 0}),  // class of (0,0), min 1
      make({2, 1}, {1, 0}), make({0, 2}, {1, 0}),  // class of (1,0), min x1
      make({1, 2}, {0, 1}), make({2, 0}, {0, 1}),  // class of (0,1), min x2
      make({3, 0}, {0, 0}), make({0, 3}, {0, 0}),  // x_i^3 - 1
  };
}

}  // namespace

TEST_CASE("buchberger closes the one-step example") {
  const auto f = poly(2, {{1, {2, 0}}, {-1, {0, 0}}});  // x1^2 - 1
  const auto g = poly(2, {{1, {1, 1}}, {-1, {0, 0}}});  // x1 x2 - 1
  const auto basis = buchberger<Rational>({f, g}, DL2);
  const auto want = poly(2, {{1, {1, 0}}, {-1, {0, 1}}});  // x1 - x2
  bool found = false;
  for (const auto& b : basis.polys)
    if (b == want || b == -want) found = true;
  CHECK(found);
  CHECK(is_groebner(basis.polys, DL2));
}

TEST_CASE("buchberger trivial inputs") {
  const auto lin = poly(2, {{1, {1, 0}}, {-5, {0, 0}}});
  const auto single = buchberger<Rational>({lin}, DL2);
  REQUIRE(single.polys.size() == 1);
  CHECK(single.polys[0] == lin);

  // coprime leading monomials need no new elements
  const auto a = poly(2, {{1, {2, 0}}, {-1, {1, 0}}});
  const auto b = poly(2, {{1, {0, 2}}, {-1, {0, 1}}});
  const auto basis = buchberger<Rational>({a, b}, DL2);
  CHECK(basis.polys.size() == 2);

  CHECK_THROWS_AS(buchberger<Rational>({}, DL2), std::invalid_argument);
  CHECK_THROWS_AS(buchberger<Rational>({Polynomial<Rational>(2, Q0)}, DL2),
                  std::invalid_argument);
}

TEST_CASE("autoreduce strips the redundant closed-form members") {
  // the (n,p) = (2,2) closed-form set, which is a basis but not reduced
  const auto s1 = poly(2, {{1, {1, 0}}, {-1, {0, 1}}});   // x1 - x2
  const auto s2 = poly(2, {{1, {1, 1}}, {-1, {0, 0}}});   // x1 x2 - 1
  const auto s3 = poly(2, {{1, {2, 0}}, {-1, {0, 0}}});   // x1^2 - 1
  const auto s4 = poly(2, {{1, {0, 2}}, {-1, {0, 0}}});   // x2^2 - 1
  const auto reduced = autoreduce(GroebnerBasis<Rational>{DL2, {s1, s2, s3, s4}, false});
  REQUIRE(reduced.polys.size() == 2);
  CHECK(reduced.polys[0] == s1);
  CHECK(reduced.polys[1] == s4);
  CHECK(reduced.reduced);
  CHECK(is_reduced_basis(reduced.polys, DL2));

  // idempotence
  const auto again = autoreduce(reduced);
  CHECK(testing::same_polynomial_set(again.polys, reduced.polys));
}

TEST_CASE("autoreduce normalizes leading coefficients") {
  const auto f = poly(1, {{2, {1}}, {-2, {0}}});
  const TermOrder o1{OrderKind::deglex, 1};
  const auto reduced = autoreduce(GroebnerBasis<Rational>{o1, {f}, false});
  REQUIRE(reduced.polys.size() == 1);
  CHECK(reduced.polys[0] == poly(1, {{1, {1}}, {-1, {0}}}));
}

TEST_CASE("autoreduce rejects non-bases") {
  const auto f = poly(2, {{1, {2, 0}}, {-1, {0, 0}}});
  const auto g = poly(2, {{1, {1, 1}}, {-1, {0, 0}}});
  CHECK_THROWS_AS(autoreduce(GroebnerBasis<Rational>{DL2, {f, g}, false}),
                  std::invalid_argument);
  // the same call with verification off is the caller's responsibility
  CHECK_NOTHROW(autoreduce(GroebnerBasis<Rational>{DL2, {f, g}, false}, VerifyInput::no));
}

TEST_CASE("buchberger criterion as an oracle") {
  const auto f = poly(2, {{1, {2, 0}}, {-1, {0, 0}}});
  const auto g = poly(2, {{1, {1, 1}}, {-1, {0, 0}}});
  CHECK(!is_groebner<Rational>({f, g}, DL2));
  CHECK(is_groebner<Rational>({f}, DL2));
  CHECK(is_groebner(b0_basis_2_3(), DL2));
}

TEST_CASE("standard monomials of small staircases") {
  // single point: {x1 - a, x2 - b} -> {1}
  const auto p1 = poly(2, {{1, {1, 0}}, {-1, {0, 0}}});
  const auto p2 = poly(2, {{1, {0, 1}}, {-2, {0, 0}}});
  const auto sm1 = standard_monomials(GroebnerBasis<Rational>{DL2, {p2, p1}, true});
  REQUIRE(sm1.monomials.size() == 1);
  CHECK(sm1.monomials[0] == Monomial::one(2));

  // {x1 - x2, x2^2 - 1} -> {1, x2}
  const auto q1 = poly(2, {{1, {1, 0}}, {-1, {0, 1}}});
  const auto q2 = poly(2, {{1, {0, 2}}, {-1, {0, 0}}});
  const auto sm2 = standard_monomials(GroebnerBasis<Rational>{DL2, {q1, q2}, true});
  REQUIRE(sm2.monomials.size() == 2);
  CHECK(sm2.monomials[0] == Monomial::one(2));
  CHECK(sm2.monomials[1] == mono({0, 1}));
  CHECK(is_downward_closed(sm2));

  // closed-form basis of I(B_0) at (2,3): staircase {1, x1, x2}
  const auto b0 = autoreduce(GroebnerBasis<Cyclotomic>{DL2, b0_basis_2_3(), false});
  const auto sm3 = standard_monomials(b0);
  REQUIRE(sm3.monomials.size() == 3);
  CHECK(sm3.monomials[0] == Monomial::one(2));
  CHECK(sm3.monomials[1] == mono({0, 1}));
  CHECK(sm3.monomials[2] == mono({1, 0}));

  // unbounded staircase: no pure power of x2
  const auto lone = poly(2, {{1, {1, 0}}, {-1, {0, 1}}});
  CHECK_THROWS_AS(standard_monomials(GroebnerBasis<Rational>{DL2, {lone}, true}),
                  std::invalid_argument);
}

TEST_CASE("reduced basis is insensitive to generator order") {
  std::mt19937_64 rng(4242);
  std::uniform_int_distribution<int> cd(-3, 3);
  auto coef = [&](auto& r) { return Rational(cd(r)); };
  for (int trial = 0; trial < 12; ++trial) {
    std::vector<Polynomial<Rational>> gens;
    for (int i = 0; i < 3; ++i) {
      auto g = testing::random_polynomial(2, 2, 3, Q0, rng, coef);
      if (!g.is_zero()) gens.push_back(g);
    }
    if (gens.empty()) continue;
    const auto first = autoreduce(buchberger(gens, DL2), VerifyInput::no);
    std::vector<Polynomial<Rational>> shuffled = gens;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    const auto second = autoreduce(buchberger(shuffled, DL2), VerifyInput::no);
    REQUIRE(first.polys.size() == second.polys.size());
    for (std::size_t i = 0; i < first.polys.size(); ++i)
      CHECK(first.polys[i] == second.polys[i]);
  }
}

TEST_CASE("generators reduce to zero modulo the computed basis") {
  std::mt19937_64 rng(2718);
  std::uniform_int_distribution<int> cd(-3, 3);
  auto coef = [&](auto& r) { return Rational(cd(r)); };
  for (int trial = 0; trial < 15; ++trial) {
    std::vector<Polynomial<Rational>> gens;
    for (int i = 0; i < 3; ++i) {
      auto g = testing::random_polynomial(2, 2, 3, Q0, rng, coef);
      if (!g.is_zero()) gens.push_back(g);
    }
    if (gens.empty()) continue;
    const auto basis = autoreduce(buchberger(gens, DL2), VerifyInput::no);
    CHECK(is_groebner(basis.polys, DL2));
    for (const auto& g : gens) CHECK(reduce(g, basis.polys, DL2).is_zero());
  }
}

TEST_CASE("staircase size equals quotient dimension on random ideals") {
  // random zero-dimensional ideals x_i^2-lower terms; |Sm| bounded and
  // downward closed
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<int> cd(-2, 2);
  for (int trial = 0; trial < 8; ++trial) {
    std::vector<Polynomial<Rational>> gens;
    for (int i = 1; i <= 2; ++i) {
      Polynomial<Rational> g(2, Q0);
      g.add_term(Monomial::variable(2, i, 2), Rational(1));
      g.add_term(Monomial::one(2), Rational(cd(rng)));
      g.add_term(Monomial::variable(2, 3 - i), Rational(cd(rng)));
      gens.push_back(std::move(g));
    }
    const auto basis = autoreduce(buchberger(gens, DL2), VerifyInput::no);
    const auto sm = standard_monomials(basis);
    CHECK(is_downward_closed(sm));
    CHECK(sm.monomials.size() <= 4);
  }
}
