#ifndef GBX_CLOSEDFORM_HPP
#define GBX_CLOSEDFORM_HPP

#include <cstdint>
#include <vector>

#include "gbx/exactnum.hpp"
#include "gbx/groebner.hpp"

namespace gbx {

inline constexpr std::size_t kDefaultEnumerationGuard = 200000;
inline constexpr int kMaxUniformVars = 16;

// --- root-of-unity product sets -------------------------------------------

// Equivalence class of an exponent vector u in {0..p-1}^n under the diagonal
// shift u -> u + k(1,...,1) mod p. Every class has exactly p members.
struct ExponentClass {
  long long p;
  int nvars;
  std::vector<Monomial> representatives;  // sorted by exponent vector
};

ExponentClass equiv_class(const Monomial& u, long long p);

// One order-minimal monomial per shift class; the staircase of I(B_j) for
// every j. Cardinality p^{n-1}.
StandardMonomialSet min_set(int n, long long p, const TermOrder& order,
                            std::size_t guard = kDefaultEnumerationGuard);

// All vectors of {1, w, ..., w^{p-1}}^n whose coordinate product is w^j,
// as points over Q(w_p). Lexicographic in the exponent vectors.
std::vector<std::vector<Cyclotomic>> enumerate_B(int n, long long p, long long j,
                                                 std::size_t guard = kDefaultEnumerationGuard);

// Closed-form Groebner basis of I(B_j):
//   { b - w^{k j} a : a minimal in its class, b != a, k the shift a -> b }
//   plus { x_i^p - 1 : i in [n] }.
// The set is a Groebner basis but in general not reduced, so the reduced
// flag is left false; callers autoreduce.
GroebnerBasis<Cyclotomic> basis_root_of_unity(int n, long long p, long long j,
                                              const TermOrder& order,
                                              std::size_t guard = kDefaultEnumerationGuard);

// --- d-uniform set families ------------------------------------------------

// H_t: the subsets {s_1 < ... < s_t} of [n] for which t is the smallest
// index j with s_j < 2j. Forces s_t = 2t-1 and, for t > 1, s_{t-1} = 2t-2.
std::vector<std::vector<int>> hset_family(int t, int n);
bool is_hset(const std::vector<int>& h, int n);

// f_{H,d} = sum_{k=0}^{t} (-1)^{t-k} C(d-k, t-k) sigma_{H',k} with
// H' = H + {2t, ..., n}. Integer coefficients; degree t; leading monomial x_H.
Polynomial<Rational> f_polynomial(const std::vector<int>& h, int d, int n);

// D_d: squarefree monomials x_U with U = {u_1 < ... < u_{d+1}} and u_j >= 2j
// for j <= d.
std::vector<Monomial> dd_family(int d, int n);
bool is_dd_set(const std::vector<int>& u, int d);

// Characteristic vectors of all d-subsets of [n], as 0/1 points over K.
template <class K>
std::vector<std::vector<K>> characteristic_points(int n, int d, const K& witness) {
  const K zero = witness.zero_like(), one = witness.one_like();
  std::vector<std::vector<K>> pts;
  if (d < 0 || d > n) throw std::invalid_argument("subset size out of range");
  std::vector<int> pick(static_cast<std::size_t>(d));
  for (int k = 0; k < d; ++k) pick[static_cast<std::size_t>(k)] = k;
  while (true) {
    std::vector<K> pt(static_cast<std::size_t>(n), zero);
    for (int pos : pick) pt[static_cast<std::size_t>(pos)] = one;
    pts.push_back(std::move(pt));
    if (d == 0) break;
    int k = d - 1;
    while (k >= 0 && pick[static_cast<std::size_t>(k)] == n - d + k) --k;
    if (k < 0) break;
    ++pick[static_cast<std::size_t>(k)];
    for (int l = k + 1; l < d; ++l)
      pick[static_cast<std::size_t>(l)] = pick[static_cast<std::size_t>(l - 1)] + 1;
  }
  return pts;
}

// Closed-form reduced Groebner basis of I(V([n] choose d)) over any field:
//   {x_2^2 - x_2, ..., x_n^2 - x_n} + {x_U : U in D_d} + {f_{H,d} : H in H_t, 0 < t <= d}.
// The reduced flag reflects an actual reducedness check (true for d >= 1).
template <class K>
GroebnerBasis<K> basis_uniform(int n, int d, const K& witness, const TermOrder& order) {
  if (n < 1 || n > kMaxUniformVars) throw guard_error("uniform basis variable guard exceeded");
  if (d < 0 || 2 * d > n) throw std::invalid_argument("need 0 <= d <= n/2");
  if (order.nvars != n) throw std::invalid_argument("order dimension mismatch");
  const K one = witness.one_like();
  std::vector<Polynomial<K>> polys;
  for (int i = 2; i <= n; ++i) {
    Polynomial<K> f(n, witness);
    f.add_term(Monomial::variable(n, i, 2), one);
    f.add_term(Monomial::variable(n, i), -one);
    polys.push_back(std::move(f));
  }
  for (const auto& u : dd_family(d, n)) polys.push_back(Polynomial<K>::term(u, one));
  for (int t = 1; t <= d; ++t)
    for (const auto& h : hset_family(t, n)) {
      const Polynomial<Rational> f = f_polynomial(h, d, n);
      Polynomial<K> g(n, witness);
      for (const auto& [m, c] : f.terms()) {
        if (!c.is_integer()) throw std::logic_error("non-integer coefficient in f_{H,d}");
        g.add_term(m, make_from_integer(c.numerator(), witness));
      }
      polys.push_back(std::move(g));
    }
  sort_by_leading_monomial(polys, order);
  const bool reduced = is_reduced_basis(polys, order);
  return GroebnerBasis<K>{order, std::move(polys), reduced};
}

// The monomial that joins the staircase of I(V([n] choose d)) over F_p when
// the 0/1 point with support `c_mask` is added: leading monomial of the
// first basis member, in ascending leading-monomial order, that does not
// vanish there. Basis members are evaluated from closed forms without being
// materialized, so this scales to n = 4p, d = 2p.
Monomial uniform_new_standard_monomial_fp(int n, int d, long long p, std::uint64_t c_mask);

}  // namespace gbx

#endif
