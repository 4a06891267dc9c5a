#include "gbx/closedform.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <stdexcept>

namespace gbx {

namespace {

void require_prime(long long p) {
  if (!Fp::is_prime(p))
    throw std::invalid_argument(std::to_string(p) + " is not prime");
}

// p^n with an overflow/enumeration guard.
std::size_t checked_power(long long p, int n, std::size_t guard) {
  std::size_t total = 1;
  for (int i = 0; i < n; ++i) {
    total *= static_cast<std::size_t>(p);
    if (total > guard) throw guard_error("enumeration guard exceeded: p^n too large");
  }
  return total;
}

std::vector<std::vector<int>> all_exponent_vectors(int n, long long p, std::size_t guard) {
  checked_power(p, n, guard);
  std::vector<std::vector<int>> out;
  std::vector<int> e(static_cast<std::size_t>(n), 0);
  while (true) {
    out.push_back(e);
    int i = n - 1;
    while (i >= 0 && e[static_cast<std::size_t>(i)] == p - 1) {
      e[static_cast<std::size_t>(i)] = 0;
      --i;
    }
    if (i < 0) break;
    ++e[static_cast<std::size_t>(i)];
  }
  return out;
}

std::vector<int> shifted(const std::vector<int>& u, long long k, long long p) {
  std::vector<int> v(u);
  for (auto& x : v) x = static_cast<int>((x + k) % p);
  return v;
}

}  // namespace

ExponentClass equiv_class(const Monomial& u, long long p) {
  require_prime(p);
  for (int i = 0; i < u.nvars(); ++i)
    if (u[i] >= p) throw std::invalid_argument("exponent out of range [0, p)");
  std::vector<std::vector<int>> reps;
  for (long long k = 0; k < p; ++k) reps.push_back(shifted(u.exponents(), k, p));
  std::sort(reps.begin(), reps.end());
  std::vector<Monomial> mono;
  mono.reserve(reps.size());
  for (auto& r : reps) mono.emplace_back(std::move(r));
  return ExponentClass{p, u.nvars(), std::move(mono)};
}

StandardMonomialSet min_set(int n, long long p, const TermOrder& order, std::size_t guard) {
  require_prime(p);
  if (order.nvars != n) throw std::invalid_argument("order dimension mismatch");
  std::vector<Monomial> minima;
  std::map<std::vector<int>, bool> seen;
  for (const auto& u : all_exponent_vectors(n, p, guard)) {
    // canonical class key: lexicographically smallest shift
    std::vector<int> key = u;
    for (long long k = 1; k < p; ++k) key = std::min(key, shifted(u, k, p));
    if (seen.emplace(key, true).second == false) continue;
    Monomial best{shifted(key, 0, p)};
    for (long long k = 1; k < p; ++k) {
      Monomial cand{shifted(key, k, p)};
      if (order.less(cand, best)) best = cand;
    }
    minima.push_back(std::move(best));
  }
  std::sort(minima.begin(), minima.end(),
            [&](const Monomial& a, const Monomial& b) { return order.less(a, b); });
  return StandardMonomialSet{order, std::move(minima)};
}

std::vector<std::vector<Cyclotomic>> enumerate_B(int n, long long p, long long j,
                                                 std::size_t guard) {
  require_prime(p);
  if (j < 0 || j >= p) throw std::invalid_argument("class index out of range");
  std::vector<Cyclotomic> roots;
  for (long long e = 0; e < p; ++e) roots.push_back(Cyclotomic::omega(p, e));
  std::vector<std::vector<Cyclotomic>> pts;
  for (const auto& e : all_exponent_vectors(n, p, guard)) {
    long long sum = 0;
    for (int x : e) sum += x;
    if (sum % p != j) continue;
    std::vector<Cyclotomic> pt;
    pt.reserve(e.size());
    for (int x : e) pt.push_back(roots[static_cast<std::size_t>(x)]);
    pts.push_back(std::move(pt));
  }
  return pts;
}

GroebnerBasis<Cyclotomic> basis_root_of_unity(int n, long long p, long long j,
                                              const TermOrder& order, std::size_t guard) {
  require_prime(p);
  if (j < 0 || j >= p) throw std::invalid_argument("class index out of range");
  if (order.nvars != n) throw std::invalid_argument("order dimension mismatch");

  const Cyclotomic zero(p);
  const Cyclotomic one = zero.one_like();
  std::vector<Polynomial<Cyclotomic>> polys;

  std::map<std::vector<int>, bool> seen;
  for (const auto& u : all_exponent_vectors(n, p, guard)) {
    std::vector<int> key = u;
    for (long long k = 1; k < p; ++k) key = std::min(key, shifted(u, k, p));
    if (!seen.emplace(key, true).second) continue;
    std::vector<Monomial> members;
    for (long long k = 0; k < p; ++k) members.emplace_back(shifted(key, k, p));
    std::size_t min_at = 0;
    for (std::size_t m = 1; m < members.size(); ++m)
      if (order.less(members[m], members[min_at])) min_at = m;
    const Monomial& a = members[min_at];
    for (std::size_t m = 0; m < members.size(); ++m) {
      if (m == min_at) continue;
      const Monomial& b = members[m];
      // k with a + k(1,..,1) = b mod p, so that b(t) = w^{k j} a(t) on B_j
      const long long k = ((b[0] - a[0]) % p + p) % p;
      Polynomial<Cyclotomic> g(n, zero);
      g.add_term(b, one);
      g.add_term(a, -Cyclotomic::omega(p, k * j));
      polys.push_back(std::move(g));
    }
  }
  for (int i = 1; i <= n; ++i) {
    Polynomial<Cyclotomic> g(n, zero);
    g.add_term(Monomial::variable(n, i, static_cast<int>(p)), one);
    g.add_term(Monomial::one(n), -one);
    polys.push_back(std::move(g));
  }
  sort_by_leading_monomial(polys, order);
  return GroebnerBasis<Cyclotomic>{order, std::move(polys), false};
}

bool is_hset(const std::vector<int>& h, int n) {
  const int t = static_cast<int>(h.size());
  if (t < 1 || 2 * t > n) return false;
  for (int j = 0; j < t; ++j) {
    if (h[static_cast<std::size_t>(j)] < 1 || h[static_cast<std::size_t>(j)] > n) return false;
    if (j > 0 && h[static_cast<std::size_t>(j)] <= h[static_cast<std::size_t>(j - 1)]) return false;
  }
  for (int j = 1; j < t; ++j)
    if (h[static_cast<std::size_t>(j - 1)] < 2 * j) return false;  // s_j >= 2j for j < t
  return h[static_cast<std::size_t>(t - 1)] < 2 * t;               // s_t < 2t
}

std::vector<std::vector<int>> hset_family(int t, int n) {
  if (t < 1 || 2 * t > n) throw std::invalid_argument("need 0 < t <= n/2");
  std::vector<std::vector<int>> out;
  std::vector<int> h(static_cast<std::size_t>(t));
  h[static_cast<std::size_t>(t - 1)] = 2 * t - 1;  // forced
  // choose s_1 < ... < s_{t-1} with s_j >= 2j and s_{t-1} <= 2t-2
  auto rec = [&](auto&& self, int j) -> void {
    if (j == t - 1) {
      out.push_back(h);
      return;
    }
    const int lo = std::max(2 * (j + 1), j == 0 ? 1 : h[static_cast<std::size_t>(j - 1)] + 1);
    const int hi = 2 * t - 2 - (t - 2 - j);  // leave room for the later entries
    for (int s = lo; s <= hi; ++s) {
      h[static_cast<std::size_t>(j)] = s;
      self(self, j + 1);
    }
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end());
  return out;
}

Polynomial<Rational> f_polynomial(const std::vector<int>& h, int d, int n) {
  if (!is_hset(h, n)) throw std::invalid_argument("H is not a member of any H_t");
  if (d < 0 || d > n) throw std::invalid_argument("need 0 <= d <= n");
  const int t = static_cast<int>(h.size());
  std::vector<int> hprime = h;
  for (int i = 2 * t; i <= n; ++i) hprime.push_back(i);
  std::sort(hprime.begin(), hprime.end());

  const Rational witness;
  Polynomial<Rational> f(n, witness);
  for (int k = 0; k <= t; ++k) {
    mpz_class c = binomial(mpz_class(d - k), t - k);
    if ((t - k) % 2 == 1) c = -c;
    if (c == 0) continue;
    Polynomial<Rational> sigma = elementary_symmetric(hprime, k, n, witness);
    f += sigma.scaled(Rational(c));
  }
  return f;
}

bool is_dd_set(const std::vector<int>& u, int d) {
  if (static_cast<int>(u.size()) != d + 1) return false;
  for (std::size_t j = 1; j < u.size(); ++j)
    if (u[j] <= u[j - 1]) return false;
  for (int j = 1; j <= d; ++j)
    if (u[static_cast<std::size_t>(j - 1)] < 2 * j) return false;
  return true;
}

std::vector<Monomial> dd_family(int d, int n) {
  if (d < 0 || d + 1 > n) throw std::invalid_argument("need d + 1 <= n");
  std::vector<Monomial> out;
  std::vector<int> u(static_cast<std::size_t>(d + 1));
  auto rec = [&](auto&& self, int j) -> void {
    if (j == d + 1) {
      out.push_back(Monomial::squarefree(n, u));
      return;
    }
    int lo = j == 0 ? 1 : u[static_cast<std::size_t>(j - 1)] + 1;
    if (j < d) lo = std::max(lo, 2 * (j + 1));  // u_{j+1} >= 2(j+1), constraint only for j <= d
    for (int s = lo; s <= n; ++s) {
      u[static_cast<std::size_t>(j)] = s;
      self(self, j + 1);
    }
  };
  rec(rec, 0);
  return out;
}

Monomial uniform_new_standard_monomial_fp(int n, int d, long long p, std::uint64_t c_mask) {
  require_prime(p);
  if (d < 0 || 2 * d > n) throw std::invalid_argument("need 0 <= d <= n/2");
  if (n > 63) throw guard_error("support mask limited to 63 ground elements");

  struct Candidate {
    Monomial lm;
    int kind;  // 0: x_i^2 - x_i, 1: f_{H,d}
    int var;
    std::vector<int> h;
  };
  std::vector<Candidate> cands;
  for (int i = 2; i <= n; ++i)
    cands.push_back({Monomial::variable(n, i, 2), 0, i, {}});
  for (int t = 1; t <= d; ++t)
    for (auto& h : hset_family(t, n))
      cands.push_back({Monomial::squarefree(n, h), 1, 0, h});
  for (const auto& u : dd_family(d, n)) cands.push_back({u, 2, 0, {}});

  const TermOrder order{OrderKind::deglex, n};
  std::sort(cands.begin(), cands.end(),
            [&](const Candidate& a, const Candidate& b) { return order.less(a.lm, b.lm); });

  const auto bit = [&](int i) { return (c_mask >> (i - 1)) & 1; };  // 1-based ground element
  for (const auto& cand : cands) {
    if (cand.kind == 0) continue;  // x_i^2 - x_i vanishes on every 0/1 point
    if (cand.kind == 2) {
      bool contained = true;
      for (int i = 0; i < n && contained; ++i)
        if (cand.lm[i] == 1 && !bit(i + 1)) contained = false;
      if (contained) return cand.lm;
      continue;
    }
    // f_{H,d}(v_C) = sum_k (-1)^{t-k} C(d-k, t-k) C(|H' n C|, k)
    const int t = static_cast<int>(cand.h.size());
    long long overlap = 0;
    for (int s : cand.h) overlap += bit(s);
    for (int i = 2 * t; i <= n; ++i) overlap += bit(i);
    mpz_class value = 0;
    for (int k = 0; k <= t; ++k) {
      mpz_class term =
          binomial(mpz_class(d - k), t - k) * binomial(mpz_class(static_cast<long>(overlap)), k);
      if ((t - k) % 2 == 1) term = -term;
      value += term;
    }
    if (value % static_cast<long>(p) != 0) return cand.lm;
  }
  throw std::invalid_argument("point lies in the variety of the uniform ideal");
}

}  // namespace gbx
