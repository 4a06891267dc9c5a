#ifndef GBX_GROEBNER_HPP
#define GBX_GROEBNER_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "gbx/errors.hpp"
#include "gbx/polynomial.hpp"

namespace gbx {

// Groebner basis of an ideal: polynomials sorted by ascending leading
// monomial under `order`. When `reduced` is set the basis is the unique
// reduced one: monic, with no monomial of any member divisible by another
// member's leading monomial.
template <class K>
struct GroebnerBasis {
  TermOrder order;
  std::vector<Polynomial<K>> polys;
  bool reduced = false;
};

struct StandardMonomialSet {
  TermOrder order;
  std::vector<Monomial> monomials;  // ascending under `order`
};

inline constexpr std::size_t kDefaultStaircaseGuard = std::size_t{1} << 22;

template <class K>
void sort_by_leading_monomial(std::vector<Polynomial<K>>& polys, const TermOrder& order) {
  std::sort(polys.begin(), polys.end(), [&](const Polynomial<K>& a, const Polynomial<K>& b) {
    return order.less(a.leading_monomial(order), b.leading_monomial(order));
  });
}

// Buchberger criterion used as an oracle: every pairwise S-polynomial must
// reduce to zero modulo the candidate set.
template <class K>
bool is_groebner(const std::vector<Polynomial<K>>& polys, const TermOrder& order) {
  for (std::size_t i = 0; i < polys.size(); ++i)
    for (std::size_t j = i + 1; j < polys.size(); ++j)
      if (!reduce(s_polynomial(polys[i], polys[j], order), polys, order).is_zero())
        return false;
  return true;
}

template <class K>
bool is_reduced_basis(const std::vector<Polynomial<K>>& polys, const TermOrder& order) {
  for (std::size_t i = 0; i < polys.size(); ++i) {
    const auto [lmi, lci] = polys[i].leading_term(order);
    if (!lci.is_one()) return false;
    for (std::size_t j = 0; j < polys.size(); ++j) {
      if (i == j) continue;
      const Monomial lmj = polys[j].leading_monomial(order);
      for (const auto& [m, c] : polys[i].terms())
        if (lmj.divides(m)) return false;
    }
  }
  return true;
}

// Buchberger's algorithm with the normal pair-selection strategy: pairs are
// processed by ascending lcm of their leading monomials, and pairs with
// coprime leading monomials are skipped. The output is a (generally
// non-reduced) Groebner basis of the generated ideal.
template <class K>
GroebnerBasis<K> buchberger(const std::vector<Polynomial<K>>& generators, const TermOrder& order) {
  std::vector<Polynomial<K>> g;
  for (const auto& f : generators)
    if (!f.is_zero()) g.push_back(f);
  if (g.empty()) throw std::invalid_argument("no nonzero generators");

  struct Pair {
    Monomial l;
    std::size_t i, j;
  };
  auto pair_less = [&](const Pair& a, const Pair& b) {
    const int c = order.compare(a.l, b.l);
    if (c != 0) return c < 0;
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
  };
  std::vector<Pair> queue;
  auto push_pairs_for = [&](std::size_t j) {
    for (std::size_t i = 0; i < j; ++i)
      queue.push_back({lcm(g[i].leading_monomial(order), g[j].leading_monomial(order)), i, j});
  };
  for (std::size_t j = 1; j < g.size(); ++j) push_pairs_for(j);

  while (!queue.empty()) {
    auto it = std::min_element(queue.begin(), queue.end(), pair_less);
    const Pair pr = *it;
    queue.erase(it);
    if (coprime(g[pr.i].leading_monomial(order), g[pr.j].leading_monomial(order))) continue;
    const Polynomial<K> r = reduce(s_polynomial(g[pr.i], g[pr.j], order), g, order);
    if (!r.is_zero()) {
      g.push_back(r);
      push_pairs_for(g.size() - 1);
    }
  }
  sort_by_leading_monomial(g, order);
  return GroebnerBasis<K>{order, std::move(g), false};
}

enum class VerifyInput { yes, no };

// The unique reduced Groebner basis of the ideal spanned by `basis`.
// The input must already be a Groebner basis; with VerifyInput::yes this is
// checked via the Buchberger criterion.
template <class K>
GroebnerBasis<K> autoreduce(const GroebnerBasis<K>& basis, VerifyInput verify = VerifyInput::yes) {
  std::vector<Polynomial<K>> g;
  for (const auto& f : basis.polys)
    if (!f.is_zero()) g.push_back(f);
  if (g.empty()) throw std::invalid_argument("autoreduce of an empty basis");
  if (verify == VerifyInput::yes && !is_groebner(g, basis.order))
    throw std::invalid_argument("autoreduce input is not a Groebner basis");

  const TermOrder& order = basis.order;
  sort_by_leading_monomial(g, order);

  // Minimal basis: drop members whose leading monomial is divisible by the
  // leading monomial of an earlier kept member.
  std::vector<Polynomial<K>> minimal;
  for (auto& f : g) {
    const Monomial lm = f.leading_monomial(order);
    bool redundant = false;
    for (const auto& kept : minimal)
      if (kept.leading_monomial(order).divides(lm)) {
        redundant = true;
        break;
      }
    if (!redundant) minimal.push_back(f.monic(order));
  }

  // Tail reduction against the other members; leading monomials are already
  // mutually irreducible, so only tails change.
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Polynomial<K>> others;
    others.reserve(minimal.size() - 1);
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    if (!others.empty()) minimal[i] = reduce(minimal[i], others, order);
  }
  sort_by_leading_monomial(minimal, order);
  return GroebnerBasis<K>{order, std::move(minimal), true};
}

// The staircase: all monomials not divisible by any leading monomial of the
// basis. Finite exactly when some pure power of every variable appears among
// the leading monomials; otherwise throws.
template <class K>
StandardMonomialSet standard_monomials(const GroebnerBasis<K>& basis,
                                       std::size_t max_cells = kDefaultStaircaseGuard) {
  const TermOrder& order = basis.order;
  const int n = order.nvars;
  std::vector<Monomial> lms;
  lms.reserve(basis.polys.size());
  for (const auto& f : basis.polys) lms.push_back(f.leading_monomial(order));
  for (const auto& m : lms)
    if (m.is_one()) return StandardMonomialSet{order, {}};  // unit ideal

  std::vector<int> cap(static_cast<std::size_t>(n), -1);
  for (const auto& m : lms) {
    int support = -1;
    bool pure = true;
    for (int i = 0; i < n; ++i) {
      if (m[i] == 0) continue;
      if (support >= 0) {
        pure = false;
        break;
      }
      support = i;
    }
    if (pure && support >= 0) {
      auto& c = cap[static_cast<std::size_t>(support)];
      if (c < 0 || m[support] < c) c = m[support];
    }
  }
  std::size_t cells = 1;
  for (int i = 0; i < n; ++i) {
    if (cap[static_cast<std::size_t>(i)] < 0)
      throw std::invalid_argument("infinite staircase: no pure power of x" + std::to_string(i + 1) +
                                  " among the leading monomials");
    cells *= static_cast<std::size_t>(cap[static_cast<std::size_t>(i)]);
    if (cells > max_cells) throw guard_error("staircase enumeration guard exceeded");
  }

  std::vector<Monomial> sm;
  std::vector<int> e(static_cast<std::size_t>(n), 0);
  while (true) {
    Monomial m{e};
    bool standard = true;
    for (const auto& lm : lms)
      if (lm.divides(m)) {
        standard = false;
        break;
      }
    if (standard) sm.push_back(std::move(m));
    int i = n - 1;
    while (i >= 0 && e[static_cast<std::size_t>(i)] == cap[static_cast<std::size_t>(i)] - 1) {
      e[static_cast<std::size_t>(i)] = 0;
      --i;
    }
    if (i < 0) break;
    ++e[static_cast<std::size_t>(i)];
  }
  std::sort(sm.begin(), sm.end(),
            [&](const Monomial& a, const Monomial& b) { return order.less(a, b); });
  return StandardMonomialSet{order, std::move(sm)};
}

inline bool is_downward_closed(const StandardMonomialSet& sm) {
  const auto in_set = [&](const Monomial& m) {
    for (const auto& x : sm.monomials)
      if (x == m) return true;
    return false;
  };
  for (const auto& m : sm.monomials)
    for (int i = 0; i < m.nvars(); ++i) {
      if (m[i] == 0) continue;
      std::vector<int> e = m.exponents();
      --e[static_cast<std::size_t>(i)];
      if (!in_set(Monomial(std::move(e)))) return false;
    }
  return true;
}

}  // namespace gbx

#endif
