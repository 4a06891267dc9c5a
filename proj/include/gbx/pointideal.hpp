#ifndef GBX_POINTIDEAL_HPP
#define GBX_POINTIDEAL_HPP

#include <vector>

#include "gbx/groebner.hpp"

namespace gbx {

// Finite set of distinct points of K^n.
template <class K>
struct PointSet {
  int nvars;
  std::vector<std::vector<K>> points;

  PointSet(int n, std::vector<std::vector<K>> pts) : nvars(n), points(std::move(pts)) {
    for (const auto& p : points)
      if (static_cast<int>(p.size()) != nvars)
        throw std::invalid_argument("point dimension mismatch");
    for (std::size_t i = 0; i < points.size(); ++i)
      for (std::size_t j = i + 1; j < points.size(); ++j) {
        bool equal = true;
        for (int k = 0; k < nvars && equal; ++k)
          equal = points[i][static_cast<std::size_t>(k)] == points[j][static_cast<std::size_t>(k)];
        if (equal) throw std::invalid_argument("duplicate point in point set");
      }
  }
};

// Reduced basis {x_1 - a_1, ..., x_n - a_n} of the single point (a_1..a_n).
template <class K>
GroebnerBasis<K> single_point_basis(const std::vector<K>& point, const TermOrder& order) {
  const int n = order.nvars;
  if (static_cast<int>(point.size()) != n)
    throw std::invalid_argument("point dimension mismatch");
  std::vector<Polynomial<K>> polys;
  polys.reserve(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) {
    const K& a = point[static_cast<std::size_t>(i - 1)];
    Polynomial<K> f(n, a);
    f.add_term(Monomial::variable(n, i), a.one_like());
    f.add_term(Monomial::one(n), -a);
    polys.push_back(std::move(f));
  }
  sort_by_leading_monomial(polys, order);
  return GroebnerBasis<K>{order, std::move(polys), true};
}

// Index of the basis member with smallest leading monomial that does not
// vanish at h; such a member exists exactly when h lies outside the common
// zero set. The basis must be reduced (so members are sorted ascending).
template <class K>
std::size_t pivot_index(const GroebnerBasis<K>& basis, const std::vector<K>& h) {
  if (!basis.reduced) throw std::invalid_argument("reduced basis required");
  for (std::size_t i = 0; i < basis.polys.size(); ++i)
    if (!basis.polys[i].evaluate(h).is_zero()) return i;
  throw std::invalid_argument("point lies in the zero set of the basis");
}

template <class K>
struct AddPointResult {
  GroebnerBasis<K> basis;        // Groebner basis of I(F + {h}); not reduced
  Monomial new_standard_monomial;  // the one monomial joining the staircase
};

// One incremental step: from the reduced basis of I(F) and a point h outside
// F, a Groebner basis of I(F + {h}). With g_i the pivot member,
//   g_j - (g_j(h)/g_i(h)) g_i   for j != i,  and  (x_k - h_k) g_i  for all k,
// and lm(g_i) is the monomial that joins the staircase.
template <class K>
AddPointResult<K> add_point(const GroebnerBasis<K>& basis, const std::vector<K>& h) {
  const TermOrder& order = basis.order;
  const int n = order.nvars;
  if (static_cast<int>(h.size()) != n) throw std::invalid_argument("point dimension mismatch");
  const std::size_t piv = pivot_index(basis, h);
  const Polynomial<K>& gi = basis.polys[piv];
  const K gi_h = gi.evaluate(h);

  std::vector<Polynomial<K>> out;
  out.reserve(basis.polys.size() - 1 + static_cast<std::size_t>(n));
  for (std::size_t j = 0; j < basis.polys.size(); ++j) {
    if (j == piv) continue;
    const K ratio = basis.polys[j].evaluate(h) * gi_h.inverse();
    out.push_back(basis.polys[j] - gi.scaled(ratio));
  }
  for (int k = 1; k <= n; ++k) {
    Polynomial<K> factor(n, gi_h);
    factor.add_term(Monomial::variable(n, k), gi_h.one_like());
    factor.add_term(Monomial::one(n), -h[static_cast<std::size_t>(k - 1)]);
    out.push_back(factor * gi);
  }
  sort_by_leading_monomial(out, order);
  return AddPointResult<K>{GroebnerBasis<K>{order, std::move(out), false},
                           gi.leading_monomial(order)};
}

// Reduced Groebner basis of the vanishing ideal of a finite point set,
// built one point at a time.
template <class K>
GroebnerBasis<K> vanishing_basis(const PointSet<K>& points, const TermOrder& order) {
  if (points.points.empty()) throw std::invalid_argument("empty point set");
  if (points.nvars != order.nvars) throw std::invalid_argument("order dimension mismatch");
  GroebnerBasis<K> basis = single_point_basis(points.points.front(), order);
  for (std::size_t i = 1; i < points.points.size(); ++i) {
    auto step = add_point(basis, points.points[i]);
    basis = autoreduce(step.basis, VerifyInput::no);
  }
  return basis;
}

// g_i / g_i(h): the polynomial that is 1 at h and 0 on the common zero set
// of the basis, supported on the staircase of the extended ideal.
template <class K>
Polynomial<K> characteristic_function(const GroebnerBasis<K>& basis, const std::vector<K>& h) {
  const std::size_t piv = pivot_index(basis, h);
  const Polynomial<K>& gi = basis.polys[piv];
  return gi.scaled(gi.evaluate(h).inverse());
}

}  // namespace gbx

#endif
