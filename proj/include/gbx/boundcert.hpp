#ifndef GBX_BOUNDCERT_HPP
#define GBX_BOUNDCERT_HPP

#include <optional>
#include <vector>

#include "gbx/errors.hpp"
#include "gbx/pointideal.hpp"
#include "gbx/rational.hpp"

namespace gbx {

// The single monomial that joins the staircase when h is added to the point
// set behind `basis`: leading monomial of the basis member with smallest
// leading monomial that does not vanish at h.
template <class K>
Monomial new_standard_monomial(const GroebnerBasis<K>& basis, const std::vector<K>& h) {
  return basis.polys[pivot_index(basis, h)].leading_monomial(basis.order);
}

// Degree lower bound with its audit trail: any polynomial vanishing on F but
// not at h has degree at least deg(y), where y is the new standard monomial.
// The bound is trustworthy only when alpha_y (the coefficient of y in the
// reduced form of P) is nonzero.
template <class K>
struct DegreeCertificate {
  Monomial y;
  long long bound;  // = deg(y)
  std::vector<K> witness_h;
  K alpha_y;
  bool alpha_y_nonzero;
  long long reduced_p_degree;
  long long p_degree;
};

// Certifies deg(P) >= deg(y) for a polynomial P with P(h) != 0 that vanishes
// on the point set F behind basis_F. The vanishing hypothesis is checked by
// evaluation when the points are supplied, otherwise by reducing P to zero
// modulo basis_F. Refusals throw certify_error with the failing stage.
template <class K>
DegreeCertificate<K> certify_degree(const Polynomial<K>& P, const GroebnerBasis<K>& basis_F,
                                    const std::vector<K>& h,
                                    const std::vector<std::vector<K>>* points_F = nullptr) {
  if (P.is_zero() || P.evaluate(h).is_zero())
    throw certify_error("nonvanishing-at-h", "P vanishes at the witness point");
  if (points_F != nullptr) {
    for (const auto& f : *points_F)
      if (!P.evaluate(f).is_zero())
        throw certify_error("vanishing-on-F", "P does not vanish on the point set");
  } else if (!reduce(P, basis_F.polys, basis_F.order).is_zero()) {
    throw certify_error("vanishing-on-F", "P is not in the vanishing ideal");
  }

  const Monomial y = new_standard_monomial(basis_F, h);
  auto extended = autoreduce(add_point(basis_F, h).basis, VerifyInput::no);
  const Polynomial<K> pbar = reduce(P, extended.polys, extended.order);
  const K alpha = pbar.coefficient(y);
  return DegreeCertificate<K>{y,      y.degree(),    h, alpha, !alpha.is_zero(),
                              pbar.degree(), P.degree()};
}

// Guaranteed lower bound n(p-1)/p on the degree of any new standard monomial
// over a root-of-unity class B_t, together with its integer ceiling.
struct BecsBound {
  long long n, p;
  Rational exact;      // n(p-1)/p
  long long ceiling;
};

inline BecsBound becs_bound(long long n, long long p) {
  if (p < 2 || n < 1 || n % p != 0)
    throw std::invalid_argument("bound requires p | n");
  const long long exact_int = (n / p) * (p - 1);
  return BecsBound{n, p, Rational(static_cast<long>(n * (p - 1)), static_cast<long>(p)), exact_int};
}

}  // namespace gbx

#endif
