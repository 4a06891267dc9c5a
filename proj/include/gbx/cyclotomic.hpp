#ifndef GBX_CYCLOTOMIC_HPP
#define GBX_CYCLOTOMIC_HPP

#include <string>
#include <vector>

#include "gbx/rational.hpp"

namespace gbx {

// Element of the cyclotomic field Q(w), where w is a primitive p-th root of
// unity and p is prime. Canonical form: a rational vector over the power
// basis {1, w, ..., w^{p-2}}; reduction uses w^p = 1 followed by
// w^{p-1} = -(1 + w + ... + w^{p-2}). Equality is coefficient-wise.
class Cyclotomic {
 public:
  explicit Cyclotomic(long long p);                       // zero of Q(w_p)
  Cyclotomic(long long p, const Rational& scalar);
  Cyclotomic(long long p, std::vector<Rational> coeffs);  // size p-1, already canonical

  // w^i, with i taken mod p.
  static Cyclotomic omega(long long p, long long i);

  // Reduces an arbitrary list of power coefficients (c[k] is the coefficient
  // of w^k) to canonical form.
  static Cyclotomic from_powers(long long p, const std::vector<Rational>& powers);

  // Accepts a polynomial in `w`, e.g. "1/2 + 3*w - w^3".
  static Cyclotomic parse(long long p, const std::string& text);

  long long p() const { return p_; }
  const std::vector<Rational>& coeffs() const { return c_; }

  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const;          // all coefficients of w, w^2, ... vanish
  Rational rational_part() const;    // coefficient of 1

  Cyclotomic zero_like() const { return Cyclotomic(p_); }
  Cyclotomic one_like() const { return Cyclotomic(p_, Rational(1)); }
  Cyclotomic inverse() const;        // throws std::domain_error on zero
  Cyclotomic pow(long long e) const;

  Cyclotomic& operator+=(const Cyclotomic& o);
  Cyclotomic& operator-=(const Cyclotomic& o);
  Cyclotomic& operator*=(const Cyclotomic& o);
  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
  Cyclotomic operator-() const;
  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);
  friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }

  std::string str() const;

 private:
  void check_same(const Cyclotomic& o) const;

  long long p_;
  std::vector<Rational> c_;  // size p-1
};

}  // namespace gbx

#endif
