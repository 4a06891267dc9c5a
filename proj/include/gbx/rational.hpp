#ifndef GBX_RATIONAL_HPP
#define GBX_RATIONAL_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>

#include "gbx/errors.hpp"

namespace gbx {

// Exact rational number. Always kept in lowest terms with positive
// denominator, so equality is structural.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}  // NOLINT: implicit from integers is intended
  Rational(int n) : v_(n) {}   // NOLINT
  Rational(long num, long den) : v_(num, den) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    v_.canonicalize();
  }
  explicit Rational(mpz_class n) : v_(std::move(n)) {}
  explicit Rational(mpq_class v) : v_(std::move(v)) {
    if (v_.get_den() == 0) throw std::invalid_argument("rational with zero denominator");
    v_.canonicalize();
  }

  // Accepts "a" or "a/b" with optional sign.
  static Rational parse(const std::string& text) {
    const auto slash = text.find('/');
    try {
      if (slash == std::string::npos) return Rational(mpz_class(text));
      mpz_class num(text.substr(0, slash));
      mpz_class den(text.substr(slash + 1));
      if (den == 0) throw parse_error("zero denominator in '" + text + "'");
      mpq_class q(num);
      q /= mpq_class(den);
      return Rational(q);
    } catch (const std::invalid_argument&) {
      throw parse_error("bad rational '" + text + "'");
    }
  }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }
  bool is_integer() const { return v_.get_den() == 1; }
  mpz_class numerator() const { return v_.get_num(); }
  mpz_class denominator() const { return v_.get_den(); }
  const mpq_class& value() const { return v_; }

  Rational zero_like() const { return Rational(); }
  Rational one_like() const { return Rational(1); }

  Rational inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero");
    return Rational(mpq_class(1) / v_);
  }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  Rational operator-() const { return Rational(mpq_class(-v_)); }
  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }

  std::string str() const { return v_.get_str(); }

 private:
  mpq_class v_;
};

}  // namespace gbx

#endif
