#ifndef GBX_FP_HPP
#define GBX_FP_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace gbx {

// Element of the prime field F_p. Each element carries its modulus;
// arithmetic between different moduli throws.
class Fp {
 public:
  static constexpr long long max_modulus = 1LL << 20;

  Fp(long long value, long long p) : p_(p) {
    if (!is_prime(p)) throw std::invalid_argument("modulus " + std::to_string(p) + " is not prime");
    v_ = value % p_;
    if (v_ < 0) v_ += p_;
  }

  long long value() const { return v_; }
  long long modulus() const { return p_; }

  bool is_zero() const { return v_ == 0; }
  bool is_one() const { return v_ == 1 % p_; }
  Fp zero_like() const { return Fp(0, p_); }
  Fp one_like() const { return Fp(1, p_); }

  Fp inverse() const {
    if (v_ == 0) throw std::domain_error("inverse of zero in F_" + std::to_string(p_));
    // extended Euclid
    long long a = v_ % p_, b = p_, x0 = 1, x1 = 0;
    while (b != 0) {
      const long long q = a / b;
      a -= q * b; std::swap(a, b);
      x0 -= q * x1; std::swap(x0, x1);
    }
    return Fp(x0, p_);
  }

  Fp pow(long long e) const {
    if (e < 0) return inverse().pow(-e);
    Fp r = one_like(), base = *this;
    while (e > 0) {
      if (e & 1) r *= base;
      base *= base;
      e >>= 1;
    }
    return r;
  }

  Fp& operator+=(const Fp& o) { check_same(o); v_ = (v_ + o.v_) % p_; return *this; }
  Fp& operator-=(const Fp& o) { check_same(o); v_ = (v_ - o.v_ + p_) % p_; return *this; }
  Fp& operator*=(const Fp& o) { check_same(o); v_ = (v_ * o.v_) % p_; return *this; }
  friend Fp operator+(Fp a, const Fp& b) { return a += b; }
  friend Fp operator-(Fp a, const Fp& b) { return a -= b; }
  friend Fp operator*(Fp a, const Fp& b) { return a *= b; }
  Fp operator-() const { return Fp(-v_, p_); }
  friend bool operator==(const Fp& a, const Fp& b) {
    a.check_same(b);
    return a.v_ == b.v_;
  }
  friend bool operator!=(const Fp& a, const Fp& b) { return !(a == b); }

  std::string str() const { return std::to_string(v_); }

  static bool is_prime(long long p) {
    if (p < 2 || p > max_modulus) return false;
    for (long long d = 2; d * d <= p; ++d)
      if (p % d == 0) return false;
    return true;
  }

 private:
  void check_same(const Fp& o) const {
    if (p_ != o.p_)
      throw std::invalid_argument("mixed moduli " + std::to_string(p_) + " and " + std::to_string(o.p_));
  }

  long long p_;
  long long v_;  // in [0, p)
};

}  // namespace gbx

#endif
