#include "gbx/cyclotomic.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

#include "gbx/errors.hpp"
#include "gbx/fp.hpp"

namespace gbx {

namespace {

void require_prime(long long p) {
  if (!Fp::is_prime(p))
    throw std::invalid_argument("cyclotomic order " + std::to_string(p) + " is not prime");
}

// Dense univariate polynomials over Q, coefficients low to high. Used only
// for the extended Euclid behind Cyclotomic::inverse.
using QPoly = std::vector<Rational>;

int qp_deg(const QPoly& f) {
  for (int i = static_cast<int>(f.size()) - 1; i >= 0; --i)
    if (!f[i].is_zero()) return i;
  return -1;
}

QPoly qp_sub_scaled(const QPoly& a, const QPoly& b, const Rational& c, int shift) {
  QPoly r = a;
  if (r.size() < b.size() + shift) r.resize(b.size() + shift, Rational());
  for (std::size_t i = 0; i < b.size(); ++i) r[i + shift] -= c * b[i];
  return r;
}

// a = q*b + r with deg r < deg b.
std::pair<QPoly, QPoly> qp_divmod(QPoly a, const QPoly& b) {
  const int db = qp_deg(b);
  if (db < 0) throw std::domain_error("division by zero polynomial");
  QPoly q(a.size(), Rational());
  const Rational lead_inv = b[db].inverse();
  for (int da = qp_deg(a); da >= db; da = qp_deg(a)) {
    const Rational c = a[da] * lead_inv;
    q[da - db] = c;
    a = qp_sub_scaled(a, b, c, da - db);
  }
  return {q, a};
}

QPoly qp_mul(const QPoly& a, const QPoly& b) {
  QPoly r(a.size() + b.size(), Rational());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  return r;
}

QPoly qp_sub(QPoly a, const QPoly& b) {
  if (a.size() < b.size()) a.resize(b.size(), Rational());
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  return a;
}

}  // namespace

Cyclotomic::Cyclotomic(long long p) : p_(p) {
  require_prime(p);
  c_.assign(static_cast<std::size_t>(p - 1), Rational());
}

Cyclotomic::Cyclotomic(long long p, const Rational& scalar) : Cyclotomic(p) {
  c_[0] = scalar;
}

Cyclotomic::Cyclotomic(long long p, std::vector<Rational> coeffs) : p_(p), c_(std::move(coeffs)) {
  require_prime(p);
  if (c_.size() != static_cast<std::size_t>(p - 1))
    throw std::invalid_argument("canonical coefficient vector must have length p-1");
}

Cyclotomic Cyclotomic::from_powers(long long p, const std::vector<Rational>& powers) {
  Cyclotomic r(p);
  for (std::size_t k = 0; k < powers.size(); ++k) {
    if (powers[k].is_zero()) continue;
    const long long e = static_cast<long long>(k) % p;
    if (e < p - 1) {
      r.c_[static_cast<std::size_t>(e)] += powers[k];
    } else {
      // w^{p-1} = -(1 + w + ... + w^{p-2})
      for (auto& c : r.c_) c -= powers[k];
    }
  }
  return r;
}

Cyclotomic Cyclotomic::omega(long long p, long long i) {
  require_prime(p);
  long long e = i % p;
  if (e < 0) e += p;
  std::vector<Rational> powers(static_cast<std::size_t>(e) + 1, Rational());
  powers[static_cast<std::size_t>(e)] = Rational(1);
  return from_powers(p, powers);
}

bool Cyclotomic::is_zero() const {
  for (const auto& c : c_)
    if (!c.is_zero()) return false;
  return true;
}

bool Cyclotomic::is_one() const {
  if (!c_[0].is_one()) return false;
  for (std::size_t i = 1; i < c_.size(); ++i)
    if (!c_[i].is_zero()) return false;
  return true;
}

bool Cyclotomic::is_rational() const {
  for (std::size_t i = 1; i < c_.size(); ++i)
    if (!c_[i].is_zero()) return false;
  return true;
}

Rational Cyclotomic::rational_part() const { return c_[0]; }

void Cyclotomic::check_same(const Cyclotomic& o) const {
  if (p_ != o.p_)
    throw std::invalid_argument("mixed cyclotomic orders " + std::to_string(p_) + " and " +
                                std::to_string(o.p_));
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
  check_same(o);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) {
  check_same(o);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& o) {
  check_same(o);
  std::vector<Rational> conv(2 * c_.size(), Rational());
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) conv[i + j] += c_[i] * o.c_[j];
  }
  *this = from_powers(p_, conv);
  return *this;
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic r(*this);
  for (auto& c : r.c_) c = -c;
  return r;
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
  a.check_same(b);
  return a.c_ == b.c_;
}

Cyclotomic Cyclotomic::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero cyclotomic number");
  // Extended Euclid against Phi_p = 1 + y + ... + y^{p-1}, which is
  // irreducible over Q, so the gcd is a nonzero constant.
  QPoly phi(static_cast<std::size_t>(p_), Rational(1));
  QPoly r0 = phi, r1(c_.begin(), c_.end());
  QPoly t0{Rational()}, t1{Rational(1)};
  while (qp_deg(r1) >= 0) {
    auto [q, rem] = qp_divmod(r0, r1);
    r0 = r1;
    r1 = rem;
    QPoly t2 = qp_sub(t0, qp_mul(q, t1));
    t0 = t1;
    t1 = t2;
  }
  const int d = qp_deg(r0);
  if (d != 0) throw std::logic_error("cyclotomic gcd is not constant");
  const Rational scale = r0[0].inverse();
  for (auto& c : t0) c *= scale;
  return from_powers(p_, t0);
}

Cyclotomic Cyclotomic::pow(long long e) const {
  if (e < 0) return inverse().pow(-e);
  Cyclotomic r = one_like(), base = *this;
  while (e > 0) {
    if (e & 1) r *= base;
    base *= base;
    e >>= 1;
  }
  return r;
}

std::string Cyclotomic::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < c_.size(); ++k) {
    if (c_[k].is_zero()) continue;
    Rational c = c_[k];
    if (first) {
      if (sgn(c.value()) < 0) {
        os << "-";
        c = -c;
      }
      first = false;
    } else if (sgn(c.value()) < 0) {
      os << " - ";
      c = -c;
    } else {
      os << " + ";
    }
    if (k == 0) {
      os << c.str();
    } else {
      if (!c.is_one()) os << c.str() << "*";
      os << "w";
      if (k > 1) os << "^" << k;
    }
  }
  return os.str();
}

Cyclotomic Cyclotomic::parse(long long p, const std::string& text) {
  require_prime(p);
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  if (s.empty()) throw parse_error("empty cyclotomic literal");

  std::vector<Rational> powers;
  auto add_power = [&](std::size_t e, const Rational& c) {
    if (powers.size() <= e) powers.resize(e + 1, Rational());
    powers[e] += c;
  };

  std::size_t i = 0;
  while (i < s.size()) {
    int sign = 1;
    while (i < s.size() && (s[i] == '+' || s[i] == '-')) {
      if (s[i] == '-') sign = -sign;
      ++i;
    }
    if (i >= s.size()) throw parse_error("dangling sign in '" + text + "'");
    // optional rational coefficient
    std::size_t j = i;
    while (j < s.size() && (std::isdigit(static_cast<unsigned char>(s[j])) || s[j] == '/')) ++j;
    Rational coef(1);
    bool have_coef = j > i;
    if (have_coef) {
      coef = Rational::parse(s.substr(i, j - i));
      i = j;
      if (i < s.size() && s[i] == '*') ++i;
    }
    long long e = 0;
    if (i < s.size() && s[i] == 'w') {
      ++i;
      e = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        std::size_t k = i;
        while (k < s.size() && std::isdigit(static_cast<unsigned char>(s[k]))) ++k;
        if (k == i) throw parse_error("missing exponent in '" + text + "'");
        e = std::stoll(s.substr(i, k - i));
        i = k;
      }
    } else if (!have_coef) {
      throw parse_error("expected coefficient or 'w' in '" + text + "'");
    }
    if (sign < 0) coef = -coef;
    add_power(static_cast<std::size_t>(e % p), coef);
  }
  return from_powers(p, powers);
}

}  // namespace gbx
