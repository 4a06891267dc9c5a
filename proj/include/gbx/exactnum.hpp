#ifndef GBX_EXACTNUM_HPP
#define GBX_EXACTNUM_HPP

#include <gmpxx.h>

#include <stdexcept>

#include "gbx/cyclotomic.hpp"
#include "gbx/fp.hpp"
#include "gbx/rational.hpp"

namespace gbx {

// Binomial coefficient with integer (possibly negative) upper index, via the
// falling-factorial definition.
inline mpz_class binomial(const mpz_class& x, long long j) {
  if (j < 0) throw std::invalid_argument("binomial with negative lower index");
  mpz_class r;
  mpz_bin_ui(r.get_mpz_t(), x.get_mpz_t(), static_cast<unsigned long>(j));
  return r;
}

inline Fp binom_mod_p(long long x, long long j, long long p) {
  const mpz_class b = binomial(mpz_class(static_cast<long>(x)), j);
  mpz_class r = b % static_cast<long>(p);
  if (r < 0) r += static_cast<long>(p);
  return Fp(r.get_si(), p);
}

inline Cyclotomic omega(long long p, long long i) { return Cyclotomic::omega(p, i); }

// Embedding of an integer into each coefficient field, with the field
// context taken from a witness element.
inline Rational make_from_integer(const mpz_class& z, const Rational&) { return Rational(z); }

inline Fp make_from_integer(const mpz_class& z, const Fp& witness) {
  mpz_class r = z % static_cast<long>(witness.modulus());
  if (r < 0) r += static_cast<long>(witness.modulus());
  return Fp(r.get_si(), witness.modulus());
}

inline Cyclotomic make_from_integer(const mpz_class& z, const Cyclotomic& witness) {
  return Cyclotomic(witness.p(), Rational(z));
}

}  // namespace gbx

#endif
