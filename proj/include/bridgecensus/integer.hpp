#ifndef BRIDGECENSUS_INTEGER_HPP
#define BRIDGECENSUS_INTEGER_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "bridgecensus/errors.hpp"

namespace bridgecensus {

/// Unbounded signed integer. Continuants of standard continued fractions grow
/// exponentially in the entry sum, so all fraction/matrix arithmetic is exact.
using Integer = mpz_class;

inline std::int64_t to_int64(const Integer& v) {
  if (!v.fits_slong_p()) fail(ErrorKind::OutOfRange, "integer does not fit in 64 bits: " + v.get_str());
  return static_cast<std::int64_t>(v.get_si());
}

inline Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

inline Integer pow2(unsigned long e) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, e);
  return r;
}

inline Integer mod_inverse(const Integer& a, const Integer& m) {
  Integer r;
  if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0)
    fail(ErrorKind::Internal, "no modular inverse of " + a.get_str() + " mod " + m.get_str());
  return r;
}

}  // namespace bridgecensus

#endif  // BRIDGECENSUS_INTEGER_HPP
