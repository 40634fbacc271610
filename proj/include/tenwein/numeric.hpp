#pragma once

#include <gmpxx.h>
#include <cstdint>
#include <string>

namespace tenwein {

// Exact arithmetic types. All combinatorial counts are Int, all Weingarten
// values are Rat; no floating point enters the exact tower.
using Int = mpz_class;
using Rat = mpq_class;

inline Int factorial(long n) {
  Int r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n >= 0 ? n : 0));
  return r;
}

inline Int binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return r;
}

inline Int pow_int(const Int& base, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

inline Rat rat_pow(const Rat& base, long e) {
  if (e >= 0) {
    Rat r(pow_int(base.get_num(), static_cast<unsigned long>(e)),
          pow_int(base.get_den(), static_cast<unsigned long>(e)));
    r.canonicalize();
    return r;
  }
  Rat r(pow_int(base.get_den(), static_cast<unsigned long>(-e)),
        pow_int(base.get_num(), static_cast<unsigned long>(-e)));
  r.canonicalize();
  return r;
}

inline std::string to_string(const Int& z) { return z.get_str(); }

// "p/q", or just "p" when the denominator is 1.
inline std::string to_string(const Rat& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

}  // namespace tenwein
