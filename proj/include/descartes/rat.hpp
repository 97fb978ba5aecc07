#pragma once

#include <gmpxx.h>
#include <string>
#include <vector>

namespace descartes {

using Int = mpz_class;
using Rat = mpq_class;

inline int sign_of(const Int& x) { return sgn(x); }
inline int sign_of(const Rat& x) { return sgn(x); }

/// num/den in canonical form (mpq_class's two-argument constructor does not
/// canonicalize on its own).
inline Rat frac(long num, long den) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}
inline Rat frac(const Int& num, const Int& den) {
  Rat r;
  r.get_num() = num;
  r.get_den() = den;
  r.canonicalize();
  return r;
}

/// Parses "p/q" or "p" (base 10, optional leading '-'). Throws on malformed
/// input or zero denominator.
Rat parse_rat(const std::string& s);

/// Canonical "num/den" form, denominator always printed ("12/1").
std::string rat_codec(const Rat& x);

/// Human form: "p" when the denominator is 1, else "p/q".
std::string rat_str(const Rat& x);

Rat rat_pow(const Rat& base, unsigned exp);
Int int_pow(const Int& base, unsigned exp);

/// Simplest rational (smallest denominator, then smallest |numerator|)
/// strictly inside the open interval (lo, hi). Requires lo < hi.
Rat simplest_between(const Rat& lo, const Rat& hi);

/// Dyadic k*2^e strictly inside (lo, hi) with a short mantissa; keeps later
/// exact arithmetic on the value cheap even when lo/hi have huge numerators.
Rat dyadic_between(const Rat& lo, const Rat& hi);

Int binomial(unsigned n, unsigned k);

}  // namespace descartes
