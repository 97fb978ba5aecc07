#pragma once

#include <descartes/rat.hpp>

namespace descartes {

/// Closed rational interval [lo, hi]; lo <= hi. A point interval (lo == hi)
/// represents an exactly known value.
struct RatInterval {
  Rat lo, hi;

  Rat width() const { return hi - lo; }
  Rat mid() const { return (lo + hi) / 2; }
  bool is_point() const { return lo == hi; }
  bool contains(const Rat& x) const { return lo <= x && x <= hi; }

  /// Certainly less-than: every value here < every value there.
  bool strictly_below(const RatInterval& o) const { return hi < o.lo; }

  RatInterval operator+(const RatInterval& o) const { return {lo + o.lo, hi + o.hi}; }
  RatInterval operator-(const RatInterval& o) const { return {lo - o.hi, hi - o.lo}; }

  /// Scale by an exact rational (sign-aware).
  RatInterval scaled(const Rat& c) const {
    if (sgn(c) >= 0) return {c * lo, c * hi};
    return {c * hi, c * lo};
  }
  RatInterval shifted(const Rat& c) const { return {lo + c, hi + c}; }
};

/// Rigorous enclosure of sqrt(r), r >= 0: lo^2 <= r <= hi^2 with
/// hi - lo <= 1/2^bits (up to the denominator of r). Exact square roots
/// collapse to a point interval. Throws on r < 0.
RatInterval sqrt_enclosure(const Rat& r, unsigned bits);

/// Exact sign of  c1*(1 - sqrt(r1)) - c2*(1 + sqrt(r2))  for rationals
/// c1, c2 > 0 and r1, r2 in [0, 1]. Returns -1, 0, +1. Used to compare the
/// surd endpoints Q^-(k1) and Q^+(k2) without any tolerance.
int sign_qminus_minus_qplus(const Rat& c1, const Rat& r1, const Rat& c2, const Rat& r2);

}  // namespace descartes
