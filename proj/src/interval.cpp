#include <descartes/interval.hpp>

#include <stdexcept>

namespace descartes {

RatInterval sqrt_enclosure(const Rat& r, unsigned bits) {
  if (sgn(r) < 0) throw std::domain_error("sqrt_enclosure: negative argument");
  if (sgn(r) == 0) return {Rat(0), Rat(0)};
  // sqrt(p/q) = sqrt(p*q)/q; scale by 4^bits to control the width.
  Int p = r.get_num(), q = r.get_den();
  Int n = p * q;
  mpz_mul_2exp(n.get_mpz_t(), n.get_mpz_t(), 2 * bits);
  Int s;
  mpz_sqrt(s.get_mpz_t(), n.get_mpz_t());
  Int den = q;
  mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), bits);
  Rat lo;
  lo.get_num() = s;
  lo.get_den() = den;
  lo.canonicalize();
  if (s * s == n) return {lo, lo};
  Rat hi;
  hi.get_num() = s + 1;
  hi.get_den() = den;
  hi.canonicalize();
  return {lo, hi};
}

int sign_qminus_minus_qplus(const Rat& c1, const Rat& r1, const Rat& c2, const Rat& r2) {
  // sign of D = (c1 - c2) - (c1*sqrt(r1) + c2*sqrt(r2)), c1,c2 > 0.
  if (sgn(c1) <= 0 || sgn(c2) <= 0) throw std::invalid_argument("coefficients must be positive");
  Rat t = c1 - c2;
  // u = c1*sqrt(r1) + c2*sqrt(r2) >= 0; u == 0 only when r1 == r2 == 0.
  if (sgn(r1) == 0 && sgn(r2) == 0) return sgn(t);
  if (sgn(t) <= 0) return -1;
  // compare t^2 with u^2 = c1^2 r1 + c2^2 r2 + 2 c1 c2 sqrt(r1 r2)
  Rat s = t * t - c1 * c1 * r1 - c2 * c2 * r2;
  if (sgn(s) < 0) return -1;
  Rat lhs = s * s;
  Rat rhs = 4 * c1 * c1 * c2 * c2 * r1 * r2;
  if (sgn(s) == 0) return sgn(r1 * r2) == 0 ? 0 : -1;
  if (lhs < rhs) return -1;
  if (lhs > rhs) return 1;
  return 0;
}

}  // namespace descartes
