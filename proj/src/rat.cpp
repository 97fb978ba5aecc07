#include <descartes/rat.hpp>

#include <stdexcept>

namespace descartes {

Rat parse_rat(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  std::string num = s, den = "1";
  auto slash = s.find('/');
  if (slash != std::string::npos) {
    num = s.substr(0, slash);
    den = s.substr(slash + 1);
  }
  auto check_int = [](const std::string& t) {
    if (t.empty()) return false;
    size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (!isdigit(static_cast<unsigned char>(t[i]))) return false;
    return true;
  };
  if (!check_int(num) || !check_int(den))
    throw std::invalid_argument("malformed rational literal: " + s);
  Int n(num), d(den);
  if (d == 0) throw std::invalid_argument("zero denominator: " + s);
  Rat q;
  q.get_num() = n;
  q.get_den() = d;
  q.canonicalize();
  return q;
}

std::string rat_codec(const Rat& x) {
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

std::string rat_str(const Rat& x) {
  if (x.get_den() == 1) return x.get_num().get_str();
  return rat_codec(x);
}

Rat rat_pow(const Rat& base, unsigned exp) {
  Rat r(1), b = base;
  while (exp) {
    if (exp & 1) r *= b;
    b *= b;
    exp >>= 1;
  }
  return r;
}

Int int_pow(const Int& base, unsigned exp) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

Rat simplest_between(const Rat& lo, const Rat& hi) {
  if (!(lo < hi)) throw std::invalid_argument("simplest_between: empty interval");
  if (sgn(lo) < 0 && sgn(hi) > 0) return Rat(0);
  if (sgn(hi) <= 0) return -simplest_between(-hi, -lo);
  // 0 <= lo < hi
  Int a;
  mpz_fdiv_q(a.get_mpz_t(), lo.get_num().get_mpz_t(), lo.get_den().get_mpz_t());
  Rat next(a + 1);
  if (next < hi) return next;  // next > lo always holds
  if (lo == Rat(a)) {
    // (a, hi) with hi <= a+1: a + 1/y with smallest integer y > 1/(hi-a)
    Rat inv = 1 / (hi - Rat(a));
    Int y;
    mpz_fdiv_q(y.get_mpz_t(), inv.get_num().get_mpz_t(), inv.get_den().get_mpz_t());
    y += 1;
    return Rat(a) + 1 / Rat(y);
  }
  return Rat(a) + 1 / simplest_between(1 / (hi - Rat(a)), 1 / (lo - Rat(a)));
}

Int binomial(unsigned n, unsigned k) {
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

Rat dyadic_between(const Rat& lo, const Rat& hi) {
  if (!(lo < hi)) throw std::invalid_argument("dyadic_between: empty interval");
  Rat g = hi - lo;
  // largest e with 2^e <= g/2, via the bit length of g's parts
  long e = static_cast<long>(mpz_sizeinbase(g.get_num().get_mpz_t(), 2)) -
           static_cast<long>(mpz_sizeinbase(g.get_den().get_mpz_t(), 2)) - 2;
  Rat step;
  while (true) {
    if (e >= 0) {
      Int n(1);
      mpz_mul_2exp(n.get_mpz_t(), n.get_mpz_t(), static_cast<unsigned long>(e));
      step = Rat(n);
    } else {
      Int d(1);
      mpz_mul_2exp(d.get_mpz_t(), d.get_mpz_t(), static_cast<unsigned long>(-e));
      step = frac(Int(1), d);
    }
    if (2 * step <= g) break;
    --e;
  }
  Rat q = lo / step;
  Int k;
  mpz_fdiv_q(k.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
  Rat t = Rat(k + 1) * step;
  if (!(lo < t && t < hi)) throw std::logic_error("dyadic_between: selection failed");
  return t;
}

}  // namespace descartes
