#include <descartes/ratpoly.hpp>

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace descartes {

namespace {

using ZP = std::vector<Int>;  // ascending integer coefficients

int zdeg(const ZP& p) { return static_cast<int>(p.size()) - 1; }

void ztrim(ZP& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

/// Divide by the (positive) content.
void make_primitive(ZP& p) {
  Int g(0);
  for (const auto& c : p) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) return;
  }
  if (g == 0 || g == 1) return;
  for (auto& c : p) c /= g;
}

ZP zderivative(const ZP& p) {
  ZP d;
  for (size_t i = 1; i < p.size(); ++i) d.push_back(Int(static_cast<long>(i)) * p[i]);
  return d;
}

/// Pseudo-remainder loop; reports the sign of the multiplier lc(B)^k that
/// was applied to A, so callers can keep Sturm sign conventions intact.
ZP prem_signed(const ZP& A, const ZP& B, int& mult_sign) {
  ZP R = A;
  const Int& b = B.back();
  int steps = 0;
  while (true) {
    ztrim(R);
    int dr = zdeg(R), db = zdeg(B);
    if (dr < db || R.empty()) break;
    int shift = dr - db;
    Int lead = R.back();
    for (auto& c : R) c *= b;
    for (int i = 0; i <= db; ++i) R[i + shift] -= lead * B[i];
    ++steps;
  }
  mult_sign = (sgn(b) < 0 && (steps & 1)) ? -1 : 1;
  return R;
}

/// Clears denominators and removes content; sign of values preserved.
ZP to_int_primitive(const RatPoly& p) {
  Int l(1);
  for (const auto& c : p.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den().get_mpz_t());
  ZP out;
  out.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) {
    Rat scaled = c * Rat(l);
    out.push_back(scaled.get_num());
  }
  make_primitive(out);
  return out;
}

/// Sign of p at x = n/d (d > 0): homogeneous integer Horner.
int zsign_at(const ZP& p, const Int& n, const Int& d) {
  if (p.empty()) return 0;
  Int acc = p.back();
  Int dp(1);
  for (int i = zdeg(p) - 1; i >= 0; --i) {
    dp *= d;
    acc = acc * n + p[i] * dp;
  }
  return sgn(acc);
}

int zsign_at(const ZP& p, const Rat& x) { return zsign_at(p, x.get_num(), x.get_den()); }

int zsign_pos_inf(const ZP& p) { return p.empty() ? 0 : sgn(p.back()); }
int zsign_neg_inf(const ZP& p) {
  if (p.empty()) return 0;
  int s = sgn(p.back());
  return (zdeg(p) % 2 == 0) ? s : -s;
}

}  // namespace

// ---------------------------------------------------------------------------
// RatPoly basics

void RatPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const Rat& RatPoly::leading() const {
  if (c_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
  return c_.back();
}

RatPoly RatPoly::operator+(const RatPoly& o) const {
  std::vector<Rat> r(std::max(c_.size(), o.c_.size()), Rat(0));
  for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
  return RatPoly(std::move(r));
}

RatPoly RatPoly::operator-(const RatPoly& o) const { return *this + (-o); }

RatPoly RatPoly::operator-() const {
  std::vector<Rat> r = c_;
  for (auto& x : r) x = -x;
  return RatPoly(std::move(r));
}

RatPoly RatPoly::operator*(const RatPoly& o) const {
  if (c_.empty() || o.c_.empty()) return RatPoly();
  std::vector<Rat> r(c_.size() + o.c_.size() - 1, Rat(0));
  for (size_t i = 0; i < c_.size(); ++i)
    for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  return RatPoly(std::move(r));
}

RatPoly RatPoly::operator*(const Rat& s) const {
  std::vector<Rat> r = c_;
  for (auto& x : r) x *= s;
  return RatPoly(std::move(r));
}

RatPoly RatPoly::derivative() const {
  std::vector<Rat> r;
  for (size_t i = 1; i < c_.size(); ++i) r.push_back(c_[i] * Rat(static_cast<long>(i)));
  return RatPoly(std::move(r));
}

RatPoly RatPoly::pow(unsigned e) const {
  RatPoly r = RatPoly::constant(Rat(1)), b = *this;
  while (e) {
    if (e & 1) r = r * b;
    b = b * b;
    e >>= 1;
  }
  return r;
}

Rat RatPoly::eval(const Rat& x) const {
  Rat acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

int RatPoly::sign_at_pos_inf() const { return c_.empty() ? 0 : sgn(c_.back()); }

int RatPoly::sign_at_neg_inf() const {
  if (c_.empty()) return 0;
  int s = sgn(c_.back());
  return (degree() % 2 == 0) ? s : -s;
}

RatPoly RatPoly::reverted() const {
  if (is_zero() || coeff(0) == 0)
    throw std::domain_error("reverted: constant term is zero (reversal drops degree)");
  std::vector<Rat> r(c_.rbegin(), c_.rend());
  return RatPoly(std::move(r));
}

RatPoly RatPoly::scaled_x(const Rat& chi) const {
  if (sgn(chi) <= 0) throw std::invalid_argument("scaled_x: scale must be positive");
  if (is_zero()) return RatPoly();
  int d = degree();
  std::vector<Rat> r(c_.size());
  // coefficient of x^j becomes a_j * chi^{j-d}
  Rat f = rat_pow(1 / chi, static_cast<unsigned>(d));
  for (int j = 0; j <= d; ++j) {
    r[j] = c_[j] * f;
    f *= chi;
  }
  return RatPoly(std::move(r));
}

std::string RatPoly::codec() const {
  if (is_zero()) return "0/1";
  std::string out;
  for (size_t i = 0; i < c_.size(); ++i) {
    if (i) out += ',';
    out += rat_codec(c_[i]);
  }
  return out;
}

RatPoly RatPoly::parse_codec(const std::string& s) {
  std::vector<Rat> c;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) c.push_back(parse_rat(tok));
  return RatPoly(std::move(c));
}

// ---------------------------------------------------------------------------
// Root specs and symmetric functions

bool RootSpec::reals_distinct() const {
  std::set<Rat> n(neg_roots.begin(), neg_roots.end());
  std::set<Rat> p(pos_roots.begin(), pos_roots.end());
  return n.size() == neg_roots.size() && p.size() == pos_roots.size();
}

RatPoly expand_from_spec(const RootSpec& spec) {
  RatPoly p = RatPoly::constant(Rat(1));
  for (const auto& u : spec.neg_roots) {
    if (sgn(u) <= 0) throw std::invalid_argument("expand_from_spec: negative-root magnitude must be positive");
    p = p * RatPoly::x_plus(u);
  }
  for (const auto& r : spec.pos_roots) {
    if (sgn(r) <= 0) throw std::invalid_argument("expand_from_spec: positive root must be positive");
    p = p * RatPoly::x_minus(r);
  }
  for (const auto& q : spec.complex_pairs) {
    if (!q.valid())
      throw std::invalid_argument("expand_from_spec: pair with z^2 >= 4y is not a complex pair");
    p = p * RatPoly({q.y, -q.z, Rat(1)});
  }
  return p;
}

std::vector<Rat> elementary_symmetric(const std::vector<Rat>& values) {
  if (values.empty()) throw std::invalid_argument("elementary_symmetric: empty input");
  std::vector<Rat> e(values.size() + 1, Rat(0));
  e[0] = 1;
  size_t used = 0;
  for (const auto& v : values) {
    ++used;
    for (size_t j = used; j >= 1; --j) e[j] += v * e[j - 1];
  }
  return std::vector<Rat>(e.begin() + 1, e.end());
}

// ---------------------------------------------------------------------------
// Sturm machinery

SturmChain::SturmChain(const RatPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("Sturm chain of zero polynomial");
  ZP s0 = to_int_primitive(p);
  chain_.push_back(s0);
  if (zdeg(s0) == 0) return;
  ZP s1 = zderivative(s0);
  make_primitive(s1);
  chain_.push_back(s1);
  while (true) {
    const ZP& a = chain_[chain_.size() - 2];
    const ZP& b = chain_.back();
    if (zdeg(b) <= 0) break;
    int msign = 1;
    ZP r = prem_signed(a, b, msign);
    ztrim(r);
    if (r.empty()) break;
    make_primitive(r);
    // next element is a positive multiple of -rem(a, b)
    if (msign > 0)
      for (auto& c : r) c = -c;
    chain_.push_back(std::move(r));
  }
}

int SturmChain::sign_at(const Rat& x) const { return zsign_at(chain_[0], x); }

int SturmChain::variations_at(const std::optional<Rat>& x, bool at_pos_inf) const {
  int v = 0, prev = 0;
  for (const auto& s : chain_) {
    int sg;
    if (x)
      sg = zsign_at(s, *x);
    else
      sg = at_pos_inf ? zsign_pos_inf(s) : zsign_neg_inf(s);
    if (sg == 0) continue;
    if (prev != 0 && sg != prev) ++v;
    prev = sg;
  }
  return v;
}

int SturmChain::count(const std::optional<Rat>& lo, const std::optional<Rat>& hi) const {
  if (lo && hi && !(*lo < *hi)) throw std::invalid_argument("count: endpoints out of order");
  if (lo && zsign_at(chain_[0], *lo) == 0)
    throw std::invalid_argument("count: lower endpoint is a root; nudge the endpoint");
  if (hi && zsign_at(chain_[0], *hi) == 0)
    throw std::invalid_argument("count: upper endpoint is a root; nudge the endpoint");
  return variations_at(lo, false) - variations_at(hi, true);
}

int count_real_roots(const RatPoly& p, const std::optional<Rat>& lo, const std::optional<Rat>& hi) {
  return SturmChain(p).count(lo, hi);
}

std::pair<int, int> count_pos_neg(const RatPoly& p) {
  if (p.is_zero() || p.coeff(0) == 0)
    throw std::invalid_argument("count_pos_neg: polynomial has a root at 0");
  SturmChain s(p);
  int pos = s.count(Rat(0), std::nullopt);
  int neg = s.count(std::nullopt, Rat(0));
  return {pos, neg};
}

RatPoly poly_gcd(const RatPoly& a, const RatPoly& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  ZP x = to_int_primitive(a), y = to_int_primitive(b);
  if (zdeg(x) < zdeg(y)) std::swap(x, y);
  while (!y.empty() && zdeg(y) >= 0) {
    if (zdeg(y) == 0) {
      y = {Int(1)};
      break;
    }
    int ms = 1;
    ZP r = prem_signed(x, y, ms);
    ztrim(r);
    make_primitive(r);
    x = std::move(y);
    y = std::move(r);
  }
  ZP g = y.empty() ? x : y;
  if (!g.empty() && sgn(g.back()) < 0)
    for (auto& c : g) c = -c;
  std::vector<Rat> rc;
  for (auto& c : g) rc.push_back(Rat(c));
  return RatPoly(std::move(rc));
}

bool is_square_free(const RatPoly& p) {
  if (p.is_zero()) return false;
  if (p.degree() <= 1) return true;
  return poly_gcd(p, p.derivative()).degree() == 0;
}

Rat root_bound(const RatPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("root_bound of zero polynomial");
  Rat m(0);
  for (int j = 0; j < p.degree(); ++j) {
    Rat q = abs(p.coeff(j) / p.leading());
    if (q > m) m = q;
  }
  return m + 1;
}

// ---------------------------------------------------------------------------
// Isolation

namespace {

/// Exact division of p by (x - r); remainder must vanish.
RatPoly divide_linear(const RatPoly& p, const Rat& r) {
  int d = p.degree();
  std::vector<Rat> q(d, Rat(0));
  Rat carry = p.coeff(d);
  for (int i = d - 1; i >= 0; --i) {
    q[i] = carry;
    carry = p.coeff(i) + carry * r;
  }
  if (carry != 0) throw std::logic_error("divide_linear: nonzero remainder");
  return RatPoly(std::move(q));
}

/// Split point in (lo, hi) avoiding roots of the chain: walks fractions
/// k/den for growing odd den until one misses every root.
Rat nonroot_split(const SturmChain& chain, const Rat& lo, const Rat& hi) {
  Rat w = hi - lo;
  Rat m = lo + w / 2;
  if (!chain.is_root(m)) return m;
  for (long den = 3;; den += 2) {
    for (long num = 1; num < den; ++num) {
      Rat cand = lo + w * frac(num, den);
      if (!chain.is_root(cand)) return cand;
    }
  }
}

void isolate_rec(const SturmChain& chain, const Rat& lo, const Rat& hi, int count,
                 std::vector<IsolatedRoot>& out) {
  if (count == 0) return;
  if (count == 1) {
    out.push_back({lo, hi, false});
    return;
  }
  Rat m = nonroot_split(chain, lo, hi);
  int left = chain.count(lo, m);
  isolate_rec(chain, lo, m, left, out);
  isolate_rec(chain, m, hi, count - left, out);
}

}  // namespace

std::vector<IsolatedRoot> isolate_real_roots(const RatPoly& p_in, const std::optional<Rat>& lo_in,
                                             const std::optional<Rat>& hi_in) {
  RatPoly p = p_in;
  if (p.is_zero()) throw std::invalid_argument("isolate_real_roots: zero polynomial");
  std::vector<IsolatedRoot> out;
  // strip roots sitting exactly on a finite endpoint (the open interval excludes them)
  for (const auto& ep : {lo_in, hi_in})
    if (ep)
      while (p.degree() >= 1 && p.eval(*ep) == 0) p = divide_linear(p, *ep);
  if (p.degree() < 1) return out;

  Rat b = root_bound(p);
  Rat lo = Rat(-b), hi = b;
  if (lo_in && *lo_in > lo) lo = *lo_in;
  if (hi_in && *hi_in < hi) hi = *hi_in;
  if (!(lo < hi)) return out;

  SturmChain chain(p);
  isolate_rec(chain, lo, hi, chain.count(lo, hi), out);
  std::sort(out.begin(), out.end(),
            [](const IsolatedRoot& a, const IsolatedRoot& b2) { return a.mid() < b2.mid(); });
  return out;
}

void refine_root(const SturmChain& chain, IsolatedRoot& r, const Rat& width) {
  if (r.exact) return;
  // single-root interval: when the endpoint signs differ the root has odd
  // multiplicity and plain sign bisection works (one evaluation per step);
  // otherwise fall back to full variation counts
  int s_lo = chain.sign_at(r.lo);
  int s_hi = chain.sign_at(r.hi);
  bool sign_flip = s_lo != 0 && s_hi != 0 && s_lo != s_hi;
  while (r.hi - r.lo > width) {
    Rat m = (r.lo + r.hi) / 2;
    int s_m = chain.sign_at(m);
    if (s_m == 0) {
      r.lo = r.hi = m;
      r.exact = true;
      return;
    }
    if (sign_flip) {
      if (s_m == s_lo)
        r.lo = m;
      else
        r.hi = m;
    } else {
      if (chain.count(r.lo, m) == 1)
        r.hi = m;
      else
        r.lo = m;
    }
  }
}

}  // namespace descartes
