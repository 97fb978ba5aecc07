#include <descartes/witness.hpp>

#include <algorithm>
#include <stdexcept>

namespace descartes {

namespace {

/// Interval Horner evaluation of p over [lo, hi].
RatInterval poly_range(const RatPoly& p, const Rat& lo, const Rat& hi) {
  RatInterval acc{Rat(0), Rat(0)};
  for (int j = p.degree(); j >= 0; --j) {
    // acc = acc * [lo,hi] + c_j
    Rat cands[4] = {acc.lo * lo, acc.lo * hi, acc.hi * lo, acc.hi * hi};
    Rat mn = cands[0], mx = cands[0];
    for (int i = 1; i < 4; ++i) {
      if (cands[i] < mn) mn = cands[i];
      if (cands[i] > mx) mx = cands[i];
    }
    acc = {mn + p.coeff(j), mx + p.coeff(j)};
  }
  return acc;
}

const Rat kZ344 = Rat(249, 100), kY344 = Rat(39, 25);   // degree-10 fixture quadratic
const Rat kZ246 = Rat(469, 100), kY246 = Rat(11, 2);    // degree-11 fixture quadratic

/// Seed realizing S(1,3,2) with (0,3): three negative roots and a definite
/// quadratic, verified in the test suite and re-certified on use.
RatPoly seed_s132() {
  RootSpec s;
  s.neg_roots = {Rat(1, 2), Rat(1), Rat(3, 2)};
  s.complex_pairs = {{Rat(31, 10), Rat(5, 2)}};
  return expand_from_spec(s);
}

Witness make_witness(RatPoly p, std::string how, std::map<std::string, Rat> params,
                     const SignPattern& sigma, const AdmissiblePair& ap) {
  if (!certify_witness(p, sigma, ap))
    throw std::logic_error("witness construction failed certification for " + sigma.str());
  return Witness{std::move(p), std::move(how), std::move(params)};
}

/// Appends `sign` to the pattern realized by p (counts cnt) using one
/// concatenation step with x+1 or x-1.
void chain_step(RatPoly& p, std::pair<int, int>& cnt, SignPattern& pattern, int8_t sign) {
  int8_t last = pattern.last();
  bool use_plus_one = (last == sign);  // preservation keeps x+1, change takes x-1
  RatPoly p2 = use_plus_one ? RatPoly::x_plus(Rat(1)) : RatPoly::x_minus(Rat(1));
  std::pair<int, int> target = use_plus_one ? std::make_pair(cnt.first, cnt.second + 1)
                                            : std::make_pair(cnt.first + 1, cnt.second);
  std::vector<int8_t> signs;
  for (int i = 0; i < pattern.size(); ++i) signs.push_back(pattern.at(i));
  signs.push_back(sign);
  SignPattern next(std::move(signs));
  auto [eps, q] = find_epsilon(p, p2, next, {target.first, target.second});
  p = q;
  cnt = target;
  pattern = next;
}

/// Chain of concatenations appending `count` times the sign +, keeping a
/// certified (pos, neg) bookkeeping. Used to grow the final plus-block.
void append_plus_block(RatPoly& p, std::pair<int, int>& cnt, SignPattern& pattern, int count) {
  for (int i = 0; i < count; ++i) chain_step(p, cnt, pattern, 1);
}

/// Reverts a certified witness; counts are preserved, the pattern reverses.
void revert_witness(RatPoly& p, SignPattern& pattern) {
  p = p.reverted();
  Rat lead = p.leading();
  if (sgn(lead) < 0) throw std::logic_error("revert_witness: negative constant term");
  if (lead != 1) p = p * (1 / lead);  // keep monic for later concatenations
  pattern = pattern.reversed();
}

}  // namespace

bool certify_witness(const RatPoly& poly, const SignPattern& sigma, const AdmissiblePair& ap) {
  if (poly.is_zero() || poly.coeff(0) == 0) return false;
  for (const auto& c : poly.coeffs())
    if (sgn(c) == 0) return false;
  if (!(pattern_of(poly) == sigma)) return false;
  auto [pos, neg] = count_pos_neg(poly);
  return pos == ap.pos && neg == ap.neg;
}

RatPoly concatenate(const RatPoly& p1, const RatPoly& p2, const Rat& eps) {
  if (sgn(eps) <= 0) throw std::invalid_argument("concatenate: eps must be positive");
  // eps^{d2} P2(x/eps) is exactly P2.scaled_x(1/eps)
  return p1 * p2.scaled_x(1 / eps);
}

std::pair<Rat, RatPoly> find_epsilon(const RatPoly& p1, const RatPoly& p2,
                                     const SignPattern& target, const AdmissiblePair& target_ap,
                                     int max_halvings) {
  Rat eps(1);
  for (int i = 0; i <= max_halvings; ++i) {
    RatPoly q = concatenate(p1, p2, eps);
    bool ok = true;
    for (const auto& c : q.coeffs())
      if (sgn(c) == 0) ok = false;
    if (ok && certify_witness(q, target, target_ap)) return {eps, q};
    eps /= 2;
  }
  throw std::runtime_error("find_epsilon: no epsilon found within " +
                           std::to_string(max_halvings) + " halvings for " + target.str());
}

Witness realize_pair_cp(const SignPattern& sigma) {
  auto [c, p] = changes_preservations(sigma);
  RatPoly poly = (sigma.at(1) == -1) ? RatPoly::x_minus(Rat(1)) : RatPoly::x_plus(Rat(1));
  std::pair<int, int> cnt = (sigma.at(1) == -1) ? std::make_pair(1, 0) : std::make_pair(0, 1);
  SignPattern cur(std::vector<int8_t>{1, sigma.at(1)});
  for (int i = 2; i <= sigma.degree(); ++i) chain_step(poly, cnt, cur, sigma.at(i));
  return make_witness(std::move(poly), "concat", {}, sigma, {c, p});
}

Witness realize_c0_c1(const SignPattern& sigma, const AdmissiblePair& ap) {
  auto [c, p] = changes_preservations(sigma);
  if (c > 1) throw std::invalid_argument("realize_c0_c1: pattern has c >= 2");
  if (!is_admissible(sigma, ap)) throw std::invalid_argument("realize_c0_c1: inadmissible pair");
  int d = sigma.degree();
  if (c == 0) {
    int k = (d - ap.neg) / 2;
    // distinct negative roots -1..-d; jitter the last root when the shift
    // engine cannot separate tied critical levels (exact ties occur for the
    // symmetric arithmetic progression at even degree)
    Rat offset(0);
    for (int attempt = 0; attempt < 16; ++attempt) {
      RootSpec spec;
      for (int i = 1; i <= d; ++i) spec.neg_roots.push_back(Rat(i));
      spec.neg_roots.back() += offset;
      RatPoly base = expand_from_spec(spec);
      if (k == 0) return make_witness(std::move(base), "concat", {}, sigma, ap);
      try {
        auto [t, shifted] = shift_to_ap(base, k);
        return make_witness(std::move(shifted), "shift", {{"t", t}}, sigma, ap);
      } catch (const std::runtime_error&) {
        offset = (attempt == 0) ? Rat(1, 2) : offset / 2;
      }
    }
    throw std::runtime_error("realize_c0_c1: could not separate critical levels");
  }
  // c == 1: chain gives (1, d-1), then lower the negative count
  Witness base = realize_pair_cp(sigma);
  int k = (d - 1 - ap.neg) / 2;
  if (k == 0) return make_witness(std::move(base.poly), "concat", {}, sigma, ap);
  auto [t, shifted] = shift_to_ap(base.poly, k);
  return make_witness(std::move(shifted), "shift", {{"t", t}}, sigma, ap);
}

Thm2Result theorem2_construct(int d, int m, int n) {
  if (sgn(L_value(d, m, n)) <= 0)
    throw std::invalid_argument("theorem2_construct requires L(d,m,n) > 0");
  int q = d + 1 - m - n;
  if (q < 1) throw std::invalid_argument("theorem2_construct: q must be >= 1");
  auto C = [&](int k) -> Rat {
    if (k < 0 || k > d - 2) return Rat(0);
    return Rat(binomial(static_cast<unsigned>(d - 2), static_cast<unsigned>(k)));
  };
  // z_j = a_j + b_j * y bounds the coefficient p_j (descending index)
  std::vector<Rat> aj(d), bj(d);
  for (int j = 1; j <= d - 1; ++j) {
    aj[j] = C(j) / C(j - 1);
    bj[j] = C(j - 2) / C(j - 1);
  }
  auto is_mid = [&](int j) { return j >= m && j <= m + n - 1; };

  // feasible y from the mid-vs-outer linear constraints
  Rat ylo(0);
  std::optional<Rat> yhi;
  for (int i = 1; i <= d - 1; ++i) {
    if (!is_mid(i)) continue;
    for (int j = 1; j <= d - 1; ++j) {
      if (is_mid(j)) continue;
      Rat db = bj[i] - bj[j];
      if (sgn(db) == 0) {
        if (aj[i] >= aj[j]) throw std::logic_error("theorem2_construct: linear infeasibility");
      } else if (sgn(db) > 0) {
        Rat ub = (aj[j] - aj[i]) / db;
        if (!yhi || ub < *yhi) yhi = ub;
      } else {
        Rat lb = (aj[j] - aj[i]) / db;
        if (lb > ylo) ylo = lb;
      }
    }
  }
  if (yhi && !(ylo < *yhi)) throw std::logic_error("theorem2_construct: empty y window");

  for (unsigned bits = 32; bits <= (1u << 16); bits *= 2) {
    // s = sqrt(y) window from the mid constraints z_j(y) < 2*sqrt(y)
    Rat slo(0);
    std::optional<Rat> shi;
    bool feasible = true;
    for (int j = m; j <= m + n - 1; ++j) {
      if (sgn(bj[j]) == 0) {
        Rat v = aj[j] / 2;
        if (v > slo) slo = v;
        continue;
      }
      Rat disc = 1 - aj[j] * bj[j];
      if (sgn(disc) <= 0) {
        feasible = false;
        break;
      }
      RatInterval rt = sqrt_enclosure(disc, bits);
      Rat lo = (1 - rt.lo) / bj[j];  // certain upper bound of the lower root
      Rat hi = (1 + rt.lo) / bj[j];  // certain lower bound of the upper root
      if (lo > slo) slo = lo;
      if (!shi || hi < *shi) shi = hi;
    }
    if (!feasible) throw std::logic_error("theorem2_construct: nonpositive mid discriminant");
    Rat tlo = slo;
    std::optional<Rat> thi = shi;
    if (sgn(ylo) > 0) {
      Rat v = sqrt_enclosure(ylo, bits).hi;
      if (v > tlo) tlo = v;
    }
    if (yhi) {
      Rat v = sqrt_enclosure(*yhi, bits).lo;
      if (!thi || v < *thi) thi = v;
    }
    Rat upper = thi ? *thi : tlo + 1;
    if (!(tlo < upper)) continue;  // refine the enclosures

    Rat t = simplest_between(tlo, upper);
    Rat y = t * t;
    Rat zlo(0);
    std::optional<Rat> zhi;
    for (int j = 1; j <= d - 1; ++j) {
      Rat v = aj[j] + bj[j] * y;
      if (is_mid(j)) {
        if (v > zlo) zlo = v;
      } else if (!zhi || v < *zhi) {
        zhi = v;
      }
    }
    Rat zcap = 2 * t;
    if (zhi && *zhi < zcap) zcap = *zhi;
    if (!(zlo < zcap)) continue;
    Rat z = simplest_between(zlo, zcap);

    RatPoly poly = RatPoly::x_plus(Rat(1)).pow(static_cast<unsigned>(d - 2)) *
                   RatPoly({y, -z, Rat(1)});
    if (!(pattern_of(poly) == ThreeBlockPattern(m, n, q).pattern())) continue;
    if (!(z * z < 4 * y)) throw std::logic_error("theorem2_construct: discriminant check failed");
    return {y, z, poly};
  }
  throw std::logic_error("theorem2_construct: refinement budget exhausted with L > 0");
}

RatPoly perturb_to_distinct(int count, const ComplexPair& quad, Rat* eta_out) {
  if (count < 0) throw std::invalid_argument("perturb_to_distinct: count must be >= 0");
  if (!quad.valid()) throw std::invalid_argument("perturb_to_distinct: quadratic has real roots");
  if (count == 0) {
    // no repeated root to split
    if (eta_out) *eta_out = 0;
    return RatPoly({quad.y, -quad.z, Rat(1)});
  }
  int d = count + 2;
  RatPoly quad_poly({quad.y, -quad.z, Rat(1)});
  RatPoly base = RatPoly::x_plus(Rat(1)).pow(static_cast<unsigned>(count)) * quad_poly;
  SignPattern target = pattern_of(base);
  Rat eta = frac(1, 2 * d);
  for (int i = 0; i < 64; ++i) {
    RootSpec spec;
    for (int j = 0; j < count; ++j) spec.neg_roots.push_back(1 + j * eta);
    RatPoly p = expand_from_spec(spec) * quad_poly;
    bool nonzero = true;
    for (const auto& c : p.coeffs())
      if (sgn(c) == 0) nonzero = false;
    if (nonzero && pattern_of(p) == target) {
      auto [pos, neg] = count_pos_neg(p);
      if (pos == 0 && neg == count) {
        if (eta_out) *eta_out = eta;
        return p;
      }
    }
    eta /= 2;
  }
  throw std::runtime_error("perturb_to_distinct: halving budget exhausted");
}

namespace {

struct ShiftProbe {
  const RatPoly& p;
  const SignPattern& pat;
  int dir, pos0;

  /// Negative-root count of the shifted polynomial, or -1 when the shift
  /// breaks the sign pattern / positive-root count. Non-increasing in t.
  int neg_count(const Rat& t) const {
    RatPoly shifted = p + RatPoly::constant(dir > 0 ? t : Rat(-t));
    if (shifted.coeff(0) == 0) return -1;
    for (const auto& c : shifted.coeffs())
      if (sgn(c) == 0) return -1;
    if (!(pattern_of(shifted) == pat)) return -1;
    auto [pos1, neg1] = count_pos_neg(shifted);
    if (pos1 != pos0) return -1;
    return neg1;
  }
};

}  // namespace

std::pair<Rat, RatPoly> shift_to_ap(const RatPoly& p, int k) {
  if (k < 0) throw std::invalid_argument("shift_to_ap: k must be >= 0");
  if (k == 0) return {Rat(0), p};
  if (p.is_zero() || p.coeff(0) == 0) throw std::invalid_argument("shift_to_ap: root at 0");
  int dir = sgn(p.coeff(0));  // +: raise constant term; -: lower it
  auto [pos0, neg0] = count_pos_neg(p);
  int target = neg0 - 2 * k;
  if (target < 0) throw std::invalid_argument("shift_to_ap: k out of range");
  SignPattern pat = pattern_of(p);
  ShiftProbe probe{p, pat, dir, pos0};

  // candidate thresholds: isolate the negative critical points, narrow each
  // isolating interval, and read |P| at interior rational points; the sorted
  // candidates bracket the true critical levels well enough for the exact
  // recount below to settle the choice of t
  std::vector<Rat> cand;
  {
    RatPoly dp = p.derivative();
    auto crits = isolate_real_roots(dp, std::nullopt, Rat(0));
    if (!crits.empty()) {
      SturmChain dchain(dp);
      for (auto r : crits) {
        if (!r.exact) {
          // flatness at the critical point makes the value error quadratic
          // in the interval width, so this refinement leaves ~1e-6 relative
          Rat w = (r.hi - r.lo) / 1024;
          refine_root(dchain, r, w);
        }
        Rat val = p.eval(r.mid());
        if (dir * sgn(val) < 0) cand.push_back(abs(val));
      }
      std::sort(cand.begin(), cand.end());
    }
  }
  auto accept = [&](const Rat& t) -> std::pair<Rat, RatPoly> {
    return {t, p + RatPoly::constant(dir > 0 ? t : Rat(-t))};
  };
  if (static_cast<int>(cand.size()) >= k) {
    if (static_cast<int>(cand.size()) == k) {
      Rat t = cand.back() * 2 + 1;
      if (probe.neg_count(t) == target) return accept(t);
    } else if (cand[k - 1] < cand[k]) {
      // short-mantissa dyadic keeps the recount's integer kernel small
      Rat t = dyadic_between(cand[k - 1], cand[k]);
      if (probe.neg_count(t) == target) return accept(t);
    }
  }

  // fallback: the count is non-increasing in t, so binary-search over the
  // exponent of t = 2^e (a probe that breaks the pattern counts as "t too
  // large"), then subdivide the straddling octave
  auto pow2 = [](long e) {
    return e >= 0 ? Rat(rat_pow(Rat(2), static_cast<unsigned>(e)))
                  : Rat(rat_pow(frac(1, 2), static_cast<unsigned>(-e)));
  };
  auto cnt = [&](long e) { return probe.neg_count(pow2(e)); };
  const long cap = 200000;
  long e_small = 0, e_big = 0;  // will satisfy cnt(e_small) > target > cnt(e_big)
  int c0 = cnt(0);
  if (c0 == target) return accept(pow2(0));
  if (c0 > target) {
    // need a larger shift
    e_small = 0;
    long step = 1;
    e_big = 1;
    int c = cnt(e_big);
    while (c > target) {
      if (c == target) return accept(pow2(e_big));
      e_small = e_big;
      step *= 2;
      e_big += step;
      if (e_big > cap) throw std::runtime_error("shift_to_ap: threshold search overflow");
      c = cnt(e_big);
    }
    if (c == target) return accept(pow2(e_big));
  } else {
    // need a smaller shift
    e_big = 0;
    long step = 64;
    e_small = -step;
    int c = cnt(e_small);
    while (c < target) {
      if (c == target) return accept(pow2(e_small));
      e_big = e_small;
      step *= 2;
      e_small -= step;
      if (e_small < -cap) throw std::runtime_error("shift_to_ap: threshold search underflow");
      c = cnt(e_small);
    }
    if (c == target) return accept(pow2(e_small));
  }
  // cnt(e_small) > target > cnt(e_big), e_small < e_big
  while (e_big - e_small > 1) {
    long mid = e_small + (e_big - e_small) / 2;
    int c = cnt(mid);
    if (c == target) return accept(pow2(mid));
    if (c > target)
      e_small = mid;
    else
      e_big = mid;
  }
  // both straddled thresholds sit inside one octave: bisect on rationals
  Rat a = pow2(e_small), b = pow2(e_big);  // cnt(a) > target > cnt(b)
  for (int rounds = 0; rounds < 256; ++rounds) {
    Rat mid = (a + b) / 2;
    int c = probe.neg_count(mid);
    if (c == target) return accept(mid);
    if (c > target)
      a = mid;
    else
      b = mid;
  }
  throw std::runtime_error("shift_to_ap: could not separate the threshold levels");
}

std::optional<Witness> realize_three_block(const ThreeBlockPattern& tb) {
  int m = tb.m, n = tb.n, q = tb.q, d = tb.degree();
  AdmissiblePair goal{0, d - 2};
  auto finish = [&](RatPoly p, std::string how, std::map<std::string, Rat> params) {
    return make_witness(std::move(p), std::move(how), std::move(params), tb.pattern(), goal);
  };

  // chain up from a seed realizing S(1,n,s0) with (0, s0+n-2): grow the tail
  // to S(1,n,mm), revert to S(mm,n,1), grow to S(mm,n,qq)
  auto chain_from_seed = [&](RatPoly seed, int s0, int mm, int qq) -> RatPoly {
    std::pair<int, int> cnt{0, s0 + n - 2};
    SignPattern pat = pattern_of(seed);
    RatPoly poly = std::move(seed);
    if (mm == 1) {
      append_plus_block(poly, cnt, pat, qq - s0);
      return poly;
    }
    append_plus_block(poly, cnt, pat, mm - s0);
    revert_witness(poly, pat);
    append_plus_block(poly, cnt, pat, qq - 1);
    return poly;
  };

  if (n <= 2) {
    RatPoly seed = (n == 1) ? RatPoly({Rat(2), Rat(-2), Rat(1)})                    // x^2-2x+2
                            : RatPoly({Rat(12), Rat(-2), Rat(-2), Rat(1)});         // x^3-2x^2-2x+12
    return finish(chain_from_seed(seed, 1, m, q), "concat", {});
  }
  if (n == 3) {
    if (d < 5) return std::nullopt;  // S(1,3,1) at d = 4 is the nonrealizable case
    // seed realizes S(1,3,2); reach S(1,3,m) first when m >= 2
    RatPoly seed = seed_s132();
    if (m == 1) return finish(chain_from_seed(seed, 2, 1, q), "concat", {});
    return finish(chain_from_seed(seed, 2, m, q), "concat", {});
  }
  if (n == 4) {
    bool wide = m >= 3 && q >= 3 && d >= 10;
    bool narrow = (m == 2 && q >= 6) || (q == 2 && m >= 6);
    if (wide) {
      Rat eta;
      RatPoly seed = perturb_to_distinct(8, {kZ344, kY344}, &eta);  // S(3,4,4), (0,8)
      // grow S(3,4,t) then revert as needed; ensure the grown side is >= 4
      int mm = m, qq = q;
      bool reverted = false;
      if (mm > qq) {
        std::swap(mm, qq);
        reverted = true;
      }
      // mm <= qq, mm >= 3, qq >= 4
      std::pair<int, int> cnt{0, 8};
      SignPattern pat = pattern_of(seed);
      RatPoly poly = std::move(seed);
      append_plus_block(poly, cnt, pat, qq - 4);          // S(3,4,qq)
      if (mm > 3) {
        revert_witness(poly, pat);                        // S(qq,4,3)
        append_plus_block(poly, cnt, pat, mm - 3);        // S(qq,4,mm)
        if (!reverted) revert_witness(poly, pat);         // S(mm,4,qq)
      } else if (reverted) {
        revert_witness(poly, pat);                        // S(qq,4,3) = S(m,4,q)
      }
      return finish(std::move(poly), "paper-fixture", {{"eta", eta}});
    }
    if (narrow) {
      Rat eta;
      RatPoly seed = perturb_to_distinct(9, {kZ246, kY246}, &eta);  // S(2,4,6), (0,9)
      std::pair<int, int> cnt{0, 9};
      SignPattern pat = pattern_of(seed);
      RatPoly poly = std::move(seed);
      if (m == 2) {
        append_plus_block(poly, cnt, pat, q - 6);
      } else {
        append_plus_block(poly, cnt, pat, m - 6);
        revert_witness(poly, pat);
      }
      return finish(std::move(poly), "paper-fixture", {{"eta", eta}});
    }
  }
  // Theorem 2 on either orientation
  for (bool rev : {false, true}) {
    int mm = rev ? q : m;
    if (sgn(L_value(d, mm, n)) > 0) {
      Thm2Result r = theorem2_construct(d, mm, n);
      Rat eta;
      RatPoly p = perturb_to_distinct(d - 2, {r.z, r.y}, &eta);
      SignPattern pat = pattern_of(p);
      if (rev) revert_witness(p, pat);
      return finish(std::move(p), "thm2", {{"y", r.y}, {"z", r.z}, {"eta", eta}});
    }
  }
  return std::nullopt;
}

std::optional<Witness> build_witness(const SignPattern& sigma, const AdmissiblePair& ap) {
  if (!is_admissible(sigma, ap)) throw std::invalid_argument("build_witness: inadmissible pair");
  auto [c, p] = changes_preservations(sigma);
  int d = sigma.degree();
  if (ap.pos == c && ap.neg == p) return realize_pair_cp(sigma);
  if (c <= 1) return realize_c0_c1(sigma, ap);
  if (c == 2 && ap.pos == 0) {
    auto tb = as_three_block(sigma);
    auto base = realize_three_block(*tb);
    if (!base) return std::nullopt;
    int k = (d - 2 - ap.neg) / 2;
    if (k == 0) return base;
    auto [t, shifted] = shift_to_ap(base->poly, k);
    auto params = base->params;
    params["t"] = t;
    return make_witness(std::move(shifted), "shift", std::move(params), sigma, ap);
  }
  return std::nullopt;
}

}  // namespace descartes
