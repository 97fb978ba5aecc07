#include <descartes/criteria.hpp>
#include <descartes/oracle.hpp>
#include <descartes/parallel.hpp>
#include <descartes/verify.hpp>
#include <descartes/witness.hpp>

#include <random>
#include <sstream>

namespace descartes {

BatteryReport run_thm2_sweep(int max_degree) {
  BatteryReport out;
  struct Triple {
    int d, m, n;
  };
  std::vector<Triple> work;
  for (int d = 2; d <= max_degree; ++d)
    for (int m = 1; m < d; ++m)
      for (int n = 1; m + n <= d; ++n)
        if (sgn(L_value(d, m, n)) > 0) work.push_back({d, m, n});

  std::vector<CheckReport> results(work.size());
  parallel_for(work.size(), [&](size_t i) {
    auto [d, m, n] = work[i];
    int q = d + 1 - m - n;
    std::ostringstream name;
    name << "thm2 d=" << d << " m=" << m << " n=" << n;
    CheckReport r{name.str(), false, ""};
    try {
      Thm2Result t = theorem2_construct(d, m, n);
      SignPattern target = ThreeBlockPattern(m, n, q).pattern();
      if (!(pattern_of(t.poly) == target)) throw std::logic_error("pattern mismatch");
      RatPoly p = perturb_to_distinct(d - 2, {t.z, t.y});
      if (!certify_witness(p, target, {0, d - 2})) throw std::logic_error("(0,d-2) certification failed");
      if (d - 4 >= 0) {
        auto [tt, shifted] = shift_to_ap(p, 1);
        if (!certify_witness(shifted, target, {0, d - 4}))
          throw std::logic_error("(0,d-4) certification failed");
      }
      r.pass = true;
    } catch (const std::exception& e) {
      r.detail = e.what();
    }
    results[i] = r;
  });
  for (auto& r : results) out.add(r.name, r.pass, r.detail);
  return out;
}

BatteryReport run_q_monotonicity(int max_degree_mono, int max_degree_grid) {
  BatteryReport out;
  // strict decrease of the Q+- enclosures in k
  bool mono_ok = true;
  std::string mono_detail;
  for (int d = 4; d <= max_degree_mono && mono_ok; ++d) {
    int kmax = d / 2;
    for (int k = 1; k + 1 <= kmax && k + 1 <= d - 2; ++k) {
      Rat width(1, 1000000);
      for (int refine = 0; refine < 6; ++refine) {
        QBounds a = q_bounds(d, k, width), b = q_bounds(d, k + 1, width);
        bool minus_dec = b.qminus.hi < a.qminus.lo;
        bool plus_dec = b.qplus.hi < a.qplus.lo;
        if (minus_dec && plus_dec) break;
        width /= 1024;
        if (refine == 5) {
          mono_ok = false;
          mono_detail = "d=" + std::to_string(d) + " k=" + std::to_string(k);
        }
      }
      if (!mono_ok) break;
    }
  }
  out.add("Q+- strictly decreasing in k (d <= " + std::to_string(max_degree_mono) + ")", mono_ok,
          mono_detail);

  // eqE interval comparison agrees with sign(L) on the full grid
  bool grid_ok = true;
  std::string grid_detail;
  for (int d = 2; d <= max_degree_grid && grid_ok; ++d)
    for (int m = 1; m < d && grid_ok; ++m)
      for (int n = 1; m + n <= d && grid_ok; ++n) {
        int sL = sgn(L_value(d, m, n));
        bool e = eqE_holds(d, m, n);
        bool match = (sL > 0) == e;
        // at L = 0 the endpoints coincide exactly, so eqE (strict) is false
        if (sL == 0 && !e) match = true;
        if (sL == 0 && e) match = false;
        if (!match) {
          grid_ok = false;
          grid_detail = "d=" + std::to_string(d) + " m=" + std::to_string(m) +
                        " n=" + std::to_string(n);
        }
      }
  out.add("eqE agrees with sign(L) (d <= " + std::to_string(max_degree_grid) + ")", grid_ok,
          grid_detail);

  // at the sharp couples the surd endpoints coincide exactly
  bool sharp_ok = cmp_qminus_qplus(9, 2, 5) == 0 && cmp_qminus_qplus(10, 1, 4) == 0;
  out.add("exact endpoint equality at the two sharp couples", sharp_ok);
  return out;
}

BatteryReport run_inequality_battery(uint64_t seed, int trials) {
  BatteryReport out;
  std::mt19937_64 rng(seed);
  auto rnd_rat = [&](long lo, long hi, long den) {
    std::uniform_int_distribution<long> n(lo, hi), d(1, den);
    return frac(n(rng), d(rng));
  };

  // Descartes conditions for constructed polynomials
  int fails = 0;
  int per_bucket = trials / 4;
  for (int t = 0; t < per_bucket; ++t) {
    std::uniform_int_distribution<int> cnt(0, 3);
    RootSpec spec;
    int nn = cnt(rng), np = cnt(rng), nc = cnt(rng);
    if (nn + np + 2 * nc < 1) nn = 1;
    bool distinct = true;
    for (int i = 0; i < nn; ++i) {
      Rat u = rnd_rat(1, 40, 6);
      for (const auto& x : spec.neg_roots)
        if (x == u) distinct = false;
      spec.neg_roots.push_back(u);
    }
    for (int i = 0; i < np; ++i) {
      Rat r = rnd_rat(1, 40, 6);
      for (const auto& x : spec.pos_roots)
        if (x == r) distinct = false;
      spec.pos_roots.push_back(r);
    }
    for (int i = 0; i < nc; ++i) {
      Rat z = rnd_rat(-12, 12, 4);
      spec.complex_pairs.push_back({z, z * z / 4 + rnd_rat(1, 9, 3)});
    }
    if (!distinct) continue;
    RatPoly p = expand_from_spec(spec);
    bool zero_coeff = false;
    for (const auto& c : p.coeffs())
      if (sgn(c) == 0) zero_coeff = true;
    if (zero_coeff) continue;
    auto pat = pattern_of(p);
    auto [c, pr] = changes_preservations(pat);
    auto [pos, neg] = count_pos_neg(p);
    bool ok = pos == static_cast<int>(spec.pos_roots.size()) &&
              neg == static_cast<int>(spec.neg_roots.size()) && pos <= c && neg <= pr &&
              (c - pos) % 2 == 0 && (pr - neg) % 2 == 0 &&
              ((pos % 2 == 0) == (pat.last() > 0));
    if (!ok) ++fails;
  }
  out.add("Descartes conditions hold for expanded root specs", fails == 0,
          fails ? std::to_string(fails) + " failures" : "");

  // Newton log-concavity for negative-rooted expansions
  fails = 0;
  for (int t = 0; t < per_bucket; ++t) {
    std::uniform_int_distribution<int> cnt(2, 9);
    int k = cnt(rng);
    RootSpec spec;
    for (int i = 0; i < k; ++i) spec.neg_roots.push_back(rnd_rat(1, 60, 8));
    RatPoly r = expand_from_spec(spec);
    // Newton's form with binomial weights
    int d = r.degree();
    bool ok = true;
    for (int j = 1; j <= d - 1; ++j) {
      Rat lhs = r.coeff(j) / Rat(binomial(d, j));
      lhs = lhs * lhs;
      Rat rhs = (r.coeff(j - 1) / Rat(binomial(d, j - 1))) * (r.coeff(j + 1) / Rat(binomial(d, j + 1)));
      if (!(lhs >= rhs)) ok = false;
    }
    if (!ok) ++fails;
  }
  out.add("Newton inequalities for negative-rooted expansions", fails == 0,
          fails ? std::to_string(fails) + " failures" : "");

  // e1^2 e2 + 4 e4 > 4 e1 e3 for positive samples of length 4..12
  fails = 0;
  for (int t = 0; t < per_bucket; ++t) {
    std::uniform_int_distribution<int> len(4, 12);
    std::vector<Rat> vals;
    int k = len(rng);
    for (int i = 0; i < k; ++i) vals.push_back(rnd_rat(1, 50, 7));
    if (!check_e_inequality(vals)) ++fails;
  }
  out.add("e1^2 e2 + 4 e4 > 4 e1 e3 on positive samples", fails == 0,
          fails ? std::to_string(fails) + " failures" : "");

  // induction-step inequality: a^3 e1 + 2 a^2 e1^2 + a e1^3 > 3 a^2 e2 + 2 a e1 e2
  fails = 0;
  for (int t = 0; t < per_bucket / 2; ++t) {
    std::uniform_int_distribution<int> len(2, 8);
    std::vector<Rat> vals;
    int k = len(rng);
    for (int i = 0; i < k; ++i) vals.push_back(rnd_rat(1, 30, 5));
    auto e = elementary_symmetric(vals);
    Rat a = rnd_rat(1, 30, 5);
    Rat lhs = a * a * a * e[0] + 2 * a * a * e[0] * e[0] + a * e[0] * e[0] * e[0];
    Rat rhs = 3 * a * a * e[1] + 2 * a * e[0] * e[1];
    if (!(lhs > rhs)) ++fails;
  }
  out.add("induction-step inequality on positive samples", fails == 0,
          fails ? std::to_string(fails) + " failures" : "");

  // reverse/scale invariants
  fails = 0;
  for (int t = 0; t < per_bucket / 2; ++t) {
    std::uniform_int_distribution<int> cnt(1, 4);
    RootSpec spec;
    int nn = cnt(rng), nc = cnt(rng) / 2;
    for (int i = 0; i < nn; ++i) spec.neg_roots.push_back(rnd_rat(1, 20, 4));
    for (int i = 0; i < nc; ++i) {
      Rat z = rnd_rat(1, 10, 3);
      spec.complex_pairs.push_back({z, z * z / 4 + rnd_rat(1, 6, 3)});
    }
    RatPoly p = expand_from_spec(spec);
    bool zero_coeff = false;
    for (const auto& c : p.coeffs())
      if (sgn(c) == 0) zero_coeff = true;
    if (zero_coeff) continue;
    if (!(p.reverted().reverted() == p)) ++fails;
    Rat chi = rnd_rat(1, 9, 3);
    RatPoly s = p.scaled_x(chi);
    if (!(pattern_of(s) == pattern_of(p))) ++fails;
    // reversal flips the pattern when the constant sign allows it
    if (sgn(p.coeff(0)) > 0) {
      RatPoly rv = p.reverted();
      RatPoly rvm = rv * (1 / rv.leading());
      if (!(pattern_of(rvm) == pattern_of(p).reversed())) ++fails;
    }
  }
  out.add("reverse/scale invariants", fails == 0, fails ? std::to_string(fails) + " failures" : "");
  return out;
}

BatteryReport run_oracle_consistency(int max_degree) {
  BatteryReport out;
  struct Couple {
    ThreeBlockPattern tb;
    AdmissiblePair ap;
  };
  std::vector<Couple> nonreal;
  for (int d = 3; d <= max_degree; ++d)
    for (int m = 1; m <= d - 1; ++m)
      for (int n = 1; m + n <= d; ++n) {
        ThreeBlockPattern tb(m, n, d + 1 - m - n);
        auto sp = tb.pattern();
        for (const auto& ap : admissible_pairs(sp)) {
          if (ap.pos != 0) continue;
          auto cls = classify(sp, ap, {.attach_witness = false});
          if (cls.status == Status::NonRealizable) nonreal.push_back({tb, ap});
        }
      }
  std::vector<CheckReport> results(nonreal.size());
  parallel_for(nonreal.size(), [&](size_t i) {
    const auto& [tb, ap] = nonreal[i];
    std::string name = "no witness for " + tb.str() + " (" + std::to_string(ap.pos) + "," +
                       std::to_string(ap.neg) + ")";
    auto hit = grid_search(tb.pattern(), ap, GridSpec{}, 200000);
    results[i] = {name, !hit.has_value(), hit ? "oracle found " + hit->poly.codec() : ""};
  });
  for (auto& r : results) out.add(r.name, r.pass, r.detail);

  // the S(1,3,1)/(0,2) dense-grid exhaustion
  GridSpec dense;
  dense.root_min = Rat(1, 4);
  dense.root_step = Rat(1, 4);
  dense.root_count = 20;
  dense.y_step = Rat(1, 4);
  dense.y_count = 20;
  auto hit = grid_search(ThreeBlockPattern(1, 3, 1).pattern(), {0, 2}, dense, 2000000);
  out.add("S(1,3,1)/(0,2) dense grid exhausts with no witness", !hit.has_value(),
          hit ? hit->poly.codec() : "");
  return out;
}

}  // namespace descartes
