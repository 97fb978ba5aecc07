#include <descartes/oracle.hpp>
#include <descartes/witness.hpp>

#include <random>
#include <stdexcept>

namespace descartes {

namespace {

/// Next k-combination of indices 0..n-1 in lexicographic order.
bool next_combination(std::vector<int>& idx, int n) {
  int k = static_cast<int>(idx.size());
  for (int i = k - 1; i >= 0; --i) {
    if (idx[i] < n - (k - i)) {
      ++idx[i];
      for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

bool counts_shape(const SignPattern& sigma, const AdmissiblePair& ap, int& pairs) {
  int d = sigma.degree();
  int rem = d - ap.pos - ap.neg;
  if (rem < 0 || rem % 2) return false;
  pairs = rem / 2;
  return true;
}

std::optional<SearchResult> try_candidate(const RootSpec& spec, const SignPattern& sigma,
                                          const AdmissiblePair& ap, uint64_t tried) {
  RatPoly p = expand_from_spec(spec);
  for (const auto& c : p.coeffs())
    if (sgn(c) == 0) return std::nullopt;
  if (!certify_witness(p, sigma, ap)) return std::nullopt;
  return SearchResult{std::move(p), spec, tried};
}

}  // namespace

std::optional<SearchResult> grid_search(const SignPattern& sigma, const AdmissiblePair& ap,
                                        const GridSpec& grid, uint64_t budget) {
  if (!is_admissible(sigma, ap)) throw std::invalid_argument("grid_search: inadmissible pair");
  int pairs = 0;
  if (!counts_shape(sigma, ap, pairs)) return std::nullopt;

  std::vector<Rat> ladder;
  for (int i = 0; i < grid.root_count; ++i) ladder.push_back(grid.root_min + i * grid.root_step);
  std::vector<Rat> zvals;
  for (const auto& r : ladder) {
    zvals.push_back(r);
    zvals.push_back(-r);
  }

  // enumeration order: negative-root combination, then positive-root
  // combination, then complex pairs by (z index, y index), first match wins
  uint64_t tried = 0;
  std::vector<int> negidx(ap.neg), posidx(ap.pos);
  for (int i = 0; i < ap.neg; ++i) negidx[i] = i;
  bool neg_ok = ap.neg <= grid.root_count || ap.neg == 0;
  if (!neg_ok || ap.pos > grid.root_count) return std::nullopt;
  do {
    for (int i = 0; i < ap.pos; ++i) posidx[i] = i;
    do {
      // complex pair tuples: odometer over pairs dimensions
      std::vector<int> zi(pairs, 0), yi(pairs, 0);
      while (true) {
        RootSpec spec;
        for (int i : negidx) spec.neg_roots.push_back(ladder[i]);
        for (int i : posidx) spec.pos_roots.push_back(ladder[i]);
        bool pair_ok = true;
        for (int t = 0; t < pairs; ++t) {
          Rat z = zvals[zi[t]];
          // smallest grid y with z^2 < 4y: first multiple of y_step above z^2/4
          Rat base = z * z / 4;
          Rat steps = base / grid.y_step;
          Int k;
          mpz_fdiv_q(k.get_mpz_t(), steps.get_num().get_mpz_t(), steps.get_den().get_mpz_t());
          Rat y0 = (Rat(k) + 1) * grid.y_step;
          Rat y = y0 + yi[t] * grid.y_step;
          if (!(z * z < 4 * y)) pair_ok = false;
          spec.complex_pairs.push_back({z, y});
        }
        if (pair_ok) {
          ++tried;
          if (tried > budget) return std::nullopt;
          auto hit = try_candidate(spec, sigma, ap, tried);
          if (hit) return hit;
        }
        // advance odometer; a single pass suffices when there are no pairs
        int t = pairs - 1;
        for (; t >= 0; --t) {
          if (++yi[t] < grid.y_count) break;
          yi[t] = 0;
          if (++zi[t] < static_cast<int>(zvals.size())) break;
          zi[t] = 0;
        }
        if (t < 0) break;
      }
    } while (ap.pos > 0 && next_combination(posidx, grid.root_count));
  } while (ap.neg > 0 && next_combination(negidx, grid.root_count));
  return std::nullopt;
}

std::optional<SearchResult> random_search(const SignPattern& sigma, const AdmissiblePair& ap,
                                          uint64_t seed, uint64_t budget) {
  if (!is_admissible(sigma, ap)) throw std::invalid_argument("random_search: inadmissible pair");
  int pairs = 0;
  if (!counts_shape(sigma, ap, pairs)) return std::nullopt;
  std::mt19937_64 rng(seed);
  auto rnd_rat = [&](long num_lo, long num_hi, long den_hi) {
    std::uniform_int_distribution<long> num(num_lo, num_hi), den(1, den_hi);
    return frac(num(rng), den(rng));
  };
  for (uint64_t tried = 1; tried <= budget; ++tried) {
    RootSpec spec;
    bool ok = true;
    for (int i = 0; i < ap.neg && ok; ++i) {
      Rat u = rnd_rat(1, 12, 4);
      for (const auto& x : spec.neg_roots)
        if (x == u) ok = false;
      spec.neg_roots.push_back(u);
    }
    for (int i = 0; i < ap.pos && ok; ++i) {
      Rat r = rnd_rat(1, 12, 4);
      for (const auto& x : spec.pos_roots)
        if (x == r) ok = false;
      spec.pos_roots.push_back(r);
    }
    for (int i = 0; i < pairs && ok; ++i) {
      Rat z = rnd_rat(-12, 12, 4);
      Rat y = z * z / 4 + rnd_rat(1, 8, 4);
      spec.complex_pairs.push_back({z, y});
    }
    if (!ok) continue;
    auto hit = try_candidate(spec, sigma, ap, tried);
    if (hit) return hit;
  }
  return std::nullopt;
}

}  // namespace descartes
