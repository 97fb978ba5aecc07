#pragma once

#include <descartes/signpat.hpp>

#include <cstdint>
#include <optional>

namespace descartes {

/// Deterministic root-placement grid. Real-root magnitudes walk
/// root_min, root_min+root_step, ..., (root_count values); quadratic factors
/// x^2-zx+y walk z over +-(same ladder) and, per z, y over y_count steps of
/// y_step starting just above z^2/4 (so z^2 < 4y always holds).
struct GridSpec {
  Rat root_min = Rat(1, 2);
  Rat root_step = Rat(1, 2);
  int root_count = 10;
  Rat y_step = Rat(1, 2);
  int y_count = 10;
};

struct SearchResult {
  RatPoly poly;
  RootSpec spec;
  uint64_t candidates_tried = 0;
};

/// Enumerates root placements over the grid in a documented deterministic
/// order and returns the first candidate whose pattern and Sturm-certified
/// counts match. Exhaustion (nullopt) is NOT a nonrealizability claim.
std::optional<SearchResult> grid_search(const SignPattern& sigma, const AdmissiblePair& ap,
                                        const GridSpec& grid = {}, uint64_t budget = 200000);

/// Seeded pseudorandom placement; deterministic given the seed.
std::optional<SearchResult> random_search(const SignPattern& sigma, const AdmissiblePair& ap,
                                          uint64_t seed, uint64_t budget = 20000);

}  // namespace descartes
