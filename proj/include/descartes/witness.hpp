#pragma once

#include <descartes/criteria.hpp>
#include <descartes/signpat.hpp>

#include <map>
#include <optional>
#include <string>

namespace descartes {

/// A certified witness: the polynomial re-verifies against its target
/// pattern and admissible pair via sign inspection plus Sturm counts.
struct Witness {
  RatPoly poly;
  std::string construction;          // "concat" | "thm2" | "shift" | "paper-fixture" | ...
  std::map<std::string, Rat> params; // epsilon/eta/t/y/z as applicable
};

/// eps^{deg P2} * P1(x) * P2(x/eps): merges two realizing polynomials.
RatPoly concatenate(const RatPoly& p1, const RatPoly& p2, const Rat& eps);

/// Halves eps from 1 until the concatenation carries exactly the target
/// pattern and Sturm-certified counts. Throws std::runtime_error when the
/// budget is exhausted (misuse or a false target).
std::pair<Rat, RatPoly> find_epsilon(const RatPoly& p1, const RatPoly& p2,
                                     const SignPattern& target, const AdmissiblePair& target_ap,
                                     int max_halvings = 64);

/// Witness for (sigma, (c,p)) by a chain of d-1 concatenations with x+1 / x-1.
Witness realize_pair_cp(const SignPattern& sigma);

/// Witness for any admissible pair of a pattern with c <= 1.
Witness realize_c0_c1(const SignPattern& sigma, const AdmissiblePair& ap);

struct Thm2Result {
  Rat y, z;
  RatPoly poly;  // (x+1)^{d-2} (x^2 - z x + y), expanded
};

/// Rational (y, z) with z^2 < 4y making (x+1)^{d-2}(x^2-zx+y) carry the
/// pattern S(m,n,q), q = d+1-m-n. Requires L_value(d,m,n) > 0.
Thm2Result theorem2_construct(int d, int m, int n);

/// Replaces (x+1)^count by prod_i (x+1+i*eta) next to the definite quadratic
/// factor; eta found by halving from 1/(2d) until the pattern is unchanged
/// and the Sturm counts are (0, count).
RatPoly perturb_to_distinct(int count, const ComplexPair& quad, Rat* eta_out = nullptr);

/// P + t (or P - t when the constant term is negative) losing exactly k
/// pairs of negative roots; the sign pattern is preserved and the result is
/// re-certified by Sturm. Returns the explicit threshold t used.
std::pair<Rat, RatPoly> shift_to_ap(const RatPoly& p, int k);

/// Witness with counts (0, d-2) for a three-block pattern, when one of the
/// realizability criteria applies; nullopt otherwise.
std::optional<Witness> realize_three_block(const ThreeBlockPattern& tb);

/// Dispatcher: certified witness for (sigma, ap) when the constructive
/// machinery covers the couple; nullopt otherwise. Never refutes.
std::optional<Witness> build_witness(const SignPattern& sigma, const AdmissiblePair& ap);

/// pattern_of(poly) == sigma and count_pos_neg(poly) == ap.
bool certify_witness(const RatPoly& poly, const SignPattern& sigma, const AdmissiblePair& ap);

}  // namespace descartes
