#pragma once

#include <descartes/rat.hpp>

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace descartes {

/// Univariate polynomial with exact rational coefficients, stored in
/// ascending order: coeff(j) multiplies x^j. The zero polynomial has an
/// empty coefficient vector and degree -1.
class RatPoly {
 public:
  RatPoly() = default;
  explicit RatPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

  static RatPoly zero() { return RatPoly(); }
  static RatPoly constant(const Rat& a) { return RatPoly({a}); }
  /// a1*x + a0
  static RatPoly linear(const Rat& a0, const Rat& a1) { return RatPoly({a0, a1}); }
  /// x - r
  static RatPoly x_minus(const Rat& r) { return RatPoly({-r, Rat(1)}); }
  /// x + u
  static RatPoly x_plus(const Rat& u) { return RatPoly({u, Rat(1)}); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const Rat& leading() const;
  Rat coeff(int j) const { return (j >= 0 && j < (int)c_.size()) ? c_[j] : Rat(0); }
  const std::vector<Rat>& coeffs() const { return c_; }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }

  /// Coefficient of x^{d-j}, the descending-index accessor used by parts of
  /// the analysis that write P = x^d + sum p_j x^{d-j}.
  Rat coeff_from_top(int j) const { return coeff(degree() - j); }

  RatPoly operator+(const RatPoly& o) const;
  RatPoly operator-(const RatPoly& o) const;
  RatPoly operator*(const RatPoly& o) const;
  RatPoly operator-() const;
  RatPoly operator*(const Rat& s) const;
  bool operator==(const RatPoly& o) const { return c_ == o.c_; }

  RatPoly derivative() const;
  RatPoly pow(unsigned e) const;
  Rat eval(const Rat& x) const;
  int sign_at(const Rat& x) const { return sgn(eval(x)); }
  int sign_at_pos_inf() const;
  int sign_at_neg_inf() const;

  /// x^d * P(1/x): reverses the coefficient sequence. Requires P(0) != 0
  /// (otherwise the reversal would drop degree).
  RatPoly reverted() const;

  /// chi^{-deg} * P(chi*x) for chi > 0: maps every root r to r/chi and
  /// preserves all coefficient signs; monic stays monic.
  RatPoly scaled_x(const Rat& chi) const;

  /// Text codec: ascending "num/den" list, comma separated. Bit-exact
  /// round trip, e.g. x^3-2x^2-2x+12 <-> "12/1,-2/1,-2/1,1/1".
  std::string codec() const;
  static RatPoly parse_codec(const std::string& s);

 private:
  void trim();
  std::vector<Rat> c_;
};

/// Quadratic factor x^2 - z*x + y; admissible when z^2 < 4y exactly.
struct ComplexPair {
  Rat z, y;
  bool valid() const { return z * z < 4 * y; }
};

/// Root placement data: negative roots -u (u > 0), positive roots r > 0,
/// and complex-conjugate pairs given by their quadratic factors.
struct RootSpec {
  std::vector<Rat> neg_roots;  // stored as the positive magnitudes u
  std::vector<Rat> pos_roots;
  std::vector<ComplexPair> complex_pairs;

  int degree() const {
    return (int)neg_roots.size() + (int)pos_roots.size() + 2 * (int)complex_pairs.size();
  }
  bool reals_distinct() const;
};

/// Monic product of all factors. Throws if a pair has z^2 >= 4y or a listed
/// real magnitude is not positive.
RatPoly expand_from_spec(const RootSpec& spec);

/// e_1..e_k of the given values, exact.
std::vector<Rat> elementary_symmetric(const std::vector<Rat>& values);

/// Sturm chain over the integers (primitive pseudo-remainder sequence).
/// Counts distinct real roots exactly; multiplicity does not matter.
class SturmChain {
 public:
  explicit SturmChain(const RatPoly& p);

  /// Distinct real roots in the open interval (lo, hi); nullopt = infinite
  /// endpoint. Throws if a finite endpoint is itself a root.
  int count(const std::optional<Rat>& lo, const std::optional<Rat>& hi) const;

  int sign_at(const Rat& x) const;  // sign of P at x
  bool is_root(const Rat& x) const { return sign_at(x) == 0; }

 private:
  int variations_at(const std::optional<Rat>& x, bool at_pos_inf) const;
  std::vector<std::vector<Int>> chain_;
};

/// Distinct real roots of p in the open interval (lo, hi); endpoints may be
/// infinite (nullopt). Finite endpoints must not be roots.
int count_real_roots(const RatPoly& p, const std::optional<Rat>& lo, const std::optional<Rat>& hi);

/// (#distinct roots in (0,inf), #distinct roots in (-inf,0)). Requires
/// P(0) != 0.
std::pair<int, int> count_pos_neg(const RatPoly& p);

/// gcd(P, P') is constant.
bool is_square_free(const RatPoly& p);

/// Primitive integer gcd (content removed, positive leading coefficient).
RatPoly poly_gcd(const RatPoly& a, const RatPoly& b);

/// B with all real roots of p inside (-B, B).
Rat root_bound(const RatPoly& p);

/// Isolating interval for one distinct real root: either an exact rational
/// root (point) or an open interval (lo, hi) containing exactly one root,
/// with p(lo), p(hi) != 0.
struct IsolatedRoot {
  Rat lo, hi;
  bool exact = false;
  Rat mid() const { return exact ? lo : (lo + hi) / 2; }
};

/// All distinct real roots of p in (lo, hi), sorted ascending. Infinite
/// endpoints via nullopt.
std::vector<IsolatedRoot> isolate_real_roots(const RatPoly& p, const std::optional<Rat>& lo,
                                             const std::optional<Rat>& hi);

/// Shrinks the isolating interval until hi - lo <= width (no-op for exact
/// roots). The chain must belong to the same polynomial.
void refine_root(const SturmChain& chain, IsolatedRoot& r, const Rat& width);

}  // namespace descartes
