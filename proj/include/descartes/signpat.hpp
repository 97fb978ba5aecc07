#pragma once

#include <descartes/ratpoly.hpp>

#include <compare>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace descartes {

/// Sequence of d+1 signs, first entry +, recording the coefficient signs of
/// a monic degree-d polynomial from leading to constant term.
class SignPattern {
 public:
  explicit SignPattern(std::vector<int8_t> signs);
  static SignPattern parse(const std::string& s);  // "+--+" or "S(m,n,q)"

  int degree() const { return static_cast<int>(s_.size()) - 1; }
  int size() const { return static_cast<int>(s_.size()); }
  int8_t at(int i) const { return s_[i]; }  // +1 or -1; index 0 = leading
  int8_t last() const { return s_.back(); }
  std::string str() const;

  /// Pattern of P^R: the sequence reversed. Valid only when the constant
  /// sign is + (the reversed sequence must again start with +).
  SignPattern reversed() const;

  /// Pattern defined by P(-x) after monic normalization; swaps the roles of
  /// sign changes and preservations.
  SignPattern negated_x() const;

  bool operator==(const SignPattern& o) const { return s_ == o.s_; }
  auto operator<=>(const SignPattern& o) const { return s_ <=> o.s_; }

 private:
  std::vector<int8_t> s_;
};

/// Three-block pattern S(m,n,q): m pluses, n minuses, q pluses; degree
/// d = m+n+q-1, exactly two sign changes.
struct ThreeBlockPattern {
  int m, n, q;
  ThreeBlockPattern(int m_, int n_, int q_);
  int degree() const { return m + n + q - 1; }
  SignPattern pattern() const;
  ThreeBlockPattern reversed() const { return {q, n, m}; }
  std::string str() const;
};

/// Detects the three-block shape; nullopt unless the pattern has exactly
/// two sign changes.
std::optional<ThreeBlockPattern> as_three_block(const SignPattern& s);

struct AdmissiblePair {
  int pos = 0, neg = 0;
  bool operator==(const AdmissiblePair& o) const = default;
  auto operator<=>(const AdmissiblePair& o) const = default;
};

/// (c, p): numbers of adjacent sign changes and sign preservations.
std::pair<int, int> changes_preservations(const SignPattern& s);

/// All (pos, neg) satisfying the Descartes conditions for this pattern:
/// pos <= c, neg <= p, c-pos and p-neg even, (-1)^pos = last sign.
std::set<AdmissiblePair> admissible_pairs(const SignPattern& s);

bool is_admissible(const SignPattern& s, const AdmissiblePair& ap);

/// Sign pattern of a polynomial with positive leading coefficient and no
/// zero coefficient. Throws otherwise.
SignPattern pattern_of(const RatPoly& p);

}  // namespace descartes
