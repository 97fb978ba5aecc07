#include <descartes/signpat.hpp>

#include <stdexcept>

namespace descartes {

SignPattern::SignPattern(std::vector<int8_t> signs) : s_(std::move(signs)) {
  if (s_.size() < 2) throw std::invalid_argument("sign pattern needs length >= 2");
  for (auto v : s_)
    if (v != 1 && v != -1) throw std::invalid_argument("sign pattern entries must be +-1");
  if (s_[0] != 1) throw std::invalid_argument("sign pattern must start with +");
}

SignPattern SignPattern::parse(const std::string& s) {
  if (s.rfind("S(", 0) == 0 || s.rfind("s(", 0) == 0) {
    if (s.back() != ')') throw std::invalid_argument("malformed block pattern: " + s);
    std::string body = s.substr(2, s.size() - 3);
    int vals[3], n = 0;
    size_t pos = 0;
    while (n < 3) {
      size_t comma = body.find(',', pos);
      std::string tok = body.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
      vals[n++] = std::stoi(tok);
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
    if (n != 3) throw std::invalid_argument("block pattern needs three components: " + s);
    return ThreeBlockPattern(vals[0], vals[1], vals[2]).pattern();
  }
  std::vector<int8_t> v;
  for (char c : s) {
    if (c == '+')
      v.push_back(1);
    else if (c == '-')
      v.push_back(-1);
    else
      throw std::invalid_argument(std::string("bad sign character: ") + c);
  }
  return SignPattern(std::move(v));
}

std::string SignPattern::str() const {
  std::string out;
  for (auto v : s_) out += (v > 0 ? '+' : '-');
  return out;
}

SignPattern SignPattern::reversed() const {
  if (s_.back() != 1)
    throw std::domain_error("reversed pattern would not start with +; constant sign is -");
  return SignPattern(std::vector<int8_t>(s_.rbegin(), s_.rend()));
}

SignPattern SignPattern::negated_x() const {
  // coefficient a_j of x^j picks up (-1)^j; then normalize so the leading
  // entry is +. Entry i corresponds to x^{d-i}.
  int d = degree();
  std::vector<int8_t> v(s_.size());
  int8_t lead = ((d % 2) == 0) ? int8_t(1) : int8_t(-1);  // sign factor of x^d
  for (int i = 0; i <= d; ++i) {
    int j = d - i;
    int8_t f = ((j % 2) == 0) ? int8_t(1) : int8_t(-1);
    v[i] = static_cast<int8_t>(s_[i] * f * lead);
  }
  return SignPattern(std::move(v));
}

ThreeBlockPattern::ThreeBlockPattern(int m_, int n_, int q_) : m(m_), n(n_), q(q_) {
  if (m < 1 || n < 1 || q < 1) throw std::invalid_argument("block sizes must be >= 1");
}

SignPattern ThreeBlockPattern::pattern() const {
  std::vector<int8_t> v;
  v.insert(v.end(), m, int8_t(1));
  v.insert(v.end(), n, int8_t(-1));
  v.insert(v.end(), q, int8_t(1));
  return SignPattern(std::move(v));
}

std::string ThreeBlockPattern::str() const {
  return "S(" + std::to_string(m) + "," + std::to_string(n) + "," + std::to_string(q) + ")";
}

std::optional<ThreeBlockPattern> as_three_block(const SignPattern& s) {
  auto [c, p] = changes_preservations(s);
  if (c != 2) return std::nullopt;
  int m = 0, i = 0;
  while (i < s.size() && s.at(i) > 0) ++m, ++i;
  int n = 0;
  while (i < s.size() && s.at(i) < 0) ++n, ++i;
  int q = s.size() - m - n;
  return ThreeBlockPattern(m, n, q);
}

std::pair<int, int> changes_preservations(const SignPattern& s) {
  int c = 0;
  for (int i = 1; i < s.size(); ++i)
    if (s.at(i) != s.at(i - 1)) ++c;
  return {c, s.degree() - c};
}

std::set<AdmissiblePair> admissible_pairs(const SignPattern& s) {
  auto [c, p] = changes_preservations(s);
  std::set<AdmissiblePair> out;
  for (int pos = c; pos >= 0; pos -= 2)
    for (int neg = p; neg >= 0; neg -= 2) out.insert({pos, neg});
  return out;
}

bool is_admissible(const SignPattern& s, const AdmissiblePair& ap) {
  auto [c, p] = changes_preservations(s);
  return ap.pos >= 0 && ap.neg >= 0 && ap.pos <= c && ap.neg <= p && (c - ap.pos) % 2 == 0 &&
         (p - ap.neg) % 2 == 0;
}

SignPattern pattern_of(const RatPoly& p) {
  if (p.is_zero() || p.degree() < 1) throw std::invalid_argument("pattern_of: degree >= 1 required");
  if (sgn(p.leading()) <= 0)
    throw std::invalid_argument("pattern_of: leading coefficient must be positive");
  std::vector<int8_t> v;
  for (int j = p.degree(); j >= 0; --j) {
    int s = sgn(p.coeff(j));
    if (s == 0) throw std::invalid_argument("not a sign-pattern polynomial: zero coefficient");
    v.push_back(static_cast<int8_t>(s));
  }
  return SignPattern(std::move(v));
}

}  // namespace descartes
