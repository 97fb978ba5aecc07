#include <descartes/mpoly.hpp>

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace descartes {

IntMPoly::IntMPoly(std::vector<std::string> vars) : vars_(std::move(vars)) {}

IntMPoly IntMPoly::constant(std::vector<std::string> vars, const Int& c) {
  IntMPoly p(std::move(vars));
  if (c != 0) p.t_[Exps(p.vars_.size(), 0)] = c;
  return p;
}

IntMPoly IntMPoly::variable(std::vector<std::string> vars, const std::string& name) {
  IntMPoly p(std::move(vars));
  Exps e(p.vars_.size(), 0);
  e[p.index_of(name)] = 1;
  p.t_[e] = 1;
  return p;
}

IntMPoly IntMPoly::monomial(std::vector<std::string> vars, const Exps& e, const Int& c) {
  IntMPoly p(std::move(vars));
  if (e.size() != p.vars_.size()) throw std::invalid_argument("monomial: exponent arity mismatch");
  if (c != 0) p.t_[e] = c;
  return p;
}

bool IntMPoly::is_constant() const {
  if (t_.empty()) return true;
  if (t_.size() > 1) return false;
  const auto& e = t_.begin()->first;
  return std::all_of(e.begin(), e.end(), [](unsigned x) { return x == 0; });
}

size_t IntMPoly::index_of(const std::string& var) const {
  for (size_t i = 0; i < vars_.size(); ++i)
    if (vars_[i] == var) return i;
  throw std::invalid_argument("unknown variable: " + var);
}

void IntMPoly::check_compatible(const IntMPoly& o) const {
  if (vars_ != o.vars_) throw std::invalid_argument("variable sets differ");
}

void IntMPoly::set(const Exps& e, Int c) {
  if (c == 0)
    t_.erase(e);
  else
    t_[e] = std::move(c);
}

IntMPoly IntMPoly::operator+(const IntMPoly& o) const {
  check_compatible(o);
  IntMPoly r = *this;
  for (const auto& [e, c] : o.t_) {
    auto it = r.t_.find(e);
    if (it == r.t_.end())
      r.t_[e] = c;
    else {
      it->second += c;
      if (it->second == 0) r.t_.erase(it);
    }
  }
  return r;
}

IntMPoly IntMPoly::operator-() const {
  IntMPoly r = *this;
  for (auto& [e, c] : r.t_) c = -c;
  return r;
}

IntMPoly IntMPoly::operator-(const IntMPoly& o) const { return *this + (-o); }

IntMPoly IntMPoly::operator*(const IntMPoly& o) const {
  check_compatible(o);
  IntMPoly r(vars_);
  for (const auto& [e1, c1] : t_)
    for (const auto& [e2, c2] : o.t_) {
      Exps e(e1.size());
      for (size_t i = 0; i < e.size(); ++i) e[i] = e1[i] + e2[i];
      auto it = r.t_.find(e);
      if (it == r.t_.end()) {
        Int prod = c1 * c2;
        if (prod != 0) r.t_[e] = std::move(prod);
      } else {
        it->second += c1 * c2;
        if (it->second == 0) r.t_.erase(it);
      }
    }
  return r;
}

IntMPoly IntMPoly::operator*(const Int& c) const {
  IntMPoly r(vars_);
  if (c == 0) return r;
  r.t_ = t_;
  for (auto& [e, v] : r.t_) v *= c;
  return r;
}

IntMPoly IntMPoly::pow(unsigned e) const {
  IntMPoly r = IntMPoly::constant(vars_, 1);
  IntMPoly b = *this;
  while (e) {
    if (e & 1) r = r * b;
    b = b * b;
    e >>= 1;
  }
  return r;
}

int IntMPoly::degree_in(const std::string& var) const {
  size_t i = index_of(var);
  int d = -1;
  for (const auto& [e, c] : t_) d = std::max(d, static_cast<int>(e[i]));
  return d;
}

IntMPoly IntMPoly::coeff_in(const std::string& var, unsigned k) const {
  size_t i = index_of(var);
  IntMPoly r(vars_);
  for (const auto& [e, c] : t_)
    if (e[i] == k) {
      Exps e2 = e;
      e2[i] = 0;
      r.t_[e2] = c;
    }
  return r;
}

int IntMPoly::total_degree() const {
  int d = -1;
  for (const auto& [e, c] : t_)
    d = std::max(d, static_cast<int>(std::accumulate(e.begin(), e.end(), 0u)));
  return d;
}

bool IntMPoly::is_homogeneous() const {
  if (t_.empty()) return true;
  unsigned d = std::accumulate(t_.begin()->first.begin(), t_.begin()->first.end(), 0u);
  for (const auto& [e, c] : t_)
    if (std::accumulate(e.begin(), e.end(), 0u) != d) return false;
  return true;
}

Rat IntMPoly::eval(const std::map<std::string, Rat>& point) const {
  std::vector<Rat> vals;
  for (const auto& v : vars_) {
    auto it = point.find(v);
    if (it == point.end()) throw std::invalid_argument("eval: missing value for " + v);
    vals.push_back(it->second);
  }
  Rat acc(0);
  for (const auto& [e, c] : t_) {
    Rat term{c};
    for (size_t i = 0; i < e.size(); ++i)
      if (e[i]) term *= rat_pow(vals[i], e[i]);
    acc += term;
  }
  return acc;
}

IntMPoly IntMPoly::subst_affine(const std::string& var, const Int& shift,
                                const std::string& fresh) const {
  size_t i = index_of(var);
  if (fresh != var)
    for (const auto& v : vars_)
      if (v == fresh) throw std::invalid_argument("subst_affine: target variable not fresh");
  std::vector<std::string> nv = vars_;
  nv[i] = fresh;
  IntMPoly r(nv);
  for (const auto& [e, c] : t_) {
    unsigned k = e[i];
    // c * (shift + fresh)^k * rest
    for (unsigned j = 0; j <= k; ++j) {
      Exps e2 = e;
      e2[i] = j;
      Int coef = c * binomial(k, j) * int_pow(shift, k - j);
      auto it = r.t_.find(e2);
      if (it == r.t_.end()) {
        if (coef != 0) r.t_[e2] = coef;
      } else {
        it->second += coef;
        if (it->second == 0) r.t_.erase(it);
      }
    }
  }
  return r;
}

std::optional<IntMPoly> IntMPoly::divide_exact(const IntMPoly& divisor) const {
  check_compatible(divisor);
  if (divisor.is_zero()) throw std::invalid_argument("division by zero polynomial");
  IntMPoly rem = *this;
  IntMPoly quot(vars_);
  // leading term of divisor under the map's (lex) term order
  const auto& dlead = *divisor.t_.rbegin();
  while (!rem.is_zero()) {
    const auto& rlead = *rem.t_.rbegin();
    Exps e(rlead.first.size());
    for (size_t i = 0; i < e.size(); ++i) {
      if (rlead.first[i] < dlead.first[i]) return std::nullopt;
      e[i] = rlead.first[i] - dlead.first[i];
    }
    Int q = rlead.second / dlead.second;
    if (q * dlead.second != rlead.second) return std::nullopt;
    IntMPoly t = IntMPoly::monomial(vars_, e, q);
    quot = quot + t;
    rem = rem - t * divisor;
  }
  return quot;
}

IntMPoly IntMPoly::project(const std::vector<std::string>& keep) const {
  std::vector<size_t> idx;
  for (const auto& name : keep) idx.push_back(index_of(name));
  IntMPoly r(keep);
  for (const auto& [e, c] : t_) {
    Exps e2(keep.size(), 0);
    for (size_t i = 0; i < keep.size(); ++i) e2[i] = e[idx[i]];
    unsigned total = 0, kept = 0;
    for (auto x : e) total += x;
    for (auto x : e2) kept += x;
    if (total != kept)
      throw std::invalid_argument("project: dropped variable has nonzero exponent");
    r.t_[e2] = c;
  }
  return r;
}

bool IntMPoly::all_coeffs_positive() const {
  if (t_.empty()) return false;
  for (const auto& [e, c] : t_)
    if (sgn(c) <= 0) return false;
  return true;
}

bool IntMPoly::all_coeffs_nonnegative() const {
  for (const auto& [e, c] : t_)
    if (sgn(c) < 0) return false;
  return true;
}

RatPoly IntMPoly::to_univariate() const {
  int which = -1;
  for (size_t i = 0; i < vars_.size(); ++i)
    for (const auto& [e, c] : t_)
      if (e[i] > 0) {
        if (which != -1 && which != static_cast<int>(i))
          throw std::invalid_argument("to_univariate: more than one active variable");
        which = static_cast<int>(i);
      }
  std::vector<Rat> coeffs;
  for (const auto& [e, c] : t_) {
    unsigned k = which < 0 ? 0 : e[which];
    if (coeffs.size() <= k) coeffs.resize(k + 1, Rat(0));
    coeffs[k] += Rat(c);
  }
  return RatPoly(std::move(coeffs));
}

std::string IntMPoly::str() const {
  if (t_.empty()) return "0";
  // graded lex: total degree first, then exponent vector
  std::vector<std::pair<Exps, Int>> terms(t_.begin(), t_.end());
  std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
    unsigned da = std::accumulate(a.first.begin(), a.first.end(), 0u);
    unsigned db = std::accumulate(b.first.begin(), b.first.end(), 0u);
    if (da != db) return da < db;
    return a.first < b.first;
  });
  std::string out;
  for (size_t t = 0; t < terms.size(); ++t) {
    const auto& [e, c] = terms[t];
    Int ac = abs(c);
    if (t == 0)
      out += (sgn(c) < 0 ? "-" : "");
    else
      out += (sgn(c) < 0 ? "-" : "+");
    out += ac.get_str();
    for (size_t i = 0; i < e.size(); ++i)
      if (e[i]) out += "*" + vars_[i] + "^" + std::to_string(e[i]);
  }
  return out;
}

IntMPoly IntMPoly::parse(std::vector<std::string> vars, const std::string& s) {
  IntMPoly r(vars);
  if (s.empty() || s == "0") return r;
  size_t i = 0;
  while (i < s.size()) {
    int sign = 1;
    if (s[i] == '+') ++i;
    else if (s[i] == '-') { sign = -1; ++i; }
    size_t j = i;
    while (j < s.size() && s[j] != '+' && s[j] != '-') ++j;
    std::string term = s.substr(i, j - i);
    i = j;
    // split on '*'
    std::vector<std::string> parts;
    std::stringstream ss(term);
    std::string tok;
    while (std::getline(ss, tok, '*')) parts.push_back(tok);
    if (parts.empty()) throw std::invalid_argument("bad term in: " + s);
    Int coef(parts[0]);
    Exps e(vars.size(), 0);
    for (size_t k = 1; k < parts.size(); ++k) {
      auto caret = parts[k].find('^');
      std::string name = caret == std::string::npos ? parts[k] : parts[k].substr(0, caret);
      unsigned ex = caret == std::string::npos
                        ? 1u
                        : static_cast<unsigned>(std::stoul(parts[k].substr(caret + 1)));
      e[r.index_of(name)] += ex;
    }
    Int val = coef * sign;
    auto it = r.t_.find(e);
    if (it == r.t_.end()) {
      if (val != 0) r.t_[e] = val;
    } else {
      it->second += val;
      if (it->second == 0) r.t_.erase(it);
    }
  }
  return r;
}

// ---------------------------------------------------------------------------

namespace {

IntMPoly det(std::vector<std::vector<IntMPoly>>& m, std::vector<int>& cols, size_t row,
             const std::vector<std::string>& vars) {
  if (cols.empty()) return IntMPoly::constant(vars, 1);
  IntMPoly acc(vars);
  for (size_t k = 0; k < cols.size(); ++k) {
    int col = cols[k];
    const IntMPoly& entry = m[row][col];
    if (entry.is_zero()) continue;
    std::vector<int> rest;
    rest.reserve(cols.size() - 1);
    for (size_t t = 0; t < cols.size(); ++t)
      if (t != k) rest.push_back(cols[t]);
    IntMPoly sub = det(m, rest, row + 1, vars);
    IntMPoly term = entry * sub;
    if (k % 2)
      acc = acc - term;
    else
      acc = acc + term;
  }
  return acc;
}

}  // namespace

IntMPoly resultant_in(const IntMPoly& p, const IntMPoly& q, const std::string& var) {
  int m = p.degree_in(var), n = q.degree_in(var);
  if (m <= 0 || n <= 0)
    throw std::invalid_argument("resultant_in: both inputs must have positive degree in " + var);
  size_t size = static_cast<size_t>(m + n);
  std::vector<std::vector<IntMPoly>> mat(size, std::vector<IntMPoly>(size, IntMPoly(p.vars())));
  // n rows of p coefficients, then m rows of q coefficients (descending)
  for (int r = 0; r < n; ++r)
    for (int k = 0; k <= m; ++k) mat[r][r + k] = p.coeff_in(var, static_cast<unsigned>(m - k));
  for (int r = 0; r < m; ++r)
    for (int k = 0; k <= n; ++k) mat[n + r][r + k] = q.coeff_in(var, static_cast<unsigned>(n - k));
  std::vector<int> cols(size);
  for (size_t i = 0; i < size; ++i) cols[i] = static_cast<int>(i);
  return det(mat, cols, 0, p.vars());
}

bool check_all_coeffs_positive(const IntMPoly& p) { return p.all_coeffs_positive(); }

bool check_type_p(const RatPoly& f) {
  if (f.is_zero()) throw std::invalid_argument("check_type_p: zero polynomial");
  if (sgn(f.leading()) <= 0) return false;
  if (f.degree() == 0) return true;
  if (f.eval(Rat(0)) == 0) return false;
  return count_real_roots(f, Rat(0), std::nullopt) == 0;
}

bool check_type_p(const IntMPoly& p) { return check_type_p(p.to_univariate()); }

CertVerification verify_certificate(const IntMPoly& target, const QuadraticFormCertificate& cert) {
  CertVerification out;
  out.residual = IntMPoly(target.vars());
  IntMPoly sum(target.vars());
  for (size_t i = 0; i < cert.pieces.size(); ++i) {
    const auto& piece = cert.pieces[i];
    if (std::holds_alternative<QuadFormPiece>(piece)) {
      const auto& qf = std::get<QuadFormPiece>(piece);
      if (!qf.multiplier.is_monomial() || !qf.multiplier.all_coeffs_positive()) {
        out.error = "piece " + std::to_string(i) + ": multiplier is not a positive monomial";
        return out;
      }
      if (sgn(qf.alpha) <= 0 || sgn(qf.beta * qf.beta - 4 * qf.alpha * qf.gamma) >= 0) {
        out.error = "piece " + std::to_string(i) + ": quadratic form not positive definite";
        return out;
      }
      if (!qf.x_mono.is_monomial() || !qf.y_mono.is_monomial()) {
        out.error = "piece " + std::to_string(i) + ": X/Y must be monomials";
        return out;
      }
      IntMPoly form = qf.x_mono * qf.x_mono * qf.alpha + qf.x_mono * qf.y_mono * qf.beta +
                      qf.y_mono * qf.y_mono * qf.gamma;
      sum = sum + qf.multiplier * form;
    } else {
      const auto& tp = std::get<TypePPiece>(piece);
      if (!tp.multiplier.is_monomial() || !tp.multiplier.all_coeffs_positive()) {
        out.error = "piece " + std::to_string(i) + ": multiplier is not a positive monomial";
        return out;
      }
      if (!tp.form.is_homogeneous()) {
        out.error = "piece " + std::to_string(i) + ": form is not homogeneous";
        return out;
      }
      // dehomogenize main := x, sub := 1
      size_t mi = 0;
      std::vector<Rat> coeffs;
      for (size_t v = 0; v < tp.form.vars().size(); ++v)
        if (tp.form.vars()[v] == tp.main_var) mi = v;
      for (const auto& [e, c] : tp.form.terms()) {
        for (size_t v = 0; v < e.size(); ++v)
          if (e[v] && tp.form.vars()[v] != tp.main_var && tp.form.vars()[v] != tp.sub_var) {
            out.error = "piece " + std::to_string(i) + ": form uses extra variables";
            return out;
          }
        unsigned k = e[mi];
        if (coeffs.size() <= k) coeffs.resize(k + 1, Rat(0));
        coeffs[k] += Rat(c);
      }
      if (!check_type_p(RatPoly(std::move(coeffs)))) {
        out.error = "piece " + std::to_string(i) + ": dehomogenized form is not type P";
        return out;
      }
      sum = sum + tp.multiplier * tp.form;
    }
  }
  out.residual = target - sum;
  if (!out.residual.all_coeffs_nonnegative()) {
    out.error = "residual has negative coefficients: " + out.residual.str();
    return out;
  }
  out.ok = true;
  out.strict = !cert.pieces.empty();
  return out;
}

}  // namespace descartes
