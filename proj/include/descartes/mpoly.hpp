#pragma once

#include <descartes/ratpoly.hpp>

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace descartes {

/// Multivariate polynomial with exact integer coefficients over a fixed,
/// ordered variable set (subset of {a, v, w, V, W}). No zero terms stored;
/// mixing different variable sets is rejected.
class IntMPoly {
 public:
  using Exps = std::vector<unsigned>;

  explicit IntMPoly(std::vector<std::string> vars);
  static IntMPoly constant(std::vector<std::string> vars, const Int& c);
  static IntMPoly variable(std::vector<std::string> vars, const std::string& name);
  static IntMPoly monomial(std::vector<std::string> vars, const Exps& e, const Int& c);

  const std::vector<std::string>& vars() const { return vars_; }
  const std::map<Exps, Int>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  size_t term_count() const { return t_.size(); }
  bool is_constant() const;
  bool is_monomial() const { return t_.size() == 1; }

  IntMPoly operator+(const IntMPoly& o) const;
  IntMPoly operator-(const IntMPoly& o) const;
  IntMPoly operator*(const IntMPoly& o) const;
  IntMPoly operator-() const;
  IntMPoly operator*(const Int& c) const;
  bool operator==(const IntMPoly& o) const { return vars_ == o.vars_ && t_ == o.t_; }
  IntMPoly pow(unsigned e) const;

  int degree_in(const std::string& var) const;
  /// Coefficient of var^k as a polynomial over the same variable set (with
  /// that exponent zeroed).
  IntMPoly coeff_in(const std::string& var, unsigned k) const;
  int total_degree() const;
  bool is_homogeneous() const;

  Rat eval(const std::map<std::string, Rat>& point) const;

  /// Substitutes var := shift + fresh, renaming the slot to `fresh`.
  IntMPoly subst_affine(const std::string& var, const Int& shift, const std::string& fresh) const;

  /// Exact division; nullopt when the divisor does not divide evenly.
  std::optional<IntMPoly> divide_exact(const IntMPoly& divisor) const;

  /// Restricts to the given variable subset; every dropped variable must
  /// have exponent zero in all terms.
  IntMPoly project(const std::vector<std::string>& keep) const;

  bool all_coeffs_positive() const;
  bool all_coeffs_nonnegative() const;

  /// Requires at most one variable with nonzero exponents; returns that
  /// ascending coefficient vector.
  RatPoly to_univariate() const;

  /// Sorted term list "c*V^i*W^j" joined with +/-; graded lex, bit-exact.
  std::string str() const;
  static IntMPoly parse(std::vector<std::string> vars, const std::string& s);

 private:
  void set(const Exps& e, Int c);
  size_t index_of(const std::string& var) const;
  void check_compatible(const IntMPoly& o) const;
  std::vector<std::string> vars_;
  std::map<Exps, Int> t_;
};

/// Determinant of the Sylvester matrix of P and Q with respect to var.
/// Both inputs must have positive degree in var.
IntMPoly resultant_in(const IntMPoly& p, const IntMPoly& q, const std::string& var);

/// True iff every stored coefficient is > 0 and at least one term exists.
bool check_all_coeffs_positive(const IntMPoly& p);

/// Type P: positive leading coefficient and no real root in [0, inf).
/// Input must be univariate (after ignoring zero-exponent slots).
bool check_type_p(const IntMPoly& p);
bool check_type_p(const RatPoly& p);

/// One certificate piece: multiplier * (alpha*X^2 + beta*X*Y + gamma*Y^2)
/// with alpha > 0 and beta^2 - 4*alpha*gamma < 0; X, Y monic monomials.
struct QuadFormPiece {
  IntMPoly multiplier;
  Int alpha, beta, gamma;
  IntMPoly x_mono, y_mono;
};

/// One certificate piece: multiplier * H where H is a homogeneous form in
/// two variables whose dehomogenization is type P.
struct TypePPiece {
  IntMPoly multiplier;
  IntMPoly form;
  std::string main_var, sub_var;  // dehomogenize by main := x, sub := 1
};

using CertPiece = std::variant<QuadFormPiece, TypePPiece>;

struct QuadraticFormCertificate {
  std::vector<CertPiece> pieces;
};

struct CertVerification {
  bool ok = false;
  bool strict = false;       // strictly positive on the open positive orthant
  IntMPoly residual;         // target minus the expanded pieces
  std::string error;
  CertVerification() : residual(std::vector<std::string>{}) {}
};

/// Checks every piece invariant, expands the pieces, and verifies the
/// residual target - sum(pieces) has only nonnegative coefficients. On sum
/// mismatch the exact residual is reported.
CertVerification verify_certificate(const IntMPoly& target, const QuadraticFormCertificate& cert);

}  // namespace descartes
