#pragma once

#include <descartes/mpoly.hpp>
#include <descartes/signpat.hpp>

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace descartes {

/// One case of the degree-9/10 nonrealizability analysis:
/// P = (x+1)^{s1} (x+v)^{s2} (x+w)^{s3} (x-a)^2 with s1+s2+s3 = d-2.
/// Two-block cases set s3 = 0 (univariate w machinery); the all-ones case
/// sets s2 = s3 = 0. (mu, nu) are the ascending coefficient indices whose
/// simultaneous negativity is refuted.
struct Prop3Case {
  int d;
  std::array<int, 3> blocks;
  int mu, nu;
  std::string label;
};

/// p_j as a quadratic in a with IntMPoly coefficients over (v, w):
/// p_j = c2*a^2 + c1*a + c0.
struct QuadraticInA {
  IntMPoly c0, c1, c2;
  IntMPoly full(const IntMPoly& a_var) const;  // reassemble over (a,v,w)
};

/// Symbolic coefficients p_j for j = 2..d-2 (each exactly quadratic in a);
/// index [j-2].
std::vector<QuadraticInA> build_case(const Prop3Case& c);

/// Full coefficient list p_0..p_d over (a, v, w).
std::vector<IntMPoly> case_coeffs(const Prop3Case& c);

/// Certificate attached to a case: either the shifted resultant has all
/// coefficients positive, or the paper's grouping certificate applies
/// (optionally after exact division by a positive monomial).
struct CaseCertificate {
  enum Kind { AllPositive, Grouping } kind = AllPositive;
  QuadraticFormCertificate cert;          // for Grouping
  std::optional<IntMPoly> divisor;        // positive monomial divided out first
};

struct CaseReport {
  std::string name;
  int d = 0;
  std::array<int, 3> blocks{0, 0, 0};
  bool leading_positive = false;   // lead coeffs of p_mu, p_nu positive in (v,w)
  bool resultant_ok = false;       // certified positive for V,W > 0
  bool ordering_ok = false;        // y1<y2<y3<y4 at the sample point
  bool b0_reduction_ok = false;    // R's coefficients all positive (b >= 0 soundness)
  bool pass = false;
  std::string detail;
};

/// Runs the three checks of the three-block analysis for one case at the
/// sample point (v,w) = (2,2).
CaseReport verify_case(const Prop3Case& c, const CaseCertificate& cert);

/// Exact root-interleaving check at a rational sample: both quadratics must
/// have positive leading coefficient and positive discriminant there; the
/// four roots must satisfy y1 < y2 <= y3 < y4, with y2 == y3 (tangency)
/// tolerated only when the resultant vanishes at the sample. Sets *tangent
/// accordingly. Throws on nonpositive discriminant.
bool check_root_ordering(const QuadraticInA& pmu, const QuadraticInA& pnu, const Rat& v,
                         const Rat& w, bool* tangent = nullptr);

/// Strict log-concavity r_k^2 > r_{k-1} r_{k+1} of the coefficients of a
/// polynomial with all roots real negative; implies each p_{k+1}(a) has two
/// distinct positive roots.
bool check_newton_quadratic(const RatPoly& r);

/// e1^2 e2 + 4 e4 > 4 e1 e3 for the elementary symmetric functions of the
/// given positive values (length >= 4).
bool check_e_inequality(const std::vector<Rat>& values);

/// Exact reversal transfer: p_j of case (t1,t2,t3) at (v/a, v, v/w), cleared
/// by a^2 w^{t3}, equals v^{d-j-t1} * p_{d-j} of case (t2,t1,t3). Proven by
/// evaluation on an integer grid exceeding all degree bounds.
bool verify_reversal_identity(int d, const std::array<int, 3>& derived, int mu, int nu);

struct SuiteReport {
  std::vector<CaseReport> cases;
  bool pass = true;
};

/// The full battery: d=9 S(2,4,4) (nine cases, all-positive), d=9 S(3,4,3)
/// (four quoted certificates + five reversal-derived cases), d=10 S(2,4,5)
/// (twelve cases), the (6,1)/(7,1) two-block lemmas and the all-ones cases.
SuiteReport run_prop3_suite();

}  // namespace descartes
