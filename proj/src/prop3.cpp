#include <descartes/prop3.hpp>

#include <stdexcept>

namespace descartes {

namespace {

const std::vector<std::string> kAVW = {"a", "v", "w"};
const std::vector<std::string> kVW = {"v", "w"};
const std::vector<std::string> kShifted = {"V", "W"};

IntMPoly c_avw(long v) { return IntMPoly::constant(kAVW, Int(v)); }

/// P = (x+1)^{s1} (x+v)^{s2} (x+w)^{s3} (x-a)^2 as coefficients in x over
/// (a, v, w); returns the ascending coefficient list.
std::vector<IntMPoly> expand_case(const Prop3Case& c) {
  auto mul = [](const std::vector<IntMPoly>& p, const std::vector<IntMPoly>& f) {
    std::vector<IntMPoly> r(p.size() + f.size() - 1, IntMPoly(kAVW));
    for (size_t i = 0; i < p.size(); ++i)
      for (size_t j = 0; j < f.size(); ++j) r[i + j] = r[i + j] + p[i] * f[j];
    return r;
  };
  std::vector<IntMPoly> poly = {c_avw(1)};
  IntMPoly one = c_avw(1);
  IntMPoly a = IntMPoly::variable(kAVW, "a");
  IntMPoly v = IntMPoly::variable(kAVW, "v");
  IntMPoly w = IntMPoly::variable(kAVW, "w");
  for (int i = 0; i < c.blocks[0]; ++i) poly = mul(poly, {one, one});
  for (int i = 0; i < c.blocks[1]; ++i) poly = mul(poly, {v, one});
  for (int i = 0; i < c.blocks[2]; ++i) poly = mul(poly, {w, one});
  poly = mul(poly, {a * a, -(a * Int(2)), one});
  if (static_cast<int>(poly.size()) != c.d + 1) throw std::logic_error("expand_case: degree mismatch");
  return poly;
}

}  // namespace

IntMPoly QuadraticInA::full(const IntMPoly& a_var) const {
  return c2 * a_var * a_var + c1 * a_var + c0;
}

std::vector<IntMPoly> case_coeffs(const Prop3Case& c) { return expand_case(c); }

std::vector<QuadraticInA> build_case(const Prop3Case& c) {
  auto coeffs = expand_case(c);
  std::vector<QuadraticInA> out;
  for (int j = 2; j <= c.d - 2; ++j) {
    const IntMPoly& pj = coeffs[j];
    if (pj.degree_in("a") != 2)
      throw std::logic_error("build_case: p_" + std::to_string(j) + " is not quadratic in a");
    out.push_back({pj.coeff_in("a", 0).project(kVW), pj.coeff_in("a", 1).project(kVW),
                   pj.coeff_in("a", 2).project(kVW)});
  }
  return out;
}

namespace {

/// sign of u*sqrt(D1) + v*sqrt(D2) - rhs, for u,v >= 0, D1,D2 >= 0.
int cmp_sqrt_combo(const Rat& u, const Rat& d1, const Rat& v, const Rat& d2, const Rat& rhs) {
  if (sgn(rhs) < 0) return 1;
  Rat s = rhs * rhs - u * u * d1 - v * v * d2;
  if (sgn(s) < 0) return 1;
  Rat cross = 4 * u * u * v * v * d1 * d2;
  if (sgn(s) == 0) return sgn(cross) > 0 ? 1 : 0;
  Rat ss = s * s;
  if (cross > ss) return 1;
  if (cross < ss) return -1;
  return 0;
}

struct QuadRoots {
  Rat a, b, c;  // a x^2 + b x + c, a > 0, disc > 0
  Rat disc() const { return b * b - 4 * a * c; }
};

/// sign of (upper root of q1) - (lower root of q2), i.e.
/// (-b1 + sqrt(D1))/(2 a1) vs (-b2 - sqrt(D2))/(2 a2):
/// sign( 2 a2 sqrt(D1) + 2 a1 sqrt(D2) - (2 a2 b1 - 2 a1 b2) ).
int cmp_upper_vs_lower(const QuadRoots& q1, const QuadRoots& q2) {
  Rat rhs = 2 * q2.a * q1.b - 2 * q1.a * q2.b;
  return cmp_sqrt_combo(2 * q2.a, q1.disc(), 2 * q1.a, q2.disc(), rhs);
}

Rat quad_resultant(const QuadRoots& p, const QuadRoots& q) {
  return (p.a * q.c - q.a * p.c) * (p.a * q.c - q.a * p.c) -
         (p.a * q.b - q.a * p.b) * (p.b * q.c - q.b * p.c);
}

}  // namespace

bool check_root_ordering(const QuadraticInA& pmu, const QuadraticInA& pnu, const Rat& v,
                         const Rat& w, bool* tangent) {
  std::map<std::string, Rat> pt{{"v", v}, {"w", w}};
  QuadRoots q1{pmu.c2.eval(pt), pmu.c1.eval(pt), pmu.c0.eval(pt)};
  QuadRoots q2{pnu.c2.eval(pt), pnu.c1.eval(pt), pnu.c0.eval(pt)};
  if (sgn(q1.a) <= 0 || sgn(q2.a) <= 0)
    throw std::domain_error("check_root_ordering: nonpositive leading coefficient at sample");
  if (sgn(q1.disc()) <= 0 || sgn(q2.disc()) <= 0)
    throw std::domain_error("check_root_ordering: nonpositive discriminant at sample");
  int cmp = cmp_upper_vs_lower(q1, q2);  // y2 vs y3
  bool tan = (cmp == 0);
  if (tangent) *tangent = tan;
  if (cmp > 0) return false;
  if (tan && sgn(quad_resultant(q1, q2)) != 0) return false;  // equality demands a shared root
  return true;
}

bool check_newton_quadratic(const RatPoly& r) {
  int d = r.degree();
  if (d < 2) return true;  // no interior index
  for (int k = 1; k <= d - 1; ++k) {
    Rat lhs = r.coeff(k) * r.coeff(k);
    Rat rhs = r.coeff(k - 1) * r.coeff(k + 1);
    if (!(lhs > rhs)) return false;
  }
  return true;
}

bool check_e_inequality(const std::vector<Rat>& values) {
  if (values.size() < 4) throw std::invalid_argument("check_e_inequality: need length >= 4");
  for (const auto& v : values)
    if (sgn(v) <= 0) throw std::invalid_argument("check_e_inequality: values must be positive");
  auto e = elementary_symmetric(values);
  return e[0] * e[0] * e[1] + 4 * e[3] > 4 * e[0] * e[2];
}

bool verify_reversal_identity(int d, const std::array<int, 3>& t, int mu, int nu) {
  std::array<int, 3> base{t[1], t[0], t[2]};
  Prop3Case derived_case{d, t, mu, nu, ""};
  Prop3Case base_case{d, base, mu, nu, ""};
  auto pd = expand_case(derived_case);
  auto pb = expand_case(base_case);
  // p_j^{t}(v/a, v, v/w) * a^2 * w^{t3} == v^{d-j-t1} * p_{d-j}^{base}(a,v,w)
  // grid sizes exceed every degree bound (a: <=2, v: <= d+3, w: <= d-2)
  for (int j : {mu, nu}) {
    int e = d - j - t[0];
    if (e < 0) return false;
    for (long av = 1; av <= 3; ++av)
      for (long vv = 1; vv <= d + 5; ++vv)
        for (long wv = 1; wv <= d + 1; ++wv) {
          Rat a(av), v(vv), w(wv);
          std::map<std::string, Rat> lhs_pt{{"a", v / a}, {"v", v}, {"w", v / w}};
          Rat lhs = pd[j].eval(lhs_pt) * a * a * rat_pow(w, static_cast<unsigned>(t[2]));
          std::map<std::string, Rat> rhs_pt{{"a", a}, {"v", v}, {"w", w}};
          Rat rhs = rat_pow(v, static_cast<unsigned>(e)) * pb[d - j].eval(rhs_pt);
          if (lhs != rhs) return false;
        }
  }
  return true;
}

CaseReport verify_case(const Prop3Case& c, const CaseCertificate& cert) {
  CaseReport rep;
  rep.name = c.label;
  rep.d = c.d;
  rep.blocks = c.blocks;
  auto coeffs = expand_case(c);
  const IntMPoly& pmu = coeffs[c.mu];
  const IntMPoly& pnu = coeffs[c.nu];

  // (b>=0 soundness) the b-linear part R has all coefficients positive in (v,w)
  {
    rep.b0_reduction_ok = true;
    // coefficients of R = product of the linear factors only
    std::vector<IntMPoly> r = {IntMPoly::constant(kAVW, 1)};
    auto mul1 = [&](const IntMPoly& root) {
      std::vector<IntMPoly> nr(r.size() + 1, IntMPoly(kAVW));
      for (size_t i = 0; i < r.size(); ++i) {
        nr[i] = nr[i] + r[i] * root;
        nr[i + 1] = nr[i + 1] + r[i];
      }
      r = nr;
    };
    for (int i = 0; i < c.blocks[0]; ++i) mul1(IntMPoly::constant(kAVW, 1));
    for (int i = 0; i < c.blocks[1]; ++i) mul1(IntMPoly::variable(kAVW, "v"));
    for (int i = 0; i < c.blocks[2]; ++i) mul1(IntMPoly::variable(kAVW, "w"));
    for (const auto& rc : r)
      if (!rc.all_coeffs_positive()) rep.b0_reduction_ok = false;
  }

  // (a) leading coefficients in a are positive for all v,w > 0
  IntMPoly lead_mu = pmu.coeff_in("a", 2).project(kVW);
  IntMPoly lead_nu = pnu.coeff_in("a", 2).project(kVW);
  rep.leading_positive = lead_mu.all_coeffs_positive() && lead_nu.all_coeffs_positive();

  // (b) certified positivity of the resultant on v,w > 1
  IntMPoly res = resultant_in(pmu, pnu, "a").project(kVW);
  IntMPoly work = res;
  if (cert.divisor) {
    auto q = work.divide_exact(*cert.divisor);
    if (!q || !cert.divisor->all_coeffs_positive()) {
      rep.detail = "divisor does not divide the resultant exactly";
      return rep;
    }
    work = *q;
  }
  IntMPoly shifted = work.subst_affine("v", 1, "V").subst_affine("w", 1, "W");
  if (cert.kind == CaseCertificate::AllPositive) {
    rep.resultant_ok = check_all_coeffs_positive(shifted);
    if (!rep.resultant_ok) rep.detail = "shifted resultant has nonpositive coefficients";
  } else {
    auto vr = verify_certificate(shifted, cert.cert);
    rep.resultant_ok = vr.ok;
    if (!vr.ok) rep.detail = vr.error;
  }

  // (c) sample-point interleaving y1 < y2 < y3 < y4 at (v,w) = (2,2)
  auto quads = build_case(c);
  bool tangent = false;
  rep.ordering_ok =
      check_root_ordering(quads[c.mu - 2], quads[c.nu - 2], Rat(2), Rat(2), &tangent) && !tangent;

  rep.pass = rep.leading_positive && rep.resultant_ok && rep.ordering_ok && rep.b0_reduction_ok;
  return rep;
}

// ---------------------------------------------------------------------------
// Fixture tables (transcribed groupings; the declared substitution is
// v = 1+V, w = 1+W and the mixed-variable names are canonicalized to V, W)

namespace {

IntMPoly mono_vw(unsigned ev, unsigned ew, long c = 1) {
  return IntMPoly::monomial(kShifted, {ev, ew}, Int(c));
}

CertPiece qf(unsigned mv, unsigned mw, long alpha, long beta, long gamma, unsigned xe = 1,
             unsigned ye = 1) {
  QuadFormPiece p{mono_vw(mv, mw), Int(alpha), Int(beta), Int(gamma), mono_vw(xe, 0),
                  mono_vw(0, ye)};
  // stored as alpha*X^2 + beta*X*Y + gamma*Y^2 with X = V^xe, Y = W^ye
  return p;
}

CertPiece tp(unsigned mv, unsigned mw, const std::string& form) {
  return TypePPiece{mono_vw(mv, mw), IntMPoly::parse(kShifted, form), "V", "W"};
}

struct Entry {
  Prop3Case c;
  CaseCertificate cert;
};

std::vector<Entry> three_block_entries() {
  std::vector<Entry> out;
  auto add = [&](int d, std::array<int, 3> b, int mu, int nu, const std::string& tag,
                 CaseCertificate cert) {
    std::string label = "d=" + std::to_string(d) + " " + tag + " (" + std::to_string(b[0]) + "," +
                        std::to_string(b[1]) + "," + std::to_string(b[2]) + ")";
    out.push_back({Prop3Case{d, b, mu, nu, label}, std::move(cert)});
  };
  const std::array<std::array<int, 3>, 9> cases9 = {{{5, 1, 1},
                                                     {4, 2, 1},
                                                     {3, 3, 1},
                                                     {3, 2, 2},
                                                     {2, 4, 1},
                                                     {2, 3, 2},
                                                     {1, 5, 1},
                                                     {1, 4, 2},
                                                     {1, 3, 3}}};
  // d=9, S(2,4,4): all nine shifted resultants have positive coefficients
  for (const auto& b : cases9) add(9, b, 4, 7, "S(2,4,4)", CaseCertificate{});

  // d=9, S(3,4,3): the four directly quoted certificates
  {
    CaseCertificate c511;
    c511.kind = CaseCertificate::Grouping;
    c511.cert.pieces = {qf(0, 0, 28224, -9408, 28224)};
    add(9, {5, 1, 1}, 3, 6, "S(3,4,3)", std::move(c511));
    CaseCertificate c421;
    c421.kind = CaseCertificate::Grouping;
    c421.cert.pieces = {qf(0, 0, 47040, -18816, 28224)};
    add(9, {4, 2, 1}, 3, 6, "S(3,4,3)", std::move(c421));
    CaseCertificate c331;
    c331.kind = CaseCertificate::Grouping;
    c331.cert.pieces = {qf(0, 0, 56448, -28224, 28224), qf(1, 0, 282240, -42336, 127008)};
    add(9, {3, 3, 1}, 3, 6, "S(3,4,3)", std::move(c331));
    CaseCertificate c322;
    c322.kind = CaseCertificate::Grouping;
    c322.cert.pieces = {qf(0, 0, 47040, -37632, 47040)};
    add(9, {3, 2, 2}, 3, 6, "S(3,4,3)", std::move(c322));
  }

  // d=10, S(2,4,5): twelve cases
  {
    auto add10 = [&](std::array<int, 3> b, CaseCertificate cert) {
      add(10, b, 5, 8, "S(2,4,5)", std::move(cert));
    };
    CaseCertificate e;
    e.kind = CaseCertificate::Grouping;
    e.cert.pieces = {qf(0, 0, 35721, -10206, 35721)};
    add10({6, 1, 1}, e);
    e.cert.pieces = {qf(0, 0, 61236, -20412, 35721)};
    add10({5, 2, 1}, e);
    e.cert.pieces = {qf(0, 0, 76545, -30618, 35721), qf(1, 0, 221130, -10206, 91854)};
    add10({4, 3, 1}, e);
    e.cert.pieces = {qf(0, 0, 61236, -40824, 61236)};
    add10({4, 2, 2}, e);
    e.cert.pieces = {qf(0, 0, 81648, -40824, 35721), qf(1, 0, 326592, -81648, 122472)};
    add10({3, 4, 1}, e);
    e.cert.pieces = {qf(0, 0, 76545, -61236, 61236), qf(1, 0, 221130, -20412, 81648)};
    add10({3, 3, 2}, e);
    e.cert.pieces = {qf(0, 0, 76545, -51030, 35721), qf(1, 0, 391230, -187110, 153090),
                     qf(2, 0, 868725, -245430, 297270), qf(3, 0, 1094472, -86670, 352350)};
    add10({2, 5, 1}, e);
    e.cert.pieces = {qf(0, 0, 81648, -81648, 61236), qf(1, 0, 326592, -163296, 108864)};
    add10({2, 4, 2}, e);
    e.cert.pieces = {qf(0, 0, 76545, -91854, 76545), qf(0, 0, 273375, -59778, 273375, 2, 2),
                     tp(0, 0, "221130*V^3-30618*V^2*W^1-30618*V^1*W^2+221130*W^3")};
    add10({2, 3, 3}, e);
    // (1,6,1): the quoted pieces certify Res / (9 v^2)
    CaseCertificate c161;
    c161.kind = CaseCertificate::Grouping;
    c161.divisor = IntMPoly::monomial(kVW, {2u, 0u}, Int(9));
    c161.cert.pieces = {qf(0, 0, 6804, -6804, 3969), qf(1, 0, 28728, -22680, 12474),
                        qf(2, 0, 50436, -29052, 15849), qf(4, 0, 24628, -3252, 3672),
                        qf(3, 0, 47088, -16848, 10368)};
    add10({1, 6, 1}, c161);
    e.cert.pieces = {
        qf(0, 0, 76545, -102060, 61236), qf(1, 0, 391230, -374220, 136080),
        tp(0, 0, "868725*V^4-490860*V^3*W^1+10530*V^2*W^2+369360*V^1*W^3+79704*W^4"),
        tp(2, 0, "1094472*V^3-173340*V^2*W^1-210600*V^1*W^2+513540*W^3"),
        qf(2, 0, 855450, -215190, 372915, 2, 2), qf(4, 1, 300060, -64116, 176760)};
    add10({1, 5, 2}, e);
    e.cert.pieces = {qf(0, 0, 81648, -122472, 76545), qf(0, 0, 565056, -383940, 273375, 2, 2),
                     tp(0, 0, "326592*V^3-244944*V^2*W^1-40824*V^1*W^2+221130*W^3"),
                     qf(1, 0, 552096, -359649, 557928, 2, 2),
                     tp(0, 0, "332928*V^6-75816*V^3*W^3+79065*W^6"),
                     tp(1, 0, "126720*V^6-15066*V^3*W^3+138096*W^6")};
    add10({1, 4, 3}, e);
  }
  return out;
}

/// Reversal-derived S(3,4,3) cases with their direct bases.
const std::array<std::array<int, 3>, 5> kDerived343 = {
    {{1, 5, 1}, {2, 4, 1}, {1, 4, 2}, {1, 3, 3}, {2, 3, 2}}};

}  // namespace

SuiteReport run_prop3_suite() {
  SuiteReport out;
  for (const auto& e : three_block_entries()) out.cases.push_back(verify_case(e.c, e.cert));

  // S(3,4,3) derived cases: exact reversal identity + own sample ordering
  for (const auto& t : kDerived343) {
    CaseReport rep;
    rep.d = 9;
    rep.blocks = t;
    rep.name = "d=9 S(3,4,3) (" + std::to_string(t[0]) + "," + std::to_string(t[1]) + "," +
               std::to_string(t[2]) + ") via reversal of (" + std::to_string(t[1]) + "," +
               std::to_string(t[0]) + "," + std::to_string(t[2]) + ")";
    Prop3Case c{9, t, 3, 6, rep.name};
    rep.resultant_ok = verify_reversal_identity(9, t, 3, 6);
    if (!rep.resultant_ok) rep.detail = "reversal identity failed";
    auto quads = build_case(c);
    bool tangent = false;
    rep.ordering_ok = check_root_ordering(quads[1], quads[4], Rat(2), Rat(2), &tangent) && !tangent;
    auto coeffs = expand_case(c);
    rep.leading_positive = coeffs[3].coeff_in("a", 2).project(kVW).all_coeffs_positive() &&
                           coeffs[6].coeff_in("a", 2).project(kVW).all_coeffs_positive();
    rep.b0_reduction_ok = true;
    rep.pass = rep.resultant_ok && rep.ordering_ok && rep.leading_positive;
    out.cases.push_back(rep);
  }

  // two-block cases (6,1) at d=9 (both index pairs) and (7,1) at d=10, plus
  // the all-ones cases: univariate-in-w resultants and sample orderings
  auto two_block = [&](int d, std::array<int, 3> blocks, int mu, int nu,
                       const std::vector<Rat>& samples, const std::string& label) {
    CaseReport rep;
    rep.name = label;
    rep.d = d;
    rep.blocks = blocks;
    Prop3Case c{d, blocks, mu, nu, label};
    auto coeffs = expand_case(c);
    rep.b0_reduction_ok = true;
    rep.leading_positive = coeffs[mu].coeff_in("a", 2).project(kVW).all_coeffs_positive() &&
                           coeffs[nu].coeff_in("a", 2).project(kVW).all_coeffs_positive();
    IntMPoly res = resultant_in(coeffs[mu], coeffs[nu], "a").project(kVW);
    RatPoly rw = res.to_univariate();
    // positive roots of Res(w) may only sit at w = 1 (the shared-root point)
    RatPoly deflated = rw;
    bool tangent_at_one = false;
    while (deflated.degree() >= 1 && deflated.eval(Rat(1)) == 0) {
      tangent_at_one = true;
      // synthetic division by (x - 1)
      std::vector<Rat> qc(deflated.degree(), Rat(0));
      Rat carry = deflated.coeff(deflated.degree());
      for (int i = deflated.degree() - 1; i >= 0; --i) {
        qc[i] = carry;
        carry = deflated.coeff(i) + carry * Rat(1);
      }
      deflated = RatPoly(std::move(qc));
    }
    rep.resultant_ok = deflated.degree() < 1 || count_real_roots(deflated, Rat(0), std::nullopt) == 0;
    if (!rep.resultant_ok) rep.detail = "resultant has a positive root away from the shared-root point";
    auto quads = build_case(c);
    rep.ordering_ok = true;
    for (const auto& s : samples) {
      bool tangent = false;
      // the free root value is the v slot of these block encodings
      bool ok = check_root_ordering(quads[mu - 2], quads[nu - 2], s, Rat(2), &tangent);
      bool tangency_legal = tangent_at_one && s == 1;
      if (!ok || (tangent && !tangency_legal)) rep.ordering_ok = false;
    }
    rep.pass = rep.leading_positive && rep.resultant_ok && rep.ordering_ok && rep.b0_reduction_ok;
    out.cases.push_back(rep);
  };
  std::vector<Rat> samples = {Rat(1, 2), Rat(1), Rat(2)};
  two_block(9, {6, 1, 0}, 3, 6, samples, "d=9 two-block (6,1) pair (3,6)");
  two_block(9, {6, 1, 0}, 4, 7, samples, "d=9 two-block (6,1) pair (4,7)");
  two_block(10, {7, 1, 0}, 5, 8, samples, "d=10 two-block (7,1) pair (5,8)");

  // all-ones cases: the coefficients are numeric quadratics in a
  auto all_ones = [&](int d, int mu, int nu, const std::string& label) {
    CaseReport rep;
    rep.name = label;
    rep.d = d;
    rep.blocks = {d - 2, 0, 0};
    Prop3Case c{d, {d - 2, 0, 0}, mu, nu, label};
    auto quads = build_case(c);
    rep.leading_positive = true;
    rep.b0_reduction_ok = true;
    rep.resultant_ok = true;
    bool tangent = false;
    rep.ordering_ok = check_root_ordering(quads[mu - 2], quads[nu - 2], Rat(2), Rat(2), &tangent);
    if (tangent) {
      // tangency must coincide with a vanishing numeric resultant
      auto coeffs = expand_case(c);
      IntMPoly res = resultant_in(coeffs[mu], coeffs[nu], "a");
      rep.ordering_ok = rep.ordering_ok && res.is_zero();
    }
    rep.pass = rep.ordering_ok;
    out.cases.push_back(rep);
  };
  all_ones(9, 3, 6, "d=9 all-ones pair (3,6)");
  all_ones(9, 4, 7, "d=9 all-ones pair (4,7)");
  all_ones(10, 5, 8, "d=10 all-ones pair (5,8)");

  for (const auto& c : out.cases) out.pass = out.pass && c.pass;
  return out;
}

}  // namespace descartes
