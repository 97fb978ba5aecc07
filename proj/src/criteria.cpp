#include <descartes/criteria.hpp>

#include <stdexcept>

namespace descartes {

Rat L_value(int d, int m, int n) {
  if (m < 1 || n < 1 || m + n > d) throw std::invalid_argument("L_value: need m,n >= 1, m+n <= d");
  long D = d, M = m, N = n;
  return Rat(-D * N * N + 4 * D * M + 4 * D * N - 4 * M * M - 4 * M * N - 4 * D + 4 * M);
}

Rat kappa_value(int d, int m, int q) {
  if (m < 1 || q < 1 || m + q >= d)
    throw std::invalid_argument("kappa_value: need m,q >= 1 and m+q < d");
  return frac(d - m - 1, m) * frac(d - q - 1, q);
}

namespace {

/// A(k)^2 = (d-1)/((k+1)(d-k-1)), exact.
Rat a_squared(int d, int k) { return frac(d - 1, static_cast<long>(k + 1) * (d - k - 1)); }

}  // namespace

QBounds q_bounds(int d, int k, const Rat& width) {
  if (k < 1 || k > d - 2) throw std::invalid_argument("q_bounds: need 1 <= k <= d-2");
  Rat f = frac(d - k - 1, k);
  Rat r = a_squared(d, k);
  unsigned bits = 20;
  while (true) {
    RatInterval a = sqrt_enclosure(r, bits);
    RatInterval qm = RatInterval{1 - a.hi, 1 - a.lo}.scaled(f);
    RatInterval qp = RatInterval{1 + a.lo, 1 + a.hi}.scaled(f);
    if (qm.width() <= width && qp.width() <= width) return {qm, qp};
    bits *= 2;
    if (bits > 1u << 20) throw std::logic_error("q_bounds: refinement runaway");
  }
}

int cmp_qminus_qplus(int d, int k1, int k2) {
  // sign of c1(1 - sqrt(r1)) - c2(1 + sqrt(r2))
  Rat c1 = frac(d - k1 - 1, k1), c2 = frac(d - k2 - 1, k2);
  return sign_qminus_minus_qplus(c1, a_squared(d, k1), c2, a_squared(d, k2));
}

bool eqE_holds(int d, int m, int n) {
  if (m < 1 || n < 1 || m + n > d) throw std::invalid_argument("eqE_holds: bad (d,m,n)");
  int k1 = m - 1, k2 = m + n - 2;
  if (k2 == 0) return true;  // Q^+(0) = +infinity
  if (k1 == 0) {
    // Q^-(0) = (d-2)/2 exactly: compare with Q^+(k2) = c2(1 + sqrt(r2)).
    Rat lhs = frac(d - 2, 2);
    Rat c2 = frac(d - k2 - 1, k2);
    if (lhs <= c2) return true;  // sqrt term only enlarges the right side
    // lhs - c2 > 0: compare (lhs - c2)^2 with c2^2 r2
    Rat t = lhs - c2;
    Rat diff = t * t - c2 * c2 * a_squared(d, k2);
    return sgn(diff) < 0;
  }
  return cmp_qminus_qplus(d, k1, k2) < 0;
}

std::string status_str(Status s) {
  switch (s) {
    case Status::Realizable: return "Realizable";
    case Status::NonRealizable: return "NonRealizable";
    default: return "Unknown";
  }
}

std::string reason_str(Reason r) {
  switch (r) {
    case Reason::Eq2LPositive: return "Eq2-L-positive";
    case Reason::KappaGe4: return "Kappa-ge-4";
    case Reason::Thm1Part1: return "Thm1-part(1)";
    case Reason::Thm1Part2: return "Thm1-part(2)";
    case Reason::Thm1Part3: return "Thm1-part(3)";
    case Reason::Thm1Part4: return "Thm1-part(4)";
    case Reason::Prop1: return "Prop1";
    case Reason::Prop3Fact: return "Prop3-fact";
    case Reason::PaperFact: return "Paper-fact";
    case Reason::WitnessFound: return "Witness-found";
    default: return "Oracle-exhausted-unknown";
  }
}

}  // namespace descartes
