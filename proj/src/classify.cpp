#include <descartes/criteria.hpp>
#include <descartes/witness.hpp>

#include <stdexcept>

namespace descartes {

namespace {

/// Realizability criteria for (S(m,n,q), (0,d-2)). Returns the reason tag
/// when one applies.
std::optional<Reason> realizable_0dm2(const ThreeBlockPattern& tb) {
  int m = tb.m, n = tb.n, q = tb.q, d = tb.degree();
  if (n <= 2) return Reason::Thm1Part1;
  if (n == 3 && d >= 5) return Reason::Thm1Part2;
  if (n == 4 && ((m >= 3 && q >= 3 && d >= 10) || (m == 2 && q >= 6) || (q == 2 && m >= 6)))
    return Reason::Thm1Part3;
  if (sgn(L_value(d, m, n)) > 0 || sgn(L_value(d, q, n)) > 0) return Reason::Eq2LPositive;
  return std::nullopt;
}

/// Nonrealizability facts for (S(m,n,q), (0,d-2)).
std::optional<Reason> nonrealizable_0dm2(const ThreeBlockPattern& tb) {
  int m = tb.m, n = tb.n, q = tb.q, d = tb.degree();
  // Proposition 3 couples and their reversals
  if (d == 9 && n == 4 && ((m == 3 && q == 3) || (m == 2 && q == 4) || (m == 4 && q == 2)))
    return Reason::Prop3Fact;
  if (d == 10 && n == 4 && ((m == 2 && q == 5) || (m == 5 && q == 2))) return Reason::Prop3Fact;
  // facts restated in the text: S(1,3,1)/(0,2) and S(m,4,q)/(0,d-2) for 5<=d<=8
  if (d == 4 && m == 1 && n == 3 && q == 1) return Reason::PaperFact;
  if (n == 4 && d >= 5 && d <= 8) return Reason::PaperFact;
  if ((m == 1 || q == 1) && n >= 4) return Reason::Thm1Part4;
  // kappa is defined for m+q < d, i.e. n >= 2; for n = 1 it cannot reach 4
  if (n >= 2 && kappa_value(d, m, q) >= 4) return Reason::KappaGe4;
  return std::nullopt;
}

void fill_trace(CriterionTrace& tr, const ThreeBlockPattern& tb) {
  int d = tb.degree();
  tr.L = L_value(d, tb.m, tb.n);
  if (tb.m + tb.q < d) tr.kappa = kappa_value(d, tb.m, tb.q);
  int k1 = tb.m - 1, k2 = tb.m + tb.n - 2;
  if (k1 == 0)
    tr.qminus = RatInterval{frac(d - 2, 2), frac(d - 2, 2)};
  else
    tr.qminus = q_bounds(d, k1).qminus;
  if (k2 >= 1) tr.qplus = q_bounds(d, k2).qplus;
  tr.eqE = eqE_holds(d, tb.m, tb.n);
}

}  // namespace

Classification classify(const SignPattern& sp, const AdmissiblePair& ap,
                        const ClassifyOptions& opts) {
  if (!is_admissible(sp, ap))
    throw std::invalid_argument("classify: pair (" + std::to_string(ap.pos) + "," +
                                std::to_string(ap.neg) + ") is not admissible for " + sp.str());
  auto [c, p] = changes_preservations(sp);
  int d = sp.degree();
  Classification out;
  auto tb = as_three_block(sp);
  if (tb) fill_trace(out.trace, *tb);

  auto attach = [&](Classification& cl) {
    if (!opts.attach_witness || cl.status != Status::Realizable) return;
    auto w = build_witness(sp, ap);
    if (w) {
      if (!certify_witness(w->poly, sp, ap))
        throw std::logic_error("classify: witness failed independent certification");
      cl.witness = w->poly;
      cl.construction = w->construction;
    }
  };

  // (a) any pattern realizes its Descartes bound (c, p)
  if (ap.pos == c && ap.neg == p) {
    out.status = Status::Realizable;
    out.reason = Reason::Prop1;
    attach(out);
    return out;
  }
  // (b)+(c): c <= 1 patterns realize every admissible pair
  if (c == 0) {
    out.status = Status::Realizable;
    out.reason = Reason::PaperFact;  // the all-pluses family argument
    attach(out);
    return out;
  }
  if (c == 1) {
    out.status = Status::Realizable;
    out.reason = Reason::Prop1;
    attach(out);
    return out;
  }
  // (d) c == 2, pairs (0, d-2k)
  if (c == 2 && ap.pos == 0) {
    auto yes = realizable_0dm2(*tb);
    auto no = nonrealizable_0dm2(*tb);
    if (yes && no)
      throw std::logic_error("classify: realizability and nonrealizability criteria both fired for " +
                             sp.str());
    if (ap.neg == d - 2) {
      if (no) {
        out.status = Status::NonRealizable;
        out.reason = *no;
        return out;
      }
      if (yes) {
        out.status = Status::Realizable;
        out.reason = *yes;
        attach(out);
        return out;
      }
      return out;  // Unknown
    }
    // (e) downward closure from (0, d-2)
    if (yes) {
      out.status = Status::Realizable;
      out.reason = *yes;
      attach(out);
      return out;
    }
    return out;  // Unknown: nonrealizability at (0,d-2) says nothing below it
  }
  return out;  // Unknown
}

}  // namespace descartes
