#pragma once

#include <descartes/interval.hpp>
#include <descartes/signpat.hpp>

#include <optional>
#include <string>

namespace descartes {

/// L(d,m,n) = -d n^2 + 4dm + 4dn - 4m^2 - 4mn - 4d + 4m; positivity is a
/// sufficient condition for realizability of (S(m,n,q), (0,d-2)).
Rat L_value(int d, int m, int n);

/// kappa = ((d-m-1)/m) * ((d-q-1)/q); kappa >= 4 implies nonrealizability
/// of (S(m,n,q), (0,d-2)).
Rat kappa_value(int d, int m, int q);

/// Rigorous enclosures of Q^-(k) and Q^+(k) = ((d-k-1)/k)(1 -+ A(k)),
/// A(k) = sqrt((d-1)/((k+1)(d-k-1))), for 1 <= k <= d-2. Width <= `width`.
struct QBounds {
  RatInterval qminus, qplus;
};
QBounds q_bounds(int d, int k, const Rat& width = Rat(1, 1000000));

/// Exact sign of Q^-(k1) - Q^+(k2); no tolerance involved.
int cmp_qminus_qplus(int d, int k1, int k2);

/// Decides Q^-(m-1) < Q^+(m+n-2) by interval refinement, with the exact
/// surd comparison settling ties. Degenerate ends: Q^-(0) := (d-2)/2,
/// Q^+(0) := +infinity.
bool eqE_holds(int d, int m, int n);

enum class Status { Realizable, NonRealizable, Unknown };

enum class Reason {
  Eq2LPositive,
  KappaGe4,
  Thm1Part1,
  Thm1Part2,
  Thm1Part3,
  Thm1Part4,
  Prop1,
  Prop3Fact,
  PaperFact,
  WitnessFound,
  OracleExhaustedUnknown,
};

std::string status_str(Status s);
std::string reason_str(Reason r);

/// Diagnostic quantities computed alongside a classification. The interval
/// fields are rigorous enclosures; eqE compares them after refinement.
struct CriterionTrace {
  std::optional<Rat> L;
  std::optional<Rat> kappa;
  std::optional<RatInterval> qminus;  // Q^-(m-1); point (d-2)/2 when m = 1
  std::optional<RatInterval> qplus;   // Q^+(m+n-2); absent (infinite) when m+n = 2
  std::optional<bool> eqE;
};

struct Classification {
  Status status = Status::Unknown;
  Reason reason = Reason::OracleExhaustedUnknown;
  std::optional<RatPoly> witness;
  std::string construction;  // how the witness was built, when present
  CriterionTrace trace;
};

struct ClassifyOptions {
  bool attach_witness = true;
};

/// Applies the realizability/nonrealizability criteria to one couple.
/// Throws std::invalid_argument when ap is not admissible for the pattern
/// and std::logic_error when a realizability criterion and a
/// nonrealizability fact fire for the same input.
Classification classify(const SignPattern& sp, const AdmissiblePair& ap,
                        const ClassifyOptions& opts = {});

}  // namespace descartes
