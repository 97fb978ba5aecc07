#pragma once

#include <descartes/prop3.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace descartes {

struct CheckReport {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct BatteryReport {
  std::vector<CheckReport> checks;
  bool pass = true;
  void add(std::string name, bool ok, std::string detail = "") {
    pass = pass && ok;
    checks.push_back({std::move(name), ok, std::move(detail)});
  }
};

/// For every (d,m,n) with L(d,m,n) > 0 and d <= max_degree: the explicit
/// construction realizes S(m,n,q) coefficientwise, the perturbation is
/// Sturm-certified at (0,d-2), and one shift step reaches (0,d-4).
BatteryReport run_thm2_sweep(int max_degree);

/// Q+- enclosures strictly decreasing in k (k = 1..d/2, d <= max_degree_mono)
/// and agreement of the eqE interval comparison with the sign of L over the
/// full (d,m,n) grid up to max_degree_grid.
BatteryReport run_q_monotonicity(int max_degree_mono = 100, int max_degree_grid = 60);

/// Randomized exact battery (fixed seed): Descartes conditions for
/// constructed polynomials, Newton inequalities for negative-rooted
/// expansions, the elementary-symmetric inequality for lengths 4..12, the
/// induction-step inequality, and the reverse/scale invariants.
BatteryReport run_inequality_battery(uint64_t seed = 20250810, int trials = 10000);

/// Oracle consistency: for d <= max_degree and c = 2, no default-budget grid
/// search finds a witness for any couple classified NonRealizable; the
/// S(1,3,1)/(0,2) search exhausts a dense grid.
BatteryReport run_oracle_consistency(int max_degree = 10);

}  // namespace descartes
