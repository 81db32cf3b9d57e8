#pragma once

#include <complex>
#include <vector>

#include "core/scenario.hpp"

// Brute-force reference: the four truncated-plane-wave evolutions computed by
// direct adaptive quadrature along shifted momentum-plane contours, used to
// validate every semianalytic result.  Slow by design.

namespace stepswitch::oracle {

struct ContourSpec {
  char variable = 0;              // 'q' (j = 1,2) or 'p' (j = 3,4); 0 = by j
  CutSide side = CutSide::above;  // above for C1/C2, below for C3/C4
  bool side_set = false;          // false = pick the physical side from j
  double epsilon = 0.0;           // straight-contour offset; 0 = auto
  double k_max = 0.0;             // tail truncation; 0 = auto
  double tol = 1e-9;              // absolute quadrature tolerance
};

struct OracleResult {
  complexd value{0.0, 0.0};
  double error_estimate = 0.0;
  bool converged = false;
};

// psi_j(x, t) for j = 1..4 under the new potential; t >= 0.
OracleResult oracle_psi_j(int j, const Scenario& s, double x, double t,
                          const ContourSpec& spec = {});

// Composed wavefunction via the initial-state coefficients (left incidence:
// psi1 + R0 psi2 + T0 psi3; right: psi4 + R0 psi3 + T0 psi2).
OracleResult oracle_psi(const Scenario& s, double x, double t, double tol = 1e-9);

struct CompareRow {
  int j = 0;                     // 0 = composed wavefunction
  double x = 0.0, t = 0.0;
  double abs_delta = 0.0;        // |exact - oracle|
  double abs_psi = 0.0;          // |oracle|
};

struct CompareReport {
  std::vector<CompareRow> rows;
  double max_abs = 0.0;
  double mean_abs = 0.0;
  double sup_psi = 0.0;          // max |psi| over the sample set
  double max_rel = 0.0;          // max |delta| / sup |psi|
};

// Runs the semianalytic path against the oracle at the given samples.
CompareReport compare_report(const Scenario& s,
                             const std::vector<std::pair<double, double>>& samples,
                             double tol = 1e-8);

}  // namespace stepswitch::oracle
