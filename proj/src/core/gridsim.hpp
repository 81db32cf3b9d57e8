#pragma once

#include <complex>
#include <vector>

#include "core/scenario.hpp"

// Finite-box benchmark of the transient: Cayley (Crank-Nicolson) stepping of
// the post-switch Hamiltonian with the two-point injecting/absorbing edge
// update of Mains and Haddad, plus a closed-box (Dirichlet) variant whose
// exact norm conservation checks the stepper.

namespace stepswitch::gridsim {

class GridSim {
 public:
  // Box [-L/2, L/2] with N uniform points; initial data is the old-potential
  // stationary state.  closed_box pins the edges to zero instead of the
  // Mains-Haddad update.
  GridSim(const Scenario& s, double L, std::size_t N, double dt, bool closed_box = false);

  void step(std::size_t nsteps = 1);

  double time() const { return t_; }
  double dx() const { return dx_; }
  std::size_t size() const { return psi_.size(); }
  double x_at(std::size_t i) const { return -0.5 * L_ + static_cast<double>(i) * dx_; }
  const std::vector<complexd>& psi() const { return psi_; }

  double norm() const;               // integral of |psi|^2 dx
  double density_at(double x) const; // |psi|^2 at the nearest grid point
  double flux_at(double x) const;    // centered-difference probability flux

  // True when dt * E_max / hbar > 0.5 (accuracy, not stability, concern).
  bool accuracy_warning() const { return accuracy_warning_; }

 private:
  void single_step();

  Scenario scenario_;
  double L_, dx_, dt_, t_ = 0.0;
  bool closed_box_;
  bool accuracy_warning_ = false;
  double m_, E_q_, q0_, p0_new_;
  complexd A_inc_{1.0, 0.0};
  std::vector<complexd> psi_;

  // Constant Cayley operator factors and prefactored Thomas coefficients.
  complexd lhs_off_, rhs_off_;
  std::vector<complexd> lhs_diag_, rhs_diag_;
  std::vector<complexd> thomas_upper_;
  std::vector<complexd> thomas_inv_denom_;
  std::vector<complexd> scratch_;
};

struct ProbeRecord {
  double t = 0.0;
  std::vector<double> flux;
  std::vector<double> density;
};

// Steps to time T, recording flux and density at the probe positions every
// record_dt (>= dt).  T = 0 records the initial observables only.
std::vector<ProbeRecord> run_probes(const Scenario& s, double L, std::size_t N,
                                    double dt, double T, const std::vector<double>& probes,
                                    double record_dt, bool closed_box = false);

}  // namespace stepswitch::gridsim
