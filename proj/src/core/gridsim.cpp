#include "core/gridsim.hpp"

#include <cmath>
#include <stdexcept>

#include "core/composer.hpp"
#include "core/units.hpp"

namespace stepswitch::gridsim {

namespace {
using units::hbar;
constexpr complexd iu{0.0, 1.0};
}  // namespace

GridSim::GridSim(const Scenario& s, double L, std::size_t N, double dt, bool closed_box)
    : scenario_(s), L_(L), dt_(dt), closed_box_(closed_box) {
  validate(s);
  if (s.incidence != Incidence::left)
    throw std::invalid_argument("GridSim: boundary ansatz is set up for left incidence");
  if (!(L > 0.0) || !(dt > 0.0) || N < 3)
    throw std::invalid_argument("GridSim: need L > 0, dt > 0, N >= 3");

  dx_ = L / static_cast<double>(N - 1);
  m_ = s.m();
  const MomentumSet mom = derive_momenta(s);
  q0_ = mom.q0.real();
  p0_new_ = mom.p0_new;
  E_q_ = s.E_q;

  psi_.resize(N);
  for (std::size_t i = 0; i < N; ++i) psi_[i] = composer::psi_initial(s, x_at(i));
  if (closed_box_) {
    psi_.front() = 0.0;
    psi_.back() = 0.0;
  }

  // Potential after the switch: 0 for x < 0, -V0_new for x >= 0 (the grid
  // point nearest zero takes the step side of Theta).
  const double kinetic = hbar * hbar / (m_ * dx_ * dx_);
  const double E_max = kinetic + std::abs(s.V0_new);
  accuracy_warning_ = dt * E_max / hbar > 0.5;

  const complexd lambda = iu * dt / (2.0 * hbar);
  const double alpha = -hbar * hbar / (2.0 * m_ * dx_ * dx_);
  lhs_off_ = lambda * alpha;
  rhs_off_ = -lambda * alpha;
  lhs_diag_.resize(N);
  rhs_diag_.resize(N);
  for (std::size_t i = 0; i < N; ++i) {
    const double V = (x_at(i) >= 0.0) ? -s.V0_new : 0.0;
    const complexd Hdiag = -2.0 * alpha + V;
    lhs_diag_[i] = 1.0 + lambda * Hdiag;
    rhs_diag_[i] = 1.0 - lambda * Hdiag;
  }

  // Prefactored Thomas sweep for the constant interior operator (rows 1..N-2).
  const std::size_t n = N - 2;
  thomas_upper_.resize(n);
  thomas_inv_denom_.resize(n);
  scratch_.resize(N);
  complexd denom = lhs_diag_[1];
  thomas_inv_denom_[0] = 1.0 / denom;
  thomas_upper_[0] = lhs_off_ * thomas_inv_denom_[0];
  for (std::size_t i = 1; i < n; ++i) {
    denom = lhs_diag_[i + 1] - lhs_off_ * thomas_upper_[i - 1];
    thomas_inv_denom_[i] = 1.0 / denom;
    thomas_upper_[i] = lhs_off_ * thomas_inv_denom_[i];
  }
}

void GridSim::single_step() {
  const std::size_t N = psi_.size();
  const std::size_t n = N - 2;

  // Boundary values for the next step, from the current state.
  complexd left_next{0.0, 0.0}, right_next{0.0, 0.0};
  if (!closed_box_) {
    const complexd evolve = std::exp(-iu * E_q_ * dt_ / hbar);
    // Left edge: psi = A exp(iq0 x/hbar) + B(x,t) exp(-iq0 x/hbar) with the
    // incident amplitude carrying its stationary phase.
    const complexd A_t = A_inc_ * std::exp(-iu * E_q_ * t_ / hbar);
    const auto B = [&](std::size_t i) {
      const complexd e = std::exp(iu * q0_ * x_at(i) / hbar);
      return (psi_[i] - A_t * e) * e;
    };
    const complexd dB = (B(1) - B(0)) / dx_;
    left_next = psi_[0] * evolve +
                (q0_ / m_) * dB * std::exp(-iu * q0_ * x_at(0) / hbar) * dt_;
    // Right edge: psi = C(x,t) exp(ip'0 x/hbar).
    const auto C = [&](std::size_t i) {
      return psi_[i] * std::exp(-iu * p0_new_ * x_at(i) / hbar);
    };
    const complexd dC = (C(N - 1) - C(N - 2)) / dx_;
    right_next = psi_[N - 1] * evolve -
                 (p0_new_ / m_) * dC * std::exp(iu * p0_new_ * x_at(N - 1) / hbar) * dt_;
  }

  // RHS = (1 - i H dt/2hbar) psi^n on the interior, with the known new edge
  // values moved across.
  std::vector<complexd>& rhs = scratch_;
  for (std::size_t i = 1; i + 1 < N; ++i)
    rhs[i] = rhs_diag_[i] * psi_[i] + rhs_off_ * (psi_[i - 1] + psi_[i + 1]);
  rhs[1] -= lhs_off_ * left_next;
  rhs[N - 2] -= lhs_off_ * right_next;

  // Thomas forward/backward sweep with the prefactored coefficients.
  rhs[1] *= thomas_inv_denom_[0];
  for (std::size_t i = 1; i < n; ++i)
    rhs[i + 1] = (rhs[i + 1] - lhs_off_ * rhs[i]) * thomas_inv_denom_[i];
  for (std::size_t i = n - 1; i-- > 0;)
    rhs[i + 1] -= thomas_upper_[i] * rhs[i + 2];

  for (std::size_t i = 1; i + 1 < N; ++i) psi_[i] = rhs[i];
  psi_[0] = left_next;
  psi_[N - 1] = right_next;
  t_ += dt_;
}

void GridSim::step(std::size_t nsteps) {
  for (std::size_t k = 0; k < nsteps; ++k) single_step();
}

double GridSim::norm() const {
  double acc = 0.0;
  for (const complexd& v : psi_) acc += std::norm(v);
  return acc * dx_;
}

double GridSim::density_at(double x) const {
  const auto i = static_cast<std::size_t>(
      std::clamp(std::lround((x + 0.5 * L_) / dx_), 0L,
                 static_cast<long>(psi_.size() - 1)));
  return std::norm(psi_[i]);
}

double GridSim::flux_at(double x) const {
  const std::size_t N = psi_.size();
  const auto i = static_cast<std::size_t>(
      std::clamp(std::lround((x + 0.5 * L_) / dx_), 0L, static_cast<long>(N - 1)));
  complexd dpsi;
  if (i == 0)
    dpsi = (-3.0 * psi_[0] + 4.0 * psi_[1] - psi_[2]) / (2.0 * dx_);
  else if (i == N - 1)
    dpsi = (3.0 * psi_[N - 1] - 4.0 * psi_[N - 2] + psi_[N - 3]) / (2.0 * dx_);
  else
    dpsi = (psi_[i + 1] - psi_[i - 1]) / (2.0 * dx_);
  return (hbar / m_) * std::imag(std::conj(psi_[i]) * dpsi);
}

std::vector<ProbeRecord> run_probes(const Scenario& s, double L, std::size_t N,
                                    double dt, double T, const std::vector<double>& probes,
                                    double record_dt, bool closed_box) {
  if (!(record_dt >= dt)) record_dt = dt;
  GridSim sim(s, L, N, dt, closed_box);

  const auto record = [&] {
    ProbeRecord rec;
    rec.t = sim.time();
    for (double x : probes) {
      rec.flux.push_back(sim.flux_at(x));
      rec.density.push_back(sim.density_at(x));
    }
    return rec;
  };

  std::vector<ProbeRecord> out;
  out.push_back(record());
  const auto stride = static_cast<std::size_t>(std::llround(record_dt / dt));
  std::size_t total = (T > 0.0) ? static_cast<std::size_t>(std::llround(T / dt)) : 0;
  std::size_t done = 0;
  while (done < total) {
    const std::size_t chunk = std::min(stride, total - done);
    sim.step(chunk);
    done += chunk;
    out.push_back(record());
  }
  return out;
}

}  // namespace stepswitch::gridsim
