#pragma once

#include <complex>

#include "core/scenario.hpp"

// Assembles full wavefunctions from the four truncated-plane-wave evolutions:
// left incidence  psi = psi1 + R0 psi2 + T0 psi3,
// right incidence psi = psi4 + R0 psi3 + T0 psi2 (mirror construction),
// with the old-potential amplitudes of the initial stationary state.

namespace stepswitch::composer {

enum class Method { exact, approx, oracle, grid, limit, initial };

struct WaveSample {
  double x = 0.0, t = 0.0;
  complexd psi{0.0, 0.0};
  Method method = Method::exact;
};

// Exact transient wavefunction; t = 0 routes to psi_initial.
complexd psi_exact(const Scenario& s, double x, double t, double tol = 1e-9);

// Same composition with the pole (w-function) parts only; the difference to
// psi_exact is the branch-cut remainder contribution.
complexd psi_pole_part(const Scenario& s, double x, double t);

// One-term analytic approximation per term; dominant_only keeps the leading
// terms of the left-incidence analysis (x > 0: 1T, 3I; x < 0: 1I, 2I, 1R).
complexd psi_approx(const Scenario& s, double x, double t, bool dominant_only = false);

// New-potential stationary state reached as t -> infinity, modulo the global
// phase exp(-i E t / hbar).
complexd psi_longtime(const Scenario& s, double x);

// Old-potential stationary scattering state (the t = 0 wavefunction).
complexd psi_initial(const Scenario& s, double x);

}  // namespace stepswitch::composer
