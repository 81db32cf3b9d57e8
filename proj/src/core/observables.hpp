#pragma once

#include <complex>
#include <functional>
#include <optional>

#include "core/scenario.hpp"

// Density, probability flux and local average frequency from any wavefunction
// sampler (exact, approximate or grid-interpolated).  Derivatives use
// centered differences with one Richardson level so the same machinery works
// on samplers without analytic derivatives.

namespace stepswitch::observables {

using Sampler = std::function<complexd(double x, double t)>;

double density(const Sampler& psi, double x, double t);

// J = (hbar/m) Im[psi* dpsi/dx].
double flux(const Sampler& psi, double m, double x, double t, double hx = 1e-3);

// hbar * omega_av with omega_av = -Im[(dpsi/dt)/psi], in eV; empty when
// |psi| < 1e-12 (local frequency undefined near nodes).
std::optional<double> omega_av(const Sampler& psi, double x, double t, double ht = 1e-3);

}  // namespace stepswitch::observables
