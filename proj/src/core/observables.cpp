#include "core/observables.hpp"

#include <cmath>

#include "core/units.hpp"

namespace stepswitch::observables {

namespace {

using units::hbar;

complexd richardson_derivative(const std::function<complexd(double)>& f, double v,
                               double h) {
  const auto centered = [&](double hh) { return (f(v + hh) - f(v - hh)) / (2.0 * hh); };
  const complexd d1 = centered(h);
  const complexd d2 = centered(0.5 * h);
  return (4.0 * d2 - d1) / 3.0;
}

}  // namespace

double density(const Sampler& psi, double x, double t) {
  return std::norm(psi(x, t));
}

double flux(const Sampler& psi, double m, double x, double t, double hx) {
  const complexd value = psi(x, t);
  const complexd dpsi =
      richardson_derivative([&](double xx) { return psi(xx, t); }, x, hx);
  return (hbar / m) * std::imag(std::conj(value) * dpsi);
}

std::optional<double> omega_av(const Sampler& psi, double x, double t, double ht) {
  const complexd value = psi(x, t);
  if (std::abs(value) < 1e-12) return std::nullopt;
  const double h = (t > 0.0) ? std::min(ht, 0.25 * t) : ht;
  const complexd dpsi =
      richardson_derivative([&](double tt) { return psi(x, tt); }, t, h);
  return -hbar * std::imag(dpsi / value);
}

}  // namespace stepswitch::observables
