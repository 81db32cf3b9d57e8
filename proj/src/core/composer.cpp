#include "core/composer.hpp"

#include <array>
#include <cmath>

#include "core/transient.hpp"
#include "core/units.hpp"

namespace stepswitch::composer {

namespace {

using transient::Alpha;
using units::hbar;

struct Component {
  int j;
  complexd coeff;
};

std::array<Component, 3> components(const Scenario& s, const MomentumSet& mom) {
  if (s.incidence == Incidence::left)
    return {Component{1, 1.0}, Component{2, mom.R0}, Component{3, mom.T0}};
  return {Component{4, 1.0}, Component{3, mom.R0}, Component{2, mom.T0}};
}

constexpr Alpha alphas[3] = {Alpha::I, Alpha::T, Alpha::R};

}  // namespace

complexd psi_exact(const Scenario& s, double x, double t, double tol) {
  if (t == 0.0) return psi_initial(s, x);
  if (!(t > 0.0)) throw std::invalid_argument("psi_exact: t must be >= 0");
  const MomentumSet mom = derive_momenta(s);
  complexd acc{0.0, 0.0};
  for (const Component& c : components(s, mom))
    for (Alpha a : alphas) {
      const transient::TermDescriptor d = transient::term_descriptor(c.j, a, s);
      acc += c.coeff * transient::eval_term(d, x, t, tol);
    }
  return acc;
}

complexd psi_pole_part(const Scenario& s, double x, double t) {
  if (t == 0.0) return psi_initial(s, x);
  if (!(t > 0.0)) throw std::invalid_argument("psi_pole_part: t must be >= 0");
  const MomentumSet mom = derive_momenta(s);
  const complexd iu{0.0, 1.0};
  constexpr double pi = 3.14159265358979323846;
  complexd acc{0.0, 0.0};
  for (const Component& c : components(s, mom))
    for (Alpha a : alphas) {
      const transient::TermDescriptor d = transient::term_descriptor(c.j, a, s);
      if (!transient::in_support(d, x)) continue;
      const transient::SaddleFrame fr = transient::map_to_u(x, t, d);
      const complexd cj = ((d.j <= 2) ? iu : -iu) / (2.0 * pi);
      const complexd F =
          d.phase_flag ? std::exp(iu * (d.V_new * t / hbar)) : complexd{1.0, 0.0};
      acc += c.coeff * cj * F * transient::eval_Iprime(d, fr);
    }
  return acc;
}

complexd psi_approx(const Scenario& s, double x, double t, bool dominant_only) {
  if (t == 0.0) return psi_initial(s, x);
  if (!(t > 0.0)) throw std::invalid_argument("psi_approx: t must be >= 0");
  const MomentumSet mom = derive_momenta(s);

  if (dominant_only && s.incidence == Incidence::left) {
    // Leading terms of the two-sided analysis: the new transmitted and old
    // transmitted waves for x > 0; incident, old reflected and new reflected
    // for x < 0.
    complexd acc{0.0, 0.0};
    if (x >= 0.0) {
      acc += transient::eval_term_approx(1, Alpha::T, s, x, t);
      acc += mom.T0 * transient::eval_term_approx(3, Alpha::I, s, x, t);
    } else {
      acc += transient::eval_term_approx(1, Alpha::I, s, x, t);
      acc += mom.R0 * transient::eval_term_approx(2, Alpha::I, s, x, t);
      acc += transient::eval_term_approx(1, Alpha::R, s, x, t);
    }
    return acc;
  }

  complexd acc{0.0, 0.0};
  for (const Component& c : components(s, mom))
    for (Alpha a : alphas)
      acc += c.coeff * transient::eval_term_approx(c.j, a, s, x, t);
  return acc;
}

complexd psi_longtime(const Scenario& s, double x) {
  return stationary_state(s, Potential::new_step, x);
}

complexd psi_initial(const Scenario& s, double x) {
  return stationary_state(s, Potential::old_step, x);
}

}  // namespace stepswitch::composer
