#pragma once

#include <complex>
#include <stdexcept>

#include "core/units.hpp"

// Scenario definition and the complex momentum algebra for a single potential
// step V(x) = -V*Theta(x) whose depth jumps from V0_old to V0_new at t = 0.
//
// Branch conventions: p(q) = q*sqrt(1 + 2mV/q^2) has its cut on the imaginary
// segment [-i*sqrt(2mV), +i*sqrt(2mV)] of the q plane, q(p) = p*sqrt(1 - 2mV/p^2)
// on the real segment [-sqrt(2mV), +sqrt(2mV)] of the p plane, and both behave
// like the identity at large |argument|, so real q and real p share a sign.

namespace stepswitch {

using complexd = std::complex<double>;

enum class Incidence { left, right };

// Side of a cut for boundary evaluations.  For the horizontal cut of q(p)
// "above"/"below" mean Im p = +0 / -0.  For the vertical cut of p(q) the plane
// is read rotated a quarter turn: "above" is the Re q = +0 edge.
enum class CutSide { above, below };

struct Scenario {
  double mass = 1.0;     // effective mass in units of the electron mass
  double E_q = 0.0;      // incident kinetic energy at the left level, eV
  double V0_old = 0.0;   // step depth before the switch, eV
  double V0_new = 0.0;   // step depth after the switch, eV
  Incidence incidence = Incidence::left;

  double m() const { return mass * units::electron_mass; }
};

// Derived momenta and amplitude values.  q0 and the incident-channel momentum
// of the initial state may be complex in the evanescent regime.
struct MomentumSet {
  complexd q0;           // left-level momentum of the final stationary state
  double p0 = 0;         // old transmitted momentum sqrt(q0^2 + 2m V0_old)
  double p0_new = 0;     // new transmitted momentum sqrt(q0^2 + 2m V0_new)
  complexd q0_old;       // left momentum of the initial state (left: q0; right: q(p0_new; V0_old))
  complexd R0, T0;       // old-potential amplitudes of the initial stationary state
  complexd Rl, Tl;       // new-potential left-incidence amplitudes at q0
  complexd Rr, Tr;       // new-potential right-incidence amplitudes at p0_new
};

enum class Potential { old_step, new_step };

// p = [q^2 + 2mV]^{1/2} with the vertical-segment cut; side picks the edge on
// the cut, at_branch (optional) reports evaluation exactly at a branch point.
complexd p_of_q(complexd q, double V, double m, CutSide side = CutSide::above,
                bool* at_branch = nullptr);

// q = [p^2 - 2mV]^{1/2} with the real-segment cut; mirror of p_of_q.
complexd q_of_p(complexd p, double V, double m, CutSide side = CutSide::below,
                bool* at_branch = nullptr);

struct Amplitudes {
  complexd R, T;
};

// Appendix-style amplitudes continued over the complex plane.
// left:  R = (q-p)/(q+p), T = 2q/(q+p) with p = p_of_q(q,...), argument k = q.
// right: R = (p-q)/(q+p), T = 2p/(q+p) with q = q_of_p(p,...), argument k = p.
Amplitudes amplitudes(complexd k, double V, double m, Incidence side,
                      CutSide cut_side = CutSide::above);

MomentumSet derive_momenta(const Scenario& s);

// Stationary scattering state of the chosen potential, incident amplitude 1.
complexd stationary_state(const Scenario& s, Potential which, double x);

void validate(const Scenario& s);

}  // namespace stepswitch
