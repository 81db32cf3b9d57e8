#include "core/scenario.hpp"

#include <cmath>

namespace stepswitch {

namespace {

using units::hbar;

bool is_finite(double v) { return std::isfinite(v); }

// Principal square root of 1 + c2/k^2 times k.  The cut of sqrt sits where
// 1 + c2/k^2 is negative real: the segment between the branch points
// +-sqrt(-c2), i.e. vertical for c2 > 0 and horizontal for c2 < 0.  Away from
// the cut this is the branch that behaves like k at large |k|.
complexd segment_sqrt(complexd k, double c2) {
  return k * std::sqrt(1.0 + c2 / (k * k));
}

}  // namespace

complexd p_of_q(complexd q, double V, double m, CutSide side, bool* at_branch) {
  if (at_branch) *at_branch = false;
  const double c2 = 2.0 * m * V;
  if (c2 == 0.0) return q;
  const double c = std::sqrt(std::abs(c2));

  if (c2 > 0.0) {
    // Branch points +-i*c, cut on the imaginary segment.
    if (q.real() == 0.0 && std::abs(q.imag()) <= c) {
      const double y = q.imag();
      if (std::abs(y) == c) {
        if (at_branch) *at_branch = true;
        return {0.0, 0.0};
      }
      // Boundary value; "above" is the Re q = +0 edge where p is positive.
      const double sgn = (side == CutSide::above) ? 1.0 : -1.0;
      return {sgn * std::sqrt(c2 - y * y), 0.0};
    }
    if (q == complexd{0.0, 0.0}) return {c, 0.0};
    return segment_sqrt(q, c2);
  }

  // c2 < 0: branch points +-c on the real axis, cut on the real segment.
  if (q.imag() == 0.0 && std::abs(q.real()) <= c) {
    const double x = q.real();
    if (std::abs(x) == c) {
      if (at_branch) *at_branch = true;
      return {0.0, 0.0};
    }
    const double sgn = (side == CutSide::above) ? 1.0 : -1.0;
    return {0.0, sgn * ((x >= 0.0) ? 1.0 : -1.0) * std::sqrt(-c2 - x * x)};
  }
  return segment_sqrt(q, c2);
}

complexd q_of_p(complexd p, double V, double m, CutSide side, bool* at_branch) {
  // q(p; V) is p(q; -V) with the roles of the planes exchanged.
  if (at_branch) *at_branch = false;
  const double c2 = 2.0 * m * V;
  if (c2 == 0.0) return p;
  const double c = std::sqrt(std::abs(c2));

  if (c2 > 0.0) {
    // Branch points +-c, cut on the real segment of the p plane.
    if (p.imag() == 0.0 && std::abs(p.real()) <= c) {
      const double x = p.real();
      if (std::abs(x) == c) {
        if (at_branch) *at_branch = true;
        return {0.0, 0.0};
      }
      const double sgn = (side == CutSide::above) ? 1.0 : -1.0;
      return {0.0, sgn * ((x >= 0.0) ? 1.0 : -1.0) * std::sqrt(c2 - x * x)};
    }
    if (p == complexd{0.0, 0.0}) {
      const double sgn = (side == CutSide::above) ? 1.0 : -1.0;
      return {0.0, sgn * c};
    }
    return segment_sqrt(p, -c2);
  }

  if (p.real() == 0.0 && std::abs(p.imag()) <= c) {
    const double y = p.imag();
    if (std::abs(y) == c) {
      if (at_branch) *at_branch = true;
      return {0.0, 0.0};
    }
    const double sgn = (side == CutSide::above) ? 1.0 : -1.0;
    return {sgn * std::sqrt(-c2 - y * y), 0.0};
  }
  return segment_sqrt(p, -c2);
}

Amplitudes amplitudes(complexd k, double V, double m, Incidence side, CutSide cut_side) {
  if (side == Incidence::left) {
    const complexd q = k;
    const complexd p = p_of_q(q, V, m, cut_side);
    const complexd den = q + p;
    if (den == complexd{0.0, 0.0})
      throw std::domain_error("amplitudes: q + p vanished (branch point)");
    return {(q - p) / den, 2.0 * q / den};
  }
  const complexd p = k;
  const complexd q = q_of_p(p, V, m, cut_side);
  const complexd den = q + p;
  if (den == complexd{0.0, 0.0})
    throw std::domain_error("amplitudes: q + p vanished (branch point)");
  return {(p - q) / den, 2.0 * p / den};
}

void validate(const Scenario& s) {
  if (!(s.mass > 0.0) || !is_finite(s.mass))
    throw std::invalid_argument("scenario: mass must be positive and finite");
  if (!is_finite(s.E_q) || !is_finite(s.V0_old) || !is_finite(s.V0_new))
    throw std::invalid_argument("scenario: non-finite energy or step depth");
  if (s.incidence == Incidence::left && !(s.E_q > 0.0))
    throw std::invalid_argument(
        "scenario: left incidence needs E_q > 0 (evanescent states enter via right incidence)");
  const double m = s.m();
  if (!(s.E_q + s.V0_old > 0.0) || !(s.E_q + s.V0_new > 0.0))
    throw std::invalid_argument("scenario: incident channel must propagate on the step side");
  (void)m;
}

MomentumSet derive_momenta(const Scenario& s) {
  validate(s);
  const double m = s.m();
  MomentumSet set;

  if (s.E_q >= 0.0)
    set.q0 = complexd{std::sqrt(2.0 * m * s.E_q), 0.0};
  else
    set.q0 = complexd{0.0, std::sqrt(-2.0 * m * s.E_q)};

  set.p0 = std::sqrt(2.0 * m * (s.E_q + s.V0_old));
  set.p0_new = std::sqrt(2.0 * m * (s.E_q + s.V0_new));

  const Amplitudes new_left = amplitudes(set.q0, s.V0_new, m, Incidence::left);
  const Amplitudes new_right = amplitudes(complexd{set.p0_new, 0.0}, s.V0_new, m,
                                          Incidence::right, CutSide::above);
  set.Rl = new_left.R;
  set.Tl = new_left.T;
  set.Rr = new_right.R;
  set.Tr = new_right.T;

  if (s.incidence == Incidence::left) {
    set.q0_old = set.q0;
    const Amplitudes a = amplitudes(set.q0, s.V0_old, m, Incidence::left);
    set.R0 = a.R;
    set.T0 = a.T;
  } else {
    // Incident momentum is p0_new; its left-channel momentum under the old
    // potential can be evanescent (tunnelling regime).
    set.q0_old = q_of_p(complexd{set.p0_new, 0.0}, s.V0_old, m, CutSide::above);
    const Amplitudes a = amplitudes(complexd{set.p0_new, 0.0}, s.V0_old, m,
                                    Incidence::right, CutSide::above);
    set.R0 = a.R;
    set.T0 = a.T;
  }
  return set;
}

complexd stationary_state(const Scenario& s, Potential which, double x) {
  const double m = s.m();
  const MomentumSet set = derive_momenta(s);
  const double V = (which == Potential::old_step) ? s.V0_old : s.V0_new;
  const complexd i{0.0, 1.0};

  if (s.incidence == Incidence::left) {
    const complexd q0 = set.q0;
    const Amplitudes a = amplitudes(q0, V, m, Incidence::left);
    if (x < 0.0)
      return std::exp(i * q0 * x / hbar) + a.R * std::exp(-i * q0 * x / hbar);
    const complexd p = p_of_q(q0, V, m);
    return a.T * std::exp(i * p * x / hbar);
  }

  const double P = set.p0_new;
  const Amplitudes a = amplitudes(complexd{P, 0.0}, V, m, Incidence::right, CutSide::above);
  if (x >= 0.0)
    return std::exp(-i * P * x / hbar) + a.R * std::exp(i * P * x / hbar);
  const complexd Q = q_of_p(complexd{P, 0.0}, V, m, CutSide::above);
  return a.T * std::exp(-i * Q * x / hbar);
}

}  // namespace stepswitch
