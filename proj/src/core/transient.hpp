#pragma once

#include <complex>

#include "core/scenario.hpp"

// The twelve transient terms psi_{j,alpha}: each is c_j * F * I with
//   I = int_C dk exp(-i(a k^2 + b k)) g(k),   a = t/(2 m hbar), b = -+ x/hbar,
// solved by steepest descent through u = (k + b/2a)/f, f = (1-i) sqrt(m hbar/t):
//   I = I' + I'',  I' the pole (w-function) part, I'' the branch-cut remainder.

namespace stepswitch::transient {

enum class Alpha { I, T, R };
enum class Plane { q, p };
enum class Support { negative_x, positive_x };
enum class ContourSide { above, below };

struct TermDescriptor {
  int j = 0;
  Alpha alpha = Alpha::I;
  Support support = Support::negative_x;
  Plane plane = Plane::q;           // integration variable
  bool has_branch_term = false;     // H != 0 after pole subtraction
  bool phase_flag = false;          // F carries exp(i V0_new t/hbar)
  ContourSide contour = ContourSide::above;
  double b_sign = -1.0;             // b = b_sign * x / hbar

  complexd pole_k0;                 // pole of g in the integration plane
  CutSide pole_cut_side = CutSide::above;  // edge the pole adheres to when on the cut
  complexd A0;                      // residue of g at pole_k0

  double cut_c = 0.0;               // |branch point| of the plane's cut (0: none)
  bool cut_vertical = false;        // cut along the imaginary axis of this plane

  double m = 0.0;
  double V_new = 0.0;
  complexd pole_q, pole_p;          // scenario pole family

  complexd g(complexd k, CutSide side = CutSide::above) const;
};

struct SaddleFrame {
  double x = 0.0, t = 0.0;
  double a = 0.0;                   // t/(2 m hbar)
  double b = 0.0;                   // b_sign * x / hbar
  double saddle_k = 0.0;            // -b/(2a)
  complexd f;                       // (1-i) sqrt(m hbar / t)
  complexd u0;                      // (pole_k0 - saddle_k)/f
  complexd quad_prefactor;          // exp(i m x^2 / (2 hbar t))
};

// One of the twelve (j, alpha) rows; throws std::invalid_argument otherwise.
TermDescriptor term_descriptor(int j, Alpha alpha, const Scenario& s);

SaddleFrame map_to_u(double x, double t, const TermDescriptor& term);

// Pole part: -i pi pref A0 w(-u0) for j = 1,2 and +i pi pref A0 w(u0) for j = 3,4.
complexd eval_Iprime(const TermDescriptor& term, const SaddleFrame& frame);

// Branch-cut remainder including the pref*f factor, by Taylor-series
// integration when the pole is far and no cut is crossed, otherwise by
// adaptive quadrature along the real-u axis with a detour hugging the cut.
complexd eval_Isecond(const TermDescriptor& term, const SaddleFrame& frame,
                      double tol = 1e-9);

// c_j F (I' + I''); identically zero off the term's support half-line.
complexd eval_term(int j, Alpha alpha, const Scenario& s, double x, double t);
complexd eval_term(const TermDescriptor& term, double x, double t, double tol = 1e-9);

// One-w-term analytic approximation: c_j F (I' + pref f sqrt(pi) H(0)).
complexd eval_term_approx(int j, Alpha alpha, const Scenario& s, double x, double t);
complexd eval_term_approx(const TermDescriptor& term, double x, double t);

// H(u) = G(u) - (A0/f)/(u - u0), the regularized integrand in the u plane.
complexd remainder_H(const TermDescriptor& term, const SaddleFrame& frame, complexd u);

bool in_support(const TermDescriptor& term, double x);

// True when the steepest descent path crosses the branch cut: |m x / t| < cut_c.
bool cut_crossed(const TermDescriptor& term, const SaddleFrame& frame);

}  // namespace stepswitch::transient
