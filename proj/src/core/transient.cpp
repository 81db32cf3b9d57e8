#include "core/transient.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <vector>

#include "core/errors.hpp"
#include "core/faddeeva.hpp"
#include "core/quadrature.hpp"
#include "core/units.hpp"

namespace stepswitch::transient {

namespace {

using units::hbar;

constexpr double pi = 3.14159265358979323846;
constexpr double sqrt_pi = 1.77245385090551602730;
constexpr complexd iu{0.0, 1.0};
constexpr double u_cutoff = 8.0;  // exp(-64) tail truncation of the u axis

double dist_point_segment(complexd z, complexd a, complexd b) {
  const complexd ab = b - a;
  const double len2 = std::norm(ab);
  if (len2 == 0.0) return std::abs(z - a);
  double s = ((z - a) * std::conj(ab)).real() / len2;
  s = std::clamp(s, 0.0, 1.0);
  return std::abs(z - (a + s * ab));
}

// i0 prescription of the scenario poles.  q-family poles (j = 1, 2) sit at
// +-q0 - i0; continued to the evanescent regime through E + i0 they adhere to
// the Re > 0 edge for +q0 and the Re < 0 edge for -q0.  p-family poles
// (j = 3, 4) sit at -+p0 + i0.
CutSide family_side(int j, double sgn) {
  if (j <= 2) return sgn > 0 ? CutSide::above : CutSide::below;
  return CutSide::above;
}

}  // namespace

complexd TermDescriptor::g(complexd k, CutSide side) const {
  if (plane == Plane::q) {
    const complexd p = p_of_q(k, V_new, m, side);
    switch (j * 10 + static_cast<int>(alpha)) {
      case 10 + 0: return 1.0 / (k - pole_q);                            // 1I
      case 10 + 2: return ((k - p) / (k + p)) / (k - pole_q);            // 1R
      case 20 + 0: return 1.0 / (k + pole_q);                            // 2I
      case 20 + 2: return ((k - p) / (k + p)) / (k + pole_q);            // 2R
      case 30 + 1: return 2.0 * k / ((k + p) * (p - pole_p));            // 3T
      case 40 + 1: return 2.0 * k / ((k + p) * (p + pole_p));            // 4T
      default: break;
    }
  } else {
    const complexd q = q_of_p(k, V_new, m, side);
    switch (j * 10 + static_cast<int>(alpha)) {
      case 30 + 0: return 1.0 / (k - pole_p);                            // 3I
      case 30 + 2: return ((k - q) / (q + k)) / (k - pole_p);            // 3R
      case 40 + 0: return 1.0 / (k + pole_p);                            // 4I
      case 40 + 2: return ((k - q) / (q + k)) / (k + pole_p);            // 4R
      case 10 + 1: return 2.0 * k / ((q + k) * (q - pole_q));            // 1T
      case 20 + 1: return 2.0 * k / ((q + k) * (q + pole_q));            // 2T
      default: break;
    }
  }
  throw std::logic_error("TermDescriptor::g: invalid term");
}

TermDescriptor term_descriptor(int j, Alpha alpha, const Scenario& s) {
  if (j < 1 || j > 4) throw std::invalid_argument("term_descriptor: j must be 1..4");
  const MomentumSet mom = derive_momenta(s);

  TermDescriptor d;
  d.j = j;
  d.alpha = alpha;
  d.m = s.m();
  d.V_new = s.V0_new;
  d.pole_q = (s.incidence == Incidence::left) ? mom.q0 : mom.q0_old;
  d.pole_p = (s.incidence == Incidence::left) ? mom.p0 : mom.p0_new;
  d.contour = (j <= 2) ? ContourSide::above : ContourSide::below;
  d.b_sign = (alpha == Alpha::R) ? 1.0 : -1.0;
  d.has_branch_term = (alpha != Alpha::I);

  // Support and integration plane per the term table: for j = 1, 2 the T part
  // lives on x > 0 in the p plane, for j = 3, 4 on x < 0 in the q plane.
  const bool x_positive = (j <= 2) ? (alpha == Alpha::T) : (alpha != Alpha::T);
  d.support = x_positive ? Support::positive_x : Support::negative_x;
  d.plane = ((j <= 2) == (alpha == Alpha::T)) ? Plane::p : Plane::q;
  d.phase_flag = x_positive;

  const double c2 = 2.0 * d.m * d.V_new;
  if (d.has_branch_term && c2 != 0.0) {
    d.cut_c = std::sqrt(std::abs(c2));
    d.cut_vertical = (d.plane == Plane::q) ? (c2 > 0.0) : (c2 < 0.0);
  }

  const double sgn = (j == 1 || j == 3) ? 1.0 : -1.0;
  const CutSide side = family_side(j, sgn);
  const complexd kq = sgn * d.pole_q;   // native q-family pole
  const complexd kp = sgn * d.pole_p;   // native p-family pole

  switch (j * 10 + static_cast<int>(alpha)) {
    case 10 + 0: case 20 + 0:
      d.pole_k0 = kq;
      d.A0 = 1.0;
      break;
    case 10 + 2: case 20 + 2: {
      d.pole_k0 = kq;
      const complexd p = p_of_q(kq, d.V_new, d.m, side);
      d.A0 = (kq - p) / (kq + p);
      break;
    }
    case 10 + 1: case 20 + 1:
      // Pole mapped to the p plane; residue picks up dq/dp and collapses to
      // the transmission amplitude 2q/(q + p) at the pole.
      d.pole_k0 = p_of_q(kq, d.V_new, d.m, side);
      d.A0 = 2.0 * kq / (kq + d.pole_k0);
      break;
    case 30 + 0: case 40 + 0:
      d.pole_k0 = kp;
      d.A0 = 1.0;
      break;
    case 30 + 2: case 40 + 2: {
      d.pole_k0 = kp;
      const complexd q = q_of_p(kp, d.V_new, d.m, side);
      d.A0 = (kp - q) / (q + kp);
      break;
    }
    case 30 + 1: case 40 + 1:
      d.pole_k0 = q_of_p(kp, d.V_new, d.m, side);
      d.A0 = 2.0 * kp / (d.pole_k0 + kp);
      break;
    default:
      throw std::invalid_argument("term_descriptor: invalid (j, alpha) pair");
  }
  d.pole_cut_side = side;
  return d;
}

SaddleFrame map_to_u(double x, double t, const TermDescriptor& term) {
  if (!(t > 0.0)) throw std::invalid_argument("map_to_u: t must be positive");
  SaddleFrame fr;
  fr.x = x;
  fr.t = t;
  fr.a = t / (2.0 * term.m * hbar);
  fr.b = term.b_sign * x / hbar;
  fr.saddle_k = -fr.b / (2.0 * fr.a);
  fr.f = complexd{1.0, -1.0} * std::sqrt(term.m * hbar / t);
  fr.u0 = (term.pole_k0 - fr.saddle_k) / fr.f;
  fr.quad_prefactor = std::exp(iu * (term.m * x * x / (2.0 * hbar * t)));
  return fr;
}

bool in_support(const TermDescriptor& term, double x) {
  return (term.support == Support::positive_x) ? (x >= 0.0) : (x < 0.0);
}

bool cut_crossed(const TermDescriptor& term, const SaddleFrame& frame) {
  return term.cut_c > 0.0 && std::abs(frame.saddle_k) < term.cut_c;
}

complexd eval_Iprime(const TermDescriptor& term, const SaddleFrame& frame) {
  const complexd z = (term.j <= 2) ? -frame.u0 : frame.u0;
  const auto wv = faddeeva::w_checked(z);
  if (!wv)
    throw OverflowError("eval_Iprime: reflection term 2 exp(-z^2) overflows");
  const double sign = (term.j <= 2) ? -1.0 : 1.0;
  return sign * iu * pi * frame.quad_prefactor * term.A0 * (*wv);
}

complexd remainder_H(const TermDescriptor& term, const SaddleFrame& frame, complexd u) {
  complexd du = u - frame.u0;
  if (std::abs(du) < 1e-13 * (1.0 + std::abs(frame.u0))) {
    // Evaluation essentially at the subtracted pole; nudge off it.
    u += 1e-8 * (1.0 + std::abs(frame.u0));
    du = u - frame.u0;
  }
  const complexd k = frame.f * u + frame.saddle_k;
  return term.g(k) - (term.A0 / frame.f) / du;
}

namespace {

struct CutImage {
  double x_c = 0.0;        // crossing of the cut image with the real-u axis
  complexd u_plus, u_minus;  // images of the +-branch points
};

CutImage cut_image(const TermDescriptor& term, const SaddleFrame& frame) {
  CutImage img;
  const complexd bp = term.cut_vertical ? iu * term.cut_c : complexd{term.cut_c, 0.0};
  img.u_plus = (bp - frame.saddle_k) / frame.f;
  img.u_minus = (-bp - frame.saddle_k) / frame.f;
  const complexd crossing_k =
      term.cut_vertical ? iu * frame.saddle_k : complexd{frame.saddle_k, 0.0};
  img.x_c = ((crossing_k - frame.saddle_k) / frame.f).real();
  return img;
}

std::vector<double> seed_breakpoints(const TermDescriptor& term, const SaddleFrame& frame) {
  std::vector<double> bk;
  auto add = [&](complexd k_feature) {
    const complexd u = (k_feature - frame.saddle_k) / frame.f;
    if (std::abs(u.imag()) < 3.0 && std::abs(u.real()) < u_cutoff)
      bk.push_back(u.real());
  };
  add(complexd{0.0, 0.0});
  add(term.pole_k0);
  if (term.cut_c > 0.0) {
    const complexd bp = term.cut_vertical ? iu * term.cut_c : complexd{term.cut_c, 0.0};
    add(bp);
    add(-bp);
  }
  return bk;
}

// Taylor coefficients H^{(k)}(0)/k! from a sampled circle inside the
// analyticity disk; the even ones weighted by (2n-1)!!/2^n give the series
// form of the Gaussian remainder integral.
bool try_series(const TermDescriptor& term, const SaddleFrame& frame, double tol,
                complexd& out) {
  double r = std::min(1.0, 0.5 * std::abs(frame.u0));
  if (term.cut_c > 0.0) {
    const CutImage img = cut_image(term, frame);
    r = std::min(r, 0.5 * dist_point_segment({0.0, 0.0}, img.u_minus, img.u_plus));
  }
  if (!(r > 0.05)) return false;

  constexpr int M = 64;
  constexpr int n_max = 14;
  std::array<complexd, M> samples;
  for (int k = 0; k < M; ++k) {
    const double th = 2.0 * pi * k / M;
    samples[k] = remainder_H(term, frame, r * std::exp(iu * th));
  }
  auto taylor = [&](int order) {
    complexd acc{0.0, 0.0};
    for (int k = 0; k < M; ++k) {
      const double th = 2.0 * pi * k * order / M;
      acc += samples[k] * std::exp(complexd{0.0, -th});
    }
    return acc / (static_cast<double>(M) * std::pow(r, order));
  };

  complexd sum = taylor(0);
  double dfact = 1.0;
  double pow2 = 1.0;
  int quiet = 0;
  const double floor_tol = tol / (sqrt_pi * std::max(std::abs(frame.f), 1e-300));
  for (int n = 1; n <= n_max; ++n) {
    dfact *= 2 * n - 1;
    pow2 *= 2.0;
    const complexd tn = (dfact / pow2) * taylor(2 * n);
    sum += tn;
    const double mag = std::abs(tn);
    if (mag < std::max(floor_tol, 1e-12 * std::abs(sum))) {
      if (++quiet >= 2) {
        out = sqrt_pi * sum;
        return true;
      }
    } else {
      quiet = 0;
    }
  }
  return false;
}

struct Leg {
  // z(s) = origin + s*dir + side*delta(s)*n for s in [0, S].  The offset
  // profile rises off the axis at 45 degrees, caps at delta0, and shrinks
  // like 1/|u| further out so 2*s*delta stays bounded and exp(-z^2) never
  // grows along the cut.
  complexd origin, dir, n;
  double side;
  double S;
  double delta0, kappa, abs_xc;

  double delta(double s) const {
    return std::min({s, delta0, kappa / (2.0 * (abs_xc + s) + 1e-300)});
  }
  double ddelta(double s) const {
    const double lim = kappa / (2.0 * (abs_xc + s) + 1e-300);
    if (s <= delta0 && s <= lim) return 1.0;
    if (delta0 <= lim) return 0.0;
    return -kappa / (2.0 * (abs_xc + s) * (abs_xc + s));
  }
  complexd z(double s) const { return origin + s * dir + side * delta(s) * n; }
  complexd dz(double s) const { return dir + side * ddelta(s) * n; }
};

}  // namespace

complexd eval_Isecond(const TermDescriptor& term, const SaddleFrame& frame, double tol) {
  if (!term.has_branch_term) return {0.0, 0.0};

  const double fmag = std::max(std::abs(frame.f), 1e-300);
  quad::QuadOptions opt;
  opt.abs_tol = tol / fmag;
  opt.rel_tol = 1e-10;

  const auto integrand = [&](complexd z) {
    return std::exp(-z * z) * remainder_H(term, frame, z);
  };
  const auto real_axis = [&](double u) { return integrand(complexd{u, 0.0}); };

  bool crossing = cut_crossed(term, frame);
  CutImage img;
  if (crossing) {
    img = cut_image(term, frame);
    if (std::abs(img.x_c) >= u_cutoff) crossing = false;  // detour beyond exp(-64)
  }

  if (!crossing) {
    if (!cut_crossed(term, frame) && std::abs(frame.u0) > 2.0) {
      complexd series;
      if (try_series(term, frame, tol, series))
        return frame.quad_prefactor * frame.f * series;
    }
    const quad::QuadResult res = quad::integrate(real_axis, -u_cutoff, u_cutoff, opt,
                                                 seed_breakpoints(term, frame));
    if (!res.converged)
      throw NumericError("eval_Isecond: real-axis quadrature did not converge",
                         res.error * fmag);
    return frame.quad_prefactor * frame.f * res.value;
  }

  // Cut crossed: straight runs on both sides of the crossing plus a hairpin
  // that follows the protruding half of the cut out to its branch point.
  const double want = (term.j <= 2) ? 1.0 : -1.0;
  const complexd u_b = (img.u_plus.imag() * want > 0.0) ? img.u_plus : img.u_minus;

  std::vector<double> seeds = seed_breakpoints(term, frame);
  quad::QuadResult left = quad::integrate(real_axis, -u_cutoff, img.x_c, opt, seeds);
  quad::QuadResult right = quad::integrate(real_axis, img.x_c, u_cutoff, opt, seeds);

  Leg leg;
  leg.origin = img.x_c;
  leg.S = std::abs(u_b - img.x_c);
  leg.dir = (u_b - img.x_c) / leg.S;
  const double sA = (leg.dir.imag() > 0.0) ? 1.0 : -1.0;
  leg.n = iu * leg.dir * sA;
  leg.kappa = 0.25;
  leg.delta0 = std::min(0.1, 0.1 * leg.S);
  leg.abs_xc = std::abs(img.x_c);
  leg.side = 1.0;

  // Panel edges sized by the local phase rate of exp(-u^2); stop early once
  // the Gaussian weight has decayed for good (only happens off the diagonal).
  std::vector<double> edges{0.0};
  {
    const double sw = leg.kappa / (2.0 * leg.delta0) - leg.abs_xc;
    double s = 0.0;
    bool decayed = false;
    while (s < leg.S && !decayed) {
      double h = std::clamp(1.5 / (1.0 + leg.abs_xc + s), 0.02, 1.0);
      if (leg.delta0 > s && leg.delta0 < s + h) h = leg.delta0 - s;
      if (sw > s && sw < s + h) h = sw - s;
      s = std::min(leg.S, s + h);
      edges.push_back(s);
      const complexd base = leg.origin + s * leg.dir;
      if ((base * base).real() > 45.0) decayed = true;
    }
  }
  const double S_eff = edges.back();

  quad::QuadOptions leg_opt = opt;
  const auto integrate_leg = [&](double side) {
    leg.side = side;
    const auto f = [&](double s) { return integrand(leg.z(s)) * leg.dz(s); };
    return quad::integrate(f, 0.0, S_eff,
                           leg_opt, std::vector<double>(edges.begin() + 1, edges.end() - 1));
  };
  const quad::QuadResult out_leg = integrate_leg(1.0);
  const quad::QuadResult back_leg = integrate_leg(-1.0);

  complexd tip{0.0, 0.0};
  double tip_err = 0.0;
  if (S_eff == leg.S) {
    const double radius = leg.delta(leg.S);
    const double th0 = std::arg(leg.n);
    const auto f = [&](double s) {
      const double th = th0 - sA * pi * s;
      const complexd e = std::exp(iu * th);
      return integrand(u_b + radius * e) * (-iu * sA * pi * radius * e);
    };
    const quad::QuadResult r = quad::integrate(f, 0.0, 1.0, leg_opt);
    tip = r.value;
    tip_err = r.error;
  }

  const double total_err =
      (left.error + right.error + out_leg.error + back_leg.error + tip_err) * fmag;
  if (!(left.converged && right.converged && out_leg.converged && back_leg.converged))
    throw NumericError("eval_Isecond: cut-detour quadrature did not converge", total_err);

  const complexd total = left.value + right.value + out_leg.value + tip - back_leg.value;
  return frame.quad_prefactor * frame.f * total;
}

complexd eval_term(const TermDescriptor& term, double x, double t, double tol) {
  if (!in_support(term, x)) return {0.0, 0.0};
  const SaddleFrame frame = map_to_u(x, t, term);
  const complexd Ip = eval_Iprime(term, frame);
  const complexd Is = eval_Isecond(term, frame, tol);
  const complexd cj = ((term.j <= 2) ? iu : -iu) / (2.0 * pi);
  const complexd F =
      term.phase_flag ? std::exp(iu * (term.V_new * t / hbar)) : complexd{1.0, 0.0};
  return cj * F * (Ip + Is);
}

complexd eval_term(int j, Alpha alpha, const Scenario& s, double x, double t) {
  return eval_term(term_descriptor(j, alpha, s), x, t);
}

complexd eval_term_approx(const TermDescriptor& term, double x, double t) {
  if (!in_support(term, x)) return {0.0, 0.0};
  const SaddleFrame frame = map_to_u(x, t, term);
  const complexd Ip = eval_Iprime(term, frame);
  complexd Is{0.0, 0.0};
  if (term.has_branch_term) {
    const complexd H0 = remainder_H(term, frame, {0.0, 0.0});
    Is = frame.quad_prefactor * frame.f * sqrt_pi * H0;
  }
  const complexd cj = ((term.j <= 2) ? iu : -iu) / (2.0 * pi);
  const complexd F =
      term.phase_flag ? std::exp(iu * (term.V_new * t / hbar)) : complexd{1.0, 0.0};
  return cj * F * (Ip + Is);
}

complexd eval_term_approx(int j, Alpha alpha, const Scenario& s, double x, double t) {
  return eval_term_approx(term_descriptor(j, alpha, s), x, t);
}

}  // namespace stepswitch::transient
