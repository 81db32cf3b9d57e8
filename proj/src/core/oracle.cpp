#include "core/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "core/composer.hpp"
#include "core/errors.hpp"
#include "core/quadrature.hpp"
#include "core/units.hpp"

namespace stepswitch::oracle {

namespace {

using units::hbar;
constexpr double pi = 3.14159265358979323846;
constexpr complexd iu{0.0, 1.0};

// One additive part of the momentum-plane integrand.  tilt_up records the
// tail direction that makes its exp(+-ikx/hbar) factor decay when t = 0 and
// the Gaussian cannot help.
struct Piece {
  std::function<complexd(complexd)> f;
  bool tilt_up = true;
  bool has_cut = false;  // carries an R/T amplitude factor (branch cut present)
};

struct Problem {
  std::vector<Piece> pieces;
  complexd prefactor;           // +-i/(2 pi)
  std::vector<complexd> poles;  // on-axis pole locations in this plane
  double cut_c = 0.0;           // branch half-length in this plane (0: none)
  bool cut_vertical = false;
  double a = 0.0;               // t/(2 m hbar)
  double saddle = 0.0;          // m x / t (0 at t = 0)
  double kscale = 1.0;
  double x_over_hbar = 0.0;
};

Problem build_problem(int j, const Scenario& s, double x, double t) {
  const double m = s.m();
  const MomentumSet mom = derive_momenta(s);
  const double V = s.V0_new;

  Problem pr;
  pr.a = t / (2.0 * m * hbar);
  pr.saddle = (t > 0.0) ? m * x / t : 0.0;
  pr.x_over_hbar = x / hbar;

  const complexd pole_q = (s.incidence == Incidence::left) ? mom.q0 : mom.q0_old;
  const double pole_p = (s.incidence == Incidence::left) ? mom.p0 : mom.p0_new;
  pr.kscale = std::max({std::abs(pole_q), std::abs(pole_p), mom.p0_new,
                        std::sqrt(2.0 * m * std::abs(V)), 0.1});

  const double c2 = 2.0 * m * V;

  if (j <= 2) {
    // q-plane integrals of the psi_q eigenstate decomposition.
    const complexd kj = (j == 1) ? pole_q : -pole_q;
    pr.prefactor = iu / (2.0 * pi);
    pr.poles.push_back(kj);
    pr.cut_c = (c2 != 0.0) ? std::sqrt(std::abs(c2)) : 0.0;
    pr.cut_vertical = c2 > 0.0;
    const auto phase = [m, t](complexd q) {
      return std::exp(-iu * (q * q / (2.0 * m)) * (t / hbar));
    };
    if (x < 0.0) {
      pr.pieces.push_back({[=](complexd q) {
                             return std::exp(iu * q * (x / hbar)) * phase(q) / (q - kj);
                           },
                           false, false});
      pr.pieces.push_back({[=, Vc = V](complexd q) {
                             const complexd p = p_of_q(q, Vc, m);
                             return ((q - p) / (q + p)) *
                                    std::exp(-iu * q * (x / hbar)) * phase(q) / (q - kj);
                           },
                           true, true});
    } else {
      pr.pieces.push_back({[=, Vc = V](complexd q) {
                             const complexd p = p_of_q(q, Vc, m);
                             return (2.0 * q / (q + p)) *
                                    std::exp(iu * p * (x / hbar)) * phase(q) / (q - kj);
                           },
                           true, true});
    }
    return pr;
  }

  // j = 3, 4: p-plane integrals.
  const complexd kj = (j == 3) ? complexd{pole_p, 0.0} : complexd{-pole_p, 0.0};
  pr.prefactor = -iu / (2.0 * pi);
  pr.poles.push_back(kj);
  pr.cut_c = (c2 != 0.0) ? std::sqrt(std::abs(c2)) : 0.0;
  pr.cut_vertical = c2 < 0.0;
  const auto phase = [m, t, V](complexd p) {
    return std::exp(-iu * (p * p / (2.0 * m) - V) * (t / hbar));
  };
  if (x >= 0.0) {
    pr.pieces.push_back({[=](complexd p) {
                           return std::exp(iu * p * (x / hbar)) * phase(p) / (p - kj);
                         },
                         true, false});
    pr.pieces.push_back({[=, Vc = V](complexd p) {
                           const complexd q = q_of_p(p, Vc, m);
                           return ((p - q) / (q + p)) * std::exp(-iu * p * (x / hbar)) *
                                  phase(p) / (p - kj);
                         },
                         false, true});
  } else {
    pr.pieces.push_back({[=, Vc = V](complexd p) {
                           const complexd q = q_of_p(p, Vc, m);
                           return (2.0 * p / (q + p)) * std::exp(iu * q * (x / hbar)) *
                                  phase(p) / (p - kj);
                         },
                         false, true});
  }
  return pr;
}

// Straight-line path segment z(s) = z0 + s*(z1-z0), s in [0,1], integrated
// with phase-rate-seeded breakpoints.
quad::QuadResult integrate_segment(const std::function<complexd(complexd)>& f,
                                   complexd z0, complexd z1, const Problem& pr,
                                   const quad::QuadOptions& opt) {
  const complexd dz = z1 - z0;
  const double len = std::abs(dz);
  if (len == 0.0) return {};

  // Local oscillation rate |d/dk (a k^2 + k x/hbar)| plus pole spikes.
  std::vector<double> edges;
  double s = 0.0;
  while (s < 1.0) {
    const complexd z = z0 + s * dz;
    const double rate = 2.0 * pr.a * std::abs(z) + std::abs(pr.x_over_hbar) + 1.0;
    const double h = std::clamp(2.0 / (rate * len), 1e-4, 0.25);
    s = std::min(1.0, s + h);
    if (s < 1.0) edges.push_back(s);
  }
  for (const complexd& pole : pr.poles) {
    const double sp = ((pole - z0) * std::conj(dz)).real() / (len * len);
    for (double off : {-1e-2, -1e-3, 0.0, 1e-3, 1e-2}) {
      const double v = sp + off;
      if (v > 0.0 && v < 1.0) edges.push_back(v);
    }
  }

  const auto g = [&](double ss) { return f(z0 + ss * dz) * dz; };
  return quad::integrate(g, 0.0, 1.0, opt, edges);
}

}  // namespace

OracleResult oracle_psi_j(int j, const Scenario& s, double x, double t,
                          const ContourSpec& spec) {
  if (j < 1 || j > 4) throw std::invalid_argument("oracle_psi_j: j must be 1..4");
  if (!(t >= 0.0)) throw std::invalid_argument("oracle_psi_j: t must be >= 0");
  if (t > 500.0)
    throw NumericError("oracle_psi_j: t too large for affordable quadrature", 0.0);
  validate(s);

  const Problem pr = build_problem(j, s, x, t);

  // Physical contour side: above all singularities for j = 1,2, below for 3,4.
  const bool above = spec.side_set ? (spec.side == CutSide::above) : (j <= 2);
  const double eps = (spec.epsilon > 0.0) ? spec.epsilon : 1e-4 * pr.kscale;
  const double sgn = above ? 1.0 : -1.0;

  // Bend points bracket the singularities and the saddles +-m x / t (the
  // reflected pieces mirror the saddle) so the tilted tails sit in decaying
  // sectors of the full exponent.
  double pole_extent = pr.cut_c;
  for (const complexd& p : pr.poles)
    pole_extent = std::max({pole_extent, std::abs(p.real()), std::abs(p.imag())});
  const double waist = (pr.a > 0.0) ? 6.0 / std::sqrt(pr.a) : 0.0;
  const double bend_r =
      std::max(1.5 * pole_extent + 0.5, std::abs(pr.saddle) + waist + 0.5);
  const double bend_l = -bend_r;

  double tail = spec.k_max;
  if (tail <= 0.0) {
    if (t > 0.0) {
      tail = std::sqrt(62.0 / (0.70 * pr.a)) + 1.0;
    } else {
      // exp(ikx) decay only; assumes |x| not absurdly small at t = 0.
      tail = 60.0 * hbar / std::max(std::abs(x), 0.05) + 20.0;
    }
  }
  const double tilt = pi / 8.0;

  // Central polyline at Im k = sgn*eps with a rectangular detour over/under a
  // vertical cut (the horizontal-cut case passes the straight line already).
  std::vector<complexd> central;
  central.push_back({bend_l, sgn * eps});
  if (pr.cut_c > 0.0 && pr.cut_vertical) {
    const double w = std::max(4.0 * eps, 1e-3 * pr.cut_c);
    const double top = sgn * (pr.cut_c + w);
    central.push_back({-w, sgn * eps});
    central.push_back({-w, top});
    central.push_back({w, top});
    central.push_back({w, sgn * eps});
  }
  central.push_back({bend_r, sgn * eps});

  quad::QuadOptions opt;
  opt.abs_tol = spec.tol / std::max<std::size_t>(pr.pieces.size(), 1);
  opt.rel_tol = 1e-12;

  OracleResult out;
  complexd acc{0.0, 0.0};
  double err = 0.0;
  bool converged = true;

  for (const Piece& piece : pr.pieces) {
    // Tail directions: with a Gaussian present, left tail rises and right
    // tail descends (both into decaying sectors since the bends bracket the
    // saddle); at t = 0 both tails follow the piece's plane-wave decay side.
    double up_l, up_r;
    if (t > 0.0) {
      up_l = 1.0;
      up_r = -1.0;
    } else {
      up_l = piece.tilt_up ? 1.0 : -1.0;
      up_r = up_l;
    }
    const complexd tail_l =
        central.front() + tail * complexd{-std::cos(tilt), up_l * std::sin(tilt)};
    const complexd tail_r =
        central.back() + tail * complexd{std::cos(tilt), up_r * std::sin(tilt)};

    std::vector<complexd> path;
    path.push_back(tail_l);
    path.insert(path.end(), central.begin(), central.end());
    path.push_back(tail_r);

    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
      const quad::QuadResult r = integrate_segment(piece.f, path[i], path[i + 1], pr, opt);
      acc += r.value;
      err += r.error;
      converged = converged && r.converged;
    }
  }

  out.value = pr.prefactor * acc;
  out.error_estimate = err;
  out.converged = converged;
  if (!converged)
    throw NumericError("oracle_psi_j: contour quadrature did not converge", err);
  return out;
}

OracleResult oracle_psi(const Scenario& s, double x, double t, double tol) {
  const MomentumSet mom = derive_momenta(s);
  ContourSpec spec;
  spec.tol = tol;
  OracleResult out;
  if (s.incidence == Incidence::left) {
    const OracleResult r1 = oracle_psi_j(1, s, x, t, spec);
    const OracleResult r2 = oracle_psi_j(2, s, x, t, spec);
    const OracleResult r3 = oracle_psi_j(3, s, x, t, spec);
    out.value = r1.value + mom.R0 * r2.value + mom.T0 * r3.value;
    out.error_estimate = r1.error_estimate + std::abs(mom.R0) * r2.error_estimate +
                         std::abs(mom.T0) * r3.error_estimate;
    out.converged = r1.converged && r2.converged && r3.converged;
  } else {
    const OracleResult r4 = oracle_psi_j(4, s, x, t, spec);
    const OracleResult r3 = oracle_psi_j(3, s, x, t, spec);
    const OracleResult r2 = oracle_psi_j(2, s, x, t, spec);
    out.value = r4.value + mom.R0 * r3.value + mom.T0 * r2.value;
    out.error_estimate = r4.error_estimate + std::abs(mom.R0) * r3.error_estimate +
                         std::abs(mom.T0) * r2.error_estimate;
    out.converged = r2.converged && r3.converged && r4.converged;
  }
  return out;
}

CompareReport compare_report(const Scenario& s,
                             const std::vector<std::pair<double, double>>& samples,
                             double tol) {
  CompareReport rep;
  double sum = 0.0;
  for (const auto& [x, t] : samples) {
    const OracleResult ref = oracle_psi(s, x, t, tol);
    const complexd ex = composer::psi_exact(s, x, t, tol);
    CompareRow row;
    row.j = 0;
    row.x = x;
    row.t = t;
    row.abs_delta = std::abs(ex - ref.value);
    row.abs_psi = std::abs(ref.value);
    rep.rows.push_back(row);
    rep.max_abs = std::max(rep.max_abs, row.abs_delta);
    rep.sup_psi = std::max(rep.sup_psi, row.abs_psi);
    sum += row.abs_delta;
  }
  if (!rep.rows.empty()) rep.mean_abs = sum / rep.rows.size();
  rep.max_rel = (rep.sup_psi > 0.0) ? rep.max_abs / rep.sup_psi : 0.0;
  return rep;
}

}  // namespace stepswitch::oracle
