#include "stepswitch.h"

#include <cmath>
#include <cstring>
#include <string>

#include "core/composer.hpp"
#include "core/errors.hpp"
#include "core/gridsim.hpp"
#include "core/observables.hpp"
#include "core/oracle.hpp"
#include "core/scenario.hpp"
#include "core/transient.hpp"

using stepswitch::complexd;
using stepswitch::Scenario;

extern "C" {
struct ss_scenario {
  Scenario s;
};
struct ss_grid {
  stepswitch::gridsim::GridSim sim;
};
}

namespace {

thread_local std::string g_last_error;

ss_status fail(ss_status code, const char* msg) {
  g_last_error = msg;
  return code;
}

template <typename Fn>
ss_status guarded(Fn&& fn) {
  try {
    fn();
    return SS_OK;
  } catch (const std::invalid_argument& e) {
    return fail(SS_ERR_INVALID_ARGUMENT, e.what());
  } catch (const stepswitch::OverflowError& e) {
    return fail(SS_ERR_OVERFLOW, e.what());
  } catch (const stepswitch::NumericError& e) {
    return fail(SS_ERR_NUMERIC, e.what());
  } catch (const std::exception& e) {
    return fail(SS_ERR_NUMERIC, e.what());
  }
}

ss_complex to_c(complexd z) { return {z.real(), z.imag()}; }

complexd eval_by_method(const Scenario& s, ss_method method, double x, double t) {
  using namespace stepswitch;
  switch (method) {
    case SS_METHOD_INITIAL: return composer::psi_initial(s, x);
    case SS_METHOD_EXACT: return composer::psi_exact(s, x, t);
    case SS_METHOD_POLE_ONLY: return composer::psi_pole_part(s, x, t);
    case SS_METHOD_APPROX: return composer::psi_approx(s, x, t, false);
    case SS_METHOD_APPROX_DOMINANT: return composer::psi_approx(s, x, t, true);
    case SS_METHOD_LONGTIME: return composer::psi_longtime(s, x);
    case SS_METHOD_ORACLE: return oracle::oracle_psi(s, x, t).value;
  }
  throw std::invalid_argument("unknown evaluation method");
}

}  // namespace

extern "C" {

const char* ss_version(void) { return STEPSWITCH_VERSION; }

const char* ss_last_error(void) { return g_last_error.c_str(); }

ss_status ss_scenario_create(double mass_rel, double E_q_eV, double V0_old_eV,
                             double V0_new_eV, ss_incidence incidence,
                             ss_scenario** out) {
  if (!out) return fail(SS_ERR_INVALID_ARGUMENT, "ss_scenario_create: null output");
  *out = nullptr;
  return guarded([&] {
    Scenario s;
    s.mass = mass_rel;
    s.E_q = E_q_eV;
    s.V0_old = V0_old_eV;
    s.V0_new = V0_new_eV;
    s.incidence = (incidence == SS_INCIDENCE_LEFT) ? stepswitch::Incidence::left
                                                   : stepswitch::Incidence::right;
    stepswitch::validate(s);
    *out = new ss_scenario{s};
  });
}

void ss_scenario_free(ss_scenario* s) { delete s; }

ss_status ss_scenario_momenta(const ss_scenario* s, ss_momenta* out) {
  if (!s || !out) return fail(SS_ERR_INVALID_ARGUMENT, "ss_scenario_momenta: null argument");
  return guarded([&] {
    const stepswitch::MomentumSet m = stepswitch::derive_momenta(s->s);
    out->q0 = to_c(m.q0);
    out->p0 = m.p0;
    out->p0_new = m.p0_new;
    out->q0_old = to_c(m.q0_old);
    out->R0 = to_c(m.R0);
    out->T0 = to_c(m.T0);
    out->Rl = to_c(m.Rl);
    out->Tl = to_c(m.Tl);
    out->Rr = to_c(m.Rr);
    out->Tr = to_c(m.Tr);
  });
}

ss_status ss_eval_psi(const ss_scenario* s, ss_method method, double x_nm,
                      double t_fs, ss_complex* out) {
  if (!s || !out) return fail(SS_ERR_INVALID_ARGUMENT, "ss_eval_psi: null argument");
  return guarded([&] { *out = to_c(eval_by_method(s->s, method, x_nm, t_fs)); });
}

ss_status ss_eval_term(const ss_scenario* s, int j, char alpha, double x_nm,
                       double t_fs, int approx, ss_complex* out) {
  if (!s || !out) return fail(SS_ERR_INVALID_ARGUMENT, "ss_eval_term: null argument");
  return guarded([&] {
    using stepswitch::transient::Alpha;
    Alpha a;
    switch (alpha) {
      case 'I': a = Alpha::I; break;
      case 'T': a = Alpha::T; break;
      case 'R': a = Alpha::R; break;
      default: throw std::invalid_argument("ss_eval_term: alpha must be 'I', 'T' or 'R'");
    }
    const complexd v = approx
                           ? stepswitch::transient::eval_term_approx(j, a, s->s, x_nm, t_fs)
                           : stepswitch::transient::eval_term(j, a, s->s, x_nm, t_fs);
    *out = to_c(v);
  });
}

ss_status ss_observables(const ss_scenario* s, ss_method method, double x_nm,
                         double t_fs, double* density, double* flux,
                         double* hbar_omega) {
  if (!s) return fail(SS_ERR_INVALID_ARGUMENT, "ss_observables: null scenario");
  return guarded([&] {
    const Scenario& sc = s->s;
    const auto sampler = [&](double x, double t) { return eval_by_method(sc, method, x, t); };
    if (density) *density = stepswitch::observables::density(sampler, x_nm, t_fs);
    if (flux) *flux = stepswitch::observables::flux(sampler, sc.m(), x_nm, t_fs);
    if (hbar_omega) {
      const auto w = stepswitch::observables::omega_av(sampler, x_nm, t_fs);
      *hbar_omega = w ? *w : std::nan("");
    }
  });
}

ss_status ss_oracle_psi_j(const ss_scenario* s, int j, double x_nm, double t_fs,
                          double tol, ss_complex* out, double* error_estimate) {
  if (!s || !out) return fail(SS_ERR_INVALID_ARGUMENT, "ss_oracle_psi_j: null argument");
  return guarded([&] {
    stepswitch::oracle::ContourSpec spec;
    if (tol > 0.0) spec.tol = tol;
    const auto r = stepswitch::oracle::oracle_psi_j(j, s->s, x_nm, t_fs, spec);
    *out = to_c(r.value);
    if (error_estimate) *error_estimate = r.error_estimate;
  });
}

ss_status ss_grid_create(const ss_scenario* s, double L_nm, size_t n_points,
                         double dt_fs, int closed_box, ss_grid** out) {
  if (!s || !out) return fail(SS_ERR_INVALID_ARGUMENT, "ss_grid_create: null argument");
  *out = nullptr;
  return guarded([&] {
    *out = new ss_grid{stepswitch::gridsim::GridSim(s->s, L_nm, n_points, dt_fs,
                                                    closed_box != 0)};
  });
}

void ss_grid_free(ss_grid* g) { delete g; }

ss_status ss_grid_step(ss_grid* g, size_t nsteps) {
  if (!g) return fail(SS_ERR_INVALID_ARGUMENT, "ss_grid_step: null grid");
  return guarded([&] { g->sim.step(nsteps); });
}

double ss_grid_time(const ss_grid* g) { return g ? g->sim.time() : 0.0; }

size_t ss_grid_size(const ss_grid* g) { return g ? g->sim.size() : 0; }

double ss_grid_dx(const ss_grid* g) { return g ? g->sim.dx() : 0.0; }

double ss_grid_norm(const ss_grid* g) { return g ? g->sim.norm() : 0.0; }

int ss_grid_accuracy_warning(const ss_grid* g) {
  return (g && g->sim.accuracy_warning()) ? 1 : 0;
}

ss_status ss_grid_copy_psi(const ss_grid* g, ss_complex* buffer, size_t buffer_len) {
  if (!g || !buffer) return fail(SS_ERR_INVALID_ARGUMENT, "ss_grid_copy_psi: null argument");
  if (buffer_len < g->sim.size())
    return fail(SS_ERR_INVALID_ARGUMENT, "ss_grid_copy_psi: buffer too small");
  const auto& psi = g->sim.psi();
  for (size_t i = 0; i < psi.size(); ++i) buffer[i] = to_c(psi[i]);
  return SS_OK;
}

ss_status ss_grid_flux_at(const ss_grid* g, double x_nm, double* flux) {
  if (!g || !flux) return fail(SS_ERR_INVALID_ARGUMENT, "ss_grid_flux_at: null argument");
  return guarded([&] { *flux = g->sim.flux_at(x_nm); });
}

ss_status ss_grid_density_at(const ss_grid* g, double x_nm, double* density) {
  if (!g || !density)
    return fail(SS_ERR_INVALID_ARGUMENT, "ss_grid_density_at: null argument");
  return guarded([&] { *density = g->sim.density_at(x_nm); });
}

}  // extern "C"
