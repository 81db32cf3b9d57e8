/* stepswitch: transient wavefunction of a quantum particle after an
 * instantaneous potential-step height switch.
 *
 * C interface of the shared library.  All functions return ss_status; on
 * failure ss_last_error() carries a thread-local message.  Handles are
 * opaque; destroy them with the matching *_free call.
 *
 * Units: energies in eV, lengths in nm, times in fs, momenta in eV*fs/nm.
 */

#ifndef STEPSWITCH_H
#define STEPSWITCH_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ss_status {
  SS_OK = 0,
  SS_ERR_INVALID_ARGUMENT = 1,
  SS_ERR_NUMERIC = 2,
  SS_ERR_OVERFLOW = 3
} ss_status;

typedef enum ss_incidence { SS_INCIDENCE_LEFT = 0, SS_INCIDENCE_RIGHT = 1 } ss_incidence;

/* Wavefunction evaluation paths. */
typedef enum ss_method {
  SS_METHOD_INITIAL = 0,   /* old-potential stationary state               */
  SS_METHOD_EXACT = 1,     /* semianalytic transient solution              */
  SS_METHOD_POLE_ONLY = 2, /* exact solution without the branch remainders */
  SS_METHOD_APPROX = 3,    /* one-term analytic approximation              */
  SS_METHOD_APPROX_DOMINANT = 4,
  SS_METHOD_LONGTIME = 5,  /* t -> inf stationary state, modulo phase      */
  SS_METHOD_ORACLE = 6     /* direct contour-integral quadrature           */
} ss_method;

typedef struct ss_scenario ss_scenario;
typedef struct ss_grid ss_grid;

typedef struct ss_complex {
  double re, im;
} ss_complex;

typedef struct ss_momenta {
  ss_complex q0;        /* left-level momentum (imaginary when evanescent) */
  double p0;            /* old transmitted momentum                        */
  double p0_new;        /* new transmitted momentum                        */
  ss_complex q0_old;    /* left momentum of the initial state              */
  ss_complex R0, T0;    /* old-potential amplitudes of the initial state   */
  ss_complex Rl, Tl;    /* new-potential left amplitudes at q0             */
  ss_complex Rr, Tr;    /* new-potential right amplitudes at p0_new        */
} ss_momenta;

const char* ss_version(void);
const char* ss_last_error(void);

ss_status ss_scenario_create(double mass_rel, double E_q_eV, double V0_old_eV,
                             double V0_new_eV, ss_incidence incidence,
                             ss_scenario** out);
void ss_scenario_free(ss_scenario* s);
ss_status ss_scenario_momenta(const ss_scenario* s, ss_momenta* out);

/* psi(x, t) by the chosen method.  t in fs (>= 0; methods INITIAL/LONGTIME
 * ignore t). */
ss_status ss_eval_psi(const ss_scenario* s, ss_method method, double x_nm,
                      double t_fs, ss_complex* out);

/* One of the twelve transient terms psi_{j,alpha}; alpha is 'I', 'T' or 'R'. */
ss_status ss_eval_term(const ss_scenario* s, int j, char alpha, double x_nm,
                       double t_fs, int approx, ss_complex* out);

/* Density |psi|^2, flux (hbar/m) Im[psi* dpsi/dx] and hbar*omega_av in eV at
 * (x, t).  hbar_omega is NaN where |psi| < 1e-12.  Null outputs are skipped. */
ss_status ss_observables(const ss_scenario* s, ss_method method, double x_nm,
                         double t_fs, double* density, double* flux,
                         double* hbar_omega);

/* Reference quadrature of one truncated-plane-wave evolution psi_j. */
ss_status ss_oracle_psi_j(const ss_scenario* s, int j, double x_nm, double t_fs,
                          double tol, ss_complex* out, double* error_estimate);

/* Crank-Nicolson box simulation with Mains-Haddad boundaries (closed_box != 0
 * pins the edges to zero instead). */
ss_status ss_grid_create(const ss_scenario* s, double L_nm, size_t n_points,
                         double dt_fs, int closed_box, ss_grid** out);
void ss_grid_free(ss_grid* g);
ss_status ss_grid_step(ss_grid* g, size_t nsteps);
double ss_grid_time(const ss_grid* g);
size_t ss_grid_size(const ss_grid* g);
double ss_grid_dx(const ss_grid* g);
double ss_grid_norm(const ss_grid* g);
int ss_grid_accuracy_warning(const ss_grid* g);
ss_status ss_grid_copy_psi(const ss_grid* g, ss_complex* buffer, size_t buffer_len);
ss_status ss_grid_flux_at(const ss_grid* g, double x_nm, double* flux);
ss_status ss_grid_density_at(const ss_grid* g, double x_nm, double* density);

#ifdef __cplusplus
}
#endif

#endif /* STEPSWITCH_H */
