/* Copyright 2026 The homfid Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* C API of the homfid shared library.
 *
 * Quantum-state fidelities with cat-like and squeezed Fock states are
 * estimated directly from homodyne quadrature records by averaging closed
 * form sampling functions; the library also certifies Wigner-function
 * negativity and quantum non-Gaussianity from those fidelities, optimizes
 * phase-sampling schedules, and ships an exact-state Monte Carlo homodyne
 * simulator.
 *
 * All objects are opaque handles created and destroyed by this API. Every
 * fallible call returns a homfid_status; on failure a thread-local message
 * is available from homfid_last_error().
 *
 * Conventions: [x, p] = i with vacuum quadrature variance 1/2; phases in
 * radians; records are folded to theta in [0, pi) via x_{theta+pi} =
 * -x_theta.
 */

#ifndef HOMFID_H
#define HOMFID_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum homfid_status {
    HOMFID_OK = 0,
    HOMFID_ERR_INVALID_ARGUMENT = 1,
    HOMFID_ERR_THRESHOLD = 2,          /* detection-efficiency lower bound violated */
    HOMFID_ERR_UNSUPPORTED_ORDER = 3,  /* no closed-form kernel for this order */
    HOMFID_ERR_TRUNCATION = 4,         /* Fock cutoff insufficient */
    HOMFID_ERR_EMPTY = 5,
    HOMFID_ERR_PARSE = 6,
    HOMFID_ERR_IO = 7,
    HOMFID_ERR_ENVELOPE = 8,           /* rejection-sampling envelope failure */
    HOMFID_ERR_UNDERPOPULATED = 9,     /* too few records in a phase bin */
    HOMFID_ERR_MISUSE = 10,            /* e.g. witness on an even-parity kernel */
    HOMFID_ERR_DATA_QUALITY = 11,
    HOMFID_ERR_DEGENERATE = 12,
    HOMFID_ERR_DIMENSION = 13,
    HOMFID_ERR_INTERNAL = 14
} homfid_status;

const char *homfid_version(void);
const char *homfid_status_name(int status);
/* Message of the most recent failure on this thread; empty string if none. */
const char *homfid_last_error(void);

/* ---- special functions ---------------------------------------------- */

/* Dawson integral D(y). */
double homfid_dawson(double y);
/* e^{-z^2} erfi(z) for z = re + i im. */
void homfid_erfi_scaled(double re, double im, double *out_re, double *out_im);

/* ---- states ----------------------------------------------------------- */

typedef struct homfid_state homfid_state;

/* (|alpha> + e^{i phi} |-alpha>) / sqrt(2 N). */
homfid_status homfid_state_cat(double alpha_re, double alpha_im, double phi, int cutoff,
                               homfid_state **out);
/* U(r)|n>. */
homfid_status homfid_state_squeezed_fock(int n, double r, int cutoff, homfid_state **out);
/* U(r) (sum_n weights[n] |n><n|) U(r)^dag; weights must sum to 1. */
homfid_status homfid_state_squeezed_thermal(double r, const double *weights, int count,
                                            int cutoff, homfid_state **out);
void homfid_state_free(homfid_state *state);

int homfid_state_dim(const homfid_state *state);
homfid_status homfid_state_mean_photon(const homfid_state *state, double *out);
/* W(0,0) = <parity> / pi. */
homfid_status homfid_state_wigner_origin(const homfid_state *state, double *out);
/* Tr[rho |psi><psi|]; target must be pure. */
homfid_status homfid_state_fidelity(const homfid_state *rho, const homfid_state *pure_target,
                                    double *out);
/* Density of the measured quadrature x' at detection efficiency eta. */
homfid_status homfid_state_quadrature_pdf(const homfid_state *state, double theta, double eta,
                                          double x, double *out);

/* Fidelity of U(r)|1> with the odd coherent state of amplitude alpha. */
homfid_status homfid_lund_fidelity(double alpha, double r, double *out);
/* argmax_r of the above; f_max may be NULL. */
homfid_status homfid_optimal_squeezing(double alpha, double *r_star, double *f_max);

/* ---- kernels (sampling functions) ------------------------------------- */

typedef struct homfid_kernel homfid_kernel;

/* Cat-state fidelity kernel S_F; requires eta > 1/2. */
homfid_status homfid_kernel_cat(double alpha_re, double alpha_im, double phi, double eta,
                                homfid_kernel **out);
/* Squeezed-Fock kernel f_sq,n for n in {0, 1}; requires
 * eta > 1 / (1 + e^{-2r}). */
homfid_status homfid_kernel_squeezed_fock(int n, double r, double eta, homfid_kernel **out);
/* Husimi-Q kernel with formally independent (alpha, alphastar); r selects
 * the squeezed-frame variant. */
homfid_status homfid_kernel_husimi_q(double alpha_re, double alpha_im, double alphastar_re,
                                     double alphastar_im, double eta, double r,
                                     homfid_kernel **out);
/* Mean-photon kernel [x'^2 - 1/2] / eta. */
homfid_status homfid_kernel_mean_photon(double eta, homfid_kernel **out);
void homfid_kernel_free(homfid_kernel *kernel);

/* Kernel value and its null (imaginary) component at one record. */
homfid_status homfid_kernel_eval(const homfid_kernel *kernel, double xprime, double theta,
                                 double *value, double *null_part);
/* 1 when the kernel targets an odd-parity state (odd cat, odd Fock). */
int homfid_kernel_odd_parity(const homfid_kernel *kernel);

/* ---- phase schedules --------------------------------------------------- */

typedef struct homfid_schedule homfid_schedule;

homfid_status homfid_schedule_uniform(long long total, int bins, homfid_schedule **out);
/* Closed-form optimal schedule m(theta) = M / (pi a^2(theta, r)). */
homfid_status homfid_schedule_squeezed_thermal(double r, long long total, int bins,
                                               homfid_schedule **out);
homfid_status homfid_schedule_read_csv(const char *path, homfid_schedule **out);
homfid_status homfid_schedule_write_csv(const homfid_schedule *schedule, const char *path);
void homfid_schedule_free(homfid_schedule *schedule);

long long homfid_schedule_total(const homfid_schedule *schedule);
int homfid_schedule_bins(const homfid_schedule *schedule);
homfid_status homfid_schedule_bin(const homfid_schedule *schedule, int index, double *theta,
                                  long long *count);
/* 1 if estimation over this schedule uses inverse-density weights. */
int homfid_schedule_density_weighted(const homfid_schedule *schedule);

/* ---- records ------------------------------------------------------------ */

typedef struct homfid_records homfid_records;

/* Monte Carlo homodyne simulation of the exact state model; reproducible
 * from the seed. */
homfid_status homfid_simulate(const homfid_state *state, const homfid_schedule *schedule,
                              double eta, uint64_t seed, homfid_records **out);
/* CSV with header `theta,xprime`; .gz paths are compressed. Phases are
 * folded to [0, pi) on read. */
homfid_status homfid_records_read_csv(const char *path, homfid_records **out);
homfid_status homfid_records_write_csv(const homfid_records *records, const char *path);
void homfid_records_free(homfid_records *records);

long long homfid_records_count(const homfid_records *records);
homfid_status homfid_records_get(const homfid_records *records, long long index, double *theta,
                                 double *xprime);
/* Fold (theta, x') from [0, 2 pi) onto [0, pi). */
void homfid_fold_phase(double theta, double xprime, double *theta_out, double *xprime_out);

/* ---- estimation ---------------------------------------------------------- */

typedef struct homfid_estimate {
    double value;
    double std_err;   /* sample std of per-record contributions / sqrt(M) */
    long long count;
    int density_weighted;
} homfid_estimate;

/* Average of the kernel over the records; pass the schedule that produced
 * the records (or NULL) to select the weighting. threads = 0 picks a
 * default; results are independent of the thread count. */
homfid_status homfid_estimate_mean(const homfid_records *records, const homfid_kernel *kernel,
                                   const homfid_schedule *schedule_or_null, int threads,
                                   homfid_estimate *out);
/* z-score of the null kernel component; 0 when identically zero. */
homfid_status homfid_null_diagnostic(const homfid_records *records, const homfid_kernel *kernel,
                                     double *z);

typedef struct homfid_verdict {
    int passed;
    double margin_sigma;
    /* negativity: Wigner-origin upper bound (1 - 2 F) / pi;
     * quantum non-Gaussianity: fidelity threshold T(nbar). */
    double bound;
} homfid_verdict;

/* F_- > 1/2 at the given significance certifies W(0,0) < 0. The kernel must
 * target an odd-parity state. */
homfid_status homfid_witness_negativity(const homfid_kernel *kernel,
                                        const homfid_estimate *f_minus, double significance,
                                        homfid_verdict *out);
/* F_- > 1/2 - (1/2) e^{-2 nbar (nbar+1)}; nbar from the mean-photon kernel
 * on the same records. */
homfid_status homfid_witness_qng(const homfid_kernel *kernel, const homfid_estimate *f_minus,
                                 const homfid_estimate *nbar, double significance,
                                 homfid_verdict *out);

/* ---- variance profiles and schedule optimization ------------------------- */

typedef struct homfid_profile homfid_profile;

/* Per-bin sample variance of kernel contributions; every bin needs >= 30
 * records. */
homfid_status homfid_variance_profile(const homfid_records *records,
                                      const homfid_kernel *kernel, int bins,
                                      homfid_profile **out);
void homfid_profile_free(homfid_profile *profile);
int homfid_profile_bins(const homfid_profile *profile);
homfid_status homfid_profile_get(const homfid_profile *profile, int index, double *theta,
                                 double *vf);
/* (V_min, V_uniform) for a run of `total` samples. */
homfid_status homfid_profile_predicted_variances(const homfid_profile *profile, long long total,
                                                 double *v_min, double *v_uniform);
/* Density-weighted schedule with m(theta) proportional to sqrt(V_f). */
homfid_status homfid_schedule_from_profile(const homfid_profile *profile, long long total,
                                           homfid_schedule **out);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* HOMFID_H */
