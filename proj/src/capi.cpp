// Copyright 2026 The homfid Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "homfid/homfid.h"

#include <cstring>
#include <string>

#include "error.hpp"
#include "estimator.hpp"
#include "records_io.hpp"
#include "scheduler.hpp"
#include "simulator.hpp"
#include "specfun.hpp"
#include "states.hpp"

struct homfid_state {
    homfid::states::FockDensityMatrix rho;
};
struct homfid_kernel {
    homfid::est::Kernel kernel;
};
struct homfid_schedule {
    homfid::sim::PhaseSchedule schedule;
};
struct homfid_records {
    std::vector<homfid::sim::QuadratureRecord> records;
};
struct homfid_profile {
    homfid::sched::VarianceProfile profile;
};

namespace {

thread_local std::string g_last_error;

homfid_status map_code(homfid::errc code) {
    using homfid::errc;
    switch (code) {
        case errc::invalid_argument: return HOMFID_ERR_INVALID_ARGUMENT;
        case errc::threshold: return HOMFID_ERR_THRESHOLD;
        case errc::unsupported_order: return HOMFID_ERR_UNSUPPORTED_ORDER;
        case errc::truncation: return HOMFID_ERR_TRUNCATION;
        case errc::empty_data: return HOMFID_ERR_EMPTY;
        case errc::parse: return HOMFID_ERR_PARSE;
        case errc::io: return HOMFID_ERR_IO;
        case errc::envelope: return HOMFID_ERR_ENVELOPE;
        case errc::underpopulated_bin: return HOMFID_ERR_UNDERPOPULATED;
        case errc::misuse: return HOMFID_ERR_MISUSE;
        case errc::data_quality: return HOMFID_ERR_DATA_QUALITY;
        case errc::degenerate: return HOMFID_ERR_DEGENERATE;
        case errc::dimension_mismatch: return HOMFID_ERR_DIMENSION;
    }
    return HOMFID_ERR_INTERNAL;
}

template <typename Fn>
homfid_status guarded(Fn &&fn) noexcept {
    try {
        fn();
        g_last_error.clear();
        return HOMFID_OK;
    } catch (const homfid::Error &e) {
        g_last_error = e.what();
        return map_code(e.code());
    } catch (const std::exception &e) {
        g_last_error = e.what();
        return HOMFID_ERR_INTERNAL;
    } catch (...) {
        g_last_error = "unknown error";
        return HOMFID_ERR_INTERNAL;
    }
}

void require(bool ok, const char *what) {
    if (!ok) homfid::raise(homfid::errc::invalid_argument, what);
}

}  // namespace

extern "C" {

const char *homfid_version(void) { return "1.0.0"; }

const char *homfid_status_name(int status) {
    switch (status) {
        case HOMFID_OK: return "ok";
        case HOMFID_ERR_INVALID_ARGUMENT: return "invalid-argument";
        case HOMFID_ERR_THRESHOLD: return "efficiency-threshold";
        case HOMFID_ERR_UNSUPPORTED_ORDER: return "unsupported-order";
        case HOMFID_ERR_TRUNCATION: return "truncation";
        case HOMFID_ERR_EMPTY: return "empty-data";
        case HOMFID_ERR_PARSE: return "parse-error";
        case HOMFID_ERR_IO: return "io-error";
        case HOMFID_ERR_ENVELOPE: return "envelope-failure";
        case HOMFID_ERR_UNDERPOPULATED: return "underpopulated-bin";
        case HOMFID_ERR_MISUSE: return "misuse";
        case HOMFID_ERR_DATA_QUALITY: return "data-quality";
        case HOMFID_ERR_DEGENERATE: return "degenerate";
        case HOMFID_ERR_DIMENSION: return "dimension-mismatch";
        default: return "internal-error";
    }
}

const char *homfid_last_error(void) { return g_last_error.c_str(); }

double homfid_dawson(double y) { return homfid::specfun::dawson(y); }

void homfid_erfi_scaled(double re, double im, double *out_re, double *out_im) {
    const auto v = homfid::specfun::erfi_scaled({re, im});
    if (out_re) *out_re = v.real();
    if (out_im) *out_im = v.imag();
}

/* ---- states ----------------------------------------------------------- */

homfid_status homfid_state_cat(double alpha_re, double alpha_im, double phi, int cutoff,
                               homfid_state **out) {
    return guarded([&] {
        require(out != nullptr, "output handle is null");
        homfid::states::CatSpec spec{{alpha_re, alpha_im}, phi};
        *out = new homfid_state{homfid::states::cat_density_matrix(spec, cutoff)};
    });
}

homfid_status homfid_state_squeezed_fock(int n, double r, int cutoff, homfid_state **out) {
    return guarded([&] {
        require(out != nullptr, "output handle is null");
        *out = new homfid_state{homfid::states::squeezed_fock_density_matrix({n, r}, cutoff)};
    });
}

homfid_status homfid_state_squeezed_thermal(double r, const double *weights, int count,
                                            int cutoff, homfid_state **out) {
    return guarded([&] {
        require(out != nullptr, "output handle is null");
        require(weights != nullptr && count > 0, "weights are required");
        homfid::states::SqueezedThermalSpec spec;
        spec.r = r;
        spec.weights.assign(weights, weights + count);
        *out = new homfid_state{homfid::states::squeezed_thermal_density_matrix(spec, cutoff)};
    });
}

void homfid_state_free(homfid_state *state) { delete state; }

int homfid_state_dim(const homfid_state *state) { return state ? state->rho.dim() : 0; }

homfid_status homfid_state_mean_photon(const homfid_state *state, double *out) {
    return guarded([&] {
        require(state && out, "null argument");
        *out = homfid::states::mean_photon(state->rho);
    });
}

homfid_status homfid_state_wigner_origin(const homfid_state *state, double *out) {
    return guarded([&] {
        require(state && out, "null argument");
        *out = homfid::states::wigner_origin(state->rho);
    });
}

homfid_status homfid_state_fidelity(const homfid_state *rho, const homfid_state *pure_target,
                                    double *out) {
    return guarded([&] {
        require(rho && pure_target && out, "null argument");
        *out = homfid::states::fidelity_oracle(rho->rho, pure_target->rho);
    });
}

homfid_status homfid_state_quadrature_pdf(const homfid_state *state, double theta, double eta,
                                          double x, double *out) {
    return guarded([&] {
        require(state && out, "null argument");
        *out = homfid::states::quadrature_pdf(state->rho, theta, eta, x);
    });
}

homfid_status homfid_lund_fidelity(double alpha, double r, double *out) {
    return guarded([&] {
        require(out != nullptr, "null argument");
        *out = homfid::states::lund_fidelity(alpha, r);
    });
}

homfid_status homfid_optimal_squeezing(double alpha, double *r_star, double *f_max) {
    return guarded([&] {
        require(r_star != nullptr, "null argument");
        *r_star = homfid::states::optimize_squeezing(alpha);
        if (f_max) *f_max = homfid::states::lund_fidelity(alpha, *r_star);
    });
}

/* ---- kernels ----------------------------------------------------------- */

homfid_status homfid_kernel_cat(double alpha_re, double alpha_im, double phi, double eta,
                                homfid_kernel **out) {
    return guarded([&] {
        require(out != nullptr, "output handle is null");
        *out = new homfid_kernel{
            homfid::est::Kernel::cat({{alpha_re, alpha_im}, phi}, eta)};
    });
}

homfid_status homfid_kernel_squeezed_fock(int n, double r, double eta, homfid_kernel **out) {
    return guarded([&] {
        require(out != nullptr, "output handle is null");
        *out = new homfid_kernel{homfid::est::Kernel::squeezed_fock(n, r, eta)};
    });
}

homfid_status homfid_kernel_husimi_q(double alpha_re, double alpha_im, double alphastar_re,
                                     double alphastar_im, double eta, double r,
                                     homfid_kernel **out) {
    return guarded([&] {
        require(out != nullptr, "output handle is null");
        *out = new homfid_kernel{homfid::est::Kernel::husimi_q(
            {alpha_re, alpha_im}, {alphastar_re, alphastar_im}, eta, r)};
    });
}

homfid_status homfid_kernel_mean_photon(double eta, homfid_kernel **out) {
    return guarded([&] {
        require(out != nullptr, "output handle is null");
        *out = new homfid_kernel{homfid::est::Kernel::mean_photon(eta)};
    });
}

void homfid_kernel_free(homfid_kernel *kernel) { delete kernel; }

homfid_status homfid_kernel_eval(const homfid_kernel *kernel, double xprime, double theta,
                                 double *value, double *null_part) {
    return guarded([&] {
        require(kernel != nullptr, "null kernel");
        const auto e = kernel->kernel.eval(xprime, theta);
        if (value) *value = e.value;
        if (null_part) *null_part = e.imag;
    });
}

int homfid_kernel_odd_parity(const homfid_kernel *kernel) {
    return kernel && kernel->kernel.odd_parity() ? 1 : 0;
}

/* ---- schedules ----------------------------------------------------------- */

homfid_status homfid_schedule_uniform(long long total, int bins, homfid_schedule **out) {
    return guarded([&] {
        require(out != nullptr, "output handle is null");
        *out = new homfid_schedule{homfid::sim::PhaseSchedule::uniform(total, bins)};
    });
}

homfid_status homfid_schedule_squeezed_thermal(double r, long long total, int bins,
                                               homfid_schedule **out) {
    return guarded([&] {
        require(out != nullptr, "output handle is null");
        *out = new homfid_schedule{homfid::sched::squeezed_thermal_schedule(r, total, bins)};
    });
}

homfid_status homfid_schedule_read_csv(const char *path, homfid_schedule **out) {
    return guarded([&] {
        require(path && out, "null argument");
        *out = new homfid_schedule{homfid::io::read_schedule_csv(path)};
    });
}

homfid_status homfid_schedule_write_csv(const homfid_schedule *schedule, const char *path) {
    return guarded([&] {
        require(schedule && path, "null argument");
        homfid::io::write_schedule_csv(schedule->schedule, path);
    });
}

void homfid_schedule_free(homfid_schedule *schedule) { delete schedule; }

long long homfid_schedule_total(const homfid_schedule *schedule) {
    return schedule ? schedule->schedule.total() : 0;
}

int homfid_schedule_bins(const homfid_schedule *schedule) {
    return schedule ? (int)schedule->schedule.bins().size() : 0;
}

homfid_status homfid_schedule_bin(const homfid_schedule *schedule, int index, double *theta,
                                  long long *count) {
    return guarded([&] {
        require(schedule != nullptr, "null schedule");
        require(index >= 0 && index < (int)schedule->schedule.bins().size(),
                "bin index out of range");
        if (theta) *theta = schedule->schedule.bins()[(size_t)index].theta;
        if (count) *count = schedule->schedule.bins()[(size_t)index].count;
    });
}

int homfid_schedule_density_weighted(const homfid_schedule *schedule) {
    return schedule &&
                   schedule->schedule.kind() == homfid::sim::PhaseSchedule::Kind::Density
               ? 1
               : 0;
}

/* ---- records ------------------------------------------------------------ */

homfid_status homfid_simulate(const homfid_state *state, const homfid_schedule *schedule,
                              double eta, uint64_t seed, homfid_records **out) {
    return guarded([&] {
        require(state && schedule && out, "null argument");
        *out = new homfid_records{
            homfid::sim::sample_records(state->rho, schedule->schedule, eta, seed)};
    });
}

homfid_status homfid_records_read_csv(const char *path, homfid_records **out) {
    return guarded([&] {
        require(path && out, "null argument");
        *out = new homfid_records{homfid::io::read_records_csv(path)};
    });
}

homfid_status homfid_records_write_csv(const homfid_records *records, const char *path) {
    return guarded([&] {
        require(records && path, "null argument");
        homfid::io::write_records_csv(records->records, path);
    });
}

void homfid_records_free(homfid_records *records) { delete records; }

long long homfid_records_count(const homfid_records *records) {
    return records ? (long long)records->records.size() : 0;
}

homfid_status homfid_records_get(const homfid_records *records, long long index, double *theta,
                                 double *xprime) {
    return guarded([&] {
        require(records != nullptr, "null records");
        require(index >= 0 && index < (long long)records->records.size(),
                "record index out of range");
        if (theta) *theta = records->records[(size_t)index].theta;
        if (xprime) *xprime = records->records[(size_t)index].xprime;
    });
}

void homfid_fold_phase(double theta, double xprime, double *theta_out, double *xprime_out) {
    const auto [t, x] = homfid::sim::fold_phase(theta, xprime);
    if (theta_out) *theta_out = t;
    if (xprime_out) *xprime_out = x;
}

/* ---- estimation ---------------------------------------------------------- */

homfid_status homfid_estimate_mean(const homfid_records *records, const homfid_kernel *kernel,
                                   const homfid_schedule *schedule_or_null, int threads,
                                   homfid_estimate *out) {
    return guarded([&] {
        require(records && kernel && out, "null argument");
        const auto e = homfid::est::estimate(
            records->records, kernel->kernel,
            schedule_or_null ? &schedule_or_null->schedule : nullptr, threads);
        out->value = e.value;
        out->std_err = e.stderr_value;
        out->count = e.count;
        out->density_weighted = e.density_weighted ? 1 : 0;
    });
}

homfid_status homfid_null_diagnostic(const homfid_records *records, const homfid_kernel *kernel,
                                     double *z) {
    return guarded([&] {
        require(records && kernel && z, "null argument");
        *z = homfid::est::null_diagnostic(records->records, kernel->kernel);
    });
}

namespace {

homfid::est::Estimate unpack(const homfid_estimate &e) {
    homfid::est::Estimate out;
    out.value = e.value;
    out.stderr_value = e.std_err;
    out.count = e.count;
    out.density_weighted = e.density_weighted != 0;
    return out;
}

}  // namespace

homfid_status homfid_witness_negativity(const homfid_kernel *kernel,
                                        const homfid_estimate *f_minus, double significance,
                                        homfid_verdict *out) {
    return guarded([&] {
        require(kernel && f_minus && out, "null argument");
        const auto v =
            homfid::est::witness_negativity(kernel->kernel, unpack(*f_minus), significance);
        out->passed = v.passed ? 1 : 0;
        out->margin_sigma = v.margin_sigma;
        out->bound = v.bound;
    });
}

homfid_status homfid_witness_qng(const homfid_kernel *kernel, const homfid_estimate *f_minus,
                                 const homfid_estimate *nbar, double significance,
                                 homfid_verdict *out) {
    return guarded([&] {
        require(kernel && f_minus && nbar && out, "null argument");
        const auto v = homfid::est::witness_qng(kernel->kernel, unpack(*f_minus), unpack(*nbar),
                                                significance);
        out->passed = v.passed ? 1 : 0;
        out->margin_sigma = v.margin_sigma;
        out->bound = v.bound;
    });
}

/* ---- variance profiles ----------------------------------------------------- */

homfid_status homfid_variance_profile(const homfid_records *records,
                                      const homfid_kernel *kernel, int bins,
                                      homfid_profile **out) {
    return guarded([&] {
        require(records && kernel && out, "null argument");
        *out = new homfid_profile{
            homfid::sched::empirical_variance_profile(records->records, kernel->kernel, bins)};
    });
}

void homfid_profile_free(homfid_profile *profile) { delete profile; }

int homfid_profile_bins(const homfid_profile *profile) {
    return profile ? (int)profile->profile.grid.size() : 0;
}

homfid_status homfid_profile_get(const homfid_profile *profile, int index, double *theta,
                                 double *vf) {
    return guarded([&] {
        require(profile != nullptr, "null profile");
        require(index >= 0 && index < (int)profile->profile.grid.size(),
                "profile index out of range");
        if (theta) *theta = profile->profile.grid[(size_t)index];
        if (vf) *vf = profile->profile.vf[(size_t)index];
    });
}

homfid_status homfid_profile_predicted_variances(const homfid_profile *profile, long long total,
                                                 double *v_min, double *v_uniform) {
    return guarded([&] {
        require(profile != nullptr, "null profile");
        const auto [vmin, vc] = homfid::sched::predicted_variances(profile->profile, total);
        if (v_min) *v_min = vmin;
        if (v_uniform) *v_uniform = vc;
    });
}

homfid_status homfid_schedule_from_profile(const homfid_profile *profile, long long total,
                                           homfid_schedule **out) {
    return guarded([&] {
        require(profile && out, "null argument");
        *out = new homfid_schedule{homfid::sched::optimal_schedule(profile->profile, total)};
    });
}

} /* extern "C" */
