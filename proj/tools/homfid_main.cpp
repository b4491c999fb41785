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

// Command-line front end: simulate | estimate | witness | schedule |
// kernel-grid. Uses only the public C API of the shared library.

#include <cctype>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "homfid/homfid.h"
#include "json.hpp"

namespace {

constexpr int kExitRuntime = 1;
constexpr int kExitConfig = 2;

[[noreturn]] void die(int code, const std::string &field, const std::string &message) {
    std::fprintf(stderr, "error: %s: %s\n", field.c_str(), message.c_str());
    std::exit(code);
}

int exit_code_for(homfid_status status) {
    switch (status) {
        case HOMFID_ERR_INVALID_ARGUMENT:
        case HOMFID_ERR_THRESHOLD:
        case HOMFID_ERR_UNSUPPORTED_ORDER:
        case HOMFID_ERR_TRUNCATION:
        case HOMFID_ERR_MISUSE:
        case HOMFID_ERR_DEGENERATE:
            return kExitConfig;
        default:
            return kExitRuntime;
    }
}

void check(homfid_status status, const std::string &field) {
    if (status == HOMFID_OK) return;
    die(exit_code_for(status), field,
        std::string(homfid_last_error()) + " [" + homfid_status_name(status) + "]");
}

// Angles are radians; literals like PI, PI/2, 3PI/4, -2PI/3 are accepted.
double parse_angle(const std::string &text, const std::string &field) {
    std::string s;
    for (char c : text) s += (char)std::toupper((unsigned char)c);
    const auto pi_pos = s.find("PI");
    if (pi_pos == std::string::npos) {
        char *end = nullptr;
        const double v = std::strtod(text.c_str(), &end);
        if (end == text.c_str() || *end != '\0' || !std::isfinite(v)) {
            die(kExitConfig, field, "cannot parse angle '" + text + "'");
        }
        return v;
    }
    double factor = 1.0;
    std::string head = s.substr(0, pi_pos);
    if (head == "-") {
        factor = -1.0;
    } else if (!head.empty()) {
        char *end = nullptr;
        factor = std::strtod(head.c_str(), &end);
        if (end != head.c_str() + head.size()) {
            die(kExitConfig, field, "cannot parse angle '" + text + "'");
        }
    }
    double divisor = 1.0;
    std::string tail = s.substr(pi_pos + 2);
    if (!tail.empty()) {
        if (tail.front() != '/') die(kExitConfig, field, "cannot parse angle '" + text + "'");
        tail = tail.substr(1);
        char *end = nullptr;
        divisor = std::strtod(tail.c_str(), &end);
        if (end != tail.c_str() + tail.size() || divisor == 0.0) {
            die(kExitConfig, field, "cannot parse angle '" + text + "'");
        }
    }
    return factor * M_PI / divisor;
}

struct StateOptions {
    std::string kind;
    double alpha = 1.0;
    double alpha_im = 0.0;
    std::string phi_text = "PI";
    int n = 1;
    double r = 0.0;
    double nbar = 0.2;
    int cutoff = 64;
};

struct KernelOptions {
    std::string kind;
    double alpha = 1.0;
    double alpha_im = 0.0;
    std::string phi_text = "PI";
    int n = 1;
    double r = 0.0;
    double alphastar = 0.0;
    double alphastar_im = 0.0;
};

void add_state_flags(CLI::App *cmd, StateOptions &o) {
    cmd->add_option("--state", o.kind,
                    "state model: odd-cat | even-cat | cat | vacuum | squeezed-fock | "
                    "squeezed-vacuum | squeezed-thermal")
        ->required();
    cmd->add_option("--alpha", o.alpha, "coherent amplitude (real part)");
    cmd->add_option("--alpha-im", o.alpha_im, "coherent amplitude (imaginary part)");
    cmd->add_option("--phi", o.phi_text, "cat relative phase (radians; PI literals accepted)");
    cmd->add_option("--n", o.n, "Fock index");
    cmd->add_option("--r", o.r, "squeezing constant");
    cmd->add_option("--nbar", o.nbar, "thermal mean photon number");
    cmd->add_option("--cutoff", o.cutoff, "Fock-space cutoff")->capture_default_str();
}

homfid_state *make_state(const StateOptions &o) {
    homfid_state *state = nullptr;
    if (o.kind == "odd-cat") {
        check(homfid_state_cat(o.alpha, o.alpha_im, M_PI, o.cutoff, &state), "state");
    } else if (o.kind == "even-cat") {
        check(homfid_state_cat(o.alpha, o.alpha_im, 0.0, o.cutoff, &state), "state");
    } else if (o.kind == "cat") {
        check(homfid_state_cat(o.alpha, o.alpha_im, parse_angle(o.phi_text, "phi"), o.cutoff,
                               &state),
              "state");
    } else if (o.kind == "vacuum") {
        check(homfid_state_cat(0.0, 0.0, 0.0, o.cutoff, &state), "state");
    } else if (o.kind == "squeezed-fock") {
        check(homfid_state_squeezed_fock(o.n, o.r, o.cutoff, &state), "state");
    } else if (o.kind == "squeezed-vacuum") {
        check(homfid_state_squeezed_fock(0, o.r, o.cutoff, &state), "state");
    } else if (o.kind == "squeezed-thermal") {
        if (!(o.nbar >= 0.0)) die(kExitConfig, "nbar", "thermal mean photon must be >= 0");
        std::vector<double> weights;
        double sum = 0.0;
        for (int n = 0; n < o.cutoff / 2; ++n) {
            const double w = std::pow(o.nbar, n) / std::pow(1.0 + o.nbar, n + 1);
            weights.push_back(w);
            sum += w;
            if (w / sum < 1e-14) break;
        }
        for (auto &w : weights) w /= sum;
        check(homfid_state_squeezed_thermal(o.r, weights.data(), (int)weights.size(), o.cutoff,
                                            &state),
              "state");
    } else {
        die(kExitConfig, "state", "unknown state kind '" + o.kind + "'");
    }
    return state;
}

void add_kernel_flags(CLI::App *cmd, KernelOptions &o) {
    cmd->add_option("--kernel", o.kind,
                    "sampling function: cat | squeezed-fock | mean-photon | husimi-q")
        ->required();
    cmd->add_option("--alpha", o.alpha, "cat/Husimi amplitude (real part)");
    cmd->add_option("--alpha-im", o.alpha_im, "cat/Husimi amplitude (imaginary part)");
    cmd->add_option("--phi", o.phi_text, "cat relative phase (radians; PI literals accepted)");
    cmd->add_option("--n", o.n, "squeezed-Fock order (0 or 1)");
    cmd->add_option("--r", o.r, "squeezing constant");
    cmd->add_option("--alphastar", o.alphastar, "independent alphastar (real part)");
    cmd->add_option("--alphastar-im", o.alphastar_im, "independent alphastar (imaginary part)");
}

homfid_kernel *make_kernel(const KernelOptions &o, double eta) {
    homfid_kernel *kernel = nullptr;
    homfid_status status;
    if (o.kind == "cat") {
        status = homfid_kernel_cat(o.alpha, o.alpha_im, parse_angle(o.phi_text, "phi"), eta,
                                   &kernel);
    } else if (o.kind == "squeezed-fock") {
        status = homfid_kernel_squeezed_fock(o.n, o.r, eta, &kernel);
    } else if (o.kind == "mean-photon") {
        status = homfid_kernel_mean_photon(eta, &kernel);
    } else if (o.kind == "husimi-q") {
        status = homfid_kernel_husimi_q(o.alpha, o.alpha_im, o.alphastar, o.alphastar_im, eta,
                                        o.r, &kernel);
    } else {
        die(kExitConfig, "kernel", "unknown kernel kind '" + o.kind + "'");
    }
    check(status, status == HOMFID_ERR_THRESHOLD ? "eta" : "kernel");
    return kernel;
}

std::string kernel_label(const KernelOptions &o) {
    char buf[160];
    if (o.kind == "cat") {
        std::snprintf(buf, sizeof buf, "cat alpha=%g%+gi phi=%s", o.alpha, o.alpha_im,
                      o.phi_text.c_str());
    } else if (o.kind == "squeezed-fock") {
        std::snprintf(buf, sizeof buf, "squeezed-fock n=%d r=%g", o.n, o.r);
    } else if (o.kind == "mean-photon") {
        std::snprintf(buf, sizeof buf, "mean-photon");
    } else {
        std::snprintf(buf, sizeof buf, "husimi-q alpha=%g%+gi alphastar=%g%+gi r=%g", o.alpha,
                      o.alpha_im, o.alphastar, o.alphastar_im, o.r);
    }
    return buf;
}

int default_threads() {
    const char *env = std::getenv("HOMFID_THREADS");
    if (!env) return 0;
    const int v = std::atoi(env);
    return v > 0 ? v : 0;
}

void validate_eta_range(double eta) {
    if (!(eta > 0.0) || eta > 1.0) die(kExitConfig, "eta", "must lie in (0, 1]");
}

homfid_records *load_records(const std::string &path) {
    homfid_records *records = nullptr;
    check(homfid_records_read_csv(path.c_str(), &records), "records");
    return records;
}

homfid_schedule *load_schedule_or_null(const std::string &path) {
    if (path.empty()) return nullptr;
    homfid_schedule *schedule = nullptr;
    check(homfid_schedule_read_csv(path.c_str(), &schedule), "schedule");
    return schedule;
}

void append_jsonl(const std::string &path, const nlohmann::json &object) {
    if (path.empty()) return;
    std::ofstream f(path, std::ios::app);
    if (!f) die(kExitRuntime, "json", "cannot open " + path + " for writing");
    f << object.dump() << "\n";
}

// ---- subcommands ----------------------------------------------------------

struct SimulateArgs {
    StateOptions state;
    double eta = 1.0;
    long long samples = 0;
    int bins = 100;
    std::uint64_t seed = 1;
    std::string schedule_path;
    std::string out = "records.csv";
};

int run_simulate(const SimulateArgs &a) {
    validate_eta_range(a.eta);
    homfid_state *state = make_state(a.state);

    homfid_schedule *schedule = load_schedule_or_null(a.schedule_path);
    if (!schedule) {
        if (a.samples <= 0) die(kExitConfig, "samples", "must be positive");
        check(homfid_schedule_uniform(a.samples, a.bins, &schedule), "schedule");
    } else if (a.samples > 0 && a.samples != homfid_schedule_total(schedule)) {
        die(kExitConfig, "samples",
            "conflicts with the schedule total; omit --samples or make them match");
    }

    homfid_records *records = nullptr;
    check(homfid_simulate(state, schedule, a.eta, a.seed, &records), "simulate");
    check(homfid_records_write_csv(records, a.out.c_str()), "out");

    std::printf("records %s\n", a.out.c_str());
    std::printf("samples %lld\n", homfid_records_count(records));
    std::printf("eta %.17g\n", a.eta);
    std::printf("seed %llu\n", (unsigned long long)a.seed);
    std::printf("schedule %s bins=%d total=%lld\n",
                a.schedule_path.empty()
                    ? "uniform"
                    : (homfid_schedule_density_weighted(schedule) ? "density" : "file"),
                homfid_schedule_bins(schedule), homfid_schedule_total(schedule));
    std::printf("state %s\n", a.state.kind.c_str());

    homfid_records_free(records);
    homfid_schedule_free(schedule);
    homfid_state_free(state);
    return 0;
}

struct EstimateArgs {
    KernelOptions kernel;
    std::string records_path;
    std::string schedule_path;
    std::string json_path;
    double eta = 1.0;
    int threads = 0;
};

int run_estimate(const EstimateArgs &a) {
    validate_eta_range(a.eta);
    homfid_records *records = load_records(a.records_path);
    homfid_kernel *kernel = make_kernel(a.kernel, a.eta);
    homfid_schedule *schedule = load_schedule_or_null(a.schedule_path);

    homfid_estimate est;
    check(homfid_estimate_mean(records, kernel, schedule,
                               a.threads > 0 ? a.threads : default_threads(), &est),
          "estimate");
    double z = 0.0;
    check(homfid_null_diagnostic(records, kernel, &z), "estimate");

    std::printf("value %.17g\n", est.value);
    std::printf("stderr %.17g\n", est.std_err);
    std::printf("count %lld\n", est.count);
    std::printf("weighting %s\n", est.density_weighted ? "density-weighted" : "homogeneous");
    std::printf("z_null %.17g\n", z);
    std::printf("eta %.17g\n", a.eta);

    append_jsonl(a.json_path, {{"quantity", "estimate"},
                               {"kernel", kernel_label(a.kernel)},
                               {"value", est.value},
                               {"stderr", est.std_err},
                               {"count", est.count},
                               {"weighting", est.density_weighted ? "density-weighted"
                                                                  : "homogeneous"},
                               {"z_null", z},
                               {"eta", a.eta}});

    if (schedule) homfid_schedule_free(schedule);
    homfid_kernel_free(kernel);
    homfid_records_free(records);
    return 0;
}

struct WitnessArgs {
    KernelOptions kernel;
    std::string records_path;
    std::string schedule_path;
    std::string json_path;
    double eta = 1.0;
    double significance = 5.0;
    int threads = 0;
};

int run_witness(const WitnessArgs &a) {
    validate_eta_range(a.eta);
    if (!(a.significance > 0.0)) die(kExitConfig, "significance", "must be positive");
    homfid_records *records = load_records(a.records_path);
    homfid_kernel *kernel = make_kernel(a.kernel, a.eta);
    if (!homfid_kernel_odd_parity(kernel)) {
        die(kExitConfig, "kernel",
            "witnesses require an odd-parity target kernel (cat with phi=PI or squeezed-fock "
            "with odd n)");
    }
    homfid_schedule *schedule = load_schedule_or_null(a.schedule_path);
    const int threads = a.threads > 0 ? a.threads : default_threads();

    homfid_estimate f_minus;
    check(homfid_estimate_mean(records, kernel, schedule, threads, &f_minus), "estimate");
    homfid_kernel *nbar_kernel = nullptr;
    check(homfid_kernel_mean_photon(a.eta, &nbar_kernel), "eta");
    homfid_estimate nbar;
    check(homfid_estimate_mean(records, nbar_kernel, schedule, threads, &nbar), "estimate");
    double z = 0.0;
    check(homfid_null_diagnostic(records, kernel, &z), "estimate");

    homfid_verdict negativity, qng;
    check(homfid_witness_negativity(kernel, &f_minus, a.significance, &negativity), "witness");
    check(homfid_witness_qng(kernel, &f_minus, &nbar, a.significance, &qng), "witness");

    std::printf("f_minus %.17g\n", f_minus.value);
    std::printf("f_minus_stderr %.17g\n", f_minus.std_err);
    std::printf("nbar %.17g\n", nbar.value);
    std::printf("nbar_stderr %.17g\n", nbar.std_err);
    std::printf("count %lld\n", f_minus.count);
    std::printf("negativity_passed %s\n", negativity.passed ? "true" : "false");
    std::printf("negativity_margin_sigma %.17g\n", negativity.margin_sigma);
    std::printf("wigner_origin_bound %.17g\n", negativity.bound);
    std::printf("qng_passed %s\n", qng.passed ? "true" : "false");
    std::printf("qng_margin_sigma %.17g\n", qng.margin_sigma);
    std::printf("qng_threshold %.17g\n", qng.bound);
    std::printf("z_null %.17g\n", z);
    std::printf("significance %.17g\n", a.significance);
    std::printf("eta %.17g\n", a.eta);

    append_jsonl(a.json_path, {{"quantity", "witness"},
                               {"kernel", kernel_label(a.kernel)},
                               {"f_minus", f_minus.value},
                               {"f_minus_stderr", f_minus.std_err},
                               {"nbar", nbar.value},
                               {"nbar_stderr", nbar.std_err},
                               {"count", f_minus.count},
                               {"negativity_passed", negativity.passed != 0},
                               {"negativity_margin_sigma", negativity.margin_sigma},
                               {"wigner_origin_bound", negativity.bound},
                               {"qng_passed", qng.passed != 0},
                               {"qng_margin_sigma", qng.margin_sigma},
                               {"qng_threshold", qng.bound},
                               {"z_null", z},
                               {"significance", a.significance},
                               {"eta", a.eta}});

    homfid_kernel_free(nbar_kernel);
    if (schedule) homfid_schedule_free(schedule);
    homfid_kernel_free(kernel);
    homfid_records_free(records);
    return 0;
}

struct ScheduleArgs {
    KernelOptions kernel;
    bool have_kernel = false;
    std::string records_path;
    double r = 0.0;
    bool have_r = false;
    long long samples = 0;
    int bins = 100;
    double eta = 1.0;
    std::string out = "schedule.csv";
};

int run_schedule(const ScheduleArgs &a) {
    if (a.samples <= 0) die(kExitConfig, "samples", "must be positive");
    if (a.bins <= 0) die(kExitConfig, "bins", "must be positive");

    homfid_schedule *schedule = nullptr;
    double v_min = 0.0, v_uniform = 0.0;

    if (a.have_r && a.records_path.empty()) {
        check(homfid_schedule_squeezed_thermal(a.r, a.samples, a.bins, &schedule), "schedule");
        // Predicted variances from the analytic 1/a^4 profile shape; only the
        // ratio is meaningful without the state-dependent scale V_n.
        const double ch = std::cosh(2.0 * a.r);
        v_min = 1.0 / (double)a.samples;
        v_uniform = ch / (double)a.samples;
        std::printf("mode analytic\n");
        std::printf("r %.17g\n", a.r);
        std::printf("v_min_relative %.17g\n", v_min);
        std::printf("v_uniform_relative %.17g\n", v_uniform);
    } else if (!a.records_path.empty()) {
        if (!a.have_kernel) die(kExitConfig, "kernel", "probe mode requires a kernel selection");
        validate_eta_range(a.eta);
        homfid_records *records = load_records(a.records_path);
        homfid_kernel *kernel = make_kernel(a.kernel, a.eta);
        homfid_profile *profile = nullptr;
        check(homfid_variance_profile(records, kernel, a.bins, &profile), "records");
        check(homfid_profile_predicted_variances(profile, a.samples, &v_min, &v_uniform),
              "schedule");
        check(homfid_schedule_from_profile(profile, a.samples, &schedule), "schedule");
        std::printf("mode probe\n");
        std::printf("v_min %.17g\n", v_min);
        std::printf("v_uniform %.17g\n", v_uniform);
        homfid_profile_free(profile);
        homfid_kernel_free(kernel);
        homfid_records_free(records);
    } else {
        die(kExitConfig, "schedule", "provide either --r (analytic) or --records (probe)");
    }

    std::printf("variance_ratio %.17g\n", v_uniform / v_min);
    check(homfid_schedule_write_csv(schedule, a.out.c_str()), "out");
    std::printf("schedule %s\n", a.out.c_str());
    std::printf("samples %lld\n", homfid_schedule_total(schedule));
    std::printf("bins %d\n", homfid_schedule_bins(schedule));
    homfid_schedule_free(schedule);
    return 0;
}

struct GridArgs {
    KernelOptions kernel;
    double eta = 1.0;
    double x_min = -6.0;
    double x_max = 6.0;
    int x_points = 121;
    int theta_points = 64;
    std::string theta_text;
    std::string out = "grid.csv";
};

int run_kernel_grid(const GridArgs &a) {
    validate_eta_range(a.eta);
    if (a.x_points < 2 || !(a.x_max > a.x_min)) {
        die(kExitConfig, "x-range", "need x-max > x-min and at least two points");
    }
    if (a.theta_points < 1) die(kExitConfig, "theta-points", "must be positive");
    homfid_kernel *kernel = make_kernel(a.kernel, a.eta);

    std::vector<double> thetas;
    if (!a.theta_text.empty()) {
        thetas.push_back(parse_angle(a.theta_text, "theta"));
    } else if (a.theta_points == 1) {
        thetas.push_back(0.0);
    } else {
        for (int j = 0; j < a.theta_points; ++j) {
            thetas.push_back(M_PI * j / (a.theta_points - 1));
        }
    }

    std::ofstream f(a.out);
    if (!f) die(kExitRuntime, "out", "cannot open " + a.out + " for writing");
    f << "theta,x,value\n";
    char buf[96];
    for (double theta : thetas) {
        for (int i = 0; i < a.x_points; ++i) {
            const double x = a.x_min + (a.x_max - a.x_min) * i / (a.x_points - 1);
            double value = 0.0;
            check(homfid_kernel_eval(kernel, x, theta, &value, nullptr), "kernel");
            std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g\n", theta, x, value);
            f << buf;
        }
    }
    if (!f) die(kExitRuntime, "out", "write error on " + a.out);
    std::printf("grid %s\n", a.out.c_str());
    std::printf("rows %d\n", (int)thetas.size() * a.x_points);
    homfid_kernel_free(kernel);
    return 0;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"homodyne fidelity estimation with cat-like and squeezed Fock states"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(homfid_version()));

    SimulateArgs sim;
    auto *simulate = app.add_subcommand("simulate", "generate homodyne records from a state model");
    add_state_flags(simulate, sim.state);
    simulate->add_option("--eta", sim.eta, "detection efficiency")->capture_default_str();
    simulate->add_option("--samples", sim.samples,
                         "number of records (implied by --schedule when given)");
    simulate->add_option("--bins", sim.bins, "phase bins of the uniform schedule")
        ->capture_default_str();
    simulate->add_option("--seed", sim.seed, "random seed")->capture_default_str();
    simulate->add_option("--schedule", sim.schedule_path, "schedule CSV overriding the uniform one");
    simulate->add_option("--out", sim.out, "output records CSV (.gz for compression)")
        ->capture_default_str();

    EstimateArgs est;
    auto *estimate = app.add_subcommand("estimate", "average a sampling function over records");
    add_kernel_flags(estimate, est.kernel);
    estimate->add_option("--records", est.records_path, "records CSV")->required();
    estimate->add_option("--eta", est.eta, "detection efficiency")->capture_default_str();
    estimate->add_option("--schedule", est.schedule_path,
                         "schedule that produced the records (for density weighting)");
    estimate->add_option("--json", est.json_path, "append a JSON-lines result record here");
    estimate->add_option("--threads", est.threads, "worker threads (default: HOMFID_THREADS)");

    WitnessArgs wit;
    auto *witness =
        app.add_subcommand("witness", "Wigner-negativity and quantum-non-Gaussianity witnesses");
    add_kernel_flags(witness, wit.kernel);
    witness->add_option("--records", wit.records_path, "records CSV")->required();
    witness->add_option("--eta", wit.eta, "detection efficiency")->capture_default_str();
    witness->add_option("--significance", wit.significance, "certification threshold in sigma")
        ->capture_default_str();
    witness->add_option("--schedule", wit.schedule_path,
                        "schedule that produced the records (for density weighting)");
    witness->add_option("--json", wit.json_path, "append JSON-lines verdicts here");
    witness->add_option("--threads", wit.threads, "worker threads (default: HOMFID_THREADS)");

    ScheduleArgs sch;
    auto *schedule =
        app.add_subcommand("schedule", "build a variance-optimal phase schedule");
    add_kernel_flags(schedule, sch.kernel);
    schedule->get_option("--kernel")->required(false);
    schedule->add_option("--records", sch.records_path, "probe records CSV");
    auto *r_opt = schedule->get_option("--r");
    r_opt->description("squeezing constant (kernel parameter; analytic mode without --records)");
    schedule->add_option("--samples", sch.samples, "total samples of the planned run")->required();
    schedule->add_option("--bins", sch.bins, "schedule bins")->capture_default_str();
    schedule->add_option("--eta", sch.eta, "detection efficiency of the probe records")
        ->capture_default_str();
    schedule->add_option("--out", sch.out, "output schedule CSV")->capture_default_str();

    GridArgs grid;
    auto *kernel_grid =
        app.add_subcommand("kernel-grid", "tabulate a sampling function on a (theta, x) grid");
    add_kernel_flags(kernel_grid, grid.kernel);
    kernel_grid->add_option("--eta", grid.eta, "detection efficiency")->capture_default_str();
    kernel_grid->add_option("--x-min", grid.x_min)->capture_default_str();
    kernel_grid->add_option("--x-max", grid.x_max)->capture_default_str();
    kernel_grid->add_option("--x-points", grid.x_points)->capture_default_str();
    kernel_grid->add_option("--theta-points", grid.theta_points)->capture_default_str();
    kernel_grid->add_option("--theta", grid.theta_text,
                            "single cross-section phase (radians; PI literals accepted)");
    kernel_grid->add_option("--out", grid.out, "output grid CSV")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        if (e.get_exit_code() == 0) {  // --help / --version
            return app.exit(e);
        }
        std::fprintf(stderr, "error: cli: %s\n", e.what());
        return kExitConfig;
    }

    if (simulate->parsed()) return run_simulate(sim);
    if (estimate->parsed()) return run_estimate(est);
    if (witness->parsed()) return run_witness(wit);
    if (schedule->parsed()) {
        sch.r = sch.kernel.r;
        sch.have_r = r_opt->count() > 0;
        sch.have_kernel = schedule->get_option("--kernel")->count() > 0;
        return run_schedule(sch);
    }
    if (kernel_grid->parsed()) return run_kernel_grid(grid);
    return kExitConfig;
}
