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

#include "scheduler.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "error.hpp"
#include "kernels.hpp"

namespace homfid::sched {

namespace {

void validate_profile(const VarianceProfile &profile) {
    if (profile.grid.empty() || profile.grid.size() != profile.vf.size()) {
        raise(errc::invalid_argument, "variance profile grid and values must match");
    }
    for (size_t i = 0; i < profile.grid.size(); ++i) {
        if (profile.grid[i] < 0.0 || profile.grid[i] >= M_PI) {
            raise(errc::invalid_argument, "profile phases must lie in [0, pi)");
        }
        if (i > 0 && profile.grid[i] <= profile.grid[i - 1]) {
            raise(errc::invalid_argument, "profile phases must be strictly increasing");
        }
        if (!(profile.vf[i] >= 0.0) || !std::isfinite(profile.vf[i])) {
            raise(errc::invalid_argument, "profile variances must be nonnegative and finite");
        }
    }
}

// Piecewise-linear interpolant of the profile over [0, pi], clamped to the
// end values outside the grid; interpolation undershoot is floored at 0.
double interp_vf(const VarianceProfile &p, double theta) {
    const auto &g = p.grid;
    if (theta <= g.front()) return p.vf.front();
    if (theta >= g.back()) return p.vf.back();
    const auto it = std::upper_bound(g.begin(), g.end(), theta);
    const size_t hi = (size_t)(it - g.begin());
    const size_t lo = hi - 1;
    const double t = (theta - g[lo]) / (g[hi] - g[lo]);
    return std::max(0.0, (1.0 - t) * p.vf[lo] + t * p.vf[hi]);
}

constexpr int kRefine = 512;  // trapezoid refinement over [0, pi]

}  // namespace

VarianceProfile empirical_variance_profile(const std::vector<sim::QuadratureRecord> &records,
                                           const est::Kernel &kernel, int bins) {
    if (bins <= 0) raise(errc::invalid_argument, "profile needs at least one bin");
    if (records.empty()) raise(errc::empty_data, "no records to profile");

    std::vector<long long> n(bins, 0);
    std::vector<double> sum(bins, 0.0), sumsq(bins, 0.0);
    const double width = M_PI / bins;
    for (const auto &rec : records) {
        if (!(rec.theta >= 0.0) || rec.theta >= M_PI) {
            raise(errc::invalid_argument, "records must be folded to [0, pi)");
        }
        const int b = std::min(bins - 1, (int)(rec.theta / width));
        const double v = kernel.eval(rec.xprime, rec.theta).value;
        n[b] += 1;
        sum[b] += v;
        sumsq[b] += v * v;
    }

    VarianceProfile p;
    for (int b = 0; b < bins; ++b) {
        if (n[b] < 30) {
            char buf[96];
            std::snprintf(buf, sizeof buf,
                          "bin %d (theta near %.4f) holds %lld records; at least 30 required", b,
                          (b + 0.5) * width, n[b]);
            raise(errc::underpopulated_bin, buf);
        }
        const double mean = sum[b] / (double)n[b];
        const double var =
            std::max(0.0, (sumsq[b] - (double)n[b] * mean * mean) / (double)(n[b] - 1));
        p.grid.push_back((b + 0.5) * width);
        p.vf.push_back(var);
    }
    return p;
}

sim::PhaseSchedule optimal_schedule(const VarianceProfile &profile, long long total) {
    validate_profile(profile);
    if (total <= 0) raise(errc::invalid_argument, "schedule total must be positive");
    const double peak = *std::max_element(profile.vf.begin(), profile.vf.end());
    if (!(peak > 0.0)) {
        raise(errc::degenerate, "variance profile is identically zero; no schedule shape exists");
    }
    // Optimal density ∝ sqrt(V_f), sampled at the output schedule's bin
    // centers (these coincide with the grid of a binned profile).
    const int bins = (int)profile.grid.size();
    std::vector<double> density((size_t)bins);
    for (int b = 0; b < bins; ++b) {
        const double theta = (b + 0.5) * M_PI / bins;
        density[(size_t)b] = std::sqrt(interp_vf(profile, theta) / peak);
    }
    return sim::PhaseSchedule::from_density(density, total);
}

std::pair<double, double> predicted_variances(const VarianceProfile &profile, long long total) {
    validate_profile(profile);
    if (total <= 0) raise(errc::invalid_argument, "sample total must be positive");
    // Shared trapezoid nodes make the discrete Cauchy-Schwarz inequality
    // V_min <= V_c hold exactly.
    double int_sqrt = 0.0, int_vf = 0.0;
    for (int i = 0; i <= kRefine; ++i) {
        const double theta = M_PI * i / kRefine;
        const double w = (i == 0 || i == kRefine) ? 0.5 : 1.0;
        const double vf = interp_vf(profile, theta);
        int_sqrt += w * std::sqrt(vf);
        int_vf += w * vf;
    }
    const double h = M_PI / kRefine;
    int_sqrt *= h;
    int_vf *= h;
    const double v_min = (int_sqrt / M_PI) * (int_sqrt / M_PI) / (double)total;
    const double v_c = int_vf / (M_PI * (double)total);
    return {v_min, v_c};
}

sim::PhaseSchedule squeezed_thermal_schedule(double r, long long total, int bins) {
    if (total <= 0) raise(errc::invalid_argument, "schedule total must be positive");
    if (bins <= 0) raise(errc::invalid_argument, "schedule needs at least one bin");
    std::vector<double> density(bins);
    for (int b = 0; b < bins; ++b) {
        const double theta = (b + 0.5) * M_PI / bins;
        const double c = std::cos(theta), s = std::sin(theta);
        const double a2 = std::exp(2.0 * r) * c * c + std::exp(-2.0 * r) * s * s;
        density[b] = 1.0 / a2;  // m(theta) = M / (pi a^2), normalized below
    }
    auto schedule = sim::PhaseSchedule::from_density(density, total);
    return schedule;
}

}  // namespace homfid::sched
