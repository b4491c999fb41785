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

#include "simulator.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <random>

#include "error.hpp"

namespace homfid::sim {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

// Deterministic uniform/normal draws, independent of the standard library's
// distribution implementations.
struct Rng {
    std::mt19937_64 gen;
    bool have_cached = false;
    double cached = 0.0;

    explicit Rng(std::uint64_t seed) : gen(seed) {}

    double uniform01() {  // (0, 1]
        return ((gen() >> 11) + 1) * (1.0 / 9007199254740992.0);
    }

    double normal() {  // Box-Muller
        if (have_cached) {
            have_cached = false;
            return cached;
        }
        const double u1 = uniform01();
        const double u2 = uniform01();
        const double rad = std::sqrt(-2.0 * std::log(u1));
        cached = rad * std::sin(2.0 * M_PI * u2);
        have_cached = true;
        return rad * std::cos(2.0 * M_PI * u2);
    }
};

// Largest-remainder rounding of nonnegative shares to integer counts that
// sum to `total`.
std::vector<long long> stratify(const std::vector<double> &shares, long long total) {
    const double sum = std::accumulate(shares.begin(), shares.end(), 0.0);
    if (!(sum > 0.0)) raise(errc::degenerate, "schedule density is identically zero");
    std::vector<long long> counts(shares.size());
    std::vector<std::pair<double, size_t>> rem(shares.size());
    long long assigned = 0;
    for (size_t i = 0; i < shares.size(); ++i) {
        const double exact = shares[i] / sum * (double)total;
        counts[i] = (long long)std::floor(exact);
        assigned += counts[i];
        rem[i] = {exact - (double)counts[i], i};
    }
    std::stable_sort(rem.begin(), rem.end(),
                     [](const auto &a, const auto &b) { return a.first > b.first; });
    for (long long k = 0; k < total - assigned; ++k) counts[rem[(size_t)k].second] += 1;
    return counts;
}

}  // namespace

PhaseSchedule PhaseSchedule::uniform(long long total, int bins) {
    if (total <= 0) raise(errc::invalid_argument, "schedule total must be positive");
    if (bins <= 0) raise(errc::invalid_argument, "schedule must have at least one bin");
    PhaseSchedule s;
    s.kind_ = Kind::Uniform;
    const auto counts = stratify(std::vector<double>(bins, 1.0), total);
    for (int b = 0; b < bins; ++b) {
        s.bins_.push_back({(b + 0.5) * M_PI / bins, counts[b]});
    }
    return s;
}

PhaseSchedule PhaseSchedule::from_density(const std::vector<double> &density_at_bins,
                                          long long total) {
    if (total <= 0) raise(errc::invalid_argument, "schedule total must be positive");
    if (density_at_bins.empty()) raise(errc::invalid_argument, "schedule must have at least one bin");
    for (double d : density_at_bins) {
        if (!(d >= 0.0) || !std::isfinite(d)) {
            raise(errc::invalid_argument, "schedule density must be nonnegative and finite");
        }
    }
    PhaseSchedule s;
    s.kind_ = Kind::Density;
    const int bins = (int)density_at_bins.size();
    const auto counts = stratify(density_at_bins, total);
    for (int b = 0; b < bins; ++b) {
        s.bins_.push_back({(b + 0.5) * M_PI / bins, counts[b]});
    }
    return s;
}

PhaseSchedule PhaseSchedule::grid(std::vector<PhaseBin> bins) {
    return from_bins(std::move(bins), Kind::Grid);
}

PhaseSchedule PhaseSchedule::from_bins(std::vector<PhaseBin> bins, Kind kind) {
    if (bins.empty()) raise(errc::invalid_argument, "schedule must have at least one bin");
    const double width = M_PI / (double)bins.size();
    for (size_t b = 0; b < bins.size(); ++b) {
        if (bins[b].count < 0) raise(errc::invalid_argument, "schedule counts must be nonnegative");
        if (bins[b].theta < 0.0 || bins[b].theta >= M_PI) {
            raise(errc::invalid_argument, "schedule bin centers must lie in [0, pi)");
        }
        if (b > 0 && bins[b].theta <= bins[b - 1].theta) {
            raise(errc::invalid_argument, "schedule bin centers must be strictly increasing");
        }
        if (kind != Kind::Grid) {
            const double expect = (b + 0.5) * width;
            if (std::fabs(bins[b].theta - expect) > 1e-9) {
                raise(errc::invalid_argument,
                      "schedule bins must be equally spaced centers over [0, pi)");
            }
        }
    }
    PhaseSchedule s;
    s.kind_ = kind;
    s.bins_ = std::move(bins);
    if (s.total() <= 0) raise(errc::invalid_argument, "schedule total must be positive");
    return s;
}

long long PhaseSchedule::total() const {
    long long t = 0;
    for (const auto &b : bins_) t += b.count;
    return t;
}

double PhaseSchedule::bin_width() const { return M_PI / (double)bins_.size(); }

double PhaseSchedule::density_at(double theta) const {
    if (kind_ == Kind::Grid) {
        raise(errc::misuse, "a grid schedule has no sampling density");
    }
    if (theta < 0.0 || theta >= M_PI) return 0.0;
    const size_t b = std::min(bins_.size() - 1, (size_t)(theta / bin_width()));
    return (double)bins_[b].count / bin_width();
}

std::pair<double, double> fold_phase(double theta, double xprime) {
    double t = std::fmod(theta, 2.0 * M_PI);
    if (t < 0.0) t += 2.0 * M_PI;
    if (t >= M_PI) return {t - M_PI, -xprime};
    return {t, xprime};
}

namespace detail {

double proposal_variance(const states::FockDensityMatrix &rho) {
    double vmax = 0.0;
    for (int i = 0; i < 256; ++i) {
        vmax = std::max(vmax, states::quadrature_variance(rho, i * M_PI / 256.0));
    }
    const double e2r = std::max(1.0, 2.0 * vmax);
    return 1.2 * e2r * (rho.mean_n() + 1.0);
}

double rejection_envelope_constant(const states::FockDensityMatrix &rho, double theta,
                                   double proposal_variance) {
    const double inv_norm = std::sqrt(2.0 * M_PI * proposal_variance);
    const states::IdealPdfEvaluator pdf(rho, theta);
    auto ratio = [&](double x) {
        return pdf(x) * inv_norm * std::exp(0.5 * x * x / proposal_variance);
    };
    // Coarse scan over the wider of the proposal width and the state
    // support, then golden-section refinement around the best point.
    const double state_half = std::sqrt(2.0 * (2.0 * rho.mean_n() + 1.0)) + 6.0;
    const double half = std::max(4.0 * std::sqrt(proposal_variance), state_half);
    const int n = 600;
    double best = 0.0, best_x = 0.0;
    for (int i = 0; i <= n; ++i) {
        const double x = -half + 2.0 * half * i / n;
        const double v = ratio(x);
        if (v > best) {
            best = v;
            best_x = x;
        }
    }
    double lo = best_x - 2.0 * half / n, hi = best_x + 2.0 * half / n;
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double x1 = hi - inv_phi * (hi - lo), x2 = lo + inv_phi * (hi - lo);
    double f1 = ratio(x1), f2 = ratio(x2);
    for (int it = 0; it < 60 && hi - lo > 1e-10; ++it) {
        if (f1 < f2) {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + inv_phi * (hi - lo);
            f2 = ratio(x2);
        } else {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - inv_phi * (hi - lo);
            f1 = ratio(x1);
        }
    }
    const double c = std::max(best, std::max(f1, f2)) * 1.000001;
    if (c > 1e4) {
        char buf[96];
        std::snprintf(buf, sizeof buf,
                      "rejection envelope failure: acceptance rate %.3e below 1e-4", 1.0 / c);
        raise(errc::envelope, buf);
    }
    return c;
}

}  // namespace detail

Sampler::Sampler(const states::FockDensityMatrix &rho, const PhaseSchedule &schedule,
                 double eta)
    : eta_(eta), total_(schedule.total()) {
    if (!(eta > 0.0) || eta > 1.0) raise(errc::invalid_argument, "eta must lie in (0, 1]");
    proposal_var_ = detail::proposal_variance(rho);
    for (const auto &bin : schedule.bins()) {
        const double envelope =
            bin.count == 0 ? 1.0
                           : detail::rejection_envelope_constant(rho, bin.theta, proposal_var_);
        bins_.push_back({bin.theta, bin.count, envelope,
                         states::IdealPdfEvaluator(rho, bin.theta)});
    }
}

std::vector<QuadratureRecord> Sampler::run(std::uint64_t seed) const {
    const double psigma = std::sqrt(proposal_var_);
    const double gauss_norm = 1.0 / std::sqrt(2.0 * M_PI * proposal_var_);
    const double noise_sigma = std::sqrt(0.5 * (1.0 - eta_));
    const double sqrt_eta = std::sqrt(eta_);

    std::vector<QuadratureRecord> out;
    out.reserve((size_t)total_);
    for (size_t b = 0; b < bins_.size(); ++b) {
        const auto &bin = bins_[b];
        if (bin.count == 0) continue;
        Rng rng(splitmix64(seed ^ splitmix64((std::uint64_t)b + 1)));
        for (long long i = 0; i < bin.count; ++i) {
            double x = 0.0;
            for (;;) {
                x = psigma * rng.normal();
                const double prop = gauss_norm * std::exp(-0.5 * x * x / proposal_var_);
                if (rng.uniform01() * bin.envelope * prop <= bin.pdf(x)) {
                    break;
                }
            }
            const double xprime =
                (eta_ == 1.0) ? x : sqrt_eta * x + noise_sigma * rng.normal();
            out.push_back({bin.theta, xprime});
        }
    }
    return out;
}

std::vector<QuadratureRecord> sample_records(const states::FockDensityMatrix &rho,
                                             const PhaseSchedule &schedule, double eta,
                                             std::uint64_t seed) {
    return Sampler(rho, schedule, eta).run(seed);
}

}  // namespace homfid::sim
