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

#include "estimator.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <thread>

#include "error.hpp"

namespace homfid::est {

namespace {

constexpr int kChunks = 128;  // fixed partition; merge order never depends on threads

void check_eta(double eta) {
    if (!(eta > 0.0) || eta > 1.0 || !std::isfinite(eta)) {
        raise(errc::invalid_argument, "eta must lie in (0, 1]");
    }
}

int resolve_threads(int requested) {
    if (requested > 0) return std::min(requested, 64);
    const unsigned hw = std::thread::hardware_concurrency();
    return (int)std::min(hw == 0 ? 1u : hw, 8u);
}

struct ChunkSums {
    double sum = 0.0;
    double sumsq = 0.0;
};

template <typename Fn>
std::pair<double, double> accumulate_contributions(long long count, int threads, const Fn &fn) {
    std::vector<ChunkSums> chunks(kChunks);
    const long long per = (count + kChunks - 1) / kChunks;
    auto run_chunk = [&](int c) {
        const long long lo = (long long)c * per;
        const long long hi = std::min(count, lo + per);
        ChunkSums s;
        for (long long i = lo; i < hi; ++i) {
            const double v = fn(i);
            s.sum += v;
            s.sumsq += v * v;
        }
        chunks[(size_t)c] = s;
    };

    const int nthreads = resolve_threads(threads);
    if (nthreads <= 1 || count < 4096) {
        for (int c = 0; c < kChunks; ++c) run_chunk(c);
    } else {
        std::vector<std::thread> pool;
        std::atomic<int> next{0};
        for (int t = 0; t < nthreads; ++t) {
            pool.emplace_back([&]() {
                for (;;) {
                    const int c = next.fetch_add(1);
                    if (c >= kChunks) return;
                    run_chunk(c);
                }
            });
        }
        for (auto &t : pool) t.join();
    }

    double sum = 0.0, sumsq = 0.0;
    for (const auto &c : chunks) {
        sum += c.sum;
        sumsq += c.sumsq;
    }
    return {sum, sumsq};
}

}  // namespace

Kernel Kernel::cat(states::CatSpec spec, double eta) {
    check_eta(eta);
    const double nf = 1.0 + std::exp(-2.0 * std::norm(spec.alpha)) * std::cos(spec.phi);
    if (!(nf > 1e-12)) raise(errc::invalid_argument, "cat normalization degenerates");
    // Trip the threshold check once, eagerly.
    (void)kernels::kernel_SQ(0.0, 0.0, eta, spec.alpha, std::conj(spec.alpha));
    Kernel k;
    k.family_ = Family::cat;
    k.eta_ = eta;
    k.cat_ = spec;
    return k;
}

Kernel Kernel::squeezed_fock(int n, double r, double eta) {
    check_eta(eta);
    (void)kernels::kernel_fsq(n, 0.0, 0.0, eta, r);
    Kernel k;
    k.family_ = Family::squeezed_fock;
    k.eta_ = eta;
    k.n_ = n;
    k.r_ = r;
    return k;
}

Kernel Kernel::husimi_q(Complex alpha, Complex alphastar, double eta, double r) {
    check_eta(eta);
    if (r == 0.0) {
        (void)kernels::kernel_SQ(0.0, 0.0, eta, alpha, alphastar);
    } else {
        (void)kernels::kernel_SQ_squeezed(0.0, 0.0, eta, alpha, alphastar, r);
    }
    Kernel k;
    k.family_ = Family::husimi_q;
    k.eta_ = eta;
    k.alpha_ = alpha;
    k.alphastar_ = alphastar;
    k.r_ = r;
    return k;
}

Kernel Kernel::mean_photon(double eta) {
    check_eta(eta);
    Kernel k;
    k.family_ = Family::mean_photon;
    k.eta_ = eta;
    return k;
}

kernels::KernelEvaluation Kernel::eval(double xprime, double theta) const {
    switch (family_) {
        case Family::cat:
            return kernels::kernel_SF(xprime, theta, eta_, cat_);
        case Family::squeezed_fock:
            return {kernels::kernel_fsq(n_, xprime, theta, eta_, r_), 0.0};
        case Family::husimi_q:
            if (r_ == 0.0) return kernels::kernel_SQ(xprime, theta, eta_, alpha_, alphastar_);
            return kernels::kernel_SQ_squeezed(xprime, theta, eta_, alpha_, alphastar_, r_);
        case Family::mean_photon:
            return {kernels::kernel_mean_photon(xprime, eta_), 0.0};
    }
    raise(errc::invalid_argument, "unknown kernel family");
}

bool Kernel::odd_parity() const {
    switch (family_) {
        case Family::cat:
            // Odd cat: phi = pi (mod 2 pi), so that only odd Fock components
            // survive in the target state.
            return std::fabs(std::remainder(cat_.phi - M_PI, 2.0 * M_PI)) < 1e-9;
        case Family::squeezed_fock:
            return n_ % 2 == 1;
        default:
            return false;
    }
}

Estimate estimate(const std::vector<sim::QuadratureRecord> &records, const Kernel &kernel,
                  const sim::PhaseSchedule *schedule, int threads) {
    if (records.empty()) raise(errc::empty_data, "no records to estimate from");
    for (const auto &r : records) {
        if (!(r.theta >= 0.0) || r.theta >= M_PI || !std::isfinite(r.xprime)) {
            raise(errc::invalid_argument, "records must be folded to [0, pi) and finite");
        }
    }
    const long long count = (long long)records.size();
    const bool weighted =
        schedule != nullptr && schedule->kind() == sim::PhaseSchedule::Kind::Density;

    std::pair<double, double> sums;
    if (!weighted) {
        sums = accumulate_contributions(count, threads, [&](long long i) {
            return kernel.eval(records[(size_t)i].xprime, records[(size_t)i].theta).value;
        });
    } else {
        const double total = (double)schedule->total();
        // Precompute the per-record weights so a zero scheduled density is
        // reported before any accumulation runs.
        std::vector<double> weights(records.size());
        for (size_t i = 0; i < records.size(); ++i) {
            const double m = schedule->density_at(records[i].theta);
            if (!(m > 0.0)) {
                char buf[96];
                std::snprintf(buf, sizeof buf,
                              "schedule density vanishes at observed phase theta=%.6f",
                              records[i].theta);
                raise(errc::degenerate, buf);
            }
            weights[i] = total / (M_PI * m);
        }
        sums = accumulate_contributions(count, threads, [&](long long i) {
            return weights[(size_t)i] *
                   kernel.eval(records[(size_t)i].xprime, records[(size_t)i].theta).value;
        });
    }

    Estimate e;
    e.count = count;
    e.density_weighted = weighted;
    e.value = sums.first / (double)count;
    if (count > 1) {
        const double var =
            std::max(0.0, (sums.second - (double)count * e.value * e.value) / (double)(count - 1));
        e.stderr_value = std::sqrt(var / (double)count);
    }
    return e;
}

double null_diagnostic(const std::vector<sim::QuadratureRecord> &records, const Kernel &kernel) {
    if (records.empty()) raise(errc::empty_data, "no records to diagnose");
    const long long count = (long long)records.size();
    const auto sums = accumulate_contributions(count, 0, [&](long long i) {
        return kernel.eval(records[(size_t)i].xprime, records[(size_t)i].theta).imag;
    });
    const double mean = sums.first / (double)count;
    if (count < 2) return 0.0;
    const double var =
        std::max(0.0, (sums.second - (double)count * mean * mean) / (double)(count - 1));
    if (var == 0.0) return 0.0;
    return mean / std::sqrt(var / (double)count);
}

namespace {

void check_odd_parity(const Kernel &kernel) {
    if (!kernel.odd_parity()) {
        raise(errc::misuse,
              "witness requires an odd-parity target kernel (odd cat with phi=pi, or a squeezed "
              "odd Fock state)");
    }
}

}  // namespace

WitnessVerdict witness_negativity(const Kernel &kernel, const Estimate &f_minus,
                                  double significance) {
    check_odd_parity(kernel);
    WitnessVerdict v;
    v.quantity = WitnessKind::negativity;
    v.bound = (1.0 - 2.0 * f_minus.value) / M_PI;
    v.margin_sigma = (f_minus.value - 0.5) / f_minus.stderr_value;
    v.passed = v.margin_sigma > significance;
    return v;
}

WitnessVerdict witness_qng(const Kernel &kernel, const Estimate &f_minus, const Estimate &nbar,
                           double significance) {
    check_odd_parity(kernel);
    if (nbar.value < -3.0 * nbar.stderr_value) {
        raise(errc::data_quality,
              "mean photon number estimate is negative beyond 3 sigma; records look inconsistent");
    }
    const double nb = std::max(0.0, nbar.value);
    const double damp = std::exp(-2.0 * nb * (nb + 1.0));
    const double threshold = 0.5 - 0.5 * damp;
    const double dt_dn = (2.0 * nb + 1.0) * damp;
    const double combined = std::sqrt(f_minus.stderr_value * f_minus.stderr_value +
                                      dt_dn * dt_dn * nbar.stderr_value * nbar.stderr_value);
    WitnessVerdict v;
    v.quantity = WitnessKind::quantum_non_gaussianity;
    v.bound = threshold;
    v.margin_sigma = (f_minus.value - threshold) / combined;
    v.passed = v.margin_sigma > significance;
    return v;
}

}  // namespace homfid::est
