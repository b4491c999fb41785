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

#include <cmath>

#include "doctest.h"
#include "error.hpp"
#include "quadrature.hpp"
#include "states.hpp"

using namespace homfid::sim;
using homfid::Error;
using homfid::errc;
using homfid::states::cat_density_matrix;
using homfid::states::squeezed_fock_density_matrix;
using Complex = std::complex<double>;

namespace {

struct Moments {
    double mean = 0.0;
    double var = 0.0;
    double var_of_var = 0.0;  // variance of the sample variance
    long long n = 0;
};

Moments moments(const std::vector<QuadratureRecord> &recs) {
    Moments m;
    m.n = (long long)recs.size();
    for (const auto &r : recs) m.mean += r.xprime;
    m.mean /= (double)m.n;
    double m2 = 0.0, m4 = 0.0;
    for (const auto &r : recs) {
        const double d = r.xprime - m.mean;
        m2 += d * d;
        m4 += d * d * d * d;
    }
    m2 /= (double)m.n;
    m4 /= (double)m.n;
    m.var = m2 * (double)m.n / (double)(m.n - 1);
    m.var_of_var = (m4 - m2 * m2) / (double)m.n;
    return m;
}

// Chi-squared upper quantile by the Wilson-Hilferty approximation.
double chi2_quantile(double z, int dof) {
    const double t = 2.0 / (9.0 * dof);
    const double c = 1.0 - t + z * std::sqrt(t);
    return dof * c * c * c;
}

}  // namespace

TEST_CASE("phase folding") {
    auto [t1, x1] = fold_phase(3.0 * M_PI / 2.0, 1.0);
    CHECK(t1 == doctest::Approx(M_PI / 2.0).epsilon(1e-14));
    CHECK(x1 == -1.0);

    auto [t2, x2] = fold_phase(0.3, -2.0);
    CHECK(t2 == doctest::Approx(0.3));
    CHECK(x2 == -2.0);

    auto [t3, x3] = fold_phase(2.0 * M_PI + 0.1, 0.5);
    CHECK(t3 == doctest::Approx(0.1));
    CHECK(x3 == 0.5);

    auto [t4, x4] = fold_phase(-M_PI / 2.0, 0.5);  // -pi/2 == 3pi/2 (mod 2pi)
    CHECK(t4 == doctest::Approx(M_PI / 2.0));
    CHECK(x4 == -0.5);
}

TEST_CASE("schedules: stratification and validation") {
    const auto u = PhaseSchedule::uniform(100000, 128);
    CHECK(u.total() == 100000);
    CHECK(u.bins().size() == 128);
    long long lo = 1LL << 60, hi = 0;
    for (const auto &b : u.bins()) {
        lo = std::min(lo, b.count);
        hi = std::max(hi, b.count);
    }
    CHECK(hi - lo <= 1);

    const auto d = PhaseSchedule::from_density({1.0, 2.0, 1.0, 0.0}, 1000);
    CHECK(d.total() == 1000);
    CHECK(d.bins()[0].count == 250);
    CHECK(d.bins()[1].count == 500);
    CHECK(d.bins()[3].count == 0);
    CHECK(d.density_at(d.bins()[1].theta) ==
          doctest::Approx(500.0 / (M_PI / 4.0)).epsilon(1e-12));

    CHECK_THROWS_AS(PhaseSchedule::uniform(0, 4), Error);
    CHECK_THROWS_AS(PhaseSchedule::from_density({0.0, 0.0}, 100), Error);
    CHECK_THROWS_AS(PhaseSchedule::grid({{0.5, 10}, {0.4, 10}}), Error);
    CHECK_NOTHROW(PhaseSchedule::grid({{0.0, 10}, {M_PI / 4.0, 10}, {M_PI / 2.0, 10}}));
}

TEST_CASE("vacuum records have variance 1/2") {
    const auto vac = cat_density_matrix({Complex(0.0, 0.0), 0.0}, 8);
    const auto recs = sample_records(vac, PhaseSchedule::uniform(100000, 64), 1.0, 11);
    REQUIRE(recs.size() == 100000);
    const auto m = moments(recs);
    CHECK(std::fabs(m.var - 0.5) <= 0.01);
    CHECK(std::fabs(m.mean) <= 0.01);
}

TEST_CASE("identical seeds give identical record streams") {
    const auto odd = cat_density_matrix({Complex(1.0, 0.0), M_PI}, 32);
    const auto a = sample_records(odd, PhaseSchedule::uniform(5000, 16), 0.8, 42);
    const auto b = sample_records(odd, PhaseSchedule::uniform(5000, 16), 0.8, 42);
    REQUIRE(a.size() == b.size());
    for (size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].theta == b[i].theta);
        CHECK(a[i].xprime == b[i].xprime);
    }
    const auto c = sample_records(odd, PhaseSchedule::uniform(5000, 16), 0.8, 43);
    bool any_diff = false;
    for (size_t i = 0; i < a.size(); ++i) any_diff |= (a[i].xprime != c[i].xprime);
    CHECK(any_diff);
}

TEST_CASE("odd cat histogram matches the exact pdf (chi-squared)") {
    const auto odd = cat_density_matrix({Complex(1.0, 0.0), M_PI}, 32);
    // Single bin centered at pi/2.
    const auto recs = sample_records(odd, PhaseSchedule::uniform(20000, 1), 1.0, 7);
    REQUIRE(recs.size() == 20000);
    CHECK(recs.front().theta == doctest::Approx(M_PI / 2.0));

    const double lo = -3.5, hi = 3.5;
    const int nbins = 30;
    std::vector<double> observed(nbins + 2, 0.0);
    for (const auto &r : recs) {
        int b;
        if (r.xprime < lo) {
            b = 0;
        } else if (r.xprime >= hi) {
            b = nbins + 1;
        } else {
            b = 1 + (int)((r.xprime - lo) / (hi - lo) * nbins);
        }
        observed[(size_t)b] += 1.0;
    }

    const homfid::states::PdfProfile pdf(odd, M_PI / 2.0, 1.0);
    std::vector<double> expected(nbins + 2, 0.0);
    double inner = 0.0;
    for (int b = 0; b < nbins; ++b) {
        const double a = lo + (hi - lo) * b / nbins;
        const double bb = lo + (hi - lo) * (b + 1) / nbins;
        const auto rule = homfid::quad::gauss_legendre(24, a, bb);
        double p = 0.0;
        for (size_t i = 0; i < rule.nodes.size(); ++i) p += rule.weights[i] * pdf(rule.nodes[i]);
        expected[(size_t)b + 1] = p * recs.size();
        inner += p;
    }
    expected[0] = expected[nbins + 1] = 0.5 * (1.0 - inner) * recs.size();

    double chi2 = 0.0;
    int dof = -1;
    for (size_t b = 0; b < expected.size(); ++b) {
        if (expected[b] < 5.0) continue;  // drop sparse tail cells
        const double d = observed[b] - expected[b];
        chi2 += d * d / expected[b];
        ++dof;
    }
    // Gate at p > 0.001.
    CHECK(chi2 < chi2_quantile(3.0902, dof));
}

TEST_CASE("detection loss propagates the first two moments") {
    const auto sq1 = squeezed_fock_density_matrix({1, 0.3}, 48);
    const auto thermal = [] {
        homfid::states::SqueezedThermalSpec spec;
        spec.r = 0.6;
        spec.weights = {0.75, 0.2, 0.05};
        return homfid::states::squeezed_thermal_density_matrix(spec, 64);
    }();
    const auto odd = cat_density_matrix({Complex(1.0, 0.0), M_PI}, 32);

    const std::vector<const homfid::states::FockDensityMatrix *> test_states = {&sq1, &thermal,
                                                                                &odd};
    const std::vector<double> thetas = {0.0, M_PI / 4.0, M_PI / 2.0};
    for (const auto *rho : test_states) {
        for (double eta : {1.0, 0.8}) {
            for (double theta : thetas) {
                const auto sched = PhaseSchedule::grid({{theta, 100000}});
                const auto recs = sample_records(*rho, sched, eta, 97);
                const auto m = moments(recs);
                const double mean_expect =
                    std::sqrt(eta) * homfid::states::quadrature_mean(*rho, theta);
                const double var_expect =
                    eta * homfid::states::quadrature_variance(*rho, theta) + 0.5 * (1.0 - eta);
                const double se_mean = std::sqrt(m.var / (double)m.n);
                CHECK(std::fabs(m.mean - mean_expect) <= 4.0 * se_mean);
                CHECK(std::fabs(m.var - var_expect) <= 4.0 * std::sqrt(m.var_of_var));
            }
        }
    }
}

TEST_CASE("schedule counts are reproduced exactly") {
    const auto vac = cat_density_matrix({Complex(0.0, 0.0), 0.0}, 8);
    const auto sched = PhaseSchedule::from_density({3.0, 1.0, 0.0, 2.0}, 600);
    const auto recs = sample_records(vac, sched, 1.0, 3);
    std::vector<long long> got(4, 0);
    for (const auto &r : recs) {
        for (size_t b = 0; b < sched.bins().size(); ++b) {
            if (r.theta == sched.bins()[b].theta) {
                ++got[b];
                break;
            }
        }
    }
    for (size_t b = 0; b < 4; ++b) CHECK(got[b] == sched.bins()[b].count);
}

TEST_CASE("envelope failure raises") {
    const auto odd = cat_density_matrix({Complex(1.0, 0.0), M_PI}, 32);
    CHECK_THROWS_AS(detail::rejection_envelope_constant(odd, 0.0, 1e-4), Error);
    try {
        detail::rejection_envelope_constant(odd, 0.0, 1e-4);
    } catch (const Error &e) {
        CHECK(e.code() == errc::envelope);
    }
    CHECK_NOTHROW(detail::rejection_envelope_constant(odd, 0.0, detail::proposal_variance(odd)));
}

TEST_CASE("eta validation") {
    const auto vac = cat_density_matrix({Complex(0.0, 0.0), 0.0}, 8);
    CHECK_THROWS_AS(sample_records(vac, PhaseSchedule::uniform(10, 2), 0.0, 1), Error);
    CHECK_THROWS_AS(sample_records(vac, PhaseSchedule::uniform(10, 2), 1.0001, 1), Error);
}
