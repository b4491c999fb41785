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

#include "states.hpp"

#include <cmath>
#include <random>

#include "doctest.h"
#include "error.hpp"
#include "quadrature.hpp"
#include "support/oracles.hpp"

using namespace homfid::states;
using homfid::Error;
using homfid::errc;
using Complex = std::complex<double>;

namespace {

void check_density_matrix_invariants(const FockDensityMatrix &rho) {
    const int d = rho.dim();
    for (int m = 0; m < d; ++m) {
        for (int n = 0; n < d; ++n) {
            CHECK(std::abs(rho.entry(m, n) - std::conj(rho.entry(n, m))) <= 1e-12);
        }
    }
    CHECK(std::fabs(rho.trace() - 1.0) <= 1e-8);
    const auto ev = oracles::hermitian_eigenvalues(rho.raw(), d);
    CHECK(ev.front() >= -1e-10);
}

}  // namespace

TEST_CASE("cat state: parity structure and limits") {
    const auto odd = cat_density_matrix({Complex(1.0, 0.0), M_PI}, 32);
    check_density_matrix_invariants(odd);
    for (int n = 0; n < 32; n += 2) {
        CHECK(std::abs(odd.entry(n, n)) <= 1e-15);  // odd cat has odd parity
    }

    const auto tiny = cat_density_matrix({Complex(1e-4, 0.0), M_PI}, 16);
    CHECK(std::abs(tiny.entry(1, 1).real() - 1.0) <= 1e-6);

    const auto even = cat_density_matrix({Complex(1.0, 0.0), 0.0}, 32);
    CHECK(even.trace() == doctest::Approx(1.0).epsilon(1e-10));
    check_density_matrix_invariants(even);
}

TEST_CASE("cat state: degenerate normalization and insufficient cutoff") {
    CHECK_THROWS_AS(cat_density_matrix({Complex(0.0, 0.0), M_PI}, 16), Error);
    try {
        cat_density_matrix({Complex(3.0, 0.0), M_PI}, 8);
        FAIL("expected truncation error");
    } catch (const Error &e) {
        CHECK(e.code() == errc::truncation);
    }
}

TEST_CASE("squeezed Fock state construction") {
    const auto fock1 = squeezed_fock_density_matrix({1, 0.0}, 16);
    for (int m = 0; m < 16; ++m) {
        for (int n = 0; n < 16; ++n) {
            const double expect = (m == 1 && n == 1) ? 1.0 : 0.0;
            CHECK(std::abs(fock1.entry(m, n) - expect) <= 1e-14);
        }
    }

    const auto sq1 = squeezed_fock_density_matrix({1, 0.5}, 48);
    check_density_matrix_invariants(sq1);
    for (int n = 0; n < 48; n += 2) {
        CHECK(std::abs(sq1.entry(n, n)) <= 1e-14);  // squeezing preserves parity
    }

    // |<2|U(r)|0>|^2 against the closed form tanh^2(r) / (2 cosh r).
    const auto sq0 = squeezed_fock_density_matrix({0, 0.3}, 48);
    const double t = std::tanh(0.3);
    CHECK(sq0.entry(2, 2).real() ==
          doctest::Approx(t * t / (2.0 * std::cosh(0.3))).epsilon(1e-10));
    CHECK(sq0.entry(1, 1).real() <= 1e-14);
}

TEST_CASE("squeezed Fock: cutoff guard") {
    try {
        squeezed_fock_density_matrix({1, 1.2}, 24);
        FAIL("expected truncation error");
    } catch (const Error &e) {
        CHECK(e.code() == errc::truncation);
    }
}

TEST_CASE("squeezed thermal state") {
    SqueezedThermalSpec spec;
    spec.r = 0.6;
    spec.weights = {0.8, 0.15, 0.05};
    const auto rho = squeezed_thermal_density_matrix(spec, 48);
    check_density_matrix_invariants(rho);
    CHECK_FALSE(rho.is_pure());

    spec.weights = {0.8, 0.15};  // does not sum to 1
    CHECK_THROWS_AS(squeezed_thermal_density_matrix(spec, 48), Error);
}

TEST_CASE("quadrature pdf: vacuum, parity zeros, squeezed Gaussian") {
    const auto vac = cat_density_matrix({Complex(0.0, 0.0), 0.0}, 8);
    for (double th : {0.0, 0.7, 2.2}) {
        for (double x : {-1.3, 0.0, 0.4, 2.0}) {
            CHECK(quadrature_pdf(vac, th, 1.0, x) ==
                  doctest::Approx(std::exp(-x * x) / std::sqrt(M_PI)).epsilon(1e-12));
        }
    }

    const auto odd = cat_density_matrix({Complex(1.0, 0.0), M_PI}, 32);
    CHECK(std::fabs(quadrature_pdf(odd, M_PI / 2.0, 1.0, 0.0)) <= 1e-15);

    const auto sqvac = squeezed_fock_density_matrix({0, 0.5}, 48);
    const double var = std::exp(1.0) / 2.0;
    for (double x : {0.0, 0.8, -1.7}) {
        const double expect = std::exp(-0.5 * x * x / var) / std::sqrt(2.0 * M_PI * var);
        CHECK(quadrature_pdf(sqvac, 0.0, 1.0, x) == doctest::Approx(expect).epsilon(1e-9));
    }
    // Squeezed direction: variance e^{-2r}/2 at theta = pi/2.
    const double var2 = std::exp(-1.0) / 2.0;
    CHECK(quadrature_pdf(sqvac, M_PI / 2.0, 1.0, 0.3) ==
          doctest::Approx(std::exp(-0.5 * 0.09 / var2) / std::sqrt(2.0 * M_PI * var2))
              .epsilon(1e-7));
}

TEST_CASE("quadrature pdf: eta domain and degraded normalization") {
    const auto odd = cat_density_matrix({Complex(1.0, 0.0), M_PI}, 32);
    CHECK_THROWS_AS(quadrature_pdf(odd, 0.0, 0.0, 0.0), Error);
    CHECK_THROWS_AS(quadrature_pdf(odd, 0.0, 1.2, 0.0), Error);

    const auto sq1 = squeezed_fock_density_matrix({1, 0.3}, 48);
    SqueezedThermalSpec tspec;
    tspec.r = 0.6;
    tspec.weights = {0.8333333333333334, 0.1388888888888889, 0.023148148148148147,
                     0.0038580246913580245, 0.0006430041152263374, 0.00010716735253772291,
                     0.00001786122542295382, 0.0000029768709038256367};
    double wsum = 0.0;
    for (double w : tspec.weights) wsum += w;
    for (auto &w : tspec.weights) w /= wsum;
    const auto thermal = squeezed_thermal_density_matrix(tspec, 80);

    const std::vector<const FockDensityMatrix *> test_states = {&odd, &sq1, &thermal};
    for (const auto *rho : test_states) {
        for (int i = 0; i < 8; ++i) {
            const double theta = i * M_PI / 8.0;
            for (double eta : {1.0, 0.8}) {
                PdfProfile pdf(*rho, theta, eta);
                const auto rule = homfid::quad::gauss_legendre(800, -15.0, 15.0);
                double mass = 0.0;
                for (size_t k = 0; k < rule.nodes.size(); ++k) {
                    mass += rule.weights[k] * pdf(rule.nodes[k]);
                }
                CHECK(mass == doctest::Approx(1.0).epsilon(1e-6));
            }
        }
    }
}

TEST_CASE("PdfProfile agrees with the adaptive per-point pdf") {
    const auto odd = cat_density_matrix({Complex(1.0, 0.0), M_PI}, 32);
    PdfProfile pdf(odd, 0.9, 0.8);
    for (double x : {-2.5, -0.7, 0.0, 1.1, 3.0}) {
        CHECK(pdf(x) == doctest::Approx(quadrature_pdf(odd, 0.9, 0.8, x)).epsilon(1e-7));
    }
}

TEST_CASE("lund fidelity: limits and paper optima") {
    CHECK(lund_fidelity(1e-4, 0.0) == doctest::Approx(1.0).epsilon(1e-6));
    CHECK_THROWS_AS(lund_fidelity(0.0, 0.1), Error);

    CHECK(optimize_squeezing(0.75) == doctest::Approx(0.183).epsilon(0.03));
    CHECK(std::fabs(optimize_squeezing(0.75) - 0.183) <= 0.005);
    CHECK(std::fabs(optimize_squeezing(1.5) - 0.597) <= 0.005);
    CHECK(std::fabs(optimize_squeezing(2.5) - 1.067) <= 0.005);
}

TEST_CASE("optimize_squeezing is an argmax") {
    std::mt19937_64 rng(4242);
    std::uniform_real_distribution<double> ur(0.0, 3.0);
    for (double alpha : {0.4, 0.9, 1.7}) {
        const double rstar = optimize_squeezing(alpha);
        const double best = lund_fidelity(alpha, rstar);
        for (int i = 0; i < 100; ++i) {
            CHECK(best >= lund_fidelity(alpha, ur(rng)) - 1e-9);
        }
    }
}

TEST_CASE("wigner origin and mean photon number") {
    const auto vac = cat_density_matrix({Complex(0.0, 0.0), 0.0}, 8);
    CHECK(wigner_origin(vac) == doctest::Approx(1.0 / M_PI).epsilon(1e-12));
    CHECK(mean_photon(vac) == doctest::Approx(0.0).epsilon(1e-12));

    const auto fock1 = squeezed_fock_density_matrix({1, 0.0}, 8);
    CHECK(wigner_origin(fock1) == doctest::Approx(-1.0 / M_PI).epsilon(1e-12));
    CHECK(mean_photon(fock1) == doctest::Approx(1.0).epsilon(1e-12));

    const auto odd = cat_density_matrix({Complex(1.0, 0.0), M_PI}, 32);
    CHECK(wigner_origin(odd) == doctest::Approx(-1.0 / M_PI).epsilon(1e-10));

    const auto sqvac = squeezed_fock_density_matrix({0, 0.5}, 48);
    CHECK(mean_photon(sqvac) == doctest::Approx(std::sinh(0.5) * std::sinh(0.5)).epsilon(1e-10));
}

TEST_CASE("fidelity oracle") {
    const auto odd = cat_density_matrix({Complex(1.0, 0.0), M_PI}, 32);
    CHECK(fidelity_oracle(odd, odd) == doctest::Approx(1.0).epsilon(1e-10));

    const auto vac = cat_density_matrix({Complex(0.0, 0.0), 0.0}, 32);
    CHECK(std::fabs(fidelity_oracle(vac, odd)) <= 1e-14);

    const auto even = cat_density_matrix({Complex(1.0, 0.0), 0.0}, 32);
    const double norm_factor = 1.0 + std::exp(-2.0);
    CHECK(fidelity_oracle(vac, even) ==
          doctest::Approx(2.0 * std::exp(-1.0) / norm_factor).epsilon(1e-10));

    const auto small = cat_density_matrix({Complex(1.0, 0.0), M_PI}, 16);
    CHECK_THROWS_AS(fidelity_oracle(odd, small), Error);
}

TEST_CASE("two routes to the squeezed photon / odd cat fidelity agree") {
    for (const auto &[alpha, r] : {std::pair{0.75, 0.183}, {1.0, 0.3126}, {1.5, 0.597}}) {
        const int cutoff = 64;
        const auto cat = cat_density_matrix({Complex(alpha, 0.0), M_PI}, cutoff);
        const auto sq = squeezed_fock_density_matrix({1, r}, cutoff);
        CHECK(fidelity_oracle(cat, sq) == doctest::Approx(lund_fidelity(alpha, r)).epsilon(1e-8));
    }
}

TEST_CASE("quadrature moments") {
    const auto sqvac = squeezed_fock_density_matrix({0, 0.5}, 48);
    CHECK(quadrature_variance(sqvac, 0.0) == doctest::Approx(std::exp(1.0) / 2.0).epsilon(1e-9));
    CHECK(quadrature_variance(sqvac, M_PI / 2.0) ==
          doctest::Approx(std::exp(-1.0) / 2.0).epsilon(1e-9));

    const auto coh = coherent_density_matrix(Complex(0.8, -0.4), 32);
    for (double th : {0.0, 1.1}) {
        const Complex a(0.8, -0.4);
        const double expect = std::sqrt(2.0) * (a * std::exp(Complex(0.0, -th))).real();
        CHECK(quadrature_mean(coh, th) == doctest::Approx(expect).epsilon(1e-9));
        CHECK(quadrature_variance(coh, th) == doctest::Approx(0.5).epsilon(1e-9));
    }
}
