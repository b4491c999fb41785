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

#include "specfun.hpp"

#include <cmath>
#include <random>

#include "doctest.h"
#include "error.hpp"
#include "quadrature.hpp"
#include "support/oracles.hpp"

using homfid::specfun::dawson;
using homfid::specfun::erfi_scaled;
using homfid::specfun::oscillator_eigenfunction;
using homfid::specfun::oscillator_eigenfunctions;
using Complex = std::complex<double>;

TEST_CASE("dawson at the origin and odd symmetry") {
    CHECK(dawson(0.0) == 0.0);
    CHECK(dawson(-1.3) == -dawson(1.3));
    CHECK(dawson(-4.71) == -dawson(4.71));
}

TEST_CASE("dawson matches the extended-precision series reference") {
    // Frozen value from the double-double reference at y = 10.
    CHECK(dawson(10.0) == doctest::Approx(0.05025384718759853).epsilon(1e-13));

    for (double y = -10.0; y <= 10.0; y += 0.0437) {
        const double ref = oracles::dawson(y);
        if (ref == 0.0) {
            CHECK(dawson(y) == 0.0);
        } else {
            CHECK(std::fabs(dawson(y) - ref) <= 1e-12 * std::fabs(ref));
        }
    }
    std::mt19937_64 rng(20260808);
    std::uniform_real_distribution<double> u(-10.0, 10.0);
    for (int i = 0; i < 4000; ++i) {
        const double y = u(rng);
        const double ref = oracles::dawson(y);
        CHECK(std::fabs(dawson(y) - ref) <= 1e-12 * std::fabs(ref));
    }
}

TEST_CASE("dawson asymptote 1/(2y)") {
    CHECK(dawson(1e3) * 2e3 == doctest::Approx(1.0).epsilon(1e-5));
    CHECK(dawson(40.0) == doctest::Approx(1.0 / 80.0).epsilon(1e-3));
}

TEST_CASE("erfi_scaled trivial values and the dawson identity on the real axis") {
    CHECK(erfi_scaled(Complex(0.0, 0.0)) == Complex(0.0, 0.0));

    const double two_over_sqrt_pi = 2.0 / std::sqrt(M_PI);
    for (double y = -10.0; y <= 10.0; y += 0.173) {
        const Complex v = erfi_scaled(Complex(y, 0.0));
        CHECK(v.imag() == 0.0);
        CHECK(std::fabs(v.real() - two_over_sqrt_pi * dawson(y)) <=
              1e-12 * (1.0 + std::fabs(v.real())));
    }
}

TEST_CASE("erfi_scaled matches the extended-precision complex reference") {
    // Frozen reference value at z = 1 + i.
    {
        const Complex v = erfi_scaled(Complex(1.0, 1.0));
        const Complex ref = oracles::erfi_scaled(Complex(1.0, 1.0));
        CHECK(v.real() == doctest::Approx(ref.real()).epsilon(1e-12));
        CHECK(v.imag() == doctest::Approx(ref.imag()).epsilon(1e-12));
    }

    std::mt19937_64 rng(777);
    std::uniform_real_distribution<double> ur(-10.0, 10.0);
    double worst = 0.0;
    for (int i = 0; i < 6000; ++i) {
        Complex z(ur(rng), ur(rng));
        if (std::abs(z) > 10.0) continue;
        const Complex ref = oracles::erfi_scaled(z);
        const double err = std::abs(erfi_scaled(z) - ref) / std::max(1.0, std::abs(ref));
        worst = std::max(worst, err);
    }
    CHECK(worst <= 1e-10);
}

TEST_CASE("erfi_scaled stays finite over the wide strip") {
    // Overflow-avoidance property: the naive product erfi(z) * exp(-z^2)
    // already overflows near |Re z| ~ 27, the scaled form must not. The
    // function itself leaves the double range for y^2 - x^2 > ~709, so the
    // probe region is the widest strip where the value is representable.
    std::mt19937_64 rng(12345);
    std::uniform_real_distribution<double> ux(-50.0, 50.0), uy(-15.0, 15.0);
    for (int i = 0; i < 20000; ++i) {
        const Complex v = erfi_scaled(Complex(ux(rng), uy(rng)));
        CHECK(std::isfinite(v.real()));
        CHECK(std::isfinite(v.imag()));
    }
    // Spot checks against the reference deep in the strip.
    for (const Complex z : {Complex(30.0, 2.0), Complex(45.0, -10.0), Complex(-38.5, 7.7)}) {
        const Complex ref = oracles::erfi_scaled(z);
        CHECK(std::abs(erfi_scaled(z) - ref) <= 1e-10 * std::max(1.0, std::abs(ref)));
    }
}

TEST_CASE("erfi_scaled symmetry properties") {
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> u(-8.0, 8.0);
    for (int i = 0; i < 200; ++i) {
        const Complex z(u(rng), u(rng));
        const Complex a = erfi_scaled(z);
        const Complex b = erfi_scaled(-z);
        const Complex c = erfi_scaled(std::conj(z));
        CHECK(std::abs(a + b) <= 1e-13 * (1.0 + std::abs(a)));
        CHECK(std::abs(std::conj(a) - c) <= 1e-13 * (1.0 + std::abs(a)));
    }
}

TEST_CASE("faddeeva_w on the closed upper half-plane") {
    // w(z) = e^{-z^2} + i e^{-z^2} erfi(z); the reference composition
    // cancels catastrophically where the exponential dominates the value
    // (y > |x| outside the series disk), so accuracy is compared where the
    // reference itself is trustworthy and boundedness everywhere.
    std::mt19937_64 rng(2468);
    std::uniform_real_distribution<double> ux(-12.0, 12.0), uy(0.0, 12.0);
    double worst = 0.0;
    for (int i = 0; i < 6000; ++i) {
        const Complex z(ux(rng), uy(rng));
        const Complex got = homfid::specfun::faddeeva_w(z);
        CHECK(std::abs(got) <= 1.0 + 1e-12);  // bounded on the UHP
        // The composition keeps full precision only while |e^{-z^2}| stays
        // comparable to |w| itself.
        if (z.imag() * z.imag() - z.real() * z.real() <= 4.0) {
            const Complex ref =
                std::exp(-z * z) + Complex(0.0, 1.0) * oracles::erfi_scaled(z);
            worst = std::max(worst, std::abs(got - ref) / std::abs(ref));
        }
    }
    CHECK(worst <= 1e-12);

    // Real axis and origin.
    CHECK(homfid::specfun::faddeeva_w(Complex(0.0, 0.0)) == Complex(1.0, 0.0));
    for (double x : {0.2, 1.7, 4.05, 9.3}) {
        const Complex got = homfid::specfun::faddeeva_w(Complex(x, 0.0));
        CHECK(got.real() == doctest::Approx(std::exp(-x * x)).epsilon(1e-12));
        CHECK(got.imag() ==
              doctest::Approx(2.0 / std::sqrt(M_PI) * oracles::dawson(x)).epsilon(1e-12));
    }
}

TEST_CASE("faddeeva_w far from the real axis matches the continued fraction") {
    // Independent route for the region the series composition cannot reach:
    // the descending continued fraction converges rapidly for large |z| in
    // the upper half-plane.
    auto w_cf = [](Complex z) {
        Complex f = z;
        for (int k = 60; k >= 1; --k) f = z - (0.5 * k) / f;
        return Complex(0.0, 1.0 / std::sqrt(M_PI)) / f;
    };
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> ux(-12.0, 12.0), uy(4.0, 14.0);
    double worst = 0.0;
    for (int i = 0; i < 4000; ++i) {
        const Complex z(ux(rng), uy(rng));
        if (std::abs(z) < 7.0) continue;
        const Complex got = homfid::specfun::faddeeva_w(z);
        const Complex ref = w_cf(z);
        worst = std::max(worst, std::abs(got - ref) / std::abs(ref));
    }
    CHECK(worst <= 1e-13);
}

TEST_CASE("oscillator eigenfunctions: values and parity") {
    CHECK(oscillator_eigenfunction(0, 0.0) == doctest::Approx(std::pow(M_PI, -0.25)).epsilon(1e-15));
    CHECK(oscillator_eigenfunction(1, 0.0) == 0.0);

    // Recurrence vs the explicit Hermite polynomial route.
    CHECK(oscillator_eigenfunction(5, 1.7) ==
          doctest::Approx(oracles::oscillator_psi(5, 1.7)).epsilon(1e-13));
    for (int n : {2, 7, 13, 20}) {
        for (double x : {-3.3, -0.4, 0.9, 2.6}) {
            CHECK(oscillator_eigenfunction(n, x) ==
                  doctest::Approx(oracles::oscillator_psi(n, x)).epsilon(1e-12));
        }
    }
}

TEST_CASE("oscillator cutoff guard") {
    CHECK_THROWS_AS(oscillator_eigenfunction(65, 0.3), homfid::Error);
    CHECK_NOTHROW(oscillator_eigenfunction(65, 0.3, 80));
    try {
        oscillator_eigenfunction(70, 0.0);
    } catch (const homfid::Error &e) {
        CHECK(e.code() == homfid::errc::truncation);
    }
}

TEST_CASE("oscillator eigenfunctions are orthonormal") {
    const auto rule = homfid::quad::gauss_legendre(600, -12.0, 12.0);
    const int nmax = 21;
    std::vector<std::vector<double>> psi(rule.nodes.size(), std::vector<double>(nmax));
    for (size_t i = 0; i < rule.nodes.size(); ++i) {
        oscillator_eigenfunctions(nmax, rule.nodes[i], psi[i].data());
    }
    for (int m = 0; m < nmax; ++m) {
        for (int n = m; n < nmax; ++n) {
            double s = 0.0;
            for (size_t i = 0; i < rule.nodes.size(); ++i) {
                s += rule.weights[i] * psi[i][m] * psi[i][n];
            }
            const double expect = (m == n) ? 1.0 : 0.0;
            CHECK(std::fabs(s - expect) <= 1e-8);
        }
    }
}
