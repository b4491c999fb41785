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
#include <cstdio>

#include "error.hpp"

namespace homfid::specfun {

namespace {

constexpr double kSqrtPi = 1.7724538509055160273;
constexpr double kHalfSqrtPi = 0.88622692545275801365;
constexpr double kTwoOverSqrtPi = 1.1283791670955125739;

// Grid step of the modified trapezoidal/midpoint rules. The periodization
// error scales as exp(-(pi/h)^2) ~ 7e-22 for h = 0.45.
constexpr double kGridStep = 0.45;
constexpr int kGridTerms = 16;  // covers |t| <= 7, exp(-49) ~ 5e-22

// Maclaurin series of the Dawson integral, valid for real and complex
// arguments; terms t_{n+1} = t_n * (-2 z^2) / (2n + 3).
template <typename T>
T dawson_series(T z) {
    const T z2 = z * z;
    T term = z;
    T sum = z;
    for (int n = 0; n < 80; ++n) {
        term *= -2.0 / (2.0 * n + 3.0) * z2;
        sum += term;
        if (std::abs(term) < 1e-18 * (1.0 + std::abs(sum))) break;
    }
    return sum;
}

// Asymptotic expansion D(x) ~ sum_k (2k-1)!! / (2^{k+1} x^{2k+1}),
// truncated before the terms re-grow. Adequate beyond |x| ~ 8.
double dawson_asymptotic(double x) {
    const double inv2x2 = 1.0 / (2.0 * x * x);
    double term = 0.5 / x;
    double sum = term;
    for (int k = 0; k < 24; ++k) {
        const double next = term * (2.0 * k + 1.0) * inv2x2;
        if (std::abs(next) >= std::abs(term)) break;
        term = next;
        sum += term;
        if (std::abs(term) < 1e-18 * std::abs(sum)) break;
    }
    return sum;
}

// Midpoint rule for Im w(x) on the real axis, x > 0, with the pole
// correction e^{-x^2} tan(pi x / h). Grid poles sit at (k+1/2)h, so this
// branch is used when x is close to a multiple of h.
double imw_midpoint_real(double x) {
    const double h = kGridStep;
    double sum = 0.0;
    for (int k = 0; k < kGridTerms; ++k) {
        const double t = (k + 0.5) * h;
        sum += std::exp(-t * t) / (x * x - t * t);
    }
    return (2.0 * h * x / M_PI) * sum + std::exp(-x * x) * std::tan(M_PI * x / h);
}

// Trapezoidal rule for Im w(x), poles at k h; used when x is close to a
// half-integer multiple of h.
double imw_trapezoid_real(double x) {
    const double h = kGridStep;
    double sum = 0.0;
    for (int k = 1; k <= kGridTerms; ++k) {
        const double t = k * h;
        sum += std::exp(-t * t) / (x * x - t * t);
    }
    return (h / M_PI) / x + (2.0 * h * x / M_PI) * sum -
           std::exp(-x * x) / std::tan(M_PI * x / h);
}

}  // namespace

double dawson(double y) {
    const double x = std::fabs(y);
    double d;
    if (x <= 1.0) {
        d = dawson_series(x);
    } else if (x >= 8.0) {
        d = dawson_asymptotic(x);
    } else {
        const double frac = x / kGridStep - std::floor(x / kGridStep);
        const double imw = (frac >= 0.25 && frac < 0.75) ? imw_trapezoid_real(x)
                                                         : imw_midpoint_real(x);
        d = kHalfSqrtPi * imw;
    }
    return std::copysign(d, y);
}

Complex faddeeva_w(Complex z) {
    const double x = std::fabs(z.real());
    const double y = z.imag();
    const double h = kGridStep;
    const Complex zz(x, y);
    const Complex z2 = zz * zz;

    const double frac = x / h - std::floor(x / h);
    const bool use_trapezoid = (frac >= 0.25 && frac < 0.75);

    Complex sum = 0.0;
    Complex w;
    if (use_trapezoid) {
        for (int k = 1; k <= kGridTerms; ++k) {
            const double t = k * h;
            sum += std::exp(-t * t) / (z2 - t * t);
        }
        w = Complex(0.0, h / M_PI) / zz + Complex(0.0, 2.0 * h / M_PI) * zz * sum;
    } else {
        for (int k = 0; k < kGridTerms; ++k) {
            const double t = (k + 0.5) * h;
            sum += std::exp(-t * t) / (z2 - t * t);
        }
        w = Complex(0.0, 2.0 * h / M_PI) * zz * sum;
    }

    // Pole correction; only present while the pole lies below the saddle
    // contour of the first alias (y < pi/h), where exp(-z^2) cannot overflow.
    if (y < M_PI / h) {
        const Complex q = std::exp(Complex(-2.0 * M_PI * y / h, 2.0 * M_PI * x / h));
        const Complex egauss = std::exp(-z2);
        if (use_trapezoid) {
            w -= 2.0 * egauss * q / (1.0 - q);
        } else {
            w += 2.0 * egauss * q / (1.0 + q);
        }
    }

    // w(-conj(z)) = conj(w(z)) maps the left half back.
    if (z.real() < 0.0) w = std::conj(w);
    return w;
}

Complex erfi_scaled(Complex z) {
    if (z.imag() == 0.0) {
        return Complex(kTwoOverSqrtPi * dawson(z.real()), 0.0);
    }
    if (z.real() == 0.0) {
        // erfi_scaled(iy) = i e^{y^2} erf(y); exact special case.
        const double y = z.imag();
        return Complex(0.0, std::exp(y * y) * std::erf(y));
    }

    const double x1 = std::fabs(z.real());
    const double y1 = std::fabs(z.imag());
    const Complex z1(x1, y1);

    Complex d;
    if (std::norm(z1) <= 6.25) {
        d = dawson_series(z1);
    } else {
        // D(z) = -i sqrt(pi)/2 * (w(z) - e^{-z^2}) for Im z >= 0.
        const Complex diff = faddeeva_w(z1) - std::exp(-z1 * z1);
        d = Complex(0.0, -kHalfSqrtPi) * diff;
    }
    Complex r = kTwoOverSqrtPi * d;

    // Odd function with real Maclaurin coefficients: fold the quadrant back.
    if (z.real() < 0.0) r = -std::conj(r);
    if (z.imag() < 0.0) r = std::conj(r);
    return r;
}

double oscillator_eigenfunction(int n, double x, int max_n) {
    if (n < 0) raise(errc::invalid_argument, "oscillator order must be nonnegative");
    if (n > max_n) {
        char buf[96];
        std::snprintf(buf, sizeof buf, "oscillator order %d exceeds the Fock cutoff %d", n, max_n);
        raise(errc::truncation, buf);
    }
    double prev = 0.0;
    double cur = std::pow(M_PI, -0.25) * std::exp(-0.5 * x * x);
    for (int k = 1; k <= n; ++k) {
        const double next = std::sqrt(2.0 / k) * x * cur - std::sqrt((k - 1.0) / k) * prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

void oscillator_eigenfunctions(int count, double x, double *out) {
    if (count <= 0) return;
    out[0] = std::pow(M_PI, -0.25) * std::exp(-0.5 * x * x);
    if (count == 1) return;
    out[1] = std::sqrt(2.0) * x * out[0];
    for (int k = 2; k < count; ++k) {
        out[k] = std::sqrt(2.0 / k) * x * out[k - 1] - std::sqrt((k - 1.0) / k) * out[k - 2];
    }
}

}  // namespace homfid::specfun
