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

#include "kernels.hpp"

#include <cmath>
#include <cstdio>

#include "error.hpp"
#include "specfun.hpp"

namespace homfid::kernels {

namespace {

constexpr double kSqrtPi = 1.7724538509055160273;
constexpr double kThresholdGuard = 1e-9;

void check_eta_range(double eta) {
    if (!(eta > 0.0) || eta > 1.0 || !std::isfinite(eta)) {
        raise(errc::invalid_argument, "eta must lie in (0, 1]");
    }
}

void check_threshold(double eta, double threshold) {
    if (eta - threshold < kThresholdGuard) {
        char buf[128];
        std::snprintf(buf, sizeof buf,
                      "eta=%g is at or below the lower bound on the detection efficiency (%.9g)",
                      eta, threshold);
        raise(errc::threshold, buf);
    }
}

// 1 - sqrt(pi) y e^{-y^2} erfi(y), the common bracket of the Q kernels.
Complex q_bracket(Complex y) {
    return 1.0 - kSqrtPi * y * specfun::erfi_scaled(y);
}

}  // namespace

double squeezed_efficiency_threshold(double r) { return 1.0 / (1.0 + std::exp(-2.0 * r)); }

SqueezedFrame squeezed_frame(double theta, double r, double eta) {
    check_eta_range(eta);
    check_threshold(eta, squeezed_efficiency_threshold(r));
    SqueezedFrame f;
    f.theta = theta;
    const double c = std::cos(theta), s = std::sin(theta);
    f.a = std::sqrt(std::exp(2.0 * r) * c * c + std::exp(-2.0 * r) * s * s);
    f.vartheta = std::atan2(std::exp(-r) * s, std::exp(r) * c);
    f.s = (eta * (f.a * f.a + 1.0) - 1.0) / (eta * f.a * f.a);
    return f;
}

double pattern_f0(double x) { return 2.0 - 4.0 * x * specfun::dawson(x); }

double pattern_f1(double x) {
    return 2.0 * (2.0 * x * x - 1.0) + 8.0 * x * (1.0 - x * x) * specfun::dawson(x);
}

KernelEvaluation kernel_SQ(double xprime, double theta, double eta, Complex alpha,
                           Complex alphastar) {
    check_eta_range(eta);
    check_threshold(eta, cat_efficiency_threshold());
    const Complex shift =
        std::sqrt(0.5 * eta) * (alpha * std::exp(Complex(0.0, -theta)) +
                                alphastar * std::exp(Complex(0.0, theta)));
    const Complex y = (xprime - shift) / std::sqrt(2.0 * eta - 1.0);
    const Complex s = (2.0 / M_PI) * (eta / (2.0 * eta - 1.0)) * q_bracket(y);
    return {s.real(), s.imag()};
}

KernelEvaluation kernel_SF(double xprime, double theta, double eta,
                           const states::CatSpec &cat) {
    const double norm_factor =
        1.0 + std::exp(-2.0 * std::norm(cat.alpha)) * std::cos(cat.phi);
    if (!(norm_factor > 1e-12)) {
        raise(errc::invalid_argument, "cat normalization degenerates for these parameters");
    }
    const Complex a = cat.alpha;
    const Complex as = std::conj(cat.alpha);

    auto sq = [&](Complex al, Complex alstar) -> Complex {
        const KernelEvaluation e = kernel_SQ(xprime, theta, eta, al, alstar);
        return {e.value, e.imag};
    };

    const Complex direct = sq(a, as) + sq(-a, -as);
    const Complex cross = std::exp(Complex(0.0, cat.phi)) * sq(-a, as) +
                          std::exp(Complex(0.0, -cat.phi)) * sq(a, -as);
    const Complex total = M_PI / (2.0 * norm_factor) *
                          (direct + std::exp(-2.0 * std::norm(cat.alpha)) * cross);
    return {total.real(), total.imag()};
}

KernelEvaluation kernel_SQ_squeezed(double xprime, double theta, double eta, Complex alpha,
                                    Complex alphastar, double r) {
    const SqueezedFrame f = squeezed_frame(theta, r, eta);
    const Complex x_eff = (alpha * std::exp(Complex(0.0, -f.vartheta)) +
                           alphastar * std::exp(Complex(0.0, f.vartheta))) /
                          std::sqrt(2.0);
    const Complex y = (xprime / (f.a * std::sqrt(eta)) - x_eff) / std::sqrt(f.s);
    const Complex s = 2.0 / (M_PI * f.a * f.a * f.s) * q_bracket(y);
    return {s.real(), s.imag()};
}

double kernel_fsq(int n, double xprime, double theta, double eta, double r) {
    if (n != 0 && n != 1) {
        char buf[96];
        std::snprintf(buf, sizeof buf,
                      "squeezed-Fock sampling function order %d unsupported (closed forms exist "
                      "for n in {0, 1})",
                      n);
        raise(errc::unsupported_order, buf);
    }
    const SqueezedFrame f = squeezed_frame(theta, r, eta);
    const double x = xprime / std::sqrt(eta * (f.a * f.a + 1.0) - 1.0);
    const double a2s = f.a * f.a * f.s;
    if (n == 0) return pattern_f0(x) / a2s;
    return (pattern_f1(x) - (1.0 - f.s) * pattern_f0(x)) / (a2s * f.s);
}

double kernel_mean_photon(double xprime, double eta) {
    check_eta_range(eta);
    return (xprime * xprime - 0.5) / eta;
}

}  // namespace homfid::kernels
