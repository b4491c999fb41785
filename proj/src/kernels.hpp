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

// Sampling functions whose empirical averages over homodyne quadrature
// records yield state fidelities and density-matrix elements, including the
// detection-loss compensation built into their closed forms.

#ifndef HOMFID_KERNELS_HPP
#define HOMFID_KERNELS_HPP

#include <complex>

#include "states.hpp"

namespace homfid::kernels {

using Complex = std::complex<double>;

/// Geometry of a squeezed frame at lab phase theta:
///   a   = sqrt(e^{2r} cos^2 theta + e^{-2r} sin^2 theta)
///   tan(vartheta) = e^{-2r} tan(theta), continuous branch with
///   vartheta(0) = 0 and d(vartheta)/d(theta) = 1/a^2
///   s   = (eta (a^2 + 1) - 1) / (eta a^2)
struct SqueezedFrame {
    double theta = 0.0;
    double vartheta = 0.0;
    double a = 1.0;
    double s = 1.0;
};

/// A kernel value together with its null-function component (the imaginary
/// part of the underlying complex form, whose average vanishes on every
/// physical quadrature distribution).
struct KernelEvaluation {
    double value = 0.0;
    double imag = 0.0;
};

/// Detection-efficiency lower bounds for loss compensation.
constexpr double cat_efficiency_threshold() { return 0.5; }
double squeezed_efficiency_threshold(double r);

SqueezedFrame squeezed_frame(double theta, double r, double eta);

/// Standard pattern functions for the Fock-diagonal elements p_0 and p_1:
///   f0(x) = 2 - 4 x D(x)
///   f1(x) = 2 (2x^2 - 1) + 8 x (1 - x^2) D(x)
double pattern_f0(double x);
double pattern_f1(double x);

/// Husimi-Q sampling function
///   S_Q = (2/pi) eta/(2 eta - 1) [1 - sqrt(pi) y e^{-y^2} erfi(y)],
///   y = [x' - sqrt(eta/2)(alpha e^{-i theta} + alphastar e^{i theta})]
///       / sqrt(2 eta - 1),
/// with alpha and alphastar treated as formally independent parameters.
KernelEvaluation kernel_SQ(double xprime, double theta, double eta, Complex alpha,
                           Complex alphastar);

/// Cat-fidelity sampling function (four-term S_Q combination). `value` is
/// the usable real part, `imag` the null component.
KernelEvaluation kernel_SF(double xprime, double theta, double eta,
                           const states::CatSpec &cat);

/// Husimi-Q sampling function of the squeezed frame:
///   S = 2/(pi a^2 s) [1 - sqrt(pi) y e^{-y^2} erfi(y)],
///   y = (x'/(a sqrt(eta)) - x_vartheta) / sqrt(s).
KernelEvaluation kernel_SQ_squeezed(double xprime, double theta, double eta, Complex alpha,
                                    Complex alphastar, double r);

/// Sampling functions for the squeezed-Fock diagonal elements p_n(r),
/// closed forms for n in {0, 1}:
///   f_sq,0 = f0(x_s) / (a^2 s)
///   f_sq,1 = [f1(x_s) - (1 - s) f0(x_s)] / (a^2 s^2),
///   x_s = x' / sqrt(eta (a^2 + 1) - 1).
double kernel_fsq(int n, double xprime, double theta, double eta, double r);

/// Mean-photon sampling function [x'^2 - 1/2] / eta.
double kernel_mean_photon(double xprime, double eta);

}  // namespace homfid::kernels

#endif
