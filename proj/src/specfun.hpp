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

#ifndef HOMFID_SPECFUN_HPP
#define HOMFID_SPECFUN_HPP

#include <complex>

namespace homfid::specfun {

using Complex = std::complex<double>;

/// Dawson integral D(y) = e^{-y^2} \int_0^y e^{t^2} dt.
///
/// Small arguments use the Maclaurin series; moderate arguments use a
/// modified trapezoidal/midpoint discretization of the Faddeeva integral
/// (pole-corrected, with the rule chosen by proximity to its grid); large
/// arguments use the asymptotic expansion. Relative accuracy is a few 1e-15
/// over the whole axis. Odd: dawson(-y) == -dawson(y) exactly.
double dawson(double y);

/// e^{-z^2} erfi(z), evaluated without ever forming erfi(z) and the Gaussian
/// factor separately. Equals (2/sqrt(pi)) * D(z) with D the analytic
/// continuation of the Dawson integral. On the real axis this reduces to the
/// dawson() routine. Components can exceed the double range only where the
/// function itself does (|Im z|^2 - |Re z|^2 > ~709), in which case IEEE
/// infinities are returned.
Complex erfi_scaled(Complex z);

/// Faddeeva function w(z) = e^{-z^2} erfc(-iz) for Im(z) >= 0.
/// |w| <= 1 on the closed upper half-plane; no overflow for any such z.
Complex faddeeva_w(Complex z);

/// Harmonic-oscillator eigenfunction psi_n(x) in the vacuum-variance-1/2
/// convention: psi_0(x) = pi^{-1/4} e^{-x^2/2}, three-term recurrence upward.
/// Throws errc::truncation when n exceeds max_n.
double oscillator_eigenfunction(int n, double x, int max_n = 64);

/// Fills out[0..count) with psi_0(x) .. psi_{count-1}(x).
void oscillator_eigenfunctions(int count, double x, double *out);

}  // namespace homfid::specfun

#endif
