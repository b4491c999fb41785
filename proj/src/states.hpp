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

#ifndef HOMFID_STATES_HPP
#define HOMFID_STATES_HPP

#include <complex>
#include <memory>
#include <vector>

namespace homfid::states {

using Complex = std::complex<double>;

/// Cat-like state (|alpha> + e^{i phi} |-alpha>) / sqrt(2 N),
/// N = 1 + exp(-2|alpha|^2) cos(phi).
struct CatSpec {
    Complex alpha;
    double phi = 0.0;
};

/// U(r)|n> with U(r) = exp( (r/2)(a^dag^2 - a^2) ); the x quadrature of the
/// squeezed vacuum has variance e^{2r}/2 at theta = 0.
struct SqueezedFockSpec {
    int n = 0;
    double r = 0.0;
};

/// U(r) rho_T U(r)^dag with rho_T = sum_n weights[n] |n><n|.
struct SqueezedThermalSpec {
    double r = 0.0;
    std::vector<double> weights;
};

/// Density matrix in the Fock basis, kept together with its pure-state
/// decomposition rho = sum_k w_k |v_k><v_k| when the construction provides
/// one (all built-in states do). Immutable after construction.
class FockDensityMatrix {
  public:
    static FockDensityMatrix from_components(std::vector<double> weights,
                                             std::vector<std::vector<Complex>> vectors);
    static FockDensityMatrix from_matrix(std::vector<Complex> entries, int dim);

    int dim() const { return dim_; }
    Complex entry(int m, int n) const { return entries_[(size_t)m * dim_ + n]; }
    const std::vector<Complex> &raw() const { return entries_; }

    bool has_components() const { return !weights_.empty(); }
    const std::vector<double> &component_weights() const { return weights_; }
    const std::vector<std::vector<Complex>> &component_vectors() const { return vectors_; }
    bool is_pure() const { return weights_.size() == 1; }

    double trace() const;
    Complex mean_a() const;
    Complex mean_a_squared() const;
    double mean_n() const;

  private:
    FockDensityMatrix() = default;
    void validate() const;

    int dim_ = 0;
    std::vector<Complex> entries_;  // row-major
    std::vector<double> weights_;
    std::vector<std::vector<Complex>> vectors_;
};

/// Fock amplitudes of a coherent state |alpha>, truncated at `cutoff`.
std::vector<Complex> coherent_amplitudes(Complex alpha, int cutoff);

FockDensityMatrix cat_density_matrix(const CatSpec &spec, int cutoff);
FockDensityMatrix coherent_density_matrix(Complex alpha, int cutoff);
FockDensityMatrix squeezed_fock_density_matrix(const SqueezedFockSpec &spec, int cutoff);
FockDensityMatrix squeezed_thermal_density_matrix(const SqueezedThermalSpec &spec, int cutoff);

/// Probability density of the measured quadrature x'_theta for detection
/// efficiency eta: the ideal density rescaled by sqrt(eta) and convolved
/// with a vacuum Gaussian of variance (1-eta)/2, evaluated by adaptive
/// quadrature (absolute accuracy ~1e-8). eta = 1 is the exact Fock-basis
/// expansion.
double quadrature_pdf(const FockDensityMatrix &rho, double theta, double eta, double x);

/// Ideal (eta = 1) quadrature density; used by the simulator and PdfProfile.
double ideal_quadrature_pdf(const FockDensityMatrix &rho, double theta, double x);

/// Repeated ideal-pdf evaluations at one fixed phase: the phase factors
/// e^{-im theta} are folded into the component vectors once.
class IdealPdfEvaluator {
  public:
    IdealPdfEvaluator(const FockDensityMatrix &rho, double theta);
    double operator()(double x) const;

  private:
    int dim_ = 0;
    std::vector<double> weights_;
    std::vector<std::vector<Complex>> rotated_;   // component path
    std::vector<Complex> rotated_matrix_;         // general path (row-major)
    mutable std::vector<double> psi_;
};

/// Batched evaluator for one (theta, eta): precomputes the ideal density on
/// a fixed quadrature grid so repeated x evaluations are a dot product.
class PdfProfile {
  public:
    PdfProfile(const FockDensityMatrix &rho, double theta, double eta);
    double operator()(double x) const;

  private:
    std::shared_ptr<const IdealPdfEvaluator> ideal_;
    double eta_ = 1.0;
    double sqrt_eta_ = 1.0;
    double noise_var_ = 0.0;
    std::vector<double> nodes_;       // ideal-quadrature grid
    std::vector<double> node_mass_;   // weight * ideal pdf at node
};

/// Mean and variance of the ideal rotated quadrature x_theta.
double quadrature_mean(const FockDensityMatrix &rho, double theta);
double quadrature_variance(const FockDensityMatrix &rho, double theta);

/// Fidelity of the squeezed single photon U(r)|1> with the odd coherent
/// state of amplitude alpha > 0:
/// 2 a^2 exp[-a^2 (1 - tanh r)] / (cosh^3 r (1 - exp(-2 a^2))).
double lund_fidelity(double alpha, double r);

/// argmax_r of lund_fidelity(alpha, .) over r in [0, 3], golden-section
/// search to |dr| <= 1e-6.
double optimize_squeezing(double alpha);

/// W(0,0) = (1/pi) sum_n (-1)^n rho_nn  (mean photon-number parity).
double wigner_origin(const FockDensityMatrix &rho);

/// nbar = sum_n n rho_nn.
double mean_photon(const FockDensityMatrix &rho);

/// Tr[rho |psi><psi|] for a pure target state.
double fidelity_oracle(const FockDensityMatrix &rho, const FockDensityMatrix &pure_target);

}  // namespace homfid::states

#endif
