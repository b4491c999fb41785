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

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>

#include "error.hpp"
#include "quadrature.hpp"
#include "specfun.hpp"

namespace homfid::states {

namespace {

constexpr double kTraceTol = 1e-8;
constexpr double kTailTol = 1e-10;

struct RealMatrix {
    int n = 0;
    std::vector<double> a;
    explicit RealMatrix(int dim) : n(dim), a((size_t)dim * dim, 0.0) {}
    double &at(int i, int j) { return a[(size_t)i * n + j]; }
    double at(int i, int j) const { return a[(size_t)i * n + j]; }
};

RealMatrix matmul(const RealMatrix &x, const RealMatrix &y) {
    const int n = x.n;
    RealMatrix z(n);
    for (int i = 0; i < n; ++i) {
        for (int k = 0; k < n; ++k) {
            const double xik = x.at(i, k);
            if (xik == 0.0) continue;
            const double *yrow = &y.a[(size_t)k * n];
            double *zrow = &z.a[(size_t)i * n];
            for (int j = 0; j < n; ++j) zrow[j] += xik * yrow[j];
        }
    }
    return z;
}

// exp(G) by scaling-and-squaring with a Taylor series; G is the (skew
// symmetric) truncated squeeze generator, so the result is orthogonal at
// the truncation dimension.
RealMatrix expm(const RealMatrix &g) {
    const int n = g.n;
    double norm1 = 0.0;
    for (int j = 0; j < n; ++j) {
        double c = 0.0;
        for (int i = 0; i < n; ++i) c += std::fabs(g.at(i, j));
        norm1 = std::max(norm1, c);
    }
    int squarings = 0;
    double scale = 1.0;
    while (norm1 * scale > 0.5) {
        scale *= 0.5;
        ++squarings;
    }

    RealMatrix term(n);
    RealMatrix sum(n);
    for (int i = 0; i < n; ++i) {
        term.at(i, i) = 1.0;
        sum.at(i, i) = 1.0;
    }
    RealMatrix a(n);
    for (size_t i = 0; i < a.a.size(); ++i) a.a[i] = g.a[i] * scale;

    for (int k = 1; k <= 24; ++k) {
        term = matmul(term, a);
        const double inv = 1.0 / k;
        double tnorm = 0.0;
        for (size_t i = 0; i < term.a.size(); ++i) {
            term.a[i] *= inv;
            sum.a[i] += term.a[i];
            tnorm = std::max(tnorm, std::fabs(term.a[i]));
        }
        if (tnorm < 1e-18) break;
    }
    for (int s = 0; s < squarings; ++s) sum = matmul(sum, sum);
    return sum;
}

RealMatrix squeeze_generator(double r, int dim) {
    RealMatrix g(dim);
    for (int n = 0; n + 2 < dim; ++n) {
        const double c = 0.5 * r * std::sqrt((n + 1.0) * (n + 2.0));
        g.at(n + 2, n) += c;   // a^dag^2 part
        g.at(n, n + 2) -= c;   // a^2 part
    }
    return g;
}

// First `cutoff` amplitudes of U(r)|n> for each requested n, with the
// truncation-tail precondition enforced. The generator is exponentiated at
// a padded dimension that is grown until the top slice carries no mass.
std::vector<std::vector<double>> squeezed_columns(double r, int cutoff,
                                                  const std::vector<int> &orders) {
    const int max_order = *std::max_element(orders.begin(), orders.end());
    int extra = std::max(32, cutoff / 2);
    for (;;) {
        const int dim = cutoff + extra;
        const RealMatrix s = expm(squeeze_generator(r, dim));
        bool padded_enough = true;
        for (int n : orders) {
            double top = 0.0;
            for (int i = dim - 8; i < dim; ++i) top += s.at(i, n) * s.at(i, n);
            if (top > 1e-14) padded_enough = false;
        }
        if (!padded_enough && dim < 512 && max_order < dim) {
            extra *= 2;
            continue;
        }
        std::vector<std::vector<double>> cols;
        for (int n : orders) {
            double tail = 0.0;
            for (int i = cutoff; i < dim; ++i) tail += s.at(i, n) * s.at(i, n);
            if (tail > kTailTol) {
                char buf[128];
                std::snprintf(buf, sizeof buf,
                              "Fock cutoff %d insufficient for squeezing r=%g (tail mass %.2e)",
                              cutoff, r, tail);
                raise(errc::truncation, buf);
            }
            std::vector<double> col(cutoff);
            for (int i = 0; i < cutoff; ++i) col[i] = s.at(i, n);
            cols.push_back(std::move(col));
        }
        return cols;
    }
}

}  // namespace

FockDensityMatrix FockDensityMatrix::from_components(std::vector<double> weights,
                                                     std::vector<std::vector<Complex>> vectors) {
    if (weights.empty() || weights.size() != vectors.size()) {
        raise(errc::invalid_argument, "component weights and vectors must match and be nonempty");
    }
    FockDensityMatrix rho;
    rho.dim_ = (int)vectors.front().size();
    for (const auto &v : vectors) {
        if ((int)v.size() != rho.dim_) raise(errc::dimension_mismatch, "component length mismatch");
    }
    rho.entries_.assign((size_t)rho.dim_ * rho.dim_, Complex(0.0, 0.0));
    for (size_t k = 0; k < weights.size(); ++k) {
        if (weights[k] < 0.0) raise(errc::invalid_argument, "component weights must be nonnegative");
        for (int m = 0; m < rho.dim_; ++m) {
            for (int n = 0; n < rho.dim_; ++n) {
                rho.entries_[(size_t)m * rho.dim_ + n] +=
                    weights[k] * vectors[k][m] * std::conj(vectors[k][n]);
            }
        }
    }
    rho.weights_ = std::move(weights);
    rho.vectors_ = std::move(vectors);
    rho.validate();
    return rho;
}

FockDensityMatrix FockDensityMatrix::from_matrix(std::vector<Complex> entries, int dim) {
    if (dim <= 0 || entries.size() != (size_t)dim * dim) {
        raise(errc::invalid_argument, "matrix size does not match dimension");
    }
    FockDensityMatrix rho;
    rho.dim_ = dim;
    rho.entries_ = std::move(entries);
    rho.validate();
    return rho;
}

void FockDensityMatrix::validate() const {
    for (int m = 0; m < dim_; ++m) {
        if (entry(m, m).real() < -1e-10 || std::fabs(entry(m, m).imag()) > 1e-12) {
            raise(errc::invalid_argument, "density matrix diagonal must be (near) nonnegative real");
        }
        for (int n = m; n < dim_; ++n) {
            if (std::abs(entry(m, n) - std::conj(entry(n, m))) > 1e-12) {
                raise(errc::invalid_argument, "density matrix is not Hermitian");
            }
        }
    }
    if (std::fabs(trace() - 1.0) > kTraceTol) {
        char buf[96];
        std::snprintf(buf, sizeof buf, "density matrix trace %.12f deviates from 1", trace());
        raise(errc::truncation, buf);
    }
}

double FockDensityMatrix::trace() const {
    double t = 0.0;
    for (int m = 0; m < dim_; ++m) t += entry(m, m).real();
    return t;
}

Complex FockDensityMatrix::mean_a() const {
    Complex s = 0.0;
    for (int m = 1; m < dim_; ++m) s += std::sqrt((double)m) * entry(m, m - 1);
    return s;
}

Complex FockDensityMatrix::mean_a_squared() const {
    Complex s = 0.0;
    for (int m = 2; m < dim_; ++m) s += std::sqrt(m * (m - 1.0)) * entry(m, m - 2);
    return s;
}

double FockDensityMatrix::mean_n() const {
    double s = 0.0;
    for (int m = 0; m < dim_; ++m) s += m * entry(m, m).real();
    return s;
}

std::vector<Complex> coherent_amplitudes(Complex alpha, int cutoff) {
    std::vector<Complex> c(cutoff);
    c[0] = std::exp(-0.5 * std::norm(alpha));
    for (int n = 1; n < cutoff; ++n) c[n] = c[n - 1] * alpha / std::sqrt((double)n);
    return c;
}

FockDensityMatrix cat_density_matrix(const CatSpec &spec, int cutoff) {
    if (cutoff < 2) raise(errc::invalid_argument, "cutoff must be at least 2");
    const double norm_factor = 1.0 + std::exp(-2.0 * std::norm(spec.alpha)) * std::cos(spec.phi);
    if (!(norm_factor > 1e-12)) {
        raise(errc::invalid_argument,
              "cat normalization 1 + exp(-2|alpha|^2) cos(phi) degenerates for these parameters");
    }
    const auto coh = coherent_amplitudes(spec.alpha, cutoff);
    const Complex phase = std::exp(Complex(0.0, spec.phi));
    std::vector<Complex> c(cutoff);
    double norm = 0.0;
    for (int n = 0; n < cutoff; ++n) {
        const double sign = (n % 2 == 0) ? 1.0 : -1.0;
        c[n] = coh[n] * (1.0 + phase * sign) / std::sqrt(2.0 * norm_factor);
        norm += std::norm(c[n]);
    }
    if (norm < 1.0 - kTailTol) {
        char buf[128];
        std::snprintf(buf, sizeof buf,
                      "Fock cutoff %d insufficient for cat state |alpha|=%g (norm %.12f)", cutoff,
                      std::abs(spec.alpha), norm);
        raise(errc::truncation, buf);
    }
    return FockDensityMatrix::from_components({1.0}, {std::move(c)});
}

FockDensityMatrix coherent_density_matrix(Complex alpha, int cutoff) {
    auto c = coherent_amplitudes(alpha, cutoff);
    double norm = 0.0;
    for (const auto &v : c) norm += std::norm(v);
    if (norm < 1.0 - kTailTol) {
        raise(errc::truncation, "Fock cutoff insufficient for coherent state");
    }
    return FockDensityMatrix::from_components({1.0}, {std::move(c)});
}

FockDensityMatrix squeezed_fock_density_matrix(const SqueezedFockSpec &spec, int cutoff) {
    if (spec.n < 0) raise(errc::invalid_argument, "Fock index must be nonnegative");
    if (spec.n >= cutoff) raise(errc::invalid_argument, "Fock index must lie below the cutoff");
    if (!std::isfinite(spec.r)) raise(errc::invalid_argument, "squeezing constant must be finite");
    auto cols = squeezed_columns(spec.r, cutoff, {spec.n});
    std::vector<Complex> v(cutoff);
    for (int i = 0; i < cutoff; ++i) v[i] = cols[0][i];
    return FockDensityMatrix::from_components({1.0}, {std::move(v)});
}

FockDensityMatrix squeezed_thermal_density_matrix(const SqueezedThermalSpec &spec, int cutoff) {
    if (spec.weights.empty()) raise(errc::invalid_argument, "thermal weights must be nonempty");
    double sum = 0.0;
    for (double w : spec.weights) {
        if (w < 0.0) raise(errc::invalid_argument, "thermal weights must be nonnegative");
        sum += w;
    }
    if (std::fabs(sum - 1.0) > 1e-10) {
        raise(errc::invalid_argument, "thermal weights must sum to 1 within 1e-10");
    }
    if ((int)spec.weights.size() > cutoff) {
        raise(errc::invalid_argument, "more thermal weights than Fock levels below the cutoff");
    }

    std::vector<int> orders;
    std::vector<double> weights;
    for (size_t n = 0; n < spec.weights.size(); ++n) {
        if (spec.weights[n] > 0.0) {
            orders.push_back((int)n);
            weights.push_back(spec.weights[n]);
        }
    }
    if (orders.empty()) raise(errc::invalid_argument, "all thermal weights are zero");

    auto cols = squeezed_columns(spec.r, cutoff, orders);
    std::vector<std::vector<Complex>> vectors;
    for (auto &col : cols) {
        std::vector<Complex> v(cutoff);
        for (int i = 0; i < cutoff; ++i) v[i] = col[i];
        vectors.push_back(std::move(v));
    }
    return FockDensityMatrix::from_components(std::move(weights), std::move(vectors));
}

IdealPdfEvaluator::IdealPdfEvaluator(const FockDensityMatrix &rho, double theta)
    : dim_(rho.dim()), psi_(rho.dim()) {
    if (rho.has_components()) {
        weights_ = rho.component_weights();
        rotated_.resize(weights_.size());
        for (size_t k = 0; k < weights_.size(); ++k) {
            const auto &v = rho.component_vectors()[k];
            rotated_[k].resize(dim_);
            for (int m = 0; m < dim_; ++m) {
                rotated_[k][m] = v[m] * std::exp(Complex(0.0, -m * theta));
            }
        }
        return;
    }
    rotated_matrix_.resize((size_t)dim_ * dim_);
    for (int m = 0; m < dim_; ++m) {
        for (int n = 0; n < dim_; ++n) {
            rotated_matrix_[(size_t)m * dim_ + n] =
                rho.entry(m, n) * std::exp(Complex(0.0, (n - m) * theta));
        }
    }
}

double IdealPdfEvaluator::operator()(double x) const {
    specfun::oscillator_eigenfunctions(dim_, x, psi_.data());
    if (!rotated_.empty()) {
        // w = sum_k w_k | sum_m v_km e^{-im theta} psi_m(x) |^2
        double w = 0.0;
        for (size_t k = 0; k < weights_.size(); ++k) {
            const auto &v = rotated_[k];
            double re = 0.0, im = 0.0;
            for (int m = 0; m < dim_; ++m) {
                re += v[m].real() * psi_[m];
                im += v[m].imag() * psi_[m];
            }
            w += weights_[k] * (re * re + im * im);
        }
        return w;
    }
    // General Hermitian form: w = sum_{m,n} rho_mn e^{i(n-m)theta} psi_m psi_n.
    double w = 0.0;
    for (int m = 0; m < dim_; ++m) {
        w += rotated_matrix_[(size_t)m * dim_ + m].real() * psi_[m] * psi_[m];
        for (int n = m + 1; n < dim_; ++n) {
            w += 2.0 * rotated_matrix_[(size_t)m * dim_ + n].real() * psi_[m] * psi_[n];
        }
    }
    return w;
}

double ideal_quadrature_pdf(const FockDensityMatrix &rho, double theta, double x) {
    return IdealPdfEvaluator(rho, theta)(x);
}

namespace {

// Half-width of the effective support of the ideal quadrature density.
double pdf_support_halfwidth(const FockDensityMatrix &rho) {
    int top = 0;
    if (rho.has_components()) {
        for (const auto &v : rho.component_vectors()) {
            for (int m = 0; m < (int)v.size(); ++m) {
                if (std::norm(v[m]) > 1e-16) top = std::max(top, m);
            }
        }
    } else {
        for (int m = 0; m < rho.dim(); ++m) {
            if (rho.entry(m, m).real() > 1e-16) top = std::max(top, m);
        }
    }
    return std::sqrt(2.0 * top + 1.0) + 6.0;
}

}  // namespace

double quadrature_pdf(const FockDensityMatrix &rho, double theta, double eta, double x) {
    if (!(eta > 0.0) || eta > 1.0) {
        raise(errc::invalid_argument, "eta must lie in (0, 1]");
    }
    if (eta == 1.0) return ideal_quadrature_pdf(rho, theta, x);

    const double noise_var = 0.5 * (1.0 - eta);
    const double sq = std::sqrt(eta);
    const double half = pdf_support_halfwidth(rho);
    const double gauss_norm = 1.0 / std::sqrt(2.0 * M_PI * noise_var);
    const IdealPdfEvaluator ideal(rho, theta);
    auto integrand = [&](double u) {
        const double d = x - sq * u;
        return ideal(u) * gauss_norm * std::exp(-0.5 * d * d / noise_var);
    };
    // The Gaussian factor confines the integrand to a window around x/sqrt(eta);
    // integrate panel-wise there so the adaptive rule cannot step over it.
    const double reach = 9.0 * std::sqrt(noise_var) / sq;
    const double lo = std::max(-half, x / sq - reach);
    const double hi = std::min(half, x / sq + reach);
    if (lo >= hi) return 0.0;
    const int panels = 8;
    double total = 0.0;
    for (int p = 0; p < panels; ++p) {
        const double a = lo + (hi - lo) * p / panels;
        const double b = lo + (hi - lo) * (p + 1) / panels;
        total += quad::adaptive_simpson(integrand, a, b, 1e-9 / panels);
    }
    return total;
}

PdfProfile::PdfProfile(const FockDensityMatrix &rho, double theta, double eta)
    : ideal_(std::make_shared<IdealPdfEvaluator>(rho, theta)), eta_(eta) {
    if (!(eta > 0.0) || eta > 1.0) raise(errc::invalid_argument, "eta must lie in (0, 1]");
    if (eta_ == 1.0) return;
    sqrt_eta_ = std::sqrt(eta);
    noise_var_ = 0.5 * (1.0 - eta);
    const double half = pdf_support_halfwidth(rho);
    const auto rule = quad::gauss_legendre(1024, -half, half);
    nodes_ = rule.nodes;
    node_mass_.resize(nodes_.size());
    for (size_t i = 0; i < nodes_.size(); ++i) {
        node_mass_[i] = rule.weights[i] * (*ideal_)(nodes_[i]);
    }
}

double PdfProfile::operator()(double x) const {
    if (eta_ == 1.0) return (*ideal_)(x);
    const double gauss_norm = 1.0 / std::sqrt(2.0 * M_PI * noise_var_);
    double acc = 0.0;
    for (size_t i = 0; i < nodes_.size(); ++i) {
        const double d = x - sqrt_eta_ * nodes_[i];
        acc += node_mass_[i] * std::exp(-0.5 * d * d / noise_var_);
    }
    return acc * gauss_norm;
}

double quadrature_mean(const FockDensityMatrix &rho, double theta) {
    const Complex a = rho.mean_a();
    return std::sqrt(2.0) * (a * std::exp(Complex(0.0, -theta))).real();
}

double quadrature_variance(const FockDensityMatrix &rho, double theta) {
    const Complex a2 = rho.mean_a_squared();
    const double second =
        0.5 + rho.mean_n() + (a2 * std::exp(Complex(0.0, -2.0 * theta))).real();
    const double mean = quadrature_mean(rho, theta);
    return second - mean * mean;
}

double lund_fidelity(double alpha, double r) {
    if (!(alpha > 0.0)) {
        raise(errc::invalid_argument, "odd-cat amplitude must be positive (normalization degenerates at 0)");
    }
    const double a2 = alpha * alpha;
    const double ch = std::cosh(r);
    return 2.0 * a2 * std::exp(-a2 * (1.0 - std::tanh(r))) /
           (ch * ch * ch * (1.0 - std::exp(-2.0 * a2)));
}

double optimize_squeezing(double alpha) {
    if (!(alpha > 0.0) || alpha > 5.0) {
        raise(errc::invalid_argument, "amplitude must lie in (0, 5]");
    }
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double lo = 0.0, hi = 3.0;
    double x1 = hi - inv_phi * (hi - lo);
    double x2 = lo + inv_phi * (hi - lo);
    double f1 = lund_fidelity(alpha, x1);
    double f2 = lund_fidelity(alpha, x2);
    while (hi - lo > 1e-6) {
        if (f1 < f2) {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + inv_phi * (hi - lo);
            f2 = lund_fidelity(alpha, x2);
        } else {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - inv_phi * (hi - lo);
            f1 = lund_fidelity(alpha, x1);
        }
    }
    return 0.5 * (lo + hi);
}

double wigner_origin(const FockDensityMatrix &rho) {
    double s = 0.0;
    for (int n = 0; n < rho.dim(); ++n) {
        s += ((n % 2 == 0) ? 1.0 : -1.0) * rho.entry(n, n).real();
    }
    return s / M_PI;
}

double mean_photon(const FockDensityMatrix &rho) { return rho.mean_n(); }

double fidelity_oracle(const FockDensityMatrix &rho, const FockDensityMatrix &pure_target) {
    if (rho.dim() != pure_target.dim()) {
        raise(errc::dimension_mismatch, "state dimensions differ");
    }
    if (!pure_target.is_pure()) {
        raise(errc::invalid_argument, "fidelity target must be a pure state");
    }
    const auto &psi = pure_target.component_vectors().front();
    if (rho.has_components()) {
        double f = 0.0;
        for (size_t k = 0; k < rho.component_weights().size(); ++k) {
            const auto &v = rho.component_vectors()[k];
            Complex ov = 0.0;
            for (int m = 0; m < rho.dim(); ++m) ov += std::conj(psi[m]) * v[m];
            f += rho.component_weights()[k] * std::norm(ov);
        }
        return f;
    }
    Complex f = 0.0;
    for (int m = 0; m < rho.dim(); ++m) {
        for (int n = 0; n < rho.dim(); ++n) {
            f += std::conj(psi[m]) * rho.entry(m, n) * psi[n];
        }
    }
    return f.real();
}

}  // namespace homfid::states
