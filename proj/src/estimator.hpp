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

#ifndef HOMFID_ESTIMATOR_HPP
#define HOMFID_ESTIMATOR_HPP

#include <complex>
#include <optional>
#include <vector>

#include "kernels.hpp"
#include "simulator.hpp"
#include "states.hpp"

namespace homfid::est {

using Complex = std::complex<double>;

/// A sampling-function selection with its parameters, validated against the
/// efficiency thresholds at construction.
class Kernel {
  public:
    enum class Family { cat, squeezed_fock, husimi_q, mean_photon };

    static Kernel cat(states::CatSpec spec, double eta);
    static Kernel squeezed_fock(int n, double r, double eta);
    /// Formally independent (alpha, alphastar); r != 0 selects the squeezed
    /// frame variant.
    static Kernel husimi_q(Complex alpha, Complex alphastar, double eta, double r = 0.0);
    static Kernel mean_photon(double eta);

    kernels::KernelEvaluation eval(double xprime, double theta) const;
    bool odd_parity() const;
    double eta() const { return eta_; }
    Family family() const { return family_; }
    const states::CatSpec &cat_spec() const { return cat_; }
    int fock_order() const { return n_; }
    double squeezing() const { return r_; }

  private:
    Kernel() = default;
    Family family_ = Family::mean_photon;
    double eta_ = 1.0;
    states::CatSpec cat_;
    int n_ = 0;
    double r_ = 0.0;
    Complex alpha_ = 0.0, alphastar_ = 0.0;
};

struct Estimate {
    double value = 0.0;
    double stderr_value = 0.0;  // sample std of per-record contributions / sqrt(M)
    long long count = 0;
    bool density_weighted = false;
};

enum class WitnessKind { negativity, quantum_non_gaussianity };

struct WitnessVerdict {
    WitnessKind quantity = WitnessKind::negativity;
    bool passed = false;
    double margin_sigma = 0.0;
    /// negativity: the Wigner-origin upper bound (1 - 2 F) / pi;
    /// quantum non-Gaussianity: the fidelity threshold T(nbar).
    double bound = 0.0;
};

/// Mean of the kernel over the records. Uniform schedules (or none) use the
/// plain mean; density schedules apply the unbiased inverse-density weights
/// M / (pi m(theta)). Accumulation is partitioned into fixed chunks with a
/// deterministic in-order merge, so results do not depend on thread count.
Estimate estimate(const std::vector<sim::QuadratureRecord> &records, const Kernel &kernel,
                  const sim::PhaseSchedule *schedule = nullptr, int threads = 0);

/// z-score of the null (imaginary) kernel component; identically-zero
/// contributions give z = 0.
double null_diagnostic(const std::vector<sim::QuadratureRecord> &records, const Kernel &kernel);

/// F_- > 1/2 certifies W(0,0) < 0; `bound` carries (1 - 2 F_-) / pi.
WitnessVerdict witness_negativity(const Kernel &kernel, const Estimate &f_minus,
                                  double significance = 5.0);

/// F_- > T(nbar) = 1/2 - (1/2) exp(-2 nbar (nbar + 1)) certifies quantum
/// non-Gaussianity; nbar uncertainty is propagated through dT/dnbar.
WitnessVerdict witness_qng(const Kernel &kernel, const Estimate &f_minus, const Estimate &nbar,
                           double significance = 5.0);

}  // namespace homfid::est

#endif
