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

#ifndef HOMFID_SIMULATOR_HPP
#define HOMFID_SIMULATOR_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "states.hpp"

namespace homfid::sim {

/// One homodyne outcome: local-oscillator phase (folded to [0, pi)) and the
/// measured noisy quadrature value.
struct QuadratureRecord {
    double theta = 0.0;
    double xprime = 0.0;
};

struct PhaseBin {
    double theta = 0.0;
    long long count = 0;
};

/// Number of quadrature measurements per phase. Bins are equally spaced
/// centers over [0, pi); Uniform schedules carry equal counts and admit the
/// plain-mean estimator, Density schedules carry counts stratified from a
/// target density m(theta) by largest-remainder rounding.
class PhaseSchedule {
  public:
    enum class Kind { Uniform, Grid, Density };

    static PhaseSchedule uniform(long long total, int bins);
    /// Fixed phases with explicit counts (arbitrary strictly increasing
    /// centers); treated as homogeneous by the estimator.
    static PhaseSchedule grid(std::vector<PhaseBin> bins);
    /// Counts proportional to density(theta_b), normalized to `total`.
    static PhaseSchedule from_density(const std::vector<double> &density_at_bins,
                                      long long total);
    /// Rebuild from explicit bins (schedule CSV). Uniform/Density schedules
    /// must carry equally spaced bin centers over [0, pi).
    static PhaseSchedule from_bins(std::vector<PhaseBin> bins, Kind kind);

    Kind kind() const { return kind_; }
    const std::vector<PhaseBin> &bins() const { return bins_; }
    long long total() const;
    double bin_width() const;
    /// Realized sampling density m(theta) = count / width of the containing
    /// bin; zero for theta outside every bin.
    double density_at(double theta) const;

  private:
    PhaseSchedule() = default;
    Kind kind_ = Kind::Uniform;
    std::vector<PhaseBin> bins_;
};

/// x_{theta+pi} = -x_theta: maps a record with theta in [0, 2 pi) onto the
/// canonical [0, pi) half-interval.
std::pair<double, double> fold_phase(double theta, double xprime);

/// Draws records from the exact state model: ideal quadratures by rejection
/// sampling from the Fock-expansion density with a Gaussian proposal, then
/// detection loss as x' = sqrt(eta) x + sqrt(1-eta) x_vac. Reproducible from
/// the seed; bins use disjoint deterministic substreams, merged in bin order.
std::vector<QuadratureRecord> sample_records(const states::FockDensityMatrix &rho,
                                             const PhaseSchedule &schedule, double eta,
                                             std::uint64_t seed);

/// Repeated batches from one (state, schedule, eta): the per-bin envelope
/// constants and pdf evaluators are set up once, each run(seed) is then a
/// pure draw.
class Sampler {
  public:
    Sampler(const states::FockDensityMatrix &rho, const PhaseSchedule &schedule, double eta);
    std::vector<QuadratureRecord> run(std::uint64_t seed) const;

  private:
    struct Bin {
        double theta;
        long long count;
        double envelope;
        states::IdealPdfEvaluator pdf;
    };
    double eta_ = 1.0;
    double proposal_var_ = 1.0;
    long long total_ = 0;
    std::vector<Bin> bins_;
};

namespace detail {

/// Envelope constant c = max_x w(x; theta) / proposal(x; variance). Raises
/// errc::envelope when the implied acceptance rate 1/c drops below 1e-4.
double rejection_envelope_constant(const states::FockDensityMatrix &rho, double theta,
                                   double proposal_variance);

/// Proposal variance 1.2 * max(e^{2 r_est}, 1) * (nbar + 1) from the state's
/// second moments.
double proposal_variance(const states::FockDensityMatrix &rho);

}  // namespace detail

}  // namespace homfid::sim

#endif
