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

// Variance modeling of kernel averages and variance-optimal phase schedules:
// the estimator variance V = (1/pi^2) int V_f(theta)/m(theta) dtheta is
// minimized over sampling densities with fixed total M by
// m_opt(theta) ∝ sqrt(V_f(theta)).

#ifndef HOMFID_SCHEDULER_HPP
#define HOMFID_SCHEDULER_HPP

#include <utility>
#include <vector>

#include "estimator.hpp"
#include "simulator.hpp"

namespace homfid::sched {

struct VarianceProfile {
    std::vector<double> grid;  // strictly increasing phases in [0, pi)
    std::vector<double> vf;    // per-phase kernel variances, >= 0
};

/// Per-bin sample variance of kernel contributions over equally spaced bins
/// covering [0, pi). Every bin must hold at least 30 records.
VarianceProfile empirical_variance_profile(const std::vector<sim::QuadratureRecord> &records,
                                           const est::Kernel &kernel, int bins);

/// Density-weighted schedule with m(theta) ∝ sqrt(V_f(theta)) normalized to
/// `total` samples. Invariant under positive rescaling of the profile.
sim::PhaseSchedule optimal_schedule(const VarianceProfile &profile, long long total);

/// (V_min, V_c): the minimum achievable variance
/// V_min = (1/M) [(1/pi) int sqrt(V_f) dtheta]^2 and the uniform-sampling
/// variance V_c = (1/(M pi)) int V_f dtheta. V_min <= V_c always.
std::pair<double, double> predicted_variances(const VarianceProfile &profile, long long total);

/// Closed-form optimal schedule m(theta) = M / (pi a^2(theta, r)) for
/// squeezed thermal-like states at unit efficiency.
sim::PhaseSchedule squeezed_thermal_schedule(double r, long long total, int bins);

}  // namespace homfid::sched

#endif
