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

#include "state_grid.hpp"

#include <cmath>

#include "quadrature.hpp"

namespace testsupport {

StateGrid::StateGrid(const homfid::states::FockDensityMatrix &rho, double eta, int theta_points,
                     int x_points, double x_half) {
    const auto theta_rule = homfid::quad::gauss_legendre(theta_points, 0.0, M_PI);
    const auto x_rule = homfid::quad::gauss_legendre(x_points, -x_half, x_half);
    thetas_ = theta_rule.nodes;
    xs_ = x_rule.nodes;
    mass_.resize((size_t)theta_points * x_points);
    for (int i = 0; i < theta_points; ++i) {
        const homfid::states::PdfProfile pdf(rho, thetas_[i], eta);
        for (int j = 0; j < x_points; ++j) {
            mass_[(size_t)i * x_points + j] =
                theta_rule.weights[i] * x_rule.weights[j] * pdf(xs_[j]) / M_PI;
        }
    }
}

double StateGrid::average(const std::function<double(double, double)> &kernel) const {
    double acc = 0.0;
    for (size_t i = 0; i < thetas_.size(); ++i) {
        for (size_t j = 0; j < xs_.size(); ++j) {
            acc += mass_[i * xs_.size() + j] * kernel(xs_[j], thetas_[i]);
        }
    }
    return acc;
}

}  // namespace testsupport
