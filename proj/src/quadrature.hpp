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

#ifndef HOMFID_QUADRATURE_HPP
#define HOMFID_QUADRATURE_HPP

#include <functional>
#include <vector>

namespace homfid::quad {

struct Rule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

/// Gauss-Legendre rule with n points on [a, b].
Rule gauss_legendre(int n, double a, double b);

/// Adaptive Simpson integration of f over [a, b] to the given absolute
/// tolerance.
double adaptive_simpson(const std::function<double(double)> &f, double a, double b,
                        double abs_tol, int max_depth = 40);

}  // namespace homfid::quad

#endif
