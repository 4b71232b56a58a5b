// Copyright 2026 The gatemonlab Authors
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

#ifndef GATEMONLAB_LEVMAR_HPP
#define GATEMONLAB_LEVMAR_HPP

#include <functional>
#include <string>

#include <Eigen/Dense>

namespace gatemonlab {

// Residual vector r(theta); the minimizer drives ||r||^2 down.
using ResidualFn = std::function<Eigen::VectorXd(const Eigen::VectorXd&)>;

struct LevMarOptions {
    int max_iterations = 200;
    double step_tolerance = 1e-10;     // relative parameter step
    double initial_lambda = 1e-3;
    double jacobian_rel_step = 1e-6;   // forward-difference step
};

struct LevMarResult {
    Eigen::VectorXd parameters;
    Eigen::MatrixXd covariance;  // sigma^2 (J^T J)^-1 at the optimum
    double residual_norm = 0;    // ||r||_2
    int iterations = 0;
    bool converged = false;
    std::string message;
};

// Damped Gauss-Newton (Levenberg-Marquardt) with forward-difference
// Jacobians. Deterministic: no randomized restarts, fixed damping schedule.
LevMarResult levmar_fit(const ResidualFn& residual, const Eigen::VectorXd& initial,
                        const LevMarOptions& options = {});

}  // namespace gatemonlab

#endif  // GATEMONLAB_LEVMAR_HPP
