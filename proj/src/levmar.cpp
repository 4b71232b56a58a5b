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

#include "gatemonlab/levmar.hpp"

#include <cmath>
#include <limits>

namespace gatemonlab {

namespace {

Eigen::MatrixXd forward_difference_jacobian(const ResidualFn& residual, const Eigen::VectorXd& x,
                                            const Eigen::VectorXd& r0, double rel_step) {
    const int m = static_cast<int>(r0.size());
    const int p = static_cast<int>(x.size());
    Eigen::MatrixXd jac(m, p);
    for (int j = 0; j < p; ++j) {
        const double h = rel_step * std::max(std::abs(x[j]), 1.0);
        Eigen::VectorXd xj = x;
        xj[j] += h;
        jac.col(j) = (residual(xj) - r0) / h;
    }
    return jac;
}

}  // namespace

LevMarResult levmar_fit(const ResidualFn& residual, const Eigen::VectorXd& initial,
                        const LevMarOptions& options) {
    LevMarResult result;
    Eigen::VectorXd x = initial;
    Eigen::VectorXd r = residual(x);
    double rss = r.squaredNorm();
    if (!std::isfinite(rss)) {
        result.parameters = x;
        result.residual_norm = std::numeric_limits<double>::quiet_NaN();
        result.message = "initial residual not finite";
        return result;
    }

    const int p = static_cast<int>(x.size());
    double lambda = options.initial_lambda;
    bool step_converged = false;
    int iter = 0;
    Eigen::MatrixXd jac;

    for (; iter < options.max_iterations; ++iter) {
        jac = forward_difference_jacobian(residual, x, r, options.jacobian_rel_step);
        const Eigen::MatrixXd jtj = jac.transpose() * jac;
        const Eigen::VectorXd jtr = jac.transpose() * r;
        if (jtr.lpNorm<Eigen::Infinity>() < 1e-14 * (1.0 + std::sqrt(rss))) {
            step_converged = true;
            break;
        }

        bool accepted = false;
        for (int attempt = 0; attempt < 40; ++attempt) {
            Eigen::MatrixXd damped = jtj;
            for (int d = 0; d < p; ++d) {
                damped(d, d) += lambda * std::max(jtj(d, d), 1e-12);
            }
            const Eigen::VectorXd delta = damped.ldlt().solve(-jtr);
            const Eigen::VectorXd x_new = x + delta;
            const Eigen::VectorXd r_new = residual(x_new);
            const double rss_new = r_new.squaredNorm();
            if (std::isfinite(rss_new) && rss_new <= rss) {
                double max_rel_step = 0;
                for (int d = 0; d < p; ++d) {
                    max_rel_step = std::max(max_rel_step,
                                            std::abs(delta[d]) / std::max(std::abs(x[d]), 1.0));
                }
                x = x_new;
                r = r_new;
                rss = rss_new;
                lambda = std::max(lambda / 3.0, 1e-14);
                accepted = true;
                if (max_rel_step < options.step_tolerance) step_converged = true;
                break;
            }
            lambda *= 5.0;
        }
        if (!accepted) {
            // Damping exhausted: we are at a (possibly noisy) local minimum.
            step_converged = true;
        }
        if (step_converged) break;
    }

    result.parameters = x;
    result.residual_norm = std::sqrt(rss);
    result.iterations = iter + 1;
    result.converged = step_converged && std::isfinite(rss);
    if (!result.converged) result.message = "maximum iterations reached";

    // Covariance from local curvature: sigma^2 (J^T J)^-1 with
    // sigma^2 = RSS/(m - p). Zero for an exact (noiseless) fit.
    jac = forward_difference_jacobian(residual, x, r, options.jacobian_rel_step);
    const int m = static_cast<int>(r.size());
    const double dof = std::max(1, m - p);
    const double sigma2 = rss / dof;
    const Eigen::MatrixXd jtj = jac.transpose() * jac;
    Eigen::MatrixXd jtj_inv = jtj.completeOrthogonalDecomposition().pseudoInverse();
    result.covariance = sigma2 * jtj_inv;
    return result;
}

}  // namespace gatemonlab
