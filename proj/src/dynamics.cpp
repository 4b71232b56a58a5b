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

#include "gatemonlab/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <stdexcept>

#include <Eigen/Dense>
#include <nlohmann/json.hpp>

#include "gatemonlab/constants.hpp"
#include "gatemonlab/random.hpp"

namespace gatemonlab {

std::vector<std::string> DissipationRates::validate() const {
    std::vector<std::string> issues;
    if (!(t1_ns > 0)) issues.push_back("T1_ns must be positive");
    if (!(t2_ns > 0)) issues.push_back("T2_ns must be positive");
    if (t2_ns > 2.0 * t1_ns + 1e-12) issues.push_back("T2_ns must not exceed 2*T1_ns");
    if (thermal_population < 0 || thermal_population >= 0.5) {
        issues.push_back("thermal_population must be in [0, 0.5)");
    }
    return issues;
}

nlohmann::json DissipationRates::to_json() const {
    return {{"T1_ns", t1_ns}, {"T2_ns", t2_ns}, {"thermal_population", thermal_population}};
}

DissipationRates DissipationRates::from_json(const nlohmann::json& j) {
    DissipationRates r;
    r.t1_ns = j.at("T1_ns").get<double>();
    r.t2_ns = j.at("T2_ns").get<double>();
    r.thermal_population = j.value("thermal_population", 0.0);
    return r;
}

std::vector<std::string> HomodyneModel::validate() const {
    std::vector<std::string> issues;
    if (noise_sigma_mV < 0) issues.push_back("noise_sigma_mV must be non-negative");
    return issues;
}

nlohmann::json HomodyneModel::to_json() const {
    return {{"v_ground_mV", v_ground_mV},
            {"v_excited_mV", v_excited_mV},
            {"linear_slope_mV_per_ns", linear_slope_mV_per_ns},
            {"noise_sigma_mV", noise_sigma_mV},
            {"rng_seed", rng_seed}};
}

HomodyneModel HomodyneModel::from_json(const nlohmann::json& j) {
    HomodyneModel h;
    h.v_ground_mV = j.at("v_ground_mV").get<double>();
    h.v_excited_mV = j.at("v_excited_mV").get<double>();
    h.linear_slope_mV_per_ns = j.value("linear_slope_mV_per_ns", 0.0);
    h.noise_sigma_mV = j.value("noise_sigma_mV", 0.0);
    h.rng_seed = j.value("rng_seed", std::uint64_t{0});
    return h;
}

DrivePulse DrivePulse::rectangular_rotation(double angle_rad, double width_ns,
                                            double carrier_GHz) {
    if (!(width_ns > 0)) throw std::invalid_argument("rectangular_rotation: width must be > 0");
    DrivePulse p;
    p.carrier_GHz = carrier_GHz;
    p.rabi_MHz = angle_rad / (kTwoPi * width_ns) * 1e3;  // angle = 2 pi Omega tau
    p.width_ns = width_ns;
    p.envelope = PulseEnvelope::Rectangular;
    return p;
}

double rabi_population(double omega_MHz, double delta_MHz, double t_ns) {
    if (t_ns < 0) throw std::domain_error("rabi_population: time must be non-negative");
    const double omega2 = omega_MHz * omega_MHz;
    const double eff2 = omega2 + delta_MHz * delta_MHz;
    if (eff2 == 0.0) return 0.0;
    const double eff_GHz = std::sqrt(eff2) * 1e-3;
    const double s = std::sin(kPi * eff_GHz * t_ns);
    return omega2 / eff2 * s * s;
}

namespace {

struct BlochDerivOps {
    double delta_rad_ns;   // angular detuning
    double gamma1;         // 1/T1
    double gamma2;         // 1/T2
    double z_eq;           // 1 - 2 * thermal_population
    double cos_phase;
    double sin_phase;

    BlochState rhs(const BlochState& s, double omega_rad_ns) const {
        BlochState d;
        d.x = -delta_rad_ns * s.y + omega_rad_ns * sin_phase * s.z - gamma2 * s.x;
        d.y = delta_rad_ns * s.x - omega_rad_ns * cos_phase * s.z - gamma2 * s.y;
        d.z = omega_rad_ns * (cos_phase * s.y - sin_phase * s.x) - gamma1 * (s.z - z_eq);
        return d;
    }
};

BlochState axpy(const BlochState& a, double h, const BlochState& b) {
    return {a.x + h * b.x, a.y + h * b.y, a.z + h * b.z};
}

double pulse_omega_rad_ns(const DrivePulse& pulse, double t_ns) {
    if (t_ns < 0 || t_ns >= pulse.width_ns || pulse.rabi_MHz <= 0) return 0.0;
    const double peak = kTwoPi * pulse.rabi_MHz * 1e-3;
    if (pulse.envelope == PulseEnvelope::Rectangular) return peak;
    const double sigma = pulse.width_ns / 6.0;
    const double u = (t_ns - 0.5 * pulse.width_ns) / sigma;
    return peak * std::exp(-0.5 * u * u);
}

BlochState rk4_step(const BlochDerivOps& ops, const DrivePulse& pulse, const BlochState& s,
                    double t, double h) {
    const BlochState k1 = ops.rhs(s, pulse_omega_rad_ns(pulse, t));
    const double om_mid = pulse_omega_rad_ns(pulse, t + 0.5 * h);
    const BlochState k2 = ops.rhs(axpy(s, 0.5 * h, k1), om_mid);
    const BlochState k3 = ops.rhs(axpy(s, 0.5 * h, k2), om_mid);
    const BlochState k4 = ops.rhs(axpy(s, h, k3), pulse_omega_rad_ns(pulse, t + h));
    BlochState out = s;
    out.x += h / 6.0 * (k1.x + 2 * k2.x + 2 * k3.x + k4.x);
    out.y += h / 6.0 * (k1.y + 2 * k2.y + 2 * k3.y + k4.y);
    out.z += h / 6.0 * (k1.z + 2 * k2.z + 2 * k3.z + k4.z);
    return out;
}

std::vector<BlochState> integrate_grid(const BlochDerivOps& ops, const DrivePulse& pulse,
                                       BlochState state, std::span<const double> grid,
                                       double step_bound) {
    std::vector<BlochState> out;
    out.reserve(grid.size());
    double t = 0.0;
    for (double target : grid) {
        const double dt = target - t;
        if (dt > 0) {
            const int n_sub = std::max(1, static_cast<int>(std::ceil(dt / step_bound)));
            const double h = dt / n_sub;
            for (int k = 0; k < n_sub; ++k) {
                state = rk4_step(ops, pulse, state, t, h);
                t += h;
            }
            t = target;  // avoid drift from repeated addition
        }
        out.push_back(state);
    }
    return out;
}

}  // namespace

BlochTrace evolve_bloch(const DissipationRates& rates, const DrivePulse& pulse,
                        double qubit_f01_GHz, std::span<const double> t_grid_ns,
                        BlochState initial, const BlochOptions& options) {
    if (t_grid_ns.empty()) throw std::invalid_argument("evolve_bloch: empty time grid");
    if (!std::is_sorted(t_grid_ns.begin(), t_grid_ns.end())) {
        throw std::invalid_argument("evolve_bloch: time grid must be ascending");
    }
    if (t_grid_ns.front() < 0) throw std::invalid_argument("evolve_bloch: negative time");
    if (const auto issues = rates.validate(); !issues.empty()) {
        throw std::invalid_argument("evolve_bloch: " + issues.front());
    }

    BlochDerivOps ops;
    const double delta_GHz = pulse.carrier_GHz - qubit_f01_GHz;
    ops.delta_rad_ns = kTwoPi * delta_GHz;
    ops.gamma1 = 1.0 / rates.t1_ns;
    ops.gamma2 = 1.0 / rates.t2_ns;
    ops.z_eq = 1.0 - 2.0 * rates.thermal_population;
    ops.cos_phase = std::cos(pulse.phase_rad);
    ops.sin_phase = std::sin(pulse.phase_rad);

    const double omega_eff_GHz =
        std::sqrt(pulse.rabi_MHz * pulse.rabi_MHz + delta_GHz * delta_GHz * 1e6) * 1e-3;
    double bound = std::min(rates.t1_ns, rates.t2_ns) / 50.0;
    if (omega_eff_GHz > 0) bound = std::min(bound, 1.0 / (50.0 * omega_eff_GHz));
    if (options.max_step_ns > 0) bound = std::min(bound, options.max_step_ns);

    auto states = integrate_grid(ops, pulse, initial, t_grid_ns, bound);
    if (options.richardson_check) {
        const auto states_half = integrate_grid(ops, pulse, initial, t_grid_ns, bound / 2.0);
        double max_diff = 0;
        for (std::size_t i = 0; i < states.size(); ++i) {
            max_diff = std::max({max_diff, std::abs(states[i].x - states_half[i].x),
                                 std::abs(states[i].y - states_half[i].y),
                                 std::abs(states[i].z - states_half[i].z)});
        }
        if (max_diff > 1e-7) {
            throw IntegrationError("evolve_bloch: step-size control failure (half-step deviation " +
                                   std::to_string(max_diff) + ")");
        }
        states = std::move(states_half);
    }

    BlochTrace trace;
    trace.t_ns.assign(t_grid_ns.begin(), t_grid_ns.end());
    trace.state = std::move(states);
    return trace;
}

std::vector<double> three_level_rabi_population(const DissipationRates& rates, double omega_MHz,
                                                double anharmonicity_MHz,
                                                std::span<const double> t_grid_ns) {
    using Matrix3cd = Eigen::Matrix3cd;
    if (t_grid_ns.empty()) throw std::invalid_argument("three_level_rabi_population: empty grid");
    const std::complex<double> imag_unit(0.0, 1.0);

    const double omega_rad = kTwoPi * omega_MHz * 1e-3;
    const double alpha_rad = kTwoPi * anharmonicity_MHz * 1e-3;
    const double gamma1 = 1.0 / rates.t1_ns;
    const double gamma_phi = std::max(0.0, 1.0 / rates.t2_ns - 0.5 / rates.t1_ns);

    Matrix3cd h = Matrix3cd::Zero();
    h(2, 2) = alpha_rad;  // second excited state detuned by the anharmonicity
    h(0, 1) = 0.5 * omega_rad;
    h(1, 0) = 0.5 * omega_rad;
    h(1, 2) = 0.5 * omega_rad * std::sqrt(2.0);  // ladder matrix element scaling
    h(2, 1) = h(1, 2);

    std::vector<Matrix3cd> collapse;
    {
        Matrix3cd c = Matrix3cd::Zero();
        c(0, 1) = std::sqrt(gamma1);
        collapse.push_back(c);
        c = Matrix3cd::Zero();
        c(1, 2) = std::sqrt(2.0 * gamma1);
        collapse.push_back(c);
        if (gamma_phi > 0) {
            c = Matrix3cd::Zero();
            c(1, 1) = std::sqrt(2.0 * gamma_phi);
            c(2, 2) = 2.0 * std::sqrt(2.0 * gamma_phi);
            collapse.push_back(c);
        }
    }
    std::vector<Matrix3cd> cdag_c;
    cdag_c.reserve(collapse.size());
    for (const auto& c : collapse) cdag_c.push_back(c.adjoint() * c);

    const auto rhs = [&](const Matrix3cd& rho) {
        Matrix3cd d = -imag_unit * (h * rho - rho * h);
        for (std::size_t k = 0; k < collapse.size(); ++k) {
            d += collapse[k] * rho * collapse[k].adjoint();
            d -= 0.5 * (cdag_c[k] * rho + rho * cdag_c[k]);
        }
        return d;
    };

    const double rate_scale =
        std::max({omega_rad, std::abs(alpha_rad), gamma1, gamma_phi, 1e-6});
    const double bound = 1.0 / (10.0 * rate_scale);

    Matrix3cd rho = Matrix3cd::Zero();
    rho(0, 0) = 1.0;
    std::vector<double> p1;
    p1.reserve(t_grid_ns.size());
    double t = 0.0;
    for (double target : t_grid_ns) {
        const double dt = target - t;
        if (dt > 0) {
            const int n_sub = std::max(1, static_cast<int>(std::ceil(dt / bound)));
            const double hstep = dt / n_sub;
            for (int k = 0; k < n_sub; ++k) {
                const Matrix3cd k1 = rhs(rho);
                const Matrix3cd k2 = rhs(rho + 0.5 * hstep * k1);
                const Matrix3cd k3 = rhs(rho + 0.5 * hstep * k2);
                const Matrix3cd k4 = rhs(rho + hstep * k3);
                rho += hstep / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
            }
            t = target;
        }
        p1.push_back(rho(1, 1).real());
    }
    return p1;
}

namespace {

// Evaluates P1 at the (sorted) grid, then maps back to the caller's order.
std::vector<double> populations_at(const std::vector<double>& times,
                                   const std::function<std::vector<double>(std::span<const double>)>& eval) {
    std::vector<std::size_t> order(times.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return times[a] < times[b]; });
    std::vector<double> sorted_times(times.size());
    for (std::size_t i = 0; i < times.size(); ++i) sorted_times[i] = times[order[i]];
    const std::vector<double> sorted_p1 = eval(sorted_times);
    std::vector<double> p1(times.size());
    for (std::size_t i = 0; i < times.size(); ++i) p1[order[i]] = sorted_p1[i];
    return p1;
}

}  // namespace

Trace simulate_rabi_experiment(const DissipationRates& rates, double drive_power_dBm,
                               double power_to_rabi_MHz_per_sqrt_mW,
                               std::span<const double> widths_ns, const HomodyneModel& homodyne,
                               const RabiExperimentOptions& options) {
    if (widths_ns.empty()) throw std::invalid_argument("simulate_rabi_experiment: empty widths");
    if (!(power_to_rabi_MHz_per_sqrt_mW > 0)) {
        throw std::invalid_argument("simulate_rabi_experiment: power_to_rabi must be positive");
    }
    const double omega_MHz =
        power_to_rabi_MHz_per_sqrt_mW * std::sqrt(mw_from_dbm(drive_power_dBm));

    const std::vector<double> widths(widths_ns.begin(), widths_ns.end());
    std::vector<double> p1;
    if (options.anharmonicity_MHz != 0.0) {
        p1 = populations_at(widths, [&](std::span<const double> grid) {
            return three_level_rabi_population(rates, omega_MHz, options.anharmonicity_MHz, grid);
        });
    } else {
        // The drive is on continuously up to each measured width, so one
        // driven trajectory sampled at every width covers the whole sweep.
        DrivePulse pulse;
        pulse.carrier_GHz = 0;  // resonant: carrier == f01 == 0 in the rotating frame
        pulse.rabi_MHz = omega_MHz;
        pulse.width_ns = widths.empty() ? 0 : *std::max_element(widths.begin(), widths.end()) + 1;
        p1 = populations_at(widths, [&](std::span<const double> grid) {
            const BlochTrace trace = evolve_bloch(rates, pulse, 0.0, grid);
            std::vector<double> out(trace.state.size());
            for (std::size_t i = 0; i < out.size(); ++i) out[i] = trace.state[i].population_1();
            return out;
        });
    }

    Trace trace;
    trace.x_name = "tau_ns";
    trace.y_name = "v_h_mV";
    trace.x = widths;
    trace.y.resize(widths.size());
    const double contrast = homodyne.v_excited_mV - homodyne.v_ground_mV;
    for (std::size_t i = 0; i < widths.size(); ++i) {
        double v = homodyne.v_ground_mV + contrast * p1[i] +
                   homodyne.linear_slope_mV_per_ns * widths[i];
        if (homodyne.noise_sigma_mV > 0) {
            auto rng = DeterministicRng::for_point(homodyne.rng_seed,
                                                   options.noise_stream_offset + i);
            v += homodyne.noise_sigma_mV * rng.normal();
        }
        trace.y[i] = v;
    }
    return trace;
}

Trace simulate_t1_experiment(const DissipationRates& rates, const DrivePulse& pi_pulse,
                             std::span<const double> delays_ns, const HomodyneModel& homodyne,
                             int n_averages) {
    if (delays_ns.empty()) throw std::invalid_argument("simulate_t1_experiment: empty delays");
    if (n_averages < 1) throw std::invalid_argument("simulate_t1_experiment: n_averages must be >= 1");

    // Preparation: evolve through the pulse with dissipation on, then decay
    // from the post-pulse population in closed form.
    const std::vector<double> pulse_grid = {pi_pulse.width_ns};
    const BlochTrace prep = evolve_bloch(rates, pi_pulse, pi_pulse.carrier_GHz, pulse_grid);
    const double p1_post = prep.state.back().population_1();
    const double p_eq = rates.thermal_population;

    Trace trace;
    trace.x_name = "t_ns";
    trace.y_name = "v_h_mV";
    trace.x.assign(delays_ns.begin(), delays_ns.end());
    trace.y.resize(trace.x.size());
    const double contrast = homodyne.v_excited_mV - homodyne.v_ground_mV;
    const double sigma_eff = homodyne.noise_sigma_mV / std::sqrt(static_cast<double>(n_averages));
    for (std::size_t i = 0; i < trace.x.size(); ++i) {
        const double t = trace.x[i];
        if (t < 0) throw std::invalid_argument("simulate_t1_experiment: negative delay");
        const double p1 = p_eq + (p1_post - p_eq) * std::exp(-t / rates.t1_ns);
        double v = homodyne.v_ground_mV + contrast * p1;
        if (sigma_eff > 0) {
            auto rng = DeterministicRng::for_point(homodyne.rng_seed, i);
            v += sigma_eff * rng.normal();
        }
        trace.y[i] = v;
    }
    return trace;
}

double saturated_dispersive_shift_MHz(double chi_MHz, double steady_p1) {
    if (steady_p1 < 0 || steady_p1 > 1) {
        throw std::domain_error("saturated_dispersive_shift: population must be in [0, 1]");
    }
    return 2.0 * chi_MHz * steady_p1;
}

}  // namespace gatemonlab
