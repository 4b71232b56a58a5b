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

#ifndef GATEMONLAB_DYNAMICS_HPP
#define GATEMONLAB_DYNAMICS_HPP

#include <array>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "gatemonlab/trace.hpp"

namespace gatemonlab {

struct DissipationRates {
    double t1_ns = 0;
    double t2_ns = 0;
    double thermal_population = 0;  // steady-state excited fraction, in [0, 0.5)

    std::vector<std::string> validate() const;
    nlohmann::json to_json() const;
    static DissipationRates from_json(const nlohmann::json& j);
};

enum class PulseEnvelope { Rectangular, Gaussian };

struct DrivePulse {
    double carrier_GHz = 0;
    double rabi_MHz = 0;  // Omega/2pi peak amplitude
    double width_ns = 0;
    PulseEnvelope envelope = PulseEnvelope::Rectangular;
    double phase_rad = 0;

    // Rectangular pulse rotating the Bloch vector by `angle` radians at
    // resonance, e.g. pi for a population-inverting pulse.
    static DrivePulse rectangular_rotation(double angle_rad, double width_ns, double carrier_GHz);
};

struct HomodyneModel {
    double v_ground_mV = 0;
    double v_excited_mV = 1;
    double linear_slope_mV_per_ns = 0;
    double noise_sigma_mV = 0;
    std::uint64_t rng_seed = 0;

    std::vector<std::string> validate() const;
    nlohmann::json to_json() const;
    static HomodyneModel from_json(const nlohmann::json& j);
};

// Closed-form lossless Rabi excited-state probability,
//   P1(t) = Omega^2/(Omega^2+delta^2) * sin^2(pi sqrt(Omega^2+delta^2) t),
// with Omega, delta as cycle frequencies in MHz and t in ns.
double rabi_population(double omega_MHz, double delta_MHz, double t_ns);

struct BlochState {
    double x = 0;
    double y = 0;
    double z = 1;  // ground state; P1 = (1-z)/2

    double population_1() const { return 0.5 * (1.0 - z); }
    static BlochState ground() { return {0, 0, 1}; }
    static BlochState excited() { return {0, 0, -1}; }
};

struct BlochTrace {
    std::vector<double> t_ns;
    std::vector<BlochState> state;
};

struct IntegrationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct BlochOptions {
    // 0 selects the automatic bound min(1/(50 Omega_eff), T1/50, T2/50).
    double max_step_ns = 0;
    // Re-integrates at half step and rejects if the states disagree.
    bool richardson_check = true;
};

// Rotating-frame Bloch trajectory under the given pulse. The drive is on for
// t in [0, pulse.width_ns); the grid may extend past the pulse. Fixed-step
// RK4 between grid points.
BlochTrace evolve_bloch(const DissipationRates& rates, const DrivePulse& pulse,
                        double qubit_f01_GHz, std::span<const double> t_grid_ns,
                        BlochState initial = BlochState::ground(),
                        const BlochOptions& options = {});

struct RabiExperimentOptions {
    // Non-zero enables the three-level path; leakage into the second excited
    // state bends the extracted frequency away from sqrt(P) at high power.
    double anharmonicity_MHz = 0;
    std::uint64_t noise_stream_offset = 0;  // distinguishes powers in a 2D sweep
};

// Drive-and-measure Rabi record: Omega/2pi = power_to_rabi * sqrt(P_mW),
//   V_H(tau) = v_g + (v_e - v_g) P1(tau) + slope * tau + noise.
Trace simulate_rabi_experiment(const DissipationRates& rates, double drive_power_dBm,
                               double power_to_rabi_MHz_per_sqrt_mW,
                               std::span<const double> widths_ns, const HomodyneModel& homodyne,
                               const RabiExperimentOptions& options = {});

// Inversion-recovery record: pi pulse, wait t, measure. Per-point noise is
// scaled by 1/sqrt(n_averages).
Trace simulate_t1_experiment(const DissipationRates& rates, const DrivePulse& pi_pulse,
                             std::span<const double> delays_ns, const HomodyneModel& homodyne,
                             int n_averages);

// Ensemble-averaged resonator pull under incoherent qubit drive: 2 chi P1.
double saturated_dispersive_shift_MHz(double chi_MHz, double steady_p1);

// Excited-state population of a driven three-level transmon (resonant drive
// on 0-1, level 2 detuned by the anharmonicity), via a Lindblad density
// matrix. Used by the Rabi synthesis when anharmonicity is configured.
std::vector<double> three_level_rabi_population(const DissipationRates& rates, double omega_MHz,
                                                double anharmonicity_MHz,
                                                std::span<const double> t_grid_ns);

}  // namespace gatemonlab

#endif  // GATEMONLAB_DYNAMICS_HPP
