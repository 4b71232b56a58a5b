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

#ifndef GATEMONLAB_GATEMAP_HPP
#define GATEMONLAB_GATEMAP_HPP

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "gatemonlab/trace.hpp"

namespace gatemonlab {

struct CalibrationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Deterministic gate-voltage to Josephson-energy transfer function: a
// logistic depletion baseline times a seeded mesoscopic fluctuation field,
//   E_J(V) = saturation * sigmoid((V - pinchoff)/width) * (1 + field(V)).
// The field is a fixed sum of cosines with random phases and Gaussian-
// distributed spatial frequencies, giving a smooth zero-mean process with
// the configured relative standard deviation and correlation length.
// Read-only after construction; safe for concurrent pointwise evaluation.
class GateMap {
  public:
    struct Params {
        double pinchoff_voltage_V = 0;
        double saturation_ej_GHz = 0;
        double transition_width_V = 0;
        double fluctuation_amplitude = 0;  // relative sigma
        double correlation_length_V = 0;
        std::uint64_t rng_seed = 0;
    };

    explicit GateMap(const Params& params);

    const Params& params() const { return params_; }

    // Zero-mean fluctuation overlay, std == fluctuation_amplitude.
    double fluctuation_field(double v_gate_V) const;

    double ej_of_voltage(double v_gate_V) const;

    // Baseline with the fluctuation overlay suppressed.
    double baseline_ej(double v_gate_V) const;

    nlohmann::json to_json() const;
    static GateMap from_json(const nlohmann::json& j);

  private:
    Params params_;
    std::vector<double> mode_freq_per_V_;
    std::vector<double> mode_phase_;
};

// f_Q(V) via the asymptotic transmon frequency, columns v_gate_V, f_q_GHz.
Sweep2D fq_sweep(const GateMap& map, double ec_GHz, std::span<const double> v_values);

// Least-squares calibration of the amplitude-0 baseline through the target
// (V, f_Q) points. Fluctuation parameters and seed are taken from `base`
// untouched; with exactly two targets the transition width is also kept
// from `base` and only pinchoff/saturation are solved for.
GateMap calibrate_map(std::span<const std::pair<double, double>> targets_V_fq, double ec_GHz,
                      const GateMap& base);

}  // namespace gatemonlab

#endif  // GATEMONLAB_GATEMAP_HPP
