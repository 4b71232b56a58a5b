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

#ifndef GATEMONLAB_PARAMS_HPP
#define GATEMONLAB_PARAMS_HPP

#include <span>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

namespace gatemonlab {

// Electrical description of one qubit cell. Geometry-derived values
// (capacitances, coupling strengths) are inputs here, not computed.
struct DeviceParams {
    double shunt_capacitance_fF = 0;
    double coupling_capacitance_fF = 0;
    double drive_capacitance_fF = 0;
    double critical_current_nA = 0;
    double bare_resonator_freq_GHz = 0;    // design value, no kinetic inductance
    double loaded_resonator_freq_GHz = 0;  // measured, shifted down
    double qubit_resonator_coupling_MHz = 0;  // g/2pi
    double drive_coupling_kHz = 0;            // kappa/2pi

    // Returns human-readable violations (empty when valid). Keys in the
    // messages match the serialized field names.
    std::vector<std::string> validate() const;

    nlohmann::json to_json() const;
    static DeviceParams from_json(const nlohmann::json& j);
};

// Hamiltonian-level energy scales, stored as E/h in GHz.
struct EnergyScales {
    double ej_GHz = 0;
    double ec_GHz = 0;
    double ng = 0;  // offset charge, negligible deep in the transmon regime

    // E_J/E_C >= 20. Below this the asymptotic level formulas degrade; gate
    // sweeps legitimately pass through such regions, so callers get a
    // warning flag rather than an error.
    bool in_transmon_regime() const;

    std::vector<std::string> validate() const;

    nlohmann::json to_json() const;
    static EnergyScales from_json(const nlohmann::json& j);
};

inline constexpr double kTransmonRegimeRatio = 20.0;

// E_C/h = e^2 / (2 C_S h), in MHz.
double charging_energy_MHz(double shunt_capacitance_fF);

// E_J/h = hbar I_C / (2 e h) = I_C / (4 pi e), in GHz.
double josephson_energy_GHz(double critical_current_nA);

// Inverse of josephson_energy_GHz.
double critical_current_nA(double ej_GHz);

struct AsymptoticFrequency {
    double f01_GHz = 0;
    bool regime_warning = false;  // set when E_J/E_C < kTransmonRegimeRatio
};

// f_Q = sqrt(8 E_J E_C) - E_C, the leading transmon level splitting.
AsymptoticFrequency qubit_frequency_asymptotic(const EnergyScales& e);

double ej_ec_ratio(const EnergyScales& e);

// 1 - (f_r/f_r0)^2 = L_kinetic / (L_kinetic + L_geometric) for f ~ 1/sqrt(L).
double kinetic_inductance_fraction(double f_r_GHz, double f_r0_GHz);

// Q = 2 pi f_Q T_1 (dimensionally consistent loss-channel quality factor).
double qubit_quality_factor(double t1_ns, double f_q_GHz);

// Energy-decay limit from the drive port treated as a loss channel:
// T_1 = 1 / (2 pi kappa), in ns.
double t1_limit_from_drive_coupling_ns(double kappa_over_2pi_kHz);

// Parallel loss channels: 1/Q_total = sum 1/Q_i.
double combine_quality_factors(std::span<const double> q_values);

}  // namespace gatemonlab

#endif  // GATEMONLAB_PARAMS_HPP
