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

#include "gatemonlab/params.hpp"

#include <cmath>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "gatemonlab/constants.hpp"

namespace gatemonlab {

double charging_energy_MHz(double shunt_capacitance_fF) {
    if (!(shunt_capacitance_fF > 0)) {
        throw std::domain_error("charging_energy: shunt capacitance must be positive");
    }
    const double cs_F = shunt_capacitance_fF * 1e-15;
    const double ec_Hz = kElementaryChargeC * kElementaryChargeC / (2.0 * cs_F * kPlanckJs);
    return ec_Hz * 1e-6;
}

double josephson_energy_GHz(double critical_current_nA) {
    if (critical_current_nA < 0) {
        throw std::domain_error("josephson_energy: critical current must be non-negative");
    }
    const double ic_A = critical_current_nA * 1e-9;
    const double ej_Hz = ic_A / (2.0 * kTwoPi * kElementaryChargeC);
    return ej_Hz * 1e-9;
}

double critical_current_nA(double ej_GHz) {
    if (ej_GHz < 0) throw std::domain_error("critical_current: E_J must be non-negative");
    return ej_GHz * 1e9 * 2.0 * kTwoPi * kElementaryChargeC * 1e9;
}

AsymptoticFrequency qubit_frequency_asymptotic(const EnergyScales& e) {
    if (!(e.ec_GHz > 0)) throw std::domain_error("qubit_frequency_asymptotic: E_C must be positive");
    if (e.ej_GHz < 0) throw std::domain_error("qubit_frequency_asymptotic: E_J must be non-negative");
    AsymptoticFrequency out;
    out.f01_GHz = std::sqrt(8.0 * e.ej_GHz * e.ec_GHz) - e.ec_GHz;
    out.regime_warning = !e.in_transmon_regime();
    return out;
}

double ej_ec_ratio(const EnergyScales& e) {
    if (!(e.ec_GHz > 0)) throw std::domain_error("ej_ec_ratio: E_C must be positive");
    return e.ej_GHz / e.ec_GHz;
}

double kinetic_inductance_fraction(double f_r_GHz, double f_r0_GHz) {
    if (!(f_r_GHz > 0) || !(f_r0_GHz > 0)) {
        throw std::domain_error("kinetic_inductance_fraction: frequencies must be positive");
    }
    if (f_r_GHz > f_r0_GHz) {
        throw std::domain_error(
            "kinetic_inductance_fraction: loaded frequency exceeds bare frequency");
    }
    const double ratio = f_r_GHz / f_r0_GHz;
    return 1.0 - ratio * ratio;
}

double qubit_quality_factor(double t1_ns, double f_q_GHz) {
    if (!(t1_ns > 0) || !(f_q_GHz > 0)) {
        throw std::domain_error("qubit_quality_factor: T1 and f_Q must be positive");
    }
    return kTwoPi * f_q_GHz * t1_ns;
}

double t1_limit_from_drive_coupling_ns(double kappa_over_2pi_kHz) {
    if (!(kappa_over_2pi_kHz > 0)) {
        throw std::domain_error("t1_limit_from_drive_coupling: kappa must be positive");
    }
    const double kappa_GHz = kappa_over_2pi_kHz * 1e-6;
    return 1.0 / (kTwoPi * kappa_GHz);
}

double combine_quality_factors(std::span<const double> q_values) {
    if (q_values.empty()) {
        throw std::domain_error("combine_quality_factors: need at least one channel");
    }
    double inv = 0;
    for (double q : q_values) {
        if (!(q > 0)) throw std::domain_error("combine_quality_factors: all Q must be positive");
        inv += 1.0 / q;
    }
    return 1.0 / inv;
}

bool EnergyScales::in_transmon_regime() const {
    return ec_GHz > 0 && ej_GHz / ec_GHz >= kTransmonRegimeRatio;
}

std::vector<std::string> EnergyScales::validate() const {
    std::vector<std::string> issues;
    if (!(ec_GHz > 0)) issues.push_back("EC_GHz must be positive");
    if (ej_GHz < 0) issues.push_back("EJ_GHz must be non-negative");
    return issues;
}

nlohmann::json EnergyScales::to_json() const {
    return {{"EJ_GHz", ej_GHz}, {"EC_GHz", ec_GHz}, {"ng", ng}};
}

EnergyScales EnergyScales::from_json(const nlohmann::json& j) {
    EnergyScales e;
    e.ej_GHz = j.at("EJ_GHz").get<double>();
    e.ec_GHz = j.at("EC_GHz").get<double>();
    e.ng = j.value("ng", 0.0);
    return e;
}

std::vector<std::string> DeviceParams::validate() const {
    std::vector<std::string> issues;
    const auto positive = [&issues](double v, const char* key) {
        if (!(v > 0)) issues.push_back(std::string(key) + " must be positive");
    };
    positive(shunt_capacitance_fF, "shunt_capacitance_fF");
    positive(coupling_capacitance_fF, "coupling_capacitance_fF");
    positive(drive_capacitance_fF, "drive_capacitance_fF");
    positive(critical_current_nA, "critical_current_nA");
    positive(bare_resonator_freq_GHz, "bare_resonator_freq_GHz");
    positive(loaded_resonator_freq_GHz, "loaded_resonator_freq_GHz");
    positive(qubit_resonator_coupling_MHz, "qubit_resonator_coupling_MHz");
    positive(drive_coupling_kHz, "drive_coupling_kHz");
    if (loaded_resonator_freq_GHz > bare_resonator_freq_GHz) {
        issues.push_back(
            "loaded_resonator_freq_GHz must not exceed bare_resonator_freq_GHz "
            "(kinetic inductance only lowers the resonance)");
    }
    return issues;
}

nlohmann::json DeviceParams::to_json() const {
    return {{"shunt_capacitance_fF", shunt_capacitance_fF},
            {"coupling_capacitance_fF", coupling_capacitance_fF},
            {"drive_capacitance_fF", drive_capacitance_fF},
            {"critical_current_nA", critical_current_nA},
            {"bare_resonator_freq_GHz", bare_resonator_freq_GHz},
            {"loaded_resonator_freq_GHz", loaded_resonator_freq_GHz},
            {"qubit_resonator_coupling_MHz", qubit_resonator_coupling_MHz},
            {"drive_coupling_kHz", drive_coupling_kHz}};
}

DeviceParams DeviceParams::from_json(const nlohmann::json& j) {
    DeviceParams d;
    d.shunt_capacitance_fF = j.at("shunt_capacitance_fF").get<double>();
    d.coupling_capacitance_fF = j.at("coupling_capacitance_fF").get<double>();
    d.drive_capacitance_fF = j.at("drive_capacitance_fF").get<double>();
    d.critical_current_nA = j.at("critical_current_nA").get<double>();
    d.bare_resonator_freq_GHz = j.at("bare_resonator_freq_GHz").get<double>();
    d.loaded_resonator_freq_GHz = j.at("loaded_resonator_freq_GHz").get<double>();
    d.qubit_resonator_coupling_MHz = j.at("qubit_resonator_coupling_MHz").get<double>();
    d.drive_coupling_kHz = j.at("drive_coupling_kHz").get<double>();
    return d;
}

}  // namespace gatemonlab
