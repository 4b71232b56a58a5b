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

#ifndef GATEMONLAB_SPECTRUM_HPP
#define GATEMONLAB_SPECTRUM_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "gatemonlab/params.hpp"
#include "gatemonlab/trace.hpp"

namespace gatemonlab {

struct TransmonSpec {
    EnergyScales energies;
    // Charge states n in [-N, N]. The default converges past machine noise
    // for E_J/E_C <= 200.
    int charge_cutoff = 20;
};

struct CoupledSpec {
    TransmonSpec transmon;
    double f_r_GHz = 0;
    double g_over_2pi_MHz = 0;  // 0-1 transition coupling
    int photon_cutoff = 5;      // Fock states 0..photon_cutoff
    int transmon_levels_kept = 4;
};

struct ConvergenceError : std::runtime_error {
    ConvergenceError(const std::string& what, int suggested_cutoff_)
        : std::runtime_error(what), suggested_cutoff(suggested_cutoff_) {}
    int suggested_cutoff;
};

// (transmon level, photon number) of the bare product state a dressed
// eigenstate connects to at g=0.
struct DressedLabel {
    int transmon_level = 0;
    int photons = 0;
};

struct SpectrumResult {
    std::vector<double> eigenfrequencies_GHz;  // relative to ground, ascending
    std::vector<DressedLabel> labels;          // aligned with eigenfrequencies
    double f01_GHz = 0;
    double anharmonicity_MHz = 0;
};

// Charge-basis transmon Hamiltonian
//   H = sum_n 4 E_C (n - n_g)^2 |n><n| - (E_J/2) sum_n (|n><n+1| + h.c.)
// as a real symmetric matrix over n in [-N, N].
Eigen::MatrixXd transmon_charge_hamiltonian(const TransmonSpec& spec);

// Lowest eigenfrequencies of the bare transmon, relative to the ground
// state. Throws ConvergenceError (with a suggested cutoff) if the requested
// charge cutoff has not converged the first three levels to < 1e-9 GHz.
SpectrumResult diagonalize_transmon(const TransmonSpec& spec);

// Transmon eigenbasis truncated to `levels`: level energies (relative to
// ground) and the charge operator matrix elements <j|n|k>.
struct TransmonBasis {
    Eigen::VectorXd level_energies_GHz;
    Eigen::MatrixXd charge_matrix_elements;
};
TransmonBasis compute_transmon_basis(const TransmonSpec& spec, int levels);

// Multilevel Jaynes-Cummings Hamiltonian in the product basis
// |transmon level j> (x) |photon n>, with excitation-conserving ladder
// coupling g_{j,j+1} = g * n_{j,j+1}/n_{01}.
Eigen::MatrixXd coupled_hamiltonian(const CoupledSpec& spec);

SpectrumResult coupled_spectrum(const CoupledSpec& spec);

// E_J giving an exact charge-basis f_01 equal to the target (fixed E_C, n_g).
double ej_for_f01(double f01_GHz, const TransmonSpec& prototype);

// For each bare qubit frequency, the two single-excitation dressed branch
// frequencies. Columns: f_q_bare_GHz, branch_minus_GHz, branch_plus_GHz.
Sweep2D avoided_crossing_sweep(const CoupledSpec& spec, std::span<const double> f_q_values_GHz);

struct DispersiveShift {
    double chi_exact_MHz = 0;         // from dressed-level differences
    double chi_perturbative_MHz = 0;  // two-level g^2/Delta
    bool dispersive_warning = false;  // g/|Delta| >= 0.25
};

// Dispersive shift chi computed two ways: exact
// (E|1,1> - E|1,0> - E|0,1> + E|0,0>)/2 from the coupled spectrum, and the
// perturbative two-level g^2/Delta. Throws std::domain_error at resonance.
DispersiveShift dispersive_shift(const CoupledSpec& spec);

}  // namespace gatemonlab

#endif  // GATEMONLAB_SPECTRUM_HPP
