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

#include "gatemonlab/spectrum.hpp"

#include <algorithm>
#include <cmath>

#include "gatemonlab/util.hpp"

namespace gatemonlab {

namespace {

void check_transmon_spec(const TransmonSpec& spec) {
    if (spec.charge_cutoff < 5) {
        throw std::invalid_argument("TransmonSpec: charge_cutoff must be >= 5");
    }
    if (!(spec.energies.ec_GHz > 0)) {
        throw std::invalid_argument("TransmonSpec: E_C must be positive");
    }
    if (spec.energies.ej_GHz < 0) {
        throw std::invalid_argument("TransmonSpec: E_J must be non-negative");
    }
}

Eigen::VectorXd lowest_transmon_levels(const TransmonSpec& spec, int count) {
    const Eigen::MatrixXd h = transmon_charge_hamiltonian(spec);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(h, Eigen::EigenvaluesOnly);
    return solver.eigenvalues().head(count);
}

}  // namespace

Eigen::MatrixXd transmon_charge_hamiltonian(const TransmonSpec& spec) {
    check_transmon_spec(spec);
    const int n_max = spec.charge_cutoff;
    const int dim = 2 * n_max + 1;
    const double ec = spec.energies.ec_GHz;
    const double ej = spec.energies.ej_GHz;
    const double ng = spec.energies.ng;
    Eigen::MatrixXd h = Eigen::MatrixXd::Zero(dim, dim);
    for (int i = 0; i < dim; ++i) {
        const double n = static_cast<double>(i - n_max);
        h(i, i) = 4.0 * ec * (n - ng) * (n - ng);
        if (i + 1 < dim) {
            h(i, i + 1) = -0.5 * ej;
            h(i + 1, i) = -0.5 * ej;
        }
    }
    return h;
}

SpectrumResult diagonalize_transmon(const TransmonSpec& spec) {
    check_transmon_spec(spec);
    const int levels = 5;
    const Eigen::VectorXd e = lowest_transmon_levels(spec, levels);

    TransmonSpec larger = spec;
    larger.charge_cutoff = spec.charge_cutoff + 5;
    const Eigen::VectorXd e_check = lowest_transmon_levels(larger, 3);
    double max_shift = 0;
    for (int i = 0; i < 3; ++i) max_shift = std::max(max_shift, std::abs(e[i] - e_check[i]));
    if (max_shift >= 1e-9) {
        // Charge support grows roughly with (E_J/E_C)^(1/4); doubling is a
        // safe suggestion for any ratio this toolkit targets.
        throw ConvergenceError("diagonalize_transmon: levels not converged at charge_cutoff=" +
                                   std::to_string(spec.charge_cutoff) + " (shift " +
                                   std::to_string(max_shift) + " GHz); retry with cutoff " +
                                   std::to_string(2 * spec.charge_cutoff),
                               2 * spec.charge_cutoff);
    }

    SpectrumResult result;
    result.eigenfrequencies_GHz.resize(levels);
    result.labels.resize(levels);
    for (int i = 0; i < levels; ++i) {
        result.eigenfrequencies_GHz[i] = e[i] - e[0];
        result.labels[i] = DressedLabel{i, 0};
    }
    result.f01_GHz = e[1] - e[0];
    result.anharmonicity_MHz = ((e[2] - e[1]) - (e[1] - e[0])) * 1e3;
    return result;
}

TransmonBasis compute_transmon_basis(const TransmonSpec& spec, int levels) {
    check_transmon_spec(spec);
    const int n_max = spec.charge_cutoff;
    const int dim = 2 * n_max + 1;
    if (levels < 2 || levels > dim) {
        throw std::invalid_argument("compute_transmon_basis: invalid level count");
    }
    const Eigen::MatrixXd h = transmon_charge_hamiltonian(spec);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(h);
    const Eigen::VectorXd& evals = solver.eigenvalues();
    const Eigen::MatrixXd& evecs = solver.eigenvectors();

    TransmonBasis basis;
    basis.level_energies_GHz.resize(levels);
    for (int j = 0; j < levels; ++j) basis.level_energies_GHz[j] = evals[j] - evals[0];

    Eigen::VectorXd n_op(dim);
    for (int i = 0; i < dim; ++i) n_op[i] = static_cast<double>(i - n_max);
    basis.charge_matrix_elements.resize(levels, levels);
    for (int j = 0; j < levels; ++j) {
        for (int k = 0; k < levels; ++k) {
            basis.charge_matrix_elements(j, k) =
                evecs.col(j).cwiseProduct(n_op).dot(evecs.col(k));
        }
    }
    return basis;
}

namespace {

void check_coupled_spec(const CoupledSpec& spec) {
    check_transmon_spec(spec.transmon);
    if (!(spec.f_r_GHz > 0)) throw std::invalid_argument("CoupledSpec: f_r must be positive");
    if (spec.g_over_2pi_MHz < 0) throw std::invalid_argument("CoupledSpec: g must be >= 0");
    if (spec.photon_cutoff < 3) throw std::invalid_argument("CoupledSpec: photon_cutoff must be >= 3");
    if (spec.transmon_levels_kept < 2) {
        throw std::invalid_argument("CoupledSpec: transmon_levels_kept must be >= 2");
    }
}

}  // namespace

Eigen::MatrixXd coupled_hamiltonian(const CoupledSpec& spec) {
    check_coupled_spec(spec);
    const int m = spec.transmon_levels_kept;
    const int np = spec.photon_cutoff + 1;
    const TransmonBasis basis = compute_transmon_basis(spec.transmon, m);
    const double g_GHz = spec.g_over_2pi_MHz * 1e-3;
    const double n01 = std::abs(basis.charge_matrix_elements(0, 1));

    // Ladder couplings between adjacent transmon levels, scaled so the 0-1
    // element reproduces the configured g. Non-adjacent charge matrix
    // elements vanish by parity at n_g=0 and stay negligible elsewhere;
    // dropping them keeps the total excitation number exactly conserved,
    // which is what makes the dressed-branch labeling unambiguous.
    std::vector<double> g_ladder(m - 1, 0.0);
    for (int j = 0; j + 1 < m; ++j) {
        g_ladder[j] = (n01 > 0)
                          ? g_GHz * std::abs(basis.charge_matrix_elements(j, j + 1)) / n01
                          : 0.0;
    }

    const int dim = m * np;
    const auto idx = [np](int j, int n) { return j * np + n; };
    Eigen::MatrixXd h = Eigen::MatrixXd::Zero(dim, dim);
    for (int j = 0; j < m; ++j) {
        for (int n = 0; n < np; ++n) {
            h(idx(j, n), idx(j, n)) = basis.level_energies_GHz[j] + spec.f_r_GHz * n;
        }
    }
    for (int j = 0; j + 1 < m; ++j) {
        for (int n = 0; n + 1 < np; ++n) {
            // |j, n+1> <-> |j+1, n>
            const double v = g_ladder[j] * std::sqrt(static_cast<double>(n + 1));
            h(idx(j, n + 1), idx(j + 1, n)) = v;
            h(idx(j + 1, n), idx(j, n + 1)) = v;
        }
    }
    return h;
}

SpectrumResult coupled_spectrum(const CoupledSpec& spec) {
    const int m = spec.transmon_levels_kept;
    const int np = spec.photon_cutoff + 1;
    const int dim = m * np;
    const Eigen::MatrixXd h = coupled_hamiltonian(spec);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(h);
    const Eigen::VectorXd& evals = solver.eigenvalues();
    const Eigen::MatrixXd& evecs = solver.eigenvectors();

    // Adiabatic continuation from the g=0 product basis: within each total
    // excitation block, assign bare labels greedily by descending overlap.
    std::vector<int> label_of(dim, -1);
    std::vector<bool> bare_taken(dim, false);
    std::vector<std::tuple<double, int, int>> overlaps;  // (|amp|, eig index, bare index)
    overlaps.reserve(static_cast<std::size_t>(dim) * dim);
    for (int v = 0; v < dim; ++v) {
        for (int b = 0; b < dim; ++b) {
            overlaps.emplace_back(std::abs(evecs(b, v)), v, b);
        }
    }
    std::sort(overlaps.begin(), overlaps.end(),
              [](const auto& a, const auto& b) { return std::get<0>(a) > std::get<0>(b); });
    int assigned = 0;
    for (const auto& [amp, v, b] : overlaps) {
        if (label_of[v] >= 0 || bare_taken[b]) continue;
        label_of[v] = b;
        bare_taken[b] = true;
        if (++assigned == dim) break;
    }

    SpectrumResult result;
    result.eigenfrequencies_GHz.resize(dim);
    result.labels.resize(dim);
    for (int v = 0; v < dim; ++v) {
        result.eigenfrequencies_GHz[v] = evals[v] - evals[0];
        result.labels[v] = DressedLabel{label_of[v] / np, label_of[v] % np};
    }
    // Dressed qubit transition |0,0> -> |1,0> and anharmonicity from |2,0>.
    double e00 = 0, e10 = 0, e20 = 0;
    bool have10 = false, have20 = false;
    for (int v = 0; v < dim; ++v) {
        const auto& lab = result.labels[v];
        if (lab.transmon_level == 0 && lab.photons == 0) e00 = result.eigenfrequencies_GHz[v];
        if (lab.transmon_level == 1 && lab.photons == 0) {
            e10 = result.eigenfrequencies_GHz[v];
            have10 = true;
        }
        if (lab.transmon_level == 2 && lab.photons == 0) {
            e20 = result.eigenfrequencies_GHz[v];
            have20 = true;
        }
    }
    result.f01_GHz = have10 ? e10 - e00 : 0.0;
    result.anharmonicity_MHz = (have10 && have20) ? ((e20 - e10) - (e10 - e00)) * 1e3 : 0.0;
    return result;
}

double ej_for_f01(double f01_GHz, const TransmonSpec& prototype) {
    if (!(f01_GHz > 0)) throw std::domain_error("ej_for_f01: target frequency must be positive");
    const double ec = prototype.energies.ec_GHz;
    TransmonSpec spec = prototype;
    // Asymptotically f01 ~ sqrt(8 EC EJ), so EJ scales as f01^2; the fixed
    // point iteration below converges in a handful of steps.
    double ej = (f01_GHz + ec) * (f01_GHz + ec) / (8.0 * ec);
    for (int it = 0; it < 60; ++it) {
        spec.energies.ej_GHz = ej;
        const double f = diagonalize_transmon(spec).f01_GHz;
        if (std::abs(f - f01_GHz) < 1e-12) break;
        const double scale = (f01_GHz + ec) / (f + ec);
        ej *= scale * scale;
    }
    return ej;
}

Sweep2D avoided_crossing_sweep(const CoupledSpec& spec, std::span<const double> f_q_values_GHz) {
    check_coupled_spec(spec);
    if (f_q_values_GHz.empty()) {
        throw std::invalid_argument("avoided_crossing_sweep: empty sweep axis");
    }
    Sweep2D sweep;
    sweep.x_name = "f_q_bare_GHz";
    sweep.col_names = {"branch_minus_GHz", "branch_plus_GHz"};
    sweep.x.assign(f_q_values_GHz.begin(), f_q_values_GHz.end());
    sweep.cols.assign(2, std::vector<double>(f_q_values_GHz.size(), 0.0));

    const auto point = [&](std::size_t i) -> std::pair<double, double> {
        CoupledSpec local = spec;
        local.transmon.energies.ej_GHz = ej_for_f01(f_q_values_GHz[i], spec.transmon);
        const SpectrumResult res = coupled_spectrum(local);
        double lo = 0, hi = 0;
        bool have_lo = false;
        for (std::size_t v = 0; v < res.labels.size(); ++v) {
            const auto& lab = res.labels[v];
            const bool single = (lab.transmon_level == 1 && lab.photons == 0) ||
                                (lab.transmon_level == 0 && lab.photons == 1);
            if (!single) continue;
            if (!have_lo) {
                lo = res.eigenfrequencies_GHz[v];
                have_lo = true;
            } else {
                hi = res.eigenfrequencies_GHz[v];
            }
        }
        if (lo > hi) std::swap(lo, hi);
        return {lo, hi};
    };
    const auto branches = parallel_map<std::pair<double, double>>(
        f_q_values_GHz.size(), [&](std::size_t i) { return point(i); });
    for (std::size_t i = 0; i < branches.size(); ++i) {
        sweep.cols[0][i] = branches[i].first;
        sweep.cols[1][i] = branches[i].second;
    }
    return sweep;
}

DispersiveShift dispersive_shift(const CoupledSpec& spec) {
    check_coupled_spec(spec);
    const SpectrumResult bare = diagonalize_transmon(spec.transmon);
    const double delta_GHz = bare.f01_GHz - spec.f_r_GHz;
    const double g_GHz = spec.g_over_2pi_MHz * 1e-3;
    // Inside the avoided crossing the dressed states hybridize 50/50 and a
    // qubit-state-resolved shift is not defined.
    if (std::abs(delta_GHz) <= 2.0 * g_GHz) {
        throw std::domain_error("dispersive_shift: qubit and resonator are (near) resonant");
    }

    DispersiveShift out;
    out.dispersive_warning = std::abs(g_GHz / delta_GHz) >= 0.25;
    out.chi_perturbative_MHz = g_GHz * g_GHz / delta_GHz * 1e3;

    const SpectrumResult res = coupled_spectrum(spec);
    double e00 = 0, e01 = 0, e10 = 0, e11 = 0;
    int found = 0;
    for (std::size_t v = 0; v < res.labels.size(); ++v) {
        const auto& lab = res.labels[v];
        const double e = res.eigenfrequencies_GHz[v];
        if (lab.transmon_level == 0 && lab.photons == 0) { e00 = e; ++found; }
        if (lab.transmon_level == 0 && lab.photons == 1) { e01 = e; ++found; }
        if (lab.transmon_level == 1 && lab.photons == 0) { e10 = e; ++found; }
        if (lab.transmon_level == 1 && lab.photons == 1) { e11 = e; ++found; }
    }
    if (found != 4) {
        throw std::runtime_error("dispersive_shift: could not label the four lowest dressed states");
    }
    out.chi_exact_MHz = 0.5 * (e11 - e10 - e01 + e00) * 1e3;
    return out;
}

}  // namespace gatemonlab
