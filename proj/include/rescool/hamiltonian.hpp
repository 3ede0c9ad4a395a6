#pragma once

#include <cstddef>
#include <cstdint>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "rescool/linalg.hpp"

namespace rescool {

/// A Hermitian system Hamiltonian on n qubits (dimension 2^n).
struct SystemModel {
    std::size_t n_qubits = 0;
    ComplexMatrix h_s;
    std::string label;

    std::size_t dimension() const noexcept { return std::size_t{1} << n_qubits; }

    /// Infers n_qubits from the matrix size. Throws BadDimension / NotHermitian.
    static SystemModel from_matrix(ComplexMatrix h, std::string label);

    /// Throws DimensionMismatch if h_s is not 2^n x 2^n, NotHermitian beyond 1e-10.
    void validate() const;
};

enum class MeasurementMode { Stochastic, PostSelected };

std::string to_string(MeasurementMode mode);
MeasurementMode parse_measurement_mode(const std::string& text);

/// Parameters of the resonant cooling step. The first-ancilla splitting is fixed at 1.
struct AlgorithmConfig {
    static constexpr double omega = 1.0;

    double epsilon0 = 1.0;
    double coupling = 0.05;
    std::optional<double> tau;        // defaults to pi / (2 c)
    std::size_t trotter_steps = 0;    // 0 selects exact evolution
    std::size_t max_iterations = 1;
    std::uint64_t seed = 0;
    MeasurementMode mode = MeasurementMode::PostSelected;
    std::size_t restart_cap = 10000;
    bool strict_resonance = false;

    double step_time() const { return tau ? *tau : std::numbers::pi / (2.0 * coupling); }

    /// Throws InvalidArgument unless coupling > 0 and tau > 0.
    void validate() const;
};

/// Index arithmetic for the (n+2)-qubit register |a1 a2 s>, first ancilla most significant.
struct RegisterLayout {
    std::size_t system_dim;

    std::size_t dimension() const noexcept { return 4 * system_dim; }
    std::size_t index(unsigned a1, unsigned a2, std::size_t s) const noexcept {
        return (static_cast<std::size_t>(a1) * 2 + a2) * system_dim + s;
    }
};

/// Closed-form quantities for one 2x2 block at tau = pi / (2c).
struct BlockAmplitudes {
    std::size_t j = 0;
    double delta_j = 0.0;   // E_j - E_1
    double kappa_j = 0.0;   // E_1 + E_j + 1
    double alpha = 0.0;     // (2 E_1 + 1) pi / (4c)
    cplx c1{};
    cplx c_j0{};
    cplx c_j1{};
    double c_j1_sq = 0.0;   // |c_j1|^2 from its cosine form
};

/// H = -1/2 sz (x) I + I2 (x) H_R + c sx (x) sx (x) I_N.
ComplexMatrix build_algorithm_hamiltonian(const SystemModel& model, const AlgorithmConfig& config);

/// The two mutually commuting terms: -1/2 sz (x) I + I2 (x) H_R.
ComplexMatrix build_commuting_part(const SystemModel& model, const AlgorithmConfig& config);

/// The ancilla coupling c sx (x) sx (x) I_N.
ComplexMatrix build_coupling_part(const SystemModel& model, const AlgorithmConfig& config);

/// H_R = eps0 |0><0| (x) I_N + |1><1| (x) H_S.
ComplexMatrix build_register_hamiltonian(const SystemModel& model, double epsilon0);

/// One 2x2 block per eigenvector, in the basis {|0 0 chi_j>, |1 1 chi_j>}.
///
/// The upper-left entry is eps0 - 1/2, which equals 1/2 + E_1 on resonance.
/// With config.strict_resonance set, throws OffResonanceConfig if
/// |eps0 - E_1 - 1| > 1e-9.
std::vector<ComplexMatrix> extract_blocks(const EigenSystem& spectrum, const AlgorithmConfig& config);

/// eps0 = E1 + 1.
double resonance_reference(double e1) noexcept;

}  // namespace rescool
