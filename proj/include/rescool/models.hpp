#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "rescool/hamiltonian.hpp"
#include "rescool/linalg.hpp"

namespace rescool {

/// Spin-1/2 operators (hbar = 1) and the spin-1 operators realized on two
/// qubits as s_a + s_b. |0> is spin up.
struct SpinOperators {
    ComplexMatrix sx, sy, sz;  // 2x2
    ComplexMatrix Sx, Sy, Sz;  // 4x4
};

const SpinOperators& spin_operators();

/// Default cap on the system dimension for built-in models.
inline constexpr std::size_t kDefaultDimensionCap = std::size_t{1} << 14;

/// 1d AKLT chain with n_bulk spin-1 sites and spin-1/2 boundary spins.
///
/// Qubit order is [s_left, (a_1 b_1), ..., (a_N b_N), s_right], qubit 0 most
/// significant, so the model lives on 2*n_bulk + 2 qubits. Bulk bonds are
/// S_k.S_{k+1} + (S_k.S_{k+1})^2 / 3 + 2/3 (a projector, so the ground energy
/// is 0), the boundary terms 2/3 (1 + s.S).
SystemModel build_aklt(std::size_t n_bulk, std::size_t dimension_cap = kDefaultDimensionCap);

/// Diagonal H_S with the given levels. Throws BadDimension unless the length is a power of two.
SystemModel build_diagonal(std::span<const double> levels);

/// Exact-diagonalization reference for a model.
struct GroundTruth {
    double e1 = 0.0;
    ComplexVector chi1;
    std::vector<ComplexVector> ground_space;  // orthonormal basis of the lowest level
    std::vector<double> gaps;                 // E_j - E_1 for every eigenvector
    EigenSystem spectrum;

    bool degenerate() const noexcept { return ground_space.size() > 1; }
    /// Smallest gap to a level outside the ground space (infinity if none).
    double min_gap() const;
    /// Weight of phi in the ground space.
    double ground_weight(const ComplexVector& phi) const;
};

GroundTruth ground_truth(const SystemModel& model, double degeneracy_tol = 1e-9);

/// Looks up "aklt<N>", "diag:<e1>,<e2>,...", or "file:<path>".
SystemModel model_from_spec(const std::string& spec, std::size_t dimension_cap = kDefaultDimensionCap);

/// Basis state from a bitstring, leftmost character = qubit 0 = most significant bit.
ComplexVector basis_state_from_bits(const std::string& bits, std::size_t n_qubits);

/// "<bitstring>" or "file:<path>" (see read_amplitude_file).
ComplexVector initial_state_from_spec(const std::string& spec, std::size_t n_qubits);

}  // namespace rescool
