#pragma once

#include <cstddef>

#include "rescool/hamiltonian.hpp"
#include "rescool/linalg.hpp"

namespace rescool {

/// exp(-i H tau).
ComplexMatrix exact_step(const ComplexMatrix& h_full, double tau);

/// First-order splitting [exp(-i A tau/L) exp(-i B tau/L)]^L. Throws InvalidArgument for l == 0.
ComplexMatrix trotter_propagator(const ComplexMatrix& part_a, const ComplexMatrix& part_b, double tau,
                                 std::size_t l);

/// The step operator U(tau) for a model: exact when config.trotter_steps == 0,
/// otherwise the first-order splitting with that many slices.
ComplexMatrix step_operator(const SystemModel& model, const AlgorithmConfig& config);

/// Closed-form block amplitudes at tau = pi/(2c) for ground energy e1 and level ej.
///
/// c_j0 and c_j1 are evaluated for every j (for ej == e1 they reduce to 0 and c1).
/// The square root sqrt(4c^2 + delta^2) is the principal root.
BlockAmplitudes analytic_amplitudes(double e1, double ej, double c, std::size_t j = 0);

}  // namespace rescool
