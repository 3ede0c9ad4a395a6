#include "rescool/evolution.hpp"

#include <cmath>
#include <numbers>

#include "rescool/errors.hpp"

namespace rescool {

ComplexMatrix exact_step(const ComplexMatrix& h_full, double tau) { return propagator(h_full, tau); }

ComplexMatrix trotter_propagator(const ComplexMatrix& part_a, const ComplexMatrix& part_b, double tau,
                                 std::size_t l) {
    if (l == 0) throw InvalidArgument("trotter_propagator: L must be at least 1");
    if (part_a.rows() != part_b.rows() || part_a.cols() != part_b.cols()) {
        throw DimensionMismatch("trotter_propagator: parts have different shapes");
    }
    const double slice = tau / static_cast<double>(l);
    const ComplexMatrix step = propagator(part_a, slice) * propagator(part_b, slice);
    return matrix_power(step, l);
}

ComplexMatrix step_operator(const SystemModel& model, const AlgorithmConfig& config) {
    config.validate();
    const double tau = config.step_time();
    if (config.trotter_steps == 0) {
        return exact_step(build_algorithm_hamiltonian(model, config), tau);
    }
    return trotter_propagator(build_commuting_part(model, config), build_coupling_part(model, config), tau,
                              config.trotter_steps);
}

BlockAmplitudes analytic_amplitudes(double e1, double ej, double c, std::size_t j) {
    using std::numbers::pi;
    constexpr cplx i{0.0, 1.0};

    BlockAmplitudes b;
    b.j = j;
    b.delta_j = ej - e1;
    b.kappa_j = e1 + ej + 1.0;
    b.alpha = (2.0 * e1 + 1.0) * pi / (4.0 * c);
    b.c1 = std::exp(-i * (b.alpha + pi / 2.0));

    const double root = std::sqrt(4.0 * c * c + b.delta_j * b.delta_j);
    const double ratio = b.delta_j / (2.0 * root);
    const cplx swing = std::exp(i * (pi * root / (2.0 * c)));
    const cplx envelope = std::exp(-i * (pi * (b.kappa_j + root) / (4.0 * c)));

    b.c_j0 = ((0.5 - ratio) + (0.5 + ratio) * swing) * envelope;
    b.c_j1 = (c / root) * envelope * (1.0 - swing);
    b.c_j1_sq = c * c / (root * root) * (2.0 - 2.0 * std::cos(pi * root / (2.0 * c)));
    return b;
}

}  // namespace rescool
