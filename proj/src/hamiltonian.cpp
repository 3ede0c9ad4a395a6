#include "rescool/hamiltonian.hpp"

#include <bit>
#include <cmath>
#include <string>

#include "rescool/errors.hpp"
#include "rescool/tolerance.hpp"

namespace rescool {

namespace {

const ComplexMatrix& pauli_x() {
    static const ComplexMatrix m{{0.0, 1.0}, {1.0, 0.0}};
    return m;
}

const ComplexMatrix& pauli_z() {
    static const ComplexMatrix m{{1.0, 0.0}, {0.0, -1.0}};
    return m;
}

ComplexMatrix projector(unsigned bit) {
    ComplexMatrix p(2, 2);
    p(bit, bit) = 1.0;
    return p;
}

// Construction accepts c = 0; only cooling runs need c > 0.
void check_config(const SystemModel& model, const AlgorithmConfig& config) {
    model.validate();
    if (!std::isfinite(config.epsilon0) || !std::isfinite(config.coupling)) {
        throw InvalidArgument("epsilon0 and coupling must be finite");
    }
}

}  // namespace

SystemModel SystemModel::from_matrix(ComplexMatrix h, std::string label) {
    if (!h.is_square() || h.rows() == 0 || !std::has_single_bit(h.rows())) {
        throw BadDimension("system Hamiltonian must be 2^n x 2^n, got " + std::to_string(h.rows()) + "x" +
                           std::to_string(h.cols()));
    }
    SystemModel m;
    m.n_qubits = static_cast<std::size_t>(std::countr_zero(h.rows()));
    m.h_s = std::move(h);
    m.label = std::move(label);
    m.validate();
    return m;
}

void SystemModel::validate() const {
    const std::size_t n = dimension();
    if (h_s.rows() != n || h_s.cols() != n) {
        throw DimensionMismatch("h_s is " + std::to_string(h_s.rows()) + "x" + std::to_string(h_s.cols()) +
                                ", expected " + std::to_string(n) + "x" + std::to_string(n) + " for " +
                                std::to_string(n_qubits) + " qubits");
    }
    const double err = h_s.hermiticity_error();
    if (err > scaled(tolerance::hermitian_input)) {
        throw NotHermitian("system Hamiltonian '" + label + "' is not Hermitian (error " + std::to_string(err) + ")");
    }
}

std::string to_string(MeasurementMode mode) {
    return mode == MeasurementMode::Stochastic ? "stochastic" : "post-selected";
}

MeasurementMode parse_measurement_mode(const std::string& text) {
    if (text == "stochastic") return MeasurementMode::Stochastic;
    if (text == "post-selected" || text == "postselected") return MeasurementMode::PostSelected;
    throw ParseError("unknown measurement mode '" + text + "' (expected stochastic or post-selected)");
}

void AlgorithmConfig::validate() const {
    if (!(coupling > 0.0) || !std::isfinite(coupling)) throw InvalidArgument("coupling must be positive");
    const double t = step_time();
    if (!(t > 0.0) || !std::isfinite(t)) throw InvalidArgument("evolution time tau must be positive");
}

ComplexMatrix build_register_hamiltonian(const SystemModel& model, double epsilon0) {
    const std::size_t n = model.dimension();
    ComplexMatrix reference = kron(projector(0), ComplexMatrix::identity(n));
    reference *= epsilon0;
    return reference + kron(projector(1), model.h_s);
}

ComplexMatrix build_commuting_part(const SystemModel& model, const AlgorithmConfig& config) {
    check_config(model, config);
    const std::size_t n = model.dimension();
    ComplexMatrix ancilla = kron(pauli_z(), ComplexMatrix::identity(2 * n));
    ancilla *= -0.5 * AlgorithmConfig::omega;
    return ancilla + kron(ComplexMatrix::identity(2), build_register_hamiltonian(model, config.epsilon0));
}

ComplexMatrix build_coupling_part(const SystemModel& model, const AlgorithmConfig& config) {
    check_config(model, config);
    ComplexMatrix coupling = kron(kron(pauli_x(), pauli_x()), ComplexMatrix::identity(model.dimension()));
    coupling *= config.coupling;
    return coupling;
}

ComplexMatrix build_algorithm_hamiltonian(const SystemModel& model, const AlgorithmConfig& config) {
    return build_commuting_part(model, config) + build_coupling_part(model, config);
}

std::vector<ComplexMatrix> extract_blocks(const EigenSystem& spectrum, const AlgorithmConfig& config) {
    if (!std::isfinite(config.epsilon0) || !std::isfinite(config.coupling)) {
        throw InvalidArgument("epsilon0 and coupling must be finite");
    }
    if (spectrum.size() == 0) throw InvalidArgument("extract_blocks: empty spectrum");
    const double e1 = spectrum.eigenvalues.front();
    if (config.strict_resonance &&
        std::abs(config.epsilon0 - e1 - AlgorithmConfig::omega) > scaled(tolerance::resonance)) {
        throw OffResonanceConfig("epsilon0 = " + std::to_string(config.epsilon0) + " is not E1 + 1 = " +
                                 std::to_string(e1 + 1.0));
    }
    std::vector<ComplexMatrix> blocks;
    blocks.reserve(spectrum.size());
    for (double ej : spectrum.eigenvalues) {
        blocks.push_back(ComplexMatrix{{config.epsilon0 - 0.5, config.coupling},
                                       {config.coupling, 0.5 + ej}});
    }
    return blocks;
}

double resonance_reference(double e1) noexcept { return e1 + AlgorithmConfig::omega; }

}  // namespace rescool
