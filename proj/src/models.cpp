#include "rescool/models.hpp"

#include <bit>
#include <charconv>
#include <cmath>
#include <limits>
#include <string>

#include "rescool/errors.hpp"
#include "rescool/io.hpp"
#include "rescool/tolerance.hpp"

namespace rescool {

namespace {

constexpr cplx kI{0.0, 1.0};

SpinOperators make_spin_operators() {
    SpinOperators ops;
    ops.sx = ComplexMatrix{{0.0, 0.5}, {0.5, 0.0}};
    ops.sy = ComplexMatrix{{0.0, -0.5 * kI}, {0.5 * kI, 0.0}};
    ops.sz = ComplexMatrix{{0.5, 0.0}, {0.0, -0.5}};
    const auto id = ComplexMatrix::identity(2);
    ops.Sx = kron(ops.sx, id) + kron(id, ops.sx);
    ops.Sy = kron(ops.sy, id) + kron(id, ops.sy);
    ops.Sz = kron(ops.sz, id) + kron(id, ops.sz);
    return ops;
}

ComplexMatrix dot(const ComplexMatrix& ax, const ComplexMatrix& ay, const ComplexMatrix& az, const ComplexMatrix& bx,
                  const ComplexMatrix& by, const ComplexMatrix& bz) {
    return kron(ax, bx) + kron(ay, by) + kron(az, bz);
}

// 2/3 (1 + s.S) on [spin-half, spin-one pair].
ComplexMatrix boundary_left() {
    const auto& o = spin_operators();
    ComplexMatrix h = dot(o.sx, o.sy, o.sz, o.Sx, o.Sy, o.Sz) + ComplexMatrix::identity(8);
    h *= 2.0 / 3.0;
    return h;
}

// 2/3 (1 + S.s) on [spin-one pair, spin-half].
ComplexMatrix boundary_right() {
    const auto& o = spin_operators();
    ComplexMatrix h = dot(o.Sx, o.Sy, o.Sz, o.sx, o.sy, o.sz) + ComplexMatrix::identity(8);
    h *= 2.0 / 3.0;
    return h;
}

// S.S + (S.S)^2 / 3 + 2/3 on two spin-one pairs: twice the projector onto
// total spin 2, so the chain stays positive semidefinite.
ComplexMatrix bulk_bond() {
    const auto& o = spin_operators();
    const ComplexMatrix x = dot(o.Sx, o.Sy, o.Sz, o.Sx, o.Sy, o.Sz);
    ComplexMatrix sq = x * x;
    sq *= 1.0 / 3.0;
    ComplexMatrix shift = ComplexMatrix::identity(x.rows());
    shift *= 2.0 / 3.0;
    return x + sq + shift;
}

// I_{2^before} (x) local (x) I_{2^after}
ComplexMatrix embed(const ComplexMatrix& local, std::size_t before, std::size_t local_qubits, std::size_t total) {
    const std::size_t after = total - before - local_qubits;
    ComplexMatrix out = local;
    if (before > 0) out = kron(ComplexMatrix::identity(std::size_t{1} << before), out);
    if (after > 0) out = kron(out, ComplexMatrix::identity(std::size_t{1} << after));
    return out;
}

std::vector<double> parse_levels(const std::string& text) {
    std::vector<double> levels;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t comma = text.find(',', pos);
        const std::string token = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        levels.push_back(parse_double(token));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return levels;
}

}  // namespace

const SpinOperators& spin_operators() {
    static const SpinOperators ops = make_spin_operators();
    return ops;
}

SystemModel build_aklt(std::size_t n_bulk, std::size_t dimension_cap) {
    if (n_bulk == 0) throw InvalidArgument("build_aklt: need at least one bulk spin-1 site");
    const std::size_t qubits = 2 * n_bulk + 2;
    if (qubits >= std::numeric_limits<std::size_t>::digits ||
        (std::size_t{1} << qubits) > dimension_cap) {
        throw SizeCap("AKLT chain with " + std::to_string(n_bulk) + " bulk sites needs 2^" + std::to_string(qubits) +
                      " states, above the cap of " + std::to_string(dimension_cap));
    }

    ComplexMatrix h = embed(boundary_left(), 0, 3, qubits);
    h += embed(boundary_right(), qubits - 3, 3, qubits);
    const ComplexMatrix bond = bulk_bond();
    for (std::size_t k = 1; k < n_bulk; ++k) {
        // site k occupies qubits 2k-1, 2k
        h += embed(bond, 2 * k - 1, 4, qubits);
    }

    SystemModel m;
    m.n_qubits = qubits;
    m.h_s = std::move(h);
    m.label = "aklt" + std::to_string(n_bulk);
    return m;
}

SystemModel build_diagonal(std::span<const double> levels) {
    if (levels.empty() || !std::has_single_bit(levels.size())) {
        throw BadDimension("diagonal model needs a power-of-two number of levels, got " +
                           std::to_string(levels.size()));
    }
    std::string label = "diag:";
    for (std::size_t i = 0; i < levels.size(); ++i) {
        if (i) label += ',';
        label += format_number(levels[i]);
    }
    return SystemModel::from_matrix(ComplexMatrix::diagonal(levels), label);
}

double GroundTruth::min_gap() const {
    double g = std::numeric_limits<double>::infinity();
    for (std::size_t j = ground_space.size(); j < gaps.size(); ++j) g = std::min(g, gaps[j]);
    return g;
}

double GroundTruth::ground_weight(const ComplexVector& phi) const {
    double w = 0.0;
    for (const auto& g : ground_space) w += std::norm(inner(g, phi));
    return w;
}

GroundTruth ground_truth(const SystemModel& model, double degeneracy_tol) {
    model.validate();
    GroundTruth gt;
    gt.spectrum = hermitian_eig(model.h_s);
    gt.e1 = gt.spectrum.eigenvalues.front();
    gt.chi1 = gt.spectrum.vector(0);
    gt.gaps.reserve(gt.spectrum.size());
    for (std::size_t j = 0; j < gt.spectrum.size(); ++j) {
        const double gap = gt.spectrum.eigenvalues[j] - gt.e1;
        gt.gaps.push_back(gap);
        if (gap <= degeneracy_tol) gt.ground_space.push_back(gt.spectrum.vector(j));
    }
    return gt;
}

SystemModel model_from_spec(const std::string& spec, std::size_t dimension_cap) {
    if (spec.rfind("aklt", 0) == 0) {
        const std::string digits = spec.substr(4);
        std::size_t n = 0;
        const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
        if (digits.empty() || ec != std::errc{} || ptr != digits.data() + digits.size()) {
            throw ParseError("bad AKLT model name '" + spec + "' (expected aklt<N>)");
        }
        return build_aklt(n, dimension_cap);
    }
    if (spec.rfind("diag:", 0) == 0) {
        const auto levels = parse_levels(spec.substr(5));
        return build_diagonal(levels);
    }
    if (spec.rfind("file:", 0) == 0) {
        const std::string path = spec.substr(5);
        auto h = read_matrix_file(path);
        if (h.rows() > dimension_cap) throw SizeCap("matrix file exceeds the dimension cap");
        return SystemModel::from_matrix(std::move(h), spec);
    }
    throw ParseError("unknown model '" + spec + "' (expected aklt<N>, diag:<levels>, or file:<path>)");
}

ComplexVector basis_state_from_bits(const std::string& bits, std::size_t n_qubits) {
    if (bits.size() != n_qubits) {
        throw DimensionMismatch("bitstring '" + bits + "' has " + std::to_string(bits.size()) +
                                " qubits, model has " + std::to_string(n_qubits));
    }
    std::size_t index = 0;
    for (char ch : bits) {
        if (ch != '0' && ch != '1') throw ParseError("bitstring '" + bits + "' contains '" + std::string(1, ch) + "'");
        index = (index << 1) | static_cast<std::size_t>(ch - '0');
    }
    return ComplexVector::basis(std::size_t{1} << n_qubits, index);
}

ComplexVector initial_state_from_spec(const std::string& spec, std::size_t n_qubits) {
    if (spec.rfind("file:", 0) == 0) {
        auto v = read_amplitude_file(spec.substr(5));
        if (v.dim() != (std::size_t{1} << n_qubits)) {
            throw DimensionMismatch("amplitude file has " + std::to_string(v.dim()) + " entries, expected " +
                                    std::to_string(std::size_t{1} << n_qubits));
        }
        return v;
    }
    return basis_state_from_bits(spec, n_qubits);
}

}  // namespace rescool
