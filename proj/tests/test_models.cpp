#include <doctest.h>

#include "oracles.hpp"
#include "rescool/errors.hpp"
#include "rescool/models.hpp"

using namespace rescool;

namespace {
ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b) { return a * b - b * a; }

ComplexMatrix spin_squared() {
    const auto& sp = spin_operators();
    return sp.Sx * sp.Sx + sp.Sy * sp.Sy + sp.Sz * sp.Sz;
}

// Swaps qubit order [l, a, b, r] -> [r, b, a, l] on the 16-dim AKLT space.
ComplexMatrix mirror_permutation() {
    ComplexMatrix p(16, 16);
    for (std::size_t s = 0; s < 16; ++s) {
        std::size_t r = 0;
        for (int q = 0; q < 4; ++q) r |= ((s >> q) & 1u) << (3 - q);
        p(r, s) = 1.0;
    }
    return p;
}
}  // namespace

TEST_SUITE("models") {
    TEST_CASE("spin operators obey the su(2) algebra") {
        const auto& sp = spin_operators();
        const cplx i{0, 1};
        CHECK(max_abs_diff(commutator(sp.sx, sp.sy), i * sp.sz) < 1e-15);
        CHECK(max_abs_diff(commutator(sp.Sx, sp.Sy), i * sp.Sz) < 1e-15);
        CHECK(max_abs_diff(commutator(sp.Sy, sp.Sz), i * sp.Sx) < 1e-15);
        CHECK(sp.sz(0, 0).real() == doctest::Approx(0.5));  // |0> is spin up
    }

    TEST_CASE("spin-1 from two qubits: triplet has S^2 = 2, singlet 0") {
        auto s2 = spin_squared();
        const double r = 1.0 / std::sqrt(2.0);
        ComplexVector up{1, 0, 0, 0};
        ComplexVector triplet0{0, r, r, 0};
        ComplexVector singlet{0, r, -r, 0};
        CHECK(max_abs_diff(s2 * up, 2.0 * up) < 1e-14);
        CHECK(max_abs_diff(s2 * triplet0, 2.0 * triplet0) < 1e-14);
        CHECK((s2 * singlet).norm() < 1e-14);
    }

    TEST_CASE("single-site AKLT: unique zero ground state, positive semidefinite") {
        auto m = build_aklt(1);
        CHECK(m.n_qubits == 4);
        CHECK(m.label == "aklt1");
        CHECK(m.h_s.hermiticity_error() < 1e-14);
        auto truth = ground_truth(m);
        CHECK(std::abs(truth.e1) < 1e-12);
        CHECK_FALSE(truth.degenerate());
        CHECK(truth.spectrum.eigenvalues.front() > -1e-12);
        CHECK(truth.min_gap() == doctest::Approx(2.0 / 3.0));
        CHECK(std::abs(oracle::lowest_eigenvalue_bisection(m.h_s)) < 1e-10);
        CHECK((m.h_s * truth.chi1).norm() < 1e-12);
    }

    TEST_CASE("single-site AKLT is mirror symmetric") {
        auto m = build_aklt(1);
        auto p = mirror_permutation();
        CHECK(max_abs_diff(p * m.h_s * p.adjoint(), m.h_s) < 1e-14);
    }

    TEST_CASE("bulk singlet sector sits at 4/3") {
        // boundary spins up, bulk pair in the singlet: only the constant parts survive
        auto m = build_aklt(1);
        const double r = 1.0 / std::sqrt(2.0);
        ComplexVector v(16);
        v[0b0010] = r;
        v[0b0100] = -r;
        auto hv = m.h_s * v;
        CHECK(max_abs_diff(hv, (4.0 / 3.0) * v) < 1e-12);
    }

    TEST_CASE("two-site AKLT ground energy") {
        auto m = build_aklt(2);
        CHECK(m.n_qubits == 6);
        auto truth = ground_truth(m);
        CHECK(std::abs(truth.e1) < 1e-10);
        CHECK(truth.spectrum.eigenvalues.front() > -1e-10);
        CHECK(oracle::lowest_eigenvalue_bisection(m.h_s) == doctest::Approx(truth.e1).epsilon(1e-9));
    }

    TEST_CASE("size cap") {
        CHECK_THROWS_AS(build_aklt(3, 64), SizeCap);
        CHECK_THROWS_AS(build_aklt(0), InvalidArgument);
    }

    TEST_CASE("diagonal models") {
        std::vector<double> levels{0.3, 2, 3, 5};
        auto m = build_diagonal(levels);
        CHECK(m.n_qubits == 2);
        auto truth = ground_truth(m);
        CHECK(truth.e1 == doctest::Approx(0.3));
        CHECK(truth.min_gap() == doctest::Approx(1.7));
        std::vector<double> three{0.3, 2, 3};
        CHECK_THROWS_AS(build_diagonal(three), BadDimension);
        std::vector<double> deg{0, 0, 1, 2};
        auto td = ground_truth(build_diagonal(deg));
        CHECK(td.degenerate());
        CHECK(td.ground_weight(ComplexVector::basis(4, 1)) == doctest::Approx(1.0));
    }

    TEST_CASE("ground energy agrees with inertia bisection on random Hamiltonians") {
        Rng rng(51);
        for (int t = 0; t < 10; ++t) {
            auto h = oracle::random_hermitian(16, rng);
            auto truth = ground_truth(SystemModel::from_matrix(h, "r"));
            CHECK(truth.e1 == doctest::Approx(oracle::lowest_eigenvalue_bisection(h)).epsilon(1e-9));
        }
    }

    TEST_CASE("model and state specs") {
        CHECK(model_from_spec("aklt1").n_qubits == 4);
        CHECK(model_from_spec("diag:0,1").n_qubits == 1);
        CHECK_THROWS(model_from_spec("nonsense"));
        auto v = basis_state_from_bits("1100", 4);
        CHECK(std::abs(v[12] - 1.0) < 1e-15);
        CHECK_THROWS(basis_state_from_bits("110", 4));
        CHECK_THROWS(basis_state_from_bits("1a00", 4));
        CHECK(initial_state_from_spec("01", 2)[1] == cplx(1.0));
    }
}
