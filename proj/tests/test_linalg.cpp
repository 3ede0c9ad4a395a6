#include <doctest.h>

#include <numbers>

#include "oracles.hpp"
#include "rescool/errors.hpp"
#include "rescool/linalg.hpp"
#include "rescool/models.hpp"

using namespace rescool;

namespace {
const ComplexMatrix kSx{{0, 1}, {1, 0}};
const ComplexMatrix kSz{{1, 0}, {0, -1}};
}  // namespace

TEST_SUITE("linalg") {
    TEST_CASE("kron of identities and of sigma_x pairs") {
        CHECK(max_abs_diff(kron(ComplexMatrix::identity(2), ComplexMatrix::identity(2)), ComplexMatrix::identity(4)) == 0.0);
        auto xx = kron(kSx, kSx);
        ComplexMatrix anti(4, 4);
        for (std::size_t i = 0; i < 4; ++i) anti(i, 3 - i) = 1.0;
        CHECK(max_abs_diff(xx, anti) == 0.0);
        CHECK_THROWS_AS(kron(ComplexMatrix{}, kSx), InvalidArgument);
    }

    TEST_CASE("kron matches the index formula and is associative") {
        Rng rng(21);
        for (int t = 0; t < 10; ++t) {
            auto a = oracle::random_matrix(2, 3, rng);
            auto b = oracle::random_matrix(3, 2, rng);
            auto c = oracle::random_matrix(2, 2, rng);
            CHECK(max_abs_diff(kron(a, b), oracle::kron_by_index(a, b)) < 1e-15);
            CHECK(max_abs_diff(kron(kron(a, b), c), kron(a, kron(b, c))) < 1e-12);
        }
    }

    TEST_CASE("products match a direct triple loop") {
        Rng rng(22);
        auto a = oracle::random_matrix(9, 5, rng);
        auto b = oracle::random_matrix(5, 7, rng);
        CHECK(max_abs_diff(a * b, oracle::multiply(a, b)) < 1e-12);
        CHECK(oracle::max_abs(matrix_power(a * a.adjoint(), 0) - ComplexMatrix::identity(9)) == 0.0);
    }

    TEST_CASE("eig of sigma_z") {
        auto es = hermitian_eig(kSz);
        REQUIRE(es.size() == 2);
        CHECK(es.eigenvalues[0] == doctest::Approx(-1.0));
        CHECK(es.eigenvalues[1] == doctest::Approx(1.0));
        CHECK(std::abs(es.vector(0)[1]) == doctest::Approx(1.0));
        CHECK(std::abs(es.vector(1)[0]) == doctest::Approx(1.0));
    }

    TEST_CASE("eig rejects non-Hermitian input") {
        ComplexMatrix m{{0, 1}, {0, 0}};
        CHECK_THROWS_AS(hermitian_eig(m), NotHermitian);
    }

    TEST_CASE("eigenvalues agree with Jacobi on the real embedding and reconstruct H") {
        Rng rng(23);
        for (std::size_t n : {2u, 5u, 8u, 16u}) {
            auto h = oracle::random_hermitian(n, rng);
            auto es = hermitian_eig(h);
            auto ref = oracle::jacobi_eigenvalues(h);
            for (std::size_t i = 0; i < n; ++i) CHECK(es.eigenvalues[i] == doctest::Approx(ref[i]).epsilon(1e-10));
            ComplexMatrix d(n, n);
            for (std::size_t i = 0; i < n; ++i) d(i, i) = es.eigenvalues[i];
            auto rebuilt = oracle::multiply(oracle::multiply(es.eigenvectors, d), es.eigenvectors.adjoint());
            CHECK(oracle::max_abs(rebuilt - h) < 1e-10);
            auto gram = oracle::multiply(es.eigenvectors.adjoint(), es.eigenvectors);
            CHECK(oracle::max_abs(gram - ComplexMatrix::identity(n)) < 1e-12);
        }
    }

    TEST_CASE("propagator at t=0 and for sigma_z") {
        auto id = propagator(kSz, 0.0);
        CHECK(max_abs_diff(id, ComplexMatrix::identity(2)) == 0.0);
        auto u = propagator(kSz, std::numbers::pi / 2);
        CHECK(std::abs(u(0, 0) - cplx(0, -1)) < 1e-12);
        CHECK(std::abs(u(1, 1) - cplx(0, 1)) < 1e-12);
        CHECK(std::abs(u(0, 1)) < 1e-12);
    }

    TEST_CASE("propagator matches a Taylor scaling-and-squaring exponential") {
        Rng rng(24);
        for (int t = 0; t < 5; ++t) {
            auto h = oracle::random_hermitian(6, rng);
            const double time = 0.3 + rng.uniform() * 5.0;
            CHECK(oracle::max_abs(propagator(h, time) - oracle::taylor_expm(h, time)) < 1e-9);
        }
    }

    TEST_CASE("propagators are unitary and form a one-parameter group") {
        Rng rng(25);
        for (int t = 0; t < 20; ++t) {
            auto h = oracle::random_hermitian(8, rng);
            const double t1 = rng.uniform() * 40.0;
            const double t2 = rng.uniform() * 40.0;
            auto u = propagator(h, t1);
            CHECK(oracle::max_abs(oracle::multiply(u.adjoint(), u) - ComplexMatrix::identity(8)) < 1e-9);
            auto lhs = oracle::multiply(u, propagator(h, t2));
            CHECK(oracle::max_abs(lhs - propagator(h, t1 + t2)) < 1e-9);
        }
    }

    TEST_CASE("propagate equals propagator times vector") {
        Rng rng(26);
        auto h = oracle::random_hermitian(7, rng);
        auto v = oracle::random_state(7, rng);
        auto es = hermitian_eig(h);
        CHECK(max_abs_diff(propagate(es, 2.5, v), propagator(h, 2.5) * v) < 1e-12);
    }

    TEST_CASE("vector helpers") {
        ComplexVector v{cplx(3, 0), cplx(0, 4)};
        CHECK(v.norm() == doctest::Approx(5.0));
        CHECK(v.normalized().is_normalized());
        CHECK(std::abs(inner(v, v) - 25.0) < 1e-12);
        CHECK_THROWS_AS(ComplexVector(2).normalized(), InvalidArgument);
    }
}
