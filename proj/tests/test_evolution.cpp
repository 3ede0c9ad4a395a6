#include <doctest.h>

#include <numbers>

#include "oracles.hpp"
#include "rescool/errors.hpp"
#include "rescool/evolution.hpp"
#include "rescool/models.hpp"

using namespace rescool;
using std::numbers::pi;

TEST_SUITE("evolution") {
    TEST_CASE("zero time and default step time") {
        auto model = build_aklt(1);
        AlgorithmConfig cfg;
        auto h = build_algorithm_hamiltonian(model, cfg);
        CHECK(max_abs_diff(exact_step(h, 0.0), ComplexMatrix::identity(64)) == 0.0);
        CHECK(cfg.step_time() == doctest::Approx(pi / 0.1));
        CHECK_THROWS_AS(trotter_propagator(h, h, 1.0, 0), InvalidArgument);
    }

    TEST_CASE("resonant ground block is fully transferred to |11 chi_1>") {
        auto model = build_aklt(1);
        AlgorithmConfig cfg;
        auto truth = ground_truth(model);
        auto u = step_operator(model, cfg);
        RegisterLayout lay{16};
        ComplexVector in(64);
        for (std::size_t s = 0; s < 16; ++s) in[lay.index(0, 0, s)] = truth.chi1[s];
        auto out = u * in;
        cplx amp{};
        for (std::size_t s = 0; s < 16; ++s) amp += std::conj(truth.chi1[s]) * out[lay.index(1, 1, s)];
        auto b = analytic_amplitudes(truth.e1, truth.e1, cfg.coupling);
        CHECK(std::abs(amp) == doctest::Approx(1.0).epsilon(1e-9));
        CHECK(std::abs(amp - b.c1) < 1e-9);
    }

    TEST_CASE("closed-form amplitudes match the hand-written 2x2 exponential") {
        Rng rng(4242);
        for (int t = 0; t < 200; ++t) {
            const double e1 = -1.0 + 2.0 * rng.uniform();
            const double ej = e1 + 3.0 * rng.uniform();
            const double c = 0.01 + 0.19 * rng.uniform();
            auto b = analytic_amplitudes(e1, ej, c);
            auto ref = oracle::block_expm(e1 + 0.5, ej + 0.5, c, pi / (2 * c));
            CHECK(std::abs(b.c_j0 - ref[0]) < 1e-8);
            CHECK(std::abs(b.c_j1 - ref[2]) < 1e-8);
            CHECK(b.c_j1_sq == doctest::Approx(std::norm(b.c_j1)).epsilon(1e-8));
            CHECK(std::norm(b.c_j0) + std::norm(b.c_j1) == doctest::Approx(1.0));
        }
    }

    TEST_CASE("degenerate level is transferred completely, distant level is suppressed") {
        auto b0 = analytic_amplitudes(0.0, 0.0, 0.05);
        CHECK(b0.c_j1_sq == doctest::Approx(1.0).epsilon(1e-12));
        auto b1 = analytic_amplitudes(0.0, 1.0, 0.05);
        CHECK(std::abs(b1.c_j1) <= 2 * 0.05 / 1.0);
    }

    TEST_CASE("commuting parts: one Trotter slice is exact") {
        std::vector<double> levels{0.0, 1.0};
        auto model = build_diagonal(levels);
        AlgorithmConfig cfg;
        auto a = build_commuting_part(model, cfg);
        ComplexMatrix b = ComplexMatrix::identity(a.rows());
        b *= 0.3;
        auto exact = exact_step(a + b, 5.0);
        CHECK(max_abs_diff(trotter_propagator(a, b, 5.0, 1), exact) < 1e-12);
    }

    TEST_CASE("Trotter error falls as 1/L on the AKLT register") {
        auto model = build_aklt(1);
        AlgorithmConfig cfg;
        auto exact = step_operator(model, cfg);
        double prev = 0.0;
        for (std::size_t l : {64u, 128u, 256u}) {
            cfg.trotter_steps = l;
            const double err = max_abs_diff(step_operator(model, cfg), exact);
            if (prev > 0) CHECK(prev / err == doctest::Approx(2.0).epsilon(0.1));
            prev = err;
        }
    }

    TEST_CASE("Trotter propagator is unitary") {
        Rng rng(41);
        auto a = oracle::random_hermitian(8, rng);
        auto b = oracle::random_hermitian(8, rng);
        auto u = trotter_propagator(a, b, 3.0, 37);
        CHECK(oracle::max_abs(oracle::multiply(u.adjoint(), u) - ComplexMatrix::identity(8)) < 1e-9);
    }
}
