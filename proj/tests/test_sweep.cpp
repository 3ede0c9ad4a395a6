#include <doctest.h>

#include <algorithm>
#include <sstream>

#include "oracles.hpp"
#include "rescool/errors.hpp"
#include "rescool/models.hpp"
#include "rescool/sweep.hpp"

using namespace rescool;

namespace {
// Excitation probability from the 2x2 blocks: sum_j |d_j|^2 |U_j(1,0)|^2.
double block_probability(const SystemModel& model, double eps0, double c, double tau, const ComplexVector& phi) {
    auto es = hermitian_eig(model.h_s);
    double p = 0.0;
    for (std::size_t j = 0; j < es.size(); ++j) {
        auto u = oracle::block_expm(eps0 - 0.5, 0.5 + es.eigenvalues[j], c, tau);
        p += std::norm(inner(es.vector(j), phi)) * std::norm(u[2]);
    }
    return p;
}
}  // namespace

TEST_SUITE("sweep") {
    TEST_CASE("exact probabilities match the block oracle") {
        auto model = build_aklt(1);
        auto phi = basis_state_from_bits("1100", 4);
        Rng rng(0);
        for (double eps : {0.8, 0.93, 1.0, 1.07, 1.2}) {
            auto est = excitation_probability(model, eps, 0.05, 31.4, phi, 0, rng);
            CHECK(est.probability == doctest::Approx(block_probability(model, eps, 0.05, 31.4, phi)).epsilon(1e-9));
            CHECK(est.std_error == 0.0);
        }
    }

    TEST_CASE("AKLT probability at and away from resonance") {
        auto model = build_aklt(1);
        auto phi = basis_state_from_bits("1100", 4);
        Rng rng(0);
        CHECK(std::abs(excitation_probability(model, 1.0, 0.05, 31.4, phi, 0, rng).probability - 1.0 / 12.0) < 0.01);
        CHECK(excitation_probability(model, 0.8, 0.05, 31.4, phi, 0, rng).probability < 0.02);
    }

    TEST_CASE("sampled estimate within 4 standard errors of the exact value") {
        auto model = build_aklt(1);
        auto phi = basis_state_from_bits("1100", 4);
        Rng exact_rng(0), rng(17);
        const double p = excitation_probability(model, 1.0, 0.05, 31.4, phi, 0, exact_rng).probability;
        auto est = excitation_probability(model, 1.0, 0.05, 31.4, phi, 100000, rng);
        CHECK(est.std_error > 0.0);
        CHECK(std::abs(est.probability - p) <= 4.0 * std::sqrt(p * (1 - p) / 100000.0));
    }

    TEST_CASE("AKLT scan peaks at E1 + 1") {
        auto model = build_aklt(1);
        SweepConfig cfg;
        auto r = scan(model, cfg, basis_state_from_bits("1100", 4));
        CHECK(r.grid.size() == 100);
        const double step = (cfg.eps_max - cfg.eps_min) / 99.0;
        CHECK(std::abs(r.peak_epsilon - 1.0) <= step);
        CHECK(std::abs(r.estimated_e1) <= 0.005);
        REQUIRE(r.refined_peak_epsilon.has_value());
        CHECK(std::abs(*r.refined_peak_epsilon - 1.0) < step);
    }

    TEST_CASE("four-level diagonal model peaks near 1.3") {
        std::vector<double> levels{0.3, 2, 3, 5};
        auto model = build_diagonal(levels);
        SweepConfig cfg;
        cfg.eps_min = 1.0;
        cfg.eps_max = 1.6;
        cfg.points = 121;
        auto r = scan(model, cfg, basis_state_from_bits("00", 2));
        CHECK(r.peak_epsilon == doctest::Approx(1.3).epsilon(0.005 / 1.3));
        CHECK(r.probabilities[r.peak_index] > 0.99);
    }

    TEST_CASE("zero coupling gives a flat curve") {
        auto model = build_aklt(1);
        SweepConfig cfg;
        cfg.coupling = 0.0;
        CHECK_THROWS_AS(scan(model, cfg, basis_state_from_bits("1100", 4)), FlatCurve);
    }

    TEST_CASE("parallel and serial scans are identical, also with shots") {
        auto model = build_aklt(1);
        auto phi = basis_state_from_bits("1100", 4);
        SweepConfig cfg;
        cfg.points = 24;
        auto a = scan(model, cfg, phi);
        auto b = scan_serial(model, cfg, phi);
        CHECK(a.probabilities == b.probabilities);
        cfg.shots = 2000;
        cfg.seed = 8;
        auto c = scan(model, cfg, phi);
        auto d = scan_serial(model, cfg, phi);
        CHECK(c.probabilities == d.probabilities);
        CHECK(c.stderrs == d.stderrs);
    }

    TEST_CASE("peak sits within one grid step of E1 + 1 on random diagonal models") {
        Rng rng(71);
        for (int t = 0; t < 10; ++t) {
            std::vector<double> levels(4);
            for (auto& e : levels) e = 2.0 * rng.uniform();
            const double e1 = *std::min_element(levels.begin(), levels.end());
            for (auto& e : levels)
                if (e != e1) e += 0.6;  // keep other resonances outside the window
            auto model = build_diagonal(levels);
            const auto ground = static_cast<std::size_t>(std::min_element(levels.begin(), levels.end()) - levels.begin());
            SweepConfig cfg;
            cfg.eps_min = e1 + 0.8;
            cfg.eps_max = e1 + 1.2;
            cfg.points = 81;
            auto r = scan(model, cfg, ComplexVector::basis(4, ground));
            CHECK(std::abs(r.peak_epsilon - (e1 + 1.0)) <= (cfg.eps_max - cfg.eps_min) / 80.0);
        }
    }

    TEST_CASE("bad configurations") {
        SweepConfig cfg;
        cfg.points = 1;
        CHECK_THROWS_AS(cfg.validate(), InvalidArgument);
        cfg = SweepConfig{};
        cfg.eps_min = 1.3;
        CHECK_THROWS_AS(cfg.validate(), InvalidArgument);
        CHECK(SweepConfig{}.grid().front() == 0.8);
        CHECK(SweepConfig{}.grid().back() == 1.2);
    }

    TEST_CASE("csv output") {
        std::vector<double> levels{0.0, 1.0};
        auto model = build_diagonal(levels);
        SweepConfig cfg;
        cfg.points = 3;
        auto r = scan(model, cfg, ComplexVector{1, 0});
        std::ostringstream out;
        write_sweep_csv(out, r);
        std::istringstream in(out.str());
        std::string line;
        std::getline(in, line);
        CHECK(line == "epsilon0,probability,stderr,shots");
        int rows = 0;
        while (std::getline(in, line)) ++rows;
        CHECK(rows == 3);
    }
}
