#include "rescool/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <exception>
#include <ostream>
#include <string>

#include "rescool/cooling.hpp"
#include "rescool/errors.hpp"
#include "rescool/io.hpp"

namespace rescool {

namespace {

double median(std::vector<double> values) {
    if (values.empty()) return 0.0;
    const auto mid = values.begin() + static_cast<std::ptrdiff_t>(values.size() / 2);
    std::nth_element(values.begin(), mid, values.end());
    if (values.size() % 2 == 1) return *mid;
    const double upper = *mid;
    const double lower = *std::max_element(values.begin(), mid);
    return 0.5 * (lower + upper);
}

ProbabilityEstimate evaluate_point(const SystemModel& model, const SweepConfig& config, const ComplexVector& phi0,
                                   const std::vector<double>& grid, std::size_t i) {
    Rng rng(stream_seed(config.seed, i));
    return excitation_probability(model, grid[i], config.coupling, config.tau, phi0, config.shots, rng);
}

SweepResult finish(const SweepConfig& config, std::vector<double> grid, std::vector<ProbabilityEstimate> values) {
    SweepResult r;
    r.grid = std::move(grid);
    r.shots = config.shots;
    r.probabilities.reserve(values.size());
    r.stderrs.reserve(values.size());
    for (const auto& v : values) {
        r.probabilities.push_back(v.probability);
        r.stderrs.push_back(v.std_error);
    }

    const auto [lo, hi] = std::minmax_element(r.probabilities.begin(), r.probabilities.end());
    const double spread = *hi - *lo;
    const double floor = std::max(2.0 * median(r.stderrs), 1e-12);
    if (spread <= floor) {
        throw FlatCurve("excitation probability varies by " + format_number(spread) +
                        " across the grid, below the resolution " + format_number(floor));
    }

    // First maximum wins, which is the lower epsilon0.
    r.peak_index = static_cast<std::size_t>(hi - r.probabilities.begin());
    for (std::size_t i = r.peak_index + 1; i < r.probabilities.size(); ++i) {
        if (std::abs(r.probabilities[i] - *hi) <= 1e-12) r.peak_tied = true;
    }
    r.peak_epsilon = r.grid[r.peak_index];
    r.estimated_e1 = r.peak_epsilon - AlgorithmConfig::omega;

    const std::size_t k = r.peak_index;
    if (k > 0 && k + 1 < r.grid.size()) {
        const double left = r.probabilities[k - 1];
        const double mid = r.probabilities[k];
        const double right = r.probabilities[k + 1];
        const double curvature = left - 2.0 * mid + right;
        if (curvature < 0.0) {
            const double step = r.grid[k + 1] - r.grid[k];
            r.refined_peak_epsilon = r.grid[k] + 0.5 * step * (left - right) / curvature;
        }
    }
    return r;
}

}  // namespace

void SweepConfig::validate() const {
    if (!(eps_min < eps_max)) throw InvalidArgument("sweep range needs eps_min < eps_max");
    if (points < 2) throw InvalidArgument("sweep needs at least two grid points");
    if (!(coupling >= 0.0) || !std::isfinite(coupling)) throw InvalidArgument("coupling must be non-negative");
    if (!(tau > 0.0) || !std::isfinite(tau)) throw InvalidArgument("evolution time tau must be positive");
}

std::vector<double> SweepConfig::grid() const {
    std::vector<double> g(points);
    const double step = (eps_max - eps_min) / static_cast<double>(points - 1);
    for (std::size_t i = 0; i < points; ++i) g[i] = eps_min + step * static_cast<double>(i);
    g.back() = eps_max;
    return g;
}

ProbabilityEstimate excitation_probability(const SystemModel& model, double epsilon0, double c, double tau,
                                           const ComplexVector& phi0, std::size_t shots, Rng& rng) {
    AlgorithmConfig config;
    config.epsilon0 = epsilon0;
    config.coupling = c;
    config.tau = tau;
    const ComplexVector reg = prepare_register(phi0);
    if (reg.dim() != 4 * model.dimension()) throw DimensionMismatch("initial state does not match the model");

    const EigenSystem spectrum = hermitian_eig(build_algorithm_hamiltonian(model, config));
    const ComplexVector evolved = propagate(spectrum, tau, reg);
    double p = 0.0;
    for (std::size_t i = evolved.dim() / 2; i < evolved.dim(); ++i) p += std::norm(evolved[i]);
    p = std::clamp(p, 0.0, 1.0);

    if (shots == 0) return {p, 0.0};
    std::size_t hits = 0;
    for (std::size_t s = 0; s < shots; ++s) {
        if (rng.uniform() < p) ++hits;
    }
    const double n = static_cast<double>(shots);
    const double estimate = static_cast<double>(hits) / n;
    return {estimate, std::sqrt(estimate * (1.0 - estimate) / n)};
}

SweepResult scan(const SystemModel& model, const SweepConfig& config, const ComplexVector& phi0) {
    config.validate();
    model.validate();
    const auto grid = config.grid();
    std::vector<ProbabilityEstimate> values(grid.size());
    std::exception_ptr failure;
    const auto count = static_cast<std::int64_t>(grid.size());

#pragma omp parallel for schedule(dynamic)
    for (std::int64_t i = 0; i < count; ++i) {
        try {
            values[static_cast<std::size_t>(i)] = evaluate_point(model, config, phi0, grid, static_cast<std::size_t>(i));
        } catch (...) {
#pragma omp critical(rescool_scan_failure)
            if (!failure) failure = std::current_exception();
        }
    }
    if (failure) std::rethrow_exception(failure);
    return finish(config, grid, std::move(values));
}

SweepResult scan_serial(const SystemModel& model, const SweepConfig& config, const ComplexVector& phi0) {
    config.validate();
    model.validate();
    const auto grid = config.grid();
    std::vector<ProbabilityEstimate> values(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) values[i] = evaluate_point(model, config, phi0, grid, i);
    return finish(config, grid, std::move(values));
}

void write_sweep_csv(std::ostream& out, const SweepResult& r) {
    out << "epsilon0,probability,stderr,shots\n";
    for (std::size_t i = 0; i < r.grid.size(); ++i) {
        out << format_number(r.grid[i]) << ',' << format_number(r.probabilities[i]) << ','
            << format_number(r.stderrs[i]) << ',' << r.shots << '\n';
    }
}

}  // namespace rescool
