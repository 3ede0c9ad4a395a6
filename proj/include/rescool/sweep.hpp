#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

#include "rescool/hamiltonian.hpp"
#include "rescool/linalg.hpp"
#include "rescool/random.hpp"

namespace rescool {

struct SweepConfig {
    double eps_min = 0.8;
    double eps_max = 1.2;
    std::size_t points = 100;
    std::size_t shots = 0;  // 0 = exact probabilities
    double coupling = 0.05;
    double tau = 31.4;
    std::uint64_t seed = 0;

    /// Throws InvalidArgument.
    void validate() const;
    /// Uniform grid including both endpoints.
    std::vector<double> grid() const;
};

struct SweepResult {
    std::vector<double> grid;
    std::vector<double> probabilities;
    std::vector<double> stderrs;
    std::size_t shots = 0;
    std::size_t peak_index = 0;
    double peak_epsilon = 0.0;
    double estimated_e1 = 0.0;
    bool peak_tied = false;                     // another grid point reached the same maximum
    std::optional<double> refined_peak_epsilon;  // three-point parabola through the peak
};

struct ProbabilityEstimate {
    double probability = 0.0;
    double std_error = 0.0;
};

/// First-ancilla excitation probability after one step from |0>|0>|phi0>.
/// shots == 0 gives the exact value with zero standard error; otherwise a
/// binomial estimate drawn from rng.
ProbabilityEstimate excitation_probability(const SystemModel& model, double epsilon0, double c, double tau,
                                           const ComplexVector& phi0, std::size_t shots, Rng& rng);

/// Evaluates the grid (in parallel, per-point RNG streams derived from the
/// seed) and picks the grid argmax, lower epsilon0 on ties.
/// Throws FlatCurve when max - min <= max(2 * median stderr, 1e-12).
SweepResult scan(const SystemModel& model, const SweepConfig& config, const ComplexVector& phi0);

/// Same grid evaluation on one thread; used to check the parallel path.
SweepResult scan_serial(const SystemModel& model, const SweepConfig& config, const ComplexVector& phi0);

/// CSV with header "epsilon0,probability,stderr,shots".
void write_sweep_csv(std::ostream& out, const SweepResult& result);

}  // namespace rescool
