#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

#include "rescool/hamiltonian.hpp"
#include "rescool/linalg.hpp"
#include "rescool/models.hpp"
#include "rescool/random.hpp"

namespace rescool {

enum class Outcome { Ground, Excited };

const char* to_string(Outcome outcome);

struct Measurement {
    Outcome outcome = Outcome::Ground;
    double probability_excited = 0.0;
    ComplexVector collapsed;  // projected and renormalized register state
};

struct IterationRecord {
    std::size_t k = 0;
    Outcome outcome = Outcome::Ground;
    double excitation_probability = 0.0;
    double renorm = 0.0;  // N_r, equal to the excitation probability
    ComplexVector system_state;
    double fidelity_to_target = 0.0;
};

struct CoolingReport {
    std::vector<IterationRecord> records;
    std::size_t restarts = 0;
    ComplexVector final_state;
    double initial_fidelity = 0.0;
    double final_fidelity = 0.0;
    double d1_sq = 0.0;
    double a0 = 0.0;
    std::optional<double> succ_bound;        // exact product, empty if a0 c >= 1
    std::optional<double> succ_lower_bound;  // |d1|^2 [1 - (a0 c)^2]^m
    double fidelity_closed_form = 0.0;       // 1 / (1 + (a0 c)^{2m})
    double fidelity_linear_estimate = 0.0;   // 1 - m (a0 c)^{2m}
    MeasurementMode mode = MeasurementMode::PostSelected;
    std::uint64_t seed = 0;
    std::size_t iterations = 0;
    bool degenerate_ground = false;
    bool slow_purification = false;  // min gap < 5 c
};

/// Everything that stays fixed across iterations of one cooling run.
struct CoolingContext {
    SystemModel model;
    AlgorithmConfig config;
    GroundTruth truth;
    ComplexMatrix step;  // U(tau), exact or Trotterized per config

    static CoolingContext make(SystemModel model, AlgorithmConfig config);
};

/// |0>|0>|phi>. Throws NotNormalized.
ComplexVector prepare_register(const ComplexVector& phi);

/// Measures the first ancilla. Post-selected mode forces "excited" and throws
/// ZeroBranch when that branch has probability below 1e-15.
Measurement measure_first_ancilla(const ComplexVector& state, MeasurementMode mode, Rng& rng);

IterationRecord run_iteration(const ComplexVector& phi_in, const CoolingContext& ctx, Rng& rng);
IterationRecord run_iteration(const ComplexVector& phi_in, const SystemModel& model, const AlgorithmConfig& config,
                              Rng& rng);

/// The full procedure with the restart rule. Seeds its RNG from config.seed.
/// Throws RestartCapExceeded when config.restart_cap restarts happen before
/// max_iterations consecutive excited outcomes.
CoolingReport run_algorithm(const CoolingContext& ctx, const ComplexVector& phi0);
CoolingReport run_algorithm(const SystemModel& model, const AlgorithmConfig& config, const ComplexVector& phi0);

/// Number of consecutive excited outcomes from phi0, stopping at the first
/// ground outcome or after `attempts` measurements. Stochastic, no restart.
std::size_t consecutive_excitations(const CoolingContext& ctx, const ComplexVector& phi0, std::size_t attempts,
                                    Rng& rng);

/// |<a|b>|^2.
double fidelity(const ComplexVector& a, const ComplexVector& b);

struct PurificationRate {
    double d1_sq = 0.0;
    double a0 = 0.0;
};

/// |d1|^2 and a0 = sqrt(sum_{j>1} |d_j c_j1 / (d1 c)|^2) for the initial state.
/// Degenerate ground levels are pooled into d1.
PurificationRate purification_rate(const GroundTruth& truth, const ComplexVector& phi0, double c);

struct SuccessBound {
    double exact_product = 0.0;
    double lower_bound = 0.0;
};

/// d1_sq * prod_{k=1..m} 1/(1+(a0 c)^{2k}) and d1_sq * [1-(a0 c)^2]^m.
/// Throws DivergentTail if a0 c >= 1.
SuccessBound success_probability_bound(double d1_sq, double a0, double c, std::size_t m);

/// (|chi1> + (a0 c)^m |chibar>) / sqrt(1 + (a0 c)^{2m}).
ComplexVector purified_state_model(const ComplexVector& chi1, const ComplexVector& chibar, double a0, double c,
                                   std::size_t m);

/// Rotates the global phase so the largest-magnitude amplitude is real positive
/// (lowest index wins among equal magnitudes).
ComplexVector remove_global_phase(const ComplexVector& v);

/// Line-delimited report: '#' metadata, one "iteration" line per record, then the
/// final amplitudes as "index,re,im" rows.
void write_report(std::ostream& out, const CoolingReport& report);

}  // namespace rescool
