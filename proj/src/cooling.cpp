#include "rescool/cooling.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>
#include <string>

#include "rescool/errors.hpp"
#include "rescool/evolution.hpp"
#include "rescool/io.hpp"
#include "rescool/tolerance.hpp"

namespace rescool {

namespace {

// Extracts the |a1 a2> block of a register state, renormalized when nonzero.
ComplexVector system_block(const ComplexVector& reg, unsigned a1, unsigned a2) {
    const RegisterLayout layout{reg.dim() / 4};
    ComplexVector s(layout.system_dim);
    for (std::size_t i = 0; i < layout.system_dim; ++i) s[i] = reg[layout.index(a1, a2, i)];
    const double n = s.norm();
    if (n > 0.0) s *= 1.0 / n;
    return s;
}

IterationRecord iterate(const ComplexVector& phi_in, const CoolingContext& ctx, MeasurementMode mode, Rng& rng) {
    if (phi_in.dim() != ctx.model.dimension()) {
        throw DimensionMismatch("input state has dimension " + std::to_string(phi_in.dim()) + ", model has " +
                                std::to_string(ctx.model.dimension()));
    }
    const ComplexVector evolved = ctx.step * prepare_register(phi_in);
    Measurement m = measure_first_ancilla(evolved, mode, rng);

    IterationRecord rec;
    rec.outcome = m.outcome;
    rec.excitation_probability = m.probability_excited;
    rec.renorm = m.probability_excited;
    // The coupling only connects |00> with |11>, so the excited branch lives in |11>.
    rec.system_state = m.outcome == Outcome::Excited ? system_block(m.collapsed, 1, 1) : system_block(m.collapsed, 0, 0);
    rec.fidelity_to_target = ctx.truth.ground_weight(rec.system_state);
    return rec;
}

}  // namespace

const char* to_string(Outcome outcome) { return outcome == Outcome::Excited ? "excited" : "ground"; }

CoolingContext CoolingContext::make(SystemModel model, AlgorithmConfig config) {
    model.validate();
    config.validate();
    CoolingContext ctx;
    ctx.truth = ground_truth(model);
    if (config.strict_resonance) {
        // Raises OffResonanceConfig when eps0 != E1 + 1.
        (void)extract_blocks(ctx.truth.spectrum, config);
    }
    ctx.step = step_operator(model, config);
    ctx.model = std::move(model);
    ctx.config = config;
    return ctx;
}

ComplexVector prepare_register(const ComplexVector& phi) {
    if (phi.empty() || (phi.dim() & (phi.dim() - 1)) != 0) {
        throw DimensionMismatch("system state dimension " + std::to_string(phi.dim()) + " is not a power of two");
    }
    if (!phi.is_normalized()) {
        throw NotNormalized("system state has norm " + format_number(phi.norm()));
    }
    const RegisterLayout layout{phi.dim()};
    ComplexVector reg(layout.dimension());
    for (std::size_t s = 0; s < phi.dim(); ++s) reg[layout.index(0, 0, s)] = phi[s];
    return reg;
}

Measurement measure_first_ancilla(const ComplexVector& state, MeasurementMode mode, Rng& rng) {
    if (state.dim() < 4 || (state.dim() & (state.dim() - 1)) != 0) {
        throw DimensionMismatch("register dimension " + std::to_string(state.dim()) + " is not 2^(n+2)");
    }
    if (!state.is_normalized()) throw NotNormalized("register state has norm " + format_number(state.norm()));

    const std::size_t half = state.dim() / 2;
    double p_excited = 0.0;
    for (std::size_t i = half; i < state.dim(); ++i) p_excited += std::norm(state[i]);
    p_excited = std::clamp(p_excited, 0.0, 1.0);

    Measurement m;
    m.probability_excited = p_excited;
    if (mode == MeasurementMode::PostSelected) {
        if (p_excited < scaled(tolerance::zero_branch)) {
            throw ZeroBranch("post-selecting the excited branch with probability " + format_number(p_excited));
        }
        m.outcome = Outcome::Excited;
    } else {
        m.outcome = rng.uniform() < p_excited ? Outcome::Excited : Outcome::Ground;
    }

    m.collapsed = ComplexVector(state.dim());
    const std::size_t begin = m.outcome == Outcome::Excited ? half : 0;
    const double weight = m.outcome == Outcome::Excited ? p_excited : 1.0 - p_excited;
    const double scale = 1.0 / std::sqrt(weight);
    for (std::size_t i = begin; i < begin + half; ++i) m.collapsed[i] = state[i] * scale;
    return m;
}

IterationRecord run_iteration(const ComplexVector& phi_in, const CoolingContext& ctx, Rng& rng) {
    return iterate(phi_in, ctx, ctx.config.mode, rng);
}

IterationRecord run_iteration(const ComplexVector& phi_in, const SystemModel& model, const AlgorithmConfig& config,
                              Rng& rng) {
    return run_iteration(phi_in, CoolingContext::make(model, config), rng);
}

CoolingReport run_algorithm(const CoolingContext& ctx, const ComplexVector& phi0) {
    const auto& config = ctx.config;
    if (!phi0.is_normalized()) throw NotNormalized("initial state has norm " + format_number(phi0.norm()));

    CoolingReport report;
    report.mode = config.mode;
    report.seed = config.seed;
    report.iterations = config.max_iterations;
    report.initial_fidelity = ctx.truth.ground_weight(phi0);
    report.degenerate_ground = ctx.truth.degenerate();
    report.slow_purification = ctx.truth.min_gap() < 5.0 * config.coupling;

    const auto rate = purification_rate(ctx.truth, phi0, config.coupling);
    report.d1_sq = rate.d1_sq;
    report.a0 = rate.a0;
    const double ac = rate.a0 * config.coupling;
    const double tail = std::pow(ac, 2.0 * static_cast<double>(config.max_iterations));
    report.fidelity_closed_form = 1.0 / (1.0 + tail);
    report.fidelity_linear_estimate = 1.0 - static_cast<double>(config.max_iterations) * tail;
    try {
        const auto bound = success_probability_bound(rate.d1_sq, rate.a0, config.coupling, config.max_iterations);
        report.succ_bound = bound.exact_product;
        report.succ_lower_bound = bound.lower_bound;
    } catch (const DivergentTail&) {
    }

    Rng rng(config.seed);
    ComplexVector phi = phi0;
    std::size_t successes = 0;
    while (successes < config.max_iterations) {
        IterationRecord rec = run_iteration(phi, ctx, rng);
        rec.k = successes + 1;
        const bool excited = rec.outcome == Outcome::Excited;
        if (excited) phi = rec.system_state;
        report.records.push_back(std::move(rec));
        if (excited) {
            ++successes;
            continue;
        }
        if (++report.restarts > config.restart_cap) {
            throw RestartCapExceeded("gave up after " + std::to_string(config.restart_cap) + " restarts");
        }
        phi = phi0;
        successes = 0;
    }
    report.final_state = remove_global_phase(phi);
    report.final_fidelity = ctx.truth.ground_weight(phi);
    return report;
}

CoolingReport run_algorithm(const SystemModel& model, const AlgorithmConfig& config, const ComplexVector& phi0) {
    return run_algorithm(CoolingContext::make(model, config), phi0);
}

std::size_t consecutive_excitations(const CoolingContext& ctx, const ComplexVector& phi0, std::size_t attempts,
                                    Rng& rng) {
    ComplexVector phi = phi0;
    std::size_t count = 0;
    while (count < attempts) {
        IterationRecord rec = iterate(phi, ctx, MeasurementMode::Stochastic, rng);
        if (rec.outcome != Outcome::Excited) break;
        phi = std::move(rec.system_state);
        ++count;
    }
    return count;
}

double fidelity(const ComplexVector& a, const ComplexVector& b) {
    if (a.dim() != b.dim()) throw DimensionMismatch("fidelity: states have different dimensions");
    return std::clamp(std::norm(inner(a, b)), 0.0, 1.0);
}

PurificationRate purification_rate(const GroundTruth& truth, const ComplexVector& phi0, double c) {
    const auto& spec = truth.spectrum;
    if (phi0.dim() != spec.size()) throw DimensionMismatch("purification_rate: state/model dimension mismatch");
    const std::size_t ground = truth.ground_space.size();
    PurificationRate r;
    double leak = 0.0;
    for (std::size_t j = 0; j < spec.size(); ++j) {
        const double dj_sq = std::norm(inner(spec.vector(j), phi0));
        if (j < ground) {
            r.d1_sq += dj_sq;
        } else {
            const auto amp = analytic_amplitudes(truth.e1, spec.eigenvalues[j], c, j);
            leak += dj_sq * std::norm(amp.c_j1);
        }
    }
    r.a0 = r.d1_sq > 0.0 ? std::sqrt(leak / (r.d1_sq * c * c)) : std::numeric_limits<double>::infinity();
    return r;
}

SuccessBound success_probability_bound(double d1_sq, double a0, double c, std::size_t m) {
    const double ac = a0 * c;
    if (!(ac < 1.0)) throw DivergentTail("a0 * c = " + format_number(ac) + " is not below 1");
    const double ac2 = ac * ac;
    SuccessBound b;
    b.exact_product = d1_sq;
    double power = 1.0;
    for (std::size_t k = 1; k <= m; ++k) {
        power *= ac2;
        b.exact_product /= 1.0 + power;
        if (power == 0.0) break;  // remaining factors are exactly 1
    }
    b.lower_bound = d1_sq * std::pow(1.0 - ac2, static_cast<double>(m));
    return b;
}

ComplexVector purified_state_model(const ComplexVector& chi1, const ComplexVector& chibar, double a0, double c,
                                   std::size_t m) {
    const double weight = std::pow(a0 * c, static_cast<double>(m));
    ComplexVector out = chi1 + cplx(weight) * chibar;
    out *= 1.0 / std::sqrt(1.0 + weight * weight);
    return out;
}

ComplexVector remove_global_phase(const ComplexVector& v) {
    double largest = 0.0;
    for (std::size_t i = 0; i < v.dim(); ++i) largest = std::max(largest, std::abs(v[i]));
    if (largest == 0.0) return v;
    for (std::size_t i = 0; i < v.dim(); ++i) {
        if (std::abs(v[i]) >= largest - 1e-12) {
            return std::conj(v[i]) / std::abs(v[i]) * v;
        }
    }
    return v;
}

void write_report(std::ostream& out, const CoolingReport& r) {
    const auto opt = [](const std::optional<double>& x) { return x ? format_number(*x) : std::string("nan"); };
    out << "# rescool cooling report\n";
    out << "meta mode=" << to_string(r.mode) << " seed=" << r.seed << " iterations=" << r.iterations
        << " restarts=" << r.restarts << '\n';
    out << "meta d1_sq=" << format_number(r.d1_sq) << " a0=" << format_number(r.a0) << " succ_exact=" << opt(r.succ_bound)
        << " succ_lower=" << opt(r.succ_lower_bound) << '\n';
    out << "meta fidelity_initial=" << format_number(r.initial_fidelity)
        << " fidelity_final=" << format_number(r.final_fidelity)
        << " fidelity_closed_form=" << format_number(r.fidelity_closed_form)
        << " fidelity_linear_estimate=" << format_number(r.fidelity_linear_estimate) << '\n';
    out << "meta degenerate_ground=" << (r.degenerate_ground ? 1 : 0)
        << " slow_purification=" << (r.slow_purification ? 1 : 0) << '\n';
    for (const auto& rec : r.records) {
        out << "iteration k=" << rec.k << " outcome=" << to_string(rec.outcome)
            << " probability=" << format_number(rec.excitation_probability) << " renorm=" << format_number(rec.renorm)
            << " fidelity=" << format_number(rec.fidelity_to_target) << '\n';
    }
    out << "final index,re,im\n";
    for (std::size_t i = 0; i < r.final_state.dim(); ++i) {
        out << i << ',' << format_number(r.final_state[i].real()) << ',' << format_number(r.final_state[i].imag())
            << '\n';
    }
}

}  // namespace rescool
