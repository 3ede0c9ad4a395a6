#include "rescool/verify.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <functional>
#include <numbers>
#include <ostream>
#include <sstream>

#include "rescool/cooling.hpp"
#include "rescool/errors.hpp"
#include "rescool/evolution.hpp"
#include "rescool/io.hpp"
#include "rescool/models.hpp"
#include "rescool/sweep.hpp"
#include "rescool/tolerance.hpp"

namespace rescool {

namespace {

using std::numbers::pi;

constexpr double kCoupling = 0.05;
constexpr std::uint64_t kMonteCarloSeed = 20240917;
constexpr std::uint64_t kAnalyticSeed = 4242;
constexpr std::uint64_t kConvergenceSeed = 777;

struct Pattern {
    std::size_t index;
    double amplitude;
};


std::array<Pattern, 6> make_pattern(double bond, double singlet_pair, double flipped) {
    return {{{0b0011, bond}, {0b0101, bond}, {0b1010, bond}, {0b0110, singlet_pair}, {0b1001, singlet_pair},
             {0b1100, flipped}}};
}

ComplexVector pattern_vector(const std::array<Pattern, 6>& pattern, std::size_t dim) {
    ComplexVector v(dim);
    for (const auto& p : pattern) v[p.index] = p.amplitude;
    return v;
}

/// Rotates v by the global phase that makes <ref|v> real and positive.
ComplexVector align_to(const ComplexVector& v, const ComplexVector& ref) {
    const cplx overlap = inner(ref, v);
    if (std::abs(overlap) == 0.0) return v;
    return std::conj(overlap) / std::abs(overlap) * v;
}

std::string fmt(double x) { return format_number(x); }

ComplexVector aklt_initial() { return basis_state_from_bits("1100", 4); }

AlgorithmConfig aklt_config(std::size_t iterations) {
    AlgorithmConfig config;
    config.epsilon0 = 1.0;
    config.coupling = kCoupling;
    config.max_iterations = iterations;
    config.mode = MeasurementMode::PostSelected;
    return config;
}

struct PatternCheck {
    bool ok = true;
    double worst = 0.0;
    double imag_residue = 0.0;
    std::string values;
};

PatternCheck compare_pattern(const ComplexVector& state, const std::array<Pattern, 6>& pattern, double tol) {
    const ComplexVector aligned = align_to(state, pattern_vector(pattern, state.dim()));
    PatternCheck pc;
    for (const auto& p : pattern) {
        const double got = aligned[p.index].real();
        pc.worst = std::max(pc.worst, std::abs(got - p.amplitude));
        pc.values += (pc.values.empty() ? "" : " ") + fmt(std::round(got * 1e4) / 1e4);
    }
    for (std::size_t i = 0; i < aligned.dim(); ++i) pc.imag_residue = std::max(pc.imag_residue, std::abs(aligned[i].imag()));
    pc.ok = pc.worst <= tol;
    return pc;
}

// ---------------------------------------------------------------- checks

CheckResult check_ground_truth(double s) {
    CheckResult r;
    const auto truth = ground_truth(build_aklt(1));
    ComplexVector expected(16);
    const double bond = 1.0 / std::sqrt(12.0);
    const double pair = -1.0 / std::sqrt(3.0);
    for (std::size_t idx : {0b0011, 0b1100, 0b0101, 0b1010}) expected[idx] = bond;
    for (std::size_t idx : {0b0110, 0b1001}) expected[idx] = pair;
    const double vec_err = max_abs_diff(align_to(truth.chi1, expected), expected);
    const bool unique = !truth.degenerate();
    r.passed = std::abs(truth.e1) <= 1e-8 * s && vec_err <= 1e-8 * s && unique;
    r.detail = "E1=" + fmt(truth.e1) + " |chi1-ref|max=" + fmt(vec_err) + (unique ? " unique" : " DEGENERATE");
    return r;
}

CheckResult check_initial_fidelity(double s) {
    CheckResult r;
    const auto truth = ground_truth(build_aklt(1));
    const double f = fidelity(aklt_initial(), truth.chi1);
    r.passed = std::abs(f - 1.0 / 12.0) <= 1e-10 * s;
    r.detail = "F=" + fmt(f) + " target 1/12=" + fmt(1.0 / 12.0);
    return r;
}

CheckResult check_purification(std::size_t iterations, const std::array<Pattern, 6>& pattern, double fid_lo,
                               double s) {
    CheckResult r;
    const auto config = aklt_config(iterations);
    const auto report = run_algorithm(build_aklt(1), config, aklt_initial());
    const auto pc = compare_pattern(report.final_state, pattern, 0.005 * s);
    const double lo = 1.0 - (1.0 - fid_lo) * s;
    const bool fid_ok = report.final_fidelity >= lo && report.final_fidelity <= 1.0 + 1e-12;
    r.passed = pc.ok && fid_ok;
    std::string expected;
    for (const auto& p : pattern) expected += (expected.empty() ? "" : " ") + fmt(p.amplitude);
    r.detail = "amplitudes [" + pc.values + "] vs [" + expected + "] max dev " + fmt(pc.worst) +
               (pc.ok ? " ok" : " > " + fmt(0.005 * s)) + "; imag residue " + fmt(pc.imag_residue) + "; F=" +
               fmt(report.final_fidelity) + (fid_ok ? " ok" : " below " + fmt(lo));
    return r;
}

CheckResult check_sweep(double s) {
    CheckResult r;
    const auto model = build_aklt(1);
    SweepConfig config;
    config.eps_min = 0.8;
    config.eps_max = 1.2;
    config.points = 100;
    config.coupling = kCoupling;
    config.tau = 31.4;
    const auto result = scan(model, config, aklt_initial());
    const double step = (config.eps_max - config.eps_min) / static_cast<double>(config.points - 1);
    const bool peak_ok = std::abs(result.peak_epsilon - 1.0) <= step * (1.0 + 1e-9);
    const bool e1_ok = std::abs(result.estimated_e1) <= 0.005 * s;
    const double d1_sq = fidelity(aklt_initial(), ground_truth(model).chi1);
    const double height = result.probabilities[result.peak_index];
    const bool height_ok = std::abs(height - d1_sq) <= 0.01 * s;
    r.passed = peak_ok && e1_ok && height_ok;
    r.detail = "peak eps0=" + fmt(result.peak_epsilon) + " (grid step " + fmt(step) + ") E1~" + fmt(result.estimated_e1) +
               " height " + fmt(height) + " vs |d1|^2 " + fmt(d1_sq);
    return r;
}

CheckResult check_analytic(double s) {
    CheckResult r;
    Rng rng(kAnalyticSeed);
    double worst_amp = 0.0;
    double worst_norm = 0.0;
    double worst_c1 = 0.0;
    for (int trial = 0; trial < 200; ++trial) {
        const double c = 1e-3 + rng.uniform() * (0.2 - 1e-3);
        const double e1 = -2.0 + 4.0 * rng.uniform();
        double delta = 5.0 * rng.uniform();
        if (trial % 20 == 0) delta = 0.0;
        if (rng.uniform() < 0.5) delta = -delta;
        const double ej = e1 + delta;
        const double tau = pi / (2.0 * c);

        const auto amp = analytic_amplitudes(e1, ej, c, 2);
        const ComplexMatrix block{{0.5 + e1, c}, {c, 0.5 + ej}};
        const ComplexMatrix u = propagator(block, tau);
        worst_amp = std::max({worst_amp, std::abs(amp.c_j0 - u(0, 0)), std::abs(amp.c_j1 - u(1, 0))});
        worst_norm = std::max(worst_norm, std::abs(std::norm(amp.c_j0) + std::norm(amp.c_j1) - 1.0));

        const ComplexMatrix resonant{{0.5 + e1, c}, {c, 0.5 + e1}};
        const ComplexMatrix u1 = propagator(resonant, tau);
        worst_c1 = std::max({worst_c1, std::abs(amp.c1 - u1(1, 0)), std::abs(u1(0, 0))});
    }
    r.passed = worst_amp <= 1e-9 * s && worst_c1 <= 1e-9 * s && worst_norm <= 1e-10 * s;
    r.detail = "200 triples: max |analytic - expm| c_j0/c_j1 " + fmt(worst_amp) + ", c1 " + fmt(worst_c1) +
               ", max | |c_j0|^2+|c_j1|^2 - 1 | " + fmt(worst_norm);
    return r;
}

CheckResult check_success_bound(double s) {
    CheckResult r;
    constexpr std::size_t kTrials = 10000;
    constexpr std::size_t kM = 2;
    auto config = aklt_config(kM);
    config.mode = MeasurementMode::Stochastic;
    const auto ctx = CoolingContext::make(build_aklt(1), config);
    const auto phi0 = aklt_initial();
    const auto rate = purification_rate(ctx.truth, phi0, kCoupling);
    const auto bound = success_probability_bound(rate.d1_sq, rate.a0, kCoupling, kM);

    std::int64_t hits = 0;
    const auto trials = static_cast<std::int64_t>(kTrials);
#pragma omp parallel for reduction(+ : hits) schedule(static)
    for (std::int64_t t = 0; t < trials; ++t) {
        Rng rng(stream_seed(kMonteCarloSeed, static_cast<std::uint64_t>(t)));
        if (consecutive_excitations(ctx, phi0, kM + 1, rng) == kM + 1) ++hits;
    }
    const double n = static_cast<double>(kTrials);
    const double freq = static_cast<double>(hits) / n;
    const double sigma = std::sqrt(freq * (1.0 - freq) / n);
    const double k = 3.0 * s;
    r.passed = freq >= bound.lower_bound - k * sigma && freq <= bound.exact_product + k * sigma;
    r.detail = std::to_string(kTrials) + " runs: frequency " + fmt(freq) + " sigma " + fmt(sigma) + "; lower " +
               fmt(bound.lower_bound) + " exact product " + fmt(bound.exact_product) + " (a0 c=" +
               fmt(rate.a0 * kCoupling) + ")";
    return r;
}

CheckResult check_trotter(double s) {
    CheckResult r;
    const auto model = build_aklt(1);
    const auto config = aklt_config(1);
    const double tau = config.step_time();
    const auto part_a = build_commuting_part(model, config);
    const auto part_b = build_coupling_part(model, config);
    const auto exact = exact_step(part_a + part_b, tau);

    std::array<double, 3> errors{};
    const std::array<std::size_t, 3> steps{64, 128, 256};
    for (std::size_t i = 0; i < steps.size(); ++i) {
        errors[i] = max_abs_diff(trotter_propagator(part_a, part_b, tau, steps[i]), exact);
    }
    const double ratio1 = errors[0] / errors[1];
    const double ratio2 = errors[1] / errors[2];
    const double lo = 2.0 - 0.4 * s;
    const double hi = 2.0 + 0.4 * s;
    const bool scaling_ok = errors[1] < errors[0] && errors[2] < errors[1] && ratio1 >= lo && ratio1 <= hi &&
                            ratio2 >= lo && ratio2 <= hi;

    Rng rng(0);
    const auto phi0 = aklt_initial();
    const double f_exact = run_iteration(phi0, model, config, rng).fidelity_to_target;
    auto trotter_config = config;
    trotter_config.trotter_steps = 512;
    const double f_trotter = run_iteration(phi0, model, trotter_config, rng).fidelity_to_target;
    const bool fid_ok = std::abs(f_trotter - f_exact) <= 0.02 * s;

    r.passed = scaling_ok && fid_ok;
    r.detail = "errors L=64/128/256: " + fmt(errors[0]) + " " + fmt(errors[1]) + " " + fmt(errors[2]) + " ratios " +
               fmt(ratio1) + " " + fmt(ratio2) + "; one-iteration F at L=512 " + fmt(f_trotter) + " vs exact " +
               fmt(f_exact);
    return r;
}

double gaussian(Rng& rng) {
    const double u1 = 1.0 - rng.uniform();
    const double u2 = rng.uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * pi * u2);
}

CheckResult check_convergence(double s) {
    CheckResult r;
    Rng rng(kConvergenceSeed);
    int failures = 0;
    double worst_final = 0.0;
    double worst_step_drop = 0.0;
    for (int model_index = 0; model_index < 50; ++model_index) {
        const std::size_t qubits = 1 + static_cast<std::size_t>(model_index % 3);
        const std::size_t dim = std::size_t{1} << qubits;
        const double e1 = -1.0 + 2.0 * rng.uniform();
        std::vector<double> levels(dim);
        for (auto& level : levels) level = e1 + 0.5 + 2.5 * rng.uniform();
        const std::size_t ground_slot = static_cast<std::size_t>(rng.uniform() * static_cast<double>(dim));
        levels[ground_slot] = e1;
        const auto model = build_diagonal(levels);

        ComplexVector phi(dim);
        do {
            for (std::size_t i = 0; i < dim; ++i) phi[i] = cplx(gaussian(rng), gaussian(rng));
            phi = phi.normalized();
        } while (std::norm(phi[ground_slot]) < 0.05);

        AlgorithmConfig config;
        config.epsilon0 = resonance_reference(e1);
        config.coupling = kCoupling;
        config.max_iterations = 5;
        const auto report = run_algorithm(model, config, phi);

        double previous = report.initial_fidelity;
        bool monotone = true;
        for (const auto& rec : report.records) {
            worst_step_drop = std::max(worst_step_drop, previous - rec.fidelity_to_target);
            if (rec.fidelity_to_target < previous - 1e-12 * s) monotone = false;
            previous = rec.fidelity_to_target;
        }
        const double infidelity = 1.0 - report.final_fidelity;
        worst_final = std::max(worst_final, infidelity);
        if (!monotone || infidelity > 1e-6 * s) ++failures;
    }
    r.passed = failures == 0;
    r.detail = "50 diagonal models: " + std::to_string(failures) + " failures; worst final infidelity " +
               fmt(worst_final) + "; largest fidelity drop " + fmt(std::max(0.0, worst_step_drop));
    return r;
}

CheckResult check_fixed_point(double s) {
    CheckResult r;
    const auto model = build_aklt(1);
    const auto truth = ground_truth(model);
    Rng rng(0);
    const auto rec = run_iteration(truth.chi1, model, aklt_config(1), rng);
    const double dev = max_abs_diff(align_to(rec.system_state, truth.chi1), truth.chi1);
    r.passed = rec.outcome == Outcome::Excited && std::abs(rec.excitation_probability - 1.0) <= 1e-9 * s &&
               dev <= 1e-8 * s;
    r.detail = "p_excited=" + fmt(rec.excitation_probability) + " |out - in|max (phase aligned)=" + fmt(dev);
    return r;
}

struct Entry {
    CheckInfo info;
    std::function<CheckResult(double)> run;
};

const std::vector<Entry>& registry() {
    static const std::vector<Entry> entries = {
        {{1, "aklt", "AKLT ground truth"}, check_ground_truth},
        {{2, "fidelity", "initial fidelity 1/12"}, check_initial_fidelity},
        {{3, "purification", "one-iteration purification"},
         [](double s) { return check_purification(1, make_pattern(0.321, -0.573, 0.186), 0.98, s); }},
        {{4, "purification", "two-iteration purification"},
         [](double s) { return check_purification(2, make_pattern(0.288, -0.577, 0.292), 0.999, s); }},
        {{5, "sweep", "sweep peak locates E1"}, check_sweep},
        {{6, "analytic", "analytic block amplitudes"}, check_analytic},
        {{7, "bound", "success-probability bound (Monte Carlo)"}, check_success_bound},
        {{8, "trotter", "Trotter first-order scaling"}, check_trotter},
        {{9, "convergence", "monotone convergence, random diagonal models"}, check_convergence},
        {{10, "fixedpoint", "resonance fixed point"}, check_fixed_point},
    };
    return entries;
}

bool selected(const CheckInfo& info, const std::string& only) {
    if (only.empty()) return true;
    std::stringstream list(only);
    std::string token;
    while (std::getline(list, token, ',')) {
        if (token == info.group || token == std::to_string(info.id)) return true;
    }
    return false;
}

}  // namespace

const std::vector<CheckInfo>& acceptance_checks() {
    static const std::vector<CheckInfo> infos = [] {
        std::vector<CheckInfo> out;
        for (const auto& e : registry()) out.push_back(e.info);
        return out;
    }();
    return infos;
}

std::vector<CheckResult> run_acceptance(const std::string& only, double scale) {
    ToleranceScaleGuard guard(scale);
    std::vector<CheckResult> results;
    for (const auto& e : registry()) {
        if (!selected(e.info, only)) continue;
        CheckResult r;
        try {
            r = e.run(scale);
        } catch (const std::exception& ex) {
            r.passed = false;
            r.detail = std::string("error: ") + ex.what();
        }
        r.id = e.info.id;
        r.group = e.info.group;
        r.title = e.info.title;
        results.push_back(std::move(r));
    }
    return results;
}

void print_check_table(std::ostream& out, const std::vector<CheckResult>& results) {
    std::size_t passed = 0;
    for (const auto& r : results) {
        out << (r.passed ? "[PASS] " : "[FAIL] ") << r.id << ' ' << r.group << ": " << r.title << " -- " << r.detail
            << '\n';
        if (r.passed) ++passed;
    }
    out << passed << '/' << results.size() << " checks passed\n";
}

bool all_passed(const std::vector<CheckResult>& results) {
    return std::all_of(results.begin(), results.end(), [](const CheckResult& r) { return r.passed; });
}

}  // namespace rescool
