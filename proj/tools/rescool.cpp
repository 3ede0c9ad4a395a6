// rescool: resonance-transition ground-state preparation, from the command line.
//
//   rescool sweep  --model aklt1 --init 1100 --range 0.8:1.2 --points 100 --c 0.05
//   rescool cool   --model aklt1 --init 1100 --epsilon0 1 --c 0.05 --iters 2 --mode post-selected
//   rescool verify [--only trotter] [--tolerance-scale 0.1]
//
// Exit codes: 0 ok, 1 failure, 2 bad flags or inputs, 3 flat sweep curve,
// 4 restart cap exceeded.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "rescool/cooling.hpp"
#include "rescool/errors.hpp"
#include "rescool/io.hpp"
#include "rescool/models.hpp"
#include "rescool/sweep.hpp"
#include "rescool/verify.hpp"

namespace {

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitFlat = 3;
constexpr int kExitRestartCap = 4;

struct CommonOptions {
    std::string model = "aklt1";
    std::string init;
    double coupling = 0.05;
    std::optional<double> tau;
    std::uint64_t seed = 0;
    std::string out;
};

void add_common(CLI::App* cmd, CommonOptions& o) {
    cmd->add_option("--model", o.model, "aklt<N>, diag:<levels>, or file:<path>")->capture_default_str();
    cmd->add_option("--init", o.init, "initial state: bitstring or file:<path> (default all zeros)");
    cmd->add_option("--c", o.coupling, "ancilla coupling c")->capture_default_str();
    cmd->add_option("--tau", o.tau, "evolution time (default pi/(2c))");
    cmd->add_option("--seed", o.seed, "RNG seed (RC_SEED overrides)")->capture_default_str();
    cmd->add_option("--out", o.out, "output file (default stdout)");
}

// RC_SEED takes precedence over --seed and the config file.
void apply_seed_env(std::uint64_t& seed) {
    if (const char* env = std::getenv("RC_SEED"); env && *env) {
        const double value = rescool::parse_double(env);
        if (value < 0 || value != static_cast<double>(static_cast<std::uint64_t>(value))) {
            throw rescool::ParseError("RC_SEED must be a non-negative integer");
        }
        seed = static_cast<std::uint64_t>(value);
    }
}

rescool::ComplexVector initial_state(const CommonOptions& o, const rescool::SystemModel& model) {
    const std::string spec = o.init.empty() ? std::string(model.n_qubits, '0') : o.init;
    return rescool::initial_state_from_spec(spec, model.n_qubits);
}

// Output is fully rendered before anything touches the file system.
void emit(const std::string& path, const std::string& text) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) throw rescool::ParseError("cannot open '" + path + "' for writing");
    f << text;
}

std::pair<double, double> parse_range(const std::string& text) {
    const auto colon = text.find(':');
    if (colon == std::string::npos) throw rescool::ParseError("range must look like <min>:<max>");
    return {rescool::parse_double(text.substr(0, colon)), rescool::parse_double(text.substr(colon + 1))};
}

// Reads key=value lines and turns them into --key=value tokens placed right
// after the subcommand, so explicit flags (which come later) win.
std::vector<std::string> expand_config(std::vector<std::string> args) {
    std::string path;
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (args[i] == "--config" && i + 1 < args.size()) {
            path = args[i + 1];
            args.erase(args.begin() + static_cast<std::ptrdiff_t>(i), args.begin() + static_cast<std::ptrdiff_t>(i) + 2);
            break;
        }
        if (args[i].rfind("--config=", 0) == 0) {
            path = args[i].substr(9);
            args.erase(args.begin() + static_cast<std::ptrdiff_t>(i));
            break;
        }
    }
    if (path.empty()) return args;

    std::ifstream in(path);
    if (!in) throw rescool::ParseError("cannot open config file '" + path + "'");
    std::vector<std::string> injected;
    std::string line;
    while (std::getline(in, line)) {
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) throw rescool::ParseError("config line without '=': " + line);
        auto strip = [](std::string s) {
            const auto a = s.find_first_not_of(" \t\r");
            const auto b = s.find_last_not_of(" \t\r");
            return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
        };
        const std::string key = strip(line.substr(0, eq));
        const std::string value = strip(line.substr(eq + 1));
        if (key.empty()) throw rescool::ParseError("config line without a key: " + line);
        if (value == "true") {
            injected.push_back("--" + key);
        } else if (value != "false") {
            injected.push_back("--" + key + "=" + value);
        }
    }
    // args[0] is the program, args[1] the subcommand.
    const std::size_t at = args.size() >= 2 ? 2 : args.size();
    args.insert(args.begin() + static_cast<std::ptrdiff_t>(at), injected.begin(), injected.end());
    return args;
}

int cmd_sweep(const CommonOptions& common, const std::string& range, std::size_t points, std::size_t shots,
              bool refine) {
    using namespace rescool;
    const auto model = model_from_spec(common.model);
    const auto phi0 = initial_state(common, model);
    SweepConfig config;
    std::tie(config.eps_min, config.eps_max) = parse_range(range);
    config.points = points;
    config.shots = shots;
    config.coupling = common.coupling;
    config.tau = common.tau ? *common.tau
                            : (common.coupling > 0.0 ? std::numbers::pi / (2.0 * common.coupling) : 1.0);
    config.seed = common.seed;
    apply_seed_env(config.seed);

    const auto result = scan(model, config, phi0);
    std::ostringstream csv;
    write_sweep_csv(csv, result);
    emit(common.out, csv.str());
    std::cerr << "peak epsilon0=" << format_number(result.peak_epsilon)
              << " estimated E1=" << format_number(result.estimated_e1) << '\n';
    if (result.peak_tied) std::cerr << "note: peak tied with a higher epsilon0; lower one reported\n";
    if (refine && result.refined_peak_epsilon) {
        std::cerr << "refined epsilon0=" << format_number(*result.refined_peak_epsilon) << '\n';
    }
    return 0;
}

struct CoolOptions {
    std::optional<double> epsilon0;
    bool auto_epsilon = false;
    std::size_t trotter = 0;
    std::size_t iters = 1;
    std::string mode = "post-selected";
    std::size_t restart_cap = 10000;
    bool strict = false;
    bool target_known = false;
};

int cmd_cool(const CommonOptions& common, const CoolOptions& o) {
    using namespace rescool;
    const auto model = model_from_spec(common.model);
    const auto phi0 = initial_state(common, model);
    AlgorithmConfig config;
    if (o.auto_epsilon) {
        config.epsilon0 = resonance_reference(ground_truth(model).e1);
    } else if (o.epsilon0) {
        config.epsilon0 = *o.epsilon0;
    } else {
        throw InvalidArgument("cool needs --epsilon0 or --auto-epsilon");
    }
    config.coupling = common.coupling;
    config.tau = common.tau;
    config.trotter_steps = o.trotter;
    config.max_iterations = o.iters;
    config.mode = parse_measurement_mode(o.mode);
    config.seed = common.seed;
    config.restart_cap = o.restart_cap;
    config.strict_resonance = o.strict;
    apply_seed_env(config.seed);
    config.validate();

    const auto report = run_algorithm(model, config, phi0);
    std::ostringstream text;
    write_report(text, report);
    emit(common.out, text.str());
    if (o.target_known) {
        std::cerr << "final fidelity=" << format_number(report.final_fidelity) << '\n';
    }
    if (report.degenerate_ground) std::cerr << "note: degenerate ground space; fidelity is the ground-space weight\n";
    if (report.slow_purification) std::cerr << "note: slow-purification regime (min gap < 5c)\n";
    return 0;
}

// Errors caused by what the user passed in, as opposed to run-time failures.
bool is_input_error(const rescool::Error& e) {
    return dynamic_cast<const rescool::ParseError*>(&e) || dynamic_cast<const rescool::InvalidArgument*>(&e) ||
           dynamic_cast<const rescool::DimensionMismatch*>(&e) || dynamic_cast<const rescool::BadDimension*>(&e) ||
           dynamic_cast<const rescool::NotNormalized*>(&e) || dynamic_cast<const rescool::NotHermitian*>(&e) ||
           dynamic_cast<const rescool::SizeCap*>(&e) || dynamic_cast<const rescool::OffResonanceConfig*>(&e);
}

int cmd_verify(const std::string& only, double scale) {
    const auto results = rescool::run_acceptance(only, scale);
    rescool::print_check_table(std::cout, results);
    if (results.empty()) {
        std::cerr << "no checks match '" << only << "'\n";
        return kExitUsage;
    }
    return rescool::all_passed(results) ? 0 : kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
    std::vector<std::string> args(argv, argv + argc);
    try {
        args = expand_config(std::move(args));
    } catch (const rescool::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    CLI::App app{"Resonance-transition ground-state preparation simulator"};
    app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all");

    CommonOptions sweep_common;
    std::string range = "0.8:1.2";
    std::size_t points = 100;
    std::size_t shots = 0;
    bool refine = false;
    auto* sweep = app.add_subcommand("sweep", "scan epsilon0 and locate the excitation peak");
    add_common(sweep, sweep_common);
    sweep->add_option("--range", range, "epsilon0 range <min>:<max>")->capture_default_str();
    sweep->add_option("--points", points, "grid points")->capture_default_str();
    sweep->add_option("--shots", shots, "measurements per point (0 = exact)")->capture_default_str();
    sweep->add_flag("--refine", refine, "also print a parabolic peak refinement");

    CommonOptions cool_common;
    CoolOptions cool_opts;
    auto* cool = app.add_subcommand("cool", "run the iterative purification");
    add_common(cool, cool_common);
    cool->add_option("--epsilon0", cool_opts.epsilon0, "reference eigenvalue");
    cool->add_flag("--auto-epsilon", cool_opts.auto_epsilon, "use E1 + 1 from exact diagonalization");
    cool->add_option("--trotter", cool_opts.trotter, "Trotter slices L (0 = exact)")->capture_default_str();
    cool->add_option("--iters", cool_opts.iters, "consecutive successes m")->capture_default_str();
    cool->add_option("--mode", cool_opts.mode, "stochastic | post-selected")->capture_default_str();
    cool->add_option("--restart-cap", cool_opts.restart_cap, "restarts allowed")->capture_default_str();
    cool->add_flag("--strict", cool_opts.strict, "require epsilon0 = E1 + 1");
    cool->add_flag("--target-known", cool_opts.target_known, "print the final fidelity");

    std::string only;
    double tolerance_scale = 1.0;
    auto* verify = app.add_subcommand("verify", "run the acceptance checks");
    verify->add_option("--only", only, "comma-separated check ids or groups");
    verify->add_option("--tolerance-scale", tolerance_scale, "multiply every tolerance")->capture_default_str();

    std::vector<char*> cargs;
    for (auto& a : args) cargs.push_back(a.data());
    try {
        app.parse(static_cast<int>(cargs.size()), cargs.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (sweep->parsed()) return cmd_sweep(sweep_common, range, points, shots, refine);
        if (cool->parsed()) return cmd_cool(cool_common, cool_opts);
        if (verify->parsed()) return cmd_verify(only, tolerance_scale);
    } catch (const rescool::FlatCurve& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitFlat;
    } catch (const rescool::RestartCapExceeded& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitRestartCap;
    } catch (const rescool::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return is_input_error(e) ? kExitUsage : kExitFailure;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitFailure;
    }
    return kExitUsage;
}
