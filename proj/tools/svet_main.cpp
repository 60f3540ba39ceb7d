#include "svet/errors.hpp"
#include "svet/json_io.hpp"
#include "svet/oracle.hpp"
#include "svet/spacetime.hpp"
#include "svet/sweep.hpp"
#include "svet/xtype.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

namespace {

using svet::SweepConfig;

// SVET_SEED in the environment overrides any configured or flagged seed.
std::optional<std::uint64_t> env_seed() {
    const char* text = std::getenv("SVET_SEED");
    if (text == nullptr || *text == '\0') return std::nullopt;
    try {
        return std::stoull(text);
    } catch (const std::exception&) {
        throw svet::ParseError(std::string("SVET_SEED is not an integer: ") + text);
    }
}

struct SweepFlags {
    std::string scenario;
    std::string preset;
    std::string config_path;
    std::optional<int> n, p, q, m;
    std::optional<double> mass, lambda, omega, alpha, temperature;
    std::optional<std::string> axis1, axis2;
    bool audit = false;
    std::optional<double> threshold;
    std::optional<std::uint64_t> seed;
    std::optional<std::string> out;
    std::string out_dir;
    std::optional<int> workers;
    std::optional<int> restarts;
    std::optional<int> max_iterations;
};

void add_oracle_flags(CLI::App* cmd, SweepFlags& flags) {
    cmd->add_option("--restarts", flags.restarts,
                    "Numeric maximizer restarts (default 64)");
    cmd->add_option("--max-iterations", flags.max_iterations,
                    "Iteration cap per restart (default 500)");
}

// Layer the command-line flags over a base config (defaults or --config file).
void apply_flags(SweepConfig& cfg, const SweepFlags& flags) {
    if (!flags.scenario.empty()) {
        if (flags.scenario == "schwarzschild")
            cfg.scenario = svet::SweepScenario::schwarzschild;
        else if (flags.scenario == "sds")
            cfg.scenario = svet::SweepScenario::sds;
        else
            throw svet::InvalidConfig("unknown --scenario '" + flags.scenario + "'");
    }
    if (flags.n) {
        cfg.schwarzschild.n = *flags.n;
        cfg.sds.n = *flags.n;
    }
    if (flags.p) cfg.schwarzschild.p = *flags.p;
    if (flags.q) cfg.schwarzschild.q = *flags.q;
    if (flags.m) cfg.sds.m = *flags.m;
    if (flags.mass) {
        cfg.schwarzschild.mass = *flags.mass;
        cfg.schwarzschild.temperature.reset();
        cfg.sds.mass = *flags.mass;
    }
    if (flags.temperature) {
        cfg.schwarzschild.temperature = *flags.temperature;
        cfg.schwarzschild.mass.reset();
    }
    if (flags.lambda) cfg.sds.lambda_cosmo = *flags.lambda;
    if (flags.omega) {
        cfg.schwarzschild.omega = *flags.omega;
        cfg.sds.omega = *flags.omega;
    }
    if (flags.alpha) {
        cfg.schwarzschild.alpha = *flags.alpha;
        cfg.sds.alpha = *flags.alpha;
    }
    if (flags.axis1) cfg.axis1 = svet::axis_from_string(*flags.axis1);
    if (flags.axis2) cfg.axis2 = svet::axis_from_string(*flags.axis2);
    if (flags.audit) cfg.audit = true;
    if (flags.threshold) cfg.threshold = *flags.threshold;
    if (flags.seed) cfg.rng_seed = *flags.seed;
    if (flags.out) cfg.output_path = *flags.out;
    if (flags.workers) cfg.workers = *flags.workers;
    if (flags.restarts) cfg.oracle.restarts = *flags.restarts;
    if (flags.max_iterations) cfg.oracle.max_iterations = *flags.max_iterations;
    if (const auto seed = env_seed()) cfg.rng_seed = *seed;
}

int run_sweep_command(const SweepFlags& flags) {
    std::vector<SweepConfig> configs;
    if (!flags.preset.empty()) {
        configs = svet::figure_preset(flags.preset);
        for (SweepConfig& cfg : configs) {
            if (!flags.out_dir.empty())
                cfg.output_path = flags.out_dir + "/" + cfg.output_path;
            apply_flags(cfg, flags);
        }
    } else {
        SweepConfig cfg;
        if (!flags.config_path.empty())
            cfg = svet::sweep_config_from_json(svet::load_json(flags.config_path));
        apply_flags(cfg, flags);
        if (!flags.out_dir.empty())
            cfg.output_path = flags.out_dir + "/" + cfg.output_path;
        configs.push_back(cfg);
    }

    for (const SweepConfig& cfg : configs) {
        const svet::SweepResult result = svet::run_sweep(cfg);
        std::cout << (cfg.tag.empty() ? std::string("sweep") : cfg.tag) << ": wrote "
                  << cfg.output_path << " and " << svet::summary_path_for(cfg.output_path)
                  << "; S in [" << result.min_value << ", " << result.max_value << "]; "
                  << result.cells_above_threshold << " cell(s) above " << cfg.threshold
                  << "\n";
    }
    return 0;
}

int run_region_report(const std::string& csv_path, const std::string& out_path) {
    const std::string report = svet::region_report(csv_path);
    if (out_path.empty()) {
        std::cout << report;
    } else {
        svet::save_text(out_path, report);
        std::cout << "wrote " << out_path << "\n";
    }
    return 0;
}

struct EvalFlags {
    std::string matrix_path;
    std::string scenario;
    std::optional<int> n, p, q, m;
    std::optional<double> mass, lambda, omega, alpha, temperature;
    bool audit = false;
    std::optional<std::uint64_t> seed;
    std::optional<int> restarts;
    std::optional<int> max_iterations;
};

int run_eval(const EvalFlags& flags) {
    svet::OracleConfig oracle;
    if (flags.restarts) oracle.restarts = *flags.restarts;
    if (flags.max_iterations) oracle.max_iterations = *flags.max_iterations;
    if (flags.seed) oracle.rng_seed = *flags.seed;
    if (const auto seed = env_seed()) oracle.rng_seed = *seed;

    nlohmann::json output;
    if (!flags.matrix_path.empty()) {
        const svet::DensityOperator rho =
            svet::density_from_json(svet::load_json(flags.matrix_path));
        const svet::ValidationReport report = svet::validate(rho);
        if (!report.passed())
            throw svet::InvalidConfig(
                "matrix is not a valid density operator (hermiticity defect " +
                std::to_string(report.hermiticity_defect) + ", trace defect " +
                std::to_string(report.trace_defect) + ", min eigenvalue " +
                std::to_string(report.min_eigenvalue) + ")");
        const svet::SvetlichnyResult result = svet::svetlichny_value(rho, oracle);
        output = svet::to_json(result);
        // On the analytic branches the maximizer has not run yet; audit
        // cross-checks it. On the numeric branch the value already is the
        // maximizer's, so there is nothing independent to compare.
        if (flags.audit && result.branch != svet::Branch::numeric) {
            const svet::OracleOutcome outcome = svet::maximize(rho, oracle);
            output["oracle_value"] = outcome.value;
            output["oracle_gap"] = output["value"].get<double>() - outcome.value;
        }
    } else if (flags.scenario == "schwarzschild") {
        svet::SchwarzschildScenario sc;
        if (flags.alpha) sc.alpha = *flags.alpha;
        if (flags.omega) sc.omega = *flags.omega;
        if (flags.temperature) sc.temperature = *flags.temperature;
        if (flags.mass) sc.mass = *flags.mass;
        if (!flags.temperature && !flags.mass) sc.temperature = 1.0;
        if (flags.n) sc.n = *flags.n;
        if (flags.p) sc.p = *flags.p;
        if (flags.q) sc.q = *flags.q;
        output = svet::to_json(svet::svetlichny_schwarzschild(sc));
        if (flags.audit) {
            const svet::OracleOutcome outcome =
                svet::maximize(svet::reduce_schwarzschild(sc), oracle);
            output["oracle_value"] = outcome.value;
            output["oracle_gap"] = output["value"].get<double>() - outcome.value;
        }
    } else if (flags.scenario == "sds") {
        svet::SdSScenario sc;
        if (flags.alpha) sc.alpha = *flags.alpha;
        if (flags.omega) sc.omega = *flags.omega;
        if (flags.mass) sc.mass = *flags.mass;
        if (flags.lambda) sc.lambda_cosmo = *flags.lambda;
        if (flags.n) sc.n = *flags.n;
        if (flags.m) sc.m = *flags.m;
        output = svet::to_json(svet::svetlichny_sds(sc));
        if (flags.audit) {
            const svet::OracleOutcome outcome =
                svet::maximize(svet::build_sds_state(sc), oracle);
            output["oracle_value"] = outcome.value;
            output["oracle_gap"] = output["value"].get<double>() - outcome.value;
        }
    } else {
        throw svet::InvalidConfig(
            "eval needs --matrix FILE or --scenario schwarzschild|sds");
    }
    std::cout << output.dump(2) << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "svet: maximal Svetlichny-inequality violation for four-qubit states,\n"
        "with closed forms for X-type states, a numeric maximizer, and horizon\n"
        "scenario parameter sweeps"};
    app.require_subcommand(1);

    SweepFlags sweep_flags;
    CLI::App* sweep = app.add_subcommand("sweep", "Run a parameter grid to CSV + JSON");
    sweep->add_option("--scenario", sweep_flags.scenario,
                      "schwarzschild or sds");
    sweep->add_option("--preset", sweep_flags.preset,
                      "Panel family: fig2, fig3, fig4, fig5 or fig6");
    sweep->add_option("--config", sweep_flags.config_path,
                      "JSON config file (flags override its values)");
    sweep->add_option("--n", sweep_flags.n, "Squeezed modes (first horizon)");
    sweep->add_option("--p", sweep_flags.p, "Kept exterior modes");
    sweep->add_option("--q", sweep_flags.q, "Kept interior modes");
    sweep->add_option("--m", sweep_flags.m, "Squeezed modes (second horizon)");
    sweep->add_option("--mass", sweep_flags.mass, "Black hole mass M");
    sweep->add_option("--lambda", sweep_flags.lambda, "Cosmological constant");
    sweep->add_option("--omega", sweep_flags.omega, "Mode frequency");
    sweep->add_option("--alpha", sweep_flags.alpha, "Initial-state parameter");
    sweep->add_option("--T", sweep_flags.temperature, "Fixed temperature");
    sweep->add_option("--axis1", sweep_flags.axis1, "First axis name:min:max:steps");
    sweep->add_option("--axis2", sweep_flags.axis2, "Second axis name:min:max:steps");
    sweep->add_flag("--audit", sweep_flags.audit,
                    "Cross-check every cell against the numeric maximizer");
    sweep->add_option("--threshold", sweep_flags.threshold,
                      "Genuine-nonlocality line (default 8)");
    sweep->add_option("--seed", sweep_flags.seed,
                      "RNG seed (SVET_SEED env var overrides)");
    sweep->add_option("--out", sweep_flags.out, "Output CSV path");
    sweep->add_option("--out-dir", sweep_flags.out_dir,
                      "Directory for preset outputs");
    sweep->add_option("--workers", sweep_flags.workers, "Worker thread count");
    add_oracle_flags(sweep, sweep_flags);

    std::string report_csv, report_out;
    CLI::App* report = app.add_subcommand(
        "region-report", "Report connected regions with S > 8 in a sweep CSV");
    report->add_option("csv", report_csv, "CSV produced by sweep")->required();
    report->add_option("--out", report_out, "Write JSON here instead of stdout");

    EvalFlags eval_flags;
    CLI::App* eval = app.add_subcommand(
        "eval", "Evaluate one state (JSON matrix or named scenario)");
    eval->add_option("--matrix", eval_flags.matrix_path,
                     "Density operator JSON ({\"dim\":16,\"re\":...,\"im\":...})");
    eval->add_option("--scenario", eval_flags.scenario, "schwarzschild or sds");
    eval->add_option("--n", eval_flags.n, "Squeezed modes (first horizon)");
    eval->add_option("--p", eval_flags.p, "Kept exterior modes");
    eval->add_option("--q", eval_flags.q, "Kept interior modes");
    eval->add_option("--m", eval_flags.m, "Squeezed modes (second horizon)");
    eval->add_option("--mass", eval_flags.mass, "Black hole mass M");
    eval->add_option("--lambda", eval_flags.lambda, "Cosmological constant");
    eval->add_option("--omega", eval_flags.omega, "Mode frequency");
    eval->add_option("--alpha", eval_flags.alpha, "Initial-state parameter");
    eval->add_option("--T", eval_flags.temperature, "Temperature");
    eval->add_flag("--audit", eval_flags.audit,
                   "Also run the numeric maximizer and report the gap");
    eval->add_option("--seed", eval_flags.seed,
                     "RNG seed (SVET_SEED env var overrides)");
    eval->add_option("--restarts", eval_flags.restarts, "Maximizer restarts");
    eval->add_option("--max-iterations", eval_flags.max_iterations,
                     "Iteration cap per restart");

    CLI11_PARSE(app, argc, argv);

    try {
        if (sweep->parsed()) return run_sweep_command(sweep_flags);
        if (report->parsed()) return run_region_report(report_csv, report_out);
        if (eval->parsed()) return run_eval(eval_flags);
    } catch (const svet::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
