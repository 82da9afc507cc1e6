#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "biped_commands.hpp"

namespace {

using biped::cli::Format;
using biped::cli::RunConfig;

struct Common {
    std::string model = "expanded";
    bool json = false;
    bool csv = false;
};

void add_common(CLI::App& sub, RunConfig& cfg, Common& common) {
    sub.add_option("--model", common.model, "Model form")
        ->check(CLI::IsMember({"full", "expanded"}))
        ->capture_default_str();
    auto* j = sub.add_flag("--json", common.json, "Write JSON");
    auto* c = sub.add_flag("--csv", common.csv, "Write CSV");
    j->excludes(c);
    sub.add_option("--out", cfg.out, "Output path (default: stdout)");
    sub.add_option("--tol-scale", cfg.tol_scale, "Multiply integrator tolerances by this factor")
        ->capture_default_str();
}

int fail(const std::string& stage, const std::string& kind, const std::string& message) {
    std::cerr << biped::cli::error_json(stage, kind, message);
    return biped::cli::exit_code_for(kind);
}

}  // namespace

int main(int argc, char** argv) {
    RunConfig cfg;
    Common common;
    CLI::App app{"Passive compass-gait walker: step map, bifurcation check and walking-cycle continuation."};
    app.require_subcommand(1);
    app.fallthrough();
    app.set_config("--config", "", "TOML/INI file with option defaults; command-line flags take precedence");

    auto* roots = app.add_subcommand("roots", "Step-period roots of the unperturbed walker");
    roots->add_option("--interval", cfg.interval, "Search interval lo hi")->capture_default_str();

    auto* verify = app.add_subcommand("verify", "Bifurcation report: eigenstructure, theta0, Melnikov slope");
    verify->add_option("--theta0-bracket", cfg.theta0_bracket, "Scan bracket for theta0")->capture_default_str();
    verify->add_option("--fd-step", cfg.fd_delta_step, "Delta step of the finite-difference slope oracle")
        ->capture_default_str();
    bool no_fd = false;
    verify->add_flag("--no-fd-oracle", no_fd, "Skip the finite-difference slope oracle");

    double omega = 0.0;
    auto* map = app.add_subcommand("map", "One step of the heelstrike map");
    map->add_option("theta", cfg.theta, "Post-heelstrike stance angle (scaled)")->capture_default_str();
    auto* map_omega = map->add_option("omega", omega, "Post-heelstrike rate (default: on the family)");
    map->add_option("delta", cfg.delta, "Slope parameter")->capture_default_str();

    auto* cont = app.add_subcommand("continue", "Fixed-point branch over a delta grid");
    cont->add_option("--grid", cfg.grid, "Delta values")->capture_default_str();
    cont->add_option("--seed", cfg.seed, "Start guess theta omega (default: family point at theta0)")
        ->expected(2);
    cont->add_flag("--independent", cfg.independent,
                   "Solve every grid point from the seed in parallel instead of following the branch");

    auto* gait = app.add_subcommand("gait", "Multi-step walk from a perturbed fixed point");
    gait->add_option("delta", cfg.gait_delta, "Slope parameter")->capture_default_str();
    gait->add_option("n_steps", cfg.n_steps, "Number of steps")->capture_default_str();
    gait->add_option("perturbation", cfg.perturbation, "Relative offset of the starting stance angle")
        ->capture_default_str();

    double t_end = 0.0;
    double traj_omega = 0.0;
    auto* traj = app.add_subcommand("traj", "Dense trajectory over a fixed horizon, heelstrikes ignored");
    traj->add_option("theta", cfg.theta, "Initial stance angle (scaled)")->capture_default_str();
    auto* traj_omega_opt = traj->add_option("omega", traj_omega, "Initial rate (default: on the family)");
    traj->add_option("delta", cfg.delta, "Slope parameter")->capture_default_str();
    auto* t_end_opt = traj->add_option("t_end", t_end, "Horizon (default: T2)");
    traj->add_option("samples", cfg.samples, "Number of samples")->capture_default_str();

    for (auto* sub : {roots, verify, map, cont, gait, traj}) add_common(*sub, cfg, common);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        return fail("config", "validation_error", e.what());
    }

    for (auto* sub : app.get_subcommands()) cfg.command = sub->get_name();
    if (app.count("--config") > 0) cfg.config_path = app.get_option("--config")->as<std::string>();
    if (map_omega->count() > 0) cfg.omega = omega;
    if (traj_omega_opt->count() > 0) cfg.omega = traj_omega;
    if (t_end_opt->count() > 0) cfg.t_end = t_end;
    cfg.fd_oracle = !no_fd;
    if (common.json) cfg.format = Format::kJson;
    if (common.csv) cfg.format = Format::kCsv;

    biped::cli::CommandResult result;
    try {
        cfg.model = biped::parse_model_form(common.model);
        cfg.threads = biped::cli::thread_cap_from_env();
        result = biped::cli::run(cfg);
    } catch (const biped::Error& e) {
        return fail(e.stage(), e.kind(), e.what());
    } catch (const std::exception& e) {
        return fail(cfg.command, "error", e.what());
    }

    if (cfg.out.empty()) {
        std::cout << result.body << std::flush;
    } else {
        std::ofstream f(cfg.out, std::ios::binary);
        f << result.body;
        if (!f) return fail("output", "validation_error", "cannot write " + cfg.out);
    }
    if (result.failure) return fail(result.failure->stage, result.failure->kind, result.failure->message);
    return 0;
}
