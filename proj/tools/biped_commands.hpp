#pragma once

#include <algorithm>
#include <array>
#include <atomic>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "biped/biped.hpp"

/// Command implementations behind the `biped` tool. Each command renders its
/// whole output as a string so the same code path backs the binary and the
/// tests.
namespace biped::cli {

using nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

enum class Format { kJson, kCsv };

inline std::string_view to_string(Format f) { return f == Format::kJson ? "json" : "csv"; }

struct RunConfig {
    std::string command;
    ModelForm model = ModelForm::kExpanded;
    std::optional<Format> format;  ///< unset: the command's natural format
    std::string out;
    double tol_scale = 1.0;
    std::string config_path;
    unsigned threads = 1;

    // roots
    std::array<double, 2> interval{0.1, 2.0 * std::numbers::pi};
    // verify
    std::array<double, 2> theta0_bracket{melnikov::kTheta0Lo, melnikov::kTheta0Hi};
    bool fd_oracle = true;
    double fd_delta_step = 1e-4;
    // map, traj
    double theta = 1.0;
    std::optional<double> omega;  ///< unset: alpha(T2) * theta
    double delta = 0.0;
    std::optional<double> t_end;  ///< unset: T2
    int samples = 400;
    // continue
    std::vector<double> grid{1e-4, 3e-4, 1e-3, 3e-3, 1e-2};
    std::vector<double> seed;  ///< empty or (theta, omega)
    bool independent = false;
    // gait
    double gait_delta = 1e-2;
    int n_steps = 30;
    double perturbation = 0.02;

    Format effective_format() const {
        if (format) return *format;
        return (command == "continue" || command == "gait" || command == "traj") ? Format::kCsv : Format::kJson;
    }

    double effective_omega() const { return omega ? *omega : closedform::family_slope() * theta; }

    void validate() const {
        const auto bad = [](const std::string& m) { throw PreconditionError("config", m); };
        if (!(tol_scale > 0.0) || !std::isfinite(tol_scale)) bad("--tol-scale must be a positive number");
        if (threads == 0) bad("thread cap must be >= 1");
        if (command == "roots" && !(interval[0] > 0.0 && interval[1] > interval[0])) {
            bad("--interval needs 0 < lo < hi");
        }
        if (command == "verify") {
            if (!(theta0_bracket[0] < theta0_bracket[1])) bad("--theta0-bracket needs lo < hi");
            if (!(fd_delta_step > 0.0)) bad("--fd-step must be positive");
        }
        if (command == "traj") {
            if (t_end && !(*t_end >= 0.0)) bad("t_end must be >= 0");
            if (samples < 2) bad("samples must be >= 2");
        }
        if (command == "continue") {
            if (!seed.empty() && seed.size() != 2) bad("--seed takes exactly two values");
            for (double d : grid) {
                if (!(d > 0.0) || !std::isfinite(d)) bad("grid values must be positive");
            }
        }
        if (command == "gait" && n_steps < 1) bad("n_steps must be >= 1");
    }
};

/// BIPED_SEED_THREADS caps worker threads; default is the hardware count.
inline unsigned thread_cap_from_env() {
    unsigned n = std::max(1u, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("BIPED_SEED_THREADS")) {
        unsigned v = 0;
        const std::string_view s(env);
        const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (ec != std::errc{} || ptr != s.data() + s.size() || v == 0) {
            throw PreconditionError("config", "BIPED_SEED_THREADS must be a positive integer");
        }
        n = std::min(n, v);
    }
    return n;
}

// ---------------------------------------------------------------------------
// Formatting.

/// Shortest representation that reads back to the same double.
inline std::string fmt(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[32];
    const auto r = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, r.ptr);
}

inline std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) {
        if (c == '"') q += '"';
        q += c;
    }
    return q + '"';
}

inline std::string csv_line(const std::vector<std::string>& cells) {
    std::string line;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i) line += ',';
        line += csv_field(cells[i]);
    }
    return line + '\n';
}

inline ordered_json to_json(const SectionPoint& p) { return {{"theta", p.theta}, {"omega", p.omega}}; }
inline ordered_json to_json(const Vec2& v) { return ordered_json::array({v(0), v(1)}); }
inline ordered_json to_json(const Mat2& m) {
    return ordered_json::array({ordered_json::array({m(0, 0), m(0, 1)}), ordered_json::array({m(1, 0), m(1, 1)})});
}
inline ordered_json to_json(const State4& s) {
    return {{"theta", s.theta}, {"theta_dot", s.theta_dot}, {"phi", s.phi}, {"phi_dot", s.phi_dot}};
}
inline ordered_json opt_json(const std::optional<double>& v) { return v ? ordered_json(*v) : ordered_json(nullptr); }
inline ordered_json opt_json(const std::optional<SectionPoint>& v) {
    return v ? to_json(*v) : ordered_json(nullptr);
}

inline std::string dump(const ordered_json& j) { return j.dump(2) + '\n'; }

/// key,value rows for every scalar leaf, keys joined with '.'.
inline void flatten(const ordered_json& j, const std::string& prefix, std::vector<std::array<std::string, 2>>& rows) {
    const auto key = [&](const std::string& k) { return prefix.empty() ? k : prefix + "." + k; };
    if (j.is_object()) {
        for (const auto& [k, v] : j.items()) flatten(v, key(k), rows);
    } else if (j.is_array()) {
        for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], key(std::to_string(i)), rows);
    } else if (j.is_number_float()) {
        rows.push_back({prefix, fmt(j.get<double>())});
    } else if (j.is_string()) {
        rows.push_back({prefix, j.get<std::string>()});
    } else {
        rows.push_back({prefix, j.dump()});
    }
}

inline std::string flat_csv(const ordered_json& j) {
    std::vector<std::array<std::string, 2>> rows;
    flatten(j, "", rows);
    std::string s = csv_line({"key", "value"});
    for (const auto& r : rows) s += csv_line({r[0], r[1]});
    return s;
}

// ---------------------------------------------------------------------------

struct CommandResult {
    std::string body;
    std::optional<melnikov::StageFailure> failure;  ///< exit 3 after emitting body
};

inline poincare::MapOptions map_options(const RunConfig& c, poincare::MapOptions base = {}) {
    base.integrator = base.integrator.scaled(c.tol_scale);
    return base;
}

inline ordered_json integrator_json(const integrate::IntegratorOptions& o) {
    return {{"rel_tol", o.rel_tol}, {"abs_tol", o.abs_tol}, {"event_tol", o.event_tol},
            {"max_step", o.max_step}, {"t_max", o.t_max}};
}

inline ordered_json config_json(const RunConfig& c) {
    ordered_json j = {{"command", c.command},
                      {"model", to_string(c.model)},
                      {"format", to_string(c.effective_format())},
                      {"out", c.out},
                      {"tol_scale", c.tol_scale},
                      {"config", c.config_path}};
    if (c.command == "roots") {
        j["interval"] = c.interval;
    } else if (c.command == "verify") {
        j["theta0_bracket"] = c.theta0_bracket;
        j["fd_oracle"] = c.fd_oracle;
        j["fd_delta_step"] = c.fd_delta_step;
        j["integrator"] = integrator_json(map_options(c, poincare::tight_map_options()).integrator);
    } else if (c.command == "map" || c.command == "traj") {
        j["theta"] = c.theta;
        j["omega"] = c.effective_omega();
        j["delta"] = c.delta;
        if (c.command == "traj") {
            j["t_end"] = c.t_end ? *c.t_end : closedform::unperturbed_period();
            j["samples"] = c.samples;
        }
        j["integrator"] = integrator_json(map_options(c).integrator);
    } else if (c.command == "continue") {
        j["grid"] = c.grid;
        j["seed"] = c.seed;
        j["independent"] = c.independent;
        j["threads"] = c.threads;
        j["integrator"] = integrator_json(map_options(c, poincare::tight_map_options()).integrator);
    } else if (c.command == "gait") {
        j["delta"] = c.gait_delta;
        j["n_steps"] = c.n_steps;
        j["perturbation"] = c.perturbation;
        j["integrator"] = integrator_json(map_options(c, poincare::tight_map_options()).integrator);
    }
    return j;
}

inline ordered_json header(const RunConfig& c) {
    return {{"schema_version", kSchemaVersion}, {"config", config_json(c)}};
}

// ---------------------------------------------------------------------------
// roots

inline CommandResult cmd_roots(const RunConfig& c) {
    const auto roots = closedform::find_step_period_roots(c.interval[0], c.interval[1]);
    ordered_json j = header(c);
    ordered_json list = ordered_json::array();
    std::optional<double> t1;
    std::optional<double> t2;
    for (double t : roots) {
        // T = pi is a root of the period equation but not an anthropomorphic gait
        const bool pi_root = std::abs(t - std::numbers::pi) < 1e-6;
        if (pi_root && !t1) t1 = t;
        if (!pi_root && !t2) t2 = t;
        list.push_back({{"T", t},
                        {"residual", closedform::step_period_residual(t)},
                        {"alpha", closedform::alpha(t)},
                        {"non_anthropomorphic", pi_root}});
    }
    j["roots"] = list;
    j["T1"] = t1 ? ordered_json(*t1) : ordered_json(nullptr);
    j["T2"] = t2 ? ordered_json(*t2) : ordered_json(nullptr);
    j["alpha_T2"] = t2 ? ordered_json(closedform::alpha(*t2)) : ordered_json(nullptr);

    if (c.effective_format() == Format::kJson) return {dump(j), {}};
    std::string s = csv_line({"T", "residual", "alpha", "non_anthropomorphic"});
    for (const auto& r : list) {
        s += csv_line({fmt(r["T"].get<double>()), fmt(r["residual"].get<double>()), fmt(r["alpha"].get<double>()),
                       r["non_anthropomorphic"].get<bool>() ? "true" : "false"});
    }
    return {s, {}};
}

// ---------------------------------------------------------------------------
// verify

inline ordered_json report_json(const melnikov::BipedReport& rep) {
    const auto& r = rep.core;
    const auto& x = rep.extras;
    ordered_json j;
    j["T1"] = x.t1;
    j["T2"] = x.t2;
    j["alpha_T1"] = x.alpha_t1;
    j["alpha_T2"] = x.alpha_t2;
    j["reference_theta"] = r.reference_s;
    j["jacobian"] = to_json(r.jacobian);
    if (r.eigen) {
        j["rho"] = r.eigen->rho;
        j["z"] = to_json(r.eigen->z);
        j["y"] = to_json(r.eigen->y);
        j["z_tilde"] = to_json(r.eigen->z_tilde);
        j["y_tilde"] = to_json(r.eigen->y_tilde);
    } else {
        for (const char* k : {"rho", "z", "y", "z_tilde", "y_tilde"}) j[k] = nullptr;
    }
    j["z_family_independence"] = r.z_family_independence;
    j["necessary_cubic"] = {{"constant", x.cubic.constant},
                            {"cubic", x.cubic.cubic},
                            {"structure_residual", x.cubic.structure_residual}};
    j["fn_at_zero"] = opt_json(r.fn_at_zero);
    j["theta0"] = opt_json(r.theta0);
    j["fixed_point"] = opt_json(r.fixed_point);
    j["h_coefficients_T2"] = x.h_coefficients_t2;
    j["f_coefficients_T2"] = x.f_coefficients_t2;
    j["dT_dstate_at_theta1"] = to_json(x.dT_dstate_at_1);
    j["dP_ddelta_at_theta0"] = to_json(x.dP_ddelta_at_theta0);
    j["mixed_derivative_at_theta0"] = to_json(x.mixed_at_theta0);
    j["mixed_derivative_frozen_period_at_theta0"] = to_json(x.mixed_frozen_period_at_theta0);
    j["melnikov_slope"] = opt_json(r.melnikov_slope);
    j["melnikov_slope_fd"] = opt_json(x.melnikov_slope_fd);
    j["verdicts"] = {{"stab1", r.verdicts.stab1},
                     {"necessary", r.verdicts.necessary},
                     {"sufficient", r.verdicts.sufficient},
                     {"stab2", r.verdicts.stab2}};
    ordered_json fails = ordered_json::array();
    for (const auto& f : r.failures) fails.push_back({{"stage", f.stage}, {"kind", f.kind}, {"message", f.message}});
    j["failures"] = fails;
    j["incomplete"] = r.incomplete;
    return j;
}

inline CommandResult cmd_verify(const RunConfig& c) {
    melnikov::BipedReportOptions o;
    o.report.theta0_lo = c.theta0_bracket[0];
    o.report.theta0_hi = c.theta0_bracket[1];
    o.with_fd_oracle = c.fd_oracle;
    o.fd_delta_step = c.fd_delta_step;
    o.fd_map = map_options(c, poincare::tight_map_options());
    const auto rep = melnikov::build_biped_report(o);

    ordered_json j = header(c);
    j["report"] = report_json(rep);
    CommandResult out{c.effective_format() == Format::kJson ? dump(j) : flat_csv(j), {}};
    if (!rep.core.failures.empty()) out.failure = rep.core.failures.front();
    return out;
}

// ---------------------------------------------------------------------------
// map

inline CommandResult cmd_map(const RunConfig& c) {
    const SectionPoint p{c.theta, c.effective_omega()};
    const auto r = poincare::poincare_map(p, c.delta, c.model, map_options(c));
    if (c.effective_format() == Format::kCsv) {
        std::string s = csv_line({"theta", "omega", "delta", "image_theta", "image_omega", "period", "guard_rate",
                                  "n_rejected_grazings"});
        s += csv_line({fmt(p.theta), fmt(p.omega), fmt(c.delta), fmt(r.image.theta), fmt(r.image.omega),
                       fmt(r.period), fmt(r.guard_rate), std::to_string(r.n_rejected_grazings)});
        return {s, {}};
    }
    ordered_json j = header(c);
    j["image"] = to_json(r.image);
    j["period"] = r.period;
    j["pre_jump_state"] = to_json(r.pre_jump_state);
    j["guard_rate"] = r.guard_rate;
    j["n_rejected_grazings"] = r.n_rejected_grazings;
    return {dump(j), {}};
}

// ---------------------------------------------------------------------------
// continue

/// Every grid point solved from the same seed, `threads` at a time. Result
/// order follows the grid, so output does not depend on scheduling.
inline continuation::Branch independent_branch(const std::vector<double>& grid, ModelForm model,
                                               const SectionPoint& seed, const continuation::NewtonOptions& opts,
                                               unsigned threads) {
    std::vector<std::optional<continuation::BranchPoint>> pts(grid.size());
    std::vector<std::optional<continuation::BranchFailure>> errs(grid.size());
    std::atomic<std::size_t> next{0};
    const auto work = [&] {
        for (std::size_t i = next++; i < grid.size(); i = next++) {
            try {
                pts[i] = continuation::newton_fixed_point(grid[i], seed, model, opts);
            } catch (const Error& e) {
                errs[i] = continuation::BranchFailure{grid[i], e.kind(), e.what()};
            }
        }
    };
    const unsigned n = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(1, grid.size())));
    std::vector<std::jthread> pool;
    for (unsigned k = 1; k < n; ++k) pool.emplace_back(work);
    work();
    pool.clear();

    continuation::Branch b;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        if (pts[i]) b.points.push_back(*pts[i]);
        if (errs[i] && !b.failure) b.failure = errs[i];
    }
    return b;
}

inline CommandResult cmd_continue(const RunConfig& c) {
    std::vector<double> grid = c.grid;
    continuation::NewtonOptions o;
    o.map = map_options(c, poincare::tight_map_options());
    const SectionPoint seed = c.seed.empty() ? continuation::default_branch_seed() : SectionPoint{c.seed[0], c.seed[1]};
    continuation::Branch b;
    if (c.independent) {
        b = independent_branch(grid, c.model, seed, o, c.threads);
    } else {
        std::sort(grid.begin(), grid.end());
        b = continuation::continue_branch(grid, c.model, seed, o);
    }

    std::optional<double> slope;
    if (b.points.size() >= 3) slope = continuation::floquet_slope(b.points);

    CommandResult out;
    if (b.failure) out.failure = melnikov::StageFailure{"continuation", b.failure->kind, b.failure->message};

    if (c.effective_format() == Format::kCsv) {
        std::string s = csv_line({"delta", "theta", "omega", "period", "rho_delta", "other_multiplier",
                                  "spectral_radius", "complex_pair", "newton_iters", "residual"});
        for (const auto& p : b.points) {
            s += csv_line({fmt(p.delta), fmt(p.fixed_point.theta), fmt(p.fixed_point.omega), fmt(p.period),
                           fmt(p.rho_delta), fmt(p.other_multiplier), fmt(p.spectral_radius),
                           p.complex_pair ? "true" : "false", std::to_string(p.newton_iters), fmt(p.residual)});
        }
        out.body = s;
        return out;
    }
    ordered_json j = header(c);
    j["seed"] = to_json(seed);
    ordered_json pts = ordered_json::array();
    for (const auto& p : b.points) {
        pts.push_back({{"delta", p.delta},
                       {"fixed_point", to_json(p.fixed_point)},
                       {"period", p.period},
                       {"rho_delta", p.rho_delta},
                       {"other_multiplier", p.other_multiplier},
                       {"spectral_radius", p.spectral_radius},
                       {"complex_pair", p.complex_pair},
                       {"jacobian", to_json(p.jacobian)},
                       {"newton_iters", p.newton_iters},
                       {"residual", p.residual}});
    }
    j["points"] = pts;
    j["floquet_slope"] = opt_json(slope);
    j["failure"] = b.failure ? ordered_json{{"delta", b.failure->delta},
                                            {"kind", b.failure->kind},
                                            {"message", b.failure->message}}
                             : ordered_json(nullptr);
    out.body = dump(j);
    return out;
}

// ---------------------------------------------------------------------------
// gait

/// Starts at the fixed point with theta scaled by (1 + perturbation).
inline CommandResult cmd_gait(const RunConfig& c) {
    continuation::NewtonOptions o;
    o.map = map_options(c, poincare::tight_map_options());
    const auto fp = continuation::newton_fixed_point(c.gait_delta, continuation::default_branch_seed(), c.model, o);
    const SectionPoint start{fp.fixed_point.theta * (1.0 + c.perturbation), fp.fixed_point.omega};
    const auto tr = continuation::simulate_gait(c.gait_delta, start, c.n_steps, c.model, o.map);

    std::optional<double> ratio;
    try {
        ratio = continuation::estimate_contraction_ratio(tr.metric);
    } catch (const PreconditionError&) {
    }

    ordered_json summary = {{"fixed_point", to_json(fp.fixed_point)},
                            {"period", fp.period},
                            {"rho_delta", fp.rho_delta},
                            {"spectral_radius", fp.spectral_radius},
                            {"complex_pair", fp.complex_pair},
                            {"start", to_json(start)},
                            {"steps_completed", tr.steps.size()},
                            {"contraction_ratio", opt_json(ratio)},
                            {"fell", tr.fell},
                            {"fall_reason", tr.fall_reason}};

    if (c.effective_format() == Format::kCsv) {
        std::vector<std::array<std::string, 2>> rows;
        flatten(summary, "", rows);
        std::string s;
        for (const auto& r : rows) s += "# " + r[0] + "=" + r[1] + '\n';
        s += csv_line({"step", "theta", "omega", "period", "step_length", "metric"});
        for (std::size_t k = 0; k < tr.steps.size(); ++k) {
            const auto& st = tr.steps[k];
            s += csv_line({std::to_string(st.index), fmt(st.image.theta), fmt(st.image.omega), fmt(st.period),
                           fmt(st.step_length), fmt(tr.metric[k])});
        }
        return {s, {}};
    }
    ordered_json j = header(c);
    j["summary"] = summary;
    ordered_json steps = ordered_json::array();
    for (std::size_t k = 0; k < tr.steps.size(); ++k) {
        const auto& st = tr.steps[k];
        steps.push_back({{"step", st.index},
                         {"image", to_json(st.image)},
                         {"period", st.period},
                         {"step_length", st.step_length},
                         {"metric", tr.metric[k]}});
    }
    j["steps"] = steps;
    return {dump(j), {}};
}

// ---------------------------------------------------------------------------
// traj

/// Fixed-horizon trajectory from the post-heelstrike state over (theta,
/// omega), heelstrikes ignored. States are written in scaled variables.
inline CommandResult cmd_traj(const RunConfig& c) {
    const SectionPoint p{c.theta, c.effective_omega()};
    const SlopeParam slope(c.delta);
    const double t_end = c.t_end ? *c.t_end : closedform::unperturbed_period();
    const auto s0 = poincare::initial_state(p, c.delta, c.model);
    auto iopts = map_options(c).integrator;

    std::vector<integrate::Trajectory::Sample> samples;
    if (c.model == ModelForm::kExpanded) {
        const double d = c.delta;
        auto field = [d](double, const State4& s) { return dynamics::eval_expanded_field(s, d); };
        samples = integrate::integrate_fixed_horizon(field, s0, t_end, iopts).dense.sample(c.samples);
    } else {
        const double g = slope.gamma();
        auto field = [g](double, const State4& s) { return dynamics::eval_full_field(s, g); };
        iopts.abs_tol *= slope.angle_scale();
        samples = integrate::integrate_fixed_horizon(field, s0, t_end, iopts).dense.sample(c.samples);
        for (auto& s : samples) s.state = dynamics::to_scaled(s.state, slope);
    }

    if (c.effective_format() == Format::kCsv) {
        std::string s = csv_line({"t", "theta", "theta_dot", "phi", "phi_dot", "guard"});
        for (const auto& q : samples) {
            s += csv_line({fmt(q.t), fmt(q.state.theta), fmt(q.state.theta_dot), fmt(q.state.phi),
                           fmt(q.state.phi_dot), fmt(dynamics::guard(q.state).value)});
        }
        return {s, {}};
    }
    ordered_json j = header(c);
    ordered_json rows = ordered_json::array();
    for (const auto& q : samples) {
        ordered_json r = to_json(q.state);
        r["t"] = q.t;
        r["guard"] = dynamics::guard(q.state).value;
        rows.push_back(r);
    }
    j["samples"] = rows;
    return {dump(j), {}};
}

inline CommandResult run(const RunConfig& c) {
    c.validate();
    if (c.command == "roots") return cmd_roots(c);
    if (c.command == "verify") return cmd_verify(c);
    if (c.command == "map") return cmd_map(c);
    if (c.command == "continue") return cmd_continue(c);
    if (c.command == "gait") return cmd_gait(c);
    if (c.command == "traj") return cmd_traj(c);
    throw PreconditionError("config", "unknown command '" + c.command + "'");
}

/// 2 for bad input, 3 for a numerical failure.
inline int exit_code_for(const std::string& kind) {
    return (kind == "precondition_error" || kind == "domain_error" || kind == "validation_error") ? 2 : 3;
}

inline std::string error_json(const std::string& stage, const std::string& kind, const std::string& message) {
    ordered_json j = {{"schema_version", kSchemaVersion},
                      {"error", {{"stage", stage}, {"kind", kind}, {"message", message}}}};
    return j.dump() + '\n';
}

}  // namespace biped::cli
