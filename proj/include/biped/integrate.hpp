#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <concepts>
#include <functional>
#include <limits>
#include <optional>
#include <vector>

#include <boost/numeric/odeint.hpp>

#include "biped/detail/roots.hpp"
#include "biped/dynamics.hpp"
#include "biped/errors.hpp"
#include "biped/types.hpp"

/// Adaptive Dormand-Prince 5(4) integration with dense output, and location
/// of the next accepted heelstrike.
namespace biped::integrate {

/// A (possibly time-dependent) vector field on State4.
template <class F>
concept VectorField = std::invocable<const F&, double, const State4&> &&
                      std::convertible_to<std::invoke_result_t<const F&, double, const State4&>, State4>;

struct IntegratorOptions {
    double rel_tol = 1e-10;
    double abs_tol = 1e-10;
    double max_step = 0.1;
    double event_tol = 1e-12;
    double t_max = 11.5;  // about three unperturbed step periods
    std::size_t max_steps = 1'000'000;
    /// The step is abandoned as "no heelstrike" once |theta| exceeds this.
    double theta_bound = std::numeric_limits<double>::infinity();
    dynamics::HeelstrikeRule rule{};
    bool record_dense = false;

    void validate() const {
        if (!(rel_tol > 0.0) || !(abs_tol > 0.0) || !(max_step > 0.0) || !(event_tol > 0.0) ||
            !(t_max > 0.0) || max_steps == 0 || !(theta_bound > 0.0) || !(rule.theta_margin_fraction >= 0.0) ||
            !(rule.grazing_rate_fraction >= 0.0)) {
            throw PreconditionError("integrate", "integrator tolerances and horizon must be positive");
        }
    }

    /// Copy with rel/abs/event tolerances multiplied by `factor`.
    IntegratorOptions scaled(double factor) const {
        IntegratorOptions o = *this;
        o.rel_tol *= factor;
        o.abs_tol *= factor;
        o.event_tol *= factor;
        return o;
    }
};

namespace detail {

using Array4 = std::array<double, 4>;
using Dopri5 = boost::numeric::odeint::runge_kutta_dopri5<Array4>;

template <class F>
auto odeint_system(const F& field) {
    return [&field](const Array4& x, Array4& dxdt, double t) {
        dxdt = static_cast<State4>(field(t, State4::from_array(x))).to_array();
    };
}

/// Controlled integration of `field` from (t0, x0) to t1, returning the state.
template <class F>
State4 advance(const F& field, const State4& x0, double t0, double t1, const IntegratorOptions& opts) {
    namespace odeint = boost::numeric::odeint;
    if (t1 == t0) return x0;
    Array4 x = x0.to_array();
    auto stepper = odeint::make_controlled(opts.abs_tol, opts.rel_tol, opts.max_step, Dopri5{});
    const double dt0 = std::min(opts.max_step, t1 - t0);
    try {
        odeint::integrate_adaptive(stepper, odeint_system(field), x, t0, t1, dt0);
    } catch (const odeint::step_adjustment_error& e) {
        throw IntegrationError("integrate", e.what());
    } catch (const odeint::no_progress_error& e) {
        throw IntegrationError("integrate", e.what());
    }
    const State4 out = State4::from_array(x);
    if (!out.is_finite()) throw IntegrationError("integrate", "state became non-finite");
    return out;
}

}  // namespace detail

/// Piecewise record of an integration: the accepted step nodes. Evaluating
/// between nodes re-integrates from the preceding node at the stored
/// tolerances, so queries are as accurate as the original run.
class Trajectory {
public:
    using Field = std::function<State4(double, const State4&)>;

    Trajectory(Field field, IntegratorOptions opts) : field_(std::move(field)), opts_(opts) {}

    void push(double t, const State4& x) {
        times_.push_back(t);
        states_.push_back(x);
    }

    double t_begin() const { return times_.front(); }
    double t_end() const { return times_.back(); }
    std::size_t size() const { return times_.size(); }
    const std::vector<double>& times() const { return times_; }
    const std::vector<State4>& states() const { return states_; }

    State4 at(double t) const {
        if (times_.empty() || t < t_begin() || t > t_end()) {
            throw DomainError("integrate", "trajectory queried outside its time span");
        }
        const auto it = std::upper_bound(times_.begin(), times_.end(), t);
        const auto k = static_cast<std::size_t>(std::distance(times_.begin(), it)) - 1;
        if (times_[k] == t) return states_[k];
        return detail::advance(field_, states_[k], times_[k], t, opts_);
    }

    struct Sample {
        double t;
        State4 state;
    };

    /// `n` samples uniformly spaced over the span, endpoints included.
    std::vector<Sample> sample(std::size_t n) const {
        std::vector<Sample> out;
        if (n == 0) return out;
        if (n == 1) return {{t_begin(), states_.front()}};
        out.reserve(n);
        const double span = t_end() - t_begin();
        for (std::size_t i = 0; i < n; ++i) {
            const double t = (i + 1 == n) ? t_end() : t_begin() + span * static_cast<double>(i) / (n - 1);
            out.push_back({t, at(t)});
        }
        return out;
    }

private:
    Field field_;
    IntegratorOptions opts_;
    std::vector<double> times_;
    std::vector<State4> states_;
};

struct EventOutcome {
    double t_event = 0.0;
    State4 state_at_event{};
    double guard_rate = 0.0;
    int n_rejected_grazings = 0;
    std::optional<Trajectory> dense;
};

/// Integrates from s0 to the first accepted heelstrike.
///
/// Guard sign changes are detected over accepted steps, bracketed on the
/// dense output and refined with TOMS 748 to `event_tol`; the event state
/// is then recomputed by a controlled integration from the step start and
/// polished with a Newton correction on the guard. Crossings that fail
/// `opts.rule` are counted as grazings and skipped. s0 may lie on the
/// guard: detection starts once the guard value leaves zero.
template <VectorField F>
EventOutcome integrate_to_heelstrike(const F& field, const State4& s0, const IntegratorOptions& opts) {
    namespace odeint = boost::numeric::odeint;
    opts.validate();
    if (!s0.is_finite()) throw DomainError("integrate", "non-finite initial state");

    auto sys = detail::odeint_system(field);
    auto stepper = odeint::make_dense_output(opts.abs_tol, opts.rel_tol, opts.max_step, detail::Dopri5{});
    stepper.initialize(s0.to_array(), 0.0, std::min(1e-3, opts.max_step));

    EventOutcome out;
    if (opts.record_dense) {
        out.dense.emplace(Trajectory::Field(field), opts);
        out.dense->push(0.0, s0);
    }
    const double theta_start = std::abs(s0.theta);
    double g_prev = dynamics::guard(s0).value;
    std::size_t steps = 0;

    try {
        while (stepper.current_time() < opts.t_max) {
            if (++steps > opts.max_steps) throw IntegrationError("integrate", "step budget exhausted");
            const auto [t0, t1] = stepper.do_step(sys);
            if (!(t1 > t0)) throw IntegrationError("integrate", "step size underflow");
            const State4 x1 = State4::from_array(stepper.current_state());
            if (!x1.is_finite()) throw IntegrationError("integrate", "state became non-finite");
            if (std::abs(x1.theta) > opts.theta_bound) {
                throw NoHeelstrikeError("integrate", "stance angle left the admissible range before heelstrike");
            }
            const double g1 = dynamics::guard(x1).value;

            if (g_prev != 0.0 && (g1 == 0.0 || std::signbit(g1) != std::signbit(g_prev))) {
                const State4 x0 = State4::from_array(stepper.previous_state());
                auto g_dense = [&](double t) {
                    detail::Array4 x;
                    stepper.calc_state(t, x);
                    return dynamics::guard(State4::from_array(x)).value;
                };
                double tc = biped::detail::refine_root(g_dense, t0, t1, opts.event_tol, "integrate");
                State4 xc = detail::advance(field, x0, t0, tc, opts);
                for (int it = 0; it < 3; ++it) {
                    const auto gv = dynamics::guard(xc);
                    const auto dx = static_cast<State4>(field(tc, xc));
                    const double rate = dx.phi - 2.0 * dx.theta;
                    if (rate == 0.0) break;
                    const double corr = gv.value / rate;
                    if (std::abs(corr) > (t1 - t0) || std::abs(corr) <= 0.1 * opts.event_tol) break;
                    tc -= corr;
                    xc = detail::advance(field, x0, t0, tc, opts);
                }
                const auto dxc = static_cast<State4>(field(tc, xc));
                const double rate = dxc.phi - 2.0 * dxc.theta;
                if (tc <= opts.t_max && opts.rule.accepts(theta_start, xc.theta, rate)) {
                    out.t_event = tc;
                    out.state_at_event = xc;
                    out.guard_rate = rate;
                    if (out.dense) out.dense->push(tc, xc);
                    return out;
                }
                ++out.n_rejected_grazings;
            }
            if (out.dense) out.dense->push(t1, x1);
            g_prev = g1;
        }
    } catch (const odeint::step_adjustment_error& e) {
        throw IntegrationError("integrate", e.what());
    } catch (const odeint::no_progress_error& e) {
        throw IntegrationError("integrate", e.what());
    }
    throw NoHeelstrikeError("integrate", "no accepted heelstrike before t_max");
}

struct FixedHorizonResult {
    State4 final_state{};
    Trajectory dense;
};

/// Integrates over [0, t_end]; the dense trajectory covers the same span.
template <VectorField F>
FixedHorizonResult integrate_fixed_horizon(const F& field, const State4& s0, double t_end,
                                           const IntegratorOptions& opts) {
    namespace odeint = boost::numeric::odeint;
    opts.validate();
    if (!s0.is_finite()) throw DomainError("integrate", "non-finite initial state");
    if (!(t_end >= 0.0) || !std::isfinite(t_end)) throw DomainError("integrate", "t_end must be >= 0");

    FixedHorizonResult out{s0, Trajectory(Trajectory::Field(field), opts)};
    out.dense.push(0.0, s0);
    if (t_end == 0.0) return out;

    auto sys = detail::odeint_system(field);
    auto stepper = odeint::make_dense_output(opts.abs_tol, opts.rel_tol, opts.max_step, detail::Dopri5{});
    stepper.initialize(s0.to_array(), 0.0, std::min({1e-3, opts.max_step, t_end}));
    std::size_t steps = 0;
    try {
        while (true) {
            if (++steps > opts.max_steps) throw IntegrationError("integrate", "step budget exhausted");
            const auto [t0, t1] = stepper.do_step(sys);
            if (!(t1 > t0)) throw IntegrationError("integrate", "step size underflow");
            if (t1 >= t_end) {
                const State4 x0 = State4::from_array(stepper.previous_state());
                out.final_state = detail::advance(field, x0, t0, t_end, opts);
                out.dense.push(t_end, out.final_state);
                return out;
            }
            const State4 x1 = State4::from_array(stepper.current_state());
            if (!x1.is_finite()) throw IntegrationError("integrate", "state became non-finite");
            out.dense.push(t1, x1);
        }
    } catch (const odeint::step_adjustment_error& e) {
        throw IntegrationError("integrate", e.what());
    } catch (const odeint::no_progress_error& e) {
        throw IntegrationError("integrate", e.what());
    }
}

}  // namespace biped::integrate
