#pragma once

#include <cmath>
#include <optional>
#include <string>

#include "biped/closedform.hpp"
#include "biped/dynamics.hpp"
#include "biped/errors.hpp"
#include "biped/integrate.hpp"
#include "biped/types.hpp"

/// The heelstrike Poincare map (theta, omega) -> P(theta, omega, delta) on
/// the post-impact section, its time of flight and the first derivatives
/// the bifurcation analysis needs.
///
/// Section coordinates are always the scaled ones of the expanded model.
/// For the full model the point is multiplied by sqrt(delta) before
/// integration and divided by it afterwards.
namespace biped::poincare {

struct MapOptions {
    integrate::IntegratorOptions integrator{};
    /// Relative step for finite differences in the section coordinates.
    double fd_step = 1e-6;
};

/// Map options at the tight tolerance used for finite-difference derivatives.
inline MapOptions tight_map_options() {
    MapOptions o;
    o.integrator.rel_tol = 1e-12;
    o.integrator.abs_tol = 1e-12;
    o.integrator.event_tol = 1e-13;
    return o;
}

struct StepResult {
    SectionPoint image{};
    double period = 0.0;
    /// State just before the heelstrike, in scaled variables.
    State4 pre_jump_state{};
    double guard_rate = 0.0;
    int n_rejected_grazings = 0;
    /// Dense trajectory in the model's own variables (original angles for
    /// the full model), present when requested in the options.
    std::optional<integrate::Trajectory> dense;
};

/// Post-heelstrike state whose section coordinates are p: the inter-leg
/// angle and its rate are slaved to (theta, omega) by the jump map.
/// Returned in the model's own variables.
inline State4 initial_state(const SectionPoint& p, double delta, ModelForm model) {
    const SlopeParam slope(delta);
    if (model == ModelForm::kExpanded) {
        return {p.theta, p.omega, 2.0 * p.theta, 2.0 * delta * p.theta * p.theta * p.omega};
    }
    if (delta == 0.0) throw DomainError("poincare", "the full model needs delta > 0 for the scaling");
    const double k = slope.angle_scale();
    const double th = k * p.theta;
    const double om = k * p.omega;
    return {th, om, 2.0 * th, (1.0 - std::cos(2.0 * th)) * om};
}

namespace detail {

inline void require_point(const SectionPoint& p) {
    if (!p.is_finite()) throw DomainError("poincare", "non-finite section point");
    if (p.theta == 0.0 && p.omega == 0.0) {
        throw DomainError("poincare", "the map is undefined at the rest state (0, 0)");
    }
}

}  // namespace detail

/// One application of the Poincare map.
inline StepResult poincare_map(const SectionPoint& p, double delta, ModelForm model, const MapOptions& opts = {}) {
    detail::require_point(p);
    const SlopeParam slope(delta);
    const State4 s0 = initial_state(p, delta, model);
    StepResult out;

    if (model == ModelForm::kExpanded) {
        auto field = [delta](double, const State4& s) { return dynamics::eval_expanded_field(s, delta); };
        auto ev = integrate::integrate_to_heelstrike(field, s0, opts.integrator);
        const State4 post = dynamics::apply_jump_expanded(ev.state_at_event, delta);
        out.image = {post.theta, post.theta_dot};
        out.period = ev.t_event;
        out.pre_jump_state = ev.state_at_event;
        out.guard_rate = ev.guard_rate;
        out.n_rejected_grazings = ev.n_rejected_grazings;
        out.dense = std::move(ev.dense);
        return out;
    }

    const double gamma = slope.gamma();
    auto field = [gamma](double, const State4& s) { return dynamics::eval_full_field(s, gamma); };
    auto iopts = opts.integrator;
    iopts.abs_tol *= slope.angle_scale();
    iopts.theta_bound *= slope.angle_scale();
    auto ev = integrate::integrate_to_heelstrike(field, s0, iopts);
    const State4 post = dynamics::apply_jump_full(ev.state_at_event);
    const double k = slope.angle_scale();
    out.image = {post.theta / k, post.theta_dot / k};
    out.period = ev.t_event;
    out.pre_jump_state = dynamics::to_scaled(ev.state_at_event, slope);
    out.guard_rate = ev.guard_rate / k;
    out.n_rejected_grazings = ev.n_rejected_grazings;
    out.dense = std::move(ev.dense);
    return out;
}

inline double time_of_flight(const SectionPoint& p, double delta, ModelForm model, const MapOptions& opts = {}) {
    return poincare_map(p, delta, model, opts).period;
}

// ---------------------------------------------------------------------------
// Finite-difference derivatives (any delta, any model).

namespace detail {

inline double fd_step_for(double x, double rel) { return std::max(rel, rel * std::abs(x)); }

}  // namespace detail

/// Central-difference Jacobian of the map in (theta, omega).
inline Mat2 jacobian_state_fd(const SectionPoint& p, double delta, ModelForm model, const MapOptions& opts) {
    Mat2 jac;
    const Vec2 x = p.vec();
    for (int j = 0; j < 2; ++j) {
        const double h = detail::fd_step_for(x(j), opts.fd_step);
        Vec2 xp = x;
        Vec2 xm = x;
        xp(j) += h;
        xm(j) -= h;
        const Vec2 fp = poincare_map(SectionPoint::from(xp), delta, model, opts).image.vec();
        const Vec2 fm = poincare_map(SectionPoint::from(xm), delta, model, opts).image.vec();
        jac.col(j) = (fp - fm) / (2.0 * h);
    }
    return jac;
}

/// Central-difference gradient of the time of flight in (theta, omega).
inline Vec2 dT_dstate_fd(const SectionPoint& p, double delta, ModelForm model, const MapOptions& opts) {
    Vec2 g;
    const Vec2 x = p.vec();
    for (int j = 0; j < 2; ++j) {
        const double h = detail::fd_step_for(x(j), opts.fd_step);
        Vec2 xp = x;
        Vec2 xm = x;
        xp(j) += h;
        xm(j) -= h;
        g(j) = (time_of_flight(SectionPoint::from(xp), delta, model, opts) -
                time_of_flight(SectionPoint::from(xm), delta, model, opts)) /
               (2.0 * h);
    }
    return g;
}

/// Derivative in delta of the image and of the time of flight. One-sided
/// when delta < step, central otherwise.
struct DeltaDerivativeFd {
    Vec2 dP_ddelta = Vec2::Zero();
    double dT_ddelta = 0.0;
};

inline DeltaDerivativeFd delta_derivative_fd(const SectionPoint& p, double delta, ModelForm model,
                                             const MapOptions& opts, double step) {
    if (!(step > 0.0)) throw DomainError("poincare", "finite-difference step must be positive");
    const double lo = (delta >= step) ? delta - step : delta;
    const double hi = delta + step;
    const auto a = poincare_map(p, lo, model, opts);
    const auto b = poincare_map(p, hi, model, opts);
    return {(b.image.vec() - a.image.vec()) / (hi - lo), (b.period - a.period) / (hi - lo)};
}

// ---------------------------------------------------------------------------
// Analytic derivatives at delta = 0 (expanded model).

namespace detail {

inline const Mat2& jump_linear_part() {
    static const Mat2 d0 = (Mat2() << -1.0, 0.0, 0.0, 1.0).finished();
    return d0;
}

inline bool on_family(const SectionPoint& p) {
    return std::abs(p.omega - closedform::family_slope() * p.theta) <= 1e-12 * std::max(1.0, std::abs(p.theta));
}

/// T(p, 0). The unperturbed motion is linear, so the time of flight only
/// depends on the direction of p; on the family it is exactly T2.
inline double unperturbed_time(const SectionPoint& p) {
    if (on_family(p)) return closedform::unperturbed_period();
    return closedform::unperturbed_heelstrike_time(p.theta, p.omega);
}

/// Direction of p, used for ratios that are homogeneous of degree zero.
inline SectionPoint direction(const SectionPoint& p) {
    const double n = std::hypot(p.theta, p.omega);
    if (n == 0.0) return {1.0, closedform::family_slope()};
    return {p.theta / n, p.omega / n};
}

inline double checked_guard_rate(double ft, const char* what) {
    if (std::abs(ft) < 1e-14) {
        throw SingularityError("poincare", std::string(what) + ": guard is tangent at the heelstrike");
    }
    return ft;
}

}  // namespace detail

/// dP/d(theta, omega) at delta = 0 from the closed-form solution and the
/// implicit-function derivative of the time of flight. The unperturbed map
/// is homogeneous of degree one, so the Jacobian only depends on the
/// direction of p; at (0, 0) the limit along the family is returned.
inline Mat2 jacobian_state_analytic(const SectionPoint& p) {
    if (!p.is_finite()) throw DomainError("poincare", "non-finite section point");
    using closedform::stance;
    using closedform::guard_form;
    const SectionPoint d = detail::direction(p);
    const double t = detail::unperturbed_time(d);
    const double ft = detail::checked_guard_rate(guard_form(t, 1)(d.theta, d.omega), "jacobian_state");
    const Vec2 dT = -guard_form(t, 0).grad() / ft;
    const Vec2 x_t(stance(t, 1)(d.theta, d.omega), stance(t, 2)(d.theta, d.omega));
    Mat2 x_s;
    x_s.row(0) = stance(t, 0).grad().transpose();
    x_s.row(1) = stance(t, 1).grad().transpose();
    return detail::jump_linear_part() * (x_t * dT.transpose() + x_s);
}

/// dP/d(theta, omega): analytic at delta = 0 (expanded model), central
/// finite differences otherwise.
inline Mat2 jacobian_state(const SectionPoint& p, double delta, ModelForm model, const MapOptions& opts = {}) {
    if (delta == 0.0) {
        if (model == ModelForm::kFull) throw DomainError("poincare", "the full model needs delta > 0");
        return jacobian_state_analytic(p);
    }
    return jacobian_state_fd(p, delta, model, opts);
}

/// dT/d(theta, omega) at delta = 0. Scales like 1/theta along the family.
inline Vec2 dT_dstate(const SectionPoint& p) {
    if (p.theta == 0.0) throw DomainError("poincare", "dT_dstate: theta must be nonzero");
    detail::require_point(p);
    const double t = detail::unperturbed_time(p);
    const double ft = detail::checked_guard_rate(closedform::guard_form(t, 1)(p.theta, p.omega), "dT_dstate");
    return -closedform::guard_form(t, 0).grad() / ft;
}

/// dT/d delta at delta = 0: -F_delta / F_t at the heelstrike, with
/// F_delta = f - 2 h.
inline double dT_ddelta(const SectionPoint& p) {
    if (!p.is_finite()) throw DomainError("poincare", "non-finite section point");
    const double t = detail::unperturbed_time(p);
    const double ft = detail::checked_guard_rate(closedform::guard_form(t, 1)(p.theta, p.omega), "dT_ddelta");
    const auto jet = closedform::variational_jet(t, p.theta, p.omega);
    return -(jet.f[0].value - 2.0 * jet.h[0].value) / ft;
}

/// dP/d delta at delta = 0. Defined at every point with a heelstrike,
/// including the limit theta -> 0 along the family.
inline Vec2 dP_ddelta(const SectionPoint& p) {
    if (!p.is_finite()) throw DomainError("poincare", "non-finite section point");
    using closedform::stance;
    const double t = detail::unperturbed_time(p);
    const SectionPoint d = detail::direction(p);
    // T_delta * X_t = -F_delta * (X_t / F_t); the ratio only depends on the direction.
    const double ft_dir =
        detail::checked_guard_rate(closedform::guard_form(t, 1)(d.theta, d.omega), "dP_ddelta");
    const Vec2 x_t_dir(stance(t, 1)(d.theta, d.omega), stance(t, 2)(d.theta, d.omega));
    const auto jet = closedform::variational_jet(t, p.theta, p.omega);
    const double f_delta = jet.f[0].value - 2.0 * jet.h[0].value;
    const Vec2 h(jet.h[0].value, jet.h[1].value);
    const double pre_theta = stance(t, 0)(p.theta, p.omega);
    const double pre_omega = stance(t, 1)(p.theta, p.omega);
    const Vec2 jump_delta(0.0, -2.0 * pre_theta * pre_theta * pre_omega);
    return detail::jump_linear_part() * (-(f_delta / ft_dir) * x_t_dir + h) + jump_delta;
}

/// How the time-of-flight sensitivity T_delta is differentiated in
/// (theta, omega) when assembling the mixed derivative.
enum class PeriodDependence {
    kTotal,   ///< includes the motion of the heelstrike time T(theta, omega, 0)
    kFrozen,  ///< differentiates -F_delta/F_t at fixed t = T2 (omits dT/d(theta, omega) terms)
};

/// Mixed derivative d^2 P / d delta d(theta, omega) at delta = 0, assembled
/// by the chain rule from the closed forms. kTotal is the true derivative;
/// kFrozen differs from it by a rank-one term that vanishes on the family
/// tangent, so z^T (.) y is the same for both.
inline Mat2 dPdelta_dstate(const SectionPoint& p, PeriodDependence mode = PeriodDependence::kTotal) {
    if (p.theta == 0.0) throw DomainError("poincare", "dPdelta_dstate: theta must be nonzero");
    detail::require_point(p);
    using closedform::guard_form;
    using closedform::stance;
    const double th = p.theta;
    const double om = p.omega;
    const double t = detail::unperturbed_time(p);

    const double ft = detail::checked_guard_rate(guard_form(t, 1)(th, om), "dPdelta_dstate");
    const double ftt = guard_form(t, 2)(th, om);
    const Vec2 f_s = guard_form(t, 0).grad();
    const Vec2 ft_s = guard_form(t, 1).grad();
    const Vec2 dT = -f_s / ft;

    const auto jet = closedform::variational_jet(t, th, om);
    const double fd = jet.f[0].value - 2.0 * jet.h[0].value;
    const double fd_t = jet.f[1].value - 2.0 * jet.h[1].value;
    const Vec2 fd_s = jet.f[0].grad - 2.0 * jet.h[0].grad;
    const double t_delta = -fd / ft;

    Vec2 dTdelta;
    if (mode == PeriodDependence::kTotal) {
        dTdelta = -((fd_t * dT + fd_s) * ft - fd * (ftt * dT + ft_s)) / (ft * ft);
    } else {
        dTdelta = -(fd_s * ft - fd * ft_s) / (ft * ft);
    }

    const Vec2 x(stance(t, 0)(th, om), stance(t, 1)(th, om));
    const Vec2 x_t(stance(t, 1)(th, om), stance(t, 2)(th, om));
    const Vec2 x_tt(stance(t, 2)(th, om), stance(t, 3)(th, om));
    Mat2 x_s;
    x_s.row(0) = stance(t, 0).grad().transpose();
    x_s.row(1) = stance(t, 1).grad().transpose();
    Mat2 x_ts;
    x_ts.row(0) = stance(t, 1).grad().transpose();
    x_ts.row(1) = stance(t, 2).grad().transpose();

    const Vec2 h_t(jet.h[1].value, jet.h[2].value);
    Mat2 h_s;
    h_s.row(0) = jet.h[0].grad.transpose();
    h_s.row(1) = jet.h[1].grad.transpose();

    Mat2 jump_delta_s;
    jump_delta_s << 0.0, 0.0, -4.0 * x(0) * x(1), -2.0 * x(0) * x(0);

    const Mat2 inner = x_t * dT.transpose() + x_s;
    const Mat2 body = (x_tt * dT.transpose() + x_ts) * t_delta + x_t * dTdelta.transpose() +
                      h_t * dT.transpose() + h_s;
    return detail::jump_linear_part() * body + jump_delta_s * inner;
}

/// Finite-difference oracle for the mixed derivative:
/// (J(p, h) - J(p, 0)) / h with J(p, h) by finite differences and J(p, 0)
/// analytic. With `richardson`, combines steps h and h/2 to cancel the O(h) error.
inline Mat2 dPdelta_dstate_fd(const SectionPoint& p, double step, const MapOptions& opts, bool richardson = false) {
    const Mat2 j0 = jacobian_state_analytic(p);
    auto one_sided = [&](double h) {
        return Mat2((jacobian_state_fd(p, h, ModelForm::kExpanded, opts) - j0) / h);
    };
    if (!richardson) return one_sided(step);
    return 2.0 * one_sided(0.5 * step) - one_sided(step);
}

// ---------------------------------------------------------------------------

enum class DerivativeMethod { kAnalyticDelta0, kFiniteDifference };

inline std::string_view to_string(DerivativeMethod m) {
    return m == DerivativeMethod::kAnalyticDelta0 ? "analytic-delta0" : "finite-difference";
}

struct MapDerivatives {
    Mat2 dP_dstate = Mat2::Zero();
    Vec2 dP_ddelta = Vec2::Zero();
    Vec2 dT_dstate = Vec2::Zero();
    double dT_ddelta = 0.0;
    Mat2 dPdelta_dstate = Mat2::Zero();
    DerivativeMethod method = DerivativeMethod::kAnalyticDelta0;
};

/// All first derivatives (and the mixed one) of the map at (p, delta).
/// Analytic at delta = 0 for the expanded model; finite differences with
/// steps `opts.fd_step` (state) and `delta_step` (delta) otherwise.
inline MapDerivatives map_derivatives(const SectionPoint& p, double delta, ModelForm model, const MapOptions& opts,
                                      double delta_step = 1e-5) {
    MapDerivatives d;
    if (delta == 0.0 && model == ModelForm::kExpanded) {
        d.method = DerivativeMethod::kAnalyticDelta0;
        d.dP_dstate = jacobian_state_analytic(p);
        d.dT_dstate = dT_dstate(p);
        d.dP_ddelta = dP_ddelta(p);
        d.dT_ddelta = dT_ddelta(p);
        d.dPdelta_dstate = dPdelta_dstate(p);
        return d;
    }
    d.method = DerivativeMethod::kFiniteDifference;
    d.dP_dstate = jacobian_state_fd(p, delta, model, opts);
    d.dT_dstate = dT_dstate_fd(p, delta, model, opts);
    const auto dd = delta_derivative_fd(p, delta, model, opts, delta_step);
    d.dP_ddelta = dd.dP_ddelta;
    d.dT_ddelta = dd.dT_ddelta;
    const double lo = (delta >= delta_step) ? delta - delta_step : delta;
    const double hi = delta + delta_step;
    d.dPdelta_dstate = (jacobian_state_fd(p, hi, model, opts) - jacobian_state_fd(p, lo, model, opts)) / (hi - lo);
    return d;
}

}  // namespace biped::poincare
