#pragma once

#include <array>
#include <cmath>
#include <numbers>
#include <optional>
#include <vector>

#include "biped/detail/quasi_polynomial.hpp"
#include "biped/detail/roots.hpp"
#include "biped/detail/variational_terms.hpp"
#include "biped/dynamics.hpp"
#include "biped/errors.hpp"
#include "biped/types.hpp"

/// Closed-form analysis of the unperturbed (delta = 0) walker and of the
/// first-order sensitivities of its solutions with respect to delta.
///
/// At delta = 0 the expanded model is linear,
///     Theta'' = Theta,   Phi'' = Theta'' - Phi,
/// and, started from (theta, omega, 2 theta, 0), its solution is linear in
/// (theta, omega). All quantities below are exact up to floating point.
namespace biped::closedform {

/// Coefficients (a, b) of a quantity that equals a*theta + b*omega.
struct LinearForm {
    double theta = 0.0;
    double omega = 0.0;

    double operator()(double th, double om) const { return theta * th + omega * om; }
    Vec2 grad() const { return {theta, omega}; }

    friend LinearForm operator-(const LinearForm& a, const LinearForm& b) {
        return {a.theta - b.theta, a.omega - b.omega};
    }
    friend LinearForm operator*(double k, const LinearForm& a) { return {k * a.theta, k * a.omega}; }
};

namespace detail {

// k-th derivatives of cos and sin
inline double dcos(double t, int k) {
    switch (k % 4) {
        case 0: return std::cos(t);
        case 1: return -std::sin(t);
        case 2: return -std::cos(t);
        default: return std::sin(t);
    }
}
inline double dsin(double t, int k) { return dcos(t, k + 3); }
inline double dcosh(double t, int k) { return (k % 2 == 0) ? std::cosh(t) : std::sinh(t); }
inline double dsinh(double t, int k) { return (k % 2 == 0) ? std::sinh(t) : std::cosh(t); }

}  // namespace detail

/// k-th time derivative of Theta(t, theta, omega, 0).
inline LinearForm stance(double t, int order = 0) {
    return {detail::dcosh(t, order), detail::dsinh(t, order)};
}

/// k-th time derivative of Phi(t, theta, omega, 0).
inline LinearForm swing(double t, int order = 0) {
    return {1.5 * detail::dcos(t, order) + 0.5 * detail::dcosh(t, order),
            0.5 * detail::dsinh(t, order) - 0.5 * detail::dsin(t, order)};
}

/// k-th time derivative of the guard F(t) = Phi - 2 Theta at delta = 0.
inline LinearForm guard_form(double t, int order = 0) {
    return swing(t, order) - 2.0 * stance(t, order);
}

/// Exact delta = 0 solution from the post-heelstrike state (theta, omega, 2 theta, 0).
inline State4 unperturbed_solution(double t, double theta, double omega) {
    return {stance(t, 0)(theta, omega), stance(t, 1)(theta, omega), swing(t, 0)(theta, omega),
            swing(t, 1)(theta, omega)};
}

/// Slope of the line omega = alpha(T) theta of initial data whose state
/// after time T is (-theta, omega).
inline double alpha(double period) {
    if (!(period > 0.0) || !std::isfinite(period)) {
        throw DomainError("closedform", "alpha(T) requires T > 0");
    }
    // -(1 + e^T) / (e^T - 1), written with expm1 to stay accurate for small T
    return -(2.0 + std::expm1(period)) / std::expm1(period);
}

/// Left side of the step-period equation; its roots are the periods of
/// the symmetric fixed points of the unperturbed map.
inline double step_period_residual(double period) {
    const double e = std::exp(period);
    return -3.0 + 3.0 * e + 3.0 * (e - 1.0) * std::cos(period) + std::sin(period) + e * std::sin(period);
}

struct StepPeriodRoots {
    double t1 = 0.0;  ///< ~pi
    double t2 = 0.0;  ///< the walking gait
};

inline constexpr double kRootScanStep = 1e-2;
inline constexpr double kRootTol = 1e-10;

/// All roots of the step-period equation in [lo, hi], in increasing order.
inline std::vector<double> find_step_period_roots(double lo, double hi, double scan_step = kRootScanStep,
                                                  double tol = kRootTol) {
    if (!(lo > 0.0) || !(hi > lo) || !(scan_step > 0.0)) {
        throw DomainError("closedform", "step period search needs 0 < lo < hi and a positive scan step");
    }
    std::vector<double> roots;
    for (const auto& [a, b] : biped::detail::scan_brackets(step_period_residual, lo, hi, scan_step)) {
        roots.push_back(biped::detail::refine_root(step_period_residual, a, b, tol, "closedform"));
    }
    return roots;
}

/// The two roots in (0.1, 2 pi). T1 = pi is exposed but is not a walking gait.
inline StepPeriodRoots step_period_roots() {
    const auto roots = find_step_period_roots(0.1, 2.0 * std::numbers::pi);
    if (roots.size() != 2) {
        throw NumericalError("closedform", "expected two step-period roots in (0.1, 2 pi)");
    }
    return {roots[0], roots[1]};
}

/// T2, computed once.
inline double unperturbed_period() {
    static const double t2 = step_period_roots().t2;
    return t2;
}

/// alpha(T2): slope of the family of unperturbed fixed points.
inline double family_slope() {
    static const double a = alpha(unperturbed_period());
    return a;
}

inline SectionPoint family_point(double s) { return {s, family_slope() * s}; }

/// Guard value along the symmetric gait with theta = 1. Its coefficients in
/// the basis e^{-t}, e^{t}, cos t, sin t are given by
/// symmetric_gait_coefficients().
inline double symmetric_gait_residual(double t) {
    return guard_form(t)(1.0, family_slope());
}

struct SymmetricGaitCoefficients {
    double exp_minus = 0.0;
    double exp_plus = 0.0;
    double cos = 0.0;
    double sin = 0.0;
};

inline SymmetricGaitCoefficients symmetric_gait_coefficients() {
    const double a = family_slope();
    return {-0.75 * (1.0 - a), -0.75 * (1.0 + a), 1.5, -0.5 * a};
}

// ---------------------------------------------------------------------------
// delta-sensitivities h = Theta_delta, f = Phi_delta at delta = 0.

/// A value that is cubic in (theta, omega) plus a constant, with its gradient.
struct CubicJet {
    double value = 0.0;
    Vec2 grad = Vec2::Zero();
};

namespace detail {

inline CubicJet combine(const std::array<double, 5>& c, double th, double om) {
    // monomials: 1, th^3, th^2 om, th om^2, om^3
    CubicJet j;
    j.value = c[0] + c[1] * th * th * th + c[2] * th * th * om + c[3] * th * om * om + c[4] * om * om * om;
    j.grad(0) = 3.0 * c[1] * th * th + 2.0 * c[2] * th * om + c[3] * om * om;
    j.grad(1) = c[2] * th * th + 2.0 * c[3] * th * om + 3.0 * c[4] * om * om;
    return j;
}

}  // namespace detail

/// h, f and their first two time derivatives, each with (theta, omega)
/// gradient. Index = order of the time derivative.
struct VariationalJet {
    std::array<CubicJet, 3> h;
    std::array<CubicJet, 3> f;
};

inline VariationalJet variational_jet(double t, double theta, double omega) {
    using biped::detail::eval_table;
    namespace gen = biped::detail;
    VariationalJet j;
    j.h[0] = detail::combine(eval_table(gen::kH, t), theta, omega);
    j.h[1] = detail::combine(eval_table(gen::kHDot, t), theta, omega);
    j.h[2] = detail::combine(eval_table(gen::kHDdot, t), theta, omega);
    j.f[0] = detail::combine(eval_table(gen::kF, t), theta, omega);
    j.f[1] = detail::combine(eval_table(gen::kFDot, t), theta, omega);
    j.f[2] = detail::combine(eval_table(gen::kFDdot, t), theta, omega);
    return j;
}

/// Coefficients of a delta-sensitivity at fixed t, in monomial order
/// 1, theta^3, theta^2 omega, theta omega^2, omega^3.
inline std::array<double, 5> h_coefficients(double t) { return biped::detail::eval_table(biped::detail::kH, t); }
inline std::array<double, 5> f_coefficients(double t) { return biped::detail::eval_table(biped::detail::kF, t); }

struct HValues {
    double h = 0.0;
    double h_dot = 0.0;
    double h_ddot = 0.0;
};

struct FValues {
    double f = 0.0;
    double f_dot = 0.0;
    double f_ddot = 0.0;
};

/// Theta_delta(t, theta, omega, 0) and its time derivatives.
inline HValues h_eval(double t, double theta, double omega) {
    const auto j = variational_jet(t, theta, omega);
    return {j.h[0].value, j.h[1].value, j.h[2].value};
}

/// Phi_delta(t, theta, omega, 0) and its time derivatives.
inline FValues f_eval(double t, double theta, double omega) {
    const auto j = variational_jet(t, theta, omega);
    return {j.f[0].value, j.f[1].value, j.f[2].value};
}

// ---------------------------------------------------------------------------

inline constexpr double kUnperturbedHorizon = 11.5;
inline constexpr double kEventScanStep = 1e-2;
inline constexpr double kEventTol = 1e-13;

/// Time of flight T(theta, omega, 0) located on the closed form, with the
/// same acceptance rule the integrator applies.
inline double unperturbed_heelstrike_time(double theta, double omega,
                                          const dynamics::HeelstrikeRule& rule = {},
                                          double horizon = kUnperturbedHorizon) {
    if (!std::isfinite(theta) || !std::isfinite(omega)) {
        throw DomainError("closedform", "unperturbed_heelstrike_time: non-finite section point");
    }
    const double th_abs = std::abs(theta);
    auto g = [&](double t) { return guard_form(t)(theta, omega); };
    for (const auto& [a, b] : biped::detail::scan_brackets(g, kEventScanStep, horizon, kEventScanStep)) {
        const double t = biped::detail::refine_root(g, a, b, kEventTol, "closedform");
        if (rule.accepts(th_abs, stance(t)(theta, omega), guard_form(t, 1)(theta, omega))) return t;
    }
    throw NoHeelstrikeError("closedform", "no accepted heelstrike for the unperturbed motion");
}

}  // namespace biped::closedform
