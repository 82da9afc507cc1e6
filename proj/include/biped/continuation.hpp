#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "biped/closedform.hpp"
#include "biped/errors.hpp"
#include "biped/melnikov.hpp"
#include "biped/poincare.hpp"
#include "biped/types.hpp"

/// Fixed points of P(., delta) for delta > 0 by Newton's method, their
/// Floquet multipliers along a delta grid, and multi-step gait simulation.
namespace biped::continuation {

inline constexpr double kDeltaMin = 1e-6;

struct NewtonOptions {
    double tol = 1e-10;
    int max_iter = 25;
    double delta_min = kDeltaMin;
    poincare::MapOptions map = poincare::tight_map_options();
};

/// Spectrum of a 2x2 map Jacobian at a fixed point.
struct Multipliers {
    std::complex<double> first;   ///< nearest to 1
    std::complex<double> second;
    bool complex_pair = false;
    double spectral_radius = 0.0;
};

inline Multipliers multipliers(const Mat2& j) {
    const double half_tr = 0.5 * j.trace();
    const double disc = half_tr * half_tr - j.determinant();
    Multipliers m;
    if (disc >= 0.0) {
        const double a = half_tr + std::sqrt(disc);
        const double b = half_tr - std::sqrt(disc);
        const bool a_first = std::abs(a - 1.0) <= std::abs(b - 1.0);
        m.first = a_first ? a : b;
        m.second = a_first ? b : a;
    } else {
        m.complex_pair = true;
        m.first = {half_tr, std::sqrt(-disc)};
        m.second = std::conj(m.first);
    }
    m.spectral_radius = std::max(std::abs(m.first), std::abs(m.second));
    return m;
}

struct BranchPoint {
    double delta = 0.0;
    SectionPoint fixed_point{};
    double period = 0.0;
    /// Multiplier that tends to 1 as delta -> 0 (real part for a complex pair).
    double rho_delta = 0.0;
    /// The other multiplier (real part for a complex pair).
    double other_multiplier = 0.0;
    double spectral_radius = 0.0;
    bool complex_pair = false;
    Mat2 jacobian = Mat2::Zero();
    int newton_iters = 0;
    double residual = 0.0;
};

/// Solves P(x, delta) = x from `guess` with a central-difference Jacobian.
inline BranchPoint newton_fixed_point(double delta, const SectionPoint& guess, ModelForm model,
                                      const NewtonOptions& opts = {}) {
    const SlopeParam slope(delta);
    if (delta < opts.delta_min) {
        throw DegeneracyError("continuation",
                              "fixed points are not isolated at delta = 0; use the family instead (delta < delta_min)");
    }
    if (!guess.is_finite()) throw DomainError("continuation", "non-finite Newton guess");

    Vec2 x = guess.vec();
    for (int it = 0; it <= opts.max_iter; ++it) {
        const auto step = poincare::poincare_map(SectionPoint::from(x), delta, model, opts.map);
        const Vec2 r = step.image.vec() - x;
        if (r.norm() < opts.tol) {
            BranchPoint bp;
            bp.delta = delta;
            bp.fixed_point = SectionPoint::from(x);
            bp.period = step.period;
            bp.newton_iters = it;
            bp.residual = r.norm();
            bp.jacobian = poincare::jacobian_state_fd(bp.fixed_point, delta, model, opts.map);
            const auto m = multipliers(bp.jacobian);
            bp.rho_delta = m.first.real();
            bp.other_multiplier = m.second.real();
            bp.spectral_radius = m.spectral_radius;
            bp.complex_pair = m.complex_pair;
            return bp;
        }
        if (it == opts.max_iter) break;
        const Mat2 a = poincare::jacobian_state_fd(SectionPoint::from(x), delta, model, opts.map) - Mat2::Identity();
        if (std::abs(a.determinant()) < 1e-14 * std::max(1.0, a.squaredNorm())) {
            throw SingularityError("continuation", "Newton matrix P' - I is singular");
        }
        x -= a.inverse() * r;
        if (!x.allFinite()) throw NumericalError("continuation", "Newton iterate became non-finite");
    }
    throw NumericalError("continuation", "Newton did not converge within max_iter");
}

struct BranchFailure {
    double delta = 0.0;
    std::string kind;
    std::string message;
};

struct Branch {
    std::vector<BranchPoint> points;
    std::optional<BranchFailure> failure;  ///< set when the branch was truncated
};

/// Default start of the walker branch: the family point selected by the
/// necessary condition.
inline SectionPoint default_branch_seed() {
    return closedform::family_point(melnikov::solve_theta0(melnikov::BipedFamilyModel{}));
}

/// Follows the fixed point along `grid` (ascending). Each solve is seeded by
/// secant extrapolation of the previous two points. A Newton failure
/// truncates the branch.
inline Branch continue_branch(const std::vector<double>& grid, ModelForm model, const SectionPoint& seed,
                              const NewtonOptions& opts = {}) {
    if (!std::is_sorted(grid.begin(), grid.end())) {
        throw PreconditionError("continuation", "delta grid must be ascending");
    }
    Branch b;
    for (const double d : grid) {
        SectionPoint guess = seed;
        const auto n = b.points.size();
        if (n == 1) {
            guess = b.points[0].fixed_point;
        } else if (n >= 2) {
            const auto& p = b.points[n - 2];
            const auto& q = b.points[n - 1];
            const double w = (d - q.delta) / (q.delta - p.delta);
            guess = SectionPoint::from(q.fixed_point.vec() + w * (q.fixed_point.vec() - p.fixed_point.vec()));
        }
        try {
            b.points.push_back(newton_fixed_point(d, guess, model, opts));
        } catch (const Error& e) {
            b.failure = BranchFailure{d, e.kind(), e.what()};
            break;
        }
    }
    return b;
}

inline Branch continue_branch(const std::vector<double>& grid, ModelForm model, const NewtonOptions& opts = {}) {
    if (grid.empty()) return {};
    return continue_branch(grid, model, default_branch_seed(), opts);
}

/// Least-squares slope through the origin of (rho_delta - 1) against delta.
inline double floquet_slope(const std::vector<BranchPoint>& points) {
    if (points.size() < 3) throw PreconditionError("continuation", "floquet_slope needs at least 3 branch points");
    double num = 0.0;
    double den = 0.0;
    for (const auto& p : points) {
        num += p.delta * (p.rho_delta - 1.0);
        den += p.delta * p.delta;
    }
    return num / den;
}

/// Straight-line fit x(delta) = intercept + delta * slope, per coordinate.
struct LinearFit {
    SectionPoint intercept{};
    Vec2 slope = Vec2::Zero();
};

inline LinearFit fit_branch_line(const std::vector<BranchPoint>& points) {
    if (points.size() < 2) throw PreconditionError("continuation", "line fit needs at least 2 branch points");
    const double n = static_cast<double>(points.size());
    double sd = 0.0;
    double sdd = 0.0;
    Vec2 sx = Vec2::Zero();
    Vec2 sdx = Vec2::Zero();
    for (const auto& p : points) {
        sd += p.delta;
        sdd += p.delta * p.delta;
        sx += p.fixed_point.vec();
        sdx += p.delta * p.fixed_point.vec();
    }
    const double det = n * sdd - sd * sd;
    if (det == 0.0) throw DegeneracyError("continuation", "line fit needs distinct delta values");
    LinearFit f;
    f.slope = (n * sdx - sd * sx) / det;
    f.intercept = SectionPoint::from((sx - sd * f.slope) / n);
    return f;
}

/// ||x_delta - x0|| / delta for each branch point.
inline std::vector<double> branch_offset_ratios(const std::vector<BranchPoint>& points, const SectionPoint& x0) {
    std::vector<double> out;
    out.reserve(points.size());
    for (const auto& p : points) out.push_back(distance(p.fixed_point, x0) / p.delta);
    return out;
}

// ---------------------------------------------------------------------------

inline constexpr double kFallThetaBound = 10.0;

struct GaitStep {
    int index = 0;
    SectionPoint start{};
    SectionPoint image{};
    State4 heelstrike_state{};
    double period = 0.0;
    /// 2 |Theta| at heelstrike (scaled), proportional to the step length.
    double step_length = 0.0;
};

struct GaitTrace {
    std::vector<GaitStep> steps;
    /// ||x_{k+1} - x_k||, one entry per completed step.
    std::vector<double> metric;
    bool fell = false;
    std::string fall_reason;
};

/// Iterates the heelstrike map. A missing heelstrike or |Theta| > 10 at
/// any time ends the trace as a fall.
inline GaitTrace simulate_gait(double delta, const SectionPoint& x0, int n_steps, ModelForm model,
                               const poincare::MapOptions& opts = {}) {
    if (n_steps < 1) throw PreconditionError("continuation", "n_steps must be >= 1");
    GaitTrace trace;
    SectionPoint x = x0;
    poincare::MapOptions step_opts = opts;
    step_opts.integrator.theta_bound = std::min(step_opts.integrator.theta_bound, kFallThetaBound);
    for (int k = 0; k < n_steps; ++k) {
        poincare::StepResult r;
        try {
            r = poincare::poincare_map(x, delta, model, step_opts);
        } catch (const NoHeelstrikeError& e) {
            trace.fell = true;
            trace.fall_reason = e.what();
            return trace;
        }
        if (std::abs(r.pre_jump_state.theta) > kFallThetaBound || std::abs(r.image.theta) > kFallThetaBound) {
            trace.fell = true;
            trace.fall_reason = "stance angle left the admissible range";
            return trace;
        }
        trace.steps.push_back({k, x, r.image, r.pre_jump_state, r.period, 2.0 * std::abs(r.pre_jump_state.theta)});
        trace.metric.push_back(distance(r.image, x));
        x = r.image;
    }
    return trace;
}

/// Per-step contraction exp(slope) of a least-squares fit of log(metric)
/// against step index, over entries after `skip` that exceed `floor`.
inline double estimate_contraction_ratio(const std::vector<double>& metric, std::size_t skip = 2,
                                         double floor = 1e-9) {
    double n = 0.0;
    double sx = 0.0;
    double sy = 0.0;
    double sxx = 0.0;
    double sxy = 0.0;
    for (std::size_t k = skip; k < metric.size(); ++k) {
        if (!(metric[k] > floor)) continue;
        const double xk = static_cast<double>(k);
        const double yk = std::log(metric[k]);
        n += 1.0;
        sx += xk;
        sy += yk;
        sxx += xk * xk;
        sxy += xk * yk;
    }
    if (n < 3.0) throw PreconditionError("continuation", "need at least 3 metric values above the floor");
    return std::exp((n * sxy - sx * sy) / (n * sxx - sx * sx));
}

}  // namespace biped::continuation
