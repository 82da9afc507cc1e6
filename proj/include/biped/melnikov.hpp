#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <concepts>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "biped/closedform.hpp"
#include "biped/detail/roots.hpp"
#include "biped/errors.hpp"
#include "biped/poincare.hpp"
#include "biped/types.hpp"

/// Bifurcation of isolated walking cycles out of the delta = 0 family of
/// fixed points: eigenstructure of the family Jacobian, the necessary
/// condition z^T P_delta = 0 and the stability slope z^T P_delta,x y.
///
/// The engine is generic over a FamilyModel; BipedFamilyModel adapts the
/// closed-form walker.
namespace biped::melnikov {

inline constexpr double kUnitEigenTol = 1e-6;
inline constexpr double kDegeneracyTol = 1e-6;

/// Eigen-decomposition of a 2x2 map Jacobian with spectrum {1, rho}.
struct EigenStructure {
    double rho = 0.0;
    Vec2 y = Vec2::Zero();        ///< right eigenvector for 1, z^T y = 1
    Vec2 y_tilde = Vec2::Zero();  ///< right eigenvector for rho, unit norm
    Vec2 z = Vec2::Zero();        ///< left eigenvector for 1, unit norm, z[0] <= 0
    Vec2 z_tilde = Vec2::Zero();  ///< left eigenvector for rho, z~^T y~ = 1
};

namespace detail {

/// A nonzero vector orthogonal to every row of the rank-one matrix A.
inline Vec2 right_null(const Mat2& a) {
    const Vec2 r = (a.row(0).norm() >= a.row(1).norm()) ? Vec2(a.row(0).transpose()) : Vec2(a.row(1).transpose());
    if (r.norm() == 0.0) throw StructureError("melnikov", "eigenvalue is not simple (A = 0)");
    return Vec2(-r(1), r(0)).normalized();
}

inline Vec2 left_null(const Mat2& a) { return right_null(a.transpose()); }

}  // namespace detail

/// `unit_tol` bounds |lambda - 1| for the eigenvalue taken as the family
/// direction; loosen it only for matrices known to a few digits.
inline EigenStructure eigenstructure_2x2(const Mat2& m, double unit_tol = kUnitEigenTol) {
    if (!m.allFinite()) throw DomainError("melnikov", "non-finite Jacobian");
    const double half_tr = 0.5 * m.trace();
    const double disc = half_tr * half_tr - m.determinant();
    if (disc < 0.0) throw StructureError("melnikov", "complex spectrum, no unit eigenvalue");
    const double root = std::sqrt(disc);
    const double l1 = half_tr + root;
    const double l2 = half_tr - root;
    const bool first_is_unit = std::abs(l1 - 1.0) <= std::abs(l2 - 1.0);
    const double unit = first_is_unit ? l1 : l2;
    const double rho = first_is_unit ? l2 : l1;
    if (std::abs(unit - 1.0) > unit_tol) {
        throw StructureError("melnikov", "no eigenvalue within tolerance of 1");
    }
    if (std::abs(rho - 1.0) <= kDegeneracyTol) {
        throw DegeneracyError("melnikov", "second eigenvalue is 1; the family is degenerate");
    }

    EigenStructure e;
    e.rho = rho;
    const Mat2 id = Mat2::Identity();
    // deflation: use exactly 1 for the family direction
    e.z = detail::left_null(m - id);
    if (e.z(0) > 0.0 || (e.z(0) == 0.0 && e.z(1) > 0.0)) e.z = -e.z;
    e.y = detail::right_null(m - id);
    const double zy = e.z.dot(e.y);
    if (std::abs(zy) < 1e-12) throw DegeneracyError("melnikov", "z^T y vanishes");
    e.y /= zy;

    e.y_tilde = detail::right_null(m - rho * id);
    e.z_tilde = detail::left_null(m - rho * id);
    const double zt_yt = e.z_tilde.dot(e.y_tilde);
    if (std::abs(zt_yt) < 1e-12) throw DegeneracyError("melnikov", "z~^T y~ vanishes");
    e.z_tilde /= zt_yt;
    return e;
}

// ---------------------------------------------------------------------------

/// A one-parameter family of fixed points xi(s) of an unperturbed map,
/// with the derivatives needed at delta = 0.
template <class M>
concept FamilyModel = requires(const M& m, double s) {
    { m.family_point(s) } -> std::convertible_to<SectionPoint>;
    { m.jacobian(s) } -> std::convertible_to<Mat2>;
    { m.perturbation(s) } -> std::convertible_to<Vec2>;
    { m.mixed(s) } -> std::convertible_to<Mat2>;
};

/// The compass walker with the closed-form delta = 0 derivatives.
struct BipedFamilyModel {
    poincare::PeriodDependence period_dependence = poincare::PeriodDependence::kTotal;

    SectionPoint family_point(double s) const { return closedform::family_point(s); }
    Mat2 jacobian(double s) const { return poincare::jacobian_state_analytic(family_point(s)); }
    Vec2 perturbation(double s) const { return poincare::dP_ddelta(family_point(s)); }
    Mat2 mixed(double s) const { return poincare::dPdelta_dstate(family_point(s), period_dependence); }
};

/// Largest angle (radians) between z(s) and z(s_0) over the samples, s_0 the first.
template <FamilyModel M>
double check_family_z_independence(const M& model, const std::vector<double>& samples) {
    if (samples.size() < 2) return 0.0;
    const Vec2 z0 = eigenstructure_2x2(model.jacobian(samples.front())).z;
    double worst = 0.0;
    for (std::size_t k = 1; k < samples.size(); ++k) {
        const Vec2 z = eigenstructure_2x2(model.jacobian(samples[k])).z;
        const double c = std::clamp(std::abs(z.dot(z0)), 0.0, 1.0);
        const double s = std::abs(z(0) * z0(1) - z(1) * z0(0));
        worst = std::max(worst, std::atan2(s, c));
    }
    return worst;
}

/// z^T P_delta(xi(s), 0), with z taken at the same point.
template <FamilyModel M>
double necessary_condition_fn(const M& model, double s) {
    return eigenstructure_2x2(model.jacobian(s)).z.dot(model.perturbation(s));
}

inline constexpr double kTheta0Lo = 0.1;
inline constexpr double kTheta0Hi = 2.0;
inline constexpr double kTheta0Tol = 1e-13;

/// Root of the necessary condition in [lo, hi]. Scans for sign changes and
/// returns the first root; throws if there is none.
template <FamilyModel M>
double solve_theta0(const M& model, double lo = kTheta0Lo, double hi = kTheta0Hi, double tol = kTheta0Tol) {
    if (!(hi > lo)) throw PreconditionError("melnikov", "theta0 bracket must satisfy lo < hi");
    auto fn = [&](double s) { return necessary_condition_fn(model, s); };
    const auto brackets = biped::detail::scan_brackets(fn, lo, hi, (hi - lo) / 64.0);
    if (brackets.empty()) throw NumericalError("melnikov", "necessary condition has no sign change in bracket");
    return biped::detail::refine_root(fn, brackets.front().first, brackets.front().second, tol, "melnikov");
}

/// z^T P_delta,(theta,omega)(xi(s0), 0) y.
template <FamilyModel M>
double melnikov_slope(const M& model, double s0) {
    const auto e = eigenstructure_2x2(model.jacobian(s0));
    return e.z.dot(model.mixed(s0) * e.y);
}

// ---------------------------------------------------------------------------

struct StageFailure {
    std::string stage;
    std::string kind;
    std::string message;
};

struct Verdicts {
    bool stab1 = false;       ///< |rho| < 1
    bool necessary = false;   ///< a root theta0 was found
    bool sufficient = false;  ///< slope != 0
    bool stab2 = false;       ///< slope < 0
};

struct BifurcationReport {
    double reference_s = 1.0;  ///< family parameter at which M, z, y are taken
    std::optional<EigenStructure> eigen;
    Mat2 jacobian = Mat2::Zero();
    double z_family_independence = 0.0;
    std::optional<double> fn_at_zero;
    std::optional<double> theta0;
    std::optional<SectionPoint> fixed_point;
    std::optional<double> melnikov_slope;
    Verdicts verdicts;
    std::vector<StageFailure> failures;
    bool incomplete = false;
};

struct ReportOptions {
    double theta0_lo = kTheta0Lo;
    double theta0_hi = kTheta0Hi;
    std::vector<double> z_samples{0.25, 0.5, 1.0, 2.0};
};

namespace detail {

template <class Fn>
bool run_stage(BifurcationReport& r, const char* stage, Fn&& fn) {
    try {
        fn();
        return true;
    } catch (const Error& e) {
        r.failures.push_back({stage, e.kind(), e.what()});
    } catch (const std::exception& e) {
        r.failures.push_back({stage, "error", e.what()});
    }
    r.incomplete = true;
    return false;
}

}  // namespace detail

/// Runs every stage, recording failures instead of throwing. Verdicts of
/// stages that did not run stay false.
template <FamilyModel M>
BifurcationReport build_report(const M& model, const ReportOptions& opts = {}) {
    BifurcationReport r;
    r.reference_s = opts.z_samples.empty() ? 1.0 : opts.z_samples[opts.z_samples.size() / 2];
    detail::run_stage(r, "eigenstructure", [&] {
        r.jacobian = model.jacobian(r.reference_s);
        r.eigen = eigenstructure_2x2(r.jacobian);
        r.verdicts.stab1 = std::abs(r.eigen->rho) < 1.0;
    });
    detail::run_stage(r, "z_independence", [&] {
        r.z_family_independence = check_family_z_independence(model, opts.z_samples);
    });
    if (!r.eigen) return r;
    detail::run_stage(r, "necessary", [&] { r.fn_at_zero = necessary_condition_fn(model, 0.0); });
    detail::run_stage(r, "necessary", [&] {
        r.theta0 = solve_theta0(model, opts.theta0_lo, opts.theta0_hi);
        r.fixed_point = model.family_point(*r.theta0);
        r.verdicts.necessary = true;
    });
    if (!r.theta0) return r;
    detail::run_stage(r, "melnikov_slope", [&] {
        r.melnikov_slope = melnikov_slope(model, *r.theta0);
        r.verdicts.sufficient = *r.melnikov_slope != 0.0;
        r.verdicts.stab2 = *r.melnikov_slope < 0.0;
    });
    return r;
}

// ---------------------------------------------------------------------------
// Biped-specific extras.

/// fn(s) = a0 + a3 s^3 along the walker family: constant plus cubic.
struct NecessaryCubic {
    double constant = 0.0;
    double cubic = 0.0;
    /// |fn(2) - (a0 + 8 a3)|, a check that no other powers are present.
    double structure_residual = 0.0;
};

inline NecessaryCubic biped_necessary_cubic() {
    const BipedFamilyModel m;
    NecessaryCubic c;
    c.constant = necessary_condition_fn(m, 0.0);
    c.cubic = necessary_condition_fn(m, 1.0) - c.constant;
    c.structure_residual = std::abs(necessary_condition_fn(m, 2.0) - (c.constant + 8.0 * c.cubic));
    return c;
}

struct BipedExtras {
    double t1 = 0.0;
    double t2 = 0.0;
    double alpha_t2 = 0.0;
    double alpha_t1 = 0.0;
    NecessaryCubic cubic;
    std::array<double, 5> h_coefficients_t2{};
    std::array<double, 5> f_coefficients_t2{};
    Vec2 dT_dstate_at_1 = Vec2::Zero();
    Vec2 dP_ddelta_at_theta0 = Vec2::Zero();
    Mat2 mixed_at_theta0 = Mat2::Zero();
    Mat2 mixed_frozen_period_at_theta0 = Mat2::Zero();
    /// Same slope from the finite-difference-in-delta mixed derivative.
    std::optional<double> melnikov_slope_fd;
};

struct BipedReport {
    BifurcationReport core;
    BipedExtras extras;
};

struct BipedReportOptions {
    ReportOptions report{};
    bool with_fd_oracle = true;
    double fd_delta_step = 1e-4;
    poincare::MapOptions fd_map = poincare::tight_map_options();
};

inline BipedReport build_biped_report(const BipedReportOptions& opts = {}) {
    BipedReport out;
    const BipedFamilyModel model;
    out.core = build_report(model, opts.report);
    auto& r = out.core;
    auto& x = out.extras;
    detail::run_stage(r, "roots", [&] {
        const auto roots = closedform::step_period_roots();
        x.t1 = roots.t1;
        x.t2 = roots.t2;
        x.alpha_t1 = closedform::alpha(roots.t1);
        x.alpha_t2 = closedform::alpha(roots.t2);
        x.h_coefficients_t2 = closedform::h_coefficients(roots.t2);
        x.f_coefficients_t2 = closedform::f_coefficients(roots.t2);
    });
    detail::run_stage(r, "necessary", [&] { x.cubic = biped_necessary_cubic(); });
    detail::run_stage(r, "poincare", [&] { x.dT_dstate_at_1 = poincare::dT_dstate(closedform::family_point(1.0)); });
    if (!r.theta0 || !r.eigen) return out;
    const SectionPoint p0 = closedform::family_point(*r.theta0);
    detail::run_stage(r, "poincare", [&] {
        x.dP_ddelta_at_theta0 = poincare::dP_ddelta(p0);
        x.mixed_at_theta0 = poincare::dPdelta_dstate(p0, poincare::PeriodDependence::kTotal);
        x.mixed_frozen_period_at_theta0 = poincare::dPdelta_dstate(p0, poincare::PeriodDependence::kFrozen);
    });
    if (opts.with_fd_oracle) {
        detail::run_stage(r, "fd_oracle", [&] {
            const auto e = eigenstructure_2x2(poincare::jacobian_state_analytic(p0));
            const Mat2 c = poincare::dPdelta_dstate_fd(p0, opts.fd_delta_step, opts.fd_map, true);
            x.melnikov_slope_fd = e.z.dot(c * e.y);
        });
    }
    return out;
}

}  // namespace biped::melnikov
