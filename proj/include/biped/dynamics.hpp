#pragma once

#include <cmath>

#include "biped/errors.hpp"
#include "biped/types.hpp"

/// Vector fields, heelstrike reset maps and the heelstrike guard of the
/// compass walker, in original variables (full model) and in the scaled
/// variables of the first-order expansion in delta (expanded model).
namespace biped::dynamics {

/// Guard tolerance for the jump maps, in radians.
inline constexpr double kGuardTol = 1e-9;

namespace detail {

inline void require_finite(const State4& s, const char* what) {
    if (!s.is_finite()) {
        throw DomainError("dynamics", std::string(what) + ": non-finite state");
    }
}

inline void require_on_guard(const State4& s, double guard_tol) {
    if (std::abs(s.phi - 2.0 * s.theta) > guard_tol) {
        throw PreconditionError("dynamics", "jump map applied off the heelstrike surface phi = 2 theta");
    }
}

}  // namespace detail

/// Time derivative of the state under the original switched pendula at
/// slope `gamma` (radians).
inline State4 eval_full_field(const State4& s, double gamma) {
    detail::require_finite(s, "eval_full_field");
    if (!std::isfinite(gamma)) throw DomainError("dynamics", "eval_full_field: non-finite slope");
    const double stance_acc = std::sin(s.theta - gamma);
    const double sin_phi = std::sin(s.phi);
    const double swing_acc =
        stance_acc + s.theta_dot * s.theta_dot * sin_phi - std::cos(s.theta - gamma) * sin_phi;
    return {s.theta_dot, stance_acc, s.phi_dot, swing_acc};
}

/// Time derivative under the expanded model in scaled variables, all o(delta)
/// remainders dropped.
inline State4 eval_expanded_field(const State4& s, double delta) {
    detail::require_finite(s, "eval_expanded_field");
    if (!std::isfinite(delta) || delta < 0.0) {
        throw DomainError("dynamics", "eval_expanded_field: delta must be finite and >= 0");
    }
    const double th = s.theta;
    const double ph = s.phi;
    const double stance_acc = th - delta - delta * th * th * th / 6.0;
    const double swing_acc = stance_acc - ph + delta * s.theta_dot * s.theta_dot * ph +
                             0.5 * delta * th * th * ph + delta * ph * ph * ph / 6.0;
    return {s.theta_dot, stance_acc, s.phi_dot, swing_acc};
}

/// Heelstrike reset in original variables: the legs swap roles.
inline State4 apply_jump_full(const State4& s, double guard_tol = kGuardTol) {
    detail::require_finite(s, "apply_jump_full");
    detail::require_on_guard(s, guard_tol);
    const double c = std::cos(2.0 * s.theta);
    return {-s.theta, c * s.theta_dot, -2.0 * s.theta, (1.0 - c) * c * s.theta_dot};
}

/// Heelstrike reset of the expanded model. The last component keeps only
/// the first-order term 2 delta Theta^2 Theta_dot.
inline State4 apply_jump_expanded(const State4& s, double delta, double guard_tol = kGuardTol) {
    detail::require_finite(s, "apply_jump_expanded");
    if (!std::isfinite(delta) || delta < 0.0) {
        throw DomainError("dynamics", "apply_jump_expanded: delta must be finite and >= 0");
    }
    detail::require_on_guard(s, guard_tol);
    const double th2 = s.theta * s.theta;
    return {-s.theta, (1.0 - 2.0 * delta * th2) * s.theta_dot, -2.0 * s.theta,
            2.0 * delta * th2 * s.theta_dot};
}

/// Value of the switching function phi - 2 theta and its time derivative.
struct GuardValue {
    double value = 0.0;
    double rate = 0.0;
};

inline GuardValue guard(const State4& s) {
    return {s.phi - 2.0 * s.theta, s.phi_dot - 2.0 * s.theta_dot};
}

/// Acceptance rule for a guard crossing. A crossing is a heelstrike only if
/// the stance leg is well past vertical (Theta < -margin), the swing foot is
/// moving down through the ground level (rate > 0) and the crossing is
/// transversal (rate >= rate_min). Margins are fractions of |Theta(0)|.
/// Other crossings are grazings of the swing foot and are skipped.
struct HeelstrikeRule {
    double theta_margin_fraction = 0.25;
    double grazing_rate_fraction = 1e-3;

    bool accepts(double theta_start_abs, double theta, double guard_rate) const {
        return theta < -theta_margin_fraction * theta_start_abs &&
               guard_rate >= grazing_rate_fraction * theta_start_abs && guard_rate > 0.0;
    }
};

/// Full-model state expressed in the scaled variables: angles divided by
/// sqrt(delta).
inline State4 to_scaled(const State4& full, const SlopeParam& slope) {
    const double k = slope.angle_scale();
    if (k == 0.0) throw DomainError("dynamics", "scaling undefined at delta = 0");
    return (1.0 / k) * full;
}

inline State4 from_scaled(const State4& scaled, const SlopeParam& slope) {
    return slope.angle_scale() * scaled;
}

/// Full field expressed in scaled variables, for comparison with the
/// expanded field.
inline State4 eval_full_field_scaled(const State4& scaled, const SlopeParam& slope) {
    const State4 d = eval_full_field(from_scaled(scaled, slope), slope.gamma());
    return to_scaled(d, slope);
}

}  // namespace biped::dynamics
