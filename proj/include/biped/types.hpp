#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <string>
#include <string_view>

#include <Eigen/Dense>

#include "biped/errors.hpp"

namespace biped {

using Vec2 = Eigen::Vector2d;
using Mat2 = Eigen::Matrix2d;

/// Hybrid state of the walker: stance angle, its rate, inter-leg angle and
/// its rate. Time is the normalized pendulum time. The same struct carries
/// the scaled variables (Theta, Phi) of the expanded model.
struct State4 {
    double theta = 0.0;
    double theta_dot = 0.0;
    double phi = 0.0;
    double phi_dot = 0.0;

    std::array<double, 4> to_array() const { return {theta, theta_dot, phi, phi_dot}; }

    static State4 from_array(const std::array<double, 4>& a) { return {a[0], a[1], a[2], a[3]}; }

    bool is_finite() const {
        return std::isfinite(theta) && std::isfinite(theta_dot) && std::isfinite(phi) &&
               std::isfinite(phi_dot);
    }

    friend State4 operator+(const State4& a, const State4& b) {
        return {a.theta + b.theta, a.theta_dot + b.theta_dot, a.phi + b.phi, a.phi_dot + b.phi_dot};
    }
    friend State4 operator-(const State4& a, const State4& b) {
        return {a.theta - b.theta, a.theta_dot - b.theta_dot, a.phi - b.phi, a.phi_dot - b.phi_dot};
    }
    friend State4 operator*(double k, const State4& a) {
        return {k * a.theta, k * a.theta_dot, k * a.phi, k * a.phi_dot};
    }
    friend bool operator==(const State4&, const State4&) = default;
};

/// Max-norm, used for componentwise comparisons.
inline double max_abs(const State4& s) {
    return std::max({std::abs(s.theta), std::abs(s.theta_dot), std::abs(s.phi), std::abs(s.phi_dot)});
}

/// Post-heelstrike section coordinates (theta, omega): stance angle and
/// stance angular velocity right after the legs swap.
struct SectionPoint {
    double theta = 0.0;
    double omega = 0.0;

    Vec2 vec() const { return {theta, omega}; }
    static SectionPoint from(const Vec2& v) { return {v(0), v(1)}; }

    bool is_finite() const { return std::isfinite(theta) && std::isfinite(omega); }
    friend bool operator==(const SectionPoint&, const SectionPoint&) = default;
};

inline double distance(const SectionPoint& a, const SectionPoint& b) {
    return std::hypot(a.theta - b.theta, a.omega - b.omega);
}

/// Ground slope parameterized by the expansion parameter: gamma = delta^{3/2}.
class SlopeParam {
public:
    explicit SlopeParam(double delta) : delta_(delta) {
        if (!std::isfinite(delta) || delta < 0.0) {
            throw DomainError("dynamics", "slope parameter delta must be finite and >= 0");
        }
    }

    double delta() const { return delta_; }
    double gamma() const { return delta_ * std::sqrt(delta_); }
    /// Ratio between original and scaled angles, theta = sqrt(delta) * Theta.
    double angle_scale() const { return std::sqrt(delta_); }

private:
    double delta_;
};

/// Which vector field / jump map pair drives the walker.
enum class ModelForm {
    kFull,      ///< original switched pendula at slope gamma
    kExpanded,  ///< first-order expansion in delta, remainders dropped
};

inline std::string_view to_string(ModelForm m) {
    return m == ModelForm::kFull ? "full" : "expanded";
}

inline ModelForm parse_model_form(std::string_view s) {
    if (s == "full") return ModelForm::kFull;
    if (s == "expanded") return ModelForm::kExpanded;
    throw PreconditionError("config", "unknown model form '" + std::string(s) + "'");
}

}  // namespace biped
