#pragma once

#include <cmath>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <boost/math/tools/toms748_solve.hpp>

#include "biped/errors.hpp"

namespace biped::detail {

/// Sub-intervals of [lo, hi] (grid spacing `step`) on which `fn` changes
/// sign. A grid value that is exactly zero yields a degenerate bracket.
template <class Fn>
std::vector<std::pair<double, double>> scan_brackets(Fn&& fn, double lo, double hi, double step) {
    std::vector<std::pair<double, double>> out;
    const auto n = static_cast<std::size_t>(std::ceil((hi - lo) / step));
    double a = lo;
    double fa = fn(a);
    for (std::size_t k = 1; k <= n; ++k) {
        const double b = (k == n) ? hi : lo + static_cast<double>(k) * step;
        const double fb = fn(b);
        if (fa == 0.0) {
            out.emplace_back(a, a);
        } else if (fb != 0.0 && std::signbit(fa) != std::signbit(fb)) {
            out.emplace_back(a, b);
        }
        a = b;
        fa = fb;
    }
    if (fa == 0.0) out.emplace_back(a, a);
    return out;
}

/// Root of `fn` in a sign-changing bracket, refined until the bracket is
/// narrower than `tol`.
template <class Fn>
double refine_root(Fn&& fn, double a, double b, double tol, const char* stage = "roots") {
    if (a == b) return a;
    const double fa = fn(a);
    const double fb = fn(b);
    if (fa == 0.0) return a;
    if (fb == 0.0) return b;
    if (std::signbit(fa) == std::signbit(fb)) {
        throw NumericalError(stage, "refine_root: no sign change in bracket");
    }
    std::uintmax_t max_iter = 200;
    auto stop = [tol](double x, double y) { return std::abs(y - x) <= tol; };
    const auto [l, r] = boost::math::tools::toms748_solve(fn, a, b, fa, fb, stop, max_iter);
    if (max_iter >= 200) throw NumericalError(stage, "refine_root: no convergence");
    return 0.5 * (l + r);
}

}  // namespace biped::detail
