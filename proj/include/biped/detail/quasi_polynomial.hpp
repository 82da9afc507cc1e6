#pragma once

#include <array>
#include <cmath>
#include <vector>

namespace biped::detail {

enum class Trig { kOne, kCos, kSin };

/// coef * t^t_power * exp(rate * t) * trig(freq * t)
struct QuasiTerm {
    double coef;
    int t_power;
    double rate;
    Trig trig;
    double freq;

    double operator()(double t) const {
        double v = coef * std::exp(rate * t);
        for (int k = 0; k < t_power; ++k) v *= t;
        switch (trig) {
            case Trig::kCos: return v * std::cos(freq * t);
            case Trig::kSin: return v * std::sin(freq * t);
            case Trig::kOne: break;
        }
        return v;
    }
};

using TermList = std::vector<QuasiTerm>;

/// One TermList per monomial, in the order
/// 1, theta^3, theta^2 omega, theta omega^2, omega^3.
using MonomialTable = std::array<TermList, 5>;

inline std::array<double, 5> eval_table(const MonomialTable& table, double t) {
    std::array<double, 5> out{};
    for (std::size_t m = 0; m < table.size(); ++m) {
        double acc = 0.0;
        for (const auto& term : table[m]) acc += term(t);
        out[m] = acc;
    }
    return out;
}

}  // namespace biped::detail
