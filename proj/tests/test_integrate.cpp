#include <cmath>

#include <gtest/gtest.h>

#include "biped/closedform.hpp"
#include "biped/integrate.hpp"
#include "oracles.hpp"

using biped::State4;
namespace cf = biped::closedform;
namespace dyn = biped::dynamics;
namespace integ = biped::integrate;

namespace {

auto expanded(double delta) {
    return [delta](double, const State4& s) { return dyn::eval_expanded_field(s, delta); };
}

State4 family_start(double th) { return {th, cf::family_slope() * th, 2.0 * th, 0.0}; }

double closed_form_error(const State4& s0, double t_end, const integ::IntegratorOptions& o) {
    const auto r = integ::integrate_fixed_horizon(expanded(0.0), s0, t_end, o);
    return biped::max_abs(r.final_state - cf::unperturbed_solution(t_end, s0.theta, s0.theta_dot));
}

}  // namespace

TEST(IntegratorOptions, Validation) {
    integ::IntegratorOptions o;
    EXPECT_NO_THROW(o.validate());
    o.rel_tol = 0.0;
    EXPECT_THROW(o.validate(), biped::PreconditionError);
    o = {};
    o.t_max = -1.0;
    EXPECT_THROW(o.validate(), biped::PreconditionError);
    const auto h = integ::IntegratorOptions{}.scaled(0.5);
    EXPECT_DOUBLE_EQ(h.rel_tol, 0.5e-10);
    EXPECT_DOUBLE_EQ(h.event_tol, 0.5e-12);
}

TEST(Heelstrike, UnperturbedFamilyStep) {
    const auto ev = integ::integrate_to_heelstrike(expanded(0.0), family_start(1.0), {});
    EXPECT_NEAR(ev.t_event, oracle::kPubT2, 1e-4);
    EXPECT_NEAR(ev.t_event, oracle::kRefT2, 1e-9);
    EXPECT_EQ(ev.n_rejected_grazings, 1);
    EXPECT_NEAR(ev.state_at_event.theta, -1.0, 1e-8);
    EXPECT_NEAR(ev.state_at_event.theta_dot, cf::family_slope(), 1e-8);
    EXPECT_GT(ev.guard_rate, 0.0);
}

TEST(Heelstrike, ScaleInvariantAtDeltaZero) {
    const auto a = integ::integrate_to_heelstrike(expanded(0.0), family_start(1.0), {});
    const auto b = integ::integrate_to_heelstrike(expanded(0.0), family_start(2.0), {});
    EXPECT_NEAR(a.t_event, b.t_event, 1e-9);
    EXPECT_NEAR(2.0 * a.state_at_event.theta, b.state_at_event.theta, 1e-8);
}

TEST(Heelstrike, EventResidualBound) {
    integ::IntegratorOptions o;
    for (double th : {0.3, 1.0, 1.7}) {
        const auto ev = integ::integrate_to_heelstrike(expanded(0.01), family_start(th), o);
        EXPECT_LE(std::abs(dyn::guard(ev.state_at_event).value), 10.0 * o.event_tol * std::abs(ev.guard_rate));
        EXPECT_GT(ev.t_event, 0.0);
        EXPECT_LE(ev.t_event, o.t_max);
    }
}

TEST(Heelstrike, NoEventBeforeHorizon) {
    integ::IntegratorOptions o;
    o.t_max = 1.0;
    EXPECT_THROW(integ::integrate_to_heelstrike(expanded(0.0), family_start(1.0), o), biped::NoHeelstrikeError);
    // swing leg diverges without ever striking
    EXPECT_THROW(integ::integrate_to_heelstrike(expanded(0.0), State4{1.0, -1.2, 2.0, 0.0}, {}),
                 biped::NoHeelstrikeError);
}

TEST(Heelstrike, Deterministic) {
    const auto a = integ::integrate_to_heelstrike(expanded(0.003), family_start(0.9), {});
    const auto b = integ::integrate_to_heelstrike(expanded(0.003), family_start(0.9), {});
    EXPECT_EQ(a.t_event, b.t_event);
    EXPECT_EQ(a.state_at_event, b.state_at_event);
}

TEST(Heelstrike, DenseTrajectoryCoversStep) {
    integ::IntegratorOptions o;
    o.record_dense = true;
    const auto ev = integ::integrate_to_heelstrike(expanded(0.0), family_start(1.0), o);
    ASSERT_TRUE(ev.dense.has_value());
    EXPECT_EQ(ev.dense->t_begin(), 0.0);
    EXPECT_EQ(ev.dense->t_end(), ev.t_event);
    const double tm = 0.5 * ev.t_event;
    const State4 mid = ev.dense->at(tm);
    EXPECT_LT(biped::max_abs(mid - cf::unperturbed_solution(tm, 1.0, cf::family_slope())), 1e-8);
    EXPECT_THROW(ev.dense->at(ev.t_event + 1.0), biped::DomainError);
}

TEST(FixedHorizon, MatchesClosedForm) {
    EXPECT_LT(closed_form_error({1, 0, 2, 0}, 1.0, {}), 1e-8);
    EXPECT_LT(closed_form_error(family_start(1.3), oracle::kRefT2, {}), 1e-8);
}

TEST(FixedHorizon, ZeroHorizonAndEquilibrium) {
    const State4 s0{0.3, -0.2, 0.6, 0.0};
    EXPECT_EQ(integ::integrate_fixed_horizon(expanded(0.0), s0, 0.0, {}).final_state, s0);
    const State4 z{0, 0, 0, 0};
    EXPECT_EQ(integ::integrate_fixed_horizon(expanded(0.0), z, 2.0, {}).final_state, z);
    EXPECT_THROW(integ::integrate_fixed_horizon(expanded(0.0), s0, -1.0, {}), biped::DomainError);
}

TEST(FixedHorizon, TighterToleranceIsNoWorse) {
    const State4 s0{1.0, -0.7, 2.0, 0.0};
    integ::IntegratorOptions o;
    o.rel_tol = o.abs_tol = 1e-6;
    double prev = closed_form_error(s0, 3.0, o);
    for (int k = 0; k < 4; ++k) {
        o = o.scaled(0.5);
        const double e = closed_form_error(s0, 3.0, o);
        EXPECT_LE(e, prev * 1.05);
        prev = e;
    }
}

TEST(FixedHorizon, Sampling) {
    const auto r = integ::integrate_fixed_horizon(expanded(0.0), family_start(1.0), 2.0, {});
    const auto s = r.dense.sample(5);
    ASSERT_EQ(s.size(), 5u);
    EXPECT_EQ(s.front().t, 0.0);
    EXPECT_EQ(s.back().t, 2.0);
    EXPECT_LT(biped::max_abs(s[2].state - cf::unperturbed_solution(1.0, 1.0, cf::family_slope())), 1e-8);
}
