// Copyright 2026 The PulseForge Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "pulseforge/analysis.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "pulseforge/errors.h"
#include "pulseforge/families.h"

using namespace pulseforge;

namespace {

size_t argmin(const std::vector<double> &v) {
    return static_cast<size_t>(std::min_element(v.begin(), v.end()) - v.begin());
}

std::vector<double> c_grid_50() {
    std::vector<double> grid;
    for (int j = 1; j <= 50; j++) {
        grid.push_back(-1.0 + 2.0 * j / 51.0);
    }
    return grid;
}

}  // namespace

TEST(operation_time, rejects_non_positive) {
    EXPECT_THROW(OperationTime(0.0), std::invalid_argument);
    EXPECT_THROW(OperationTime(-1.0), std::invalid_argument);
    EXPECT_EQ(OperationTime(2.0).radians(), 2.0);
}

TEST(operation_time, short_corpse_examples) {
    EXPECT_NEAR(operation_time(short_corpse(TargetRotation(kPi, 0.0)).pulses).radians(), 7 * kPi / 3, 1e-14);
    EXPECT_NEAR(operation_time(short_corpse(TargetRotation(kPi / 2, 0.0)).pulses).radians(), 9.5501058, 1e-6);
}

TEST(operation_time, matches_closed_form) {
    for (double theta : {0.4, kPi / 2, kPi, 5.0}) {
        TargetRotation target(theta, 0.0);
        for (auto w : {WindingNumbers(0, 0, 0), WindingNumbers(1, 0, 0), WindingNumbers(0, 2, 1)}) {
            C1Bounds b = c1_bounds(target.c(), w.parity());
            for (double c1 : uniform_grid(b.lower, b.upper, 9)) {
                CompositeSequence seq = build_sequence(target, c1, w);
                EXPECT_NEAR(operation_time(seq).radians(), operation_time_closed_form(target.c(), c1, w.total()),
                            1e-12);
            }
        }
    }
}

TEST(operation_time, winding_adds_two_pi) {
    TargetRotation target(kPi / 2, 0.0);
    for (double c1 : {-0.5, 0.0, 0.3}) {
        // Adding two windings keeps the parity, so c2 is unchanged.
        double base = operation_time(build_sequence(target, c1, WindingNumbers(0, 0, 0))).radians();
        double plus = operation_time(build_sequence(target, c1, WindingNumbers(1, 1, 0))).radians();
        EXPECT_NEAR(plus, base + 2 * kTwoPi, 1e-12);
        double odd = operation_time(build_sequence(target, c1, WindingNumbers(0, 1, 0))).radians();
        double odd_plus = operation_time(build_sequence(target, c1, WindingNumbers(1, 1, 1))).radians();
        EXPECT_NEAR(odd_plus, odd + 2 * kTwoPi, 1e-12);
    }
    // At c = 0 the parities coincide, so a single extra winding adds exactly 2pi.
    TargetRotation half(kPi, 0.0);
    for (double c1 : {-0.5, 0.0, 0.3, 0.8}) {
        double base = operation_time(build_sequence(half, c1, WindingNumbers(0, 0, 0))).radians();
        double one = operation_time(build_sequence(half, c1, WindingNumbers(1, 0, 0))).radians();
        EXPECT_NEAR(one, base + kTwoPi, 1e-12);
    }
}

TEST(min_operation_time, examples) {
    MinOperationTime m0 = min_operation_time(0.0, 0);
    EXPECT_NEAR(m0.c1_star, std::sqrt(3.0) / 2, 1e-15);
    EXPECT_NEAR(m0.length, 7 * kPi / 3, 1e-12);
    MinOperationTime m1 = min_operation_time(0.0, 1);
    EXPECT_NEAR(m1.c1_star, std::sqrt(3.0) / 2, 1e-15);
    EXPECT_NEAR(m1.length, 13 * kPi / 3, 1e-12);
    EXPECT_THROW(min_operation_time(0.0, -1), std::invalid_argument);
}

TEST(min_operation_time, approaches_four_pi) {
    double c = 1.0 - 1e-15;
    EXPECT_NEAR(min_operation_time(c, 0).length, 4 * kPi, 1e-6);
    EXPECT_NEAR(min_operation_time(c, 1).length, 4 * kPi, 1e-6);
    // Convergence is monotone from both sides.
    double prev0 = 0.0, prev1 = 1e9;
    for (double gap : {1e-2, 1e-4, 1e-6, 1e-8, 1e-10, 1e-12}) {
        double l0 = min_operation_time(1.0 - gap, 0).length;
        double l1 = min_operation_time(1.0 - gap, 1).length;
        EXPECT_GE(l0, prev0 - 1e-12);
        EXPECT_LE(l1, prev1 + 1e-12);
        EXPECT_LE(l0, 4 * kPi + 1e-9);
        EXPECT_GE(l1, 4 * kPi - 1e-9);
        prev0 = l0;
        prev1 = l1;
    }
}

TEST(operation_time, decreasing_in_c1) {
    for (double c : {0.0, 0.3, -0.3, 1 / std::sqrt(2.0), -1 / std::sqrt(2.0), 0.95, -0.95}) {
        for (int n : {0, 1}) {
            C1Bounds b = c1_bounds(c, parity_of(n));
            std::vector<double> grid = uniform_grid(b.lower, b.upper, 41);
            double h = 1e-6;
            for (size_t i = 1; i + 1 < grid.size(); i++) {
                double d = (operation_time_closed_form(c, grid[i] + h, n) -
                            operation_time_closed_form(c, grid[i] - h, n)) /
                           (2 * h);
                EXPECT_LT(d, 0.0) << "c=" << c << " n=" << n << " c1=" << grid[i];
            }
        }
    }
}

TEST(time_sweep, monotone_tables) {
    std::vector<double> grid = c_grid_50();
    SweepTable t0 = time_sweep(0, grid);
    SweepTable t1 = time_sweep(1, grid);
    std::vector<double> l0 = t0.column("L_min");
    std::vector<double> l1 = t1.column("L_min");
    ASSERT_EQ(l0.size(), 50u);
    for (size_t i = 0; i < l0.size(); i++) {
        EXPECT_LE(l0[i], l1[i] + 1e-12);
        if (i > 0) {
            EXPECT_GE(l0[i], l0[i - 1]);
            EXPECT_LE(l1[i], l1[i - 1]);
        }
    }
    EXPECT_EQ(t0.columns(), (std::vector<std::string>{"c", "c1_star", "L_min"}));
}

TEST(infidelity_sweep, half_turn_endpoint_minima) {
    SweepTable w000 = infidelity_sweep(kPi, WindingNumbers(0, 0, 0), 0.1, 101);
    SweepTable w010 = infidelity_sweep(kPi, WindingNumbers(0, 1, 0), 0.1, 101);
    SweepTable w100 = infidelity_sweep(kPi, WindingNumbers(1, 0, 0), 0.1, 101);
    auto f000 = w000.column("gate_infidelity");
    auto f010 = w010.column("gate_infidelity");
    auto f100 = w100.column("gate_infidelity");
    EXPECT_EQ(argmin(f000), 100u);
    EXPECT_EQ(argmin(f010), 0u);
    EXPECT_EQ(argmin(f100), 100u);
    double best = f100.back();
    for (const auto *curve : {&f000, &f010}) {
        for (double v : *curve) {
            EXPECT_LT(best, v);
        }
    }
    EXPECT_NEAR(w000.column("c1").back(), std::sqrt(3.0) / 2, 1e-15);
    EXPECT_NEAR(w000.column("c1").front(), -std::sqrt(3.0) / 2, 1e-15);
    EXPECT_NEAR(w000.column("elementary_infidelity").front(), 4.993e-3, 1e-6);
    EXPECT_EQ(w000.column("alpha").back(), -1.0);
}

TEST(infidelity_sweep, quarter_turn_endpoint_minima) {
    auto f000 = infidelity_sweep(kPi / 2, WindingNumbers(0, 0, 0), 0.1, 101).column("gate_infidelity");
    auto f010 = infidelity_sweep(kPi / 2, WindingNumbers(0, 1, 0), 0.1, 101).column("gate_infidelity");
    auto f100 = infidelity_sweep(kPi / 2, WindingNumbers(1, 0, 0), 0.1, 101).column("gate_infidelity");
    EXPECT_EQ(argmin(f000), 100u);
    EXPECT_EQ(argmin(f010), 0u);
    EXPECT_EQ(argmin(f100), 100u);
    EXPECT_LT(f100.back(), *std::min_element(f000.begin(), f000.end()));
    EXPECT_LT(f100.back(), *std::min_element(f010.begin(), f010.end()));
}

TEST(infidelity_sweep, even_in_f) {
    for (auto w : {WindingNumbers(0, 0, 0), WindingNumbers(0, 1, 0), WindingNumbers(1, 0, 0)}) {
        auto plus = infidelity_sweep(kPi, w, 0.1, 31).column("gate_infidelity");
        auto minus = infidelity_sweep(kPi, w, -0.1, 31).column("gate_infidelity");
        for (size_t i = 0; i < plus.size(); i++) {
            EXPECT_NEAR(plus[i], minus[i], 1e-12);
        }
    }
}

TEST(infidelity_sweep, deterministic_across_thread_counts) {
    std::string a = infidelity_sweep(kPi / 2, WindingNumbers(1, 0, 0), 0.1, 57).to_csv(true);
    std::string b = infidelity_sweep(kPi / 2, WindingNumbers(1, 0, 0), 0.1, 57).to_csv(true);
    std::string c = infidelity_sweep(kPi / 2, WindingNumbers(1, 0, 0), 0.1, 57, Branch::kPlus, {4}).to_csv(true);
    EXPECT_EQ(a, b);
    EXPECT_EQ(a, c);
}

TEST(infidelity_sweep, validation) {
    EXPECT_THROW(infidelity_sweep(kPi, {}, 0.1, 2), std::invalid_argument);
    EXPECT_THROW(infidelity_sweep(0.0, {}, 0.1, 10), std::invalid_argument);
    EXPECT_THROW(infidelity_sweep(kPi, {}, 1.0, 10), std::invalid_argument);
}

TEST(state_infidelity_sweep, bounded_by_gate_infidelity) {
    for (auto w : {WindingNumbers(0, 0, 0), WindingNumbers(0, 1, 0), WindingNumbers(1, 0, 0)}) {
        SweepTable t = state_infidelity_sweep(kPi, w, 0.1, 101);
        auto state = t.column("state_infidelity");
        auto gate = t.column("gate_infidelity");
        for (size_t i = 0; i < state.size(); i++) {
            EXPECT_LE(state[i], gate[i] + 1e-12);
        }
    }
}

TEST(state_infidelity_sweep, interior_minimum_exists) {
    bool interior = false;
    for (auto w : {WindingNumbers(0, 0, 0), WindingNumbers(0, 1, 0), WindingNumbers(1, 0, 0)}) {
        auto state = state_infidelity_sweep(kPi, w, 0.1, 101).column("state_infidelity");
        size_t i = argmin(state);
        interior = interior || (i > 0 && i + 1 < state.size());
    }
    EXPECT_TRUE(interior);
}

TEST(state_infidelity_sweep, zero_error_gives_zero) {
    SweepTable t = state_infidelity_sweep(kPi / 2, WindingNumbers(0, 1, 0), 0.0, 21);
    for (const char *col : {"state_infidelity", "gate_infidelity", "elementary_state_infidelity"}) {
        for (double v : t.column(col)) {
            EXPECT_LT(v, 1e-15) << col;
        }
    }
}

TEST(scaling_exponent, elementary_pulse) {
    ScalingFit fit = scaling_exponent(Pulse(kPi, 0.0), 1e-3, 1e-2);
    EXPECT_NEAR(fit.exponent, 2.0, 0.05);
    EXPECT_EQ(fit.points, 12);
    EXPECT_LT(fit.residual, 1e-3);
}

TEST(scaling_exponent, interior_robust_sequence) {
    for (double c1 : {-0.5, 0.0, 0.3}) {
        CompositeSequence seq = build_sequence(TargetRotation(kPi, 0.0), c1);
        EXPECT_NEAR(scaling_exponent(seq, 1e-3, 1e-2).exponent, 4.0, 0.1) << c1;
    }
}

TEST(scaling_exponent, fundamental_corpse_moderate_f) {
    for (double theta : {kPi / 2, kPi}) {
        FamilySequence seq = fundamental_corpse(TargetRotation(theta, 0.0));
        EXPECT_GE(scaling_exponent(seq, 0.03, 0.1).exponent, 5.5) << theta;
    }
}

TEST(scaling_exponent, validation) {
    Pulse p(kPi, 0.0);
    EXPECT_THROW(scaling_exponent(p, 0.0, 0.1), std::invalid_argument);
    EXPECT_THROW(scaling_exponent(p, 0.1, 0.05), std::invalid_argument);
    EXPECT_THROW(scaling_exponent(p, 0.1, 0.4), std::invalid_argument);
    EXPECT_THROW(scaling_exponent(p, 0.01, 0.1, 5), std::invalid_argument);
    CompositeSequence seq = build_sequence(TargetRotation(kPi, 0.0), 0.2);
    EXPECT_THROW(scaling_exponent(seq, 1e-6, 1e-5), FloorReached);
}

TEST(first_order_derivative_norm, examples) {
    std::array<Pulse, 1> single{Pulse(kPi, 0.0)};
    EXPECT_NEAR(first_order_derivative_norm(single), 1.0, 1e-8);
    std::array<Pulse, 3> naive{Pulse(kPi / 3, 0.0), Pulse(kPi / 3, 0.0), Pulse(kPi / 3, 0.0)};
    EXPECT_GT(first_order_derivative_norm(naive), 0.1);
    for (double c1 : {-0.5, 0.0, 0.6}) {
        CompositeSequence seq = build_sequence(TargetRotation(kPi / 2, 0.4), c1, WindingNumbers(0, 1, 0));
        EXPECT_LT(first_order_derivative_norm(seq.pulses), 1e-8);
    }
    EXPECT_THROW(first_order_derivative_norm(single, 0.0), std::invalid_argument);
}

TEST(uniform_grid, exact_endpoints) {
    auto g = uniform_grid(-0.3, 0.7, 11);
    EXPECT_EQ(g.front(), -0.3);
    EXPECT_EQ(g.back(), 0.7);
    EXPECT_NEAR(g[5], 0.2, 1e-15);
    EXPECT_THROW(uniform_grid(0, 1, 1), std::invalid_argument);
}
