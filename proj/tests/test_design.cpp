// Copyright 2026 The lbisim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <cmath>

#include "fixtures.hpp"
#include "lbisim/design.hpp"
#include "lbisim/dispersive.hpp"

namespace lbisim {
namespace {

TEST(design, linear_grid) {
    auto g = linear_grid(4.0, 5.5, 1501);
    ASSERT_EQ(g.size(), 1501u);
    EXPECT_EQ(g.front(), 4.0);
    EXPECT_EQ(g.back(), 5.5);
    EXPECT_NEAR(g[1] - g[0], 1e-3, 1e-15);
    EXPECT_THROW(linear_grid(4.0, 5.5, 1), std::invalid_argument);
    EXPECT_THROW(linear_grid(5.5, 4.0, 10), std::invalid_argument);
}

TEST(design, degenerate_copy) {
    DeviceSpec d = testing::bus25_device(4.5);
    DeviceSpec e = at_degenerate_frequency(d, d.pairs[0], 4.9);
    EXPECT_EQ(e.qudit("q2").omega_q_ghz, 4.9);
    EXPECT_EQ(e.qudit("q5").omega_q_ghz, 4.9);
    EXPECT_EQ(d.qudit("q2").omega_q_ghz, 4.5);
}

TEST(design, curve_values_are_j_total) {
    DeviceSpec d = testing::bus25_device();
    auto grid = linear_grid(4.0, 5.5, 31);
    SweepCurve c = j_vs_frequency(d, d.pairs[0], grid);
    EXPECT_EQ(c.quantity, "j");
    for (std::size_t i = 0; i < grid.size(); ++i) {
        DeviceSpec at = at_degenerate_frequency(d, d.pairs[0], grid[i]);
        EXPECT_EQ(c.value[i], j_total_mhz(at, at.pairs[0]));
        EXPECT_FALSE(c.is_pole[i]);
    }
    EXPECT_NEAR(c.value[10], testing::kBus25JAt45, 1e-12);
}

TEST(design, poles_are_flagged) {
    DeviceSpec d = testing::bus25_device();
    SweepCurve c = j_vs_frequency(d, d.pairs[0], linear_grid(5.9, 6.1, 201));
    auto poles = c.poles();
    ASSERT_FALSE(poles.empty());
    for (double p : poles) EXPECT_LT(std::abs(p - 6.017), kPoleExclusionGhz);
    for (std::size_t i = 0; i < c.value.size(); ++i) EXPECT_EQ(c.is_pole[i], std::isnan(c.value[i]));
}

TEST(design, bus25_roots_frozen) {
    DeviceSpec d = testing::bus25_device();
    SweepCurve c = j_vs_frequency(d, d.pairs[0], linear_grid(4.0, 5.5, 1501));
    auto roots = find_zero_crossings(c);
    ASSERT_EQ(roots.size(), 2u);
    EXPECT_NEAR(roots[0], testing::kBus25RootLow, 1e-9);
    EXPECT_NEAR(roots[1], testing::kBus25RootHigh, 1e-9);
}

TEST(design, roots_independent_of_grid_density) {
    DeviceSpec d = testing::bus25_device();
    auto coarse = find_zero_crossings(j_vs_frequency(d, d.pairs[0], linear_grid(4.0, 5.5, 151)));
    auto fine = find_zero_crossings(j_vs_frequency(d, d.pairs[0], linear_grid(4.0, 5.5, 3001)));
    ASSERT_EQ(coarse.size(), fine.size());
    for (std::size_t i = 0; i < fine.size(); ++i) EXPECT_NEAR(coarse[i], fine[i], 1e-9);
}

TEST(design, single_mode_closed_form_root) {
    // J = J0 + g^2 / (omega - omega_r) vanishes at omega_r - g^2 / J0.
    DeviceSpec d;
    d.qudits = {{"a", 4.5, -0.3}, {"b", 4.5, -0.3}};
    d.modes = {{"m", 6.0}};
    d.couplings = {{"a", "m", 80.0}, {"b", "m", 80.0}};
    d.direct = {{"a", "b", 8.0}};
    d.pairs = {{"a", "b", {"m"}, ""}};
    auto roots = find_zero_crossings(j_vs_frequency(d, d.pairs[0], linear_grid(4.5, 5.5, 101)));
    ASSERT_EQ(roots.size(), 1u);
    EXPECT_NEAR(roots[0], 6.0 - 6400.0 / 8.0 * 1e-3, 1e-9);
}

TEST(design, interpolated_roots_without_evaluator) {
    SweepCurve c;
    c.quantity = "j";
    c.freq_ghz = {1.0, 2.0, 3.0};
    c.value = {-1.0, 1.0, 3.0};
    c.is_pole = {false, false, false};
    auto roots = find_zero_crossings(c);
    ASSERT_EQ(roots.size(), 1u);
    EXPECT_DOUBLE_EQ(roots[0], 1.5);
}

TEST(design, no_crossing_across_pole) {
    SweepCurve c;
    c.quantity = "j";
    c.freq_ghz = {1.0, 2.0, 3.0};
    c.value = {-1.0, std::nan(""), 3.0};
    c.is_pole = {false, true, false};
    EXPECT_TRUE(find_zero_crossings(c).empty());
}

TEST(design, window_contains_root_and_respects_threshold) {
    DeviceSpec d = testing::bus25_device();
    SweepCurve c = j_vs_frequency(d, d.pairs[0], linear_grid(4.0, 5.5, 1501));
    auto w = window_around(c, testing::kBus25RootLow, kBroadbandThresholdMhz);
    ASSERT_TRUE(w.has_value());
    EXPECT_LE(w->lo_ghz, testing::kBus25RootLow);
    EXPECT_GE(w->hi_ghz, testing::kBus25RootLow);
    for (std::size_t i = 0; i < c.freq_ghz.size(); ++i) {
        if (c.freq_ghz[i] >= w->lo_ghz && c.freq_ghz[i] <= w->hi_ghz) EXPECT_LE(std::abs(c.value[i]), 0.5);
    }
    auto widest = widest_window(c, kBroadbandThresholdMhz);
    ASSERT_TRUE(widest.has_value());
    EXPECT_GE(widest->width_mhz(), w->width_mhz());
    EXPECT_FALSE(window_around(c, 4.0, 1e-6).has_value());
}

TEST(design, zz_is_quadratic_in_j_along_sweep) {
    DeviceSpec d = testing::bus25_device();
    auto grid = linear_grid(4.0, 5.5, 301);
    SweepCurve j = j_vs_frequency(d, d.pairs[0], grid);
    SweepCurve z = zz_vs_frequency(d, d.pairs[0], grid);
    EXPECT_EQ(z.quantity, "zz");
    double ratio = z.value[0] / (j.value[0] * j.value[0]);
    for (std::size_t i = 0; i < grid.size(); ++i) {
        EXPECT_NEAR(z.value[i], ratio * j.value[i] * j.value[i], 1e-9 * std::abs(z.value[i]) + 1e-15);
    }
    EXPECT_LT(std::abs(z.evaluate(testing::kBus25RootLow)), 1e-9);
}

TEST(design, sweep_thread_count_does_not_change_result) {
    DeviceSpec d = testing::bus25_device();
    auto grid = linear_grid(4.0, 5.5, 301);
    SweepCurve a = j_vs_frequency(d, d.pairs[0], grid, 1);
    SweepCurve b = j_vs_frequency(d, d.pairs[0], grid, 4);
    EXPECT_EQ(a.value, b.value);
}

TEST(design, scheme_examples_are_valid) {
    auto schemes = example_schemes();
    ASSERT_EQ(schemes.size(), 4u);
    for (const auto &s : schemes) EXPECT_TRUE(s.violations().empty()) << to_string(s.variant);
    SchemeSpec bad = schemes[0];
    bad.j0_mhz = 1.0;
    EXPECT_FALSE(bad.violations().empty());
    EXPECT_THROW(bad.device(), std::invalid_argument);
}

TEST(design, scheme_signatures) {
    auto sigs = scheme_comparison(example_schemes(), linear_grid(4.0, 5.5, 751));
    ASSERT_EQ(sigs.size(), 4u);
    const auto &single = sigs[0], &narrow = sigs[1], &broad = sigs[2], &lbi = sigs[3];
    EXPECT_EQ(single.variant, SchemeVariant::SingleMode);
    EXPECT_TRUE(single.roots.empty());
    EXPECT_TRUE(single.one_signed);
    EXPECT_TRUE(broad.roots.empty());
    EXPECT_TRUE(broad.one_signed);

    ASSERT_FALSE(narrow.roots.empty());
    ASSERT_FALSE(lbi.roots.empty());
    EXPECT_NEAR(narrow.roots[0], 4.5, 1e-9);
    EXPECT_NEAR(lbi.roots[0], 4.5, 1e-9);
    // Two-mode interference cancels more gently than a single mode against J0.
    EXPECT_LT(lbi.normalized_slope_per_ghz, narrow.normalized_slope_per_ghz);
    ASSERT_TRUE(lbi.window.has_value());
    ASSERT_TRUE(narrow.window.has_value());
    EXPECT_GT(lbi.window->width_mhz(), narrow.window->width_mhz());
}

}  // namespace
}  // namespace lbisim
