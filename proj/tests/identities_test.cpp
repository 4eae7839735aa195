/* Copyright 2026 The hypzeta Authors. All Rights Reserved.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 * ========================================================================= */

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "hypzeta/identities.hpp"

namespace hypzeta {
namespace {

TEST(SamplePoints, LieInTheLowerHalfStrip) {
    for (const Complex s : kCutSafePoints) {
        EXPECT_GT(s.real(), 0.0);
        EXPECT_LT(s.real(), 0.5);
        EXPECT_LT(s.imag(), 0.0);
    }
    EXPECT_EQ(kSamplePointsVersion, 1);
}

TEST(SamplePoints, PathsFromTheBasePointAreCutSafe) {
    for (const auto& c : reference_cases())
        for (const Complex s : kCutSafePoints) EXPECT_TRUE(path_is_cut_safe(c.signature, s, kSampleBasePoint)) << s;
}

TEST(SamplePoints, CrossingTheRealAxisIsDetected) {
    for (const auto& c : reference_cases())
        EXPECT_FALSE(path_is_cut_safe(c.signature, Complex(0.25, 0.5), kSampleBasePoint)) << c.signature.to_string();
}

TEST(Identities, HoldAtEveryPinnedPoint) {
    for (const auto& c : reference_cases())
        for (const Complex s : kCutSafePoints) {
            const IdentityResidual residuals[] = {
                elliptic_ratio_residual(c.signature, s),
                z_infty_four_point_residual(c.signature, s),
                elliptic_block_residual(c.signature, s),
                ruelle_fe_residual(c.signature, c.model, s),
                kappa_reflection_residual(c.signature, c.model, s),
            };
            for (const auto& r : residuals) EXPECT_LT(r.rel_diff, 1e-9) << r.name << " " << c.signature.to_string() << " " << s;
        }
}

TEST(Identities, KappaReflectionInUpperHalfStrip) {
    int points = 0;
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 5; ++j) {
            const Complex s(0.15 + 0.1 * i, 0.6 * (j + 1));
            for (const auto& c : reference_cases())
                EXPECT_LT(kappa_reflection_residual(c.signature, c.model, s).rel_diff, 1e-9) << s;
            ++points;
        }
    EXPECT_EQ(points, 40);
}

TEST(Identities, EllipticRatioOnRandomSignatures) {
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> order(2, 9);
    std::uniform_real_distribution<double> re(0.05, 0.45), im(-3.0, -0.05);
    for (int i = 0; i < 30; ++i) {
        const Signature sig = Signature::make(1, 0, {order(rng), order(rng), order(rng)});
        const Complex s(re(rng), im(rng));
        EXPECT_LT(elliptic_ratio_residual(sig, s).rel_diff, 1e-9) << sig.to_string() << " " << s;
        EXPECT_LT(elliptic_block_residual(sig, s).rel_diff, 1e-9) << sig.to_string() << " " << s;
    }
}

TEST(Identities, ResidualCarriesBothSides) {
    const auto c = reference_cases().front();
    const IdentityResidual r = z_infty_four_point_residual(c.signature, kCutSafePoints[3]);
    EXPECT_EQ(r.name, "Z_inf four-point");
    EXPECT_NEAR(r.rel_diff, std::abs(std::exp(r.log_lhs - r.log_rhs) - 1.0), 1e-15);
}

}  // namespace
}  // namespace hypzeta
