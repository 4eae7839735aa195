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

#include "hypzeta/errors.hpp"
#include "hypzeta/scattering.hpp"
#include "oracles.hpp"

namespace hypzeta {
namespace {

// sqrt(pi) Gamma(s - 1/2)/Gamma(s) zeta(2s - 1)/zeta(2s) from the test oracles.
Complex oracle_phi(Complex s) {
    return std::sqrt(kPi) * oracle::gamma(s - 0.5) / oracle::gamma(s) * oracle::zeta(2.0 * s - 1.0) / oracle::zeta(2.0 * s);
}

TEST(ModularPhi, ValueAtTwo) {
    const double expected = oracle_phi(2.0).real();
    EXPECT_NEAR(expected, 1.7445680821312559524, 1e-12);
    EXPECT_NEAR(expected, kPi / 2.0 * oracle::zeta(3.0).real() / (std::pow(kPi, 4) / 90.0), 1e-13);
    EXPECT_NEAR(modular_phi(2.0).real(), expected, 1e-12);
}

TEST(ModularPhi, MatchesOracleOffTheRealAxis) {
    for (const Complex s : {Complex(0.3, 1.0), Complex(1.7, -2.0), Complex(-0.8, 0.5), Complex(2.5, 4.0)})
        EXPECT_LT(std::abs(modular_phi(s) - oracle_phi(s)), 1e-10 * std::abs(oracle_phi(s))) << s;
}

TEST(ModularPhi, RemovablePoints) {
    EXPECT_NEAR(modular_phi(0.5).real(), -1.0, 1e-10);
    EXPECT_NEAR(modular_phi(0.5).imag(), 0.0, 1e-12);
    EXPECT_NEAR(std::abs(modular_phi(0.0)), 0.0, 1e-10);
    // phi(-1/2) phi(3/2) = 1 through the limit at -1/2
    EXPECT_NEAR(std::abs(modular_phi(-0.5) * modular_phi(1.5) - 1.0), 0.0, 1e-9);
    EXPECT_THROW(modular_phi(1.0), PoleError);
}

TEST(ModularPhi, FunctionalEquationOnGrid) {
    EXPECT_NEAR(std::abs(modular_phi(0.3) * modular_phi(0.7) - 1.0), 0.0, 1e-10);
    std::mt19937 rng(11);
    std::uniform_real_distribution<double> re(0.02, 0.98), im(-5.0, 5.0);
    for (int i = 0; i < 50; ++i) {
        const Complex s(re(rng), im(rng));
        EXPECT_LT(std::abs(modular_phi(s) * modular_phi(1.0 - s) - 1.0), 1e-9) << s;
    }
}

TEST(ModularPhi, LogDerivativeSymmetry) {
    const double h = 1e-5;
    auto log_derivative = [h](Complex s) {
        return (modular_phi(s + h) - modular_phi(s - h)) / (2.0 * h) / modular_phi(s);
    };
    std::mt19937 rng(12);
    std::uniform_real_distribution<double> re(0.05, 0.95), im(0.3, 5.0);
    for (int i = 0; i < 20; ++i) {
        const Complex s(re(rng), im(rng));
        EXPECT_LT(std::abs(log_derivative(s) - log_derivative(1.0 - s)), 1e-6) << s;
    }
}

TEST(RemovableLimit, RecoversSincAtZero) {
    const auto sinc = [](Complex z) { return std::sin(z) / z; };
    EXPECT_NEAR(removable_limit(sinc, 0.0).real(), 1.0, 1e-14);
}

TEST(PhiLeading, ModularFromFit) {
    const LeadingTerm lead = phi_leading_at_zero(ScatteringModel::modular());
    EXPECT_EQ(lead.n0, 1);
    EXPECT_NEAR(std::abs(lead.coeff), kPi / 3.0, 1e-9);
    EXPECT_LT(std::abs(lead.slope - 1.0), 0.01);
}

TEST(PhiLeading, ModularSignFromTaylorOracle) {
    // phi(s) ~ sqrt(pi) Gamma(-1/2) * s * zeta(-1)/zeta(0), since 1/Gamma(s) = s + O(s^2); zeta(0) = -1/2.
    const double taylor = std::sqrt(kPi) * oracle::gamma(-0.5).real() * oracle::zeta(-1.0).real() / -0.5;
    EXPECT_NEAR(taylor, -kPi / 3.0, 1e-12);
    const ScatteringModel model = ScatteringModel::modular();
    EXPECT_NEAR(phi_leading_at_zero(model).coeff, taylor, 1e-9);
    EXPECT_NEAR(model.phi_tilde_0(), taylor, 1e-15);
    ASSERT_TRUE(model.quoted_phi_tilde_0().has_value());
    EXPECT_NEAR(*model.quoted_phi_tilde_0(), kPi / 3.0, 1e-15);
}

TEST(PhiLeading, Trivial) {
    const LeadingTerm lead = phi_leading_at_zero(ScatteringModel::trivial());
    EXPECT_EQ(lead.n0, 0);
    EXPECT_NEAR(lead.coeff, 1.0, 1e-15);
}

TEST(PhiLeading, NonIntegerSlopeIsAFitError) {
    const auto model = ScatteringModel::custom("sqrt", 1, [](Complex s) { return std::sqrt(s); }, 0, 1.0, 1, 0);
    EXPECT_THROW(phi_leading_at_zero(model), FitError);
}

TEST(Models, BundledDataIsConsistent) {
    for (const auto& model : {ScatteringModel::modular(), ScatteringModel::trivial(0), ScatteringModel::trivial(1)}) {
        EXPECT_NO_THROW(validate_model(model)) << model.label();
        EXPECT_EQ(model.a_constant() % 2, 0) << model.label();
        EXPECT_GE(model.a_constant(), 0);
        EXPECT_LE(model.a_constant(), 2 * model.cusps());
        EXPECT_EQ((model.a_constant() / 2) % 2 == 0 ? 1 : -1, model.phi_half()) << model.label();
        EXPECT_LE(model.n0(), model.cusps());
    }
    const auto modular = ScatteringModel::modular();
    EXPECT_EQ(modular.a_constant(), 2);
    EXPECT_EQ(modular.phi_half(), -1);
    EXPECT_EQ(modular.cusps(), 1);
}

TEST(Models, ValidationCatchesWrongData) {
    const auto wrong_order = ScatteringModel::custom("m", 1, modular_phi, 0, -kPi / 3.0, -1);
    EXPECT_THROW(validate_model(wrong_order), MismatchError);
    const auto wrong_coeff = ScatteringModel::custom("m", 1, modular_phi, 1, kPi / 3.0, -1);
    EXPECT_THROW(validate_model(wrong_coeff), MismatchError);
    const auto wrong_half = ScatteringModel::custom("m", 1, modular_phi, 1, -kPi / 3.0, 1);
    EXPECT_THROW(validate_model(wrong_half), MismatchError);
    const auto right = ScatteringModel::custom("m", 1, modular_phi, 1, -kPi / 3.0, -1);
    EXPECT_NO_THROW(validate_model(right));
    EXPECT_EQ(right.a_constant(), 2);
}

TEST(Models, CustomRejectsInconsistentConstants) {
    const auto one = [](Complex) { return Complex(1.0); };
    EXPECT_THROW(ScatteringModel::custom("x", 1, one, 0, 1.0, 1, 1), InvalidArgumentError);
    EXPECT_THROW(ScatteringModel::custom("x", 1, one, 0, 1.0, 1, 4), InvalidArgumentError);
    EXPECT_THROW(ScatteringModel::custom("x", 1, one, 0, 1.0, 1, 2), InvalidArgumentError);
    EXPECT_THROW(ScatteringModel::custom("x", 2, one, 0, 1.0, 1), InvalidArgumentError);
    EXPECT_THROW(ScatteringModel::custom("x", 0, one, 0, 1.0, -1), InvalidArgumentError);
    EXPECT_THROW(ScatteringModel::custom("x", 1, one, 0, 0.0, 1), InvalidArgumentError);
    EXPECT_THROW(ScatteringModel::custom("x", 1, one, 0, 1.0, 0), InvalidArgumentError);
    EXPECT_NO_THROW(ScatteringModel::custom("x", 2, one, 0, 1.0, 1, 4));
    EXPECT_THROW(ScatteringModel::trivial(-1), InvalidArgumentError);
}

}  // namespace
}  // namespace hypzeta
