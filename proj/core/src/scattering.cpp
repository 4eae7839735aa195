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

#include "hypzeta/scattering.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <utility>

#include "hypzeta/errors.hpp"

namespace hypzeta {

namespace {

    Complex modular_phi_direct(Complex s) {
        const Complex gamma_ratio = std::exp(log_gamma(s - 0.5) - log_gamma(s));
        return std::sqrt(kPi) * gamma_ratio * riemann_zeta(2.0 * s - 1.0) / riemann_zeta(2.0 * s);
    }

    // Cancelling singularities of the factors sit on the half-integers <= 1/2.
    bool near_removable_point(Complex s, Complex& point) {
        if (std::abs(s.imag()) > 1e-12) return false;
        const double nearest = std::round(2.0 * s.real()) / 2.0;
        if (nearest > 0.5 || std::abs(s.real() - nearest) > 1e-12) return false;
        point = Complex(nearest, 0.0);
        return true;
    }

}  // namespace

Complex removable_limit(const std::function<Complex(Complex)>& f, Complex point, double h0) {
    constexpr int kLevels = 4;
    std::array<std::array<Complex, kLevels>, kLevels> table{};
    double h = h0;
    for (int i = 0; i < kLevels; ++i, h *= 0.5) {
        table[i][0] = 0.5 * (f(point + h) + f(point - h));
        double factor = 4.0;
        for (int j = 1; j <= i; ++j, factor *= 4.0)
            table[i][j] = table[i][j - 1] + (table[i][j - 1] - table[i - 1][j - 1]) / (factor - 1.0);
    }
    return table[kLevels - 1][kLevels - 1];
}

Complex modular_phi(Complex s) {
    if (s == Complex(1.0, 0.0)) throw PoleError("modular_phi: pole at s = 1");
    Complex point;
    if (near_removable_point(s, point)) return removable_limit(modular_phi_direct, point);
    return modular_phi_direct(s);
}

ScatteringModel ScatteringModel::modular() {
    ScatteringModel model;
    model.label_ = "modular";
    model.cusps_ = 1;
    model.phi_ = modular_phi;
    model.n0_ = 1;
    // sqrt(pi) * Gamma(-1/2) * (1/Gamma)'(0) * zeta(-1)/zeta(0) = -pi/3
    model.phi_tilde_0_ = -kPi / 3.0;
    model.phi_half_ = -1;
    model.a_constant_ = 2;
    model.quoted_phi_tilde_0_ = kPi / 3.0;
    return model;
}

ScatteringModel ScatteringModel::trivial(int cusps) {
    if (cusps < 0) throw InvalidArgumentError("trivial scattering model: cusps must be >= 0");
    ScatteringModel model;
    model.label_ = "trivial";
    model.cusps_ = cusps;
    model.phi_ = [](Complex) { return Complex(1.0, 0.0); };
    return model;
}

ScatteringModel ScatteringModel::custom(std::string label, int cusps, Phi phi, int n0, double phi_tilde_0,
                                        int phi_half, std::optional<int> a_constant) {
    if (cusps < 0) throw InvalidArgumentError("scattering model: cusps must be >= 0");
    if (!phi) throw InvalidArgumentError("scattering model: phi is empty");
    if (!std::isfinite(phi_tilde_0) || phi_tilde_0 == 0.0)
        throw InvalidArgumentError("scattering model: phi_tilde_0 must be finite and non-zero");
    if (phi_half != 1 && phi_half != -1) throw InvalidArgumentError("scattering model: phi_half must be +1 or -1");
    if (cusps == 0 && phi_half != 1) throw InvalidArgumentError("scattering model: phi(1/2) = 1 without cusps");

    int a = 0;
    if (a_constant) {
        a = *a_constant;
        if (a < 0 || a > 2 * cusps || a % 2 != 0)
            throw InvalidArgumentError("scattering model: A must be even with 0 <= A <= 2n");
        const int sign = (a / 2) % 2 == 0 ? 1 : -1;
        if (sign != phi_half) throw InvalidArgumentError("scattering model: (-1)^(A/2) must equal phi(1/2)");
    } else {
        if (cusps > 1)
            throw InvalidArgumentError("scattering model: A is ambiguous for more than one cusp; pass it explicitly");
        a = phi_half == -1 ? 2 : 0;
    }

    ScatteringModel model;
    model.label_ = std::move(label);
    model.cusps_ = cusps;
    model.phi_ = std::move(phi);
    model.n0_ = n0;
    model.phi_tilde_0_ = phi_tilde_0;
    model.phi_half_ = phi_half;
    model.a_constant_ = a;
    return model;
}

LeadingTerm phi_leading_at_zero(const ScatteringModel& model) {
    constexpr std::array<double, 3> kRadii = {1e-2, 1e-3, 1e-4};
    double mean_x = 0.0;
    double mean_y = 0.0;
    std::array<double, 3> xs{};
    std::array<double, 3> ys{};
    for (std::size_t i = 0; i < kRadii.size(); ++i) {
        const double magnitude = std::abs(model.phi(Complex(kRadii[i], 0.0)));
        if (!(magnitude > 0.0) || !std::isfinite(magnitude))
            throw FitError("phi_leading_at_zero: |phi| is zero or infinite at r = " + std::to_string(kRadii[i]));
        xs[i] = std::log(kRadii[i]);
        ys[i] = std::log(magnitude);
        mean_x += xs[i] / 3.0;
        mean_y += ys[i] / 3.0;
    }
    double covariance = 0.0;
    double variance = 0.0;
    for (std::size_t i = 0; i < kRadii.size(); ++i) {
        covariance += (xs[i] - mean_x) * (ys[i] - mean_y);
        variance += (xs[i] - mean_x) * (xs[i] - mean_x);
    }
    LeadingTerm result;
    result.slope = covariance / variance;
    const double order = std::round(result.slope);
    if (std::abs(result.slope - order) > 0.01)
        throw FitError("phi_leading_at_zero: slope " + std::to_string(result.slope) + " is not near an integer");
    result.n0 = static_cast<int>(order);

    // Trapezoidal mean over the circle picks out the constant Laurent coefficient.
    constexpr int kNodes = 32;
    constexpr double kRadius = 1e-2;
    Complex sum = 0.0;
    for (int j = 0; j < kNodes; ++j) {
        const double angle = 2.0 * kPi * (j + 0.5) / kNodes;
        const Complex z = std::polar(kRadius, angle);
        sum += model.phi(z) * integer_power(z, -result.n0);
    }
    result.coeff = (sum / static_cast<double>(kNodes)).real();
    return result;
}

void validate_model(const ScatteringModel& model, double tolerance) {
    const LeadingTerm leading = phi_leading_at_zero(model);
    if (leading.n0 != model.n0())
        throw MismatchError("scattering model '" + model.label() + "': fitted n0 = " + std::to_string(leading.n0)
                            + " but stored n0 = " + std::to_string(model.n0()));
    const double scale = std::max(1.0, std::abs(model.phi_tilde_0()));
    if (std::abs(leading.coeff - model.phi_tilde_0()) > tolerance * scale)
        throw MismatchError("scattering model '" + model.label() + "': fitted phi_tilde_0 = "
                            + std::to_string(leading.coeff) + " but stored " + std::to_string(model.phi_tilde_0()));
    if (model.cusps() > 0) {
        const Complex half = model.phi(Complex(0.5, 0.0));
        if (std::abs(half - static_cast<double>(model.phi_half())) > tolerance)
            throw MismatchError("scattering model '" + model.label() + "': phi(1/2) does not match phi_half");
    }
}

}  // namespace hypzeta
