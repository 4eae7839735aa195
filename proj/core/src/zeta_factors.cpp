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

#include "hypzeta/zeta_factors.hpp"

#include <array>
#include <cmath>
#include <string>

#include "hypzeta/errors.hpp"

namespace hypzeta {

namespace {

    // s log 2pi + 2 log Gamma_2(s) - log Gamma(s)
    Complex log_z_infty_base(Complex s, const EvalOptions& opts) {
        return s * kLog2Pi + 2.0 * log_barnes_gamma2(s, opts) - log_gamma(s);
    }

    int a_sign(int a_constant) { return (a_constant / 2) % 2 == 0 ? 1 : -1; }

    std::string point_text(Complex s) {
        return "(" + std::to_string(s.real()) + ", " + std::to_string(s.imag()) + ")";
    }

    template <typename F>
    Complex guarded(const char* factor, Complex s, F&& block) {
        try {
            const Complex value = block();
            if (!std::isfinite(value.real()) || !std::isfinite(value.imag())) throw PoleError("non-finite value");
            return value;
        } catch (const PoleError& e) {
            throw SingularFactorError(std::string("kappa: factor '") + factor + "' is singular at s = "
                                      + point_text(s) + " (" + e.what() + ")");
        }
    }

    double gamma_fraction_block(const std::vector<int>& orders, int offset) {
        // sum_j sum_{k=1}^{m-1} (2k + offset - m)/m log Gamma(k/m)
        double total = 0.0;
        for (const int m : orders)
            for (int k = 1; k < m; ++k)
                total += static_cast<double>(2 * k + offset - m) / m * std::lgamma(static_cast<double>(k) / m);
        return total;
    }

}  // namespace

FactorValue z_infty(const Signature& sig, Complex s, const EvalOptions& opts) {
    return {sig.area_over_2pi() * log_z_infty_base(s, opts), 1};
}

FactorValue z_ell(const Signature& sig, Complex s) {
    FactorValue out;
    const auto& orders = sig.orders();
    for (std::size_t j = 0; j < orders.size(); ++j) {
        const int m = orders[j];
        for (int k = 0; k < m; ++k) {
            const int numerator = 2 * k + 1 - m;
            if (numerator == 0) continue;
            try {
                out.log_value += static_cast<double>(numerator) / m * log_gamma((s + static_cast<double>(k)) / static_cast<double>(m));
            } catch (const PoleError&) {
                throw PoleError("z_ell: gamma pole in factor (j = " + std::to_string(j + 1) + ", k = "
                                + std::to_string(k) + ") at s = " + point_text(s));
            }
        }
    }
    return out;
}

DetLaplacian det_laplacian(const Signature& sig, const ScatteringModel& model, Complex s, Complex z_value,
                           const EvalOptions& opts) {
    const SurfaceConstants k = constants(sig, model);
    DetLaplacian out;
    out.log_z_infty = z_infty(sig, s, opts).log_value;
    out.log_z_ell = z_ell(sig, s).log_value;
    out.log_cusp_gamma = sig.cusps() == 0 ? Complex(0.0) : -static_cast<double>(sig.cusps()) * log_gamma(s + 0.5);
    const Complex t = s - 0.5;
    out.exponent = k.b * t * t + k.c * t + k.d;
    out.a_power = integer_power(2.0 * s - 1.0, k.a / 2);
    out.z_untrusted = s.real() <= 1.0;
    out.value = z_value * out.a_power * std::exp(out.log_z_infty + out.log_z_ell + out.log_cusp_gamma + out.exponent);
    return out;
}

FactorValue kappa(const Signature& sig, const ScatteringModel& model, Complex s, const EvalOptions& opts) {
    const SurfaceConstants k = constants(sig, model);
    FactorValue out;
    out.sign = a_sign(k.a);
    out.log_value = k.c * (2.0 * s - 1.0);

    const Complex phi = guarded("phi", s, [&] { return model.phi(s); });
    if (phi == Complex(0.0)) throw SingularFactorError("kappa: factor 'phi' vanishes at s = " + point_text(s));
    out.log_value += std::log(phi);

    out.log_value += guarded("gamma2 block", s, [&] {
        return sig.area_over_2pi() * ((2.0 * s - 1.0) * kLog2Pi + 2.0 * log_barnes_gamma2(s, opts) + log_gamma(1.0 - s)
                                      - 2.0 * log_barnes_gamma2(1.0 - s, opts) - log_gamma(s));
    });

    if (sig.cusps() > 0)
        out.log_value += guarded("cusp gamma ratio", s, [&] {
            return static_cast<double>(sig.cusps()) * (log_gamma(1.5 - s) - log_gamma(s + 0.5));
        });

    for (const int m : sig.orders())
        for (int j = 0; j < m; ++j) {
            const int numerator = m - 2 * j - 1;
            if (numerator == 0) continue;
            const Complex sine = sin_pi((s + static_cast<double>(j)) / static_cast<double>(m));
            if (sine == Complex(0.0))
                throw SingularFactorError("kappa: factor 'sin(pi(s+" + std::to_string(j) + ")/" + std::to_string(m)
                                          + ")' vanishes at s = " + point_text(s));
            out.log_value += static_cast<double>(numerator) / m * std::log(sine);
        }
    return out;
}

Complex ruelle_fe_rhs(const Signature& sig, const ScatteringModel& model, Complex s) {
    if (model.cusps() != sig.cusps())
        throw MismatchError("ruelle_fe_rhs: model '" + model.label() + "' does not match signature " + sig.to_string());
    const int n = sig.cusps();
    const Complex quartic = 4.0 * s * s - 1.0;
    if (n > 0 && quartic == Complex(0.0)) throw PoleError("ruelle_fe_rhs: pole at s = +-1/2");
    const Complex phi_product = model.phi(s) * model.phi(-s);
    if (phi_product == Complex(0.0)) throw PoleError("ruelle_fe_rhs: phi(s) phi(-s) vanishes at s = " + point_text(s));

    const Complex sine = sin_pi(s);
    Complex value = integer_power(4.0 * sine * sine, sig.euler_defect()) / (phi_product * integer_power(quartic, n));
    for (const int m : sig.orders()) {
        const Complex inner = sin_pi(s / static_cast<double>(m));
        if (inner == Complex(0.0))
            throw PoleError("ruelle_fe_rhs: sin(pi s/" + std::to_string(m) + ") vanishes at s = " + point_text(s));
        const Complex ratio = sine / inner;
        value *= ratio * ratio;
    }
    if (!std::isfinite(value.real()) || !std::isfinite(value.imag()))
        throw PoleError("ruelle_fe_rhs: pole at s = " + point_text(s));
    return value;
}

double ruelle_leading_coefficient(const Signature& sig, int a_constant, double phi_tilde_0) {
    double product = 1.0;
    for (const int m : sig.orders()) product *= m;
    return -a_sign(a_constant) * std::pow(2.0 * kPi, sig.euler_defect()) / phi_tilde_0 * product;
}

RuelleLeading ruelle_leading_at_zero(const Signature& sig, const ScatteringModel& model) {
    const SurfaceConstants k = constants(sig, model);
    return {sig.euler_defect() - model.n0(), ruelle_leading_coefficient(sig, k.a, model.phi_tilde_0())};
}

double ruelle_leading_magnitude_from_fe(const Signature& sig, const ScatteringModel& model, double h0) {
    const int order = sig.euler_defect() - model.n0();
    constexpr int kLevels = 4;
    std::array<std::array<double, kLevels>, kLevels> table{};
    double h = h0;
    for (int i = 0; i < kLevels; ++i, h *= 0.5) {
        table[i][0] = std::sqrt(std::abs(ruelle_fe_rhs(sig, model, Complex(h, 0.0)))) * std::pow(h, -order);
        double factor = 4.0;
        for (int j = 1; j <= i; ++j, factor *= 4.0)
            table[i][j] = table[i][j - 1] + (table[i][j - 1] - table[i - 1][j - 1]) / (factor - 1.0);
    }
    return table[kLevels - 1][kLevels - 1];
}

double c1(const Signature& sig, const ScatteringModel& model) {
    const SurfaceConstants k = constants(sig, model);
    const double log_c1 = (sig.cusps() - k.a / 2) * std::log(2.0) + 0.5 * sig.area_over_2pi() * kLog2Pi + k.log_e
        + gamma_fraction_block(sig.orders(), -1);
    return std::exp(log_c1);
}

double c0(const Signature& sig, const ScatteringModel& model) {
    const SurfaceConstants k = constants(sig, model);
    double log_abs = (sig.cusps() - k.a / 2) * std::log(2.0) - 0.5 * sig.area_over_2pi() * kLog2Pi + k.log_e
        + gamma_fraction_block(sig.orders(), 1);
    for (const int m : sig.orders()) log_abs -= static_cast<double>(m - 1) / m * std::log(m);
    return -a_sign(k.a) * model.phi_tilde_0() * std::exp(log_abs);
}

}  // namespace hypzeta
