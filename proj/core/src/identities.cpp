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

#include "hypzeta/identities.hpp"

#include <cmath>

namespace hypzeta {

namespace {

    IdentityResidual make_residual(std::string name, Complex lhs, Complex rhs) {
        return {std::move(name), lhs, rhs, std::abs(expm1(lhs - rhs))};
    }

    Complex log_z_infty_base(Complex s, const EvalOptions& opts) {
        return s * kLog2Pi + 2.0 * log_barnes_gamma2(s, opts) - log_gamma(s);
    }

    bool is_integer(double x) { return x == std::round(x); }

}  // namespace

IdentityResidual elliptic_ratio_residual(const Signature& sig, Complex s) {
    Complex rhs = 0.0;
    for (const int m : sig.orders())
        for (int k = 0; k < m; ++k)
            rhs += static_cast<double>(m - 2 * k - 1) / m * std::log(sin_pi((s + static_cast<double>(k)) / static_cast<double>(m)));
    return make_residual("elliptic ratio", z_ell(sig, s).log_value - z_ell(sig, 1.0 - s).log_value, rhs);
}

IdentityResidual z_infty_four_point_residual(const Signature& sig, Complex s, const EvalOptions& opts) {
    const double a = sig.area_over_2pi();
    const Complex lhs = a * (log_z_infty_base(s + 1.0, opts) - log_z_infty_base(s, opts)
                             + log_z_infty_base(1.0 - s, opts) - log_z_infty_base(-s, opts));
    const Complex sine = sin_pi(s);
    return make_residual("Z_inf four-point", lhs, a * std::log(-4.0 * sine * sine));
}

IdentityResidual elliptic_block_residual(const Signature& sig, Complex s) {
    const Complex lhs = z_ell(sig, s + 1.0).log_value - z_ell(sig, s).log_value + z_ell(sig, 1.0 - s).log_value
        - z_ell(sig, -s).log_value;
    const Complex log_sine = std::log(sin_pi(s));
    const Complex log_minus_four = std::log(Complex(-4.0, 0.0));
    Complex rhs = 0.0;
    for (const int m : sig.orders())
        rhs += 2.0 / m * log_sine - static_cast<double>(m - 1) / m * log_minus_four
            - 2.0 * std::log(sin_pi(s / static_cast<double>(m)));
    return make_residual("elliptic block", lhs, rhs);
}

IdentityResidual ruelle_fe_residual(const Signature& sig, const ScatteringModel& model, Complex s,
                                    const EvalOptions& opts) {
    const FactorValue upper = kappa(sig, model, s + 1.0, opts);
    const FactorValue lower = kappa(sig, model, s, opts);
    const Complex rhs = ruelle_fe_rhs(sig, model, s);
    // Equal A on both sides, so the exact signs cancel.
    return make_residual("Ruelle functional equation", upper.log_value - lower.log_value, std::log(rhs));
}

IdentityResidual kappa_reflection_residual(const Signature& sig, const ScatteringModel& model, Complex s,
                                           const EvalOptions& opts) {
    const FactorValue left = kappa(sig, model, s, opts);
    const FactorValue right = kappa(sig, model, 1.0 - s, opts);
    const Complex sign_log = left.sign * right.sign == 1 ? Complex(0.0) : Complex(0.0, kPi);
    return make_residual("kappa reflection", left.log_value + right.log_value + sign_log, 0.0);
}

std::vector<Complex> branch_components(const Signature& sig, Complex s) {
    std::vector<Complex> out;
    if (!is_integer(sig.area_over_2pi())) {
        for (const Complex z : {s, s + 1.0, 1.0 - s, -s}) out.push_back(log_gamma(z));
        const Complex sine = sin_pi(s);
        out.push_back(std::log(-4.0 * sine * sine));
    }
    for (const int m : sig.orders()) {
        const double md = m;
        out.push_back(std::log(sin_pi(s)));
        out.push_back(std::log(sin_pi(s / md)));
        for (int k = 0; k < m; ++k) {
            if (2 * k + 1 == m) continue;
            const double kd = k;
            for (const Complex z : {s, s + 1.0, 1.0 - s, -s}) out.push_back(log_gamma((z + kd) / md));
            for (const Complex z : {s, s + 1.0, 1.0 - s}) out.push_back(std::log(sin_pi((z + kd) / md)));
        }
    }
    return out;
}

bool path_is_cut_safe(const Signature& sig, Complex s, Complex base, int steps) {
    std::vector<Complex> previous = branch_components(sig, base);
    for (int i = 1; i <= steps; ++i) {
        const Complex z = base + (s - base) * (static_cast<double>(i) / steps);
        std::vector<Complex> current = branch_components(sig, z);
        for (std::size_t c = 0; c < current.size(); ++c)
            if (std::abs(current[c].imag() - previous[c].imag()) > 0.5 * kPi) return false;
        previous = std::move(current);
    }
    return true;
}

std::vector<IdentityCase> reference_cases() {
    return {
        {Signature::make(0, 1, {2, 3}), ScatteringModel::modular()},
        {Signature::make(0, 0, {2, 3, 7}), ScatteringModel::trivial(0)},
        {Signature::make(1, 1, {2}), ScatteringModel::trivial(1)},
    };
}

}  // namespace hypzeta
