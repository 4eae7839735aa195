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
 // Scattering-determinant models phi(s) = det Phi(s) and the data derived from them.

#ifndef HYPZETA_SCATTERING_HPP
#define HYPZETA_SCATTERING_HPP

#include <functional>
#include <optional>
#include <string>

#include "hypzeta/special_functions.hpp"

namespace hypzeta {

    /* Determinant-level description of the scattering matrix of a surface with `cusps`
     * cusps. Only phi(s) and a handful of constants are modelled:
     *
     *   n0           order of phi at s = 0 (negative for a pole),
     *   phi_tilde_0  leading coefficient, phi(s) ~ phi_tilde_0 * s^n0,
     *   phi_half     phi(1/2), which is +1 or -1 whenever there is a cusp,
     *   a_constant   A = cusps - Tr Phi(1/2), always even with (-1)^(A/2) = phi_half.
     *
     * Cusp-free surfaces use phi = 1, n0 = 0, A = 0. Instances are immutable. */
    class ScatteringModel {
    public:
        using Phi = std::function<Complex(Complex)>;

        // PSL(2, Z): phi(s) = sqrt(pi) Gamma(s - 1/2)/Gamma(s) * zeta(2s - 1)/zeta(2s).
        static ScatteringModel modular();

        /* phi = 1 on a surface with `cusps` cusps (Phi(1/2) = I, so A = 0). With no cusps
         * this is the cocompact case; with cusps it is a stand-in that still satisfies
         * phi(s) phi(1-s) = 1. */
        static ScatteringModel trivial(int cusps = 0);

        /* Programmatic model. When `a_constant` is omitted it is inferred from phi_half,
         * which is only unambiguous for at most one cusp. */
        static ScatteringModel custom(std::string label, int cusps, Phi phi, int n0, double phi_tilde_0,
                                      int phi_half, std::optional<int> a_constant = std::nullopt);

        const std::string& label() const noexcept { return label_; }
        int cusps() const noexcept { return cusps_; }
        int n0() const noexcept { return n0_; }
        double phi_tilde_0() const noexcept { return phi_tilde_0_; }
        int phi_half() const noexcept { return phi_half_; }
        int a_constant() const noexcept { return a_constant_; }

        // Literature value of phi_tilde_0 when it disagrees with the computed one.
        const std::optional<double>& quoted_phi_tilde_0() const noexcept { return quoted_phi_tilde_0_; }

        Complex phi(Complex s) const { return phi_(s); }

    private:
        ScatteringModel() = default;

        std::string label_;
        int cusps_ = 0;
        Phi phi_;
        int n0_ = 0;
        double phi_tilde_0_ = 1.0;
        int phi_half_ = 1;
        int a_constant_ = 0;
        std::optional<double> quoted_phi_tilde_0_;
    };

    /* Modular scattering determinant. Points where the gamma and zeta factors have
     * cancelling singularities (s = 1/2, -1/2, -3/2, ... and s = -1, -2, ...) are evaluated as
     * limits. Throws PoleError at s = 1. */
    Complex modular_phi(Complex s);

    /* Limit of f at `point` from symmetric samples point +- h, h = h0/2^i, i < 4, extrapolated
     * in h^2. f must be analytic on a punctured disc of radius h0. */
    Complex removable_limit(const std::function<Complex(Complex)>& f, Complex point, double h0 = 1e-2);

    struct LeadingTerm {
        int n0 = 0;
        double coeff = 0.0;
        double slope = 0.0;  // fitted log-log slope before rounding
    };

    /* Order and leading coefficient of phi at 0, found numerically: the order from the
     * least-squares slope of log|phi(r)| against log r on r in {1e-2, 1e-3, 1e-4}, the
     * coefficient as the mean of phi(z)/z^n0 over a circle of radius 1e-2.
     * Throws FitError if the slope is further than 0.01 from an integer. */
    LeadingTerm phi_leading_at_zero(const ScatteringModel& model);

    /* Cross-checks stored model data against numerics: n0 and phi_tilde_0 against
     * phi_leading_at_zero, phi_half against phi(1/2). Throws MismatchError naming the field. */
    void validate_model(const ScatteringModel& model, double tolerance = 1e-9);

}  // namespace hypzeta

#endif  // HYPZETA_SCATTERING_HPP
