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
 // Closed-form factors of the determinant formula and of the functional equations.

#ifndef HYPZETA_ZETA_FACTORS_HPP
#define HYPZETA_ZETA_FACTORS_HPP

#include "hypzeta/scattering.hpp"
#include "hypzeta/special_functions.hpp"
#include "hypzeta/surface.hpp"

namespace hypzeta {

    /* A factor held in log space. `sign` carries exact integer signs such as (-1)^(A/2),
     * which are never routed through a complex exponential. */
    struct FactorValue {
        Complex log_value = 0.0;
        int sign = 1;

        Complex value() const { return static_cast<double>(sign) * std::exp(log_value); }
    };

    // Z_inf(s) = ((2 pi)^s Gamma_2(s)^2 / Gamma(s))^(|X|/2pi), combined through principal logs.
    FactorValue z_infty(const Signature& sig, Complex s, const EvalOptions& opts = {});

    /* Z_ell(s) = prod_j prod_{k<m_j} Gamma((s+k)/m_j)^((2k+1-m_j)/m_j); 1 when v = 0.
     * A gamma pole raises PoleError naming (j, k). */
    FactorValue z_ell(const Signature& sig, Complex s);

    struct DetLaplacian {
        Complex value = 0.0;
        Complex log_z_infty = 0.0;
        Complex log_z_ell = 0.0;
        Complex log_cusp_gamma = 0.0;  // -n log Gamma(s + 1/2)
        Complex exponent = 0.0;        // B(s-1/2)^2 + C(s-1/2) + D
        Complex a_power = 1.0;         // (2s - 1)^(A/2)
        // Re s <= 1: the Euler product does not converge there, so the supplied Z(s) is untrusted.
        bool z_untrusted = false;
    };

    /* Right side of the determinant formula
     *   det(Delta - s(1-s)) = Z_inf(s) Z(s) Z_ell(s) Gamma(s+1/2)^(-n) (2s-1)^(A/2) e^{B(s-1/2)^2 + C(s-1/2) + D}
     * with Z(s) supplied by the caller. */
    DetLaplacian det_laplacian(const Signature& sig, const ScatteringModel& model, Complex s, Complex z_value,
                               const EvalOptions& opts = {});

    /* Factor kappa(s) in Z(1 - s) = kappa(s) Z(s):
     *   (-1)^(A/2) e^{C(2s-1)} phi(s) ((2pi)^(2s-1) Gamma_2(s)^2 Gamma(1-s) / (Gamma_2(1-s)^2 Gamma(s)))^(|X|/2pi)
     *   * (Gamma(3/2 - s)/Gamma(s + 1/2))^n * prod_j prod_k [sin(pi(s+k)/m_j)]^((m_j-2k-1)/m_j).
     * Throws SingularFactorError naming the offending factor. */
    FactorValue kappa(const Signature& sig, const ScatteringModel& model, Complex s, const EvalOptions& opts = {});

    /* Right side of the Ruelle functional equation R(s) R(-s):
     *   (phi(s) phi(-s))^(-1) (4 sin^2 pi s)^(2g-2+n) / (4s^2 - 1)^n * prod_j (sin pi s / sin(pi s/m_j))^2.
     * All powers are integers, so the value is branch free. */
    Complex ruelle_fe_rhs(const Signature& sig, const ScatteringModel& model, Complex s);

    struct RuelleLeading {
        int order = 0;
        double coeff = 0.0;
    };

    /* R(s) ~ coeff * s^order at s = 0, with order = 2g-2+n-n0 and
     *   coeff = (-1)^(A/2+1) (2pi)^(2g-2+n) / phi_tilde_0 * prod_j m_j,
     * using the model's stored phi_tilde_0. */
    RuelleLeading ruelle_leading_at_zero(const Signature& sig, const ScatteringModel& model);

    // Same closed form evaluated with an explicit phi_tilde_0.
    double ruelle_leading_coefficient(const Signature& sig, int a_constant, double phi_tilde_0);

    /* |coeff| recovered from the functional equation alone: sqrt|R(s)R(-s)| |s|^(n0-(2g-2+n))
     * extrapolated to s = 0 from s = h0/2^i in powers of s^2. */
    double ruelle_leading_magnitude_from_fe(const Signature& sig, const ScatteringModel& model, double h0 = 1e-2);

    // det' Delta = c1 Z'(1).
    double c1(const Signature& sig, const ScatteringModel& model);

    // det' Delta = c0 Z~(0), where Z(s) = s^(2g-1+n-n0) Z~(s).
    double c0(const Signature& sig, const ScatteringModel& model);

}  // namespace hypzeta

#endif  // HYPZETA_ZETA_FACTORS_HPP
