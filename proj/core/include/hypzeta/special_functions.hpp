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
 // Complex special functions: log-gamma, digamma, Riemann zeta, Barnes double gamma.

#ifndef HYPZETA_SPECIAL_FUNCTIONS_HPP
#define HYPZETA_SPECIAL_FUNCTIONS_HPP

#include <complex>

namespace hypzeta {

    using Complex = std::complex<double>;

    inline constexpr double kPi = 3.14159265358979323846264338327950288;
    inline constexpr double kEulerGamma = 0.57721566490153286060651209008240243;
    inline constexpr double kLog2Pi = 1.83787706640934548356065947281123527;

    /* Precision and truncation knobs shared by the numerical modules.
     *
     * gamma2_cutoff    number of factors kept in the Barnes double gamma product before
     *                  the analytic tail correction takes over.
     * rel_tol          tolerance used when comparing the two sides of an identity, and the
     *                  accuracy target for adaptive truncations.
     * euler_max_trace  largest geodesic trace fed into the Euler products. */
    struct EvalOptions {
        int gamma2_cutoff = 10000;
        double rel_tol = 1e-9;
        int euler_max_trace = 40;

        // Throws InvalidArgumentError unless rel_tol > 0, gamma2_cutoff >= 64, euler_max_trace >= 3.
        void validate() const;
    };

    // Principal branch of log Gamma, analytic on C minus (-inf, 0]. Throws PoleError at 0, -1, -2, ...
    Complex log_gamma(Complex s);

    inline Complex gamma(Complex s) { return std::exp(log_gamma(s)); }

    // psi(s) = d/ds log Gamma(s). Throws PoleError at non-positive integers.
    Complex digamma(Complex s);

    /// Riemann zeta, analytically continued. Throws PoleError at s = 1.
    Complex riemann_zeta(Complex s);

    /// zeta'(-1), the derivative of the Riemann zeta function at -1.
    double zeta_prime_minus_one();

    /* log Gamma_2(s) for the double gamma normalised by Gamma_2(1) = 1 and
     * Gamma_2(s) = Gamma(s) Gamma_2(s+1). For Re s > 1/2 the Weierstrass product is
     * summed directly up to opts.gamma2_cutoff with a closed-form tail; smaller real
     * parts are reached through the recursion.
     *
     * Throws PoleError at s = 0, -1, -2, ... (pole of order 1 - s), and ConvergenceError
     * when the cutoff is too small for |s|. */
    Complex log_barnes_gamma2(Complex s, const EvalOptions& opts = {});

    /* Relative defect |Gamma(s) - G_m(s)| / |Gamma(s)| where G_m is the right side of the
     * Gauss multiplication formula
     *   Gamma(s) = (2 pi)^((1-m)/2) m^(s-1/2) prod_{k<m} Gamma((s+k)/m).
     * Used as a self test of log_gamma. */
    double gauss_multiplication_defect(Complex s, int m);

    // z^n by repeated squaring; n may be negative.
    Complex integer_power(Complex z, long long n);

    // sin(pi z), exact zeros at the integers.
    Complex sin_pi(Complex z);

    double sin_pi_real(double x);

    // exp(w) - 1 without cancellation for small |w|.
    Complex expm1(Complex w);

    // log(1 + w) without cancellation for small |w|.
    Complex log1p(Complex w);

}  // namespace hypzeta

#endif  // HYPZETA_SPECIAL_FUNCTIONS_HPP
