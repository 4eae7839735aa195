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
 // Truncated Euler products for the Selberg and Ruelle zeta functions on Re s > 1.

#ifndef HYPZETA_EULER_PRODUCT_HPP
#define HYPZETA_EULER_PRODUCT_HPP

#include "hypzeta/length_spectrum.hpp"
#include "hypzeta/special_functions.hpp"

namespace hypzeta {

    /* A truncated product with its error estimate. The estimate is heuristic: the trace tail
     * is extrapolated from the last included shells and inflated by a safety factor 10. */
    struct TruncatedValue {
        Complex value = 0.0;
        double abs_error_estimate = 0.0;
        long long max_trace_used = 0;
        int k_cutoff_used = 0;
        // Estimate above 1% of |value|; typical just above Re s = 1.
        bool low_accuracy = false;
    };

    /* Z(s) = prod_P prod_{k >= 0} (1 - p^{-s-k}) over classes with trace <= opts.euler_max_trace,
     * k <= K where K >= 10 makes count * p_min^{-Re s - K - 1} < rel_tol/10.
     * Throws DomainError for Re s <= 1, EmptySpectrumError for an empty spectrum, and
     * InvalidArgumentError when opts.euler_max_trace exceeds the spectrum's bound. */
    TruncatedValue selberg_Z(const LengthSpectrum& spectrum, Complex s, const EvalOptions& opts = {});

    // R(s) = Z(s)/Z(s+1) with first-order error propagation.
    TruncatedValue ruelle_R(const LengthSpectrum& spectrum, Complex s, const EvalOptions& opts = {});

    // R(s) = prod_P (1 - p^{-s}) directly.
    TruncatedValue ruelle_R_direct(const LengthSpectrum& spectrum, Complex s, const EvalOptions& opts = {});

    /* Estimate of sum over classes with trace > max_trace of p^{-sigma}/(1 - 1/p), used as a
     * bound on the neglected part of log Z and log R. */
    double trace_tail_estimate(const LengthSpectrum& spectrum, double sigma);

}  // namespace hypzeta

#endif  // HYPZETA_EULER_PRODUCT_HPP
