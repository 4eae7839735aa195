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

#include "hypzeta/euler_product.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "hypzeta/errors.hpp"

namespace hypzeta {

namespace {

    constexpr double kSafetyFactor = 10.0;
    constexpr int kMinKCutoff = 10;

    LengthSpectrum prepare(const LengthSpectrum& spectrum, Complex s, const EvalOptions& opts, const char* what) {
        opts.validate();
        if (!(s.real() > 1.0))
            throw DomainError(std::string(what) + ": the Euler product needs Re s > 1, got Re s = " + std::to_string(s.real()));
        if (opts.euler_max_trace > spectrum.max_trace())
            throw InvalidArgumentError(std::string(what) + ": euler_max_trace " + std::to_string(opts.euler_max_trace)
                                       + " exceeds the spectrum bound " + std::to_string(spectrum.max_trace()));
        LengthSpectrum used = spectrum.truncated(opts.euler_max_trace);
        used.p_min();
        return used;
    }

    double band_sum(const LengthSpectrum& spectrum, long long first, long long last, double sigma) {
        double sum = 0.0;
        for (long long t = first; t <= last; ++t) {
            const auto& shell = spectrum.shells()[static_cast<std::size_t>(t - 3)];
            sum += static_cast<double>(shell.count) * std::pow(shell.norm, -sigma) / (1.0 - 1.0 / shell.norm);
        }
        return sum;
    }

    TruncatedValue finish(Complex log_value, double log_tail, long long max_trace, int k_cutoff) {
        TruncatedValue out;
        out.value = std::exp(log_value);
        out.abs_error_estimate = std::abs(out.value) * std::expm1(log_tail);
        out.max_trace_used = max_trace;
        out.k_cutoff_used = k_cutoff;
        out.low_accuracy = out.abs_error_estimate > 0.01 * std::abs(out.value);
        return out;
    }

}  // namespace

double trace_tail_estimate(const LengthSpectrum& spectrum, double sigma) {
    const long long top = spectrum.max_trace();
    const long long width = std::max(1LL, top / 6);
    if (3 * width > top - 2) return kSafetyFactor * band_sum(spectrum, 3, top, sigma);
    const double s1 = band_sum(spectrum, top - 3 * width + 1, top - 2 * width, sigma);
    const double s3 = band_sum(spectrum, top - width + 1, top, sigma);
    if (s1 <= 0.0) return kSafetyFactor * band_sum(spectrum, 3, top, sigma);
    const double ratio = std::min(std::sqrt(s3 / s1), 1.0 - 1.0 / static_cast<double>(top));
    return kSafetyFactor * s3 * ratio / (1.0 - ratio);
}

TruncatedValue selberg_Z(const LengthSpectrum& spectrum, Complex s, const EvalOptions& opts) {
    const LengthSpectrum used = prepare(spectrum, s, opts, "selberg_Z");
    const double sigma = s.real();
    const double p_min = used.p_min();
    const double count = static_cast<double>(used.class_count());

    // count * p_min^(-sigma-K-1) < rel_tol/10
    const double needed = (std::log(count) - std::log(opts.rel_tol / 10.0)) / std::log(p_min) - sigma - 1.0;
    const int k_cutoff = std::max(kMinKCutoff, static_cast<int>(std::ceil(needed)));

    Complex log_value = 0.0;
    for (const auto& shell : used.shells()) {
        if (shell.count == 0) continue;
        Complex inner = 0.0;
        for (int k = 0; k <= k_cutoff; ++k)
            inner += log1p(-std::exp(-(s + static_cast<double>(k)) * shell.length));
        log_value += static_cast<double>(shell.count) * inner;
    }
    const double k_tail = count * 2.0 * std::pow(p_min, -sigma - k_cutoff - 1.0) / (1.0 - 1.0 / p_min);
    return finish(log_value, k_tail + trace_tail_estimate(used, sigma), used.max_trace(), k_cutoff);
}

TruncatedValue ruelle_R(const LengthSpectrum& spectrum, Complex s, const EvalOptions& opts) {
    const TruncatedValue upper = selberg_Z(spectrum, s, opts);
    const TruncatedValue lower = selberg_Z(spectrum, s + 1.0, opts);
    TruncatedValue out;
    out.value = upper.value / lower.value;
    out.abs_error_estimate = std::abs(out.value)
        * (upper.abs_error_estimate / std::abs(upper.value) + lower.abs_error_estimate / std::abs(lower.value));
    out.max_trace_used = upper.max_trace_used;
    out.k_cutoff_used = std::max(upper.k_cutoff_used, lower.k_cutoff_used);
    out.low_accuracy = out.abs_error_estimate > 0.01 * std::abs(out.value);
    return out;
}

TruncatedValue ruelle_R_direct(const LengthSpectrum& spectrum, Complex s, const EvalOptions& opts) {
    const LengthSpectrum used = prepare(spectrum, s, opts, "ruelle_R_direct");
    Complex log_value = 0.0;
    for (const auto& shell : used.shells())
        if (shell.count) log_value += static_cast<double>(shell.count) * log1p(-std::exp(-s * shell.length));
    return finish(log_value, trace_tail_estimate(used, s.real()), used.max_trace(), 0);
}

}  // namespace hypzeta
