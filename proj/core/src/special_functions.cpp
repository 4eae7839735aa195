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

#include "hypzeta/special_functions.hpp"

#include <array>
#include <cmath>
#include <sstream>
#include <string>

#include "hypzeta/errors.hpp"

namespace hypzeta {

namespace {

    // B_2, B_4, ..., B_40.
    constexpr std::array<double, 20> kBernoulli = {
        1.0 / 6.0,
        -1.0 / 30.0,
        1.0 / 42.0,
        -1.0 / 30.0,
        5.0 / 66.0,
        -691.0 / 2730.0,
        7.0 / 6.0,
        -3617.0 / 510.0,
        43867.0 / 798.0,
        -174611.0 / 330.0,
        854513.0 / 138.0,
        -236364091.0 / 2730.0,
        8553103.0 / 6.0,
        -23749461029.0 / 870.0,
        8615841276005.0 / 14322.0,
        -7709321041217.0 / 510.0,
        2577687858367.0 / 6.0,
        -26315271553053477373.0 / 1919190.0,
        2929993913841559.0 / 6.0,
        -261082718496449122051.0 / 13530.0,
    };

    constexpr double kStirlingThreshold = 10.0;

    std::string describe(Complex s) {
        std::ostringstream out;
        out.precision(17);
        out << s.real();
        if (s.imag() != 0.0) out << (s.imag() < 0 ? " - " : " + ") << std::abs(s.imag()) << "i";
        return out.str();
    }

    bool is_nonpositive_integer(Complex s) {
        return s.imag() == 0.0 && s.real() <= 0.0 && s.real() == std::floor(s.real());
    }

    void require_finite(Complex s, const char* where) {
        if (!std::isfinite(s.real()) || !std::isfinite(s.imag()))
            throw DomainError(std::string(where) + ": argument is not finite");
    }

    // Signed zero on the real axis picks the side of the branch cut; always use the upper side.
    Complex upper_side(Complex z) {
        return z.imag() == 0.0 ? Complex(z.real(), 0.0) : z;
    }

    Complex stirling_log_gamma(Complex z) {
        const Complex inv = 1.0 / z;
        const Complex inv2 = inv * inv;
        Complex series = 0.0;
        Complex power = inv;
        for (std::size_t k = 1; k <= 10; ++k) {
            series += kBernoulli[k - 1] / (2.0 * k * (2.0 * k - 1.0)) * power;
            power *= inv2;
        }
        return (z - 0.5) * std::log(z) - z + 0.5 * kLog2Pi + series;
    }

    // Euler-Maclaurin summation of zeta(s) with cutoff n and the first `terms` Bernoulli corrections.
    Complex zeta_euler_maclaurin(Complex s) {
        const int n = 16 + static_cast<int>(std::ceil(std::abs(s)));
        Complex sum = 0.0;
        for (int k = n - 1; k >= 1; --k) sum += std::exp(-s * std::log(static_cast<double>(k)));
        const double log_n = std::log(static_cast<double>(n));
        const Complex n_pow = std::exp(-s * log_n);  // n^{-s}
        sum += n_pow * static_cast<double>(n) / (s - 1.0) + 0.5 * n_pow;

        // B_{2j}/(2j)! * s(s+1)...(s+2j-2) * n^{-s-2j+1}
        Complex rising = s;
        Complex n_term = n_pow / static_cast<double>(n);
        double factorial = 2.0;
        for (std::size_t j = 1; j <= kBernoulli.size(); ++j) {
            const Complex term = kBernoulli[j - 1] / factorial * rising * n_term;
            sum += term;
            if (std::abs(term) < 1e-18 * std::abs(sum)) break;
            rising *= (s + (2.0 * j - 1.0)) * (s + 2.0 * j);
            n_term /= static_cast<double>(n) * n;
            factorial *= (2.0 * j + 1.0) * (2.0 * j + 2.0);
        }
        return sum;
    }

    // zeta'(2) = -sum log(k)/k^2 through the differentiated Euler-Maclaurin formula.
    double zeta_prime_two() {
        constexpr double s = 2.0;
        constexpr int n = 40;
        double sum = 0.0;
        for (int k = n - 1; k >= 2; --k) sum -= std::log(k) / (static_cast<double>(k) * k);
        const double log_n = std::log(static_cast<double>(n));
        const double n_pow = std::pow(n, -s);
        sum += -log_n * n_pow * n / (s - 1.0) - n_pow * n / ((s - 1.0) * (s - 1.0));
        sum += -0.5 * log_n * n_pow;
        double factorial = 2.0;
        for (std::size_t j = 1; j <= 12; ++j) {
            double rising = 1.0;
            double log_derivative = 0.0;
            for (std::size_t i = 0; i + 1 < 2 * j; ++i) {
                rising *= s + static_cast<double>(i);
                log_derivative += 1.0 / (s + static_cast<double>(i));
            }
            const double power = std::pow(n, -s - 2.0 * j + 1.0);
            sum += kBernoulli[j - 1] / factorial * rising * power * (log_derivative - log_n);
            factorial *= (2.0 * j + 1.0) * (2.0 * j + 2.0);
        }
        return sum;
    }

    // sum_{k > cutoff} k^{-m} for m >= 2, by Euler-Maclaurin about the cutoff.
    double power_tail(int m, double cutoff) {
        const double head = std::pow(cutoff, 1.0 - m) / (m - 1.0);
        const double f = std::pow(cutoff, -m);
        return head - 0.5 * f + m * f / (12.0 * cutoff)
            - m * (m + 1.0) * (m + 2.0) * f / (720.0 * cutoff * cutoff * cutoff);
    }

    // log(1 + w) - w + w^2/2, accurate when |w| is small.
    Complex log1p_cubic_remainder(Complex w) {
        if (std::abs(w) > 0.1) return std::log(1.0 + w) - w + 0.5 * w * w;
        Complex power = w * w * w;
        Complex sum = 0.0;
        for (int j = 3; j < 60; ++j) {
            const Complex term = power / static_cast<double>(j);
            sum += (j % 2 == 1) ? term : -term;
            if (std::abs(term) <= 1e-18 * std::abs(sum)) break;
            power *= w;
        }
        return sum;
    }

    /* log Gamma_2(z + 1) for Re z > -1/2:
     *   -(z/2) log 2pi + z/2 + (gamma+1) z^2/2 + sum_k [ -k log(1 + z/k) + z - z^2/(2k) ].
     * Summed from the smallest term upward; factors beyond the cutoff enter through the
     * expansion sum_{j>=3} (-1)^j z^j / (j k^{j-1}) truncated at j = 8. */
    Complex log_gamma2_product(Complex z, const EvalOptions& opts) {
        const int cutoff = opts.gamma2_cutoff;
        const double k_max = static_cast<double>(cutoff);
        const double radius = std::abs(z);
        if (radius > 0.5 * k_max)
            throw ConvergenceError("log_barnes_gamma2: gamma2_cutoff " + std::to_string(cutoff)
                                   + " is too small for |s| = " + std::to_string(radius));

        // Remainder of the tail expansion after j = 8.
        const double ratio = radius / k_max;
        const double remainder = std::pow(radius, 9) / (9.0 * 7.0 * std::pow(k_max, 7)) / (1.0 - ratio);
        if (remainder > 0.01 * opts.rel_tol)
            throw ConvergenceError("log_barnes_gamma2: tail remainder " + std::to_string(remainder)
                                   + " exceeds tolerance; raise gamma2_cutoff");

        Complex tail = 0.0;
        Complex power = z * z;
        for (int j = 3; j <= 8; ++j) {
            power *= z;
            const Complex term = power / static_cast<double>(j) * power_tail(j - 1, k_max);
            tail += (j % 2 == 0) ? term : -term;
        }

        Complex sum = tail;
        for (int k = cutoff; k >= 1; --k) {
            const double kd = static_cast<double>(k);
            sum -= kd * log1p_cubic_remainder(z / kd);
        }
        return sum - 0.5 * z * kLog2Pi + 0.5 * z + 0.5 * (kEulerGamma + 1.0) * z * z;
    }

}  // namespace

// sin(pi x) with exact zeros at the integers.
double sin_pi_real(double x) {
    double r = std::fmod(x, 2.0);
    if (r > 1.0) r -= 2.0;
    else if (r < -1.0) r += 2.0;
    if (r == 0.0 || r == 1.0 || r == -1.0) return 0.0;
    if (r == 0.5) return 1.0;
    if (r == -0.5) return -1.0;
    return std::sin(kPi * r);
}

static double cos_pi_real(double x) { return sin_pi_real(x + 0.5); }

Complex sin_pi(Complex z) {
    const double y = kPi * z.imag();
    return {sin_pi_real(z.real()) * std::cosh(y), cos_pi_real(z.real()) * std::sinh(y)};
}

void EvalOptions::validate() const {
    if (!(rel_tol > 0.0) || !std::isfinite(rel_tol))
        throw InvalidArgumentError("rel_tol must be positive, got " + std::to_string(rel_tol));
    if (gamma2_cutoff < 64)
        throw InvalidArgumentError("gamma2_cutoff must be at least 64, got " + std::to_string(gamma2_cutoff));
    if (euler_max_trace < 3)
        throw InvalidArgumentError("euler_max_trace must be at least 3, got " + std::to_string(euler_max_trace));
}

Complex log_gamma(Complex s) {
    require_finite(s, "log_gamma");
    if (is_nonpositive_integer(s)) throw PoleError("log_gamma: pole at s = " + describe(s));
    Complex z = upper_side(s);
    Complex shift = 0.0;
    while (z.real() < kStirlingThreshold) {
        shift += std::log(z);
        z += 1.0;
    }
    return stirling_log_gamma(z) - shift;
}

Complex digamma(Complex s) {
    require_finite(s, "digamma");
    if (is_nonpositive_integer(s)) throw PoleError("digamma: pole at s = " + describe(s));
    Complex z = upper_side(s);
    Complex shift = 0.0;
    while (z.real() < kStirlingThreshold) {
        shift += 1.0 / z;
        z += 1.0;
    }
    const Complex inv2 = 1.0 / (z * z);
    Complex series = 0.0;
    Complex power = inv2;
    for (std::size_t k = 1; k <= 10; ++k) {
        series += kBernoulli[k - 1] / (2.0 * k) * power;
        power *= inv2;
    }
    return std::log(z) - 0.5 / z - series - shift;
}

Complex riemann_zeta(Complex s) {
    require_finite(s, "riemann_zeta");
    if (s == Complex(1.0, 0.0)) throw PoleError("riemann_zeta: pole at s = 1");
    if (s.real() >= -0.5) return zeta_euler_maclaurin(s);

    // zeta(s) = 2^s pi^(s-1) sin(pi s/2) Gamma(1-s) zeta(1-s)
    const Complex sine = sin_pi(0.5 * s);
    if (sine == Complex(0.0, 0.0)) return 0.0;
    const Complex log_factor = s * std::log(2.0) + (s - 1.0) * std::log(kPi) + log_gamma(1.0 - s);
    return std::exp(log_factor) * sine * zeta_euler_maclaurin(1.0 - s);
}

double zeta_prime_minus_one() {
    // zeta'(-1) = 1/12 - (gamma + log 2pi)/12 + zeta'(2)/(2 pi^2)
    return 1.0 / 12.0 - (kEulerGamma + kLog2Pi) / 12.0 + zeta_prime_two() / (2.0 * kPi * kPi);
}

Complex log_barnes_gamma2(Complex s, const EvalOptions& opts) {
    opts.validate();
    require_finite(s, "log_barnes_gamma2");
    if (is_nonpositive_integer(s))
        throw PoleError("log_barnes_gamma2: pole of order " + std::to_string(1 - static_cast<long long>(s.real()))
                        + " at s = " + describe(s));
    Complex z = upper_side(s);
    Complex shift = 0.0;
    while (z.real() <= 0.5) {
        shift += log_gamma(z);
        z += 1.0;
    }
    return shift + log_gamma2_product(z - 1.0, opts);
}

double gauss_multiplication_defect(Complex s, int m) {
    if (m < 1) throw InvalidArgumentError("gauss_multiplication_defect: m must be >= 1");
    const Complex lhs = log_gamma(s);
    Complex rhs = 0.5 * (1.0 - m) * kLog2Pi + (s - 0.5) * std::log(static_cast<double>(m));
    for (int k = 0; k < m; ++k) rhs += log_gamma((s + static_cast<double>(k)) / static_cast<double>(m));
    return std::abs(expm1(rhs - lhs));
}

Complex integer_power(Complex z, long long n) {
    if (n < 0) return 1.0 / integer_power(z, -n);
    Complex result = 1.0;
    while (n > 0) {
        if (n & 1) result *= z;
        z *= z;
        n >>= 1;
    }
    return result;
}

Complex expm1(Complex w) {
    const double x = w.real();
    const double y = w.imag();
    const double half_sin = std::sin(0.5 * y);
    return {std::expm1(x) * std::cos(y) - 2.0 * half_sin * half_sin, std::exp(x) * std::sin(y)};
}

Complex log1p(Complex w) {
    if (std::abs(w) > 0.1) return std::log(1.0 + w);
    Complex power = w;
    Complex sum = 0.0;
    for (int j = 1; j < 60; ++j) {
        const Complex term = power / static_cast<double>(j);
        sum += (j % 2 == 1) ? term : -term;
        if (std::abs(term) <= 1e-18 * std::abs(sum)) break;
        power *= w;
    }
    return sum;
}

}  // namespace hypzeta
