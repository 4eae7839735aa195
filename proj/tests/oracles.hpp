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
 // Independent reference implementations used only by the tests.

#ifndef HYPZETA_TESTS_ORACLES_HPP
#define HYPZETA_TESTS_ORACLES_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace oracle {

using Complex = std::complex<double>;
inline constexpr double kPi = 3.14159265358979323846;

// Lanczos approximation (g = 7, 9 terms), reflected for Re z < 1/2.
inline Complex gamma(Complex z) {
    static constexpr std::array<double, 9> c{0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
                                             771.32342877765313,   -176.61502916214059,   12.507343278686905,
                                             -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};
    if (z.real() < 0.5) return kPi / (std::sin(kPi * z) * gamma(1.0 - z));
    z -= 1.0;
    Complex x = c[0];
    for (int i = 1; i < 9; ++i) x += c[i] / (z + static_cast<double>(i));
    const Complex t = z + 7.5;
    return std::sqrt(2.0 * kPi) * std::pow(t, z + 0.5) * std::exp(-t) * x;
}

/* Riemann zeta from Borwein's accelerated alternating series for eta, valid for Re s > 0
 * away from s = 1, continued to Re s < 1/2 by the functional equation. */
inline Complex zeta(Complex s) {
    if (s.real() < 0.5) {
        return std::pow(2.0, s) * std::pow(kPi, s - 1.0) * std::sin(kPi * s / 2.0) * gamma(1.0 - s) * zeta(1.0 - s);
    }
    constexpr int n = 60;
    std::array<double, n + 1> d{};
    double term = 1.0 / n, sum = term;
    d[0] = sum * n;
    for (int i = 1; i <= n; ++i) {
        term *= 4.0 * (n + i - 1) * (n - i + 1) / ((2.0 * i - 1) * (2.0 * i));
        sum += term;
        d[i] = n * sum;
    }
    Complex eta = 0.0;
    for (int k = 0; k < n; ++k) {
        const double sign = k % 2 ? -1.0 : 1.0;
        eta += sign * (d[n] - d[k]) * std::exp(-s * std::log(k + 1.0));
    }
    eta /= d[n];
    return eta / (1.0 - std::pow(2.0, 1.0 - s));
}

inline constexpr std::array<long double, 12> kBernoulli{
    1.0L / 6, -1.0L / 30, 1.0L / 42, -1.0L / 30, 5.0L / 66, -691.0L / 2730, 7.0L / 6, -3617.0L / 510,
    43867.0L / 798, -174611.0L / 330, 854513.0L / 138, -236364091.0L / 2730};

/* zeta'(-1) by differentiating the Euler-Maclaurin expansion of zeta(s) term by term at s = -1:
 *   zeta(s) = sum_{n<N} n^-s + N^(1-s)/(s-1) + N^-s/2 + sum_j B_2j/(2j)! (s)_(2j-1) N^(-s-2j+1). */
inline double zeta_prime_minus_one() {
    constexpr int N = 20;
    constexpr long double s = -1.0L;
    const long double log_n = std::log(static_cast<long double>(N));
    long double total = 0.0L;
    for (int n = 2; n < N; ++n) total -= std::log(static_cast<long double>(n)) * std::pow(static_cast<long double>(n), -s);
    const long double head = std::pow(static_cast<long double>(N), 1.0L - s);
    total += head * (-log_n / (s - 1.0L) - 1.0L / ((s - 1.0L) * (s - 1.0L)));
    total += -0.5L * log_n * std::pow(static_cast<long double>(N), -s);
    long double factorial = 1.0L;
    for (int j = 1; j <= 12; ++j) {
        factorial *= (2.0L * j - 1.0L) * (2.0L * j);
        // P(s) = prod_{i < 2j-1} (s + i) and its derivative
        long double p = 1.0L, dp = 0.0L;
        for (int i = 0; i < 2 * j - 1; ++i) {
            dp = dp * (s + i) + p;
            p *= s + i;
        }
        const long double power = std::pow(static_cast<long double>(N), -s - 2.0L * j + 1.0L);
        total += kBernoulli[static_cast<std::size_t>(j - 1)] / factorial * power * (dp - log_n * p);
    }
    return static_cast<double>(total);
}

// psi(1/2) = -gamma + sum_k (1/(k+1) - 1/(k+1/2)), with an Euler-Maclaurin tail.
inline double digamma_half() {
    constexpr int N = 1000;
    auto f = [](double k) { return 1.0 / (k + 1.0) - 1.0 / (k + 0.5); };
    auto df = [](double k) { return -1.0 / ((k + 1.0) * (k + 1.0)) + 1.0 / ((k + 0.5) * (k + 0.5)); };
    double sum = 0.0;
    for (int k = N - 1; k >= 0; --k) sum += f(k);
    sum += -std::log((N + 1.0) / (N + 0.5)) + 0.5 * f(N) - df(N) / 12.0;
    return -0.57721566490153286061 + sum;
}

/* log of 1/G(s), G the Barnes G-function, from the asymptotic series of log G(z+1) at z + 40 and
 * the shift G(z+1) = G(z+41) / prod_{j=1}^{40} Gamma(z+j). Only the value exp(result) is meaningful. */
inline Complex log_inverse_barnes_g(Complex s) {
    constexpr int N = 40;
    const Complex z = s - 1.0;
    const Complex w = z + static_cast<double>(N);
    const Complex lw = std::log(w);
    Complex log_g = w * w / 2.0 * lw - 0.75 * w * w + w / 2.0 * std::log(2.0 * kPi) - lw / 12.0
        + zeta_prime_minus_one();
    Complex wpow = w * w;
    for (int k = 1; k < 12; ++k) {
        log_g += static_cast<double>(kBernoulli[static_cast<std::size_t>(k)]) / (4.0 * k * (k + 1)) / wpow;
        wpow *= w * w;
    }
    for (int j = 1; j <= N; ++j) log_g -= std::log(gamma(z + static_cast<double>(j)));
    return -log_g;
}

// Least rotation, written independently of the library.
inline std::string least_rotation(const std::string& w) {
    std::vector<std::string> rotations;
    for (std::size_t i = 0; i < w.size(); ++i) rotations.push_back(w.substr(i) + w.substr(0, i));
    return *std::min_element(rotations.begin(), rotations.end());
}

inline long long trace_of(const std::string& w) {
    long long m[2][2] = {{1, 0}, {0, 1}};
    for (const char c : w) {
        const long long g[2][2] = {{1, c == 'L' ? 1 : 0}, {c == 'R' ? 1 : 0, 1}};
        long long r[2][2];
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) r[i][j] = m[i][0] * g[0][j] + m[i][1] * g[1][j];
        std::copy(&r[0][0], &r[0][0] + 4, &m[0][0]);
    }
    return m[0][0] + m[1][1];
}

inline bool is_primitive(const std::string& w) {
    for (std::size_t d = 1; d < w.size(); ++d)
        if (w.size() % d == 0 && w == w.substr(d) + w.substr(0, d)) return false;
    return true;
}

// mult(t) for 3 <= t <= max_trace by listing every binary word of length <= max_trace - 1.
inline std::map<long long, long long> brute_force_multiplicities(int max_trace) {
    std::set<std::string> seen;
    for (int len = 2; len <= max_trace - 1; ++len)
        for (long long bits = 0; bits < (1LL << len); ++bits) {
            std::string w;
            for (int i = 0; i < len; ++i) w += (bits >> i) & 1 ? 'R' : 'L';
            if (w.find('L') == std::string::npos || w.find('R') == std::string::npos || !is_primitive(w)) continue;
            if (trace_of(w) <= max_trace) seen.insert(least_rotation(w));
        }
    std::map<long long, long long> mult;
    for (long long t = 3; t <= max_trace; ++t) mult[t] = 0;
    for (const auto& w : seen) ++mult[trace_of(w)];
    return mult;
}

// ((t + sqrt(t^2 - 4))/2)^2
inline double norm_of_trace(long long t) {
    const double x = static_cast<double>(t);
    const double root = (x + std::sqrt(x * x - 4.0)) / 2.0;
    return root * root;
}

/* log Z(s) = -sum_P sum_k sum_m p^{-m(s+k)}/m with K and M large enough that both tails are
 * below 1e-13 for Re s >= 1.5. */
inline Complex log_selberg_double_sum(const std::vector<double>& norms, Complex s) {
    Complex total = 0.0;
    for (const double p : norms) {
        const double lp = std::log(p);
        for (int k = 0; k < 40; ++k) {
            const Complex x = std::exp(-(s + static_cast<double>(k)) * lp);
            if (std::abs(x) < 1e-18) break;
            Complex xm = x;
            for (int m = 1; m < 60; ++m) {
                total -= xm / static_cast<double>(m);
                xm *= x;
                if (std::abs(xm) < 1e-18) break;
            }
        }
    }
    return total;
}

}  // namespace oracle

#endif  // HYPZETA_TESTS_ORACLES_HPP
