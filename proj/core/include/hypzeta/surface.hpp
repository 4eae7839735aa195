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
 // Surface signatures, hyperbolic area, determinant constants and the integer order tables.

#ifndef HYPZETA_SURFACE_HPP
#define HYPZETA_SURFACE_HPP

#include <string>
#include <string_view>
#include <vector>

#include "hypzeta/scattering.hpp"

namespace hypzeta {

    /* Type (g; n; m_1, ..., m_v) of a cofinite hyperbolic surface: genus, number of cusps
     * and the orders of the ramification points. Construction rejects non-positive area. */
    class Signature {
    public:
        static Signature make(int genus, int cusps, std::vector<int> orders = {});

        // "g,n,m1:m2:...:mv"; the order list may be empty ("2,0,").
        static Signature parse(std::string_view text);

        int genus() const noexcept { return genus_; }
        int cusps() const noexcept { return cusps_; }
        const std::vector<int>& orders() const noexcept { return orders_; }
        int elliptic_count() const noexcept { return static_cast<int>(orders_.size()); }

        // 2g - 2 + n
        int euler_defect() const noexcept { return 2 * genus_ - 2 + cusps_; }

        // |X| / 2pi = 2g - 2 + n + sum (1 - 1/m_j)
        double area_over_2pi() const noexcept;

        std::string to_string() const;

        friend bool operator==(const Signature&, const Signature&) = default;

    private:
        Signature(int genus, int cusps, std::vector<int> orders)
            : genus_(genus), cusps_(cusps), orders_(std::move(orders)) {}

        int genus_;
        int cusps_;
        std::vector<int> orders_;
    };

    // Hyperbolic area 2 pi {2g - 2 + n + sum (1 - 1/m_j)}.
    double area(const Signature& sig);

    /* Constants of the determinant formula. The constant script-E is stored as its logarithm.
     *   B = -|X|/2pi,  C = -n log 2,
     *   D = sum (m^2-1)/(6m) log m + (n/2) log 2pi - (|X|/2pi)(log(2pi)/2 - 2 zeta'(-1)) - (A/2) log 2,
     *   log E = sum (m^2-1)/(6m) log m + (|X|/2pi)(2 zeta'(-1) - 1/4). */
    struct SurfaceConstants {
        double area = 0.0;
        int a = 0;
        double b = 0.0;
        double c = 0.0;
        double d = 0.0;
        double log_e = 0.0;
    };

    // Throws MismatchError if the model's cusp count differs from the signature's.
    SurfaceConstants constants(const Signature& sig, const ScatteringModel& model);

    /* An integer or half-integer, stored as twice its value. */
    class HalfInteger {
    public:
        static constexpr HalfInteger from_integer(long long k) { return HalfInteger(2 * k); }
        static constexpr HalfInteger from_twice(long long twice) { return HalfInteger(twice); }
        // Accepts "k", "k/2" and decimal forms such as "-1.5".
        static HalfInteger parse(std::string_view text);

        constexpr long long twice() const noexcept { return twice_; }
        constexpr bool is_integer() const noexcept { return twice_ % 2 == 0; }
        constexpr long long as_integer() const noexcept { return twice_ / 2; }
        constexpr double value() const noexcept { return 0.5 * static_cast<double>(twice_); }
        std::string to_string() const;

        friend constexpr bool operator==(HalfInteger, HalfInteger) = default;
        friend constexpr auto operator<=>(HalfInteger, HalfInteger) = default;

    private:
        constexpr explicit HalfInteger(long long twice) : twice_(twice) {}
        long long twice_;
    };

    /* Order of the Selberg zeta function Z at an integer or half-integer point; positive for
     * zeros, negative for poles.
     *   s = 1: 1;  s = k >= 2: 0;  s = 0: 2g - 1 + n - n0;
     *   s = -1/2, -3/2, ...: -n;
     *   s = -k, k >= 1: (2k+1)(2g-2+n) + 2 sum_j (k - floor(k/m_j)).
     * Positive half-integers are not covered and raise DomainError. */
    int order_Z(const Signature& sig, int n0, HalfInteger point);

    /* Order of the Ruelle zeta function R(s) = Z(s)/Z(s+1) at an integer point.
     *   s = 1: 1;  s = k >= 2: 0;  s = 0: 2g - 2 + n - n0;  s = -1: 2(2g-2+n+v) + n0 - 1;
     *   s = -k, k >= 2: 2[2g - 2 + n + v - #{j : m_j | k}]. */
    int order_R(const Signature& sig, int n0, long long point);

}  // namespace hypzeta

#endif  // HYPZETA_SURFACE_HPP
