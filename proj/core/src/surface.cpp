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

#include "hypzeta/surface.hpp"

#include <charconv>
#include <cmath>
#include <sstream>

#include "hypzeta/errors.hpp"

namespace hypzeta {

namespace {

    std::string_view trim(std::string_view text) {
        while (!text.empty() && (text.front() == ' ' || text.front() == '\t')) text.remove_prefix(1);
        while (!text.empty() && (text.back() == ' ' || text.back() == '\t')) text.remove_suffix(1);
        return text;
    }

    long long parse_integer(std::string_view text, std::string_view what) {
        text = trim(text);
        if (!text.empty() && text.front() == '+') text.remove_prefix(1);
        long long value = 0;
        const auto [end, error] = std::from_chars(text.data(), text.data() + text.size(), value);
        if (text.empty() || error != std::errc() || end != text.data() + text.size())
            throw InvalidArgumentError("expected an integer for " + std::string(what) + ", got '"
                                       + std::string(text) + "'");
        return value;
    }

    int count_divisible(const std::vector<int>& orders, long long k) {
        int count = 0;
        for (const int m : orders)
            if (k % m == 0) ++count;
        return count;
    }

}  // namespace

Signature Signature::make(int genus, int cusps, std::vector<int> orders) {
    if (genus < 0) throw InvalidArgumentError("signature: genus must be >= 0");
    if (cusps < 0) throw InvalidArgumentError("signature: number of cusps must be >= 0");
    for (const int m : orders)
        if (m < 2) throw InvalidArgumentError("signature: ramification orders must be >= 2, got " + std::to_string(m));
    Signature sig(genus, cusps, std::move(orders));
    if (!(sig.area_over_2pi() > 1e-12))
        throw InvalidArgumentError("signature " + sig.to_string() + " does not have positive hyperbolic area");
    return sig;
}

Signature Signature::parse(std::string_view text) {
    const auto first = text.find(',');
    const auto second = first == std::string_view::npos ? first : text.find(',', first + 1);
    if (second == std::string_view::npos)
        throw InvalidArgumentError("signature must look like 'g,n,m1:m2:...', got '" + std::string(text) + "'");
    const auto genus = parse_integer(text.substr(0, first), "genus");
    const auto cusps = parse_integer(text.substr(first + 1, second - first - 1), "cusps");
    std::vector<int> orders;
    std::string_view rest = trim(text.substr(second + 1));
    while (!rest.empty()) {
        const auto colon = rest.find(':');
        orders.push_back(static_cast<int>(parse_integer(rest.substr(0, colon), "ramification order")));
        if (colon == std::string_view::npos) break;
        rest = rest.substr(colon + 1);
        if (rest.empty()) throw InvalidArgumentError("signature: trailing ':' in ramification list");
    }
    return make(static_cast<int>(genus), static_cast<int>(cusps), std::move(orders));
}

double Signature::area_over_2pi() const noexcept {
    double total = euler_defect();
    for (const int m : orders_) total += 1.0 - 1.0 / m;
    return total;
}

std::string Signature::to_string() const {
    std::string out = std::to_string(genus_) + "," + std::to_string(cusps_) + ",";
    for (std::size_t j = 0; j < orders_.size(); ++j) {
        if (j) out += ':';
        out += std::to_string(orders_[j]);
    }
    return out;
}

double area(const Signature& sig) { return 2.0 * kPi * sig.area_over_2pi(); }

SurfaceConstants constants(const Signature& sig, const ScatteringModel& model) {
    if (model.cusps() != sig.cusps())
        throw MismatchError("scattering model '" + model.label() + "' has " + std::to_string(model.cusps())
                            + " cusps but signature " + sig.to_string() + " has " + std::to_string(sig.cusps()));
    const double scaled_area = sig.area_over_2pi();
    const double zeta_prime = zeta_prime_minus_one();
    double elliptic = 0.0;
    for (const int m : sig.orders()) elliptic += (static_cast<double>(m) * m - 1.0) / (6.0 * m) * std::log(m);

    SurfaceConstants out;
    out.area = area(sig);
    out.a = model.a_constant();
    out.b = -scaled_area;
    out.c = -sig.cusps() * std::log(2.0);
    out.d = elliptic + 0.5 * sig.cusps() * kLog2Pi - scaled_area * (0.5 * kLog2Pi - 2.0 * zeta_prime)
        - 0.5 * out.a * std::log(2.0);
    out.log_e = elliptic + scaled_area * (2.0 * zeta_prime - 0.25);
    return out;
}

HalfInteger HalfInteger::parse(std::string_view text) {
    text = trim(text);
    const auto slash = text.find('/');
    if (slash != std::string_view::npos) {
        const long long numerator = parse_integer(text.substr(0, slash), "point numerator");
        const long long denominator = parse_integer(text.substr(slash + 1), "point denominator");
        if (denominator == 1) return from_integer(numerator);
        if (denominator == 2) return from_twice(numerator);
        throw InvalidArgumentError("point must be an integer or half-integer, got '" + std::string(text) + "'");
    }
    if (text.find('.') == std::string_view::npos) return from_integer(parse_integer(text, "point"));
    const double value = std::stod(std::string(text));
    const double twice = 2.0 * value;
    if (twice != std::round(twice))
        throw InvalidArgumentError("point must be an integer or half-integer, got '" + std::string(text) + "'");
    return from_twice(static_cast<long long>(twice));
}

std::string HalfInteger::to_string() const {
    if (is_integer()) return std::to_string(as_integer());
    return std::to_string(twice_) + "/2";
}

int order_Z(const Signature& sig, int n0, HalfInteger point) {
    if (!point.is_integer()) {
        if (point.twice() > 0)
            throw DomainError("order_Z: no closed form at positive half-integer s = " + point.to_string());
        return -sig.cusps();
    }
    const long long s = point.as_integer();
    if (s == 1) return 1;
    if (s >= 2) return 0;
    if (s == 0) return 2 * sig.genus() - 1 + sig.cusps() - n0;
    const long long k = -s;
    long long order = (2 * k + 1) * sig.euler_defect();
    for (const int m : sig.orders()) order += 2 * (k - k / m);
    return static_cast<int>(order);
}

int order_R(const Signature& sig, int n0, long long point) {
    if (point == 1) return 1;
    if (point >= 2) return 0;
    if (point == 0) return sig.euler_defect() - n0;
    const int v = sig.elliptic_count();
    if (point == -1) return 2 * (sig.euler_defect() + v) + n0 - 1;
    return 2 * (sig.euler_defect() + v - count_divisible(sig.orders(), -point));
}

}  // namespace hypzeta
