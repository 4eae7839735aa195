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

#include "report.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <type_traits>

namespace hypzeta::cli {

namespace {

    nlohmann::json complex_json(std::complex<double> z) { return {{"re", z.real()}, {"im", z.imag()}}; }

    std::complex<double> complex_from(const nlohmann::json& j) {
        return {j.at("re").get<double>(), j.at("im").get<double>()};
    }

    nlohmann::json value_json(const Value& value) {
        return std::visit(
            [](const auto& v) -> nlohmann::json {
                using T = std::decay_t<decltype(v)>;
                if constexpr (std::is_same_v<T, std::complex<double>>) return complex_json(v);
                else return v;
            },
            value);
    }

    Value value_from(const nlohmann::json& j) {
        if (j.is_object()) return complex_from(j);
        if (j.is_number_integer()) return j.get<long long>();
        if (j.is_number_float()) return j.get<double>();
        return j.get<std::string>();
    }

    std::string format(double x) {
        char buffer[32];
        std::snprintf(buffer, sizeof buffer, "%.15g", x);
        return buffer;
    }

    std::string format(std::complex<double> z) {
        if (z.imag() == 0.0) return format(z.real());
        return format(z.real()) + (std::signbit(z.imag()) ? " - " : " + ") + format(std::abs(z.imag())) + "i";
    }

}  // namespace

const Check& Report::check(std::string name, std::complex<double> lhs, std::complex<double> rhs, double tolerance,
                           bool relative) {
    const double diff = std::abs(lhs - rhs);
    const double scale = relative ? std::max(1.0, std::abs(rhs)) : 1.0;
    checks.push_back({std::move(name), lhs, rhs, diff, tolerance, diff <= tolerance * scale});
    return checks.back();
}

const Check& Report::check_residual(std::string name, std::complex<double> lhs, std::complex<double> rhs,
                                    double residual, double tolerance) {
    checks.push_back({std::move(name), lhs, rhs, residual, tolerance, residual <= tolerance});
    return checks.back();
}

bool Report::all_pass() const {
    for (const auto& c : checks)
        if (!c.pass) return false;
    return true;
}

void to_json(nlohmann::json& j, const Report& report) {
    j = nlohmann::json::object();
    j["command"] = report.command;
    j["inputs"] = report.inputs;
    j["results"] = nlohmann::json::array();
    for (const auto& r : report.results) j["results"].push_back({{"name", r.name}, {"value", value_json(r.value)}});
    j["checks"] = nlohmann::json::array();
    for (const auto& c : report.checks)
        j["checks"].push_back({{"name", c.name},
                               {"lhs", complex_json(c.lhs)},
                               {"rhs", complex_json(c.rhs)},
                               {"abs_diff", c.abs_diff},
                               {"tolerance", c.tolerance},
                               {"pass", c.pass}});
    j["notes"] = report.notes;
    if (report.error) j["error"] = {{"category", report.error->category}, {"message", report.error->message}};
    j["timestamp"] = report.timestamp;
}

void from_json(const nlohmann::json& j, Report& report) {
    report = Report{};
    report.command = j.at("command").get<std::string>();
    report.inputs = j.at("inputs");
    for (const auto& r : j.at("results")) report.results.push_back({r.at("name").get<std::string>(), value_from(r.at("value"))});
    for (const auto& c : j.at("checks"))
        report.checks.push_back({c.at("name").get<std::string>(), complex_from(c.at("lhs")), complex_from(c.at("rhs")),
                                 c.at("abs_diff").get<double>(), c.at("tolerance").get<double>(), c.at("pass").get<bool>()});
    report.notes = j.at("notes").get<std::vector<std::string>>();
    if (j.contains("error"))
        report.error = ReportError{j["error"].at("category").get<std::string>(), j["error"].at("message").get<std::string>()};
    report.timestamp = j.at("timestamp").get<std::string>();
}

void print_text(const Report& report, std::ostream& out) {
    for (const auto& r : report.results) {
        out << r.name << " = ";
        std::visit(
            [&out](const auto& v) {
                using T = std::decay_t<decltype(v)>;
                if constexpr (std::is_same_v<T, double> || std::is_same_v<T, std::complex<double>>) out << format(v);
                else out << v;
            },
            r.value);
        out << '\n';
    }
    for (const auto& c : report.checks)
        out << (c.pass ? "PASS " : "FAIL ") << c.name << ": |" << format(c.lhs) << " - " << format(c.rhs)
            << "| = " << format(c.abs_diff) << " (tolerance " << format(c.tolerance) << ")\n";
    for (const auto& n : report.notes) out << "note: " << n << '\n';
}

std::string utc_timestamp() {
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm utc{};
    gmtime_r(&now, &utc);
    char buffer[32];
    std::strftime(buffer, sizeof buffer, "%Y-%m-%dT%H:%M:%SZ", &utc);
    return buffer;
}

}  // namespace hypzeta::cli
