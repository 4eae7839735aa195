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
 // Structured result of one command line invocation, with a lossless JSON form.

#ifndef HYPZETA_TOOLS_REPORT_HPP
#define HYPZETA_TOOLS_REPORT_HPP

#include <complex>
#include <optional>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

namespace hypzeta::cli {

    using Value = std::variant<long long, double, std::complex<double>, std::string>;

    struct NamedValue {
        std::string name;
        Value value;

        friend bool operator==(const NamedValue&, const NamedValue&) = default;
    };

    // Both sides of a comparison and the tolerance that was applied.
    struct Check {
        std::string name;
        std::complex<double> lhs;
        std::complex<double> rhs;
        double abs_diff = 0.0;
        double tolerance = 0.0;
        bool pass = false;

        friend bool operator==(const Check&, const Check&) = default;
    };

    struct ReportError {
        std::string category;  // "usage" or "numerical"
        std::string message;

        friend bool operator==(const ReportError&, const ReportError&) = default;
    };

    struct Report {
        std::string command;
        nlohmann::json inputs = nlohmann::json::object();
        std::vector<NamedValue> results;
        std::vector<Check> checks;
        std::vector<std::string> notes;
        std::optional<ReportError> error;
        std::string timestamp;

        void add(std::string name, Value value) { results.push_back({std::move(name), std::move(value)}); }

        /* Records lhs against rhs. The comparison is absolute when `relative` is false,
         * otherwise scaled by max(1, |rhs|). */
        const Check& check(std::string name, std::complex<double> lhs, std::complex<double> rhs, double tolerance,
                           bool relative = false);

        // Adds a check that already has its verdict, e.g. an identity residual.
        const Check& check_residual(std::string name, std::complex<double> lhs, std::complex<double> rhs,
                                    double residual, double tolerance);

        bool all_pass() const;

        friend bool operator==(const Report&, const Report&) = default;
    };

    void to_json(nlohmann::json& j, const Report& report);
    void from_json(const nlohmann::json& j, Report& report);

    // "name = value" lines, then PASS/FAIL lines, then notes.
    void print_text(const Report& report, std::ostream& out);

    std::string utc_timestamp();

}  // namespace hypzeta::cli

#endif  // HYPZETA_TOOLS_REPORT_HPP
