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

#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "hypzeta/errors.hpp"
#include "hypzeta/length_spectrum.hpp"

namespace hypzeta {

namespace {

    constexpr std::string_view kHeader = "trace,count,length,norm";

    std::string format_double(double x) {
        char buffer[32];
        std::snprintf(buffer, sizeof buffer, "%.17g", x);
        return buffer;
    }

    std::filesystem::path sidecar(const std::filesystem::path& path) {
        std::filesystem::path out = path;
        out += ".json";
        return out;
    }

    nlohmann::json metadata(std::string_view group, long long max_trace) {
        return {{"group", std::string(group)},
                {"max_trace", max_trace},
                {"generator_convention", std::string(kGeneratorConvention)},
                {"version", kSpectrumCacheVersion}};
    }

}  // namespace

void write_spectrum_csv(const LengthSpectrum& spectrum, std::ostream& out) {
    out << kHeader << '\n';
    for (const auto& shell : spectrum.shells())
        out << shell.trace << ',' << shell.count << ',' << format_double(shell.length) << ','
            << format_double(shell.norm) << '\n';
}

LengthSpectrum read_spectrum_csv(std::istream& in, std::string group_label, long long max_trace) {
    std::string line;
    if (!std::getline(in, line) || line != kHeader)
        throw InvalidArgumentError("spectrum CSV: missing header '" + std::string(kHeader) + "'");
    std::vector<TraceShell> shells;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream row(line);
        TraceShell shell;
        char c1 = 0, c2 = 0;
        // Length and norm are recomputed from the trace; the stored columns are for readers.
        if (!(row >> shell.trace >> c1 >> shell.count >> c2) || c1 != ',' || c2 != ',')
            throw InvalidArgumentError("spectrum CSV: malformed row '" + line + "'");
        shell.length = length_from_trace(shell.trace);
        shell.norm = norm_from_trace(shell.trace);
        shells.push_back(shell);
    }
    return LengthSpectrum::from_shells(std::move(group_label), max_trace, std::move(shells));
}

void save_spectrum_cache(const LengthSpectrum& spectrum, const std::filesystem::path& path) {
    std::ofstream csv(path);
    if (!csv) throw InvalidArgumentError("cannot write spectrum cache '" + path.string() + "'");
    write_spectrum_csv(spectrum, csv);
    std::ofstream meta(sidecar(path));
    if (!meta) throw InvalidArgumentError("cannot write spectrum metadata '" + sidecar(path).string() + "'");
    meta << metadata(spectrum.group_label(), spectrum.max_trace()).dump(2) << '\n';
}

std::optional<LengthSpectrum> load_spectrum_cache(const std::filesystem::path& path, std::string_view group_label,
                                                  long long max_trace) {
    std::ifstream meta(sidecar(path));
    std::ifstream csv(path);
    if (!meta || !csv) return std::nullopt;
    const nlohmann::json stored = nlohmann::json::parse(meta, nullptr, false);
    if (stored.is_discarded() || stored != metadata(group_label, max_trace)) return std::nullopt;
    try {
        return read_spectrum_csv(csv, std::string(group_label), max_trace);
    } catch (const InvalidArgumentError&) {
        return std::nullopt;
    }
}

}  // namespace hypzeta
