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
 // Primitive hyperbolic conjugacy classes of PSL(2, Z) as Lyndon words in the parabolic generators.

#ifndef HYPZETA_LENGTH_SPECTRUM_HPP
#define HYPZETA_LENGTH_SPECTRUM_HPP

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace hypzeta {

    /* One primitive hyperbolic class. `word` is the lexicographically least rotation over
     * L < R, with L = [[1,1],[0,1]] and R = [[1,0],[1,1]]. */
    struct GeodesicClass {
        std::string word;
        long long trace = 0;
        double norm = 0.0;    // ((t + sqrt(t^2 - 4))/2)^2
        double length = 0.0;  // 2 arccosh(t/2) = log norm

        friend bool operator==(const GeodesicClass&, const GeodesicClass&) = default;
    };

    // All classes of one trace.
    struct TraceShell {
        long long trace = 0;
        long long count = 0;
        double length = 0.0;
        double norm = 0.0;
    };

    double norm_from_trace(long long trace);
    double length_from_trace(long long trace);

    /* Classes with trace <= max_trace, complete up to that bound. A spectrum read back from a
     * cache carries shells only; `has_words()` tells the two apart. */
    class LengthSpectrum {
    public:
        LengthSpectrum(std::string group_label, long long max_trace, std::vector<GeodesicClass> classes);
        static LengthSpectrum from_shells(std::string group_label, long long max_trace, std::vector<TraceShell> shells);

        const std::string& group_label() const noexcept { return group_label_; }
        long long max_trace() const noexcept { return max_trace_; }
        bool has_words() const noexcept { return has_words_; }
        // Sorted by (trace, word).
        const std::vector<GeodesicClass>& classes() const noexcept { return classes_; }
        // One shell per trace 3..max_trace, in increasing order.
        const std::vector<TraceShell>& shells() const noexcept { return shells_; }

        long long multiplicity(long long trace) const;
        long long class_count() const noexcept { return class_count_; }
        // Smallest norm present; throws EmptySpectrumError when there are no classes.
        double p_min() const;

        // Same spectrum cut down to a smaller completeness bound.
        LengthSpectrum truncated(long long max_trace) const;

    private:
        LengthSpectrum() = default;

        std::string group_label_;
        long long max_trace_ = 0;
        bool has_words_ = false;
        std::vector<GeodesicClass> classes_;
        std::vector<TraceShell> shells_;
        long long class_count_ = 0;
    };

    struct EnumerationLimits {
        std::size_t max_classes = 50'000'000;
        unsigned threads = 0;  // 0: hardware concurrency
    };

    /* Every primitive hyperbolic class of PSL(2, Z) with trace <= max_trace. Words are grown as
     * prenecklaces, and a prefix is abandoned once its trace exceeds the bound: multiplying by L
     * or R never decreases an entry. Throws InvalidArgumentError for max_trace < 3 and
     * CapacityError past limits.max_classes. */
    LengthSpectrum enumerate(long long max_trace, const EnumerationLimits& limits = {});

    // Aperiodic binary necklaces of the given length, (1/l) sum_{d | l} mu(d) 2^(l/d). Length in [2, 62].
    std::uint64_t necklace_count(int length);

    // Least rotation of a word.
    std::string canonical_rotation(std::string_view word);

    /* Class of a cyclic word over {L, R}. Throws SingleLetterError for L^k or R^k (parabolic),
     * NonPrimitiveError for proper powers, InvalidArgumentError for other characters, and
     * DomainError if a matrix entry overflows 128 bits. */
    GeodesicClass class_from_word(std::string_view word);

    // Trace of the product of L and R along the word, with overflow checks.
    long long word_trace(std::string_view word);

    inline constexpr std::string_view kGeneratorConvention = "L=[[1,1],[0,1]],R=[[1,0],[1,1]]";
    inline constexpr int kSpectrumCacheVersion = 1;

    // CSV with header `trace,count,length,norm`, one row per shell.
    void write_spectrum_csv(const LengthSpectrum& spectrum, std::ostream& out);
    LengthSpectrum read_spectrum_csv(std::istream& in, std::string group_label, long long max_trace);

    /* Writes `path` and the metadata sidecar `path.json`
     * {group, max_trace, generator_convention, version}. */
    void save_spectrum_cache(const LengthSpectrum& spectrum, const std::filesystem::path& path);

    // Loads the cache only when the sidecar matches exactly; std::nullopt otherwise.
    std::optional<LengthSpectrum> load_spectrum_cache(const std::filesystem::path& path, std::string_view group_label,
                                                      long long max_trace);

}  // namespace hypzeta

#endif  // HYPZETA_LENGTH_SPECTRUM_HPP
