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

#include "hypzeta/length_spectrum.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <iterator>
#include <limits>
#include <mutex>
#include <thread>
#include <tuple>

#include "hypzeta/errors.hpp"

namespace hypzeta {

namespace {

    __extension__ typedef __int128 Int;

    struct Matrix {
        Int a, b, c, d;
        Int trace() const { return a + d; }
    };

    Int checked_add(Int x, Int y) {
        Int out;
        if (__builtin_add_overflow(x, y, &out)) throw DomainError("matrix entry overflows 128 bits");
        return out;
    }

    // M L and M R
    Matrix times(const Matrix& m, char letter) {
        if (letter == 'L') return {m.a, checked_add(m.a, m.b), m.c, checked_add(m.c, m.d)};
        return {checked_add(m.a, m.b), m.b, checked_add(m.c, m.d), m.d};
    }

    Matrix product(std::string_view word) {
        Matrix m{1, 0, 0, 1};
        for (const char letter : word) m = times(m, letter);
        return m;
    }

    long long to_long(Int x) {
        if (x > std::numeric_limits<long long>::max()) throw DomainError("trace does not fit in 64 bits");
        return static_cast<long long>(x);
    }

    GeodesicClass make_class(std::string word, long long trace) {
        return {std::move(word), trace, norm_from_trace(trace), length_from_trace(trace)};
    }

    struct Search {
        long long max_trace;
        std::size_t max_classes;
        std::atomic<std::size_t>& total;
        std::vector<GeodesicClass>& out;
        std::string word;

        void visit(std::size_t period, const Matrix& m) {
            const std::size_t len = word.size();
            if (len == period) {
                if (total.fetch_add(1, std::memory_order_relaxed) + 1 > max_classes)
                    throw CapacityError("enumerate: more than " + std::to_string(max_classes) + " classes");
                out.push_back(make_class(word, to_long(m.trace())));
            }
            if (static_cast<long long>(len) >= max_trace - 1) return;
            const char repeat = word[len - period];
            descend(period, m, repeat);
            if (repeat == 'L') descend(len + 1, m, 'R');
        }

        void descend(std::size_t period, const Matrix& m, char letter) {
            const Matrix next = times(m, letter);
            if (next.trace() > max_trace) return;
            word.push_back(letter);
            visit(period, next);
            word.pop_back();
        }
    };

    int mobius(int n) {
        int result = 1;
        for (int p = 2; p * p <= n; ++p) {
            if (n % p) continue;
            n /= p;
            if (n % p == 0) return 0;
            result = -result;
        }
        return n > 1 ? -result : result;
    }

    std::vector<TraceShell> shells_from_classes(long long max_trace, const std::vector<GeodesicClass>& classes) {
        std::vector<TraceShell> shells;
        for (long long t = 3; t <= max_trace; ++t) shells.push_back({t, 0, length_from_trace(t), norm_from_trace(t)});
        for (const auto& c : classes) ++shells[static_cast<std::size_t>(c.trace - 3)].count;
        return shells;
    }

}  // namespace

double norm_from_trace(long long trace) {
    const double t = static_cast<double>(trace);
    const double root = 0.5 * (t + std::sqrt((t - 2.0) * (t + 2.0)));
    return root * root;
}

double length_from_trace(long long trace) { return 2.0 * std::acosh(0.5 * static_cast<double>(trace)); }

LengthSpectrum::LengthSpectrum(std::string group_label, long long max_trace, std::vector<GeodesicClass> classes)
    : group_label_(std::move(group_label)), max_trace_(max_trace), has_words_(true), classes_(std::move(classes)) {
    if (max_trace_ < 3) throw InvalidArgumentError("length spectrum: max_trace must be >= 3");
    for (const auto& c : classes_)
        if (c.trace < 3 || c.trace > max_trace_)
            throw InvalidArgumentError("length spectrum: class trace " + std::to_string(c.trace) + " out of range");
    std::sort(classes_.begin(), classes_.end(),
              [](const GeodesicClass& x, const GeodesicClass& y) { return std::tie(x.trace, x.word) < std::tie(y.trace, y.word); });
    shells_ = shells_from_classes(max_trace_, classes_);
    class_count_ = static_cast<long long>(classes_.size());
}

LengthSpectrum LengthSpectrum::from_shells(std::string group_label, long long max_trace, std::vector<TraceShell> shells) {
    if (max_trace < 3) throw InvalidArgumentError("length spectrum: max_trace must be >= 3");
    if (shells.size() != static_cast<std::size_t>(max_trace - 2))
        throw InvalidArgumentError("length spectrum: expected one shell per trace 3.." + std::to_string(max_trace));
    LengthSpectrum out;
    out.group_label_ = std::move(group_label);
    out.max_trace_ = max_trace;
    for (std::size_t i = 0; i < shells.size(); ++i) {
        if (shells[i].trace != static_cast<long long>(i) + 3 || shells[i].count < 0)
            throw InvalidArgumentError("length spectrum: malformed shell at trace " + std::to_string(shells[i].trace));
        out.class_count_ += shells[i].count;
    }
    out.shells_ = std::move(shells);
    return out;
}

long long LengthSpectrum::multiplicity(long long trace) const {
    if (trace < 3 || trace > max_trace_) return 0;
    return shells_[static_cast<std::size_t>(trace - 3)].count;
}

double LengthSpectrum::p_min() const {
    for (const auto& shell : shells_)
        if (shell.count > 0) return shell.norm;
    throw EmptySpectrumError("length spectrum '" + group_label_ + "' has no classes");
}

LengthSpectrum LengthSpectrum::truncated(long long max_trace) const {
    if (max_trace > max_trace_)
        throw InvalidArgumentError("length spectrum: cannot extend max_trace " + std::to_string(max_trace_) + " to "
                                   + std::to_string(max_trace));
    if (!has_words_)
        return from_shells(group_label_, max_trace,
                           std::vector<TraceShell>(shells_.begin(), shells_.begin() + (max_trace - 2)));
    std::vector<GeodesicClass> kept;
    for (const auto& c : classes_)
        if (c.trace <= max_trace) kept.push_back(c);
    return LengthSpectrum(group_label_, max_trace, std::move(kept));
}

LengthSpectrum enumerate(long long max_trace, const EnumerationLimits& limits) {
    if (max_trace < 3) throw InvalidArgumentError("enumerate: max_trace must be >= 3, got " + std::to_string(max_trace));

    // Every Lyndon word of length >= 2 starts with L^k R for a unique k in [1, max_trace - 2].
    const long long tasks = max_trace - 2;
    std::vector<std::vector<GeodesicClass>> results(static_cast<std::size_t>(tasks));
    std::atomic<long long> next{0};
    std::atomic<std::size_t> total{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;

    auto worker = [&] {
        for (long long i = next.fetch_add(1); i < tasks; i = next.fetch_add(1)) {
            try {
                const long long k = i + 1;
                Search search{max_trace, limits.max_classes, total, results[static_cast<std::size_t>(i)],
                              std::string(static_cast<std::size_t>(k), 'L') + 'R'};
                search.visit(static_cast<std::size_t>(k + 1), product(search.word));
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) failure = std::current_exception();
                next.store(tasks);
            }
        }
    };

    unsigned threads = limits.threads ? limits.threads : std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<long long>(threads, tasks));
    std::vector<std::thread> pool;
    for (unsigned i = 1; i < threads; ++i) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);

    std::vector<GeodesicClass> classes;
    classes.reserve(total.load());
    for (auto& part : results)
        std::move(part.begin(), part.end(), std::back_inserter(classes));
    return LengthSpectrum("modular", max_trace, std::move(classes));
}

std::uint64_t necklace_count(int length) {
    if (length < 2 || length > 62) throw InvalidArgumentError("necklace_count: length must be in [2, 62]");
    std::int64_t sum = 0;
    for (int d = 1; d <= length; ++d)
        if (length % d == 0) sum += mobius(d) * (std::int64_t{1} << (length / d));
    return static_cast<std::uint64_t>(sum / length);
}

std::string canonical_rotation(std::string_view word) {
    std::string best(word);
    std::string doubled = std::string(word) + std::string(word);
    for (std::size_t i = 1; i < word.size(); ++i) {
        const std::string_view candidate(doubled.data() + i, word.size());
        if (candidate < best) best.assign(candidate);
    }
    return best;
}

long long word_trace(std::string_view word) {
    for (const char letter : word)
        if (letter != 'L' && letter != 'R')
            throw InvalidArgumentError("word must use only 'L' and 'R', got '" + std::string(word) + "'");
    return to_long(product(word).trace());
}

GeodesicClass class_from_word(std::string_view word) {
    if (word.empty()) throw InvalidArgumentError("class_from_word: empty word");
    const long long trace = word_trace(word);
    if (word.find('L') == std::string_view::npos || word.find('R') == std::string_view::npos)
        throw SingleLetterError("word '" + std::string(word) + "' uses one generator; the element is parabolic");
    const std::size_t n = word.size();
    for (std::size_t d = 1; d < n; ++d) {
        if (n % d) continue;
        if (word.substr(d) == word.substr(0, n - d))
            throw NonPrimitiveError("word '" + std::string(word) + "' is a proper power of '"
                                    + std::string(word.substr(0, d)) + "'");
    }
    return make_class(canonical_rotation(word), trace);
}

}  // namespace hypzeta
