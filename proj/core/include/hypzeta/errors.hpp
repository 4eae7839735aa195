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
 // Exception hierarchy shared by every module.

#ifndef HYPZETA_ERRORS_HPP
#define HYPZETA_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace hypzeta {

    /* Coarse classification used by the command line front end to pick an exit code.
     * Usage errors are caller mistakes; numerical errors are failures of an evaluation
     * whose inputs were well formed. */
    enum class ErrorCategory { usage, numerical };

    class Error : public std::runtime_error {
    public:
        Error(ErrorCategory category, const std::string& what)
            : std::runtime_error(what), category_(category) {}

        ErrorCategory category() const noexcept { return category_; }

    private:
        ErrorCategory category_;
    };

#define HYPZETA_DEFINE_ERROR(Name, Category)                                         \
    class Name : public Error {                                                      \
    public:                                                                          \
        explicit Name(const std::string& what) : Error(ErrorCategory::Category, what) {} \
    };

    // Malformed input: bad signature text, out-of-range options, and the like.
    HYPZETA_DEFINE_ERROR(InvalidArgumentError, usage)
    // Two inputs that must describe the same surface do not.
    HYPZETA_DEFINE_ERROR(MismatchError, usage)

    // Evaluation at a pole of a meromorphic building block.
    HYPZETA_DEFINE_ERROR(PoleError, numerical)
    // A truncated series or product cannot reach the requested accuracy.
    HYPZETA_DEFINE_ERROR(ConvergenceError, numerical)
    // The point lies outside the region where the operation is defined.
    HYPZETA_DEFINE_ERROR(DomainError, numerical)
    // A numerically fitted order is not close to an integer.
    HYPZETA_DEFINE_ERROR(FitError, numerical)
    // A factor of a closed-form product vanishes or blows up; the message names it.
    HYPZETA_DEFINE_ERROR(SingularFactorError, numerical)
    // Enumeration would exceed the configured class budget.
    HYPZETA_DEFINE_ERROR(CapacityError, numerical)
    HYPZETA_DEFINE_ERROR(EmptySpectrumError, numerical)
    // Word is a proper power of a shorter word.
    HYPZETA_DEFINE_ERROR(NonPrimitiveError, usage)
    // Word uses a single generator, so the element is parabolic.
    HYPZETA_DEFINE_ERROR(SingleLetterError, usage)

#undef HYPZETA_DEFINE_ERROR

}  // namespace hypzeta

#endif  // HYPZETA_ERRORS_HPP
