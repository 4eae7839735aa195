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
 // Branch-sensitive identities among the closed-form factors, and the pinned points where they are checked.

#ifndef HYPZETA_IDENTITIES_HPP
#define HYPZETA_IDENTITIES_HPP

#include <array>
#include <string>
#include <vector>

#include "hypzeta/zeta_factors.hpp"

namespace hypzeta {

    /* Both sides of an identity as logs. rel_diff = |exp(log_lhs - log_rhs) - 1|, so sides that
     * differ by a multiple of 2 pi i in the log still agree. */
    struct IdentityResidual {
        std::string name;
        Complex log_lhs = 0.0;
        Complex log_rhs = 0.0;
        double rel_diff = 0.0;
    };

    // Z_ell(s)/Z_ell(1-s) = prod_j prod_k [sin(pi(s+k)/m_j)]^((m_j-2k-1)/m_j)
    IdentityResidual elliptic_ratio_residual(const Signature& sig, Complex s);

    // (Z_inf(s+1)/Z_inf(s)) (Z_inf(1-s)/Z_inf(-s)) = (-4 sin^2 pi s)^(|X|/2pi)
    IdentityResidual z_infty_four_point_residual(const Signature& sig, Complex s, const EvalOptions& opts = {});

    // (Z_ell(s+1)/Z_ell(s)) (Z_ell(1-s)/Z_ell(-s)) = prod_j (sin pi s)^(2/m_j) / ((-4)^((m_j-1)/m_j) sin^2(pi s/m_j))
    IdentityResidual elliptic_block_residual(const Signature& sig, Complex s);

    // kappa(s+1)/kappa(s) = R(s) R(-s) right side
    IdentityResidual ruelle_fe_residual(const Signature& sig, const ScatteringModel& model, Complex s,
                                        const EvalOptions& opts = {});

    // kappa(s) kappa(1-s) = 1
    IdentityResidual kappa_reflection_residual(const Signature& sig, const ScatteringModel& model, Complex s,
                                               const EvalOptions& opts = {});

    /* Principal logs that enter the identities above with a non-integer weight. A jump in any
     * of their imaginary parts along a path means the path crosses a branch cut. */
    std::vector<Complex> branch_components(const Signature& sig, Complex s);

    /* Samples the segment base -> s at `steps` points and reports whether every branch
     * component moves continuously (no imaginary-part jump above pi/2 between samples). */
    bool path_is_cut_safe(const Signature& sig, Complex s, Complex base, int steps = 400);

    inline constexpr int kSamplePointsVersion = 1;
    inline constexpr Complex kSampleBasePoint{0.25, -0.5};

    // Points in 0 < Re s < 1/2, Im s < 0; every identity above holds there on principal branches.
    inline constexpr std::array<Complex, 20> kCutSafePoints{{
        {0.05, -0.05}, {0.15, -0.05}, {0.25, -0.05}, {0.35, -0.05}, {0.45, -0.05},
        {0.05, -0.5},  {0.15, -0.5},  {0.25, -0.5},  {0.35, -0.5},  {0.45, -0.5},
        {0.05, -1.5},  {0.15, -1.5},  {0.25, -1.5},  {0.35, -1.5},  {0.45, -1.5},
        {0.05, -3.0},  {0.15, -3.0},  {0.25, -3.0},  {0.35, -3.0},  {0.45, -3.0},
    }};

    struct IdentityCase {
        Signature signature;
        ScatteringModel model;
    };

    /* The three reference surfaces: (0;1;2,3) with the modular model, (0;0;2,3,7) cocompact,
     * and (1;1;2) with the one-cusp trivial model. */
    std::vector<IdentityCase> reference_cases();

}  // namespace hypzeta

#endif  // HYPZETA_IDENTITIES_HPP
