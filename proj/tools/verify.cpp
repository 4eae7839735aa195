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

// The `verify` suite. Each section records one check per identity and surface, carrying the
// worst point found so that a failure names where to look.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <set>
#include <string>

#include "cli.hpp"
#include "hypzeta/errors.hpp"
#include "hypzeta/euler_product.hpp"
#include "hypzeta/identities.hpp"
#include "hypzeta/length_spectrum.hpp"
#include "hypzeta/zeta_factors.hpp"

namespace hypzeta::cli {

namespace {

    struct Worst {
        double residual = -1.0;
        Complex lhs = 0.0;
        Complex rhs = 0.0;
        Complex at = 0.0;

        void take(double r, Complex l, Complex h, Complex s) {
            if (!(r <= residual)) *this = {r, l, h, s};  // NaN always replaces
        }
    };

    std::string point_text(Complex s) {
        char buffer[64];
        std::snprintf(buffer, sizeof buffer, "%g%+gi", s.real(), s.imag());
        return buffer;
    }

    void record(Report& report, const std::string& name, const Worst& w, double tolerance) {
        report.check_residual(name + " (worst at " + point_text(w.at) + ")", w.lhs, w.rhs, w.residual, tolerance);
    }

    double rel(Complex a, Complex b) { return std::abs(a - b) / std::abs(b); }

    void special_functions_section(Report& report, const EvalOptions& opts) {
        Worst reflection;
        for (int i = 0; i < 10; ++i)
            for (int j = 0; j < 10; ++j) {
                const Complex s(-2.35 + 0.53 * i, -2.25 + 0.5 * j);
                const Complex lhs = gamma(s) * gamma(1.0 - s);
                const Complex rhs = kPi / sin_pi(s);
                reflection.take(rel(lhs, rhs), lhs, rhs, s);
            }
        record(report, "Gamma(s) Gamma(1-s) = pi/sin(pi s)", reflection, 1e-10);

        for (const int m : {2, 3, 5, 7}) {
            Worst gauss;
            for (int i = 0; i < 7; ++i)
                for (int j = 0; j < 5; ++j) {
                    const Complex s(0.15 + 0.85 * i, -4.0 + 2.0 * j);
                    gauss.take(gauss_multiplication_defect(s, m), 0.0, 0.0, s);
                }
            record(report, "Gauss multiplication m=" + std::to_string(m), gauss, 1e-10);
        }

        Worst recursion;
        for (int i = 0; i < 10; ++i)
            for (int j = 0; j <= 10; ++j) {
                const Complex s(0.5 + 0.5 * i, -5.0 + j);
                const Complex lhs = log_barnes_gamma2(s, opts);
                const Complex rhs = log_gamma(s) + log_barnes_gamma2(s + 1.0, opts);
                recursion.take(std::abs(expm1(lhs - rhs)), lhs, rhs, s);
            }
        record(report, "log Gamma2(s) = log Gamma(s) + log Gamma2(s+1)", recursion, 1e-10);
    }

    void identities_section(Report& report, double tolerance, const EvalOptions& opts) {
        for (const IdentityCase& c : reference_cases()) {
            const std::string tag = " [" + c.signature.to_string() + ", " + c.model.label() + "]";
            const auto sweep = [&](const std::string& name, const auto& residual) {
                Worst w;
                for (const Complex s : kCutSafePoints) {
                    const IdentityResidual r = residual(s);
                    w.take(r.rel_diff, r.log_lhs, r.log_rhs, s);
                }
                record(report, name + " (log sides)" + tag, w, tolerance);
            };
            sweep("elliptic ratio", [&](Complex s) { return elliptic_ratio_residual(c.signature, s); });
            sweep("Z_inf four-point", [&](Complex s) { return z_infty_four_point_residual(c.signature, s, opts); });
            sweep("elliptic block", [&](Complex s) { return elliptic_block_residual(c.signature, s); });
            sweep("Ruelle functional equation", [&](Complex s) { return ruelle_fe_residual(c.signature, c.model, s, opts); });
            sweep("kappa(s) kappa(1-s) = 1", [&](Complex s) { return kappa_reflection_residual(c.signature, c.model, s, opts); });

            long long unsafe = 0;
            for (const Complex s : kCutSafePoints)
                if (!path_is_cut_safe(c.signature, s, kSampleBasePoint)) ++unsafe;
            report.check("sample paths crossing a branch cut" + tag, static_cast<double>(unsafe), 0.0, 0.0);
        }
    }

    void modular_section(Report& report) {
        const ScatteringModel modular = ScatteringModel::modular();
        const Signature sig = Signature::make(0, 1, {2, 3});

        report.check("phi(1/2) by removable limit", removable_limit(modular_phi, 0.5), -1.0, 1e-10);
        const LeadingTerm lead = phi_leading_at_zero(modular);
        report.check("order n0 of phi at 0", static_cast<double>(lead.n0), 1.0, 0.0);
        report.check("|phi_tilde(0)| from the circle mean", std::abs(lead.coeff), kPi / 3.0, 1e-9);
        report.add("phi_tilde(0) computed", lead.coeff);

        const RuelleLeading ruelle = ruelle_leading_at_zero(sig, modular);
        report.check("order of R at 0", static_cast<double>(ruelle.order), -2.0, 0.0);
        report.check("|leading coefficient of R at 0|", std::abs(ruelle.coeff), 9.0 / (kPi * kPi), 1e-10);
        report.check("|leading coefficient| from R(s)R(-s)", ruelle_leading_magnitude_from_fe(sig, modular),
                     9.0 / (kPi * kPi), 1e-6);
        report.add("R leading coefficient computed", ruelle.coeff);
        if (const auto& quoted = modular.quoted_phi_tilde_0()) {
            report.add("phi_tilde(0) quoted", *quoted);
            report.add("R leading coefficient with quoted phi_tilde(0)",
                       ruelle_leading_coefficient(sig, modular.a_constant(), *quoted));
            if (std::signbit(*quoted) != std::signbit(lead.coeff))
                report.notes.push_back("phi_tilde(0) sign: the Taylor expansion of phi at 0 gives a negative value (-pi/3) "
                                       "while the quoted value is +pi/3; the leading coefficient of R at 0 is therefore -9/pi^2 "
                                       "here against the quoted +9/pi^2. Magnitudes agree and are what the suite asserts.");
        }
    }

    std::vector<std::pair<Signature, int>> bundled_signatures() {
        std::vector<std::pair<Signature, int>> out{{Signature::make(0, 1, {2, 3}), 1}};
        for (int g = 0; g <= 2; ++g)
            for (int n = 0; n <= 3; ++n)
                for (const std::vector<int>& orders : std::vector<std::vector<int>>{{}, {2}, {3, 3}, {2, 3, 7}, {2, 4, 5}}) {
                    double area = 2 * g - 2 + n;
                    for (const int m : orders) area += 1.0 - 1.0 / m;
                    if (area <= 0.0) continue;
                    out.emplace_back(Signature::make(g, n, orders), 0);
                }
        return out;
    }

    void orders_section(Report& report) {
        const Signature modular = Signature::make(0, 1, {2, 3});
        const Signature genus_two = Signature::make(2, 0);
        const auto z_at = [](const Signature& sig, int n0, long long twice) {
            return static_cast<double>(order_Z(sig, n0, HalfInteger::from_twice(twice)));
        };
        report.check("modular: order of Z at 1", z_at(modular, 1, 2), 1.0, 0.0);
        report.check("modular: order of Z at 0", z_at(modular, 1, 0), -1.0, 0.0);
        report.check("modular: order of Z at -1/2", z_at(modular, 1, -1), -1.0, 0.0);
        report.check("modular: s_1", z_at(modular, 1, -2), 1.0, 0.0);
        report.check("modular: order of R at 0", order_R(modular, 1, 0), -2.0, 0.0);
        report.check("modular: order of R at -1", order_R(modular, 1, -1), 2.0, 0.0);
        report.check("modular: o_6", order_R(modular, 1, -6), -2.0, 0.0);
        report.check("(2;0): order of Z at 0", z_at(genus_two, 0, 0), 3.0, 0.0);
        report.check("(2;0): s_1", z_at(genus_two, 0, -2), 6.0, 0.0);
        report.check("(2;0): order of R at -1", order_R(genus_two, 0, -1), 3.0, 0.0);
        report.check("(2;0): o_2", order_R(genus_two, 0, -2), 4.0, 0.0);

        long long violations = 0;
        const auto corpus = bundled_signatures();
        for (const auto& [sig, n0] : corpus)
            for (long long k = 1; k <= 50; ++k) {
                if (order_Z(sig, n0, HalfInteger::from_integer(-k)) < 0) ++violations;
                if (k >= 2) {
                    const int o = order_R(sig, n0, -k);
                    if (o % 2 != 0 || o < -4) ++violations;
                }
            }
        report.add("order corpus size", static_cast<long long>(corpus.size()));
        report.check("s_k >= 0 and o_k even >= -4 for k <= 50 (violations)", static_cast<double>(violations), 0.0, 0.0);
    }

    void spectrum_section(Report& report, const LengthSpectrum& spectrum) {
        // Every word of length <= 11 with both letters; trace 12 needs at most 11 letters.
        std::map<long long, std::set<std::string>> by_trace;
        for (int length = 2; length <= 11; ++length)
            for (unsigned bits = 0; bits < (1u << length); ++bits) {
                std::string word(static_cast<std::size_t>(length), 'L');
                for (int i = 0; i < length; ++i)
                    if (bits >> i & 1u) word[static_cast<std::size_t>(i)] = 'R';
                if (word.find('L') == std::string::npos || word.find('R') == std::string::npos) continue;
                try {
                    const GeodesicClass c = class_from_word(word);
                    if (c.trace <= 12) by_trace[c.trace].insert(c.word);
                } catch (const NonPrimitiveError&) {
                }
            }
        long long mismatches = 0;
        for (long long t = 3; t <= 12; ++t) {
            const auto found = by_trace.count(t) ? static_cast<long long>(by_trace[t].size()) : 0LL;
            if (found != spectrum.multiplicity(t)) ++mismatches;
        }
        report.check("mult(t), 3 <= t <= 12, against exhaustive words (mismatches)", static_cast<double>(mismatches), 0.0, 0.0);
        report.check("minimum length = 2 arccosh(3/2)", spectrum.shells().front().length, 2.0 * std::acosh(1.5), 1e-12);

        long long necklace_mismatches = 0;
        for (int length = 1; length <= 12; ++length) {
            std::set<std::string> aperiodic;
            for (unsigned bits = 0; bits < (1u << length); ++bits) {
                std::string word(static_cast<std::size_t>(length), 'L');
                for (int i = 0; i < length; ++i)
                    if (bits >> i & 1u) word[static_cast<std::size_t>(i)] = 'R';
                bool periodic = false;
                for (int d = 1; d < length && !periodic; ++d)
                    if (length % d == 0 && word.substr(static_cast<std::size_t>(d)) + word.substr(0, static_cast<std::size_t>(d)) == word)
                        periodic = true;
                if (!periodic) aperiodic.insert(canonical_rotation(word));
            }
            if (length >= 2 && aperiodic.size() != necklace_count(length)) ++necklace_mismatches;
        }
        report.check("necklace counts for length <= 12 (mismatches)", static_cast<double>(necklace_mismatches), 0.0, 0.0);
    }

    void euler_section(Report& report, const LengthSpectrum& spectrum, const EvalOptions& opts) {
        EvalOptions at40 = opts;
        at40.euler_max_trace = 40;
        EvalOptions at100 = opts;
        at100.euler_max_trace = 100;
        for (const double re : {1.5, 2.0, 3.0})
            for (const double im : {0.0, 1.0, 5.0}) {
                const Complex s(re, im);
                const std::string where = " at s=" + point_text(s);
                const TruncatedValue quotient = ruelle_R(spectrum, s, at40);
                const TruncatedValue direct = ruelle_R_direct(spectrum, s, at40);
                report.check_residual("R(s) quotient vs direct product" + where, quotient.value, direct.value,
                                      std::abs(quotient.value - direct.value),
                                      std::min(1e-8, quotient.abs_error_estimate + direct.abs_error_estimate));
                const TruncatedValue coarse = selberg_Z(spectrum, s, at40);
                const TruncatedValue fine = selberg_Z(spectrum, s, at100);
                const bool shrinks = fine.abs_error_estimate < coarse.abs_error_estimate;
                report.check_residual("Z(s) T=40 -> 100 moves less than the T=40 estimate" + where, coarse.value, fine.value,
                                      std::abs(coarse.value - fine.value), coarse.abs_error_estimate);
                report.check_residual("Z(s) error estimate shrinks T=40 -> 100" + where, coarse.abs_error_estimate,
                                      fine.abs_error_estimate, shrinks ? 0.0 : 1.0, 0.5);
            }
        const TruncatedValue z2 = selberg_Z(spectrum, 2.0, at40);
        report.add("Z(2) at max_trace 40", z2.value);
        report.add("Z(2) error estimate", z2.abs_error_estimate);
    }

    void constants_section(Report& report) {
        for (const auto& [sig, n0] : std::vector<std::pair<Signature, int>>{
                 {Signature::make(0, 1, {2, 3}), 1}, {Signature::make(0, 0, {2, 3, 7}), 0},
                 {Signature::make(1, 1, {2}), 0}, {Signature::make(2, 0), 0}}) {
            const ScatteringModel model = n0 == 1 ? ScatteringModel::modular() : ScatteringModel::trivial(sig.cusps());
            const double first = c1(sig, model);
            double product = 1.0;
            for (const int m : sig.orders()) product *= m;
            const int a = model.a_constant();
            const double sign = (a / 2 + 1) % 2 == 0 ? 1.0 : -1.0;
            const double expected =
                first * sign * std::pow(2.0 * kPi, 2 - 2 * sig.genus() - sig.cusps()) * model.phi_tilde_0() / product;
            report.check("c0 from c1 [" + sig.to_string() + ", " + model.label() + "]", c0(sig, model), expected, 1e-10, true);
        }
        for (const ScatteringModel& model : {ScatteringModel::modular(), ScatteringModel::trivial(0), ScatteringModel::trivial(1),
                                             ScatteringModel::trivial(2)})
            report.check("A even [" + model.label() + ", " + std::to_string(model.cusps()) + " cusps]",
                         static_cast<double>(model.a_constant() % 2), 0.0, 0.0);
    }

}  // namespace

Report verify_report(double tolerance, const EvalOptions& opts) {
    Report report;
    report.command = "verify";
    report.inputs["tolerance"] = tolerance;
    report.inputs["rel_tol"] = opts.rel_tol;
    report.inputs["gamma2_cutoff"] = opts.gamma2_cutoff;
    report.inputs["sample_points_version"] = kSamplePointsVersion;
    report.inputs["sample_base_point"] = {{"re", kSampleBasePoint.real()}, {"im", kSampleBasePoint.imag()}};
    nlohmann::json points = nlohmann::json::array();
    for (const Complex s : kCutSafePoints) points.push_back({{"re", s.real()}, {"im", s.imag()}});
    report.inputs["sample_points"] = std::move(points);

    special_functions_section(report, opts);
    identities_section(report, tolerance, opts);
    modular_section(report);
    orders_section(report);
    const LengthSpectrum spectrum = enumerate(100);
    spectrum_section(report, spectrum);
    euler_section(report, spectrum, opts);
    constants_section(report);
    return report;
}

}  // namespace hypzeta::cli
