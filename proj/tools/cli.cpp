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

#include "cli.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "hypzeta/errors.hpp"
#include "hypzeta/euler_product.hpp"
#include "hypzeta/length_spectrum.hpp"
#include "hypzeta/zeta_factors.hpp"

namespace hypzeta::cli {

namespace {

    double parse_double(std::string_view text, std::string_view what) {
        while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
        while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
        if (!text.empty() && text.front() == '+') text.remove_prefix(1);
        double value = 0.0;
        const auto [end, error] = std::from_chars(text.data(), text.data() + text.size(), value);
        if (text.empty() || error != std::errc() || end != text.data() + text.size())
            throw InvalidArgumentError("cannot read " + std::string(what) + " from '" + std::string(text) + "'");
        return value;
    }

    nlohmann::json complex_json(Complex z) { return {{"re", z.real()}, {"im", z.imag()}}; }

    void note_stand_in(Report& report, const ScatteringModel& model) {
        if (model.label() == "trivial" && model.cusps() > 0)
            report.notes.push_back("trivial scattering model on a surface with cusps is a stand-in: phi = 1, n0 = 0, A = 0");
    }

    void echo_surface(Report& report, const Signature& sig, const ScatteringModel& model) {
        report.inputs["signature"] = sig.to_string();
        report.inputs["group"] = model.label();
    }

    void echo_options(Report& report, const EvalOptions& opts) {
        report.inputs["rel_tol"] = opts.rel_tol;
        report.inputs["gamma2_cutoff"] = opts.gamma2_cutoff;
        report.inputs["euler_max_trace"] = opts.euler_max_trace;
    }

    LengthSpectrum obtain_spectrum(long long max_trace, const std::string& cache, Report& report) {
        if (!cache.empty()) {
            if (auto loaded = load_spectrum_cache(cache, "modular", max_trace)) {
                report.notes.push_back("spectrum read from cache " + cache);
                return *std::move(loaded);
            }
        }
        LengthSpectrum spectrum = enumerate(max_trace);
        if (!cache.empty()) {
            save_spectrum_cache(spectrum, cache);
            report.notes.push_back("spectrum enumerated and written to cache " + cache);
        }
        return spectrum;
    }

    void add_truncated(Report& report, const std::string& prefix, const TruncatedValue& v) {
        report.add(prefix, v.value);
        report.add(prefix + " abs_error_estimate", v.abs_error_estimate);
        report.add(prefix + " k_cutoff", static_cast<long long>(v.k_cutoff_used));
        if (v.low_accuracy)
            report.notes.push_back(prefix + ": error estimate exceeds 1% of the value; the product converges slowly this close to Re s = 1");
    }

    // --- subcommands -------------------------------------------------------------------------

    Report surface_info(const Signature& sig, const ScatteringModel& model) {
        Report r;
        r.command = "surface info";
        echo_surface(r, sig, model);
        const SurfaceConstants k = constants(sig, model);
        r.add("area", k.area);
        r.add("area_over_2pi", sig.area_over_2pi());
        r.add("euler_defect", static_cast<long long>(sig.euler_defect()));
        r.add("elliptic_points", static_cast<long long>(sig.elliptic_count()));
        r.add("A", static_cast<long long>(k.a));
        r.add("B", k.b);
        r.add("C", k.c);
        r.add("D", k.d);
        r.add("log_E", k.log_e);
        note_stand_in(r, model);
        return r;
    }

    Report orders(const Signature& sig, const ScatteringModel& model, long long from, long long to) {
        if (from > to) throw InvalidArgumentError("orders: --from must not exceed --to");
        Report r;
        r.command = "orders";
        echo_surface(r, sig, model);
        r.inputs["from"] = from;
        r.inputs["to"] = to;
        for (long long twice = 2 * from; twice <= 2 * to; ++twice) {
            const HalfInteger point = HalfInteger::from_twice(twice);
            if (!point.is_integer() && twice > 0) continue;
            r.add("Z order at s=" + point.to_string(), static_cast<long long>(order_Z(sig, model.n0(), point)));
        }
        for (long long s = from; s <= to; ++s)
            r.add("R order at s=" + std::to_string(s), static_cast<long long>(order_R(sig, model.n0(), s)));
        note_stand_in(r, model);
        return r;
    }

    Report kappa_command(const Signature& sig, const ScatteringModel& model, Complex s, const EvalOptions& opts) {
        Report r;
        r.command = "kappa";
        echo_surface(r, sig, model);
        r.inputs["s"] = complex_json(s);
        const FactorValue k = kappa(sig, model, s, opts);
        r.add("kappa", k.value());
        r.add("log_kappa_without_sign", k.log_value);
        r.add("sign", static_cast<long long>(k.sign));
        const FactorValue mirror = kappa(sig, model, 1.0 - s, opts);
        r.check("kappa(s) kappa(1-s) = 1", k.value() * mirror.value(), 1.0, opts.rel_tol);
        note_stand_in(r, model);
        return r;
    }

    Report det_command(const Signature& sig, const ScatteringModel& model, Complex s, std::optional<Complex> z_value,
                       const EvalOptions& opts) {
        Report r;
        r.command = "det-laplacian";
        echo_surface(r, sig, model);
        echo_options(r, opts);
        r.inputs["s"] = complex_json(s);
        Complex z = 1.0;
        if (z_value) {
            z = *z_value;
            r.inputs["z_value"] = complex_json(z);
        } else if (model.label() == "modular" && s.real() > 1.0) {
            const TruncatedValue product = selberg_Z(enumerate(opts.euler_max_trace), s, opts);
            z = product.value;
            add_truncated(r, "Z(s)", product);
        } else {
            r.notes.push_back("no Z(s) supplied; using the probe value Z(s) = 1");
        }
        const DetLaplacian det = det_laplacian(sig, model, s, z, opts);
        r.add("det", det.value);
        r.add("log Z_inf", det.log_z_infty);
        r.add("log Z_ell", det.log_z_ell);
        r.add("log cusp gamma", det.log_cusp_gamma);
        r.add("exponent", det.exponent);
        r.add("(2s-1)^(A/2)", det.a_power);
        if (det.z_untrusted)
            r.notes.push_back("Re s <= 1: the Euler product does not converge here, so Z(s) is untrusted");
        note_stand_in(r, model);
        return r;
    }

    Report ruelle_leading_command(const Signature& sig, const ScatteringModel& model) {
        Report r;
        r.command = "ruelle-leading";
        echo_surface(r, sig, model);
        const RuelleLeading lead = ruelle_leading_at_zero(sig, model);
        r.add("order", static_cast<long long>(lead.order));
        r.add("coeff", lead.coeff);
        r.add("abs_coeff", std::abs(lead.coeff));
        r.add("phi_tilde_0", model.phi_tilde_0());
        const double from_fe = ruelle_leading_magnitude_from_fe(sig, model);
        r.check("|coeff| from R(s)R(-s) near 0", from_fe, std::abs(lead.coeff), 1e-6, true);
        if (const auto& quoted = model.quoted_phi_tilde_0()) {
            const double quoted_coeff = ruelle_leading_coefficient(sig, model.a_constant(), *quoted);
            r.add("quoted_phi_tilde_0", *quoted);
            r.add("coeff_with_quoted_phi_tilde_0", quoted_coeff);
            r.notes.push_back("phi_tilde(0) sign: the Taylor expansion of phi at 0 gives " + std::to_string(model.phi_tilde_0())
                              + ", the quoted value is " + std::to_string(*quoted) + "; the leading coefficient is "
                              + std::to_string(lead.coeff) + " with the computed sign and "
                              + std::to_string(quoted_coeff) + " with the quoted one. Magnitudes agree.");
        }
        note_stand_in(r, model);
        return r;
    }

    Report constants_command(const Signature& sig, const ScatteringModel& model) {
        Report r;
        r.command = "constants";
        echo_surface(r, sig, model);
        const SurfaceConstants k = constants(sig, model);
        const double first = c1(sig, model);
        const double zeroth = c0(sig, model);
        r.add("area", k.area);
        r.add("A", static_cast<long long>(k.a));
        r.add("B", k.b);
        r.add("C", k.c);
        r.add("D", k.d);
        r.add("log_E", k.log_e);
        r.add("E", std::exp(k.log_e));
        r.add("c1", first);
        r.add("c0", zeroth);
        double product = 1.0;
        for (const int m : sig.orders()) product *= m;
        const double sign = (k.a / 2 + 1) % 2 == 0 ? 1.0 : -1.0;
        const double related = first * sign * std::pow(2.0 * kPi, 2 - 2 * sig.genus() - sig.cusps()) * model.phi_tilde_0() / product;
        r.check("c0 = c1 (-1)^(A/2+1) (2pi)^(2-2g-n) phi_tilde(0) / prod m", zeroth, related, 1e-10, true);
        note_stand_in(r, model);
        return r;
    }

    Report spectrum_command(long long max_trace, const std::string& cache) {
        Report r;
        r.command = "spectrum";
        r.inputs["max_trace"] = max_trace;
        if (!cache.empty()) r.inputs["cache"] = cache;
        const LengthSpectrum spectrum = obtain_spectrum(max_trace, cache, r);
        r.add("classes", spectrum.class_count());
        r.add("min_length", spectrum.shells().front().length);
        for (const auto& shell : spectrum.shells()) r.add("mult(" + std::to_string(shell.trace) + ")", shell.count);
        return r;
    }

    Report zeta_command(Complex s, const EvalOptions& opts, const std::string& cache) {
        Report r;
        r.command = "zeta";
        echo_options(r, opts);
        r.inputs["s"] = complex_json(s);
        const LengthSpectrum spectrum = obtain_spectrum(opts.euler_max_trace, cache, r);
        add_truncated(r, "Z(s)", selberg_Z(spectrum, s, opts));
        r.notes.push_back("abs_error_estimate extrapolates the trace tail from the last shells; it is an estimate, not a bound");
        return r;
    }

    Report ruelle_command(Complex s, const EvalOptions& opts, const std::string& cache) {
        Report r;
        r.command = "ruelle";
        echo_options(r, opts);
        r.inputs["s"] = complex_json(s);
        const LengthSpectrum spectrum = obtain_spectrum(opts.euler_max_trace, cache, r);
        const TruncatedValue quotient = ruelle_R(spectrum, s, opts);
        const TruncatedValue direct = ruelle_R_direct(spectrum, s, opts);
        add_truncated(r, "R(s) = Z(s)/Z(s+1)", quotient);
        add_truncated(r, "R(s) direct product", direct);
        r.check_residual("two-path agreement", quotient.value, direct.value, std::abs(quotient.value - direct.value),
                         quotient.abs_error_estimate + direct.abs_error_estimate);
        r.notes.push_back("abs_error_estimate extrapolates the trace tail from the last shells; it is an estimate, not a bound");
        return r;
    }

    int exit_code_for(const Error& e) { return e.category() == ErrorCategory::usage ? kUsage : kNumerical; }

    void emit(const Report& report, bool json, std::ostream& out) {
        if (json) out << nlohmann::json(report).dump(2) << '\n';
        else print_text(report, out);
    }

    void emit_error(const std::string& command, const std::string& category, const std::string& message, bool json,
                    std::ostream& out, std::ostream& err) {
        err << "hypzeta: " << message << '\n';
        if (!json) return;
        Report report;
        report.command = command;
        report.error = ReportError{category, message};
        report.timestamp = utc_timestamp();
        emit(report, true, out);
    }

}  // namespace

Complex parse_complex(std::string_view text) {
    const auto comma = text.find(',');
    if (comma == std::string_view::npos) return {parse_double(text, "a complex number"), 0.0};
    return {parse_double(text.substr(0, comma), "the real part"), parse_double(text.substr(comma + 1), "the imaginary part")};
}

EvalOptions read_config(const std::filesystem::path& path, EvalOptions base) {
    std::ifstream in(path);
    if (!in) throw InvalidArgumentError("cannot read config file '" + path.string() + "'");
    std::string line;
    int number = 0;
    while (std::getline(in, line)) {
        ++number;
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw InvalidArgumentError(path.string() + ":" + std::to_string(number) + ": expected 'key = value'");
        std::string key = line.substr(0, eq);
        key.erase(0, key.find_first_not_of(" \t"));
        key.erase(key.find_last_not_of(" \t") + 1);
        std::string value = line.substr(eq + 1);
        value.erase(value.find_last_not_of(" \t\r") + 1);
        const double number_value = parse_double(value, key);
        if (key == "rel_tol") {
            base.rel_tol = number_value;
        } else if (key == "gamma2_cutoff" || key == "euler_max_trace") {
            if (number_value != std::floor(number_value)) throw InvalidArgumentError(key + " must be an integer");
            (key == "gamma2_cutoff" ? base.gamma2_cutoff : base.euler_max_trace) = static_cast<int>(number_value);
        } else {
            throw InvalidArgumentError(path.string() + ":" + std::to_string(number) + ": unknown key '" + key + "'");
        }
    }
    return base;
}

ScatteringModel resolve_model(std::string_view group, const Signature& sig) {
    if (group == "auto") group = sig == Signature::make(0, 1, {2, 3}) ? "modular" : "trivial";
    if (group == "trivial") return ScatteringModel::trivial(sig.cusps());
    if (group == "modular") {
        if (sig.cusps() != 1)
            throw MismatchError("the modular scattering model has one cusp but signature " + sig.to_string() + " has "
                                + std::to_string(sig.cusps()));
        return ScatteringModel::modular();
    }
    throw InvalidArgumentError("unknown group '" + std::string(group) + "'");
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Selberg and Ruelle zeta functions of cofinite hyperbolic surfaces", "hypzeta"};
    app.require_subcommand(1);
    app.fallthrough();

    bool json = false;
    std::string config;
    std::optional<double> rel_tol;
    std::optional<int> gamma2_cutoff;
    std::optional<int> euler_max_trace;
    app.add_flag("--json", json, "Print the report as JSON");
    app.add_option("--config", config, "key = value file (rel_tol, gamma2_cutoff, euler_max_trace)");
    app.add_option("--rel-tol", rel_tol, "Identity comparison tolerance");
    app.add_option("--gamma2-cutoff", gamma2_cutoff, "Barnes double gamma product cutoff");
    app.add_option("--euler-max-trace", euler_max_trace, "Largest trace used in Euler products");

    std::string signature_text;
    std::string group = "auto";
    std::string s_text;
    std::string z_text;
    long long from = -10;
    long long to = 2;
    long long max_trace = 0;
    std::string cache;
    double tolerance = 1e-9;

    auto add_surface = [&](CLI::App* sub) {
        sub->add_option("--signature", signature_text, "g,n,m1:m2:...")->required();
        sub->add_option("--group", group, "Scattering model")->check(CLI::IsMember({"modular", "trivial", "auto"}));
    };

    CLI::App* surface = app.add_subcommand("surface", "Surface data");
    surface->require_subcommand(1);
    CLI::App* info = surface->add_subcommand("info", "Area and determinant constants");
    add_surface(info);

    CLI::App* orders_cmd = app.add_subcommand("orders", "Order tables of Z and R");
    add_surface(orders_cmd);
    orders_cmd->add_option("--from", from, "First point");
    orders_cmd->add_option("--to", to, "Last point");

    CLI::App* kappa_cmd = app.add_subcommand("kappa", "Functional-equation factor kappa(s)");
    add_surface(kappa_cmd);
    kappa_cmd->add_option("--s", s_text, "RE,IM")->required();

    CLI::App* det_cmd = app.add_subcommand("det-laplacian", "Right side of the determinant formula");
    add_surface(det_cmd);
    det_cmd->add_option("--s", s_text, "RE,IM")->required();
    det_cmd->add_option("--z-value", z_text, "Z(s) as RE,IM");

    CLI::App* leading_cmd = app.add_subcommand("ruelle-leading", "Leading term of R(s) at s = 0");
    add_surface(leading_cmd);

    CLI::App* constants_cmd = app.add_subcommand("constants", "c0, c1, E, A, B, C, D");
    add_surface(constants_cmd);

    CLI::App* spectrum_cmd = app.add_subcommand("spectrum", "Length spectrum of the modular group");
    spectrum_cmd->add_option("--max-trace", max_trace, "Largest trace")->required();
    spectrum_cmd->add_option("--cache", cache, "CSV cache path");

    CLI::App* zeta_cmd = app.add_subcommand("zeta", "Selberg zeta function from the Euler product");
    zeta_cmd->add_option("--s", s_text, "RE,IM")->required();
    zeta_cmd->add_option("--max-trace", euler_max_trace, "Largest trace");
    zeta_cmd->add_option("--cache", cache, "CSV cache path");

    CLI::App* ruelle_cmd = app.add_subcommand("ruelle", "Ruelle zeta function along two paths");
    ruelle_cmd->add_option("--s", s_text, "RE,IM")->required();
    ruelle_cmd->add_option("--max-trace", euler_max_trace, "Largest trace");
    ruelle_cmd->add_option("--cache", cache, "CSV cache path");

    CLI::App* verify_cmd = app.add_subcommand("verify", "Invariant suite and modular-group reproduction");
    verify_cmd->add_option("--tolerance", tolerance, "Tolerance for the branch-sensitive identities");

    std::vector<const char*> argv{"hypzeta"};
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            if (auto* sub = app.get_subcommands().empty() ? nullptr : app.get_subcommands().front()) out << sub->help();
            return kOk;
        }
        emit_error(args.empty() ? "" : args.front(), "usage", e.what(), json, out, err);
        return kUsage;
    }

    const std::string command = app.get_subcommands().front()->get_name();
    try {
        EvalOptions opts;
        if (!config.empty()) opts = read_config(config, opts);
        if (rel_tol) opts.rel_tol = *rel_tol;
        if (gamma2_cutoff) opts.gamma2_cutoff = *gamma2_cutoff;
        if (euler_max_trace) opts.euler_max_trace = *euler_max_trace;
        opts.validate();

        Report report;
        if (info->parsed() || orders_cmd->parsed() || kappa_cmd->parsed() || det_cmd->parsed() || leading_cmd->parsed()
            || constants_cmd->parsed()) {
            const Signature sig = Signature::parse(signature_text);
            const ScatteringModel model = resolve_model(group, sig);
            if (info->parsed()) report = surface_info(sig, model);
            else if (orders_cmd->parsed()) report = orders(sig, model, from, to);
            else if (kappa_cmd->parsed()) report = kappa_command(sig, model, parse_complex(s_text), opts);
            else if (det_cmd->parsed())
                report = det_command(sig, model, parse_complex(s_text),
                                     z_text.empty() ? std::nullopt : std::optional<Complex>(parse_complex(z_text)), opts);
            else if (leading_cmd->parsed()) report = ruelle_leading_command(sig, model);
            else report = constants_command(sig, model);
        } else if (spectrum_cmd->parsed()) {
            if (max_trace < 3) throw InvalidArgumentError("--max-trace must be >= 3");
            if (!json) {
                Report scratch;
                const LengthSpectrum spectrum = obtain_spectrum(max_trace, cache, scratch);
                write_spectrum_csv(spectrum, out);
                for (const auto& n : scratch.notes) err << "note: " << n << '\n';
                return kOk;
            }
            report = spectrum_command(max_trace, cache);
        } else if (zeta_cmd->parsed()) {
            report = zeta_command(parse_complex(s_text), opts, cache);
        } else if (ruelle_cmd->parsed()) {
            report = ruelle_command(parse_complex(s_text), opts, cache);
        } else {
            if (!(tolerance > 0.0)) throw InvalidArgumentError("--tolerance must be positive");
            report = verify_report(tolerance, opts);
        }
        report.timestamp = utc_timestamp();
        emit(report, json, out);
        if (verify_cmd->parsed() && !report.all_pass()) return kVerifyFailed;
        return kOk;
    } catch (const Error& e) {
        emit_error(command, e.category() == ErrorCategory::usage ? "usage" : "numerical", e.what(), json, out, err);
        return exit_code_for(e);
    } catch (const std::exception& e) {
        emit_error(command, "numerical", e.what(), json, out, err);
        return kNumerical;
    }
}

}  // namespace hypzeta::cli
