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

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include <gtest/gtest.h>
#include <json.hpp>

#include "cli.hpp"
#include "hypzeta/errors.hpp"

using namespace hypzeta;
using namespace hypzeta::cli;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome invoke(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

const Value* find(const Report& report, const std::string& name) {
    for (const auto& r : report.results)
        if (r.name == name) return &r.value;
    return nullptr;
}

std::filesystem::path scratch_path(const std::string& name) {
    return std::filesystem::temp_directory_path() / ("hypzeta_cli_test_" + std::to_string(::getpid()) + "_" + name);
}

}  // namespace

TEST(ParseComplex, PairsAndReals) {
    EXPECT_EQ(parse_complex("0.3,-2"), Complex(0.3, -2.0));
    EXPECT_EQ(parse_complex("2"), Complex(2.0, 0.0));
    EXPECT_EQ(parse_complex(" 1.5 , +1 "), Complex(1.5, 1.0));
    EXPECT_THROW(parse_complex("1,"), InvalidArgumentError);
    EXPECT_THROW(parse_complex("x"), InvalidArgumentError);
    EXPECT_THROW(parse_complex("1,2,3"), InvalidArgumentError);
}

TEST(ResolveModel, AutoAndMismatch) {
    EXPECT_EQ(resolve_model("auto", Signature::make(0, 1, {2, 3})).label(), "modular");
    EXPECT_EQ(resolve_model("auto", Signature::make(1, 1, {2})).label(), "trivial");
    EXPECT_EQ(resolve_model("trivial", Signature::make(0, 3)).cusps(), 3);
    EXPECT_THROW(resolve_model("modular", Signature::make(2, 0)), MismatchError);
    EXPECT_THROW(resolve_model("other", Signature::make(2, 0)), InvalidArgumentError);
}

TEST(Config, KeysCommentsAndErrors) {
    const auto path = scratch_path("config.txt");
    {
        std::ofstream f(path);
        f << "# knobs\nrel_tol = 1e-8\n\ngamma2_cutoff=2000  # fewer factors\neuler_max_trace = 30\n";
    }
    const EvalOptions opts = read_config(path);
    EXPECT_EQ(opts.rel_tol, 1e-8);
    EXPECT_EQ(opts.gamma2_cutoff, 2000);
    EXPECT_EQ(opts.euler_max_trace, 30);
    {
        std::ofstream f(path);
        f << "bogus = 1\n";
    }
    EXPECT_THROW(read_config(path), InvalidArgumentError);
    {
        std::ofstream f(path);
        f << "gamma2_cutoff = 2.5\n";
    }
    EXPECT_THROW(read_config(path), InvalidArgumentError);
    std::filesystem::remove(path);
    EXPECT_THROW(read_config(path), InvalidArgumentError);
}

TEST(Config, FlagsOverrideFile) {
    const auto path = scratch_path("override.txt");
    {
        std::ofstream f(path);
        f << "euler_max_trace = 12\n";
    }
    const Outcome from_file = invoke({"zeta", "--s", "2", "--config", path.string(), "--json"});
    ASSERT_EQ(from_file.code, kOk) << from_file.err;
    EXPECT_EQ(nlohmann::json::parse(from_file.out)["inputs"]["euler_max_trace"], 12);
    const Outcome overridden = invoke({"zeta", "--s", "2", "--config", path.string(), "--max-trace", "15", "--json"});
    ASSERT_EQ(overridden.code, kOk) << overridden.err;
    EXPECT_EQ(nlohmann::json::parse(overridden.out)["inputs"]["euler_max_trace"], 15);
    std::filesystem::remove(path);
}

TEST(ExitCodes, FollowTheTable) {
    EXPECT_EQ(invoke({}).code, kUsage);
    EXPECT_EQ(invoke({"no-such-command"}).code, kUsage);
    EXPECT_EQ(invoke({"kappa", "--signature", "0,1,2:3"}).code, kUsage);             // missing --s
    EXPECT_EQ(invoke({"surface", "info", "--signature", "0,0,2:3"}).code, kUsage);   // non-positive area
    EXPECT_EQ(invoke({"kappa", "--signature", "2,0,", "--group", "modular", "--s", "0.3"}).code, kUsage);
    EXPECT_EQ(invoke({"kappa", "--signature", "0,1,2:3", "--s", "0"}).code, kNumerical);
    EXPECT_EQ(invoke({"zeta", "--s", "0.5"}).code, kNumerical);
    EXPECT_EQ(invoke({"--help"}).code, kOk);
    const Outcome ok = invoke({"surface", "info", "--signature", "2,0,"});
    EXPECT_EQ(ok.code, kOk);
    EXPECT_TRUE(ok.err.empty());
}

TEST(Json, ErrorsStillProduceAValidReport) {
    for (const auto& args : std::vector<std::vector<std::string>>{
             {"--json", "kappa", "--signature", "0,1,2:3", "--s", "1"},
             {"--json", "surface", "info", "--signature", "bad"},
             {"--json", "nonsense"}}) {
        const Outcome o = invoke(args);
        EXPECT_NE(o.code, kOk);
        EXPECT_FALSE(o.err.empty());
        const auto j = nlohmann::json::parse(o.out);
        ASSERT_TRUE(j.contains("error"));
        EXPECT_FALSE(j["error"]["message"].get<std::string>().empty());
    }
    const auto j = nlohmann::json::parse(invoke({"--json", "kappa", "--signature", "0,1,2:3", "--s", "1"}).out);
    EXPECT_EQ(j["error"]["category"], "numerical");
}

TEST(Json, EverySubcommandHonorsTheFlag) {
    for (const auto& args : std::vector<std::vector<std::string>>{
             {"surface", "info", "--signature", "0,1,2:3"},
             {"orders", "--signature", "0,1,2:3"},
             {"kappa", "--signature", "0,1,2:3", "--s", "0.3,0.2"},
             {"det-laplacian", "--signature", "0,1,2:3", "--s", "2"},
             {"ruelle-leading", "--signature", "1,1,2"},
             {"constants", "--signature", "0,0,2:3:7"},
             {"spectrum", "--max-trace", "10"},
             {"zeta", "--s", "2,1", "--max-trace", "20"},
             {"ruelle", "--s", "2", "--max-trace", "20"}}) {
        auto with_flag = args;
        with_flag.push_back("--json");
        const Outcome o = invoke(with_flag);
        ASSERT_EQ(o.code, kOk) << args.front() << ": " << o.err;
        const auto j = nlohmann::json::parse(o.out);
        EXPECT_FALSE(j["results"].empty()) << args.front();
        EXPECT_FALSE(j.contains("error"));
    }
}

TEST(Json, ReportRoundTrips) {
    Report report;
    report.command = "demo";
    report.inputs["s"] = {{"re", 0.25}, {"im", -0.5}};
    report.add("integer", 7LL);
    report.add("real", 0.1 + 0.2);
    report.add("complex", Complex(1.0 / 3.0, -2e-300));
    report.add("text", std::string("abc"));
    report.check("near", 1.0, 1.0 + 1e-12, 1e-10);
    report.check("far", 1.0, 2.0, 1e-10, true);
    report.check_residual("residual", Complex(1, 2), Complex(3, 4), 0.5, 0.1);
    report.notes.push_back("a note");
    report.error = ReportError{"numerical", "boom"};
    report.timestamp = "2000-01-01T00:00:00Z";
    const Report back = nlohmann::json::parse(nlohmann::json(report).dump()).get<Report>();
    EXPECT_EQ(back, report);
    EXPECT_FALSE(report.all_pass());
    EXPECT_TRUE(report.checks[0].pass);
    EXPECT_FALSE(report.checks[1].pass);
    EXPECT_EQ(report.checks[1].tolerance, 1e-10);
}

TEST(Examples, SpectrumAtTraceThreeIsOneRow) {
    const Outcome o = invoke({"spectrum", "--max-trace", "3"});
    ASSERT_EQ(o.code, kOk);
    EXPECT_EQ(o.out, "trace,count,length,norm\n3,1,1.9248473002384139,6.8541019662496847\n");
}

TEST(Examples, ModularOrderTable) {
    const Outcome o = invoke({"--json", "orders", "--signature", "0,1,2:3", "--group", "modular", "--from", "-6", "--to", "1"});
    ASSERT_EQ(o.code, kOk) << o.err;
    const Report r = nlohmann::json::parse(o.out).get<Report>();
    EXPECT_EQ(std::get<long long>(*find(r, "R order at s=0")), -2);
    EXPECT_EQ(std::get<long long>(*find(r, "R order at s=-6")), -2);
    EXPECT_EQ(std::get<long long>(*find(r, "Z order at s=1")), 1);
    EXPECT_EQ(std::get<long long>(*find(r, "Z order at s=-1")), 1);
    EXPECT_EQ(std::get<long long>(*find(r, "Z order at s=-1/2")), -1);
    EXPECT_EQ(find(r, "Z order at s=1/2"), nullptr);
}

TEST(Examples, RuelleLeadingForTheModularGroup) {
    const Outcome o = invoke({"ruelle-leading", "--signature", "0,1,2:3", "--group", "modular", "--json"});
    ASSERT_EQ(o.code, kOk) << o.err;
    const Report r = nlohmann::json::parse(o.out).get<Report>();
    EXPECT_EQ(std::get<long long>(*find(r, "order")), -2);
    EXPECT_NEAR(std::get<double>(*find(r, "abs_coeff")), 9.0 / (kPi * kPi), 1e-10);
    EXPECT_NEAR(std::get<double>(*find(r, "coeff")), -9.0 / (kPi * kPi), 1e-10);
    EXPECT_NEAR(std::get<double>(*find(r, "coeff_with_quoted_phi_tilde_0")), 9.0 / (kPi * kPi), 1e-10);
    ASSERT_EQ(r.notes.size(), 1u);
    EXPECT_NE(r.notes.front().find("sign"), std::string::npos);
    EXPECT_TRUE(r.all_pass());
}

TEST(Spectrum, CacheIsWrittenThenReused) {
    const auto path = scratch_path("spectrum.csv");
    const Outcome first = invoke({"--json", "spectrum", "--max-trace", "30", "--cache", path.string()});
    ASSERT_EQ(first.code, kOk) << first.err;
    EXPECT_TRUE(std::filesystem::exists(path));
    const Outcome second = invoke({"--json", "spectrum", "--max-trace", "30", "--cache", path.string()});
    const Report a = nlohmann::json::parse(first.out).get<Report>();
    const Report b = nlohmann::json::parse(second.out).get<Report>();
    EXPECT_EQ(a.results, b.results);
    EXPECT_NE(a.notes.front().find("written"), std::string::npos);
    EXPECT_NE(b.notes.front().find("read from cache"), std::string::npos);
    std::filesystem::remove(path);
    std::filesystem::remove(path.string() + ".json");
}

TEST(Ruelle, TwoPathCheckPasses) {
    const Outcome o = invoke({"--json", "ruelle", "--s", "2,1", "--max-trace", "40"});
    ASSERT_EQ(o.code, kOk) << o.err;
    EXPECT_TRUE(nlohmann::json::parse(o.out).get<Report>().all_pass());
}

TEST(Verify, PassesAndIsDeterministic) {
    const Outcome first = invoke({"--json", "verify"});
    const Outcome second = invoke({"--json", "verify"});
    ASSERT_EQ(first.code, kOk) << first.out;
    auto a = nlohmann::json::parse(first.out);
    auto b = nlohmann::json::parse(second.out);
    a.erase("timestamp");
    b.erase("timestamp");
    EXPECT_EQ(a.dump(), b.dump());
    EXPECT_EQ(a["inputs"]["sample_points"].size(), 20u);
    bool sign_note = false;
    for (const auto& n : a["notes"]) sign_note |= n.get<std::string>().find("phi_tilde(0) sign") != std::string::npos;
    EXPECT_TRUE(sign_note);
}

TEST(Verify, ImpossibleToleranceFailsWithExitThree) {
    const Outcome o = invoke({"verify", "--tolerance", "1e-30"});
    EXPECT_EQ(o.code, kVerifyFailed);
    EXPECT_NE(o.out.find("FAIL"), std::string::npos);
    EXPECT_EQ(invoke({"verify", "--tolerance", "-1"}).code, kUsage);
}
