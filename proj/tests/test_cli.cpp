/*
 * Copyright 2026 The Anick Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "anick/cli.hpp"

using namespace anick;

namespace {

const std::string kData = ANICK_TEST_DATA;

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run_cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string example() { return kData + "/example.json"; }
std::string bad() { return kData + "/bad.json"; }

std::vector<std::string> lines(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream is(text);
    for (std::string l; std::getline(is, l);) out.push_back(l);
    return out;
}

} // namespace

TEST(CliTest, ResolvePrintsFiveD3Values) {
    auto r = run_cli({"resolve", example(), "--degree", "3"});
    ASSERT_EQ(r.code, 0) << r.err;
    auto ls = lines(r.out);
    ASSERT_EQ(ls.size(), 6u);
    EXPECT_EQ(ls[0].rfind("# resolve ", 0), 0u);
    EXPECT_EQ(ls[1], "d3(xxyxxyx ⊗ 1) = [xxyx | xyx]");
    EXPECT_EQ(ls[2], "d3(xxyxxx ⊗ 1) = [xxyx | xx] - [xxyx | x]");
    EXPECT_EQ(ls[3], "d3(xxxyx ⊗ 1) = [xxx | yx] + [xxyx | 1]");
    EXPECT_EQ(ls[4], "d3(xxyxz ⊗ 1) = [xxyx | z] - [xxyx | 1]");
    EXPECT_EQ(ls[5], "d3(xxxx ⊗ 1) = [xxx | x]");
}

TEST(CliTest, ChainsDegreeFour) {
    auto r = run_cli({"chains", example(), "--degree", "4"});
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(lines(r.out).size(), 11u);
}

TEST(CliTest, GbCheckCounterexample) {
    auto r = run_cli({"gb-check", bad(), "--max-degree", "5"});
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.out.find("counterexample at xyx"), std::string::npos);
}

TEST(CliTest, ResolveRefusesUnverifiedUnlessCompleted) {
    EXPECT_EQ(run_cli({"resolve", bad(), "--degree", "2"}).code, 2);
    auto r = run_cli({"resolve", bad(), "--degree", "2", "--complete"});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("completed to 4 rules"), std::string::npos);
}

TEST(CliTest, BoundExceededExitCode) {
    auto path = std::filesystem::temp_directory_path() / "anick_braid.json";
    std::ofstream(path) << R"({"generators": ["x", "y"], "relations": ["xyx - yxy"]})";
    EXPECT_EQ(run_cli({"gb-complete", path.string(), "--max-degree", "4"}).code, 3);
}

TEST(CliTest, InputErrors) {
    EXPECT_EQ(run_cli({"resolve", kData + "/missing.json"}).code, 4);
    EXPECT_EQ(run_cli({"frobnicate", example()}).code, 4);
    EXPECT_EQ(run_cli({"chains", example(), "--degree", "0"}).code, 4);
    EXPECT_EQ(run_cli({"chains", example(), "--format", "xml"}).code, 4);
    auto path = std::filesystem::temp_directory_path() / "anick_letter.json";
    std::ofstream(path) << R"({"generators": ["x", "y"], "relations": ["x - y"]})";
    auto r = run_cli({"gb-check", path.string()});
    EXPECT_EQ(r.code, 4);
    EXPECT_NE(r.err.find("x - y"), std::string::npos) << r.err;
}

TEST(CliTest, HelpSucceeds) { EXPECT_EQ(run_cli({"--help"}).code, 0); }

TEST(CliTest, OutputIsDeterministic) {
    for (const char* cmd : {"resolve", "verify", "chain-graph", "diagnose", "normal-words"}) {
        auto a = run_cli({cmd, example(), "--degree", "4", "--max-length", "4"});
        auto b = run_cli({cmd, example(), "--degree", "4", "--max-length", "4"});
        EXPECT_EQ(a.code, 0) << cmd << a.err;
        EXPECT_EQ(a.out, b.out) << cmd;
    }
}

TEST(CliTest, JsonRoundTrip) {
    auto r = run_cli({"resolve", example(), "--degree", "4", "--format", "json"});
    ASSERT_EQ(r.code, 0);
    auto doc = nlohmann::json::parse(r.out);
    EXPECT_EQ(doc.at("exit_status"), 0);
    std::ifstream in(example());
    std::stringstream buf;
    buf << in.rdbuf();
    Presentation pres = Presentation::from_json(buf.str());
    EXPECT_EQ(doc.at("presentation_digest"), cli::presentation_digest(pres));
    ResolutionEngine engine(pres);
    const auto& diffs = doc.at("results").at("differentials");
    ASSERT_EQ(diffs.size(), 10u);
    for (const auto& entry : diffs) {
        ModuleElement parsed = cli::module_element_from_json(entry.at("value"), pres);
        EXPECT_EQ(parsed, engine.differential(4, pres.word(entry.at("chain").get<std::string>())));
        EXPECT_EQ(cli::to_json(parsed, pres), entry.at("value"));
    }
}

TEST(CliTest, DotFileWritten) {
    auto path = std::filesystem::temp_directory_path() / "anick_graph.dot";
    std::filesystem::remove(path);
    EXPECT_EQ(run_cli({"chain-graph", example(), "--dot", path.string()}).code, 0);
    std::ifstream in(path);
    std::string first;
    std::getline(in, first);
    EXPECT_EQ(first, "digraph chains {");
}

TEST(CliTest, VerifyAndObstructions) {
    auto v = run_cli({"verify", example(), "--degree", "5"});
    EXPECT_EQ(v.code, 0);
    EXPECT_NE(v.out.find("degree 5: 20 chains, d∘d = 0"), std::string::npos);
    auto o = run_cli({"obstructions", example()});
    EXPECT_EQ(lines(o.out), (std::vector<std::string>{lines(o.out)[0], "xxyx", "xxx", "yxz"}));
}
