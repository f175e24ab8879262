// Copyright 2026 The laurent-duality Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "cli.hpp"
#include "ldual/io.hpp"

namespace {

const std::string kData = LDUAL_TEST_DATA_DIR;

struct Invocation {
    int code;
    std::string out;
    std::string err;
};

Invocation run(std::vector<std::string> args) {
    args.insert(args.begin(), "laurent-duality");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = ldual::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::filesystem::path temp_path(const std::string& name) {
    return std::filesystem::temp_directory_path() / ("ldual_cli_" + std::to_string(::getpid()) + "_" + name);
}

std::string slurp(const std::filesystem::path& p) { return ldual::read_text_file(p); }

}  // namespace

TEST(Cli, ExtPrintsDimensions) {
    const Invocation r = run({"ext", kData + "/k_a_d1.mod", kData + "/k_a_d1.mod"});
    EXPECT_EQ(r.code, 0) << r.out << r.err;
    EXPECT_NE(r.out.find("euler-characteristic"), std::string::npos);
}

TEST(Cli, DualizeVerifyPasses) {
    for (const char* f : {"k_a_d1.mod", "corpus_d2.mod", "trivial_d3.mod", "corpus_d1_cyclotomic3.mod"}) {
        const Invocation r = run({"dualize", "verify", kData + "/" + f});
        EXPECT_EQ(r.code, 0) << f << "\n" << r.out << r.err;
    }
}

TEST(Cli, EngineFlag) {
    EXPECT_EQ(run({"dualize", "homological", kData + "/k_a_d1.mod", "--engine", "smith"}).code, 0);
    EXPECT_EQ(run({"dualize", "homological", kData + "/k_a_d1.mod", "--engine", "magic"}).code, 2);
}

TEST(Cli, FieldOptionEmbedsOrRejects) {
    EXPECT_EQ(run({"--field", "cyclotomic:12", "dualize", "gs", kData + "/corpus_d1_cyclotomic3.mod"}).code, 0);
    const Invocation r = run({"--field", "Q", "dualize", "gs", kData + "/corpus_d1_cyclotomic3.mod"});
    EXPECT_EQ(r.code, 2);
    EXPECT_FALSE(r.err.empty());
}

TEST(Cli, MalformedInputExitsTwo) {
    const auto p = temp_path("bad.mod");
    std::ofstream(p) << "{\"field\": \"Q\", \"rank\": 1, \"modules\": [";
    EXPECT_EQ(run({"dualize", "verify", p.string()}).code, 2);
    std::ofstream(p) << R"({"field": "Q", "rank": 1, "modules": [{"name": "s", "dimension": 1, "operators": [[["0"]]]}]})";
    EXPECT_EQ(run({"dualize", "verify", p.string()}).code, 2);
    std::filesystem::remove(p);
    EXPECT_EQ(run({"dualize", "sideways", kData + "/k_a_d1.mod"}).code, 2);
    EXPECT_EQ(run({}).code, 2);
}

TEST(Cli, FailingAssertionExitsOne) {
    // a corpus whose upper triangular algebra was replaced by a matrix algebra
    // contradicts the recorded "no symmetric form" expectation
    const auto dir = temp_path("data");
    std::filesystem::create_directories(dir);
    for (const auto& e : std::filesystem::directory_iterator(kData)) std::filesystem::copy(e.path(), dir / e.path().filename());
    std::filesystem::copy_file(dir / "m2.alg", dir / "ut2.alg", std::filesystem::copy_options::overwrite_existing);
    const Invocation r = run({"suite", "--data-dir", dir.string(), "--allow-undetermined"});
    std::filesystem::remove_all(dir);
    EXPECT_EQ(r.code, 1);
    EXPECT_NE(r.out.find("[fail] fsg/ut2.alg"), std::string::npos) << r.out;
}

TEST(Cli, NonIsomorphismIsAComputedOutcome) {
    const Invocation r = run({"zalg", "hom-center", kData + "/ut2.alg"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("not isomorphic"), std::string::npos);
}

TEST(Cli, UndeterminedNeedsFlag) {
    const Invocation strict = run({"zalg", "hom-center", kData + "/hecke_a1.alg", "--box", "1"});
    EXPECT_EQ(strict.code, 1) << strict.out;
    EXPECT_NE(strict.out.find("undetermined"), std::string::npos);
    EXPECT_EQ(run({"zalg", "hom-center", kData + "/hecke_a1.alg", "--box", "1", "--allow-undetermined"}).code, 0);
}

TEST(Cli, CrossedActions) {
    for (const char* action : {"build", "center", "fsg", "ext-r"}) {
        const Invocation r = run({"crossed", action, kData + "/z2_cross.alg"});
        EXPECT_EQ(r.code, 0) << action << "\n" << r.out << r.err;
    }
}

TEST(Cli, JsonIsDeterministicAcrossThreadCounts) {
    const auto a = temp_path("a.json");
    const auto b = temp_path("b.json");
    ::setenv("LAURENT_DUALITY_THREADS", "1", 1);
    const Invocation one = run({"suite", "--json-out", a.string(), "--allow-undetermined"});
    ::setenv("LAURENT_DUALITY_THREADS", "4", 1);
    const Invocation four = run({"suite", "--json-out", b.string(), "--allow-undetermined"});
    ::unsetenv("LAURENT_DUALITY_THREADS");
    EXPECT_EQ(one.code, 0) << one.out;
    EXPECT_EQ(four.code, 0);
    const std::string ja = slurp(a), jb = slurp(b);
    EXPECT_EQ(ja, jb);
    EXPECT_EQ(ja.find("seconds"), std::string::npos);
    EXPECT_NE(ja.find("sha256"), std::string::npos);
    std::filesystem::remove(a);
    std::filesystem::remove(b);
}

TEST(Cli, BadThreadCount) {
    ::setenv("LAURENT_DUALITY_THREADS", "zero", 1);
    EXPECT_EQ(run({"dualize", "gs", kData + "/k_a_d1.mod"}).code, 2);
    ::unsetenv("LAURENT_DUALITY_THREADS");
}
