// Copyright 2026 The Everett Authors
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
#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <regex>
#include <sstream>
#include <string>

#include "json.hpp"

namespace {

struct CliResult {
    int exit_code = -1;
    std::string out;
};

CliResult run(const std::string &args, const std::string &env = "") {
    std::string cmd = env + (env.empty() ? "" : " ") + "'" EVERETT_CLI_PATH "' " + args + " 2>/dev/null";
    CliResult r;
    FILE *pipe = popen(cmd.c_str(), "r");
    if (!pipe) {
        return r;
    }
    char buf[4096];
    std::size_t n = 0;
    while ((n = std::fread(buf, 1, sizeof buf, pipe)) > 0) {
        r.out.append(buf, n);
    }
    int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string fixture(const char *name) { return std::string("'") + EVERETT_FIXTURE_DIR + "/" + name + "'"; }

std::filesystem::path temp_file(const std::string &name, const std::string &content) {
    auto p = std::filesystem::temp_directory_path() / ("everett_cli_test_" + std::to_string(::getpid()) + "_" + name);
    std::ofstream(p, std::ios::binary) << content;
    return p;
}

std::vector<nlohmann::json> json_lines(const std::string &out) {
    std::vector<nlohmann::json> records;
    std::istringstream in(out);
    for (std::string line; std::getline(in, line);) {
        records.push_back(nlohmann::json::parse(line));
    }
    return records;
}

std::string read_template() {
    std::ifstream in(std::string(EVERETT_FIXTURE_DIR) + "/superdense_pq.ecirc");
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

std::string instantiate(std::string src, const std::string &p, const std::string &q, const std::string &pointer) {
    for (const auto &[key, value] : {std::pair{"@p@", p}, {"@q@", q}, {"@pointer@", pointer}}) {
        for (auto at = src.find(key); at != std::string::npos; at = src.find(key)) {
            src.replace(at, std::string(key).size(), value);
        }
    }
    return src;
}

}  // namespace

TEST(Cli, superdense_human_output) {
    CliResult r = run("superdense --p 1 --q 0");
    EXPECT_EQ(r.exit_code, 0);
    EXPECT_NE(r.out.find("pointer: 01\n"), std::string::npos) << r.out;
    EXPECT_NE(r.out.find("decode table: 00->00 01->10 10->01 11->11"), std::string::npos) << r.out;
}

TEST(Cli, superdense_trace) {
    CliResult r = run("superdense --p 0 --q 0 --trace");
    EXPECT_EQ(r.exit_code, 0);
    EXPECT_NE(r.out.find("2 transfer a Alice->Bob norm2=2.000000000000\n"), std::string::npos) << r.out;
}

TEST(Cli, superdense_json_matches_human_numbers) {
    CliResult human = run("superdense --p 0 --q 1");
    CliResult json = run("superdense --p 0 --q 1 --json");
    EXPECT_EQ(json.exit_code, 0);
    auto recs = json_lines(json.out);
    ASSERT_GE(recs.size(), 3U);
    EXPECT_EQ(recs[0]["record"], "superdense");
    EXPECT_EQ(recs[0]["pointer"], "10");
    EXPECT_EQ(recs[1]["record"], "branch");
    char buf[64];
    std::snprintf(buf, sizeof buf, "weight=%.12f", recs[1]["weight"].get<double>());
    EXPECT_NE(human.out.find(buf), std::string::npos) << human.out;
}

TEST(Cli, teleport_output) {
    CliResult r = run("teleport --alpha 0.6,0 --beta 0,0.8");
    EXPECT_EQ(r.exit_code, 0);
    EXPECT_NE(r.out.find("fidelity: 1.000000000000\n"), std::string::npos) << r.out;
    EXPECT_NE(r.out.find("schmidt_rank: 1\n"), std::string::npos) << r.out;
    EXPECT_NE(r.out.find("bob: (0.600000000000,0.000000000000)|0> + (0.000000000000,0.800000000000)|1>"),
              std::string::npos)
        << r.out;
}

TEST(Cli, teleport_json) {
    CliResult r = run("teleport --alpha 1,0 --beta 0,0 --json --trace");
    EXPECT_EQ(r.exit_code, 0);
    auto recs = json_lines(r.out);
    ASSERT_FALSE(recs.empty());
    EXPECT_EQ(recs[0]["record"], "teleport");
    EXPECT_EQ(recs[0]["fidelity"].get<double>(), 1.0);
    int events = 0;
    for (const auto &rec : recs) {
        events += rec.contains("event") ? 1 : 0;
    }
    EXPECT_EQ(events, 5);
}

TEST(Cli, run_shipped_fixtures) {
    CliResult tele = run("run " + fixture("teleport.ecirc"));
    EXPECT_EQ(tele.exit_code, 0) << tele.out;
    EXPECT_NE(tele.out.find("summary: 1 passed, 0 failed"), std::string::npos) << tele.out;
    auto sd = temp_file("sd11.ecirc", instantiate(read_template(), "1", "1", "11"));
    CliResult r = run("run '" + sd.string() + "'");
    EXPECT_EQ(r.exit_code, 0) << r.out;
    std::filesystem::remove(sd);
}

TEST(Cli, run_failed_assertion_exits_one) {
    auto sd = temp_file("sd01.ecirc", instantiate(read_template(), "0", "1", "01"));
    CliResult r = run("run '" + sd.string() + "'");
    EXPECT_EQ(r.exit_code, 1) << r.out;
    EXPECT_NE(r.out.find("FAIL"), std::string::npos) << r.out;
    EXPECT_NE(r.out.find("summary: 2 passed, 1 failed"), std::string::npos) << r.out;
    CliResult j = run("run '" + sd.string() + "' --json");
    EXPECT_EQ(j.exit_code, 1);
    EXPECT_NO_THROW(json_lines(j.out));
    std::filesystem::remove(sd);
}

TEST(Cli, run_locality_violation_exits_one) {
    auto f = temp_file("nonlocal.ecirc", "wire a @ Alice\ngate sigma01 a @ Bob\n");
    EXPECT_EQ(run("run '" + f.string() + "'").exit_code, 1);
    std::filesystem::remove(f);
}

TEST(Cli, malformed_fixtures_exit_two) {
    int count = 0;
    for (const auto &entry : std::filesystem::directory_iterator(std::filesystem::path(EVERETT_TEST_DATA_DIR) / "malformed")) {
        CliResult r = run("run '" + entry.path().string() + "'");
        EXPECT_EQ(r.exit_code, 2) << entry.path();
        CliResult d = run("render '" + entry.path().string() + "'");
        EXPECT_EQ(d.exit_code, 2) << entry.path();
        ++count;
    }
    EXPECT_EQ(count, 20);
}

TEST(Cli, usage_errors_exit_two) {
    EXPECT_EQ(run("").exit_code, 2);
    EXPECT_EQ(run("bogus").exit_code, 2);
    EXPECT_EQ(run("superdense --p 2 --q 0").exit_code, 2);
    EXPECT_EQ(run("superdense --p 0").exit_code, 2);
    EXPECT_EQ(run("teleport --alpha 0,0 --beta 0,0").exit_code, 2);
    EXPECT_EQ(run("teleport --alpha x --beta 0,0").exit_code, 2);
    EXPECT_EQ(run("run /nonexistent/file.ecirc").exit_code, 2);
    EXPECT_EQ(run("verify", "EVERETT_TOL=abc").exit_code, 2);
    EXPECT_EQ(run("verify", "EVERETT_TOL=2").exit_code, 2);
}

TEST(Cli, tolerance_override) {
    EXPECT_EQ(run("teleport --alpha 1,0 --beta 0,1", "EVERETT_TOL=1e-9").exit_code, 0);
}

TEST(Cli, render_and_json_are_deterministic) {
    for (const std::string &args :
         {"render " + fixture("teleport.ecirc"), "run " + fixture("teleport.ecirc") + " --json",
          std::string("superdense --p 1 --q 1 --json --trace"), std::string("teleport --alpha 0.3,0.1 --beta 0,0.9 --json")}) {
        CliResult a = run(args);
        CliResult b = run(args);
        EXPECT_EQ(a.exit_code, 0) << args;
        EXPECT_FALSE(a.out.empty()) << args;
        EXPECT_EQ(a.out, b.out) << args;
    }
}

TEST(Cli, verify_passes_every_check) {
    CliResult r = run("verify");
    EXPECT_EQ(r.exit_code, 0) << r.out;
    std::regex pass(R"(^\[PASS\] \d\. )");
    int passes = 0;
    std::istringstream in(r.out);
    for (std::string line; std::getline(in, line);) {
        passes += std::regex_search(line, pass) ? 1 : 0;
    }
    EXPECT_EQ(passes, 9) << r.out;
}
