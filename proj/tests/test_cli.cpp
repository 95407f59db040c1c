/*
 * Copyright 2026 The logsymp Authors
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

#include <catch_amalgamated.hpp>

#include <array>
#include <cstdio>
#include <sstream>
#include <sys/wait.h>

#include "cli.hpp"

using namespace logsymp;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    args.insert(args.begin(), "logsymp");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::string sample(const std::string& name) { return std::string(LOGSYMP_SAMPLES_DIR) + "/" + name; }

std::size_t count_lines(const std::string& s) { return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n')); }

// Runs the installed binary through the shell, capturing stdout and the exit status.
Result run_binary(const std::string& args) {
    const std::string cmd = std::string(LOGSYMP_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe);
    std::string out;
    std::array<char, 4096> buf{};
    while (std::size_t n = std::fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
    const int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out, ""};
}

}  // namespace

TEST_CASE("analyze", "[cli]") {
    auto r = run({"analyze", sample("triangle_111.json")});
    REQUIRE(r.code == 0);
    auto j = io::json::parse(r.out);
    CHECK(j.at("holonomic") == true);
    CHECK(j.at("diagram").at("edges").size() == 3);

    auto zero = run({"analyze", sample("p4_zero.json")});
    REQUIRE(zero.code == 0);
    CHECK(io::json::parse(zero.out).at("nondegenerate") == false);

    auto text = run({"analyze", sample("p4_block.json"), "--format", "text", "--chart-vertex", "2"});
    CHECK(text.code == 0);
    CHECK(text.out.find("nondegenerate: yes") != std::string::npos);

    CHECK(run({"analyze", sample("malformed.json")}).code == 2);
    CHECK(run({"analyze", sample("does_not_exist.json")}).code == 2);
    CHECK(run({"analyze", sample("custom_complex.json")}).code == 3);
    CHECK(run({"analyze", sample("triangle_111.json"), "--format", "dot"}).code == 2);
    CHECK(run({"analyze", sample("p4_block.json"), "--chart-vertex", "9"}).code == 5);
}

TEST_CASE("classify", "[cli]") {
    auto csv = run({"classify", "--space", "P4", "--format", "csv"});
    REQUIRE(csv.code == 0);
    CHECK(count_lines(csv.out) == 41);
    CHECK(csv.out.rfind("encoding,edges,dimension,orbit_size\n", 0) == 0);

    auto p2 = run({"classify", "--space", "P2", "--format", "csv"});
    CHECK(count_lines(p2.out) == 2);

    auto json_default = run({"classify", "--space", "P4"});
    auto json_raw = run({"classify", "--space", "P4", "--no-pruning"});
    auto json_par = run({"classify", "--space", "P4", "--parallel"});
    CHECK(io::json::parse(json_default.out).size() == 40);
    CHECK(json_default.out == json_raw.out);
    CHECK(json_default.out == json_par.out);

    auto golden = run({"classify", "--space", "P4", "--verify-golden", "--format", "text"});
    CHECK(golden.code == 0);
    CHECK(golden.err.find("40 classes match") != std::string::npos);

    auto dot = run({"classify", "--space", "P2", "--format", "dot"});
    CHECK(dot.out.find("graph class_0 {") != std::string::npos);

    CHECK(run({"classify", "--space", "P8"}).code == 4);
    CHECK(run({"classify", "--space", "Q4"}).code == 2);
    CHECK(run({"classify", "--space", "P2", "--verify-golden"}).code == 2);
}

TEST_CASE("triple-points", "[cli]") {
    auto r = run({"triple-points"});
    REQUIRE(r.code == 0);
    auto j = io::json::parse(r.out);
    REQUIRE(j.size() == 10);
    std::map<int, int> orbits;
    for (const auto& p : j) ++orbits[p.at("orbit_size").get<int>()];
    CHECK(orbits == std::map<int, int>{{1, 1}, {3, 3}, {6, 6}});

    auto chains = run({"triple-points", "--chains", "--max-order", "3"});
    auto cj = io::json::parse(chains.out);
    CHECK(cj.size() == 10);
    for (const auto& c : cj) {
        const long long m = c.at("m"), n = c.at("n");
        CHECK(c.at("biresidues") ==
              io::json::array({std::to_string(n + 1), std::to_string(m + 1), std::to_string(n * m - 1)}));
    }
    auto csv = run({"triple-points", "--format", "csv"});
    CHECK(count_lines(csv.out) == 11);
    CHECK(run({"triple-points", "--format", "dot"}).code == 2);
}

TEST_CASE("cohomology", "[cli]") {
    auto r = run({"cohomology", sample("germ_111.json")});
    REQUIRE(r.code == 0);
    auto j = io::json::parse(r.out);
    CHECK(j.at("poincare") == io::json::parse("[1, 3, 6, 4]"));
    CHECK(j.at("hp2") == 6);
    CHECK(io::json::parse(run({"cohomology", sample("germ_11m1.json")}).out).at("poincare") ==
          io::json::parse("[1, 3, 5, 3]"));
    CHECK(io::json::parse(run({"cohomology", sample("germ_c2.json")}).out).at("poincare") ==
          io::json::parse("[1, 2, 2]"));

    auto bad = run({"cohomology", sample("germ_non_holonomic.json")});
    CHECK(bad.code == 5);
    CHECK(bad.err.find("violator {0,1,2}") != std::string::npos);
    CHECK(run({"cohomology", sample("malformed.json")}).code == 2);
}

TEST_CASE("render", "[cli]") {
    auto empty = run({"render", sample("empty_p4.json")});
    REQUIRE(empty.code == 0);
    CHECK(empty.out.find("--") == std::string::npos);
    CHECK(empty.out.find("v4;") != std::string::npos);
    auto pent = run({"render", sample("pentagon.json")});
    std::size_t edges = 0;
    for (std::size_t p = pent.out.find("penwidth"); p != std::string::npos; p = pent.out.find("penwidth", p + 1)) ++edges;
    CHECK(edges == 5);
    CHECK(run({"render", sample("malformed.json")}).code == 2);
    CHECK(run({"render", sample("pentagon.json"), "--format", "json"}).code == 2);
}

TEST_CASE("usage errors", "[cli]") {
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"classify", "--bogus"}).code == 2);
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("binary exit codes and determinism", "[cli]") {
    auto a = run_binary("classify --space P4 --format csv");
    CHECK(a.code == 0);
    CHECK(a.out == run({"classify", "--space", "P4", "--format", "csv"}).out);
    CHECK(run_binary("classify --space P4 --format csv").out == a.out);
    CHECK(run_binary("analyze " + sample("malformed.json")).code == 2);
    CHECK(run_binary("analyze " + sample("custom_complex.json")).code == 3);
    CHECK(run_binary("classify --space P10").code == 4);
    CHECK(run_binary("cohomology " + sample("germ_non_holonomic.json")).code == 5);
    CHECK(run_binary("analyze - < " + sample("triangle_111.json")).code == 0);
}
