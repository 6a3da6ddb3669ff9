// Copyright 2026 The qinv developers

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>

#include "doctest.h"
#include "json.hpp"
#include "qinv/io.hpp"
#include "qinv/named_states.hpp"
#include "qinv/random.hpp"
#include "qinv/state.hpp"

using json = nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct CliResult {
    int exit_code = -1;
    std::string out;
};

// Runs the installed-location-independent CLI binary; stderr is dropped so
// expected failures stay quiet in the test log.
CliResult run_cli(const std::string& args) {
    const char* override_path = std::getenv("QINV_CLI");
    const std::string binary = override_path ? override_path : QINV_CLI_PATH;
    const std::string command = binary + " " + args + " 2>/dev/null";
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    CliResult result;
    char buffer[4096];
    while (std::fgets(buffer, sizeof buffer, pipe)) {
        result.out += buffer;
    }
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

struct FileGuard {
    fs::path path;
    ~FileGuard() { fs::remove(path); }
};

fs::path temp_file(const std::string& name) {
    return fs::temp_directory_path() / ("qinv_cli_" + name);
}

} // namespace

TEST_CASE("eval prints the cluster anchor in every format") {
    const CliResult as_json = run_cli("eval --state cl2 --n 4 --invariants p --format json");
    REQUIRE(as_json.exit_code == 0);
    const json j = json::parse(as_json.out);
    CHECK(j.at("n") == 4);
    CHECK(j.at("normalized") == true);
    REQUIRE(j.at("results").size() == 1);
    CHECK(j.at("results")[0].at("name") == "p");
    CHECK(j.at("results")[0].at("abs").get<double>() == doctest::Approx(0.0625));
    CHECK(j.at("results")[0].at("zero") == false);

    const CliResult as_csv = run_cli("eval --state cl2 --n 4 --invariants p --format csv");
    REQUIRE(as_csv.exit_code == 0);
    CHECK(as_csv.out.find("name,re,im,abs,scale,degree,zero") != std::string::npos);
    CHECK(as_csv.out.find("p,0.0625") != std::string::npos);

    const CliResult as_text = run_cli("eval --state cl2 --n 4 --invariants p");
    REQUIRE(as_text.exit_code == 0);
    CHECK(as_text.out.find("0.0625") != std::string::npos);
}

TEST_CASE("eval handles derived quantities and permuted names") {
    const FileGuard guard{temp_file("bell.json")};
    qinv::save_state(qinv::make_ghz(2), guard.path);
    const CliResult r = run_cli("eval --input " + guard.path.string() +
                                " --invariants concurrence,tangle --format json");
    REQUIRE(r.exit_code == 0);
    const json j = json::parse(r.out);
    CHECK(j.at("results")[0].at("abs").get<double>() == doctest::Approx(1.0));
    CHECK(j.at("results")[1].at("abs").get<double>() == doctest::Approx(1.0));

    // On CL1_4 the (1,3) invariant sits in a different group than P_4 itself,
    // so the two magnitudes must differ.
    const CliResult perm =
        run_cli("eval --state cl1 --n 4 --invariants p,p-perm:1,3 --format json");
    REQUIRE(perm.exit_code == 0);
    const json pj = json::parse(perm.out);
    CHECK(pj.at("results")[0].at("abs").get<double>() == doctest::Approx(0.125));
    CHECK(pj.at("results")[1].at("name") == "p-perm:1,3");
    CHECK(pj.at("results")[1].at("abs").get<double>() == doctest::Approx(0.0625));
}

TEST_CASE("eval exit codes follow the contract") {
    CHECK(run_cli("eval --state ghz --n 3 --invariants g").exit_code == 3);
    CHECK(run_cli("eval --state ghz --n 4 --invariants nope").exit_code == 2);
    CHECK(run_cli("eval --input /no/such/file.json --invariants g").exit_code == 2);
    CHECK(run_cli("eval --state ghz --invariants g").exit_code == 2); // missing --n
    CHECK(run_cli("").exit_code == 2);                                // no subcommand
    CHECK(run_cli("eval --state ghz --n 4 --invariants lmn,g").exit_code == 0);
}

TEST_CASE("eval --dump round-trips the state bitwise") {
    const FileGuard guard{temp_file("dump.json")};
    const CliResult r = run_cli("eval --state w --n 4 --invariants g --dump " +
                                guard.path.string());
    REQUIRE(r.exit_code == 0);
    const qinv::PureState back = qinv::load_state(guard.path);
    const qinv::PureState expected = qinv::make_w(4);
    REQUIRE(back.qubit_count() == 4);
    for (std::size_t i = 0; i < expected.dim(); ++i) {
        CHECK(back.amp(i) == expected.amp(i));
    }
}

TEST_CASE("classify separates the named families") {
    const CliResult r = run_cli("classify --state ghz --state w --state cl2 --n 4");
    REQUIRE(r.exit_code == 0);
    CHECK(r.out.find("1|0000000") != std::string::npos);
    CHECK(r.out.find("0|1111111") != std::string::npos);
    CHECK(r.out.find("inequivalent") != std::string::npos);
    // Signatures can prove inequivalence only, so a bare "equivalent"
    // verdict must never be printed.
    CHECK(r.out.find(": equivalent") == std::string::npos);

    const CliResult csv = run_cli("classify --state ghz --state cl2 --n 4 --format csv");
    REQUIRE(csv.exit_code == 0);
    CHECK(csv.out.find("a,b,verdict") != std::string::npos);
    CHECK(csv.out.find("ghz,cl2,inequivalent") != std::string::npos);
}

TEST_CASE("tables reproduce their reference rows") {
    const CliResult t5 = run_cli("tables --which 5 --n 4");
    REQUIRE(t5.exit_code == 0);
    CHECK(t5.out.find("1/8") != std::string::npos);
    CHECK(t5.out.find("1/16") != std::string::npos);

    const CliResult t2 = run_cli("tables --which 2 --n 8");
    REQUIRE(t2.exit_code == 0);
    CHECK(t2.out.find("!=0") != std::string::npos);
    CHECK(t2.out.find("out of scope") != std::string::npos);

    const CliResult t1 = run_cli("tables --which 1");
    REQUIRE(t1.exit_code == 0);
    CHECK(t1.out.find("(1,3)    P4'    P4     P4''") != std::string::npos);
    CHECK(t1.out.find("verified:") != std::string::npos);

    CHECK(run_cli("tables --which 1 --n 6").exit_code == 3);
    CHECK(run_cli("tables --which 2 --n 5").exit_code == 3);
    CHECK(run_cli("tables --which 2").exit_code == 2); // table 2 needs --n
}

TEST_CASE("roof runs on a mixed input file") {
    const FileGuard guard{temp_file("roof_mix.json")};
    const qinv::StateEnsemble mix(
        {{0.5, qinv::make_ghz(4)}, {0.5, qinv::make_w(4)}});
    qinv::save_ensemble(mix, guard.path);
    const CliResult r = run_cli("roof --input " + guard.path.string() +
                                " --restarts 4 --seed 1 --format json");
    REQUIRE(r.exit_code == 0);
    const json j = json::parse(r.out);
    CHECK(j.at("estimate").get<double>() <= 1e-9);
    CHECK(j.at("eigen_average").get<double>() >= j.at("estimate").get<double>() - 1e-12);

    const FileGuard bad{temp_file("roof_bad.json")};
    std::ofstream(bad.path) << "{\"n\": 1, \"amplitudes\": [[2,0],[0,0]]}";
    CHECK(run_cli("roof --input " + bad.path.string()).exit_code == 2);
}

TEST_CASE("check suites pass and replay deterministically") {
    const CliResult r = run_cli("check bound --n 4 --trials 50 --seed 3");
    REQUIRE(r.exit_code == 0);
    CHECK(r.out.find("PASS") != std::string::npos);
    const CliResult again = run_cli("check bound --n 4 --trials 50 --seed 3");
    CHECK(again.out == r.out);

    CHECK(run_cli("check dual-form --n 6 --trials 20 --seed 1").exit_code == 0);
    CHECK(run_cli("check closure").exit_code == 0);
    CHECK(run_cli("check nope --n 4").exit_code == 2);
    CHECK(run_cli("check bound --n 3 --trials 5").exit_code == 3);
}
