// Copyright (c) 2026 the sclag authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#ifndef SCLAG_CLI_PATH
#error "SCLAG_CLI_PATH must point at the built binary"
#endif

namespace {

struct RunResult {
    int status;
    std::string out;
};

RunResult run_env(const std::string& env, const std::string& args) {
    std::string cmd = env + (env.empty() ? "" : " ") + SCLAG_CLI_PATH + " " +
                      args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf;
    size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0)
        out.append(buf.data(), got);
    int rc = pclose(pipe);
    return RunResult{WEXITSTATUS(rc), out};
}

RunResult run(const std::string& args) { return run_env("", args); }

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
    std::vector<std::vector<std::string>> rows;
    std::istringstream stream(text);
    std::string line;
    while (std::getline(stream, line)) {
        std::vector<std::string> fields;
        std::istringstream ls(line);
        std::string field;
        while (std::getline(ls, field, ',')) fields.push_back(field);
        rows.push_back(std::move(fields));
    }
    return rows;
}

} // namespace

TEST_CASE("coeffs with both routes agree") {
    RunResult r = run("coeffs --alpha 1 --t 0 --n-max 1 --route both");
    CHECK(r.status == 0);
    auto rows = parse_csv(r.out);
    REQUIRE(rows.size() == 3); // header + n=0,1
    CHECK(rows[0][0] == "t");
    // n = 1 row: a2 by both routes, leading digits of 1 - pi/4.
    CHECK(rows[2][2].substr(0, 12) == "0.2146018366");
    CHECK(rows[2][3].substr(0, 12) == "0.2146018366");
    double diff = std::strtod(rows[2][4].c_str(), nullptr);
    CHECK(diff <= 1e-25);
}

TEST_CASE("coeffs rejects bad input with exit code 2") {
    CHECK(run("coeffs --alpha 1 --t 0 --n-max 0").status == 2);
    RunResult r = run("coeffs --alpha -1 --t 0 --n-max 2");
    CHECK(r.status == 2);
    CHECK(r.out.find("domain_error") != std::string::npos);
    CHECK(run("nonsense").status == 2);
    CHECK(run("coeffs --alpha 1 --t 0 --n-max 1 --precision-bits 32").status ==
          2);
}

TEST_CASE("errors are machine-readable in json too") {
    RunResult r = run("coeffs --alpha -1 --t 0 --n-max 2 --format json");
    CHECK(r.status == 2);
    nlohmann::json obj = nlohmann::json::parse(r.out);
    CHECK(obj["error"].get<std::string>() == "domain_error");
    CHECK(obj.contains("message"));
}

TEST_CASE("verify riccati passes") {
    RunResult r = run("verify --suite riccati --alpha 1 --t 0");
    CHECK(r.status == 0);
    auto rows = parse_csv(r.out);
    REQUIRE(rows.size() >= 2);
    CHECK(rows[1].back() == "pass");
}

TEST_CASE("verify with an injected fault reports a failure") {
    RunResult r = run("verify --suite ladder --alpha 1 --t 0 --n-max 3 --fault");
    CHECK(r.status == 1);
    CHECK(r.out.find("fault_probe") != std::string::npos);
    CHECK(r.out.find("fail") != std::string::npos);
}

TEST_CASE("trace q emits the closed-form point") {
    RunResult r = run(
        "trace --quantity q --alpha 1 --n-max 0 --t-min 0 --t-max 0 --t-steps 1");
    CHECK(r.status == 0);
    auto rows = parse_csv(r.out);
    REQUIRE(rows.size() == 2);
    CHECK(rows[1][3].substr(0, 12) == "1.7724538509"); // sqrt(pi)
}

TEST_CASE("deterministic output") {
    const std::string args = "coeffs --alpha 2.5 --t 1.5 --n-max 3 --route hankel";
    RunResult a = run(args);
    RunResult b = run(args);
    CHECK(a.status == 0);
    CHECK(a.out == b.out);
}

TEST_CASE("csv and json carry identical values") {
    const std::string base = "trace --quantity freud --alpha 1 --t 0 --n-max 2";
    RunResult csv = run(base);
    RunResult js = run(base + " --format json");
    CHECK(csv.status == 0);
    CHECK(js.status == 0);
    auto rows = parse_csv(csv.out);
    nlohmann::json parsed = nlohmann::json::parse(js.out);
    REQUIRE(parsed.size() == rows.size() - 1);
    for (size_t i = 0; i < parsed.size(); ++i) {
        CHECK(parsed[i]["t"].get<std::string>() == rows[i + 1][0]);
        CHECK(parsed[i]["n"].get<std::string>() == rows[i + 1][1]);
        CHECK(parsed[i]["A2"].get<std::string>() == rows[i + 1][2]);
    }
}

TEST_CASE("verify all on a small grid") {
    RunResult r = run(
        "verify --suite all --alpha 1 --t-min -1 --t-max 2 --t-steps 3 "
        "--n-max 3");
    CHECK(r.status == 0);
    CHECK(r.out.find("fail") == std::string::npos);
}

TEST_CASE("environment variable sets the default precision") {
    RunResult narrow = run_env("SCLAG_PRECISION_BITS=128",
                               "coeffs --alpha 1 --t 0 --n-max 1 --route hankel");
    RunResult wide = run("coeffs --alpha 1 --t 0 --n-max 1 --route hankel");
    CHECK(narrow.status == 0);
    auto rows_narrow = parse_csv(narrow.out);
    auto rows_wide = parse_csv(wide.out);
    // 128 bits renders ceil(128*0.3010) = 39 significant digits, 256 gives 78.
    CHECK(rows_narrow[1][3].size() < rows_wide[1][3].size());
    CHECK(rows_wide[1][3].substr(0, rows_narrow[1][3].size() - 2) ==
          rows_narrow[1][3].substr(0, rows_narrow[1][3].size() - 2));
}
