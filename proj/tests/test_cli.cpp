#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>
#include <vector>

#include <json.hpp>

#ifndef HEATENGINE_CLI_PATH
#define HEATENGINE_CLI_PATH "./heatengine"
#endif

namespace {

struct CommandResult {
    int exit_code = -1;
    std::string output;  // stdout only
};

CommandResult run_command(const std::string& args) {
    const std::string cmd = std::string(HEATENGINE_CLI_PATH) + " " + args + " 2>/dev/null";
    CommandResult r;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buf{};
    size_t n = 0;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.output.append(buf.data(), n);
    const int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string write_temp(const std::string& name, const std::string& content) {
    const std::string path = std::string("/tmp/") + name;
    std::ofstream out(path, std::ios::binary);
    out << content;
    return path;
}

}  // namespace

TEST_SUITE_BEGIN("cli");

TEST_CASE("cycle: uncoupled point prints eta = 0.25") {
    const CommandResult r =
        run_command("cycle --spin-a 1/2 --spin-b 1/2 --j 0 --b1 3 --b2 4 --meas-a x --meas-b z");
    REQUIRE(r.exit_code == 0);
    const nlohmann::json o = nlohmann::json::parse(r.output);
    CHECK(std::abs(o.at("eta").get<double>() - 0.25) < 1e-10);
    CHECK(o.at("status").get<std::string>() == "ok");
    CHECK(o.contains("transition"));
    CHECK(o.contains("post_probs"));
}

TEST_CASE("cycle: commuting scheme reports zero work and an undefined eta") {
    const CommandResult r = run_command(
        "cycle --spin-a 1/2 --spin-b 1/2 --j 0 --b1 3 --b2 4 --meas-a z --meas-b z --format csv");
    REQUIRE(r.exit_code == 0);
    // csv row: wt column (index 14) ~ 0, eta column (17) empty, status carries the flag
    std::vector<std::string> cells;
    std::string cur;
    for (char ch : r.output) {
        if (ch == ',') {
            cells.push_back(cur);
            cur.clear();
        } else if (ch != '\n') {
            cur += ch;
        }
    }
    cells.push_back(cur);
    REQUIRE(cells.size() == 23);
    CHECK(std::abs(std::stod(cells[14])) < 1e-12);
    CHECK(cells[17].empty());
    CHECK(cells[22] == "eta_undefined");
}

TEST_CASE("cycle: z x z with coupling keeps wt = 0 and a defined zero eta") {
    const CommandResult r =
        run_command("cycle --spin-a 1/2 --spin-b 1/2 --j 0.5 --b1 3 --b2 4 --meas-a z --meas-b z");
    REQUIRE(r.exit_code == 0);
    const nlohmann::json o = nlohmann::json::parse(r.output);
    CHECK(std::abs(o.at("wt").get<double>()) < 1e-12);
    CHECK(o.at("qm").get<double>() > 0.1);
    REQUIRE(!o.at("eta").is_null());
    CHECK(std::abs(o.at("eta").get<double>()) < 1e-12);
}

TEST_CASE("cycle: equal fields produce no work") {
    const CommandResult r =
        run_command("cycle --spin-a 1/2 --spin-b 1/2 --j 0.4 --b1 3 --b2 3 --meas-a x --meas-b z");
    REQUIRE(r.exit_code == 0);
    const nlohmann::json o = nlohmann::json::parse(r.output);
    CHECK(std::abs(o.at("w1").get<double>()) < 1e-12);
    CHECK(std::abs(o.at("w2").get<double>()) < 1e-12);
    CHECK(std::abs(o.at("wt").get<double>()) < 1e-12);
}

TEST_CASE("cycle: flag errors exit 2") {
    CHECK(run_command("cycle --j 0.1 --b1 1").exit_code == 2);                      // missing --b2
    CHECK(run_command("cycle --j 0.1 --b1 1 --b2 2 --meas-a q").exit_code == 2);    // bad descriptor
    CHECK(run_command("cycle --j 0.1 --b1 1 --b2 2 --meas-b sic").exit_code == 2);  // sic on B
}

TEST_CASE("cycle: computation errors exit 1") {
    // sic needs a spin-1/2 A side; this only surfaces once the scheme is built
    CHECK(run_command("cycle --spin-a 1 --spin-b 1 --j 0.1 --b1 1 --b2 2 --meas-a sic --meas-b z").exit_code ==
          1);
}

TEST_CASE("sweep: determinism, threads, and config validation") {
    const std::string cfg = write_temp("heatengine_sweep_cfg.json", R"({
      "spin_a": "1/2", "spin_b": "1/2",
      "j_values": {"start": 0.0, "stop": 0.5, "count": 6},
      "b1_values": [3.0], "b2_values": [4.0],
      "scheme": {"meas_a": "x", "meas_b": "z"},
      "outputs": {"local_works": true}
    })");

    const CommandResult first = run_command("sweep --config " + cfg + " --threads 1");
    const CommandResult second = run_command("sweep --config " + cfg + " --threads 2");
    REQUIRE(first.exit_code == 0);
    REQUIRE(second.exit_code == 0);
    CHECK(first.output == second.output);
    CHECK(first.output.find("spin_a,spin_b,") == 0);

    const std::string bad = write_temp("heatengine_bad_cfg.json", R"({
      "spin_a": "1/2", "spin_b": "1/2",
      "j_values": [],
      "b1_values": [3.0], "b2_values": [4.0],
      "scheme": {"meas_a": "x", "meas_b": "z"}
    })");
    CHECK(run_command("sweep --config " + bad).exit_code == 2);
    CHECK(run_command("sweep --config /tmp/definitely_missing_config.json").exit_code == 2);
}

TEST_CASE("sweep: json format emits an array") {
    const std::string cfg = write_temp("heatengine_sweep_json.json", R"({
      "spin_a": "1/2", "spin_b": "1",
      "j_values": [0.0, 0.3],
      "b1_values": [1.0], "b2_values": [2.0],
      "scheme": {"meas_a": "sic", "meas_b": "z"}
    })");
    const CommandResult r = run_command("sweep --config " + cfg + " --format json");
    REQUIRE(r.exit_code == 0);
    const nlohmann::json arr = nlohmann::json::parse(r.output);
    REQUIRE(arr.is_array());
    REQUIRE(arr.size() == 2);
    CHECK(arr[0].at("meas_a").get<std::string>() == "sic");
    CHECK(std::abs(arr[0].at("eta").get<double>() - 0.5) < 1e-10);
}

TEST_CASE("validate: default run passes, absurd tolerance fails") {
    const CommandResult ok = run_command("validate");
    CAPTURE(ok.output);
    CHECK(ok.exit_code == 0);
    CHECK(ok.output.find("[PASS] tables") != std::string::npos);
    CHECK(ok.output.find("closed_forms") != std::string::npos);

    const CommandResult tight = run_command("validate --tol 1e-15");
    CHECK(tight.exit_code == 1);
}

TEST_CASE("validate: group scoping") {
    const CommandResult tables = run_command("validate --group tables");
    CHECK(tables.exit_code == 0);
    CHECK(tables.output.find("[PASS] tables") != std::string::npos);
    CHECK(tables.output.find("invariants") == std::string::npos);

    CHECK(run_command("validate --group nonsense").exit_code == 2);
}

TEST_SUITE_END();
