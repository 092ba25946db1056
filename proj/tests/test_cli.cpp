#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>

#include <json.hpp>

namespace fs = std::filesystem;

namespace {

struct CliRun {
    int exit_code = -1;
    std::string output;  // stdout and stderr combined
};

fs::path scratch_dir() {
    static fs::path dir = [] {
        fs::path d = fs::temp_directory_path() /
                     ("ccx_cli_test_" + std::to_string(static_cast<long>(::getpid())));
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

CliRun run_cli(const std::string& args) {
    static int counter = 0;
    fs::path capture = scratch_dir() / ("capture_" + std::to_string(counter++) + ".txt");
    std::string cmd =
        std::string(CCX_CLI_PATH) + " " + args + " > " + capture.string() + " 2>&1";
    int status = std::system(cmd.c_str());
    CliRun r;
    if (WIFEXITED(status)) r.exit_code = WEXITSTATUS(status);
    std::ifstream in(capture);
    std::stringstream ss;
    ss << in.rdbuf();
    r.output = ss.str();
    return r;
}

fs::path write_fixture(const std::string& name, const std::string& body) {
    fs::path p = scratch_dir() / name;
    std::ofstream(p) << body;
    return p;
}

const char* kThreePointDiagonal = R"({
  "space": {"kind": "points", "x": [0.0, 1.0, 2.0], "y": [0.0, 1.0, 2.0]},
  "cost": "inner_product",
  "pairs": [[0, 0], [1, 1], [2, 2]]
})";

}  // namespace

TEST_CASE("a monotone relation passes the pairwise check") {
    fs::path p = write_fixture("diag.json", kThreePointDiagonal);
    CliRun r = run_cli("check-monotone " + p.string());
    CHECK(r.exit_code == 0);
    CHECK(!r.output.empty());
}

TEST_CASE("a crossed relation fails with the assertion exit code") {
    fs::path p = write_fixture("crossed.json", R"({
      "space": {"kind": "points", "x": [0.0, 1.0], "y": [0.0, 1.0]},
      "cost": "inner_product",
      "pairs": [[0, 1], [1, 0]]
    })");
    CliRun r = run_cli("check-monotone " + p.string());
    CHECK(r.exit_code == 1);
}

TEST_CASE("the maximality flag distinguishes extendable relations") {
    // The diagonal is monotone but admits extensions for this cost.
    fs::path diag = write_fixture("diag_max.json", kThreePointDiagonal);
    CHECK(run_cli("check-monotone " + diag.string() + " --maximal").exit_code == 1);

    fs::path full = write_fixture("maximal.json", R"({
      "space": {"kind": "points", "x": [0.0, 1.0], "y": [0.0, 1.0]},
      "cost": "inner_product",
      "pairs": [[0, 0], [0, 1], [1, 1]]
    })");
    CHECK(run_cli("check-monotone " + full.string() + " --maximal").exit_code == 0);
}

TEST_CASE("cycle enumeration over too many members stops with the resource exit code") {
    std::string xs, pairs;
    for (int i = 0; i < 21; ++i) {
        if (i) {
            xs += ", ";
            pairs += ", ";
        }
        xs += std::to_string(i) + ".0";
        pairs += "[" + std::to_string(i) + ", " + std::to_string(i) + "]";
    }
    fs::path p = write_fixture("wide.json",
                               std::string("{\"space\": {\"kind\": \"points\", \"x\": [") + xs +
                                   "]}, \"cost\": \"inner_product\", \"pairs\": [" + pairs +
                                   "]}");
    CliRun r = run_cli("check-monotone " + p.string() + " --order 4");
    CHECK(r.exit_code == 3);
}

TEST_CASE("malformed and missing inputs use the input-error exit code") {
    fs::path bad = write_fixture("bad.json", "{\"space\": {\"kind\": \"circle\", \"n\": ");
    CHECK(run_cli("check-monotone " + bad.string()).exit_code == 2);
    CHECK(run_cli("check-monotone " + (scratch_dir() / "absent.json").string()).exit_code == 2);
}

TEST_CASE("an out-of-range target index is rejected while parsing") {
    fs::path p = write_fixture("badp.json", R"({
      "space": {"kind": "interval_grid", "a": -1.0, "b": 1.0, "n": 3},
      "cost": "inner_product",
      "lagrangian": [[1.0, 0.5, 1.0], [0.5, 0.0, 0.5], [1.0, 0.5, 1.0]],
      "p": 5
    })");
    CHECK(run_cli("invert " + p.string()).exit_code == 2);
}

TEST_CASE("a relation is represented by a synthesized Lagrangian") {
    fs::path p = write_fixture("rep.json", kThreePointDiagonal);
    fs::path art = scratch_dir() / "rep_out.json";
    CliRun r = run_cli("represent " + p.string() + " --json-out " + art.string());
    CHECK(r.exit_code == 0);
    nlohmann::json j = nlohmann::json::parse(std::ifstream(art));
    CHECK(j.is_object());
}

TEST_CASE("the swap map rearranges with the exact optimal value") {
    fs::path p = write_fixture("swap.json", R"({
      "space": {"kind": "points", "x": [0.0, 1.0]},
      "cost": "inner_product",
      "map_T": [1, 0]
    })");
    fs::path art = scratch_dir() / "swap_out.json";
    CliRun r = run_cli("rearrange " + p.string() + " --json-out " + art.string());
    CHECK(r.exit_code == 0);
    std::ifstream in(art);
    std::stringstream ss;
    ss << in.rdbuf();
    nlohmann::json j = nlohmann::json::parse(ss.str());
    CHECK(j.is_object());
    CHECK(ss.str().find("1/2") != std::string::npos);
}

TEST_CASE("a quadratic instance inverts at its target") {
    fs::path p = write_fixture("quad.json", R"({
      "space": {"kind": "interval_grid", "a": -1.0, "b": 1.0, "n": 3},
      "cost": "inner_product",
      "lagrangian": [[1.0, 0.5, 1.0], [0.5, 0.0, 0.5], [1.0, 0.5, 1.0]],
      "p": 2
    })");
    CHECK(run_cli("invert " + p.string()).exit_code == 0);
}

TEST_CASE("an adjoint that is not skew fails the inversion assertions") {
    fs::path p = write_fixture("notskew.json", R"({
      "space": {"kind": "points", "x": [0.0, 1.0]},
      "cost": "inner_product",
      "phi": [0.0, 0.0],
      "B": [0, 1]
    })");
    CHECK(run_cli("invert " + p.string()).exit_code == 1);
}

TEST_CASE("an unattained inversion is a valid outcome, not a failure") {
    fs::path p = write_fixture("turn.json", R"({
      "space": {"kind": "circle", "n": 8},
      "cost": "arclength",
      "phi": [0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0],
      "B": [2, 3, 4, 5, 6, 7, 0, 1]
    })");
    fs::path art = scratch_dir() / "turn_out.json";
    CliRun r = run_cli("invert " + p.string() + " --json-out " + art.string());
    CHECK(r.exit_code == 0);
    nlohmann::json j = nlohmann::json::parse(std::ifstream(art));
    bool found = false;
    std::function<void(const nlohmann::json&)> scan = [&](const nlohmann::json& node) {
        if (node.is_object()) {
            if (node.contains("no_solution_on_grid") && node["no_solution_on_grid"].is_boolean())
                found = found || node["no_solution_on_grid"].get<bool>();
            for (const auto& kv : node.items()) scan(kv.value());
        } else if (node.is_array()) {
            for (const auto& item : node) scan(item);
        }
    };
    scan(j);
    CHECK(found);
}

TEST_CASE("the self-test needs a seed") {
    CHECK(run_cli("selftest").exit_code == 2);
}

TEST_CASE("a single criterion runs green") {
    CliRun r = run_cli("selftest --seed 20260822 --criterion 1");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("PASS") != std::string::npos);
}

TEST_CASE("the full self-test is deterministic byte for byte") {
    fs::path a = scratch_dir() / "self_a.json";
    fs::path b = scratch_dir() / "self_b.json";
    CliRun ra = run_cli("selftest --seed 20260822 --json-out " + a.string());
    CliRun rb = run_cli("selftest --seed 20260822 --json-out " + b.string());
    CHECK(ra.exit_code == rb.exit_code);
    CHECK(ra.output == rb.output);

    std::stringstream sa, sb;
    sa << std::ifstream(a).rdbuf();
    sb << std::ifstream(b).rdbuf();
    CHECK(sa.str() == sb.str());
    CHECK(!sa.str().empty());
}
