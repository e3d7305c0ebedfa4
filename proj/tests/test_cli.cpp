#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>

#include "json.hpp"

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;
};

RunResult run(const std::string& arguments) {
    const std::string command = std::string(GTKOSTKA_CLI_PATH) + " " + arguments + " 2>/dev/null";
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult result;
    char buffer[4096];
    std::size_t got = 0;
    while ((got = fread(buffer, 1, sizeof(buffer), pipe)) > 0) {
        result.output.append(buffer, got);
    }
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

}  // namespace

TEST_CASE("degree subcommand reproduces the worked degrees") {
    const RunResult example = run("degree -l 4,2,2,0,0,0 -b 3,1,1,1,1,1");
    CHECK(example.exit_code == 0);
    CHECK(example.output == "6\n");

    const RunResult footnote = run("degree -l 4,2,1 -b 3,3,1");
    CHECK(footnote.exit_code == 0);
    CHECK(footnote.output == "0\n");

    const RunResult checked = run("degree -l 4,2,1 -b 3,3,1 --interpolate");
    CHECK(checked.exit_code == 0);
    CHECK(checked.output == "0\n");
}

TEST_CASE("kostka subcommand counts and verifies") {
    const RunResult count = run("kostka -l 2,1,0 -b 1,1,1");
    CHECK(count.exit_code == 0);
    CHECK(count.output == "2\n");

    const RunResult verified = run("kostka -l 4,2,2,0,0,0 -b 3,1,1,1,1,1 --verify");
    CHECK(verified.exit_code == 0);
    CHECK(verified.output == "10\n");
}

TEST_CASE("poly subcommand prints the polynomial and sampled values") {
    const RunResult poly = run("poly -l 2,1,0 -b 1,1,1");
    CHECK(poly.exit_code == 0);
    CHECK(poly.output == "n + 1\n");

    const RunResult sampled = run("poly -l 2,1,0 -b 1,1,1 --max-n 3");
    CHECK(sampled.exit_code == 0);
    CHECK(sampled.output == "n + 1\nK(1) = 2\nK(2) = 3\nK(3) = 4\n");
}

TEST_CASE("decompose subcommand lists the primitive pieces") {
    const RunResult decomposed = run("decompose -l 4,2,1 -b 3,3,1");
    CHECK(decomposed.exit_code == 0);
    CHECK(decomposed.output == "4,2 | 3,3\n1 | 1\n");
}

TEST_CASE("dim and schur subcommands") {
    CHECK(run("dim -l 4,2,2,0,0,0 -b 3,1,1,1,1,1").output == "6\n");
    const RunResult schur = run("schur -l 2,0");
    CHECK(schur.exit_code == 0);
    CHECK(schur.output == "0,2: 1\n1,1: 1\n2,0: 1\n");
}

TEST_CASE("exit codes distinguish domain and usage errors") {
    CHECK(run("dim -l 2,1,0 -b 3,0,0").exit_code == 1);         // not dominated
    CHECK(run("kostka -l 2,1 -b 1,1,1").exit_code == 1);        // length mismatch
    CHECK(run("kostka -l 1,x -b 1,1").exit_code == 2);          // malformed weight
    CHECK(run("kostka -l 2,1,0").exit_code == 2);               // missing required flag
    CHECK(run("no-such-command").exit_code == 2);
    CHECK(run("--help").exit_code == 0);
}

TEST_CASE("JSON output parses and round-trips") {
    for (const std::string& arguments :
         {std::string("kostka -l 2,1,0 -b 1,1,1 --verify --json"),
          std::string("poly -l 4,2,2,0,0,0 -b 3,1,1,1,1,1 --json"),
          std::string("degree -l 4,2,1 -b 3,3,1 --interpolate --json"),
          std::string("decompose -l 4,2,1 -b 3,3,1 --json"),
          std::string("tiling -l 4,2,1 --json"), std::string("dim -l 2,1,0 -b 1,1,1 --json"),
          std::string("schur -l 2,0 --json")}) {
        CAPTURE(arguments);
        const RunResult result = run(arguments);
        REQUIRE(result.exit_code == 0);
        const auto parsed = nlohmann::ordered_json::parse(result.output);
        CHECK(nlohmann::ordered_json::parse(parsed.dump(2)) == parsed);
    }

    const auto kostka_json =
        nlohmann::ordered_json::parse(run("kostka -l 2,1,0 -b 1,1,1 --verify --json").output);
    CHECK(kostka_json.at("count") == "2");
    CHECK(kostka_json.at("verified") == true);

    const auto poly_json =
        nlohmann::ordered_json::parse(run("poly -l 4,2,1 -b 3,3,1 --json").output);
    CHECK(poly_json.at("degree") == 0);
    CHECK(poly_json.at("poly").at("coeffs") == nlohmann::ordered_json::array({"1"}));
}

TEST_CASE("tiling subcommand consumes pattern files and seeds") {
    const std::filesystem::path path =
        std::filesystem::temp_directory_path() / "gtkostka_cli_pattern.txt";
    {
        std::ofstream out(path);
        out << "1\n2 0\n2 1 0\n";
    }
    const RunResult from_file = run("tiling --pattern " + path.string() + " --json");
    REQUIRE(from_file.exit_code == 0);
    const auto parsed = nlohmann::ordered_json::parse(from_file.output);
    CHECK(parsed.at("kernel_dimension") == 0);
    CHECK(parsed.at("tiling").at("r") == 3);
    std::filesystem::remove(path);

    const RunResult seeded = run("tiling --random 6 --seed 7 --json");
    REQUIRE(seeded.exit_code == 0);
    const RunResult repeated = run("tiling --random 6 --seed 7 --json");
    CHECK(seeded.output == repeated.output);

    CHECK(run("tiling -l 2,1,0 --random 3").exit_code == 2);  // conflicting sources
    CHECK(run("tiling").exit_code == 2);
    CHECK(run("tiling --pattern /nonexistent/path").exit_code == 2);
}
