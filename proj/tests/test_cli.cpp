#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "senslab/serialize.hpp"
#include "senslab/truth_table.hpp"
#include "support/run_cli.hpp"

using clitest::run;
using nlohmann::json;

namespace {

struct TempFile {
    explicit TempFile(const std::string& name)
        : path("cli_test_" + name) {}
    ~TempFile() { std::remove(path.c_str()); }
    std::string path;
};

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

}  // namespace

TEST_CASE("construct emits the family document") {
    const auto result = run("construct --family theorem31 --n 512");
    REQUIRE(result.exit_code == 0);
    const json doc = json::parse(result.output);
    CHECK(doc.at("k") == 8);
    CHECK(doc.at("support").size() == 46);

    const auto rub = run("construct --family rubinstein --k 4");
    REQUIRE(rub.exit_code == 0);
    CHECK(json::parse(rub.output).at("n") == 16);
}

TEST_CASE("construct rejects out-of-range parameters") {
    CHECK(run("construct --family theorem31 --n 100").exit_code == 2);
    CHECK(run("construct --family auxiliary-g --k 7").exit_code == 2);
    CHECK(run("construct --family nosuch --n 8").exit_code == 2);
    CHECK(run("definitely-not-a-subcommand").exit_code == 2);
}

TEST_CASE("construct can write the dense table") {
    TempFile table("construct.tt");
    const auto result = run("construct --family rubinstein --k 3 --table-file " +
                            table.path + " --out /dev/null");
    REQUIRE(result.exit_code == 0);
    std::ifstream in(table.path);
    const senslab::TruthTable reread = senslab::read_table_file(in);
    CHECK(reread.arity() == 9);
}

TEST_CASE("analyze computes exhaustive measures for dense families") {
    const auto result =
        run("analyze --family rubinstein --k 4 --measures s,bs --format json");
    REQUIRE(result.exit_code == 0);
    const json doc = json::parse(result.output);
    REQUIRE(doc.at("reports").size() == 2);
    CHECK(doc.at("reports").at(0).at("measure") == "s");
    CHECK(doc.at("reports").at(0).at("value") == 8);
    CHECK(doc.at("reports").at(0).at("exhausted") == false);
    CHECK(doc.at("reports").at(1).at("measure") == "bs");
    CHECK(doc.at("reports").at(1).at("value") == 8);
}

TEST_CASE("analyze reads truth table files") {
    TempFile table("and8.tt");
    {
        std::string entries(256, '0');
        entries[255] = '1';
        std::ofstream out(table.path);
        out << "n=8\n" << entries << "\n";
    }
    const auto result =
        run("analyze --table-file " + table.path + " --measures s");
    REQUIRE(result.exit_code == 0);
    CHECK(result.output.find("s = 8") != std::string::npos);
}

TEST_CASE("analyze beyond the dense limit reports flagged lower bounds") {
    const auto result =
        run("analyze --family theorem31 --n 4096 --measures s --format json");
    REQUIRE(result.exit_code == 3);
    const json doc = json::parse(result.output);
    const json& report = doc.at("reports").at(0);
    CHECK(report.at("method") == "witness");
    CHECK(report.at("exhausted") == true);
    CHECK(report.at("value").get<std::size_t>() >= 94);  // 6k - 2 at k = 16
}

TEST_CASE("certify families") {
    const auto t31 = run("certify --family theorem31 --n 512");
    CHECK(t31.exit_code == 0);
    CHECK(t31.output.find("Claim3.3a: 46 pass") != std::string::npos);
    CHECK(t31.output.find("Claim3.3b: 8 pass") != std::string::npos);
    CHECK(t31.output.find("Theorem4.1") != std::string::npos);

    const auto random = run("certify --family random --n 14 --k 4 --seed 3");
    CHECK(random.exit_code == 0);
    CHECK(random.output.find("Lemma4.2") != std::string::npos);
    CHECK(random.output.find("Lemma4.3") != std::string::npos);
    CHECK(random.output.find("Lemma4.4") != std::string::npos);

    const auto t32 = run("certify --family theorem32 --n 100 --format json");
    CHECK(t32.exit_code == 0);
    const json doc = json::parse(t32.output);
    CHECK(doc.at("all_pass") == true);

    CHECK(run("certify --family theorem31 --n 100").exit_code == 2);
}

TEST_CASE("certify round trips through pattern files") {
    TempFile pattern("pattern.json");
    REQUIRE(run("construct --family random --n 12 --k 3 --seed 5 --out " +
                pattern.path)
                .exit_code == 0);
    const auto result = run("certify --pattern-file " + pattern.path);
    CHECK(result.exit_code == 0);
}

TEST_CASE("scan emits the scaling table") {
    const auto result = run("scan --relation cube --k 8..9");
    REQUIRE(result.exit_code == 0);
    std::istringstream lines(result.output);
    std::string line;
    std::getline(lines, line);
    CHECK(line == "n,k,s1_witness,s0_witness,expected_s1,expected_s0,pass");
    std::getline(lines, line);
    CHECK(line == "512,8,46,8,46,8,pass");
    std::getline(lines, line);
    CHECK(line == "729,9,52,9,52,9,pass");

    CHECK(run("scan --relation square --k 8..9").exit_code == 0);
    CHECK(run("scan --relation cube --k 4..5").exit_code == 1);
    CHECK(run("scan --relation diagonal --k 8..9").exit_code == 2);
}

TEST_CASE("budget exhaustion surfaces as exit 3") {
    const auto result = run(
        "analyze --family rubinstein --k 4 --measures bs --node-cap 3 "
        "--format json");
    CHECK(result.exit_code == 3);
    const json doc = json::parse(result.output);
    CHECK(doc.at("reports").at(0).at("exhausted") == true);
}

TEST_CASE("identical invocations give byte-identical output") {
    const std::string commands[] = {
        "certify --family theorem31 --n 512 --format json",
        "construct --family random --n 14 --k 4 --seed 3",
        "scan --relation cube --k 8..10",
        "analyze --family rubinstein --k 4 --measures s,s0,s1 --format json",
    };
    for (const auto& command : commands) {
        const auto first = run(command);
        const auto second = run(command);
        REQUIRE(first.exit_code == second.exit_code);
        CHECK(first.output == second.output);
        CHECK_FALSE(first.output.empty());
    }
}
