#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include <json.hpp>

#include "xcartan/report.hpp"

namespace {

struct RunResult {
    int exit_code;
    std::string output;  // stdout + stderr
};

RunResult run(const std::string& args) {
    const std::string cmd = std::string(XCARTAN_BIN) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf{};
    while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
    const int status = pclose(pipe);
    return {WEXITSTATUS(status), out};
}

}  // namespace

TEST_CASE("intersect reproduces the level 11 pair") {
    const auto r = run("intersect --d1 -115 --d2 -267 --ns 11");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("5^1*11^1") != std::string::npos);
    CHECK(r.output.find("4.0073") != std::string::npos);  // log(55)
}

TEST_CASE("intersect --via both agrees and reports json that round-trips") {
    const auto r = run("intersect --d1 -3 --d2 -43 --ns 2 --via both --format json");
    CHECK(r.exit_code == 0);
    const xcartan::ResultRecord rec = xcartan::result_record_from_json(r.output);
    CHECK(rec.exponents.to_string() == "2^6*3^3*5^3");
    CHECK(rec.evaluator == "both");
    CHECK(xcartan::render_json(rec) == r.output);
}

TEST_CASE("csv and json of the same run agree numerically") {
    const auto j = run("intersect --d1 -115 --d2 -267 --ns 11 --format json");
    const auto c = run("intersect --d1 -115 --d2 -267 --ns 11 --format csv");
    CHECK(j.exit_code == 0);
    CHECK(c.exit_code == 0);
    const auto parsed = nlohmann::json::parse(j.output);
    CHECK(c.output.find(parsed["factorization"].get<std::string>()) != std::string::npos);
    CHECK(c.output.find(nlohmann::json(parsed["log_value"].get<double>()).dump()) !=
          std::string::npos);
}

TEST_CASE("degenerate pairs exit 2 and cite the reference value") {
    const auto r = run("intersect --d1 -3 --d2 -12 --ns 11");
    CHECK(r.exit_code == 2);
    CHECK(r.output.find("degenerate") != std::string::npos);
    CHECK(r.output.find("2^1") != std::string::npos);
}

TEST_CASE("usage errors exit 1") {
    CHECK(run("intersect --d1 -115").exit_code == 1);       // missing --d2
    CHECK(run("intersect --d1 -5 --d2 -7").exit_code == 1);  // -5 is not a discriminant
    CHECK(run("nonsense").exit_code != 0);
}

TEST_CASE("classify") {
    const auto r = run("classify --d1 -16 --d2 -163 --ns 11");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("non-fundamental-exact") != std::string::npos);
}

TEST_CASE("components") {
    CHECK(run("components --p 11 --n 1").output == "2\n");
    CHECK(run("components --p 5 --n 2").output == "9\n");
    CHECK(run("components --p 3 --n 1").exit_code == 2);
}

TEST_CASE("s-set") {
    CHECK(run("s-set --a 30705 --b 121").output == "20 44\n");
    CHECK(run("s-set --a 3 --b 1 --format json").output == "[]\n");
}

TEST_CASE("table-check") {
    const auto r = run("table-check --p 11");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("checked 4, matched 4, mismatched 0") != std::string::npos);

    const auto all = run("table-check --threads 4 --format json");
    CHECK(all.exit_code == 0);
    const auto j = nlohmann::json::parse(all.output);
    CHECK(j["checked"] == 77);
    CHECK(j["mismatched"] == 0);

    // identical output across runs and thread counts
    CHECK(run("table-check --threads 7").output == run("table-check").output);
}

TEST_CASE("table-check rejects a broken table file with exit 3") {
    namespace fs = std::filesystem;
    const fs::path p = fs::temp_directory_path() / "xcartan_broken_table.csv";
    std::ofstream(p) << "not,a,table\n";
    CHECK(run("table-check --table " + p.string()).exit_code == 3);
    fs::remove(p);
}

TEST_CASE("p1-model batch file") {
    namespace fs = std::filesystem;
    const fs::path p = fs::temp_directory_path() / "xcartan_points.json";
    std::ofstream(p) << R"([{"q": 3, "x": [0,1], "y": [27,1], "z": [1,0], "m": 1},
                           {"q": 2, "x": [0,1], "y": [1,0], "z": [1,1], "m": 0}])";
    const auto r = run("p1-model --file " + p.string());
    CHECK(r.exit_code == 0);
    const auto j = nlohmann::json::parse(r.output);
    REQUIRE(j.size() == 2);
    CHECK(j[0]["vertex"][0][0] == 9);
    CHECK(j[0]["multiplicities"]["xy"] == 1);
    CHECK(j[1]["vertex"] == nlohmann::json({{1, 0}, {0, 1}}));
    fs::remove(p);
    CHECK(run("p1-model --file /nonexistent.json").exit_code == 3);
}
