#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include "gbond/report.hpp"

using namespace gbond;
using json = nlohmann::json;

namespace {

// elapsed_ms is excluded from the determinism contract
json parsed_without_timing(const std::string& text) {
    json j = json::parse(text);
    for (auto& entry : j["entries"])
        entry.erase("elapsed_ms");
    return j;
}

} // namespace

TEST_CASE("verify_theorem over the paper's small cases") {
    const VerificationReport report = verify_theorem(4, 6);
    REQUIRE(report.entries.size() == 4);
    CHECK(report.all_pass());
    CHECK(report.passed == 4);
    CHECK(report.failed == 0);

    const std::vector<int> bondage{1, 2, 3, 3};
    for (std::size_t i = 0; i < report.entries.size(); ++i) {
        CHECK(report.entries[i].bondage.b == bondage[i]);
        CHECK(report.entries[i].domination.gamma == 2);
        CHECK(report.entries[i].pass);
    }
    CHECK(report.entries[2].partition.parts() == std::vector<int>{6});
    CHECK(report.entries[3].partition.parts() == std::vector<int>{3, 3});
}

TEST_CASE("verify_theorem n=7 has two graphs, both b=4") {
    const VerificationReport report = verify_theorem(7, 7);
    REQUIRE(report.entries.size() == 2);
    CHECK(report.entries[0].partition.parts() == std::vector<int>{7});
    CHECK(report.entries[1].partition.parts() == std::vector<int>{4, 3});
    for (const auto& e : report.entries)
        CHECK(e.bondage.b == 4);
}

TEST_CASE("range validation") {
    CHECK_THROWS_AS(verify_theorem(3, 5), std::invalid_argument);
    CHECK_THROWS_AS(verify_theorem(6, 5), std::invalid_argument);
    CHECK_THROWS_AS(verify_theorem(4, 65), std::invalid_argument);
    CHECK_THROWS_AS(verify_theorem(4, 5, 0), std::invalid_argument);
}

TEST_CASE("json layout carries certificates that re-verify") {
    const json j = json::parse(to_json(verify_theorem(4, 6)));
    CHECK(j["summary"]["status"] == "pass");
    CHECK(j["summary"]["graphs"] == 4);
    const auto& first = j["entries"][0];
    CHECK(first["n"] == 4);
    CHECK(first["partition"] == json::array({4}));
    CHECK(first["gamma"] == 2);
    CHECK(first["bondage"] == 1);
    CHECK(first["expected_bondage"] == 1);
    CHECK(first["status"] == "pass");
    CHECK(first["gamma_witness"].size() == 2);
    CHECK(first["bondage_witness"].size() == 1);
    CHECK(first.contains("elapsed_ms"));
}

TEST_CASE("reports are deterministic apart from timing") {
    const json a = parsed_without_timing(to_json(verify_theorem(4, 7)));
    const json b = parsed_without_timing(to_json(verify_theorem(4, 7)));
    CHECK(a == b);
}

TEST_CASE("parallel verification reduces to the sequential result") {
    const json seq = parsed_without_timing(to_json(verify_theorem(4, 8, 1)));
    const json par = parsed_without_timing(to_json(verify_theorem(4, 8, 4)));
    CHECK(seq == par);
}

TEST_CASE("known values all match the classical formulas") {
    const KnownValueReport report = known_values();
    REQUIRE(report.rows.size() == 10);
    CHECK(report.all_pass());
    CHECK(report.rows[0].name == "K2");
    CHECK(report.rows[0].computed == 1);
    CHECK(report.rows[4].name == "K6");
    CHECK(report.rows[4].computed == 3);
    CHECK(report.rows[7].name == "K_{2,2}");
    CHECK(report.rows[7].computed == 3);
    CHECK(report.rows[9].name == "K_{2,2,2,2}");
    CHECK(report.rows[9].computed == 7);

    const json j = json::parse(to_json(report));
    CHECK(j["summary"]["status"] == "pass");
    CHECK(j["rows"].size() == 10);
}

TEST_CASE("tables render one row per graph") {
    const std::string table = to_table(verify_theorem(4, 6));
    CHECK(table.find("3+3") != std::string::npos);
    CHECK(table.find("PASS") != std::string::npos);
    const std::string kv = to_table(known_values());
    CHECK(kv.find("K_{2,2,2}") != std::string::npos);
    CHECK(kv.find("PASS") != std::string::npos);
}
