#include <doctest.h>

#include <json.hpp>

#include "helpers.hpp"
#include "ncnat/term.hpp"

using json = nlohmann::json;
using testutil::run_cli;

TEST_CASE("cli dseq: table through magnitude 7") {
    auto result = run_cli("--no-cache --output json dseq --max 7");
    REQUIRE(result.exit_code == 0);
    json out = json::parse(result.output);
    REQUIRE(out["rows"].size() == 7);
    std::vector<long long> terms, classes;
    for (const auto& row : out["rows"]) {
        terms.push_back(row["terms"].get<long long>());
        classes.push_back(row["classes"].get<long long>());
    }
    CHECK(terms == std::vector<long long>{1, 1, 2, 5, 14, 42, 132});
    CHECK(classes == std::vector<long long>{1, 1, 2, 5, 13, 36, 102});

    auto one = run_cli("--no-cache dseq --max 1");
    CHECK(one.exit_code == 0);
    CHECK(one.output == "n\tC(n)\tD(n)\n1\t1\t1\n");
}

TEST_CASE("cli eq: exit codes distinguish equal, unequal, malformed, over budget") {
    CHECK(run_cli("--no-cache eq \"((1 (1 1)) (1 1))\" \"((1 1) ((1 1) 1))\"").exit_code == 0);
    CHECK(run_cli("--no-cache eq \"(1 (1 1))\" \"((1 1) 1)\"").exit_code == 5);
    CHECK(run_cli("--no-cache eq \"(1\" \"1\"").exit_code == 3);
    CHECK(run_cli("--no-cache --n-max 2 eq \"(1 (1 1))\" \"((1 1) 1)\"").exit_code == 4);
    CHECK(run_cli("--no-cache eq onlyone").exit_code == 2);

    auto result = run_cli("--no-cache --output json eq \"(1 1)\" \"(1 1)\"");
    CHECK(result.exit_code == 0);
    CHECK(json::parse(result.output)["equal"] == true);
}

TEST_CASE("cli mul: the worked product") {
    auto result = run_cli("--no-cache mul \"(1 1)\" \"(1 (1 1))\"");
    CHECK(result.exit_code == 0);
    CHECK(result.output == "((1 (1 1)) (1 (1 1)))\n");
}

TEST_CASE("cli invariant: values and tables") {
    auto value = run_cli("--no-cache invariant --spec ell-a \"(1 (1 1))\"");
    CHECK(value.exit_code == 0);
    CHECK(value.output == "3 - q\n");

    auto custom = run_cli("--no-cache invariant --spec custom:1+q:1-q \"(1 (1 1))\"");
    CHECK(custom.exit_code == 0);
    CHECK(custom.output == "3 - q\n");

    auto table = run_cli("--no-cache --output json invariant --spec ell-a --table 4");
    REQUIRE(table.exit_code == 0);
    json out = json::parse(table.output);
    CHECK(out["rows"].size() == 5);
    bool found = false;
    for (const auto& row : out["rows"])
        if (row["class_rep"] == "((1 1) (1 1))" && row["value"] == "4") found = true;
    CHECK(found);

    CHECK(run_cli("--no-cache invariant --spec nonsense \"1\"").exit_code == 3);
    CHECK(run_cli("--no-cache invariant").exit_code == 2);
}

TEST_CASE("cli enumerate: terms and classes") {
    auto terms = run_cli("--no-cache --output json enumerate 3");
    REQUIRE(terms.exit_code == 0);
    json out = json::parse(terms.output);
    CHECK(out["terms"] == json::array({"(1 (1 1))", "((1 1) 1)"}));

    auto classes = run_cli("--no-cache --output json enumerate 5 --classes");
    REQUIRE(classes.exit_code == 0);
    json cls = json::parse(classes.output);
    REQUIRE(cls["classes"].size() == 13);
    std::size_t total = 0;
    for (const auto& row : cls["classes"]) total += row["size"].get<std::size_t>();
    CHECK(total == 14);
}

TEST_CASE("cli factor and search-noncancel") {
    auto factored = run_cli("--no-cache --output json factor \"((1 1) (1 1))\"");
    REQUIRE(factored.exit_code == 0);
    json out = json::parse(factored.output);
    CHECK(out["irreducible"] == false);
    CHECK(out["factorizations"] == json::array({json::array({"(1 1)", "(1 1)"})}));

    auto witnesses =
        run_cli("--no-cache --output json search-noncancel --magnitude 8 --multiplier-max 2");
    REQUIRE(witnesses.exit_code == 0);
    json w = json::parse(witnesses.output);
    REQUIRE(w["witnesses"].size() == 1);
    CHECK(w["witnesses"][0]["a"] == "(1 1)");
    CHECK(w["witnesses"][0]["b1"] == "((1 (1 1)) (((1 1) (1 1)) 1))");
    CHECK(w["witnesses"][0]["b2"] == "((1 (1 (1 1))) (((1 1) 1) 1))");
}

TEST_CASE("cli collisions") {
    auto result = run_cli("--no-cache --output json collisions 4 --spec ell");
    REQUIRE(result.exit_code == 0);
    json out = json::parse(result.output);
    REQUIRE(out["pairs"].size() == 1);
    CHECK(out["pairs"][0]["first"] == "((1 1) (1 1))");
    CHECK(out["pairs"][0]["second"] == "((1 (1 1)) 1)");
    CHECK(out["pairs"][0]["value"] == "1 + 2q + q^2");
}

TEST_CASE("cli verify-chain: fixture passes, a broken chain fails") {
    std::string fixture = (testutil::fixture_dir() / "noncancel_chain.txt").string();
    auto good = run_cli("--no-cache --output json verify-chain " + fixture);
    REQUIRE(good.exit_code == 0);
    json out = json::parse(good.output);
    CHECK(out["valid"] == true);
    CHECK(out["terms"] == 12);
    CHECK(out["steps"].size() == 11);

    // A two-line chain that is not a single rewrite.
    std::string bad_path = "/tmp/ncnat-bad-chain-" + std::to_string(::getpid()) + ".txt";
    {
        std::ofstream bad(bad_path);
        bad << "(1 (1 1))\n((1 1) 1)\n";
    }
    auto bad = run_cli("--no-cache verify-chain " + bad_path);
    CHECK(bad.exit_code == 6);
    std::filesystem::remove(bad_path);
}

TEST_CASE("cli: text and json agree on dseq content") {
    auto text = run_cli("--no-cache dseq --max 6");
    auto as_json = run_cli("--no-cache --output json dseq --max 6");
    REQUIRE(text.exit_code == 0);
    REQUIRE(as_json.exit_code == 0);
    json rows = json::parse(as_json.output)["rows"];
    std::istringstream lines(text.output);
    std::string header;
    std::getline(lines, header);
    for (const auto& row : rows) {
        std::string line;
        REQUIRE(std::getline(lines, line));
        std::istringstream cells(line);
        long long n, c, d;
        cells >> n >> c >> d;
        CHECK(n == row["n"].get<long long>());
        CHECK(c == row["terms"].get<long long>());
        CHECK(d == row["classes"].get<long long>());
    }
}

TEST_CASE("cli bordered") {
    auto empty = run_cli("--no-cache --output json bordered --max-inner 3");
    REQUIRE(empty.exit_code == 0);
    CHECK(json::parse(empty.output)["pairs"].empty());

    auto pairs = run_cli("--no-cache --output json bordered --max-inner 4");
    REQUIRE(pairs.exit_code == 0);
    json parsed = json::parse(pairs.output);
    bool found = false;
    for (const auto& p : parsed["pairs"])
        if (p["first"] == "((1 (1 1)) (((1 1) (1 1)) 1))" &&
            p["second"] == "((1 (1 (1 1))) (((1 1) 1) 1))")
            found = true;
    CHECK(found);
}
