#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "eulersum/jsonio.hpp"

using namespace eulersum;

TEST_CASE("lincomb JSON round-trip and term order") {
    LinComb u;
    u.add_term(Word::parse("1,0"), Rat(-3, 2));
    u.add_term(Word::parse("-1"), Rat(5));
    Json j = lincomb_to_json(u);
    REQUIRE(j.size() == 2);
    // shorter word first under the deterministic order
    CHECK(j[0]["word"] == "-1");
    CHECK(j[0]["coeff"] == "5");
    CHECK(j[1]["coeff"] == "-3/2");
    CHECK(lincomb_from_json(j) == u);
}

TEST_CASE("alpha JSON and CSV") {
    RelationTable t(3);
    AlphaMatrix a = solve_alpha(assemble(3, 3, t));
    Json j = alpha_to_json(a);
    CHECK(j["weight"] == 3);
    CHECK(j["alpha"][0][0] == "-4/3");
    CHECK(j["denominator_lcm"] == "3");
    CHECK(j["lcm_factorization"]["3"] == 1);
    AlphaMatrix back = alpha_from_json(j);
    CHECK(alpha_to_json(back) == j);

    std::string csv = alpha_to_csv(a);
    CHECK(csv.find("\"3\",-4/3,0,0") != std::string::npos);
    CHECK(csv.find("index,\"-3\",\"1,1,-1\",\"2,-1\"") == 0);
}

TEST_CASE("identical JSON across repeated computation") {
    RelationTable t1(3), t2(3);
    std::string a = alpha_to_json(solve_alpha(assemble(3, 3, t1, 1))).dump();
    std::string b = alpha_to_json(solve_alpha(assemble(3, 3, t2, 2))).dump();
    CHECK(a == b);
}

TEST_CASE("alpha cache round-trip and version guard") {
    std::string dir = (std::filesystem::temp_directory_path() / "eulersum-cache-test").string();
    std::filesystem::remove_all(dir);
    RelationTable t(3);
    AlphaMatrix a = solve_alpha(assemble(3, 3, t));
    REQUIRE(save_alpha_cache(a, dir));
    AlphaMatrix b;
    REQUIRE(load_alpha_cache(3, 3, dir, b));
    CHECK(alpha_to_json(a) == alpha_to_json(b));
    CHECK_FALSE(load_alpha_cache(3, 2, dir, b));  // not cached
    // corrupt the version tag: the loader must refuse
    {
        std::ifstream in(dir + "/alpha_k3_d3.json");
        Json j;
        in >> j;
        j["cache_version"] = "stale";
        std::ofstream out(dir + "/alpha_k3_d3.json");
        out << j.dump();
    }
    CHECK_FALSE(load_alpha_cache(3, 3, dir, b));
    std::filesystem::remove_all(dir);
}
