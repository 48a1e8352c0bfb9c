#include <catch2/catch_amalgamated.hpp>

#include "glab/rng.hpp"
#include "glab/serialization.hpp"

using namespace glab;
using nlohmann::json;

TEST_CASE("sign function JSON schema and round trip", "[serialization]") {
    const SignFunction1D f(-1, {-0.5, 0.25, 1.0});
    const json j = f;
    REQUIRE(j.at("leading_sign") == -1);
    REQUIRE(j.at("breakpoints").size() == 3);

    RngStream rng(7501);
    for (int trial = 0; trial < 100; ++trial) {
        const int m = rng.uniform_int(0, 6);
        std::vector<double> bp(static_cast<std::size_t>(m));
        for (auto& b : bp) b = rng.uniform(-4.0, 4.0);
        const SignFunction1D original(rng.sign(), bp);
        const SignFunction1D restored = json(original).get<SignFunction1D>();
        REQUIRE(restored.leading_sign() == original.leading_sign());
        REQUIRE(restored.breakpoints() == original.breakpoints());
    }
}

TEST_CASE("bound chain report carries all six fields", "[serialization]") {
    const json j = bound_chain(4e-11);
    for (const char* field :
         {"epsilon", "val_dr", "gap_term", "val_eps_upper", "kg_lower", "improvement"})
        REQUIRE(j.contains(field));
    REQUIRE(j.at("epsilon").get<double>() == 4e-11);
    // round-trip exactness of the doubles
    REQUIRE(j.at("kg_lower").get<double>() == bound_chain(4e-11).kg_lower);
}

TEST_CASE("search result JSON embeds functions and config echo", "[serialization]") {
    SearchConfig cfg;
    cfg.restarts = 2;
    cfg.max_breakpoints_per_function = 2;
    cfg.seed = 5;
    const SearchResult result = optimize(dr_game(), cfg);
    const json j = search_result_json(result, cfg);
    REQUIRE(j.at("best_f").contains("breakpoints"));
    REQUIRE(j.at("best_g").contains("leading_sign"));
    REQUIRE(j.at("config").at("restarts") == 2);
    REQUIRE(j.at("config").at("seed") == 5);
    REQUIRE(j.at("best_val").get<double>() == result.best_val);
}

TEST_CASE("verification report JSON", "[serialization]") {
    const auto check = make_check("demo", 1.0, 1.0, 0.1, Comparison::two_sided, "lem:unique-c");
    const json j = check;
    REQUIRE(j.at("passed") == true);
    REQUIRE(j.at("anchor") == "lem:unique-c");
    REQUIRE(j.at("comparison") == "two-sided");
}
