#include <catch2/catch_amalgamated.hpp>

#include "test_support.hpp"

using namespace bankdp;

namespace {

const char* kMinimalDoc = R"({
  "schema_version": 1,
  "periods": 1,
  "currency_exponent": 2,
  "initial_capital_minor": 10000,
  "rate_params": {"a0": 5.0, "c0": 3.0, "b1_minor": 100000, "b2_periods": 4.0, "s_minor": 10000},
  "offers": [
    {"id": "L1_1", "period": 1, "side": "loan", "principal_minor": 12000, "term_periods": 1},
    {"id": "D1_1", "period": 1, "side": "deposit", "principal_minor": 5000, "term_periods": 1}
  ]
})";

}  // namespace

TEST_CASE("minimal scenario document parses") {
    Scenario sc = parse_scenario(kMinimalDoc);
    CHECK(sc.periods == 1);
    CHECK(sc.initial_capital.minor() == 10000);
    REQUIRE(sc.offers.size() == 2);
    CHECK(sc.offers[0].id == "L1_1");
    CHECK(sc.offers[0].side == Side::Loan);
    CHECK(sc.offers[1].side == Side::Deposit);
    CHECK(sc.offers[1].principal.minor() == 5000);
    CHECK(validate_scenario(sc).empty());
}

TEST_CASE("strict schema errors name the offending field") {
    SECTION("missing initial_capital_minor") {
        ordered_json doc = ordered_json::parse(kMinimalDoc);
        doc.erase("initial_capital_minor");
        CHECK_THROWS_WITH(scenario_from_json(doc),
                          Catch::Matchers::ContainsSubstring(
                              "missing field \"initial_capital_minor\""));
    }
    SECTION("unknown top-level field") {
        Scenario sc = parse_scenario(kMinimalDoc);
        ordered_json doc = scenario_to_json(sc);
        doc["extra"] = 1;
        CHECK_THROWS_WITH(scenario_from_json(doc),
                          Catch::Matchers::ContainsSubstring("unknown field \"extra\""));
    }
    SECTION("fractional minor units") {
        std::string doc = kMinimalDoc;
        doc.replace(doc.find("\"principal_minor\": 12000"), 24,
                    "\"principal_minor\": 120.5");
        CHECK_THROWS_WITH(parse_scenario(doc),
                          Catch::Matchers::ContainsSubstring("minor units must be integers"));
    }
    SECTION("bad side enum") {
        std::string doc = kMinimalDoc;
        doc.replace(doc.find("\"loan\""), 6, "\"bond\"");
        CHECK_THROWS_AS(parse_scenario(doc), ParseError);
    }
    SECTION("syntax error") {
        CHECK_THROWS_AS(parse_scenario("{nope"), ParseError);
    }
}

TEST_CASE("scenario round-trips byte-stably") {
    Scenario sc = generate_scenario(testing::small_config(42, 3, 2, 2));
    std::string text = write_scenario(sc);
    Scenario back = parse_scenario(text);
    CHECK(back == sc);
    CHECK(write_scenario(back) == text);
}

TEST_CASE("generator is a pure function of its config") {
    auto cfg = testing::small_config(9, 3, 2, 1);
    CHECK(write_scenario(generate_scenario(cfg)) == write_scenario(generate_scenario(cfg)));

    auto cfg2 = cfg;
    cfg2.seed = 10;
    CHECK(write_scenario(generate_scenario(cfg)) != write_scenario(generate_scenario(cfg2)));
}

TEST_CASE("generator respects shape options") {
    SECTION("no loans") {
        auto cfg = testing::small_config(1, 2, 0, 2);
        Scenario sc = generate_scenario(cfg);
        for (const Offer& o : sc.offers) CHECK(o.side == Side::Deposit);
        CHECK(sc.offers.size() == 4);
    }
    SECTION("terms are clipped to the horizon") {
        auto cfg = testing::small_config(2, 3, 2, 2);
        cfg.term_min = 3;
        cfg.term_max = 5;
        Scenario sc = generate_scenario(cfg);
        for (const Offer& o : sc.offers) CHECK(o.maturity_period() <= sc.periods);
    }
    SECTION("impossible rate params are an error") {
        auto cfg = testing::small_config(1, 1, 1, 1);
        cfg.rate_params.a0 = 1.0;
        cfg.rate_params.c0 = 5.0;
        CHECK_THROWS_AS(generate_scenario(cfg), Error);
    }
}

TEST_CASE("csv report matches the micro trace line") {
    Scenario sc = testing::micro_scenario();
    OptimalPlan plan = solve(sc, testing::micro_table());
    std::string csv = write_report(plan, ReportFormat::Csv);
    CHECK(csv ==
          "period,cash_end_minor,profit_cum_minor,balance_minor,accepted_ids\n"
          "1,11000,1000,0,L1_1;D1_1\n");
}

TEST_CASE("plan json round-trips value and policy") {
    Scenario sc = generate_scenario(testing::small_config(13, 2, 2, 1));
    OptimalPlan plan = solve(sc);
    PlanDoc doc = parse_plan(write_plan(plan));
    CHECK(doc.value == plan.value);
    CHECK(policy_from_accepted(sc, doc.policy) == plan.policy);
    CHECK(doc.trajectory == plan.trajectory.records);
    CHECK(doc.stats.nodes_expanded == plan.stats.nodes_expanded);
}

TEST_CASE("plans reject unknown offers") {
    Scenario sc = testing::micro_scenario();
    CHECK_THROWS_WITH(policy_from_accepted(sc, {{1, {"L9_9"}}}),
                      Catch::Matchers::ContainsSubstring("unknown offer"));
}
