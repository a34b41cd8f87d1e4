#include <catch2/catch_amalgamated.hpp>

#include "test_support.hpp"

using namespace bankdp;

TEST_CASE("zero-offer scenario solves to zero with the empty policy") {
    Scenario sc = testing::micro_scenario();
    sc.offers.clear();
    OptimalPlan plan = solve(sc);
    CHECK(plan.value.is_zero());
    CHECK(plan.policy.decisions.size() == 1);
    CHECK(plan.policy.decisions[0].accepted_ids().empty());
    CHECK(plan.trajectory.feasible);
}

TEST_CASE("micro scenario: accept both for 10.00") {
    Scenario sc = testing::micro_scenario();
    OptimalPlan plan = solve(sc, testing::micro_table());
    CHECK(plan.value.minor() == 1000);
    CHECK(plan.policy.decisions[0].accepted_ids() ==
          std::vector<std::string>{"L1_1", "D1_1"});
    CHECK(plan.trajectory.records[0].cash_end.minor() == 11000);
}

TEST_CASE("value function over a capital grid") {
    Scenario sc = testing::micro_scenario();
    RateTable table = testing::micro_table();

    SECTION("micro grid: tight capital kills the accept-both bundle") {
        auto vf = value_function(sc, table,
                                 {Money::from_minor(7000), Money::from_minor(10000)});
        REQUIRE(vf.size() == 2);
        CHECK(vf[0].second.is_zero());       // 120.00 is not < 70.00 + 50.00
        CHECK(vf[1].second.minor() == 1000);
    }

    SECTION("singleton grid equals solve") {
        auto vf = value_function(sc, table, {sc.initial_capital});
        CHECK(vf[0].second == solve(sc, table).value);
    }

    SECTION("duplicate capitals give duplicate values") {
        auto vf = value_function(sc, table,
                                 {Money::from_minor(10000), Money::from_minor(10000)});
        CHECK(vf[0].second == vf[1].second);
    }

    SECTION("nonpositive capital is rejected") {
        CHECK_THROWS_AS(value_function(sc, table, {Money{}}), Error);
    }
}

TEST_CASE("deposit-funded loans at a loss: reject-all is optimal") {
    // The loan cannot be funded from cash alone, and its rate is below the
    // deposit rate, so every non-empty feasible bundle loses money.
    Scenario sc;
    sc.periods = 2;
    sc.initial_capital = Money::from_minor(10000);
    sc.rate_params = testing::micro_scenario().rate_params;
    sc.offers = {
        {"L1_1", 1, Side::Loan, Money::from_minor(15000), 1},
        {"D1_1", 1, Side::Deposit, Money::from_minor(10000), 1},
        {"L2_1", 2, Side::Loan, Money::from_minor(15000), 1},
        {"D2_1", 2, Side::Deposit, Money::from_minor(10000), 1},
    };
    RateTable table;
    table.loan_demand = {Money::from_minor(15000), Money::from_minor(15000)};
    table.deposit_total = {Money::from_minor(10000), Money::from_minor(10000)};
    table.a = {5.0, 5.0};
    table.c = {3.0, 3.0};
    table.rate = {{"L1_1", 0.02}, {"D1_1", 0.05}, {"L2_1", 0.02}, {"D2_1", 0.05}};

    OptimalPlan dp = solve(sc, table);
    OptimalPlan oracle = brute_force_solve(sc, table);
    CHECK(dp.value.is_zero());
    CHECK(oracle.value.is_zero());
    CHECK(compare_plans(dp, oracle).equal());
}

TEST_CASE("memoization changes stats only") {
    auto cfg = testing::small_config(7, 3, 2, 2);
    Scenario sc = generate_scenario(cfg);
    RateTable table = build_rate_table(sc);
    SolveOptions with_memo, without_memo;
    without_memo.use_memo = false;
    OptimalPlan a = solve(sc, table, with_memo);
    OptimalPlan b = solve(sc, table, without_memo);
    CHECK(a.value == b.value);
    CHECK(a.policy == b.policy);
    CHECK(b.stats.memo_hits == 0);
    CHECK(b.stats.states_stored == 0);
}

TEST_CASE("solve is deterministic down to the serialized plan") {
    Scenario sc = generate_scenario(testing::small_config(11, 3, 2, 2));
    CHECK(write_plan(solve(sc)) == write_plan(solve(sc)));
}

TEST_CASE("value is monotone in initial capital") {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        Scenario sc = generate_scenario(testing::small_config(seed, 2, 2, 2));
        RateTable table = build_rate_table(sc);
        auto vf = value_function(sc, table,
                                 {Money::from_minor(20000), Money::from_minor(50000),
                                  Money::from_minor(100000)});
        CHECK(vf[0].second <= vf[1].second);
        CHECK(vf[1].second <= vf[2].second);
    }
}

TEST_CASE("node bound is an explicit capacity error") {
    Scenario sc = generate_scenario(testing::small_config(3, 3, 3, 3));
    SolveOptions opts;
    opts.max_nodes = 5;
    CHECK_THROWS_AS(solve(sc, opts), CapacityError);
}
