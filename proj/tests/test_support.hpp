#pragma once

#include "bankdp/bankdp.hpp"

namespace bankdp::testing {

// One period, W0 = 100.00, a 120.00 loan and a 50.00 deposit, both term 1.
// Used with an injected rate table (eta = 0.10, rho = 0.04) so the ledger
// numbers stay round.
inline Scenario micro_scenario() {
    Scenario sc;
    sc.periods = 1;
    sc.currency_exponent = 2;
    sc.initial_capital = Money::from_minor(10000);
    sc.rate_params = {5.0, 3.0, Money::from_minor(100000), 4.0, Money::from_minor(10000)};
    sc.offers = {
        {"L1_1", 1, Side::Loan, Money::from_minor(12000), 1},
        {"D1_1", 1, Side::Deposit, Money::from_minor(5000), 1},
    };
    return sc;
}

inline RateTable micro_table() {
    RateTable t;
    t.loan_demand = {Money::from_minor(12000)};
    t.deposit_total = {Money::from_minor(5000)};
    t.a = {5.0};
    t.c = {3.0};
    t.rate = {{"L1_1", 0.10}, {"D1_1", 0.04}};
    return t;
}

// Generator parameters that keep coefficient sequences comfortably positive
// for small instances (s is large relative to the demand swings).
inline GeneratorConfig small_config(std::uint64_t seed, int periods, int loans,
                                    int deposits) {
    GeneratorConfig cfg;
    cfg.periods = periods;
    cfg.loans_per_period = loans;
    cfg.deposits_per_period = deposits;
    cfg.seed = seed;
    cfg.principal_min = Money::from_minor(1000);
    cfg.principal_max = Money::from_minor(20000);
    cfg.term_min = 1;
    cfg.term_max = periods;
    cfg.rate_params = {5.0, 3.0, Money::from_minor(100000), 4.0, Money::from_minor(1000000)};
    cfg.initial_capital = Money::from_minor(50000);
    return cfg;
}

// Independent random policy: one bit per offer from a splitmix64 stream.
inline Policy random_policy(const Scenario& sc, std::uint64_t seed) {
    Splitmix64 rng(seed);
    Policy p = reject_all_policy(sc);
    for (Decision& d : p.decisions)
        for (auto& bit : d.bits) bit.accept = rng.next() & 1;
    return p;
}

}  // namespace bankdp::testing
