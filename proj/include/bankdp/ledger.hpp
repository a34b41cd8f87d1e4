#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "bankdp/domain.hpp"
#include "bankdp/rate_engine.hpp"

namespace bankdp {

// Feasibility constraints, checked every period.
//   Budget:     accepted loan principal must stay below cash + accepted deposits
//               (strictly: the bank keeps positive cash after origination).
//   Settlement: cash after origination plus maturing loan payouts must cover
//               maturing deposit payouts.
//   Liquidity:  end-of-period cash > 0.
//   NoLoss:     end-of-period cash >= W0.
enum class Constraint { Budget = 1, Settlement = 2, Liquidity = 3, NoLoss = 4 };

inline const char* constraint_name(Constraint c) {
    switch (c) {
        case Constraint::Budget: return "C1";
        case Constraint::Settlement: return "C2";
        case Constraint::Liquidity: return "C3";
        case Constraint::NoLoss: return "C4";
    }
    return "?";
}

// principal + round_half_up(principal * rate). The single rounding site of
// the whole system; payouts are fixed here, at origination.
inline Money accrue_payout(Money principal, double rate) {
    double interest = static_cast<double>(principal.minor()) * rate;
    double rounded = std::floor(interest + 0.5);
    if (!(rounded >= 0.0) || rounded >= static_cast<double>(Money::kMaxMagnitude))
        throw OverflowError("interest accrual out of range");
    return principal + Money::from_minor(static_cast<std::int64_t>(rounded));
}

// An open contract on the bank's books. `payout` is principal plus accrued
// interest, due in full at `maturity_period`.
struct LedgerEntry {
    std::string offer_id;
    Side side = Side::Loan;
    Money principal;
    Money payout;
    int maturity_period = 0;

    bool operator==(const LedgerEntry&) const = default;
};

// Outstanding deposit principal minus outstanding loan principal (A_i).
inline Money balance_capital(std::span<const LedgerEntry> outstanding) {
    Money b;
    for (const LedgerEntry& e : outstanding)
        b += e.side == Side::Deposit ? e.principal : -e.principal;
    return b;
}

// Bank state between periods. Immutable in use: step() returns a new value.
// Invariant: cash = W0 + realized_profit + balance_capital(outstanding).
struct BankState {
    int next_period = 1;
    Money cash;                 // W(t_{next_period - 1})
    Money initial_capital;      // W0, carried for the no-loss check
    std::vector<LedgerEntry> outstanding;
    Money realized_profit;      // cumulative F

    static BankState initial(const Scenario& scenario) {
        BankState s;
        s.cash = scenario.initial_capital;
        s.initial_capital = scenario.initial_capital;
        return s;
    }

    bool operator==(const BankState&) const = default;
};

struct ConstraintViolation {
    int period = 0;
    Constraint constraint = Constraint::Budget;

    bool operator==(const ConstraintViolation&) const = default;
};

struct StepResult {
    std::optional<BankState> state;           // set on success
    std::optional<ConstraintViolation> violation;

    bool ok() const { return state.has_value(); }
};

namespace detail {

// Decision bit order: deposits first, then loans, each in file order.
inline std::vector<std::size_t> decision_bit_order(std::span<const Offer> offers) {
    std::vector<std::size_t> order;
    order.reserve(offers.size());
    for (std::size_t i = 0; i < offers.size(); ++i)
        if (offers[i].side == Side::Deposit) order.push_back(i);
    for (std::size_t i = 0; i < offers.size(); ++i)
        if (offers[i].side == Side::Loan) order.push_back(i);
    return order;
}

inline Decision decision_from_mask(int period, std::span<const Offer> offers,
                                   std::span<const std::size_t> order, std::uint32_t mask) {
    Decision d;
    d.period = period;
    d.bits.resize(offers.size());
    for (std::size_t i = 0; i < offers.size(); ++i) d.bits[i].offer_id = offers[i].id;
    const std::size_t m = offers.size();
    for (std::size_t j = 0; j < m; ++j)
        d.bits[order[j]].accept = (mask >> (m - 1 - j)) & 1u;
    return d;
}

// Accepted totals per side; the decision must cover exactly these offers.
inline std::pair<Money, Money> accepted_totals(const Decision& decision,
                                               std::span<const Offer> offers) {
    if (decision.bits.size() != offers.size())
        throw Error("decision does not cover the period's offers");
    Money loans, deposits;
    for (std::size_t i = 0; i < offers.size(); ++i) {
        if (decision.bits[i].offer_id != offers[i].id)
            throw Error("decision offer id mismatch: " + decision.bits[i].offer_id);
        if (!decision.bits[i].accept) continue;
        (offers[i].side == Side::Loan ? loans : deposits) += offers[i].principal;
    }
    return {loans, deposits};
}

}  // namespace detail

inline constexpr std::size_t kMaxOffersPerPeriod = 20;  // 2^20 decision cap

// Every bit assignment over the period's offers that passes the budget
// constraint, in lexicographic bit-vector order (all-zeros first).
// Settlement/liquidity/no-loss depend on the post-flow state and are
// checked in step().
inline std::vector<Decision> enumerate_decisions(const BankState& state,
                                                 std::span<const Offer> offers) {
    const std::size_t m = offers.size();
    if (m > kMaxOffersPerPeriod)
        throw CapacityError("period " + std::to_string(state.next_period) + " has " +
                            std::to_string(m) + " offers; decision bound is 2^" +
                            std::to_string(kMaxOffersPerPeriod));
    auto order = detail::decision_bit_order(offers);
    std::vector<Decision> out;
    for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
        Decision d = detail::decision_from_mask(state.next_period, offers, order, mask);
        auto [loans, deposits] = detail::accepted_totals(d, offers);
        if (loans < state.cash + deposits) out.push_back(std::move(d));
    }
    return out;
}

// One period: originate accepted contracts, mature due ones, check the
// constraints. Returns the successor state or the first violated constraint.
inline StepResult step(const BankState& state, const Decision& decision,
                       std::span<const Offer> offers, const RateTable& table) {
    const int period = state.next_period;
    if (decision.period != period)
        throw Error("decision period " + std::to_string(decision.period) +
                    " != state period " + std::to_string(period));

    auto [loans, deposits] = detail::accepted_totals(decision, offers);
    if (!(loans < state.cash + deposits))
        return {std::nullopt, ConstraintViolation{period, Constraint::Budget}};

    BankState next = state;
    next.next_period = period + 1;

    // (a) originate
    next.cash = next.cash + deposits - loans;
    for (std::size_t i = 0; i < offers.size(); ++i) {
        if (!decision.bits[i].accept) continue;
        const Offer& o = offers[i];
        next.outstanding.push_back(LedgerEntry{
            o.id, o.side, o.principal, accrue_payout(o.principal, table.rate_for(o.id)),
            o.maturity_period()});
    }

    // (b) mature
    Money loan_payouts, deposit_payouts;
    Money matured_profit;
    std::vector<LedgerEntry> still_open;
    still_open.reserve(next.outstanding.size());
    for (const LedgerEntry& e : next.outstanding) {
        if (e.maturity_period != period) {
            still_open.push_back(e);
            continue;
        }
        Money interest = e.payout - e.principal;
        if (e.side == Side::Loan) {
            loan_payouts += e.payout;
            matured_profit += interest;
        } else {
            deposit_payouts += e.payout;
            matured_profit -= interest;
        }
    }

    // (c) constraints on the settled state
    if (next.cash + loan_payouts < deposit_payouts)
        return {std::nullopt, ConstraintViolation{period, Constraint::Settlement}};
    next.cash = next.cash + loan_payouts - deposit_payouts;
    if (next.cash <= Money{})
        return {std::nullopt, ConstraintViolation{period, Constraint::Liquidity}};
    if (next.cash < state.initial_capital)
        return {std::nullopt, ConstraintViolation{period, Constraint::NoLoss}};

    next.outstanding = std::move(still_open);
    next.realized_profit += matured_profit;
    return {std::move(next), std::nullopt};
}

struct PeriodRecord {
    int period = 0;
    Money cash_end;
    Money profit_cum;
    Money balance;
    std::vector<std::string> accepted;

    bool operator==(const PeriodRecord&) const = default;
};

// Full simulation record of one policy. Stops at the first violation.
struct Trajectory {
    std::vector<PeriodRecord> records;
    bool feasible = false;
    std::optional<ConstraintViolation> violation;

    Money final_profit() const {
        return records.empty() ? Money{} : records.back().profit_cum;
    }
};

inline Trajectory simulate_policy(const Scenario& scenario, const Policy& policy,
                                  const RateTable& table) {
    if (static_cast<int>(policy.decisions.size()) != scenario.periods)
        throw Error("policy has " + std::to_string(policy.decisions.size()) +
                    " decisions for " + std::to_string(scenario.periods) + " periods");

    Trajectory traj;
    BankState state = BankState::initial(scenario);
    for (int i = 1; i <= scenario.periods; ++i) {
        const Decision& d = policy.decisions[static_cast<std::size_t>(i - 1)];
        auto offers = scenario.offers_in_period(i);
        StepResult r = step(state, d, offers, table);
        if (!r.ok()) {
            traj.violation = r.violation;
            return traj;
        }
        state = std::move(*r.state);
        traj.records.push_back(PeriodRecord{i, state.cash, state.realized_profit,
                                            balance_capital(state.outstanding),
                                            d.accepted_ids()});
    }
    traj.feasible = true;
    // Terminal conditions: every contract matured, so A_n = 0 and the final
    // profit is exactly W(t_n) - W0.
    if (!state.outstanding.empty() || !traj.records.back().balance.is_zero())
        throw Error("internal: nonzero terminal balance");
    if (state.cash != scenario.initial_capital + state.realized_profit)
        throw Error("internal: terminal accounting identity broken");
    return traj;
}

// The always-admissible policy: reject every offer.
inline Policy reject_all_policy(const Scenario& scenario) {
    Policy p;
    for (int i = 1; i <= scenario.periods; ++i) {
        Decision d;
        d.period = i;
        for (const Offer& o : scenario.offers_in_period(i))
            d.bits.push_back({o.id, false});
        p.decisions.push_back(std::move(d));
    }
    return p;
}

}  // namespace bankdp
