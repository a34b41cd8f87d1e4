#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "bankdp/ledger.hpp"

namespace bankdp {

struct SolveStats {
    std::uint64_t nodes_expanded = 0;
    std::uint64_t memo_hits = 0;
    std::uint64_t states_stored = 0;
};

struct OptimalPlan {
    Money value;            // f_n(W0), the maximal terminal profit
    Policy policy;
    Trajectory trajectory;
    SolveStats stats;
};

struct SolveOptions {
    bool use_memo = true;
    // Memo on (period, cash) only. Valid only when every term equals 1;
    // exists to exercise that degenerate case, where capital alone is a
    // sufficient state.
    bool capital_only_key = false;
    std::uint64_t max_nodes = 10'000'000;
};

namespace detail {

// Canonical state encoding: period, cash, and the outstanding ledger as
// ascending (maturity, side, principal, payout) tuples with multiplicity.
inline std::string state_key(const BankState& s, bool capital_only) {
    std::string key = std::to_string(s.next_period) + "|" + std::to_string(s.cash.minor());
    if (capital_only) return key;
    std::vector<std::tuple<int, int, std::int64_t, std::int64_t>> digest;
    digest.reserve(s.outstanding.size());
    for (const LedgerEntry& e : s.outstanding)
        digest.emplace_back(e.maturity_period, static_cast<int>(e.side),
                            e.principal.minor(), e.payout.minor());
    std::sort(digest.begin(), digest.end());
    for (const auto& [mat, side, principal, payout] : digest) {
        key += "|" + std::to_string(mat) + "," + std::to_string(side) + "," +
               std::to_string(principal) + "," + std::to_string(payout);
    }
    return key;
}

struct Continuation {
    std::int64_t value = 0;               // future realized profit, minor units
    std::vector<std::uint32_t> masks;     // chosen decision per remaining period
};

class DpSearch {
public:
    DpSearch(const Scenario& scenario, const RateTable& table, const SolveOptions& opts)
        : scenario_(scenario), table_(table), opts_(opts) {
        for (int i = 1; i <= scenario.periods; ++i) {
            period_offers_.push_back(scenario.offers_in_period(i));
            bit_order_.push_back(decision_bit_order(period_offers_.back()));
        }
    }

    // Optimal continuation from `state`, or nullopt if no feasible one exists.
    std::optional<Continuation> best(const BankState& state) {
        if (state.next_period > scenario_.periods) return Continuation{};

        std::string key;
        if (opts_.use_memo) {
            key = state_key(state, opts_.capital_only_key);
            if (auto it = memo_.find(key); it != memo_.end()) {
                ++stats_.memo_hits;
                return it->second;
            }
        }

        const auto idx = static_cast<std::size_t>(state.next_period - 1);
        const auto& offers = period_offers_[idx];
        const std::size_t m = offers.size();
        if (m > kMaxOffersPerPeriod)
            throw CapacityError("period " + std::to_string(state.next_period) + " has " +
                                std::to_string(m) + " offers; decision bound is 2^" +
                                std::to_string(kMaxOffersPerPeriod));

        std::optional<Continuation> result;
        for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
            Decision d = decision_from_mask(state.next_period, offers, bit_order_[idx], mask);
            if (++stats_.nodes_expanded > opts_.max_nodes)
                throw CapacityError("node bound " + std::to_string(opts_.max_nodes) +
                                    " exceeded at period " + std::to_string(state.next_period));
            StepResult r = step(state, d, offers, table_);
            if (!r.ok()) continue;
            std::int64_t immediate =
                (r.state->realized_profit - state.realized_profit).minor();
            auto child = best(*r.state);
            if (!child) continue;
            std::int64_t total = immediate + child->value;
            if (!result || total > result->value) {
                Continuation c;
                c.value = total;
                c.masks.push_back(mask);
                c.masks.insert(c.masks.end(), child->masks.begin(), child->masks.end());
                result = std::move(c);
            }
        }

        if (opts_.use_memo) {
            memo_.emplace(std::move(key), result);
            stats_.states_stored = memo_.size();
        }
        return result;
    }

    Policy policy_from_masks(const std::vector<std::uint32_t>& masks) const {
        Policy p;
        for (std::size_t i = 0; i < masks.size(); ++i)
            p.decisions.push_back(decision_from_mask(static_cast<int>(i) + 1,
                                                     period_offers_[i], bit_order_[i],
                                                     masks[i]));
        return p;
    }

    const SolveStats& stats() const { return stats_; }

private:
    const Scenario& scenario_;
    const RateTable& table_;
    SolveOptions opts_;
    std::vector<std::vector<Offer>> period_offers_;
    std::vector<std::vector<std::size_t>> bit_order_;
    std::unordered_map<std::string, std::optional<Continuation>> memo_;
    SolveStats stats_;
};

}  // namespace detail

// Depth-first search with memoization on canonical (period, cash, ledger)
// states. First-found maximum wins, which realizes the lexicographic
// tie-break over decision bit-vectors, earliest period first.
inline OptimalPlan solve(const Scenario& scenario, const RateTable& table,
                         const SolveOptions& opts = {}) {
    detail::DpSearch search(scenario, table, opts);
    auto root = search.best(BankState::initial(scenario));
    if (!root) throw Error("internal: reject-all continuation missing");

    OptimalPlan plan;
    plan.value = Money::from_minor(root->value);
    plan.policy = search.policy_from_masks(root->masks);
    plan.trajectory = simulate_policy(scenario, plan.policy, table);
    plan.stats = search.stats();
    if (!plan.trajectory.feasible || plan.trajectory.final_profit() != plan.value)
        throw Error("internal: optimal policy does not replay to its value");
    return plan;
}

inline OptimalPlan solve(const Scenario& scenario, const SolveOptions& opts = {}) {
    return solve(scenario, build_rate_table(scenario), opts);
}

// f_n(W0) sampled over a capital grid. Rates are exogenous, so the table is
// shared across all capital levels.
inline std::vector<std::pair<Money, Money>>
value_function(const Scenario& scenario, const RateTable& table,
               const std::vector<Money>& capitals, const SolveOptions& opts = {}) {
    std::vector<std::pair<Money, Money>> out;
    for (Money w0 : capitals) {
        if (w0 <= Money{}) throw Error("capital grid values must be > 0");
        Scenario sc = scenario;
        sc.initial_capital = w0;
        out.emplace_back(w0, solve(sc, table, opts).value);
    }
    return out;
}

inline std::vector<std::pair<Money, Money>>
value_function(const Scenario& scenario, const std::vector<Money>& capitals,
               const SolveOptions& opts = {}) {
    return value_function(scenario, build_rate_table(scenario), capitals, opts);
}

}  // namespace bankdp
