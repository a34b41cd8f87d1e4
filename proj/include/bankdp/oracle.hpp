#pragma once

#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "bankdp/ledger.hpp"
#include "bankdp/solver.hpp"

namespace bankdp {

struct OracleOptions {
    std::uint64_t max_policies = std::uint64_t{1} << 24;
};

// Ground truth by exhaustion: simulate every assignment of accept bits over
// all offers of all periods, in lexicographic order (period 1 bits most
// significant, deposits before loans within a period), and keep the first
// feasible maximum. Shares simulate_policy with the DP path but none of its
// pruning, so a pruning bug cannot hide.
inline OptimalPlan brute_force_solve(const Scenario& scenario, const RateTable& table,
                                     const OracleOptions& opts = {}) {
    std::vector<std::vector<Offer>> period_offers;
    std::vector<std::vector<std::size_t>> bit_order;
    std::size_t total_bits = 0;
    for (int i = 1; i <= scenario.periods; ++i) {
        period_offers.push_back(scenario.offers_in_period(i));
        bit_order.push_back(detail::decision_bit_order(period_offers.back()));
        total_bits += period_offers.back().size();
    }
    if (total_bits >= 63 || (std::uint64_t{1} << total_bits) > opts.max_policies)
        throw CapacityError("policy count 2^" + std::to_string(total_bits) +
                            " exceeds oracle bound " + std::to_string(opts.max_policies));

    const std::uint64_t policy_count = std::uint64_t{1} << total_bits;
    std::optional<Money> best_value;
    Policy best_policy;
    Trajectory best_traj;
    std::uint64_t evaluated = 0;

    for (std::uint64_t idx = 0; idx < policy_count; ++idx) {
        // Split the global bit-vector into per-period masks, most significant
        // bits first.
        Policy policy;
        std::size_t consumed = 0;
        for (std::size_t p = 0; p < period_offers.size(); ++p) {
            const std::size_t m = period_offers[p].size();
            consumed += m;
            auto mask = static_cast<std::uint32_t>((idx >> (total_bits - consumed)) &
                                                   ((std::uint64_t{1} << m) - 1));
            policy.decisions.push_back(detail::decision_from_mask(
                static_cast<int>(p) + 1, period_offers[p], bit_order[p], mask));
        }
        ++evaluated;
        Trajectory traj = simulate_policy(scenario, policy, table);
        if (!traj.feasible) continue;
        if (!best_value || traj.final_profit() > *best_value) {
            best_value = traj.final_profit();
            best_policy = std::move(policy);
            best_traj = std::move(traj);
        }
    }

    OptimalPlan plan;
    plan.value = *best_value;  // reject-all (idx 0) is always feasible
    plan.policy = std::move(best_policy);
    plan.trajectory = std::move(best_traj);
    plan.stats.nodes_expanded = evaluated;
    return plan;
}

inline OptimalPlan brute_force_solve(const Scenario& scenario,
                                     const OracleOptions& opts = {}) {
    return brute_force_solve(scenario, build_rate_table(scenario), opts);
}

struct PlanComparison {
    bool values_equal = false;
    Money value_delta;                 // a.value - b.value
    bool policies_equal = false;
    // (period, offer id) of the first differing accept bit, if any.
    std::optional<std::pair<int, std::string>> first_divergence;
    bool tie_anomaly = false;          // equal values, different policies

    bool equal() const { return values_equal && policies_equal; }

    std::string to_string() const {
        if (equal()) return "equal";
        std::ostringstream os;
        if (!values_equal)
            os << "value mismatch, delta = " << value_delta.minor() << " minor units";
        if (tie_anomaly) os << "tie anomaly";
        if (first_divergence) {
            if (os.tellp() > 0) os << "; ";
            os << "first divergence at period " << first_divergence->first << ", offer "
               << first_divergence->second;
        }
        return os.str();
    }
};

inline PlanComparison compare_plans(const OptimalPlan& a, const OptimalPlan& b) {
    PlanComparison cmp;
    cmp.values_equal = a.value == b.value;
    cmp.value_delta = a.value - b.value;
    cmp.policies_equal = a.policy == b.policy;
    if (!cmp.policies_equal) {
        for (std::size_t p = 0;
             p < a.policy.decisions.size() && p < b.policy.decisions.size() &&
             !cmp.first_divergence;
             ++p) {
            const Decision& da = a.policy.decisions[p];
            const Decision& db = b.policy.decisions[p];
            for (std::size_t i = 0; i < da.bits.size() && i < db.bits.size(); ++i) {
                if (da.bits[i] != db.bits[i]) {
                    cmp.first_divergence = {da.period, da.bits[i].offer_id};
                    break;
                }
            }
        }
    }
    cmp.tie_anomaly = cmp.values_equal && !cmp.policies_equal;
    return cmp;
}

}  // namespace bankdp
