#pragma once

#include <cmath>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "bankdp/domain.hpp"

namespace bankdp {

// Exogenous rate data for a scenario: per-period demand totals, the
// coefficient sequences, and one locked-in rate per offer. Depends only on
// the scenario, never on any Decision.
struct RateTable {
    std::vector<Money> loan_demand;     // Q_p, index 0 = period 1
    std::vector<Money> deposit_total;   // Q_d
    std::vector<double> a;              // lending coefficients, index 0 = period 1
    std::vector<double> c;              // deposit coefficients
    std::unordered_map<std::string, double> rate;  // offer id -> locked rate

    double rate_for(const std::string& offer_id) const {
        auto it = rate.find(offer_id);
        if (it == rate.end()) throw Error("no rate for offer " + offer_id);
        return it->second;
    }
};

// Q_p[i] / Q_d[i]: total offered (not accepted) principal per period.
inline std::pair<std::vector<Money>, std::vector<Money>>
demand_totals(const Scenario& scenario) {
    std::vector<Money> qp(static_cast<std::size_t>(scenario.periods));
    std::vector<Money> qd(static_cast<std::size_t>(scenario.periods));
    for (const Offer& o : scenario.offers) {
        auto i = static_cast<std::size_t>(o.period - 1);
        (o.side == Side::Loan ? qp[i] : qd[i]) += o.principal;
    }
    return {std::move(qp), std::move(qd)};
}

namespace detail {

// a_1 = a0; a_i = a_{i-1} + (Q[i-1] - Q[i-2]) / s, with Q at indices <= 0
// taken as zero. Same recurrence serves the deposit-side c sequence.
inline std::vector<double> coefficient_sequence(double base, Money s,
                                                const std::vector<Money>& q) {
    std::vector<double> coeff(q.size());
    double prev = base;
    for (std::size_t i = 0; i < q.size(); ++i) {
        if (i >= 1) {
            std::int64_t q1 = q[i - 1].minor();
            std::int64_t q2 = i >= 2 ? q[i - 2].minor() : 0;
            prev += static_cast<double>(q1 - q2) / static_cast<double>(s.minor());
        }
        coeff[i] = prev;
    }
    return coeff;
}

}  // namespace detail

inline std::pair<std::vector<double>, std::vector<double>>
coefficient_sequences(const Scenario& scenario) {
    auto [qp, qd] = demand_totals(scenario);
    return {detail::coefficient_sequence(scenario.rate_params.a0, scenario.rate_params.s, qp),
            detail::coefficient_sequence(scenario.rate_params.c0, scenario.rate_params.s, qd)};
}

namespace detail {

inline double checked_rate(double coeff, double exponent, const std::string& what) {
    double r = (coeff / 100.0) * std::exp(exponent);
    if (!std::isfinite(r)) throw OverflowError("rate overflow: " + what);
    return r;
}

}  // namespace detail

// eta = (a_i / 100) * exp(P/b1 - tau/b2)
inline double lending_rate(double a_i, Money principal, int term, const RateParams& p) {
    double x = static_cast<double>(principal.minor()) / static_cast<double>(p.b1.minor()) -
               static_cast<double>(term) / p.b2;
    return detail::checked_rate(a_i, x, "lending rate");
}

// rho = (c_i / 100) * exp(D/b1 + tau/b2)
inline double deposit_rate(double c_i, Money principal, int term, const RateParams& p) {
    double x = static_cast<double>(principal.minor()) / static_cast<double>(p.b1.minor()) +
               static_cast<double>(term) / p.b2;
    return detail::checked_rate(c_i, x, "deposit rate");
}

// Locks one rate per offer at origination. Pure function of the scenario.
inline RateTable build_rate_table(const Scenario& scenario) {
    RateTable table;
    auto [qp, qd] = demand_totals(scenario);
    table.loan_demand = std::move(qp);
    table.deposit_total = std::move(qd);
    table.a = detail::coefficient_sequence(scenario.rate_params.a0, scenario.rate_params.s,
                                           table.loan_demand);
    table.c = detail::coefficient_sequence(scenario.rate_params.c0, scenario.rate_params.s,
                                           table.deposit_total);
    for (std::size_t i = 0; i < table.a.size(); ++i) {
        if (table.a[i] <= 0.0)
            throw Error("nonpositive lending coefficient at period " + std::to_string(i + 1));
        if (table.c[i] <= 0.0)
            throw Error("nonpositive deposit coefficient at period " + std::to_string(i + 1));
    }
    for (const Offer& o : scenario.offers) {
        auto i = static_cast<std::size_t>(o.period - 1);
        double r = o.side == Side::Loan
                       ? lending_rate(table.a[i], o.principal, o.term, scenario.rate_params)
                       : deposit_rate(table.c[i], o.principal, o.term, scenario.rate_params);
        table.rate.emplace(o.id, r);
    }
    return table;
}

}  // namespace bankdp
