#pragma once

#include <string>
#include <unordered_set>
#include <vector>

#include "bankdp/domain.hpp"
#include "bankdp/rate_engine.hpp"

namespace bankdp {

// Structural validation. Violations are data, not failures; an empty report
// means every downstream operation can process the scenario.
inline std::vector<Violation> validate_scenario(const Scenario& sc) {
    std::vector<Violation> out;
    auto bad = [&](std::string path, std::string msg) {
        out.push_back({std::move(path), std::move(msg)});
    };

    if (sc.periods < 1) bad("periods", "must be >= 1");
    if (sc.initial_capital <= Money{}) bad("initial_capital", "W0 must be > 0");

    const RateParams& p = sc.rate_params;
    if (p.a0 <= 0.0) bad("rate_params.a0", "must be > 0");
    if (p.c0 <= 0.0) bad("rate_params.c0", "must be > 0");
    if (p.a0 < p.c0) bad("rate_params", "a0 < c0");
    if (p.b1 <= Money{}) bad("rate_params.b1", "must be > 0");
    if (p.b2 <= 0.0) bad("rate_params.b2", "must be > 0");
    if (p.s <= Money{}) bad("rate_params.s", "must be > 0");

    if (sc.offers.size() > kMaxTotalOffers)
        bad("offers", "offer count exceeds capacity bound " + std::to_string(kMaxTotalOffers));

    std::unordered_set<std::string> ids;
    for (const Offer& o : sc.offers) {
        if (o.id.empty()) bad("offers", "offer with empty id");
        if (!ids.insert(o.id).second) bad(o.id, "duplicate offer id");
        if (o.period < 1 || o.period > sc.periods)
            bad(o.id, "period " + std::to_string(o.period) + " outside [1, " +
                          std::to_string(sc.periods) + "]");
        if (o.principal <= Money{}) bad(o.id, "principal must be > 0");
        if (o.term < 1) bad(o.id, "term must be >= 1");
        if (o.period >= 1 && o.term >= 1 && o.maturity_period() > sc.periods)
            bad(o.id, "matures at period " + std::to_string(o.maturity_period()) +
                          " > horizon " + std::to_string(sc.periods));
    }

    // Coefficient sequences must stay positive; only meaningful once the
    // structure above is sound.
    if (out.empty()) {
        auto [a, c] = coefficient_sequences(sc);
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (a[i] <= 0.0)
                bad("rate_params", "lending coefficient a_" + std::to_string(i + 1) +
                                       " is nonpositive");
            if (c[i] <= 0.0)
                bad("rate_params", "deposit coefficient c_" + std::to_string(i + 1) +
                                       " is nonpositive");
        }
    }
    return out;
}

}  // namespace bankdp
