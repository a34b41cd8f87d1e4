#pragma once

#include <cstdint>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include <json.hpp>

#include "bankdp/domain.hpp"
#include "bankdp/solver.hpp"
#include "bankdp/validate.hpp"

namespace bankdp {

using ordered_json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

namespace detail {

inline void expect_keys(const ordered_json& obj, const std::string& path,
                        std::initializer_list<const char*> allowed) {
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        bool known = false;
        for (const char* k : allowed)
            if (it.key() == k) { known = true; break; }
        if (!known) throw ParseError(path + ": unknown field \"" + it.key() + "\"");
    }
    for (const char* k : allowed)
        if (!obj.contains(k)) throw ParseError(path + ": missing field \"" + std::string(k) + "\"");
}

inline std::int64_t int_field(const ordered_json& obj, const std::string& path,
                              const char* key) {
    const auto& v = obj.at(key);
    if (!v.is_number_integer() && !v.is_number_unsigned())
        throw ParseError(path + "." + key + ": minor units must be integers");
    return v.get<std::int64_t>();
}

inline Money money_field(const ordered_json& obj, const std::string& path, const char* key) {
    try {
        return Money::from_minor(int_field(obj, path, key));
    } catch (const OverflowError& e) {
        throw ParseError(path + "." + key + ": " + e.what());
    }
}

inline double real_field(const ordered_json& obj, const std::string& path, const char* key) {
    const auto& v = obj.at(key);
    if (!v.is_number()) throw ParseError(path + "." + key + ": must be a number");
    return v.get<double>();
}

}  // namespace detail

// ---- scenario files --------------------------------------------------------

inline Scenario scenario_from_json(const ordered_json& doc) {
    using detail::expect_keys;
    expect_keys(doc, "$", {"schema_version", "periods", "currency_exponent",
                           "initial_capital_minor", "rate_params", "offers"});
    if (detail::int_field(doc, "$", "schema_version") != kSchemaVersion)
        throw ParseError("$.schema_version: expected " + std::to_string(kSchemaVersion));

    Scenario sc;
    sc.periods = static_cast<int>(detail::int_field(doc, "$", "periods"));
    sc.currency_exponent = static_cast<int>(detail::int_field(doc, "$", "currency_exponent"));
    sc.initial_capital = detail::money_field(doc, "$", "initial_capital_minor");

    const auto& rp = doc.at("rate_params");
    expect_keys(rp, "$.rate_params", {"a0", "c0", "b1_minor", "b2_periods", "s_minor"});
    sc.rate_params.a0 = detail::real_field(rp, "$.rate_params", "a0");
    sc.rate_params.c0 = detail::real_field(rp, "$.rate_params", "c0");
    sc.rate_params.b1 = detail::money_field(rp, "$.rate_params", "b1_minor");
    sc.rate_params.b2 = detail::real_field(rp, "$.rate_params", "b2_periods");
    sc.rate_params.s = detail::money_field(rp, "$.rate_params", "s_minor");

    const auto& offers = doc.at("offers");
    if (!offers.is_array()) throw ParseError("$.offers: must be an array");
    for (std::size_t i = 0; i < offers.size(); ++i) {
        std::string path = "$.offers[" + std::to_string(i) + "]";
        const auto& o = offers[i];
        expect_keys(o, path, {"id", "period", "side", "principal_minor", "term_periods"});
        Offer offer;
        if (!o.at("id").is_string()) throw ParseError(path + ".id: must be a string");
        offer.id = o.at("id").get<std::string>();
        offer.period = static_cast<int>(detail::int_field(o, path, "period"));
        std::string side = o.at("side").is_string() ? o.at("side").get<std::string>() : "";
        if (side == "loan") offer.side = Side::Loan;
        else if (side == "deposit") offer.side = Side::Deposit;
        else throw ParseError(path + ".side: must be \"loan\" or \"deposit\"");
        offer.principal = detail::money_field(o, path, "principal_minor");
        offer.term = static_cast<int>(detail::int_field(o, path, "term_periods"));
        sc.offers.push_back(std::move(offer));
    }
    return sc;
}

inline Scenario parse_scenario(const std::string& text) {
    ordered_json doc;
    try {
        doc = ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("syntax error: ") + e.what());
    }
    return scenario_from_json(doc);
}

inline ordered_json scenario_to_json(const Scenario& sc) {
    ordered_json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["periods"] = sc.periods;
    doc["currency_exponent"] = sc.currency_exponent;
    doc["initial_capital_minor"] = sc.initial_capital.minor();
    doc["rate_params"] = {{"a0", sc.rate_params.a0},
                          {"c0", sc.rate_params.c0},
                          {"b1_minor", sc.rate_params.b1.minor()},
                          {"b2_periods", sc.rate_params.b2},
                          {"s_minor", sc.rate_params.s.minor()}};
    doc["offers"] = ordered_json::array();
    for (const Offer& o : sc.offers) {
        doc["offers"].push_back({{"id", o.id},
                                 {"period", o.period},
                                 {"side", side_name(o.side)},
                                 {"principal_minor", o.principal.minor()},
                                 {"term_periods", o.term}});
    }
    return doc;
}

inline std::string write_scenario(const Scenario& sc) {
    return scenario_to_json(sc).dump(2) + "\n";
}

// ---- deterministic scenario generation -------------------------------------

// splitmix64: the documented generator stream, trivially reproducible in any
// language.
struct Splitmix64 {
    std::uint64_t state;

    explicit Splitmix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [lo, hi] via modulo; bias is irrelevant for instance making.
    std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
        return lo + static_cast<std::int64_t>(
                        next() % static_cast<std::uint64_t>(hi - lo + 1));
    }
};

struct GeneratorConfig {
    int periods = 1;
    int loans_per_period = 1;
    int deposits_per_period = 1;
    Money principal_min = Money::from_minor(1000);
    Money principal_max = Money::from_minor(20000);
    int term_min = 1;
    int term_max = 1;
    RateParams rate_params;
    Money initial_capital = Money::from_minor(10000);
    std::uint64_t seed = 0;
};

// Deterministic function of the config. Draw order per period: loans then
// deposits, principal before term. Terms are clipped so every contract
// matures within the horizon.
inline Scenario generate_scenario(const GeneratorConfig& cfg) {
    if (cfg.periods < 1) throw Error("generator: periods must be >= 1");
    if (cfg.loans_per_period < 0 || cfg.deposits_per_period < 0)
        throw Error("generator: offer counts must be >= 0");
    if (cfg.principal_min <= Money{} || cfg.principal_max < cfg.principal_min)
        throw Error("generator: empty principal range");
    if (cfg.term_min < 1 || cfg.term_max < cfg.term_min)
        throw Error("generator: empty term range");

    Scenario sc;
    sc.periods = cfg.periods;
    sc.initial_capital = cfg.initial_capital;
    sc.rate_params = cfg.rate_params;

    Splitmix64 rng(cfg.seed);
    auto draw_offer = [&](Side side, int period, int k) {
        Offer o;
        o.id = (side == Side::Loan ? "L" : "D") + std::to_string(period) + "_" +
               std::to_string(k);
        o.period = period;
        o.side = side;
        o.principal = Money::from_minor(
            rng.uniform(cfg.principal_min.minor(), cfg.principal_max.minor()));
        int horizon_left = cfg.periods - period + 1;
        int lo = std::min(cfg.term_min, horizon_left);
        int hi = std::min(cfg.term_max, horizon_left);
        o.term = static_cast<int>(rng.uniform(lo, hi));
        sc.offers.push_back(std::move(o));
    };
    for (int p = 1; p <= cfg.periods; ++p) {
        for (int k = 1; k <= cfg.loans_per_period; ++k) draw_offer(Side::Loan, p, k);
        for (int k = 1; k <= cfg.deposits_per_period; ++k) draw_offer(Side::Deposit, p, k);
    }

    auto report = validate_scenario(sc);
    if (!report.empty())
        throw Error("generator: config produces invalid scenario: " + report.front().path +
                    ": " + report.front().message);
    return sc;
}

// ---- plan files and reports ------------------------------------------------

inline ordered_json plan_to_json(const OptimalPlan& plan) {
    ordered_json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["value_minor"] = plan.value.minor();
    doc["policy"] = ordered_json::array();
    for (const Decision& d : plan.policy.decisions)
        doc["policy"].push_back({{"period", d.period}, {"accepted", d.accepted_ids()}});
    doc["trajectory"] = ordered_json::array();
    for (const PeriodRecord& r : plan.trajectory.records) {
        doc["trajectory"].push_back({{"period", r.period},
                                     {"cash_end_minor", r.cash_end.minor()},
                                     {"profit_cum_minor", r.profit_cum.minor()},
                                     {"balance_minor", r.balance.minor()},
                                     {"accepted", r.accepted}});
    }
    doc["stats"] = {{"nodes_expanded", plan.stats.nodes_expanded},
                    {"memo_hits", plan.stats.memo_hits},
                    {"states_stored", plan.stats.states_stored}};
    return doc;
}

inline std::string write_plan(const OptimalPlan& plan) {
    return plan_to_json(plan).dump(2) + "\n";
}

// Parsed plan document; enough to replay or re-report a plan.
struct PlanDoc {
    Money value;
    std::vector<std::pair<int, std::vector<std::string>>> policy;  // period, accepted ids
    std::vector<PeriodRecord> trajectory;
    SolveStats stats;
};

inline PlanDoc parse_plan(const std::string& text) {
    ordered_json doc;
    try {
        doc = ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("syntax error: ") + e.what());
    }
    detail::expect_keys(doc, "$", {"schema_version", "value_minor", "policy", "trajectory",
                                   "stats"});
    if (detail::int_field(doc, "$", "schema_version") != kSchemaVersion)
        throw ParseError("$.schema_version: expected " + std::to_string(kSchemaVersion));

    PlanDoc plan;
    plan.value = detail::money_field(doc, "$", "value_minor");
    for (std::size_t i = 0; i < doc.at("policy").size(); ++i) {
        const auto& d = doc.at("policy")[i];
        std::string path = "$.policy[" + std::to_string(i) + "]";
        detail::expect_keys(d, path, {"period", "accepted"});
        plan.policy.emplace_back(static_cast<int>(detail::int_field(d, path, "period")),
                                 d.at("accepted").get<std::vector<std::string>>());
    }
    for (std::size_t i = 0; i < doc.at("trajectory").size(); ++i) {
        const auto& r = doc.at("trajectory")[i];
        std::string path = "$.trajectory[" + std::to_string(i) + "]";
        detail::expect_keys(r, path, {"period", "cash_end_minor", "profit_cum_minor",
                                      "balance_minor", "accepted"});
        plan.trajectory.push_back(
            PeriodRecord{static_cast<int>(detail::int_field(r, path, "period")),
                         detail::money_field(r, path, "cash_end_minor"),
                         detail::money_field(r, path, "profit_cum_minor"),
                         detail::money_field(r, path, "balance_minor"),
                         r.at("accepted").get<std::vector<std::string>>()});
    }
    const auto& st = doc.at("stats");
    detail::expect_keys(st, "$.stats", {"nodes_expanded", "memo_hits", "states_stored"});
    plan.stats.nodes_expanded =
        static_cast<std::uint64_t>(detail::int_field(st, "$.stats", "nodes_expanded"));
    plan.stats.memo_hits =
        static_cast<std::uint64_t>(detail::int_field(st, "$.stats", "memo_hits"));
    plan.stats.states_stored =
        static_cast<std::uint64_t>(detail::int_field(st, "$.stats", "states_stored"));
    return plan;
}

// Rebuild a Policy from per-period accepted-id lists.
inline Policy policy_from_accepted(const Scenario& scenario,
                                   const std::vector<std::pair<int, std::vector<std::string>>>&
                                       accepted) {
    if (static_cast<int>(accepted.size()) != scenario.periods)
        throw Error("plan policy covers " + std::to_string(accepted.size()) +
                    " periods, scenario has " + std::to_string(scenario.periods));
    Policy p = reject_all_policy(scenario);
    for (const auto& [period, ids] : accepted) {
        if (period < 1 || period > scenario.periods)
            throw Error("plan policy period " + std::to_string(period) + " out of range");
        Decision& d = p.decisions[static_cast<std::size_t>(period - 1)];
        for (const std::string& id : ids) {
            bool found = false;
            for (auto& bit : d.bits)
                if (bit.offer_id == id) { bit.accept = true; found = true; break; }
            if (!found)
                throw Error("plan accepts unknown offer \"" + id + "\" in period " +
                            std::to_string(period));
        }
    }
    return p;
}

enum class ReportFormat { Csv, Json };

inline std::string join_ids(const std::vector<std::string>& ids) {
    std::string out;
    for (std::size_t i = 0; i < ids.size(); ++i) {
        if (i) out += ";";
        out += ids[i];
    }
    return out;
}

inline std::string write_report_csv(const std::vector<PeriodRecord>& records) {
    std::string out = "period,cash_end_minor,profit_cum_minor,balance_minor,accepted_ids\n";
    for (const PeriodRecord& r : records) {
        out += std::to_string(r.period) + "," + std::to_string(r.cash_end.minor()) + "," +
               std::to_string(r.profit_cum.minor()) + "," + std::to_string(r.balance.minor()) +
               "," + join_ids(r.accepted) + "\n";
    }
    return out;
}

inline std::string write_report(const OptimalPlan& plan, ReportFormat format) {
    if (format == ReportFormat::Json) return write_plan(plan);
    return write_report_csv(plan.trajectory.records);
}

}  // namespace bankdp
