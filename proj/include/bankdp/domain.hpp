#pragma once

#include <string>
#include <vector>

#include "bankdp/money.hpp"

namespace bankdp {

// Global rate-model parameters, fixed for a whole scenario.
struct RateParams {
    double a0 = 0.0;       // base lending coefficient (min borrowing rate)
    double c0 = 0.0;       // base deposit coefficient, a0 >= c0
    Money b1;              // volume scale of the exponential rate law
    double b2 = 0.0;       // term scale, in periods
    Money s;               // demand-sensitivity divisor for the coefficient recurrences

    bool operator==(const RateParams&) const = default;
};

enum class Side { Loan, Deposit };

inline const char* side_name(Side s) { return s == Side::Loan ? "loan" : "deposit"; }

// One client offer: lend `principal` for `term` periods (Loan) or take
// `principal` on deposit for `term` periods (Deposit). A contract accepted
// in its period matures at the end of period `period + term - 1`.
struct Offer {
    std::string id;
    int period = 0;
    Side side = Side::Loan;
    Money principal;
    int term = 0;

    int maturity_period() const { return period + term - 1; }

    bool operator==(const Offer&) const = default;
};

// A full problem instance. Immutable after construction; `offers` keeps
// file order, which defines tie-breaking downstream.
struct Scenario {
    int periods = 0;
    Money initial_capital;
    RateParams rate_params;
    std::vector<Offer> offers;
    int currency_exponent = 2;

    std::vector<Offer> offers_in_period(int period) const {
        std::vector<Offer> out;
        for (const Offer& o : offers)
            if (o.period == period) out.push_back(o);
        return out;
    }

    bool operator==(const Scenario&) const = default;
};

// Hard cap on total offers per scenario.
inline constexpr std::size_t kMaxTotalOffers = 4096;

// Per-period accept bits, covering exactly that period's offers in file order.
struct Decision {
    struct Bit {
        std::string offer_id;
        bool accept = false;
        bool operator==(const Bit&) const = default;
    };

    int period = 0;
    std::vector<Bit> bits;

    std::vector<std::string> accepted_ids() const {
        std::vector<std::string> out;
        for (const Bit& b : bits)
            if (b.accept) out.push_back(b.offer_id);
        return out;
    }

    bool operator==(const Decision&) const = default;
};

// One Decision per period 1..n.
struct Policy {
    std::vector<Decision> decisions;

    bool operator==(const Policy&) const = default;
};

struct Violation {
    std::string path;     // offending field or offer id
    std::string message;

    bool operator==(const Violation&) const = default;
};

}  // namespace bankdp
