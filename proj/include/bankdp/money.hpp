#pragma once

#include <cstdint>
#include <cstdlib>
#include <compare>
#include <string>

#include "bankdp/errors.hpp"

namespace bankdp {

// Exact money value: an integer count of currency minor units (cents).
// All arithmetic is checked against the 2^62 capacity bound; the only
// rounding anywhere in the ledger happens in accrue_payout.
class Money {
public:
    static constexpr std::int64_t kMaxMagnitude = std::int64_t{1} << 62;

    constexpr Money() = default;

    static Money from_minor(std::int64_t minor) {
        check_magnitude(minor);
        return Money(minor);
    }

    constexpr std::int64_t minor() const { return minor_; }

    friend Money operator+(Money a, Money b) {
        std::int64_t r;
        if (__builtin_add_overflow(a.minor_, b.minor_, &r))
            throw OverflowError("money addition overflow");
        return from_minor(r);
    }

    friend Money operator-(Money a, Money b) {
        std::int64_t r;
        if (__builtin_sub_overflow(a.minor_, b.minor_, &r))
            throw OverflowError("money subtraction overflow");
        return from_minor(r);
    }

    Money& operator+=(Money other) { return *this = *this + other; }
    Money& operator-=(Money other) { return *this = *this - other; }

    friend Money operator-(Money a) { return from_minor(-a.minor_); }

    auto operator<=>(const Money&) const = default;

    bool is_zero() const { return minor_ == 0; }

    // "12.34" for minor=1234, exponent=2. Display only.
    std::string to_decimal(int exponent) const {
        std::int64_t scale = 1;
        for (int i = 0; i < exponent; ++i) scale *= 10;
        std::int64_t whole = minor_ / scale;
        std::int64_t frac = std::llabs(minor_ % scale);
        std::string sign = (minor_ < 0 && whole == 0) ? "-" : "";
        std::string f = std::to_string(frac);
        if (exponent == 0) return sign + std::to_string(whole);
        return sign + std::to_string(whole) + "." +
               std::string(static_cast<std::size_t>(exponent) - f.size(), '0') + f;
    }

private:
    explicit constexpr Money(std::int64_t minor) : minor_(minor) {}

    static void check_magnitude(std::int64_t minor) {
        if (minor > kMaxMagnitude || minor < -kMaxMagnitude)
            throw OverflowError("money magnitude exceeds 2^62 minor units");
    }

    std::int64_t minor_ = 0;
};

}  // namespace bankdp
