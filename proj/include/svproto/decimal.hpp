#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace svproto {

// Exact decimal number: mantissa * 10^exponent, normalized so that the
// mantissa is not divisible by 10 (zero is stored as 0 * 10^0).  Equality and
// ordering are exact numeric comparisons; no binary floating point is
// involved, so 0.1 and 0.10 compare equal and print identically.
class Decimal {
public:
    Decimal() : mantissa_(0), exponent_(0) {}

    static Decimal from_int(std::int64_t value);

    // Accepts an optional sign, digits, an optional fraction and an optional
    // decimal exponent ("-12.50", "1e+30").  Rejects anything else, including
    // literals whose significant digits overflow a 64-bit mantissa.
    static std::optional<Decimal> parse(std::string_view text);

    // Canonical text: no exponent notation, no trailing fraction zeros, no
    // plus sign ("5.5", "1000", "-0.25", "0").
    std::string str() const;

    std::int64_t mantissa() const noexcept { return mantissa_; }
    std::int32_t exponent() const noexcept { return exponent_; }

    bool is_integer() const noexcept { return exponent_ >= 0; }
    bool is_zero() const noexcept { return mantissa_ == 0; }
    int sign() const noexcept { return mantissa_ == 0 ? 0 : (mantissa_ < 0 ? -1 : 1); }

    // Exact numeric comparison.
    static int compare(const Decimal& a, const Decimal& b);

    friend bool operator==(const Decimal& a, const Decimal& b) { return compare(a, b) == 0; }
    friend bool operator!=(const Decimal& a, const Decimal& b) { return compare(a, b) != 0; }
    friend bool operator<(const Decimal& a, const Decimal& b) { return compare(a, b) < 0; }
    friend bool operator<=(const Decimal& a, const Decimal& b) { return compare(a, b) <= 0; }
    friend bool operator>(const Decimal& a, const Decimal& b) { return compare(a, b) > 0; }
    friend bool operator>=(const Decimal& a, const Decimal& b) { return compare(a, b) >= 0; }

private:
    Decimal(std::int64_t mantissa, std::int32_t exponent)
        : mantissa_(mantissa), exponent_(exponent) {}

    void normalize();

    std::int64_t mantissa_;
    std::int32_t exponent_;
};

}  // namespace svproto
