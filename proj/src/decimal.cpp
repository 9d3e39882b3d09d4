#include "svproto/decimal.hpp"

#include <array>
#include <cctype>
#include <cstdlib>

namespace svproto {

namespace {

constexpr std::int64_t kInt64Max = INT64_MAX;

int digit_count(std::int64_t m) {
    auto u = static_cast<std::uint64_t>(m < 0 ? 0 - static_cast<std::uint64_t>(m) : static_cast<std::uint64_t>(m));
    int n = 1;
    while (u >= 10) {
        u /= 10;
        ++n;
    }
    return n;
}

// Order of magnitude: for non-zero d, |d| lies in [10^(order-1), 10^order).
std::int64_t magnitude_order(const Decimal& d) {
    return static_cast<std::int64_t>(d.exponent()) + digit_count(d.mantissa());
}

__int128 pow10_128(int n) {
    __int128 r = 1;
    while (n-- > 0) r *= 10;
    return r;
}

}  // namespace

Decimal Decimal::from_int(std::int64_t value) {
    Decimal d(value, 0);
    d.normalize();
    return d;
}

void Decimal::normalize() {
    if (mantissa_ == 0) {
        exponent_ = 0;
        return;
    }
    while (mantissa_ % 10 == 0) {
        mantissa_ /= 10;
        ++exponent_;
    }
}

std::optional<Decimal> Decimal::parse(std::string_view text) {
    std::size_t i = 0;
    const std::size_t n = text.size();
    bool negative = false;
    if (i < n && (text[i] == '-' || text[i] == '+')) {
        negative = text[i] == '-';
        ++i;
    }

    // Collect the written digits with the point removed; the scale tracks how
    // many of them sit after the decimal point.
    std::string digits;
    std::int64_t scale = 0;
    bool seen_digit = false;
    bool seen_point = false;
    for (; i < n; ++i) {
        char c = text[i];
        if (c >= '0' && c <= '9') {
            seen_digit = true;
            digits.push_back(c);
            if (seen_point) ++scale;
        } else if (c == '.' && !seen_point) {
            seen_point = true;
        } else {
            break;
        }
    }
    if (!seen_digit) return std::nullopt;

    std::int64_t exp_extra = 0;
    if (i < n && (text[i] == 'e' || text[i] == 'E')) {
        ++i;
        bool exp_negative = false;
        if (i < n && (text[i] == '-' || text[i] == '+')) {
            exp_negative = text[i] == '-';
            ++i;
        }
        if (i >= n || !std::isdigit(static_cast<unsigned char>(text[i]))) return std::nullopt;
        std::int64_t e = 0;
        for (; i < n && std::isdigit(static_cast<unsigned char>(text[i])); ++i) {
            e = e * 10 + (text[i] - '0');
            if (e > 1000000) return std::nullopt;  // pathological exponents
        }
        exp_extra = exp_negative ? -e : e;
    }
    if (i != n) return std::nullopt;

    // Strip leading and trailing zeros; the 19-digit mantissa limit applies
    // to the significant digits, so str() output always parses back.
    std::int64_t exp = exp_extra - scale;
    const std::size_t first = digits.find_first_not_of('0');
    if (first == std::string::npos) return Decimal(0, 0);
    const std::size_t last = digits.find_last_not_of('0') + 1;
    exp += static_cast<std::int64_t>(digits.size() - last);
    if (last - first > 19) return std::nullopt;

    unsigned __int128 mant = 0;
    for (std::size_t k = first; k < last; ++k) {
        mant = mant * 10 + static_cast<unsigned>(digits[k] - '0');
    }
    const auto limit = static_cast<unsigned __int128>(kInt64Max) + (negative ? 1 : 0);
    if (mant > limit) return std::nullopt;
    std::int64_t m = negative ? static_cast<std::int64_t>(0 - static_cast<std::uint64_t>(mant))
                              : static_cast<std::int64_t>(mant);
    if (exp < INT32_MIN || exp > INT32_MAX) return std::nullopt;
    Decimal d(m, static_cast<std::int32_t>(exp));
    d.normalize();
    return d;
}

std::string Decimal::str() const {
    if (mantissa_ == 0) return "0";
    std::string digits = std::to_string(mantissa_);
    if (digits[0] == '-') digits.erase(digits.begin());
    std::string out;
    if (mantissa_ < 0) out += '-';
    if (exponent_ >= 0) {
        out += digits;
        out.append(static_cast<std::size_t>(exponent_), '0');
        return out;
    }
    const std::size_t frac = static_cast<std::size_t>(-exponent_);
    if (digits.size() > frac) {
        out += digits.substr(0, digits.size() - frac);
        out += '.';
        out += digits.substr(digits.size() - frac);
    } else {
        out += "0.";
        out.append(frac - digits.size(), '0');
        out += digits;
    }
    return out;
}

int Decimal::compare(const Decimal& a, const Decimal& b) {
    const int sa = a.sign();
    const int sb = b.sign();
    if (sa != sb) return sa < sb ? -1 : 1;
    if (sa == 0) return 0;

    // Same sign.  Different orders of magnitude decide immediately; equal
    // orders keep the exponent gap small enough for exact 128-bit alignment.
    const std::int64_t oa = magnitude_order(a);
    const std::int64_t ob = magnitude_order(b);
    if (oa != ob) {
        const bool a_bigger_magnitude = oa > ob;
        return a_bigger_magnitude == (sa > 0) ? 1 : -1;
    }
    __int128 ma = a.mantissa_;
    __int128 mb = b.mantissa_;
    if (a.exponent_ > b.exponent_) {
        ma *= pow10_128(static_cast<int>(a.exponent_ - b.exponent_));
    } else if (b.exponent_ > a.exponent_) {
        mb *= pow10_128(static_cast<int>(b.exponent_ - a.exponent_));
    }
    if (ma == mb) return 0;
    return ma < mb ? -1 : 1;
}

}  // namespace svproto
