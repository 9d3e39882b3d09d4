#include <cstdint>
#include <vector>

#include "doctest.h"
#include "svproto/decimal.hpp"

using svproto::Decimal;

TEST_CASE("parsing and canonical text") {
    auto parsed = [](const char* text) { return Decimal::parse(text).value(); };

    CHECK(parsed("0").str() == "0");
    CHECK(parsed("-0").str() == "0");
    CHECK(parsed("0.0").str() == "0");
    CHECK(parsed("17").str() == "17");
    CHECK(parsed("-42").str() == "-42");
    CHECK(parsed("5.5").str() == "5.5");
    CHECK(parsed("1.50").str() == "1.5");
    CHECK(parsed("0.01").str() == "0.01");
    CHECK(parsed("-0.250").str() == "-0.25");
    CHECK(parsed("2e3").str() == "2000");
    CHECK(parsed("2E3").str() == "2000");
    CHECK(parsed("1e-2").str() == "0.01");
    CHECK(parsed("12.34e2").str() == "1234");
    CHECK(parsed("12.34e-2").str() == "0.1234");
    CHECK(parsed("+3").str() == "3");
    CHECK(parsed("235500").str() == "235500");
    CHECK(parsed("9223372036854775807").str() == "9223372036854775807");
    CHECK(parsed("-9223372036854775808").str() == "-9223372036854775808");
}

TEST_CASE("normalization strips trailing zeros") {
    Decimal a = Decimal::parse("1.50").value();
    CHECK(a.mantissa() == 15);
    CHECK(a.exponent() == -1);
    Decimal b = Decimal::parse("2000").value();
    CHECK(b.mantissa() == 2);
    CHECK(b.exponent() == 3);
    CHECK(Decimal::parse("1.5") == Decimal::parse("1.50"));
    CHECK(Decimal::parse("2e3") == Decimal::parse("2000"));
    CHECK(Decimal::from_int(0).exponent() == 0);
}

TEST_CASE("rejected literals") {
    CHECK_FALSE(Decimal::parse("").has_value());
    CHECK_FALSE(Decimal::parse("-").has_value());
    CHECK_FALSE(Decimal::parse("--1").has_value());
    CHECK_FALSE(Decimal::parse(".").has_value());
    CHECK_FALSE(Decimal::parse("1e").has_value());
    CHECK_FALSE(Decimal::parse("1e+").has_value());
    CHECK_FALSE(Decimal::parse("1.2.3").has_value());
    CHECK_FALSE(Decimal::parse("1a").has_value());
    CHECK_FALSE(Decimal::parse("NaN").has_value());
    // Mantissas are limited to 19 significant digits.
    CHECK_FALSE(Decimal::parse("12345678901234567891").has_value());
    CHECK_FALSE(Decimal::parse("9223372036854775808").has_value());
    CHECK_FALSE(Decimal::parse("0.12345678901234567891").has_value());
    CHECK_FALSE(Decimal::parse("1e1000001").has_value());
    // Zeros are not significant: large round magnitudes stay exact.
    CHECK(Decimal::parse("1e19").value().str() == "10000000000000000000");
    CHECK(Decimal::parse("10000000000000000000").value() == Decimal::parse("1e19").value());
    CHECK(Decimal::parse("00012.300").value().str() == "12.3");
}

TEST_CASE("comparison is exact across magnitudes") {
    auto d = [](const char* text) { return Decimal::parse(text).value(); };

    CHECK(d("0.5") < d("1"));
    CHECK(d("1") < d("2e3"));
    CHECK(d("-2e3") < d("-1"));
    CHECK(d("-1") < d("0"));
    CHECK(d("0") < d("0.0001"));
    CHECK(d("3") <= d("5.5"));
    CHECK(d("5.5") <= d("5.5"));
    CHECK(d("17") > d("15"));
    CHECK(d("1.4999999999999999") < d("1.5"));
    CHECK(d("9223372036854775807") < d("1e19"));
    CHECK(d("9e18") < d("9223372036854775807"));
    CHECK(d("123456789012345678") == d("1.23456789012345678e17"));
    CHECK(d("-9223372036854775808") < d("-9.223372036854775807e18"));
    CHECK(Decimal::compare(d("2"), d("2.0")) == 0);
    CHECK(Decimal::compare(d("2"), d("3")) == -1);
    CHECK(Decimal::compare(d("3"), d("2")) == 1);
}

TEST_CASE("text round-trip is the identity") {
    const std::vector<const char*> samples = {
        "0",    "1",        "-1",     "17",  "5.5",   "0.01",
        "-0.25", "235500",  "1.5",    "1234", "0.1234", "9223372036854775807",
        "-9223372036854775808", "10000000000000000000",
    };
    for (const char* text : samples) {
        Decimal d = Decimal::parse(text).value();
        CHECK(Decimal::parse(d.str()).value() == d);
    }
}

TEST_CASE("integer recognition and sign") {
    CHECK(Decimal::parse("2000").value().is_integer());
    CHECK(Decimal::parse("2e3").value().is_integer());
    CHECK_FALSE(Decimal::parse("5.5").value().is_integer());
    CHECK(Decimal::parse("0").value().is_zero());
    CHECK(Decimal::parse("0").value().sign() == 0);
    CHECK(Decimal::parse("-0.5").value().sign() == -1);
    CHECK(Decimal::parse("12").value().sign() == 1);
}
