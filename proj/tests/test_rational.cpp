#include "support/helpers.hpp"

#include <gtest/gtest.h>

using namespace obr;
using obr::test::R;

TEST(Rational, ReducesToLowestTerms) {
    EXPECT_EQ(make_rational(6, 4).str(), "3/2");
    EXPECT_EQ(make_rational(0, 7).str(), "0/1");
    EXPECT_EQ(make_rational(2, -3).str(), "-2/3");
    EXPECT_EQ(make_rational(-4, -8).str(), "1/2");
}

TEST(Rational, ZeroDenominatorIsAnError) {
    EXPECT_THROW(make_rational(1, 0), Error);
    EXPECT_THROW(parse_rational("3/0"), Error);
}

TEST(Rational, IntegersPrintWithDenominatorOne) {
    EXPECT_EQ(Rational(3).str(), "3/1");
    EXPECT_EQ(Rational().str(), "0/1");
}

TEST(Rational, ParseAcceptsFractionsAndIntegers) {
    EXPECT_EQ(parse_rational("5/12"), make_rational(5, 12));
    EXPECT_EQ(parse_rational("10/4"), make_rational(5, 2));
    EXPECT_EQ(parse_rational("7"), Rational(7));
    EXPECT_EQ(parse_rational("-7/3"), make_rational(-7, 3));
    EXPECT_EQ(parse_rational("+1/2"), make_rational(1, 2));
}

TEST(Rational, ParseRejectsMalformedText) {
    for (const char *bad : {"", "/", "1/", "/2", "1/-2", "a/b", "1.5", "1//2", "1/2/3", " 1/2"}) {
        EXPECT_THROW(parse_rational(bad), Error) << bad;
    }
}

TEST(Rational, ArithmeticIsExact) {
    EXPECT_EQ(R("1/3") + R("1/6"), R("1/2"));
    EXPECT_EQ(R("3/4") - R("5/4"), R("-1/2"));
    EXPECT_EQ(R("2/3") * R("9/4"), R("3/2"));
    EXPECT_EQ(R("2/3") / R("4/9"), R("3/2"));
    EXPECT_EQ(-R("2/3"), R("-2/3"));
    // 0.1 + 0.2 style drift cannot happen
    EXPECT_EQ(R("1/10") + R("2/10"), R("3/10"));
}

TEST(Rational, DivisionByZeroThrows) { EXPECT_THROW(R("1/2") / Rational(0), Error); }

TEST(Rational, Ordering) {
    EXPECT_LT(R("5/12"), R("1/2"));
    EXPECT_GT(R("-1/3"), R("-1/2"));
    EXPECT_EQ(min(R("1/2"), R("1/3")), R("1/3"));
    EXPECT_EQ(max(R("1/2"), R("1/3")), R("1/2"));
}

TEST(Rational, FloorAndCeilRoundTowardInfinities) {
    EXPECT_EQ(R("7/2").floor(), 3);
    EXPECT_EQ(R("7/2").ceil(), 4);
    EXPECT_EQ(R("-7/2").floor(), -4);
    EXPECT_EQ(R("-7/2").ceil(), -3);
    EXPECT_EQ(R("3").floor(), 3);
    EXPECT_EQ(R("3").ceil(), 3);
}

TEST(Rational, LargeValuesDoNotOverflow) {
    Rational r(1);
    for (int i = 0; i < 100; ++i) {
        r = r * make_rational(1000000007, 3);
    }
    for (int i = 0; i < 100; ++i) {
        r = r / make_rational(1000000007, 3);
    }
    EXPECT_EQ(r, Rational(1));
}

TEST(Rational, FormatParseRoundTrip) {
    for (long long n = -30; n <= 30; ++n) {
        for (long long d = 1; d <= 30; ++d) {
            const Rational r = make_rational(n, d);
            EXPECT_EQ(parse_rational(r.str()), r);
        }
    }
}
