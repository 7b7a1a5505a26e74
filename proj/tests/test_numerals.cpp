#include <doctest.h>

#include <stdexcept>

#include <random>

#include "oracles.hpp"
#include "tmanalogs/numerals.hpp"

using namespace tmanalogs;

namespace {

std::uint64_t pow2(unsigned e)
{
    return std::uint64_t{1} << e;
}

std::vector<int> as_ints(const BalancedDigits& d)
{
    return {d.digits.begin(), d.digits.end()};
}

}  // namespace

TEST_CASE("runs_of_ones")
{
    CHECK(runs_of_ones(0) == 0);
    CHECK(runs_of_ones(7) == 1);
    CHECK(runs_of_ones(5) == 2);
    for (std::uint64_t n = 0; n < (1u << 16); ++n)
        REQUIRE(runs_of_ones(n) == static_cast<unsigned>(oracle::runs(n)));
    CHECK(runs_of_ones(~std::uint64_t{0}) == 1);
    CHECK(runs_of_ones(0x5555555555555555ull) == 32);
}

TEST_CASE("to_negabinary")
{
    CHECK(to_negabinary(7).to_string() == "11011");
    CHECK(to_negabinary(0).to_string() == "0");
    CHECK(to_negabinary(0).digits == std::vector<std::uint8_t>{0});
    CHECK(to_negabinary(6).to_string() == "11010");
    CHECK(to_negabinary(2).to_string() == "110");

    for (std::uint64_t n = 0; n < (1u << 16); ++n)
        REQUIRE(to_negabinary(n).to_string() == oracle::negabinary(n));

    std::mt19937_64 rng(7);
    std::uniform_int_distribution<std::uint64_t> dist(0, pow2(62) - 1);
    for (int i = 0; i < 5000; ++i) {
        const std::uint64_t n = dist(rng);
        const NegabinaryDigits d = to_negabinary(n);
        REQUIRE(d.to_string() == oracle::negabinary(n));
        REQUIRE(d.digits.back() == 1);
        REQUIRE(from_negabinary(d) == static_cast<std::int64_t>(n));
    }
    CHECK_THROWS_AS(to_negabinary(pow2(62)), std::out_of_range);
}

TEST_CASE("from_negabinary")
{
    CHECK(from_negabinary(NegabinaryDigits::from_string("11011")) == 7);
    CHECK(from_negabinary(NegabinaryDigits::from_string("0")) == 0);
    CHECK(from_negabinary(NegabinaryDigits::from_string("110")) == 2);
    CHECK(from_negabinary(NegabinaryDigits::from_string("10")) == -2);
    CHECK(from_negabinary(NegabinaryDigits{}) == 0);

    NegabinaryDigits bad;
    bad.digits = {1, 2, 1};
    CHECK_THROWS_AS(from_negabinary(bad), std::invalid_argument);
    CHECK_THROWS_AS(NegabinaryDigits::from_string("1021"), std::invalid_argument);
    CHECK_THROWS_AS(NegabinaryDigits::from_string(""), std::invalid_argument);

    NegabinaryDigits too_long;
    too_long.digits.assign(64, 1);
    CHECK_THROWS_AS(from_negabinary(too_long), std::out_of_range);

    // Leading zeros are dropped when parsing.
    CHECK(NegabinaryDigits::from_string("00110") == to_negabinary(2));

    for (std::uint64_t n = 0; n < (1u << 20); ++n)
        REQUIRE(from_negabinary(to_negabinary(n)) == static_cast<std::int64_t>(n));
}

TEST_CASE("to_balanced")
{
    CHECK(to_balanced(7).to_string() == "(1,0,0,-1)");
    CHECK(to_balanced(0).digits.empty());
    CHECK(to_balanced(0).to_string() == "(0)");
    CHECK(to_balanced(5).to_string() == "(1,-1,1,-1)");

    for (std::uint64_t n = 0; n < (1u << 20); ++n) {
        const BalancedDigits d = to_balanced(n);
        REQUIRE(balanced_value(d) == static_cast<std::int64_t>(n));
        int sum = 0, plus = 0, minus = 0;
        for (auto x : d.digits) {
            sum += x;
            plus += x == 1;
            minus += x == -1;
        }
        REQUIRE(sum == 0);
        REQUIRE(plus == static_cast<int>(runs_of_ones(n)));
        REQUIRE(minus == plus);
        if (n < (1u << 14))
            REQUIRE(as_ints(d) == oracle::balanced_by_substitution(n));
    }
    CHECK(as_ints(to_balanced(pow2(62) - 1)) == oracle::balanced_by_substitution(pow2(62) - 1));
    CHECK_THROWS_AS(to_balanced(pow2(62)), std::out_of_range);
}

TEST_CASE("to_binary_string")
{
    CHECK(to_binary_string(0) == "0");
    CHECK(to_binary_string(10) == "1010");
}

TEST_CASE("closed form for 2^m - 1")
{
    CHECK(lemma1_form(2).to_string() == "111");
    CHECK(lemma1_form(3).to_string() == "11011");
    CHECK(lemma1_form(4).to_string() == "10011");
    CHECK(lemma1_form(5).to_string() == "1100011");
    for (unsigned m = 2; m <= 40; ++m) {
        const NegabinaryDigits d = lemma1_form(m);
        REQUIRE(d == to_negabinary(pow2(m) - 1));
        REQUIRE(static_cast<Bit>(d.ones() % 2) == corollary1_value(m));
    }
    CHECK_THROWS_AS(lemma1_form(1), std::domain_error);
    CHECK_THROWS_AS(lemma1_form(0), std::domain_error);
}

TEST_CASE("parity of g at 2^m - 1")
{
    CHECK(corollary1_value(0) == 0);
    CHECK(corollary1_value(1) == 1);
    CHECK(corollary1_value(2) == 1);
    CHECK(corollary1_value(3) == 0);
    for (unsigned m = 0; m <= 62; ++m)
        REQUIRE(corollary1_value(m) == g(pow2(m) - 1));
    CHECK_THROWS_AS(corollary1_value(63), std::domain_error);
}

TEST_CASE("closed form for 2^{m+k+1} - 2^m - 1")
{
    // The even-k pattern applies at k = 0.
    CHECK(lemma2_form_a(3, 0).to_string() == "11011");
    CHECK(from_negabinary(lemma2_form_a(3, 0)) == 7);
    CHECK(lemma2_form_a(3, 2).to_string() == "1001011");
    CHECK(from_negabinary(lemma2_form_a(5, 1)) == 95);
    for (unsigned m = 3; m <= 21; m += 2)
        for (unsigned k = 0; k <= 20; ++k)
            REQUIRE(lemma2_form_a(m, k) == to_negabinary(pow2(m + k + 1) - pow2(m) - 1));
    CHECK_THROWS_AS(lemma2_form_a(4, 0), std::domain_error);
    CHECK_THROWS_AS(lemma2_form_a(1, 0), std::domain_error);
}

TEST_CASE("closed form for 2(2^{k+1} - 1)")
{
    CHECK(lemma2_form_b(0).to_string() == "110");
    CHECK(lemma2_form_b(1).to_string() == "11010");
    CHECK(from_negabinary(lemma2_form_b(1)) == 6);
    CHECK(lemma2_form_b(2).to_string() == "10010");
    CHECK(from_negabinary(lemma2_form_b(2)) == 14);
    for (unsigned k = 0; k <= 40; ++k)
        REQUIRE(lemma2_form_b(k) == to_negabinary(pow2(k + 2) - 2));
}
