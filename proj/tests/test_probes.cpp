#include <doctest.h>

#include <stdexcept>

#include "oracles.hpp"
#include "tmanalogs/probes.hpp"

using namespace tmanalogs;

namespace {

// Term-by-term comparison through the string oracles.
std::uint64_t agreement_oracle(std::uint64_t n, int flip, std::uint64_t cap)
{
    std::uint64_t k = 0;
    while (k < cap && oracle::negabinary_parity(k) == (oracle::popcount_parity(k + n) ^ flip))
        ++k;
    return k;
}

}  // namespace

TEST_CASE("agree_len and disagree_len")
{
    CHECK(agree_len(0, 100) == AgreementResult{2, false});
    CHECK(agree_len(1, 100) == AgreementResult{0, false});
    CHECK(agree_len(3, 100) == AgreementResult{3, false});
    CHECK(disagree_len(0, 100) == AgreementResult{0, false});
    CHECK(disagree_len(1, 100) == AgreementResult{1, false});
    CHECK(disagree_len(2, 100) == AgreementResult{6, false});

    for (std::uint64_t n = 0; n < 600; ++n) {
        REQUIRE(agree_len(n, 5000).length == agreement_oracle(n, 0, 5000));
        REQUIRE(disagree_len(n, 5000).length == agreement_oracle(n, 1, 5000));
    }

    CHECK(agree_len(0, 2) == AgreementResult{2, true});
    CHECK(agree_len(0, 1) == AgreementResult{1, true});
    CHECK_THROWS_AS(agree_len(std::uint64_t{1} << 62, 1), std::out_of_range);
}

TEST_CASE("records")
{
    const RecordsScan agree = records(AgreementKind::agree, 16, 10000);
    REQUIRE(agree.entries.size() >= 3);
    CHECK(agree.entries[0] == RecordEntry{0, 2});
    CHECK(agree.entries[1] == RecordEntry{3, 3});
    CHECK(agree.entries[2] == RecordEntry{10, 22});
    CHECK(agree.reliable());

    const RecordsScan dis = records(AgreementKind::disagree, 16, 10000);
    REQUIRE(dis.entries.size() >= 4);
    CHECK(dis.entries[0] == RecordEntry{0, 0});
    CHECK(dis.entries[1] == RecordEntry{1, 1});
    CHECK(dis.entries[2] == RecordEntry{2, 6});
    CHECK(dis.entries[3] == RecordEntry{14, 10});

    const RecordsScan single = records(AgreementKind::agree, 1, 10);
    CHECK(single.entries == std::vector<RecordEntry>{{0, 2}});

    // Strictly increasing positions and values.
    for (std::size_t i = 1; i < agree.entries.size(); ++i) {
        CHECK(agree.entries[i].position > agree.entries[i - 1].position);
        CHECK(agree.entries[i].value > agree.entries[i - 1].value);
    }

    // A cap hit is flagged, never hidden.
    const RecordsScan tight = records(AgreementKind::agree, 16, 5);
    REQUIRE_FALSE(tight.reliable());
    CHECK(*tight.first_capped == 10);
    CHECK(default_records_cap(100) == 464);
}

TEST_CASE("conjectured closed forms")
{
    const auto c0 = conjecture_C(0);
    CHECK(c0.position == 0);
    CHECK(c0.value == 2u);
    CHECK(conjecture_C(1).position == 3);
    CHECK(conjecture_C(1).value == 3u);
    CHECK(conjecture_C(2).position == 10);
    CHECK(conjecture_C(2).value == 22u);
    CHECK(conjecture_C(3).position == 58);
    CHECK(conjecture_C(3).value == 38u);

    CHECK(conjecture_D(0).position == 0);
    CHECK_FALSE(conjecture_D(0).value);
    CHECK(conjecture_D(1).position == 1);
    CHECK_FALSE(conjecture_D(1).value);
    CHECK(conjecture_D(2).position == 2);
    CHECK(conjecture_D(2).value == 6u);
    CHECK(conjecture_D(3).position == 14);
    CHECK(conjecture_D(3).value == 10u);

    for (unsigned n = 0; n <= 15; ++n) {
        CHECK_NOTHROW(conjecture_C(n));
        CHECK_NOTHROW(conjecture_D(n));
    }
    CHECK_THROWS_AS(conjecture_C(16), std::domain_error);
    CHECK_THROWS_AS(conjecture_D(16), std::domain_error);
}

TEST_CASE("check_triple")
{
    CHECK_FALSE(check_triple(1, 2, 3, 100000));
    CHECK_FALSE(check_triple(2, 4, 6, 100000));
    // Frozen from a brute-force scan: t(4)=1 while t(5)=t(6)=t(9)=0.
    CHECK(check_triple(1, 2, 5, 100000) == 4u);
    CHECK_THROWS_AS(check_triple(2, 2, 3, 10), std::invalid_argument);
    CHECK_THROWS_AS(check_triple(0, 2, 3, 10), std::invalid_argument);
}

TEST_CASE("beta_gamma")
{
    const BetaGamma one = beta_gamma(1, 6);
    CHECK(one.beta == std::vector<int>{1, -1, 1, -1, 1, -1});
    CHECK(smallest_period(one.beta) == 2u);

    const BetaGamma two = beta_gamma(2, 8);
    CHECK(smallest_period(two.beta) == 4u);
    for (std::size_t i = 0; i < 8; ++i)
        CHECK(two.beta[i] == -two.gamma[i]);

    CHECK_THROWS_AS(beta_gamma(1, 100, 10), std::range_error);
    CHECK_THROWS_AS(beta_gamma(0, 1), std::invalid_argument);
}

TEST_CASE("smallest_period")
{
    CHECK(smallest_period(std::vector<int>{0, 1, 0, 1, 0, 1}) == 2u);
    CHECK_FALSE(smallest_period(std::vector<int>{0, 1, 1, 0}));
    CHECK(smallest_period(std::vector<int>{0, 0, 0, 0}) == 1u);
    CHECK_FALSE(smallest_period(std::vector<int>{0}));
    CHECK(smallest_period(std::vector<char>{'a', 'b', 'c', 'a', 'b', 'c', 'a'}) == 3u);
}

TEST_CASE("period_report")
{
    CHECK(val2(1) == 0);
    CHECK(val2(12) == 2);
    CHECK_THROWS_AS(val2(0), std::domain_error);

    const PeriodReport rep = period_report(12);
    CHECK(rep.prefix_length == 32);
    CHECK(rep.expected_period == 8);
    CHECK(rep.matches_expected());
}
