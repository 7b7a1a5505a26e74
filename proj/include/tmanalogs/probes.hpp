#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace tmanalogs {

// Longest prefix length on which G agrees with (or complements) T shifted by n.
struct AgreementResult {
    std::uint64_t length = 0;
    bool capped = false;  // true: the real value is >= length

    friend bool operator==(const AgreementResult&, const AgreementResult&) = default;
};

enum class AgreementKind { agree, disagree };

/// Largest k <= cap with g_r == t_{r+n} for every r < k.
AgreementResult agree_len(std::uint64_t n, std::uint64_t cap);

/// Largest k <= cap with g_r == 1 - t_{r+n} for every r < k.
AgreementResult disagree_len(std::uint64_t n, std::uint64_t cap);

AgreementResult agreement(AgreementKind kind, std::uint64_t n, std::uint64_t cap);

struct RecordEntry {
    std::uint64_t position = 0;
    std::uint64_t value = 0;

    friend bool operator==(const RecordEntry&, const RecordEntry&) = default;
};

struct RecordsScan {
    std::vector<RecordEntry> entries;
    // Set when some n hit the cap; such a scan is not a valid result.
    std::optional<std::uint64_t> first_capped;

    bool reliable() const { return !first_capped.has_value(); }
};

inline constexpr std::uint64_t default_records_cap(std::uint64_t limit) { return 4 * limit + 64; }

/// Running maxima of agree_len / disagree_len over n = 0 .. limit-1.
RecordsScan records(AgreementKind kind, std::uint64_t limit, std::uint64_t cap);
RecordsScan records(AgreementKind kind, std::uint64_t limit);

// Conjectured record position and value for the agreement records.
struct ConjecturePoint {
    std::uint64_t position = 0;
    std::optional<std::uint64_t> value;
};

/// l(n), a(n) for the G-versus-T agreement records. Requires n <= 15.
ConjecturePoint conjecture_C(unsigned n);

/// m(n), b(n) for the disagreement records; b is absent for n < 2.
/// Requires n <= 15.
ConjecturePoint conjecture_D(unsigned n);

/// Smallest n < limit with t_{n+x} != t_n for every x in {a, b, c}, if any.
/// Requires 0 < a < b < c.
std::optional<std::uint64_t> check_triple(std::uint64_t a, std::uint64_t b, std::uint64_t c, std::uint64_t limit);

struct BetaGamma {
    std::vector<int> beta;   // u at the indices where u(i + a) == -u(i)
    std::vector<int> gamma;  // u at the indices where u(i + a) == u(i)
};

inline constexpr std::uint64_t default_search_bound(std::uint64_t a, std::uint64_t count)
{
    return 64 * (a + count) + 1024;
}

/// First `count` terms of beta_a and gamma_a. Throws std::range_error if the
/// indices below `search_bound` do not supply enough terms.
BetaGamma beta_gamma(std::uint64_t a, std::size_t count, std::uint64_t search_bound);
BetaGamma beta_gamma(std::uint64_t a, std::size_t count);

/// Smallest p with w[i] == w[i+p] for all i, accepted only when p <= |w|/2.
template <typename T>
std::optional<std::size_t> smallest_period(std::span<const T> w)
{
    for (std::size_t p = 1; 2 * p <= w.size(); ++p) {
        bool periodic = true;
        for (std::size_t i = 0; i + p < w.size() && periodic; ++i)
            periodic = w[i] == w[i + p];
        if (periodic)
            return p;
    }
    return std::nullopt;
}

template <typename T>
std::optional<std::size_t> smallest_period(const std::vector<T>& w)
{
    return smallest_period(std::span<const T>(w));
}

// 2-adic valuation of a > 0.
unsigned val2(std::uint64_t a);

struct PeriodReport {
    std::uint64_t shift = 0;
    std::size_t prefix_length = 0;
    std::optional<std::size_t> beta_period;
    std::optional<std::size_t> gamma_period;
    bool antisymmetric = false;
    std::size_t expected_period = 0;  // 2^{val2(a)+1}

    bool matches_expected() const
    {
        return beta_period == expected_period && gamma_period == expected_period && antisymmetric;
    }
};

/// Smallest periods of beta_a and gamma_a over `prefix_length` terms
/// (default 2^{val2(a)+3}) and whether beta_a == -gamma_a there.
PeriodReport period_report(std::uint64_t a, std::size_t prefix_length = 0);

}  // namespace tmanalogs
