#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>

#include "tmanalogs/sequences.hpp"

namespace tmanalogs {

// A factor X^power of a word, X = w[position, position + period).
struct PowerOccurrence {
    std::size_t position = 0;
    std::size_t period = 0;
    unsigned power = 0;

    friend bool operator==(const PowerOccurrence&, const PowerOccurrence&) = default;
};

// True iff `occ` describes a genuine power inside `w`.
bool is_power_at(std::span<const Bit> w, const PowerOccurrence& occ);

/// Leftmost X^k with |X| <= max_period; among equal positions the smallest
/// period wins. Each period is scanned by a single sweep over the match
/// indicator w[i] == w[i+p], reporting when a run of matches reaches (k-1)p.
/// Periods are split round-robin over `threads` workers.
///
/// Throws std::domain_error for k < 2 or max_period == 0. Periods above
/// |w|/k are ignored, and a word shorter than k has no power.
std::optional<PowerOccurrence> find_power(std::span<const Bit> w, unsigned k, std::size_t max_period,
                                          unsigned threads = 1);

// Brute-force reference for find_power: compares every candidate factor directly.
std::optional<PowerOccurrence> find_power_naive(std::span<const Bit> w, unsigned k, std::size_t max_period);

inline constexpr std::uint64_t kMaxScanLength = std::uint64_t{1} << 24;
inline constexpr std::uint64_t kFullScanLength = std::uint64_t{1} << 16;
inline constexpr std::size_t kDefaultPeriodCap = 4096;

struct ScanReport {
    SequenceId sequence = SequenceId::T;
    unsigned power = 0;
    std::uint64_t scanned_length = 0;
    std::size_t max_period = 0;
    std::optional<PowerOccurrence> violation;

    bool power_free() const { return !violation.has_value(); }

    // seq=<id> k=<k> len=<n> max_period=<p> verdict=<ok|FAIL pos=<i> period=<q>>
    std::string to_string() const;
};

/// Scans the first `length` terms of `seq` for a `power`-th power.
/// Without an explicit cap every period is scanned up to length 2^16; longer
/// prefixes use a period cap of 4096, recorded in the report.
ScanReport verify_power_free(SequenceId seq, unsigned power, std::uint64_t length,
                             std::optional<std::size_t> max_period = std::nullopt, unsigned threads = 0);

}  // namespace tmanalogs
