#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "tmanalogs/sequences.hpp"

namespace tmanalogs {

// Base -2 digits, least-significant first. Zero is the single digit 0.
struct NegabinaryDigits {
    std::vector<std::uint8_t> digits;

    // Most-significant first, e.g. "11011" for 7.
    std::string to_string() const;
    static NegabinaryDigits from_string(std::string_view msb_first);

    std::size_t ones() const;

    friend bool operator==(const NegabinaryDigits&, const NegabinaryDigits&) = default;
};

// Radix-2 digits over {-1, 0, 1}, least-significant first. Zero is empty.
struct BalancedDigits {
    std::vector<std::int8_t> digits;

    // Signed tuple, most-significant first: "(1,0,0,-1)". Zero renders as "(0)".
    std::string to_string() const;

    friend bool operator==(const BalancedDigits&, const BalancedDigits&) = default;
};

/// Number of maximal blocks of consecutive 1 bits in n.
unsigned runs_of_ones(std::uint64_t n);

/// Canonical base -2 expansion. Requires n < 2^62.
NegabinaryDigits to_negabinary(std::uint64_t n);

/// Sum of d[i] * (-2)^i. Throws std::invalid_argument on a digit outside {0,1}
/// and std::out_of_range on more than 63 digits.
std::int64_t from_negabinary(const NegabinaryDigits& d);

/// Each run of 1's over bit positions a..b becomes +1 at b+1 and -1 at a.
/// Requires n < 2^62.
BalancedDigits to_balanced(std::uint64_t n);

std::int64_t balanced_value(const BalancedDigits& d);

// Binary rendering, most-significant first; "0" for zero.
std::string to_binary_string(std::uint64_t n);

// Closed-form negabinary digit patterns, assembled literally from the
// published digit strings. Each throws std::domain_error outside its domain.

/// 2^m - 1 for m >= 2: 1 0^{m-2} 11 (m even), 11 0^{m-2} 11 (m odd).
NegabinaryDigits lemma1_form(unsigned m);

/// g_{2^m - 1} predicted from m alone.
Bit corollary1_value(unsigned m);

/// 2^{m+k+1} - 2^m - 1 for odd m >= 3:
/// 1 0^k 1 0^{m-2} 11 (k even), 11 0^k 1 0^{m-2} 11 (k odd).
NegabinaryDigits lemma2_form_a(unsigned m, unsigned k);

/// 2(2^{k+1} - 1): 1 0^k 10 (k even), 11 0^k 10 (k odd).
NegabinaryDigits lemma2_form_b(unsigned k);

}  // namespace tmanalogs
