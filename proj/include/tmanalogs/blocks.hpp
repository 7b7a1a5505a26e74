#pragma once

#include <cstdint>

#include "tmanalogs/sequences.hpp"

namespace tmanalogs {

inline constexpr unsigned kMaxBlockOrder = 24;

/// First 2^k terms of R built by doubling: R_1 = 01 and R_{k+1} = R_k S_k,
/// where S_k is R_k with its first 2^{k-1} entries complemented.
/// Requires 1 <= k <= 24 (std::length_error otherwise).
Word block_R(unsigned k);

/// First 2^k terms of G built by doubling from G_0 = 0. For even k the new
/// half is the full complement of G_k; for odd k it is G_k with only its last
/// (2/3)(2^{k-1} - 1) entries complemented. Requires k <= 24.
Word block_G(unsigned k);

// Number of trailing entries flipped when doubling G_k for odd k.
std::uint64_t block_G_tail_length(unsigned k);

/// Predicted r_{n + 2^k}: 1 - r_n for n < 2^{k-1}, r_n otherwise.
/// Requires k >= 1 and n < 2^k (std::out_of_range otherwise).
Bit shift_relation_R(unsigned k, std::uint64_t n);

/// Predicted g_{2^k + m}. Even k: 1 - g_m across the whole range.
/// Odd k: g_m below 2^k - (2/3)(2^{k-1} - 1), 1 - g_m from there up.
/// Requires k >= 1 and m < 2^k.
Bit shift_relation_G(unsigned k, std::uint64_t m);

}  // namespace tmanalogs
