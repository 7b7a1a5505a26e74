#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace tmanalogs {

// One term of T, R or G. Kept as a 0/1 integer so that 1 - x reads as written.
using Bit = std::uint8_t;

// A finite 0/1 word: a prefix or factor of one of the sequences.
using Word = std::vector<Bit>;

// Largest admissible index for the term functions (2^63 - 1).
inline constexpr std::uint64_t kMaxIndex = (std::uint64_t{1} << 63) - 1;

enum class SequenceId { T, R, G };

inline constexpr Bit complement(Bit b) { return static_cast<Bit>(1 - b); }

std::string to_string(SequenceId id);

// Accepts "T", "R", "G" (case-insensitive); throws std::invalid_argument otherwise.
SequenceId parse_sequence_id(std::string_view text);

/// Thue-Morse: parity of the binary digit sum of n.
Bit t(std::uint64_t n);

/// Parity of the number of runs of 1's in binary n, computed by the
/// recursion r_{2n} = r_n, r_{2n+1} = 1 - r_n (n even), r_{2n+1} = r_n (n odd),
/// consuming one low bit per step.
Bit r(std::uint64_t n);

/// Parity of the number of 1's in the base -2 expansion of n, computed by the
/// four-way recursion on n mod 4 (g_{4n}=g_n, g_{4n+1}=1-g_n,
/// g_{4n+2}=1-g_{n+1}, g_{4n+3}=g_{n+1}).
Bit g(std::uint64_t n);

// Definition-based routes; they exist to cross-check r() and g().
Bit r_direct(std::uint64_t n);
Bit g_direct(std::uint64_t n);

/// u(n) = (-1)^{t_n}.
int u(std::uint64_t n);

Bit term(SequenceId id, std::uint64_t n);

/// Terms id[start], ..., id[start + count - 1].
/// Throws std::out_of_range when start + count exceeds the index domain.
Word stream(SequenceId id, std::uint64_t start, std::uint64_t count);

// '0'/'1' rendering of a word.
std::string to_bits(const Word& w);
Word from_bits(std::string_view bits);

}  // namespace tmanalogs
