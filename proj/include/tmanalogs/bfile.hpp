#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "tmanalogs/sequences.hpp"

namespace tmanalogs {

// One `index value` line. `token` keeps the value as written, which matters
// for sequences whose terms are digit strings (A039724).
struct BFileEntry {
    std::int64_t index = 0;
    std::int64_t value = 0;
    std::string token;

    friend bool operator==(const BFileEntry&, const BFileEntry&) = default;
};

struct BFile {
    std::vector<BFileEntry> entries;
    std::string source;
};

class BFileError : public std::runtime_error {
public:
    enum class Kind { parse, gap };

    BFileError(Kind kind, std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), kind_(kind), line_(line)
    {
    }

    Kind kind() const { return kind_; }
    std::size_t line() const { return line_; }

private:
    Kind kind_;
    std::size_t line_;
};

/// Parses OEIS b-file text. Blank lines and lines starting with '#' are
/// skipped; every other line must be two integers, with indices increasing
/// by exactly one. Throws BFileError carrying the 1-based line number.
BFile read_bfile(std::string_view text, std::string source = {});
BFile read_bfile_path(const std::string& path);

std::string write_bfile(const BFile& f);

// Terms start .. start+count-1 of `seq` as a b-file.
BFile make_bfile(SequenceId seq, std::uint64_t start, std::uint64_t count);

struct TermMismatch {
    std::int64_t index = 0;
    std::string expected;  // from the file
    std::string actual;    // computed

    friend bool operator==(const TermMismatch&, const TermMismatch&) = default;
};

/// First index in the file's range where `seq` differs from the file.
std::optional<TermMismatch> verify_against_bfile(SequenceId seq, const BFile& f);

/// A039724-style files: each value is the base -2 expansion of the index
/// written as a decimal digit string; compared token-for-token.
std::optional<TermMismatch> verify_negabinary_bfile(const BFile& f);

/// "0." followed by the first `count` terms of `seq`.
std::string constant_digits(SequenceId seq, std::uint64_t count);

/// The dyadic value of those `count` digits, rounded half-to-even to
/// `places` decimal places, computed in exact integer arithmetic.
std::string constant_decimal(SequenceId seq, std::uint64_t count, unsigned places);

}  // namespace tmanalogs
