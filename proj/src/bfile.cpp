#include "tmanalogs/bfile.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include <boost/multiprecision/cpp_int.hpp>

#include "tmanalogs/numerals.hpp"
#include "tmanalogs/words.hpp"

namespace tmanalogs {

namespace {

std::string_view trim(std::string_view s)
{
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos)
        return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::int64_t parse_integer(std::string_view token, std::size_t line)
{
    std::int64_t v = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
    if (ec != std::errc{} || ptr != token.data() + token.size())
        throw BFileError(BFileError::Kind::parse, line, "not an integer: '" + std::string(token) + "'");
    return v;
}

}  // namespace

BFile read_bfile(std::string_view text, std::string source)
{
    BFile f;
    f.source = std::move(source);
    std::size_t line_no = 0;
    while (!text.empty()) {
        const auto eol = text.find('\n');
        const std::string_view raw = text.substr(0, eol);
        text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
        ++line_no;

        const std::string_view line = trim(raw);
        if (line.empty() || line.front() == '#')
            continue;

        const auto sep = line.find_first_of(" \t");
        if (sep == std::string_view::npos)
            throw BFileError(BFileError::Kind::parse, line_no, "expected 'index value'");
        const std::string_view index_tok = line.substr(0, sep);
        const std::string_view value_tok = trim(line.substr(sep));
        if (value_tok.find_first_of(" \t") != std::string_view::npos)
            throw BFileError(BFileError::Kind::parse, line_no, "trailing tokens after value");

        BFileEntry e;
        e.index = parse_integer(index_tok, line_no);
        e.value = parse_integer(value_tok, line_no);
        e.token = std::string(value_tok);
        if (!f.entries.empty() && e.index != f.entries.back().index + 1)
            throw BFileError(BFileError::Kind::gap, line_no,
                             "index " + std::to_string(e.index) + " does not follow " +
                                 std::to_string(f.entries.back().index));
        f.entries.push_back(std::move(e));
    }
    return f;
}

BFile read_bfile_path(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open b-file '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return read_bfile(ss.str(), path);
}

std::string write_bfile(const BFile& f)
{
    std::string out;
    for (const auto& e : f.entries) {
        out += std::to_string(e.index);
        out += ' ';
        out += e.token.empty() ? std::to_string(e.value) : e.token;
        out += '\n';
    }
    return out;
}

BFile make_bfile(SequenceId seq, std::uint64_t start, std::uint64_t count)
{
    const Word w = stream(seq, start, count);
    BFile f;
    f.source = to_string(seq);
    f.entries.reserve(w.size());
    for (std::size_t i = 0; i < w.size(); ++i)
        f.entries.push_back({static_cast<std::int64_t>(start + i), w[i], std::to_string(w[i])});
    return f;
}

std::optional<TermMismatch> verify_against_bfile(SequenceId seq, const BFile& f)
{
    for (const auto& e : f.entries) {
        if (e.index < 0)
            return TermMismatch{e.index, e.token, "(negative index)"};
        const Bit actual = term(seq, static_cast<std::uint64_t>(e.index));
        if (e.value != actual)
            return TermMismatch{e.index, e.token, std::to_string(actual)};
    }
    return std::nullopt;
}

std::optional<TermMismatch> verify_negabinary_bfile(const BFile& f)
{
    for (const auto& e : f.entries) {
        if (e.index < 0)
            return TermMismatch{e.index, e.token, "(negative index)"};
        const std::string actual = to_negabinary(static_cast<std::uint64_t>(e.index)).to_string();
        if (e.token != actual)
            return TermMismatch{e.index, e.token, actual};
    }
    return std::nullopt;
}

std::string constant_digits(SequenceId seq, std::uint64_t count)
{
    if (count > kMaxScanLength)
        throw std::length_error("constant_digits: count exceeds 2^24");
    return "0." + to_bits(stream(seq, 0, count));
}

std::string constant_decimal(SequenceId seq, std::uint64_t count, unsigned places)
{
    using boost::multiprecision::cpp_int;
    if (count > kMaxScanLength)
        throw std::length_error("constant_decimal: count exceeds 2^24");

    const Word w = stream(seq, 0, count);
    cpp_int numerator = 0;
    for (Bit b : w) {
        numerator <<= 1;
        numerator += b;
    }
    // value = numerator / 2^count; scaled = value * 10^places, rounded half-even.
    cpp_int scaled = numerator * boost::multiprecision::pow(cpp_int(10), places);
    cpp_int quotient = scaled >> count;
    const cpp_int remainder = scaled - (quotient << count);
    const cpp_int twice = remainder << 1;
    const cpp_int denom = cpp_int(1) << count;
    if (twice > denom || (twice == denom && (quotient & 1) != 0))
        ++quotient;

    std::string digits = quotient.str();
    if (digits.size() <= places)
        digits.insert(0, places + 1 - digits.size(), '0');
    const std::string int_part = digits.substr(0, digits.size() - places);
    if (places == 0)
        return int_part;
    return int_part + "." + digits.substr(digits.size() - places);
}

}  // namespace tmanalogs
