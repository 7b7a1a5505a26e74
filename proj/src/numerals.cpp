#include "tmanalogs/numerals.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace tmanalogs {

namespace {

constexpr std::uint64_t kNumeralLimit = std::uint64_t{1} << 62;

NegabinaryDigits from_pattern(const std::string& msb_first)
{
    return NegabinaryDigits::from_string(msb_first);
}

std::string zeros(unsigned count)
{
    return std::string(count, '0');
}

}  // namespace

std::string NegabinaryDigits::to_string() const
{
    if (digits.empty())
        return "0";
    std::string s;
    s.reserve(digits.size());
    for (auto it = digits.rbegin(); it != digits.rend(); ++it)
        s.push_back(static_cast<char>('0' + *it));
    return s;
}

NegabinaryDigits NegabinaryDigits::from_string(std::string_view msb_first)
{
    if (msb_first.empty())
        throw std::invalid_argument("negabinary: empty digit string");
    NegabinaryDigits d;
    d.digits.reserve(msb_first.size());
    for (auto it = msb_first.rbegin(); it != msb_first.rend(); ++it) {
        if (*it != '0' && *it != '1')
            throw std::invalid_argument("negabinary: malformed digit '" + std::string(1, *it) + "'");
        d.digits.push_back(static_cast<std::uint8_t>(*it - '0'));
    }
    while (d.digits.size() > 1 && d.digits.back() == 0)
        d.digits.pop_back();
    return d;
}

std::size_t NegabinaryDigits::ones() const
{
    return static_cast<std::size_t>(std::count(digits.begin(), digits.end(), std::uint8_t{1}));
}

std::string BalancedDigits::to_string() const
{
    if (digits.empty())
        return "(0)";
    std::string s = "(";
    for (auto it = digits.rbegin(); it != digits.rend(); ++it) {
        if (it != digits.rbegin())
            s.push_back(',');
        s += std::to_string(static_cast<int>(*it));
    }
    s.push_back(')');
    return s;
}

unsigned runs_of_ones(std::uint64_t n)
{
    // A run starts at each set bit whose lower neighbour is clear.
    return static_cast<unsigned>(std::popcount(n & ~(n << 1)));
}

NegabinaryDigits to_negabinary(std::uint64_t n)
{
    if (n >= kNumeralLimit)
        throw std::out_of_range("to_negabinary: n must be below 2^62");
    NegabinaryDigits d;
    auto v = static_cast<std::int64_t>(n);
    if (v == 0) {
        d.digits.push_back(0);
        return d;
    }
    while (v != 0) {
        const std::int64_t digit = v & 1;
        d.digits.push_back(static_cast<std::uint8_t>(digit));
        v = (v - digit) / -2;
    }
    return d;
}

std::int64_t from_negabinary(const NegabinaryDigits& d)
{
    if (d.digits.size() > 63)
        throw std::out_of_range("from_negabinary: more than 63 digits");
    std::int64_t value = 0;
    std::int64_t weight = 1;
    for (std::size_t i = 0; i < d.digits.size(); ++i) {
        const auto digit = d.digits[i];
        if (digit > 1)
            throw std::invalid_argument("from_negabinary: digit " + std::to_string(digit) + " at position " +
                                        std::to_string(i) + " is not 0 or 1");
        if (digit)
            value += weight;
        if (i + 1 < d.digits.size())
            weight *= -2;
    }
    return value;
}

BalancedDigits to_balanced(std::uint64_t n)
{
    if (n >= kNumeralLimit)
        throw std::out_of_range("to_balanced: n must be below 2^62");
    BalancedDigits d;
    if (n == 0)
        return d;
    d.digits.assign(static_cast<std::size_t>(std::bit_width(n)) + 1, 0);
    const std::uint64_t run_starts = n & ~(n << 1);
    const std::uint64_t run_ends = n & ~(n >> 1);
    for (std::size_t i = 0; i + 1 < d.digits.size(); ++i) {
        if ((run_starts >> i) & 1)
            d.digits[i] = -1;
        if ((run_ends >> i) & 1)
            d.digits[i + 1] = 1;
    }
    return d;
}

std::int64_t balanced_value(const BalancedDigits& d)
{
    std::int64_t value = 0;
    for (std::size_t i = d.digits.size(); i-- > 0;)
        value = 2 * value + d.digits[i];
    return value;
}

std::string to_binary_string(std::uint64_t n)
{
    if (n == 0)
        return "0";
    std::string s;
    for (int i = std::bit_width(n) - 1; i >= 0; --i)
        s.push_back(static_cast<char>('0' + ((n >> i) & 1)));
    return s;
}

NegabinaryDigits lemma1_form(unsigned m)
{
    if (m < 2 || m > 62)
        throw std::domain_error("lemma1_form: requires 2 <= m <= 62");
    const std::string head = (m % 2 == 0) ? "1" : "11";
    return from_pattern(head + zeros(m - 2) + "11");
}

Bit corollary1_value(unsigned m)
{
    if (m > 62)
        throw std::domain_error("corollary1_value: requires m <= 62");
    if (m == 0)
        return 0;
    if (m == 1)
        return 1;
    return m % 2 == 0 ? 1 : 0;
}

NegabinaryDigits lemma2_form_a(unsigned m, unsigned k)
{
    if (m < 3 || m % 2 == 0)
        throw std::domain_error("lemma2_form_a: m must be odd and >= 3");
    if (m + k + 1 > 61)
        throw std::domain_error("lemma2_form_a: value exceeds 62 bits");
    const std::string head = (k % 2 == 0) ? "1" : "11";
    return from_pattern(head + zeros(k) + "1" + zeros(m - 2) + "11");
}

NegabinaryDigits lemma2_form_b(unsigned k)
{
    if (k + 2 > 61)
        throw std::domain_error("lemma2_form_b: value exceeds 62 bits");
    const std::string head = (k % 2 == 0) ? "1" : "11";
    return from_pattern(head + zeros(k) + "10");
}

}  // namespace tmanalogs
