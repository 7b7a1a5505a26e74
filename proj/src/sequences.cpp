#include "tmanalogs/sequences.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <stdexcept>
#include <thread>

#include "tmanalogs/numerals.hpp"

namespace tmanalogs {

std::string to_string(SequenceId id)
{
    switch (id) {
    case SequenceId::T: return "T";
    case SequenceId::R: return "R";
    case SequenceId::G: return "G";
    }
    return "?";
}

SequenceId parse_sequence_id(std::string_view text)
{
    if (text.size() == 1) {
        switch (std::toupper(static_cast<unsigned char>(text[0]))) {
        case 'T': return SequenceId::T;
        case 'R': return SequenceId::R;
        case 'G': return SequenceId::G;
        default: break;
        }
    }
    throw std::invalid_argument("unknown sequence id '" + std::string(text) + "' (expected T, R or G)");
}

Bit t(std::uint64_t n)
{
    return static_cast<Bit>(std::popcount(n) & 1);
}

Bit r(std::uint64_t n)
{
    // Walk from the low end: r_n is r_{n>>1}, flipped iff n is odd and n>>1 is even.
    Bit flips = 0;
    while (n > 1) {
        const std::uint64_t half = n >> 1;
        if ((n & 1) && !(half & 1))
            flips ^= 1;
        n = half;
    }
    // r_1 = 1 - r_0 = 1.
    return static_cast<Bit>(flips ^ (n & 1));
}

Bit g(std::uint64_t n)
{
    // Peel two bits per step; the 4n+2 and 4n+3 cases move to n+1.
    Bit flips = 0;
    while (n > 0) {
        const std::uint64_t q = n >> 2;
        switch (n & 3) {
        case 0: n = q; break;
        case 1: flips ^= 1; n = q; break;
        case 2: flips ^= 1; n = q + 1; break;
        case 3: n = q + 1; break;
        }
    }
    return flips;
}

Bit r_direct(std::uint64_t n)
{
    return static_cast<Bit>(runs_of_ones(n) & 1);
}

Bit g_direct(std::uint64_t n)
{
    const NegabinaryDigits d = to_negabinary(n);
    unsigned ones = 0;
    for (auto digit : d.digits)
        ones += digit;
    return static_cast<Bit>(ones & 1);
}

int u(std::uint64_t n)
{
    return 1 - 2 * static_cast<int>(t(n));
}

Bit term(SequenceId id, std::uint64_t n)
{
    switch (id) {
    case SequenceId::T: return t(n);
    case SequenceId::R: return r(n);
    case SequenceId::G: return g(n);
    }
    return 0;
}

Word stream(SequenceId id, std::uint64_t start, std::uint64_t count)
{
    if (start > kMaxIndex || count > kMaxIndex - start)
        throw std::out_of_range("stream: start + count exceeds 2^63 - 1");

    Word out(count);
    constexpr std::uint64_t kChunk = std::uint64_t{1} << 16;
    const unsigned workers = count >= 4 * kChunk ? std::max(1u, std::thread::hardware_concurrency()) : 1u;
    auto fill = [&](std::uint64_t lo, std::uint64_t hi) {
        for (std::uint64_t i = lo; i < hi; ++i)
            out[i] = term(id, start + i);
    };
    if (workers == 1) {
        fill(0, count);
        return out;
    }
    {
        std::vector<std::jthread> pool;
        const std::uint64_t per = (count + workers - 1) / workers;
        for (unsigned w = 0; w < workers; ++w) {
            const std::uint64_t lo = w * per;
            const std::uint64_t hi = std::min(count, lo + per);
            if (lo < hi)
                pool.emplace_back(fill, lo, hi);
        }
    }
    return out;
}

std::string to_bits(const Word& w)
{
    std::string s(w.size(), '0');
    for (std::size_t i = 0; i < w.size(); ++i)
        s[i] = static_cast<char>('0' + w[i]);
    return s;
}

Word from_bits(std::string_view bits)
{
    Word w;
    w.reserve(bits.size());
    for (char c : bits) {
        if (c != '0' && c != '1')
            throw std::invalid_argument("from_bits: expected only '0' and '1'");
        w.push_back(static_cast<Bit>(c - '0'));
    }
    return w;
}

}  // namespace tmanalogs
