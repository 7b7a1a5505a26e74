#include "tmanalogs/blocks.hpp"

#include <cassert>
#include <stdexcept>
#include <string>

namespace tmanalogs {

namespace {

void check_order(unsigned k, unsigned lowest)
{
    if (k < lowest || k > kMaxBlockOrder)
        throw std::length_error("block order k=" + std::to_string(k) + " outside [" + std::to_string(lowest) + ", " +
                                std::to_string(kMaxBlockOrder) + "]");
}

void check_shift(unsigned k, std::uint64_t n)
{
    if (k < 1 || k > 62)
        throw std::out_of_range("shift relation: k must be in [1, 62]");
    if (n >= (std::uint64_t{1} << k))
        throw std::out_of_range("shift relation: index must be below 2^k");
}

// Appends a copy of the current word, then flips entries [from, to) of the copy.
void double_with_flips(Word& w, std::size_t from, std::size_t to)
{
    const std::size_t half = w.size();
    w.resize(2 * half);
    for (std::size_t i = 0; i < half; ++i)
        w[half + i] = w[i];
    for (std::size_t i = from; i < to; ++i)
        w[half + i] = complement(w[half + i]);
}

}  // namespace

Word block_R(unsigned k)
{
    check_order(k, 1);
    Word w{0, 1};
    w.reserve(std::size_t{1} << k);
    for (unsigned j = 1; j < k; ++j)
        double_with_flips(w, 0, std::size_t{1} << (j - 1));
    return w;
}

std::uint64_t block_G_tail_length(unsigned k)
{
    if (k % 2 == 0)
        throw std::domain_error("block_G_tail_length: defined for odd k only");
    const std::uint64_t base = (std::uint64_t{1} << (k - 1)) - 1;
    // 2^{k-1} - 1 = 4^{(k-1)/2} - 1 is divisible by 3 for odd k.
    assert(base % 3 == 0);
    if (base % 3 != 0)
        throw std::logic_error("block_G_tail_length: 3 does not divide 2^{k-1} - 1");
    return 2 * (base / 3);
}

Word block_G(unsigned k)
{
    check_order(k, 0);
    Word w{0};
    w.reserve(std::size_t{1} << k);
    for (unsigned j = 0; j < k; ++j) {
        const std::size_t len = w.size();
        if (j % 2 == 0)
            double_with_flips(w, 0, len);
        else
            double_with_flips(w, len - block_G_tail_length(j), len);
    }
    return w;
}

Bit shift_relation_R(unsigned k, std::uint64_t n)
{
    check_shift(k, n);
    const Bit base = r(n);
    return n < (std::uint64_t{1} << (k - 1)) ? complement(base) : base;
}

Bit shift_relation_G(unsigned k, std::uint64_t m)
{
    check_shift(k, m);
    const Bit base = g(m);
    if (k % 2 == 0)
        return complement(base);
    const std::uint64_t threshold = (std::uint64_t{1} << k) - block_G_tail_length(k);
    return m < threshold ? base : complement(base);
}

}  // namespace tmanalogs
