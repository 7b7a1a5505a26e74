#include "tmanalogs/words.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <thread>
#include <vector>

namespace tmanalogs {

namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

// The word packed 64 entries per block, entry i at bit (i % 64) of block i / 64.
class PackedWord {
public:
    explicit PackedWord(std::span<const Bit> w)
        : size_(w.size()), blocks_(w.size() / 64 + 2, 0)
    {
        for (std::size_t i = 0; i < w.size(); ++i)
            blocks_[i / 64] |= std::uint64_t{w[i]} << (i % 64);
    }

    std::size_t size() const { return size_; }

    // Entries [from, from + 64); positions past the end read as 0.
    std::uint64_t window(std::size_t from) const
    {
        const std::size_t j = from / 64;
        const unsigned s = from % 64;
        if (s == 0)
            return blocks_[j];
        return (blocks_[j] >> s) | (blocks_[j + 1] << (64 - s));
    }

private:
    std::size_t size_;
    std::vector<std::uint64_t> blocks_;
};

// Earliest start of a power whose repeated span w[i] == w[i+p] covers
// span_len consecutive i, or kNone. The mismatch indicator is swept one
// 64-bit block at a time; positions past n - p count as mismatches.
// Gives up once every remaining start would lie beyond `bound`.
std::size_t earliest_with_period(const PackedWord& w, std::size_t span_len, std::size_t p,
                                 const std::atomic<std::size_t>& bound)
{
    const std::size_t valid = w.size() - p;
    std::size_t run = 0;
    for (std::size_t base = 0; base < valid; base += 64) {
        if (base - run > bound.load(std::memory_order_relaxed))
            return kNone;
        std::uint64_t diff = w.window(base) ^ w.window(base + p);
        if (valid - base < 64)
            diff |= ~std::uint64_t{0} << (valid - base);

        if (diff == 0) {
            if (run + 64 >= span_len)
                return base - run;
            run += 64;
            continue;
        }
        const auto low = static_cast<std::size_t>(std::countr_zero(diff));
        if (run + low >= span_len)
            return base - run;
        if (span_len < 63) {
            // Zero gaps strictly inside the block.
            std::uint64_t rest = diff;
            std::size_t last = low;
            rest &= rest - 1;
            while (rest) {
                const auto next = static_cast<std::size_t>(std::countr_zero(rest));
                if (next - last - 1 >= span_len)
                    return base + last + 1;
                last = next;
                rest &= rest - 1;
            }
        }
        run = static_cast<std::size_t>(std::countl_zero(diff));
    }
    return kNone;
}

}  // namespace

bool is_power_at(std::span<const Bit> w, const PowerOccurrence& occ)
{
    if (occ.period == 0 || occ.power < 2)
        return false;
    if (occ.position + occ.power * occ.period > w.size())
        return false;
    for (std::size_t j = 0; j < (occ.power - 1) * occ.period; ++j)
        if (w[occ.position + j] != w[occ.position + j + occ.period])
            return false;
    return true;
}

std::optional<PowerOccurrence> find_power(std::span<const Bit> w, unsigned k, std::size_t max_period,
                                          unsigned threads)
{
    if (k < 2)
        throw std::domain_error("find_power: k must be at least 2");
    if (max_period == 0)
        throw std::domain_error("find_power: max_period must be at least 1");
    if (w.size() < k)
        return std::nullopt;
    max_period = std::min(max_period, w.size() / k);
    if (max_period == 0)
        return std::nullopt;

    threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(max_period)));
    const PackedWord packed(w);
    std::atomic<std::size_t> best_position{kNone};
    std::vector<std::pair<std::size_t, std::size_t>> found(threads, {kNone, kNone});

    auto worker = [&](unsigned id) {
        for (std::size_t p = 1 + id; p <= max_period; p += threads) {
            const std::size_t pos = earliest_with_period(packed, (k - 1) * p, p, best_position);
            if (pos == kNone)
                continue;
            if (pos < found[id].first)
                found[id] = {pos, p};
            std::size_t current = best_position.load();
            while (pos < current && !best_position.compare_exchange_weak(current, pos)) {
            }
        }
    };

    if (threads == 1) {
        worker(0);
    } else {
        std::vector<std::jthread> pool;
        for (unsigned id = 0; id < threads; ++id)
            pool.emplace_back(worker, id);
    }

    // Tie-break after joining: smallest position, then smallest period.
    const auto best = std::min_element(found.begin(), found.end());
    if (best->first == kNone)
        return std::nullopt;
    return PowerOccurrence{best->first, best->second, k};
}

std::optional<PowerOccurrence> find_power_naive(std::span<const Bit> w, unsigned k, std::size_t max_period)
{
    if (k < 2)
        throw std::domain_error("find_power_naive: k must be at least 2");
    if (max_period == 0)
        throw std::domain_error("find_power_naive: max_period must be at least 1");
    const std::size_t n = w.size();
    for (std::size_t pos = 0; pos < n; ++pos) {
        for (std::size_t p = 1; p <= max_period && pos + k * p <= n; ++p) {
            const auto x = w.subspan(pos, p);
            bool all_equal = true;
            for (unsigned copy = 1; copy < k && all_equal; ++copy)
                all_equal = std::ranges::equal(x, w.subspan(pos + copy * p, p));
            if (all_equal)
                return PowerOccurrence{pos, p, k};
        }
    }
    return std::nullopt;
}

std::string ScanReport::to_string() const
{
    std::string s = "seq=" + tmanalogs::to_string(sequence) + " k=" + std::to_string(power) +
                    " len=" + std::to_string(scanned_length) + " max_period=" + std::to_string(max_period) +
                    " verdict=";
    if (!violation)
        return s + "ok";
    return s + "FAIL pos=" + std::to_string(violation->position) + " period=" + std::to_string(violation->period);
}

ScanReport verify_power_free(SequenceId seq, unsigned power, std::uint64_t length,
                             std::optional<std::size_t> max_period, unsigned threads)
{
    if (length > kMaxScanLength)
        throw std::length_error("verify_power_free: length exceeds 2^24");
    if (power < 2)
        throw std::domain_error("verify_power_free: power must be at least 2");

    ScanReport report;
    report.sequence = seq;
    report.power = power;
    report.scanned_length = length;
    const std::size_t full = static_cast<std::size_t>(length / power);
    if (max_period)
        report.max_period = std::min(*max_period, full);
    else
        report.max_period = length <= kFullScanLength ? full : std::min(kDefaultPeriodCap, full);

    if (report.max_period == 0)
        return report;
    if (threads == 0)
        threads = std::max(1u, std::thread::hardware_concurrency());
    const Word w = stream(seq, 0, length);
    report.violation = find_power(w, power, report.max_period, threads);
    return report;
}

}  // namespace tmanalogs
