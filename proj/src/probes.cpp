#include "tmanalogs/probes.hpp"

#include <bit>
#include <stdexcept>
#include <string>

#include "tmanalogs/sequences.hpp"

namespace tmanalogs {

namespace {

constexpr std::uint64_t kProbeLimit = std::uint64_t{1} << 62;

std::uint64_t pow4(unsigned e)
{
    return std::uint64_t{1} << (2 * e);
}

std::uint64_t exact_div(std::uint64_t num, std::uint64_t den, const char* what)
{
    if (num % den != 0)
        throw std::logic_error(std::string("conjecture formula: ") + what + " is not divisible by " +
                               std::to_string(den));
    return num / den;
}

// (2/3)(4^e - 1)
std::uint64_t two_thirds_of_pow4_minus_1(unsigned e)
{
    return 2 * exact_div(pow4(e) - 1, 3, "4^e - 1");
}

void check_conjecture_index(unsigned n)
{
    if (n > 15)
        throw std::domain_error("conjecture index must be <= 15");
}

}  // namespace

AgreementResult agreement(AgreementKind kind, std::uint64_t n, std::uint64_t cap)
{
    if (n >= kProbeLimit || cap >= kProbeLimit - n)
        throw std::out_of_range("agreement: n + cap must be below 2^62");
    const Bit flip = kind == AgreementKind::disagree ? 1 : 0;
    std::uint64_t k = 0;
    while (k < cap && g(k) == (t(k + n) ^ flip))
        ++k;
    return {k, k == cap};
}

AgreementResult agree_len(std::uint64_t n, std::uint64_t cap)
{
    return agreement(AgreementKind::agree, n, cap);
}

AgreementResult disagree_len(std::uint64_t n, std::uint64_t cap)
{
    return agreement(AgreementKind::disagree, n, cap);
}

RecordsScan records(AgreementKind kind, std::uint64_t limit, std::uint64_t cap)
{
    RecordsScan scan;
    for (std::uint64_t n = 0; n < limit; ++n) {
        const AgreementResult res = agreement(kind, n, cap);
        if (res.capped && !scan.first_capped)
            scan.first_capped = n;
        if (scan.entries.empty() || res.length > scan.entries.back().value)
            scan.entries.push_back({n, res.length});
    }
    return scan;
}

RecordsScan records(AgreementKind kind, std::uint64_t limit)
{
    return records(kind, limit, default_records_cap(limit));
}

ConjecturePoint conjecture_C(unsigned n)
{
    check_conjecture_index(n);
    ConjecturePoint pt;
    if (n % 2 == 0) {
        pt.position = two_thirds_of_pow4_minus_1(n);
        pt.value = 2 * pt.position + 2;
    } else {
        pt.position = two_thirds_of_pow4_minus_1(n - 1) + 3 * pow4(n - 1);
        pt.value = exact_div(7 * pt.position + 12, 11, "7l + 12");
    }
    return pt;
}

ConjecturePoint conjecture_D(unsigned n)
{
    check_conjecture_index(n);
    ConjecturePoint pt;
    if (n < 2) {
        pt.position = n;
        return pt;
    }
    if (n % 2 == 0) {
        pt.position = two_thirds_of_pow4_minus_1(n - 1);
        pt.value = 2 * pt.position + 2;
    } else {
        pt.position = two_thirds_of_pow4_minus_1(n - 2) + 3 * pow4(n - 2);
        pt.value = exact_div(7 * pt.position + 12, 11, "7m + 12");
    }
    return pt;
}

std::optional<std::uint64_t> check_triple(std::uint64_t a, std::uint64_t b, std::uint64_t c, std::uint64_t limit)
{
    if (!(0 < a && a < b && b < c))
        throw std::invalid_argument("check_triple: requires 0 < a < b < c");
    if (c >= kProbeLimit || limit >= kProbeLimit - c)
        throw std::out_of_range("check_triple: limit + c must be below 2^62");
    for (std::uint64_t n = 0; n < limit; ++n) {
        const Bit tn = t(n);
        if (t(n + a) != tn && t(n + b) != tn && t(n + c) != tn)
            return n;
    }
    return std::nullopt;
}

BetaGamma beta_gamma(std::uint64_t a, std::size_t count, std::uint64_t search_bound)
{
    if (a == 0)
        throw std::invalid_argument("beta_gamma: shift must be positive");
    if (search_bound >= kProbeLimit - a)
        throw std::out_of_range("beta_gamma: search bound too large");
    BetaGamma out;
    out.beta.reserve(count);
    out.gamma.reserve(count);
    for (std::uint64_t i = 0; i < search_bound && (out.beta.size() < count || out.gamma.size() < count); ++i) {
        const int here = u(i);
        auto& target = u(i + a) == -here ? out.beta : out.gamma;
        if (target.size() < count)
            target.push_back(here);
    }
    if (out.beta.size() < count || out.gamma.size() < count)
        throw std::range_error("beta_gamma: search bound " + std::to_string(search_bound) + " exhausted before " +
                               std::to_string(count) + " terms of each sequence");
    return out;
}

BetaGamma beta_gamma(std::uint64_t a, std::size_t count)
{
    return beta_gamma(a, count, default_search_bound(a, count));
}

unsigned val2(std::uint64_t a)
{
    if (a == 0)
        throw std::domain_error("val2: argument must be positive");
    return static_cast<unsigned>(std::countr_zero(a));
}

PeriodReport period_report(std::uint64_t a, std::size_t prefix_length)
{
    const unsigned v = val2(a);
    PeriodReport rep;
    rep.shift = a;
    rep.expected_period = std::size_t{1} << (v + 1);
    rep.prefix_length = prefix_length ? prefix_length : std::size_t{1} << (v + 3);
    const BetaGamma bg = beta_gamma(a, rep.prefix_length);
    rep.beta_period = smallest_period(bg.beta);
    rep.gamma_period = smallest_period(bg.gamma);
    rep.antisymmetric = true;
    for (std::size_t i = 0; i < rep.prefix_length; ++i)
        rep.antisymmetric = rep.antisymmetric && bg.beta[i] == -bg.gamma[i];
    return rep;
}

}  // namespace tmanalogs
