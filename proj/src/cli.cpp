#include "tmanalogs/cli.hpp"

#include <algorithm>
#include <cstdio>
#include <functional>
#include <iomanip>
#include <map>

#include <CLI11.hpp>

#include "tmanalogs/bfile.hpp"
#include "tmanalogs/blocks.hpp"
#include "tmanalogs/numerals.hpp"
#include "tmanalogs/probes.hpp"
#include "tmanalogs/sequences.hpp"
#include "tmanalogs/words.hpp"

namespace tmanalogs::cli {

namespace {

const std::map<std::string, SequenceId> kSequenceNames{
    {"T", SequenceId::T}, {"R", SequenceId::R}, {"G", SequenceId::G}};

std::string sign_word(const std::vector<int>& w)
{
    std::string s;
    for (int x : w)
        s += x > 0 ? '+' : '-';
    return s;
}

std::string opt_to_string(const std::optional<std::size_t>& v)
{
    return v ? std::to_string(*v) : "none";
}

struct GenArgs {
    SequenceId seq = SequenceId::T;
    std::uint64_t count = 0;
    std::uint64_t start = 0;
    std::string format = "bits";
};

int cmd_gen(const GenArgs& a, std::ostream& out)
{
    if (a.format == "bits") {
        out << to_bits(stream(a.seq, a.start, a.count)) << '\n';
    } else if (a.format == "bfile") {
        out << write_bfile(make_bfile(a.seq, a.start, a.count));
    } else {
        const Word w = stream(a.seq, a.start, a.count);
        out << "index,value\n";
        for (std::size_t i = 0; i < w.size(); ++i)
            out << a.start + i << ',' << int(w[i]) << '\n';
    }
    return kOk;
}

int cmd_convert(std::uint64_t n, const std::string& to, std::ostream& out)
{
    if (to == "neg2")
        out << to_negabinary(n).to_string() << '\n';
    else if (to == "balanced")
        out << to_balanced(n).to_string() << '\n';
    else
        out << to_binary_string(n) << '\n';
    return kOk;
}

int cmd_blocks(SequenceId seq, unsigned k, bool check, std::ostream& out)
{
    const Word block = seq == SequenceId::R ? block_R(k) : block_G(k);
    out << to_bits(block) << '\n';
    if (!check)
        return kOk;
    const Word streamed = stream(seq, 0, block.size());
    const auto diff = std::ranges::mismatch(block, streamed);
    if (diff.in1 == block.end()) {
        out << "check=ok\n";
        return kOk;
    }
    out << "check=FAIL index=" << (diff.in1 - block.begin()) << '\n';
    return kViolation;
}

int cmd_powerfree(SequenceId seq, unsigned power, std::uint64_t length, std::optional<std::size_t> max_period,
                  std::ostream& out)
{
    const ScanReport rep = verify_power_free(seq, power, length, max_period);
    out << rep.to_string() << '\n';
    return rep.power_free() ? kOk : kViolation;
}

int cmd_records(AgreementKind kind, std::uint64_t limit, std::optional<std::uint64_t> cap, bool check,
                const std::string& format, std::ostream& out, std::ostream& err)
{
    const std::uint64_t used_cap = cap.value_or(default_records_cap(limit));
    const RecordsScan scan = records(kind, limit, used_cap);
    bool ok = true;

    if (format == "bfile") {
        for (const auto& e : scan.entries)
            out << e.position << ' ' << e.value << '\n';
    } else {
        out << std::setw(4) << "i" << std::setw(14) << "position" << std::setw(14) << "value";
        if (check)
            out << std::setw(14) << "conj_pos" << std::setw(14) << "conj_value" << "  status";
        out << '\n';
        for (std::size_t i = 0; i < scan.entries.size(); ++i) {
            const auto& e = scan.entries[i];
            out << std::setw(4) << i << std::setw(14) << e.position << std::setw(14) << e.value;
            if (check && i <= 15) {
                const ConjecturePoint c = kind == AgreementKind::agree ? conjecture_C(static_cast<unsigned>(i))
                                                                       : conjecture_D(static_cast<unsigned>(i));
                const bool row_ok = c.position == e.position && (!c.value || *c.value == e.value);
                ok = ok && row_ok;
                out << std::setw(14) << c.position << std::setw(14)
                    << (c.value ? std::to_string(*c.value) : std::string("-")) << "  "
                    << (row_ok ? "ok" : "MISMATCH");
            }
            out << '\n';
        }
    }
    if (!scan.reliable()) {
        err << "records: n=" << *scan.first_capped << " reached the cap " << used_cap
            << "; rerun with a larger --cap\n";
        return kViolation;
    }
    return ok ? kOk : kViolation;
}

int cmd_triples(std::uint64_t a, std::uint64_t b, std::uint64_t c, std::uint64_t limit, std::ostream& out)
{
    const auto hit = check_triple(a, b, c, limit);
    out << "triple=(" << a << ',' << b << ',' << c << ") limit=" << limit;
    if (!hit) {
        out << " verdict=ok\n";
        return kOk;
    }
    out << " verdict=FAIL n=" << *hit << '\n';
    return kViolation;
}

int cmd_periodb(std::uint64_t a, std::size_t count, std::ostream& out)
{
    const PeriodReport rep = period_report(a, count);
    const BetaGamma bg = beta_gamma(a, rep.prefix_length);
    out << "beta  " << sign_word(bg.beta) << '\n';
    out << "gamma " << sign_word(bg.gamma) << '\n';
    out << "a=" << a << " val2=" << val2(a) << " len=" << rep.prefix_length
        << " beta_period=" << opt_to_string(rep.beta_period) << " gamma_period=" << opt_to_string(rep.gamma_period)
        << " expected=" << rep.expected_period << " antisymmetric=" << (rep.antisymmetric ? "yes" : "no") << '\n';
    return rep.matches_expected() ? kOk : kViolation;
}

int cmd_verify(const std::string& seq, const std::string& path, std::ostream& out)
{
    const BFile f = read_bfile_path(path);
    const auto mismatch = seq == "NEG2" ? verify_negabinary_bfile(f) : verify_against_bfile(kSequenceNames.at(seq), f);
    const std::int64_t first = f.entries.empty() ? 0 : f.entries.front().index;
    out << "seq=" << seq << " entries=" << f.entries.size() << " range=" << first << ".."
        << first + static_cast<std::int64_t>(f.entries.size()) - 1;
    if (!mismatch) {
        out << " verdict=ok\n";
        return kOk;
    }
    out << " verdict=FAIL index=" << mismatch->index << " file=" << mismatch->expected
        << " computed=" << mismatch->actual << '\n';
    return kViolation;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Thue-Morse sequence and its runs-parity / negabinary analogs", "tmanalogs"};
    app.require_subcommand(1);

    std::function<int()> action;

    GenArgs gen;
    auto* gen_cmd = app.add_subcommand("gen", "Print terms of a sequence");
    gen_cmd->add_option("--seq", gen.seq, "Sequence")->required()->transform(CLI::CheckedTransformer(kSequenceNames, CLI::ignore_case));
    gen_cmd->add_option("--count", gen.count, "Number of terms")->required();
    gen_cmd->add_option("--start", gen.start, "First index");
    gen_cmd->add_option("--format", gen.format, "Output format")->check(CLI::IsMember({"bits", "bfile", "csv"}));
    gen_cmd->callback([&] { action = [&] { return cmd_gen(gen, out); }; });

    std::uint64_t conv_n = 0;
    std::string conv_to;
    auto* conv_cmd = app.add_subcommand("convert", "Render n in base -2, balanced binary or binary");
    conv_cmd->add_option("--n", conv_n, "Nonnegative integer below 2^62")->required();
    conv_cmd->add_option("--to", conv_to, "Target system")->required()->check(CLI::IsMember({"neg2", "balanced", "bin"}));
    conv_cmd->callback([&] { action = [&] { return cmd_convert(conv_n, conv_to, out); }; });

    SequenceId block_seq = SequenceId::R;
    unsigned block_k = 0;
    bool block_check = false;
    auto* blocks_cmd = app.add_subcommand("blocks", "Build the first 2^k terms by block doubling");
    blocks_cmd->add_option("--seq", block_seq, "R or G")
        ->required()
        ->transform(CLI::CheckedTransformer(std::map<std::string, SequenceId>{{"R", SequenceId::R}, {"G", SequenceId::G}},
                                            CLI::ignore_case));
    blocks_cmd->add_option("--k", block_k, "Block order")->required();
    blocks_cmd->add_flag("--check", block_check, "Compare against term-by-term generation");
    blocks_cmd->callback([&] { action = [&] { return cmd_blocks(block_seq, block_k, block_check, out); }; });

    SequenceId pf_seq = SequenceId::G;
    unsigned pf_power = 0;
    std::uint64_t pf_length = 0;
    std::optional<std::size_t> pf_max_period;
    auto* pf_cmd = app.add_subcommand("powerfree", "Scan a prefix for k-th powers");
    pf_cmd->add_option("--seq", pf_seq, "Sequence")->required()->transform(CLI::CheckedTransformer(kSequenceNames, CLI::ignore_case));
    pf_cmd->add_option("--power", pf_power, "Exponent k >= 2")->required()->check(CLI::Range(2u, 1024u));
    pf_cmd->add_option("--length", pf_length, "Prefix length")->required()->check(CLI::Range(std::uint64_t{0}, kMaxScanLength));
    pf_cmd->add_option("--max-period", pf_max_period, "Largest period scanned")->check(CLI::PositiveNumber);
    pf_cmd->callback([&] { action = [&] { return cmd_powerfree(pf_seq, pf_power, pf_length, pf_max_period, out); }; });

    std::string rec_kind;
    std::uint64_t rec_limit = 0;
    std::optional<std::uint64_t> rec_cap;
    bool rec_check = false;
    std::string rec_format = "table";
    auto* rec_cmd = app.add_subcommand("records", "Records of the G-versus-shifted-T agreement lengths");
    rec_cmd->add_option("--kind", rec_kind, "agree or disagree")->required()->check(CLI::IsMember({"agree", "disagree"}));
    rec_cmd->add_option("--limit", rec_limit, "Scan n < limit")->required()->check(CLI::PositiveNumber);
    rec_cmd->add_option("--cap", rec_cap, "Per-n agreement cap (default 4*limit+64)")->check(CLI::PositiveNumber);
    rec_cmd->add_flag("--check-conjecture", rec_check, "Compare against the conjectured closed forms");
    rec_cmd->add_option("--format", rec_format, "table or bfile")->check(CLI::IsMember({"table", "bfile"}));
    rec_cmd->callback([&] {
        action = [&] {
            const auto kind = rec_kind == "agree" ? AgreementKind::agree : AgreementKind::disagree;
            return cmd_records(kind, rec_limit, rec_cap, rec_check, rec_format, out, err);
        };
    });

    std::uint64_t tri_a = 0, tri_b = 0, tri_c = 0, tri_limit = 0;
    auto* tri_cmd = app.add_subcommand("triples", "Check that one of t(n+a), t(n+b), t(n+c) equals t(n)");
    tri_cmd->add_option("--a", tri_a)->required()->check(CLI::PositiveNumber);
    tri_cmd->add_option("--b", tri_b)->required()->check(CLI::PositiveNumber);
    tri_cmd->add_option("--c", tri_c)->required()->check(CLI::PositiveNumber);
    tri_cmd->add_option("--limit", tri_limit)->required();
    tri_cmd->callback([&] { action = [&] { return cmd_triples(tri_a, tri_b, tri_c, tri_limit, out); }; });

    std::uint64_t pb_a = 0;
    std::size_t pb_count = 0;
    auto* pb_cmd = app.add_subcommand("periodb", "Periods of the sign sequences split by u(n+a) = -u(n)");
    pb_cmd->add_option("--a", pb_a, "Shift")->required()->check(CLI::PositiveNumber);
    pb_cmd->add_option("--count", pb_count, "Prefix length (default 2^(val2(a)+3))");
    pb_cmd->callback([&] { action = [&] { return cmd_periodb(pb_a, pb_count, out); }; });

    std::string ver_seq;
    std::string ver_path;
    auto* ver_cmd = app.add_subcommand("verify", "Compare a sequence with an OEIS b-file");
    ver_cmd->add_option("--seq", ver_seq, "T, R, G, or NEG2 for A039724-style digit strings")
        ->required()
        ->transform(CLI::IsMember({"T", "R", "G", "NEG2"}, CLI::ignore_case));
    ver_cmd->add_option("--bfile", ver_path, "Path to b-file")->required();
    ver_cmd->callback([&] { action = [&] { return cmd_verify(ver_seq, ver_path, out); }; });

    SequenceId const_seq = SequenceId::T;
    std::uint64_t const_count = 0;
    std::optional<unsigned> const_places;
    auto* const_cmd = app.add_subcommand("constant", "Binary digits 0.xxx of a sequence constant");
    const_cmd->add_option("--seq", const_seq, "Sequence")->required()->transform(CLI::CheckedTransformer(kSequenceNames, CLI::ignore_case));
    const_cmd->add_option("--count", const_count, "Number of digits")->required()->check(CLI::Range(std::uint64_t{0}, kMaxScanLength));
    const_cmd->add_option("--decimal", const_places, "Also print the value rounded to this many decimal places");
    const_cmd->callback([&] {
        action = [&] {
            out << constant_digits(const_seq, const_count) << '\n';
            if (const_places)
                out << constant_decimal(const_seq, const_count, *const_places) << '\n';
            return kOk;
        };
    });

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kUsage;
    }

    try {
        return action ? action() : kUsage;
    } catch (const BFileError& e) {
        err << "b-file error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }
}

}  // namespace tmanalogs::cli
