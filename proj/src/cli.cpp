#include "coprimes/cli.hpp"

#include <limits>
#include <map>
#include <ostream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "coprimes/compositions.hpp"
#include "coprimes/constlang.hpp"
#include "coprimes/enumerator.hpp"
#include "coprimes/euclid.hpp"
#include "coprimes/gf2poly.hpp"
#include "coprimes/oracle.hpp"

namespace coprimes::cli {

namespace {

PolyFormat format_from_name(const std::string& name) {
    static const std::map<std::string, PolyFormat> kNames = {
        {"bin", PolyFormat::bin}, {"hex", PolyFormat::hex}, {"human", PolyFormat::human}};
    return kNames.at(name);
}

void add_format_option(CLI::App* cmd, std::string& name) {
    cmd->add_option("--format", name, "polynomial text format")
        ->check(CLI::IsMember({"bin", "hex", "human"}))
        ->capture_default_str();
}

nlohmann::json pairs_to_json(const std::vector<std::pair<Gf2Poly, Gf2Poly>>& pairs) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& [f, g] : pairs)
        arr.push_back({to_text(f, PolyFormat::bin), to_text(g, PolyFormat::bin)});
    return arr;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Coprime pairs of binary polynomials with nonzero constant term", "coprimes"};
    app.require_subcommand(1);
    const CLI::Range positive(1, std::numeric_limits<int>::max());
    const CLI::Range nonnegative(0, std::numeric_limits<int>::max());

    auto* count_cmd = app.add_subcommand("count", "Print the number of pairs of degree n");
    int count_n = 0;
    bool per_k = false;
    count_cmd->add_option("n", count_n, "degree")->required()->check(positive);
    count_cmd->add_flag("--per-k", per_k, "one line per quotient-sequence length, then a total");

    auto* enum_cmd = app.add_subcommand("enumerate", "Stream all pairs of degree n, one per line");
    int enum_n = 0;
    int only_k = 0;
    long long limit = -1;
    bool unordered = false;
    std::string enum_format = "bin";
    enum_cmd->add_option("n", enum_n, "degree")->required()->check(positive);
    add_format_option(enum_cmd, enum_format);
    enum_cmd->add_option("--limit", limit, "emit at most this many pairs")
        ->check(nonnegative);
    enum_cmd->add_option("--k", only_k, "restrict to one quotient-sequence length");
    enum_cmd->add_flag("--unordered", unordered, "emit each unordered pair once");

    auto* verify_cmd =
        app.add_subcommand("verify", "Cross-check the enumerator against brute force");
    int verify_n = 0;
    bool json_output = false;
    bool force = false;
    verify_cmd->add_option("n", verify_n, "degree")->required()->check(positive);
    verify_cmd->add_flag("--json", json_output, "machine-readable report");
    verify_cmd->add_flag("--force", force, "allow n beyond the 4^n safety bound");

    auto* trace_cmd = app.add_subcommand("trace", "Print the Euclid run for a pair");
    std::string trace_f;
    std::string trace_g;
    std::string trace_format = "bin";
    trace_cmd->add_option("f", trace_f, "dividend polynomial")->required();
    trace_cmd->add_option("g", trace_g, "divisor polynomial")->required();
    add_format_option(trace_cmd, trace_format);

    auto* flip_cmd =
        app.add_subcommand("bijection", "Map a pair across the coprime/non-coprime involution");
    std::string flip_f;
    std::string flip_g;
    std::string flip_format = "bin";
    flip_cmd->add_option("f", flip_f, "first polynomial")->required();
    flip_cmd->add_option("g", flip_g, "second polynomial")->required();
    add_format_option(flip_cmd, flip_format);

    auto* lang_cmd = app.add_subcommand("lang", "Constant-term word language");
    lang_cmd->require_subcommand(1);
    auto* words_cmd = lang_cmd->add_subcommand("words", "List accepted words of length k");
    int words_k = 0;
    words_cmd->add_option("k", words_k, "word length")->required()->check(nonnegative);
    auto* lang_count_cmd = lang_cmd->add_subcommand("count", "Count accepted words of length k");
    int lang_count_k = 0;
    lang_count_cmd->add_option("k", lang_count_k, "word length")
        ->required()
        ->check(nonnegative);

    auto* comp_cmd = app.add_subcommand("compositions", "List compositions of n into k parts");
    int comp_n = 0;
    int comp_k = 0;
    comp_cmd->add_option("n", comp_n, "total")->required()->check(positive);
    comp_cmd->add_option("k", comp_k, "number of parts")->required()->check(nonnegative);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*count_cmd) {
            if (per_k) {
                for (int k = 2; k <= count_n; ++k)
                    out << k << '\t' << count_pairs_by_k(count_n, k) << '\n';
                out << "total\t" << count_pairs(count_n) << '\n';
            } else {
                out << count_pairs(count_n) << '\n';
            }
            return 0;
        }

        if (*enum_cmd) {
            const PolyFormat fmt = format_from_name(enum_format);
            PairCursor cursor = only_k != 0 ? PairCursor(enum_n, only_k) : PairCursor(enum_n);
            long long emitted = 0;
            while (limit < 0 || emitted < limit) {
                const auto pair = cursor.next();
                if (!pair) break;
                if (unordered && pair->second < pair->first) continue;
                out << to_text(pair->first, fmt) << '\t' << to_text(pair->second, fmt) << '\n';
                ++emitted;
            }
            return 0;
        }

        if (*verify_cmd) {
            const VerifyReport report = verify(verify_n, force);
            if (json_output) {
                nlohmann::json j;
                j["n"] = report.n;
                j["oracle_count"] = report.oracle_count.convert_to<std::uint64_t>();
                j["enumerator_count"] = report.enumerator_count.convert_to<std::uint64_t>();
                j["formula_count"] = report.formula_count.convert_to<std::uint64_t>();
                j["missing"] = pairs_to_json(report.missing);
                j["extra"] = pairs_to_json(report.extra);
                j["ok"] = report.ok;
                out << j.dump() << '\n';
            } else {
                out << "verify n=" << report.n << ": " << (report.ok ? "ok" : "FAILED")
                    << " (oracle=" << report.oracle_count
                    << ", enumerator=" << report.enumerator_count
                    << ", formula=" << report.formula_count << ")\n";
                for (const auto& [f, g] : report.missing)
                    out << "missing\t" << to_text(f, PolyFormat::bin) << '\t'
                        << to_text(g, PolyFormat::bin) << '\n';
                for (const auto& [f, g] : report.extra)
                    out << "extra\t" << to_text(f, PolyFormat::bin) << '\t'
                        << to_text(g, PolyFormat::bin) << '\n';
            }
            return report.ok ? 0 : 1;
        }

        if (*trace_cmd) {
            const PolyFormat fmt = format_from_name(trace_format);
            out << render_trace(parse(trace_f, fmt), parse(trace_g, fmt), fmt);
            return 0;
        }

        if (*flip_cmd) {
            const PolyFormat fmt = format_from_name(flip_format);
            const auto [a, b] = bijection_flip(parse(flip_f, fmt), parse(flip_g, fmt));
            out << to_text(a, fmt) << '\t' << to_text(b, fmt) << '\n';
            return 0;
        }

        if (*words_cmd) {
            const WordTable table(words_k);
            for (auto w = table.first(); w; w = table.next(*w)) out << *w << '\n';
            return 0;
        }

        if (*lang_count_cmd) {
            out << count_words_closed(lang_count_k) << '\n';
            return 0;
        }

        if (*comp_cmd) {
            for (auto c = first_composition(comp_n, comp_k); c; c = next_composition(*c)) {
                for (std::size_t j = 0; j < c->parts.size(); ++j) {
                    if (j > 0) out << '+';
                    out << c->parts[j];
                }
                out << '\n';
            }
            return 0;
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }

    err << "error: no command selected\n";
    return 2;
}

}  // namespace coprimes::cli
