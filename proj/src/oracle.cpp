#include "coprimes/oracle.hpp"

#include <algorithm>
#include <stdexcept>

#include "coprimes/enumerator.hpp"

namespace coprimes {

namespace {
constexpr int kVerifyBound = 10;
}

std::vector<Gf2Poly> enumerate_sn(int n) {
    if (n < 1) throw std::invalid_argument("n must be at least 1");
    if (n > 63) throw std::invalid_argument("n too large for exhaustive generation");
    const std::uint64_t top = std::uint64_t{1} << n;
    const std::uint64_t count = std::uint64_t{1} << (n - 1);
    std::vector<Gf2Poly> out;
    out.reserve(count);
    for (std::uint64_t i = 0; i < count; ++i)
        out.push_back(Gf2Poly::from_mask(top | (i << 1) | 1u));
    return out;
}

std::vector<std::pair<Gf2Poly, Gf2Poly>> brute_force_an(int n) {
    const std::vector<Gf2Poly> sn = enumerate_sn(n);
    std::vector<std::pair<Gf2Poly, Gf2Poly>> pairs;
    for (const Gf2Poly& f : sn)
        for (const Gf2Poly& g : sn)
            if (gcd(f, g).is_one()) pairs.emplace_back(f, g);
    return pairs;  // ascending by construction
}

VerifyReport make_report(int n, const std::vector<std::pair<Gf2Poly, Gf2Poly>>& oracle_pairs,
                         std::vector<std::pair<Gf2Poly, Gf2Poly>> emitted, BigInt formula) {
    VerifyReport report;
    report.n = n;
    report.oracle_count = oracle_pairs.size();
    report.enumerator_count = emitted.size();
    report.formula_count = std::move(formula);

    std::sort(emitted.begin(), emitted.end());
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < oracle_pairs.size() || j < emitted.size()) {
        if (j == emitted.size() ||
            (i < oracle_pairs.size() && oracle_pairs[i] < emitted[j])) {
            report.missing.push_back(oracle_pairs[i]);
            ++i;
        } else if (i == oracle_pairs.size() || emitted[j] < oracle_pairs[i]) {
            report.extra.push_back(emitted[j]);
            ++j;
        } else {
            const std::pair<Gf2Poly, Gf2Poly>& matched = oracle_pairs[i];
            ++i;
            ++j;
            while (j < emitted.size() && emitted[j] == matched) {
                report.extra.push_back(emitted[j]);  // duplicate emission
                ++j;
            }
        }
    }

    report.ok = report.missing.empty() && report.extra.empty() &&
                report.oracle_count == report.enumerator_count &&
                report.oracle_count == report.formula_count;
    return report;
}

VerifyReport verify(int n, bool allow_large) {
    if (n < 1) throw std::invalid_argument("n must be at least 1");
    if (n > kVerifyBound && !allow_large)
        throw std::invalid_argument(
            "verify scans 4^(n-1) pairs; enable the large-n override for n > 10");
    std::vector<std::pair<Gf2Poly, Gf2Poly>> emitted;
    PairCursor cursor(n);
    while (auto p = cursor.next()) emitted.push_back(std::move(*p));
    return make_report(n, brute_force_an(n), std::move(emitted), count_pairs(n));
}

}  // namespace coprimes
