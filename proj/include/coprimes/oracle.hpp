#pragma once

#include <utility>
#include <vector>

#include "coprimes/bigint.hpp"
#include "coprimes/gf2poly.hpp"

namespace coprimes {

/// Outcome of cross-checking the streaming enumerator against brute force.
/// ok holds exactly when missing and extra are empty and all three counts
/// agree.
struct VerifyReport {
    int n = 0;
    BigInt oracle_count;      ///< pairs found by exhaustive gcd filtering
    BigInt enumerator_count;  ///< pairs emitted by the streaming cursor
    BigInt formula_count;     ///< closed-form count
    std::vector<std::pair<Gf2Poly, Gf2Poly>> missing;  ///< oracle-only pairs
    std::vector<std::pair<Gf2Poly, Gf2Poly>> extra;    ///< emitted beyond the oracle set
    bool ok = false;
};

/// All 2^(n-1) degree-n polynomials with nonzero constant term, ascending.
std::vector<Gf2Poly> enumerate_sn(int n);

/// Ordered coprime pairs over enumerate_sn(n) by exhaustive gcd filtering,
/// ascending. The scan is quadratic in 2^(n-1); practical to n of about 12.
std::vector<std::pair<Gf2Poly, Gf2Poly>> brute_force_an(int n);

/// Diffs an emitted pair list against the oracle list (which must be sorted
/// and duplicate-free). Duplicate emissions land in `extra`.
VerifyReport make_report(int n, const std::vector<std::pair<Gf2Poly, Gf2Poly>>& oracle_pairs,
                         std::vector<std::pair<Gf2Poly, Gf2Poly>> emitted, BigInt formula);

/// Runs the full cross-check for one degree. Guarded to n <= 10 unless
/// allow_large is set, since the pair scan grows as 4^n.
VerifyReport verify(int n, bool allow_large = false);

}  // namespace coprimes
