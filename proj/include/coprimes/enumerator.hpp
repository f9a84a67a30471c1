#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "coprimes/bigint.hpp"
#include "coprimes/compositions.hpp"
#include "coprimes/constlang.hpp"
#include "coprimes/gf2poly.hpp"

namespace coprimes {

/// Builds the backward-replay quotient sequence for one choice of degrees,
/// intermediate coefficients and constant terms. Quotient j (in application
/// order) is x^(d_j) + <the next d_j - 1 intermediate bits, highest exponent
/// first> + s_j, where d_j is the j-th part and s_j the j-th word bit; the
/// forced final quotient 1 is appended after the k assembled ones. Requires
/// |inter_bits| == n - k, |word| == k, and an accepted word.
std::vector<Gf2Poly> assemble(const Composition& comp, std::string_view inter_bits,
                              std::string_view word);

/// Replays the assembled quotients from (1, 0). The result is a coprime pair
/// of degree comp.n whose entries both have a nonzero constant term.
std::pair<Gf2Poly, Gf2Poly> build_pair(const Composition& comp, std::string_view inter_bits,
                                       std::string_view word);

/// Streaming cursor over every ordered coprime pair of degree n with nonzero
/// constant terms, one build per step. Iteration nests quotient-sequence
/// length k = 2..n, compositions in box-string order, the intermediate-bit
/// counter (first bit most significant), and constant words in lexicographic
/// order. The stream for n = 1 is empty.
class PairCursor {
public:
    explicit PairCursor(int n);
    /// Restricts the stream to one quotient-sequence length; empty unless
    /// 2 <= k <= n.
    PairCursor(int n, int k);

    std::optional<std::pair<Gf2Poly, Gf2Poly>> next();

private:
    void enter_k();
    void advance();

    int n_ = 0;
    int k_ = 0;
    int k_max_ = 0;
    bool exhausted_ = false;
    std::optional<Composition> comp_;
    std::string inter_;
    std::optional<WordTable> words_;
    std::optional<std::string> word_;
};

/// Pairs contributed by quotient sequences of length k:
/// 2^(n-k) * C(n-1, k-1) * (number of length-k words). Zero outside
/// 2 <= k <= n.
BigInt count_pairs_by_k(int n, int k);

/// Total number of pairs: 2 * (4^(n-1) - 1) / 3, for n >= 1.
BigInt count_pairs(int n);

}  // namespace coprimes
