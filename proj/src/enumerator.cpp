#include "coprimes/enumerator.hpp"

#include <stdexcept>

#include "coprimes/euclid.hpp"

namespace coprimes {

std::vector<Gf2Poly> assemble(const Composition& comp, std::string_view inter_bits,
                              std::string_view word) {
    const std::size_t k = comp.parts.size();
    int sum = 0;
    for (int d : comp.parts) {
        if (d < 1) throw std::invalid_argument("assemble: parts must be positive");
        sum += d;
    }
    if (sum != comp.n) throw std::invalid_argument("assemble: parts must sum to n");
    if (word.size() != k)
        throw std::invalid_argument("assemble: need one constant-term bit per quotient");
    if (inter_bits.size() != static_cast<std::size_t>(comp.n) - k)
        throw std::invalid_argument("assemble: need n-k intermediate bits");
    if (!accepts(word)) throw std::invalid_argument("assemble: constant-term word not accepted");

    std::vector<Gf2Poly> quotients;
    quotients.reserve(k + 1);
    std::size_t consumed = 0;
    for (std::size_t j = 0; j < k; ++j) {
        const int d = comp.parts[j];
        Gf2Poly q = Gf2Poly::monomial(static_cast<std::size_t>(d));
        for (int t = d - 1; t >= 1; --t) {
            const char bit = inter_bits[consumed++];
            if (bit == '1')
                q += Gf2Poly::monomial(static_cast<std::size_t>(t));
            else if (bit != '0')
                throw std::invalid_argument("assemble: intermediate bits must be over {0,1}");
        }
        if (word[j] == '1') q += Gf2Poly::one();
        quotients.push_back(std::move(q));
    }
    quotients.push_back(Gf2Poly::one());  // the forced final quotient
    return quotients;
}

std::pair<Gf2Poly, Gf2Poly> build_pair(const Composition& comp, std::string_view inter_bits,
                                       std::string_view word) {
    const std::vector<Gf2Poly> quotients = assemble(comp, inter_bits, word);
    Gf2Poly a = Gf2Poly::one();
    Gf2Poly b;
    for (const Gf2Poly& q : quotients) dilcue_step(a, b, q);
    return {std::move(a), std::move(b)};
}

PairCursor::PairCursor(int n) : n_(n), k_(2), k_max_(n) {
    if (n < 1) throw std::invalid_argument("degree must be at least 1");
    enter_k();
}

PairCursor::PairCursor(int n, int k) : n_(n), k_(k), k_max_(k) {
    if (n < 1) throw std::invalid_argument("degree must be at least 1");
    if (k < 2 || k > n) {
        exhausted_ = true;
        return;
    }
    enter_k();
}

void PairCursor::enter_k() {
    while (k_ <= k_max_) {
        comp_ = first_composition(n_, k_);
        words_.emplace(k_);
        word_ = words_->first();
        inter_.assign(static_cast<std::size_t>(n_ - k_), '0');
        if (comp_ && word_) return;
        ++k_;  // no accepted words of this length
    }
    exhausted_ = true;
}

std::optional<std::pair<Gf2Poly, Gf2Poly>> PairCursor::next() {
    if (exhausted_) return std::nullopt;
    auto pair = build_pair(*comp_, inter_, *word_);
    advance();
    return pair;
}

void PairCursor::advance() {
    if (auto w = words_->next(*word_)) {
        word_ = std::move(w);
        return;
    }
    word_ = words_->first();
    // Intermediate bits tick as a binary counter, last character first.
    for (auto it = inter_.rbegin(); it != inter_.rend(); ++it) {
        if (*it == '0') {
            *it = '1';
            return;
        }
        *it = '0';
    }
    if (auto c = next_composition(*comp_)) {
        comp_ = std::move(c);
        return;
    }
    ++k_;
    enter_k();
}

BigInt count_pairs_by_k(int n, int k) {
    if (n < 1) throw std::domain_error("degree must be at least 1");
    if (k < 2 || k > n) return 0;
    return (BigInt(1) << (n - k)) * count_compositions(n, k) * count_words_closed(k);
}

BigInt count_pairs(int n) {
    if (n < 1) throw std::domain_error("degree must be at least 1");
    return 2 * ((BigInt(1) << (2 * n - 2)) - 1) / 3;
}

}  // namespace coprimes
