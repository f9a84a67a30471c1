#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "coprimes/bigint.hpp"

namespace coprimes {

/// Constant-term state of two adjacent remainders in a Euclid run. Once one
/// input has a nonzero constant term the pair (0,0) can never occur, so
/// three states remain.
enum class ConstState : std::uint8_t { c11 = 0, c10 = 1, c01 = 2 };

/// The bits (c_i, c_{i+1}) a state carries.
constexpr std::pair<int, int> state_bits(ConstState s) noexcept {
    switch (s) {
    case ConstState::c11: return {1, 1};
    case ConstState::c10: return {1, 0};
    case ConstState::c01: return {0, 1};
    }
    return {0, 0};  // unreachable
}

/// State for a bit pair; (0, 0) is not representable.
ConstState state_from_bits(int first, int second);

/// Constant-term update of one forward Euclid division: reading the
/// quotient's constant term s moves (c_i, c_{i+1}) to (c_{i+1}, c_i + s*c_{i+1}).
constexpr ConstState forward_delta(ConstState s, int bit) noexcept {
    constexpr ConstState table[3][2] = {
        /* from (1,1) */ {ConstState::c11, ConstState::c10},
        /* from (1,0) */ {ConstState::c01, ConstState::c01},
        /* from (0,1) */ {ConstState::c10, ConstState::c11},
    };
    return table[static_cast<int>(s)][bit & 1];
}

/// A three-state automaton over the input alphabet {0, 1}.
struct ConstDfa {
    std::array<ConstState, 3> states;
    std::array<std::array<ConstState, 2>, 3> transition;  ///< [state][input bit]
    ConstState start;
    std::array<bool, 3> accepting;  ///< indexed like `transition`

    ConstState step(ConstState s, int bit) const noexcept {
        return transition[static_cast<int>(s)][bit & 1];
    }
    /// Runs the word ('0'/'1' characters) from `start`.
    bool accepts(std::string_view word) const;
};

/// The automaton with every forward arrow reversed; reversal is well defined
/// because each input bit permutes the states. It consumes quotient constant
/// terms in backward-replay order, and both its start state and its only
/// accepting state are (1,0).
const ConstDfa& inverse_dfa() noexcept;

/// Membership of a word in the constant-term language (inverse automaton).
bool accepts(std::string_view word);

/// Number of accepted words of length k: (2^k + 2*(-1)^k) / 3, exactly.
BigInt count_words_closed(int k);

/// The same count obtained by path counting over the automaton. Always
/// equals count_words_closed.
BigInt count_words_dfa(int k);

/// Counting table for accepted words of one fixed length, built once and
/// reused: lexicographic first/successor cost O(length) per call, and words
/// can be addressed by rank.
class WordTable {
public:
    explicit WordTable(int length);

    int length() const noexcept { return length_; }
    const BigInt& total() const;  ///< number of accepted words of this length

    std::optional<std::string> first() const;
    /// Smallest accepted word strictly above `word` (which must have the
    /// table's length); nullopt at the end.
    std::optional<std::string> next(std::string_view word) const;
    /// The rank-th accepted word in lexicographic order, rank in [0, total()).
    std::string unrank(const BigInt& rank) const;

private:
    const BigInt& suffix_count(ConstState s, std::size_t remaining) const;

    int length_;
    std::vector<std::array<BigInt, 3>> table_;  // [remaining][state]
};

std::optional<std::string> first_word(int k);
std::optional<std::string> next_word(std::string_view word);
std::string unrank_word(int k, const BigInt& rank);

}  // namespace coprimes
