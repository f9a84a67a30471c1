#include "coprimes/constlang.hpp"

#include <stdexcept>

namespace coprimes {

namespace {
int index_of(ConstState s) noexcept { return static_cast<int>(s); }

int bit_of(char c, const char* what) {
    if (c != '0' && c != '1') throw std::invalid_argument(std::string(what) + " must be over {0,1}");
    return c - '0';
}
}  // namespace

ConstState state_from_bits(int first, int second) {
    if (first == 1 && second == 1) return ConstState::c11;
    if (first == 1 && second == 0) return ConstState::c10;
    if (first == 0 && second == 1) return ConstState::c01;
    throw std::invalid_argument("constant-term state (0,0) is not representable");
}

bool ConstDfa::accepts(std::string_view word) const {
    ConstState s = start;
    for (char c : word) s = step(s, bit_of(c, "word"));
    return accepting[static_cast<std::size_t>(index_of(s))];
}

const ConstDfa& inverse_dfa() noexcept {
    static const ConstDfa dfa = {
        .states = {ConstState::c11, ConstState::c10, ConstState::c01},
        .transition = {{
            /* from (1,1) */ {ConstState::c11, ConstState::c01},
            /* from (1,0) */ {ConstState::c01, ConstState::c11},
            /* from (0,1) */ {ConstState::c10, ConstState::c10},
        }},
        .start = ConstState::c10,
        .accepting = {false, true, false},
    };
    return dfa;
}

bool accepts(std::string_view word) { return inverse_dfa().accepts(word); }

BigInt count_words_closed(int k) {
    if (k < 0) throw std::invalid_argument("word length must be nonnegative");
    const BigInt numerator = (BigInt(1) << k) + (k % 2 == 0 ? 2 : -2);
    return numerator / 3;  // always divisible
}

BigInt count_words_dfa(int k) { return WordTable(k).total(); }

WordTable::WordTable(int length) : length_(length) {
    if (length < 0) throw std::invalid_argument("word length must be nonnegative");
    const ConstDfa& dfa = inverse_dfa();
    table_.resize(static_cast<std::size_t>(length) + 1);
    for (int s = 0; s < 3; ++s)
        table_[0][static_cast<std::size_t>(s)] = dfa.accepting[static_cast<std::size_t>(s)] ? 1 : 0;
    for (std::size_t m = 1; m < table_.size(); ++m)
        for (int s = 0; s < 3; ++s) {
            const auto state = static_cast<ConstState>(s);
            table_[m][static_cast<std::size_t>(s)] =
                table_[m - 1][static_cast<std::size_t>(index_of(dfa.step(state, 0)))] +
                table_[m - 1][static_cast<std::size_t>(index_of(dfa.step(state, 1)))];
        }
}

const BigInt& WordTable::suffix_count(ConstState s, std::size_t remaining) const {
    return table_[remaining][static_cast<std::size_t>(index_of(s))];
}

const BigInt& WordTable::total() const {
    return suffix_count(inverse_dfa().start, static_cast<std::size_t>(length_));
}

std::optional<std::string> WordTable::first() const {
    if (total() == 0) return std::nullopt;
    const ConstDfa& dfa = inverse_dfa();
    std::string word(static_cast<std::size_t>(length_), '0');
    ConstState s = dfa.start;
    for (int i = 0; i < length_; ++i) {
        const std::size_t remaining = static_cast<std::size_t>(length_ - 1 - i);
        ConstState t = dfa.step(s, 0);
        if (suffix_count(t, remaining) == 0) {
            t = dfa.step(s, 1);
            word[static_cast<std::size_t>(i)] = '1';
        }
        s = t;
    }
    return word;
}

std::optional<std::string> WordTable::next(std::string_view word) const {
    if (word.size() != static_cast<std::size_t>(length_))
        throw std::invalid_argument("word length does not match the table");
    const ConstDfa& dfa = inverse_dfa();
    std::vector<ConstState> prefix(word.size() + 1);
    prefix[0] = dfa.start;
    for (std::size_t i = 0; i < word.size(); ++i)
        prefix[i + 1] = dfa.step(prefix[i], bit_of(word[i], "word"));

    for (std::size_t i = word.size(); i-- > 0;) {
        if (word[i] == '1') continue;
        const ConstState raised = dfa.step(prefix[i], 1);
        const std::size_t remaining = word.size() - 1 - i;
        if (suffix_count(raised, remaining) == 0) continue;
        std::string out(word);
        out[i] = '1';
        ConstState s = raised;
        for (std::size_t j = i + 1; j < word.size(); ++j) {
            const std::size_t left = word.size() - 1 - j;
            ConstState t = dfa.step(s, 0);
            if (suffix_count(t, left) == 0) {
                t = dfa.step(s, 1);
                out[j] = '1';
            } else {
                out[j] = '0';
            }
            s = t;
        }
        return out;
    }
    return std::nullopt;
}

std::string WordTable::unrank(const BigInt& rank) const {
    if (rank < 0 || rank >= total()) throw std::out_of_range("word rank out of range");
    const ConstDfa& dfa = inverse_dfa();
    std::string word(static_cast<std::size_t>(length_), '0');
    BigInt r = rank;
    ConstState s = dfa.start;
    for (int i = 0; i < length_; ++i) {
        const std::size_t remaining = static_cast<std::size_t>(length_ - 1 - i);
        const ConstState via_zero = dfa.step(s, 0);
        const BigInt& below = suffix_count(via_zero, remaining);
        if (r < below) {
            s = via_zero;
        } else {
            r -= below;
            word[static_cast<std::size_t>(i)] = '1';
            s = dfa.step(s, 1);
        }
    }
    return word;
}

std::optional<std::string> first_word(int k) { return WordTable(k).first(); }

std::optional<std::string> next_word(std::string_view word) {
    return WordTable(static_cast<int>(word.size())).next(word);
}

std::string unrank_word(int k, const BigInt& rank) { return WordTable(k).unrank(rank); }

}  // namespace coprimes
