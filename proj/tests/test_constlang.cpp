#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "coprimes/constlang.hpp"
#include "testutil.hpp"

using namespace coprimes;
using testutil::all_words;
using testutil::matches_block_pattern;

namespace {
constexpr ConstState kStates[] = {ConstState::c11, ConstState::c10, ConstState::c01};
}

TEST_CASE("forward transition rows") {
    CHECK(forward_delta(ConstState::c11, 0) == ConstState::c11);
    CHECK(forward_delta(ConstState::c11, 1) == ConstState::c10);
    CHECK(forward_delta(ConstState::c10, 0) == ConstState::c01);
    CHECK(forward_delta(ConstState::c10, 1) == ConstState::c01);
    CHECK(forward_delta(ConstState::c01, 0) == ConstState::c10);
    CHECK(forward_delta(ConstState::c01, 1) == ConstState::c11);
}

TEST_CASE("forward delta matches the remainder recurrence") {
    // One division step maps (c_i, c_{i+1}) to (c_{i+1}, c_i + s*c_{i+1}).
    for (ConstState s : kStates)
        for (int bit : {0, 1}) {
            const auto [ci, cnext] = state_bits(s);
            const int produced = ci ^ (bit & cnext);
            CHECK(forward_delta(s, bit) == state_from_bits(cnext, produced));
        }
}

TEST_CASE("state helpers") {
    CHECK(state_bits(ConstState::c10) == std::pair{1, 0});
    CHECK(state_from_bits(0, 1) == ConstState::c01);
    CHECK_THROWS_AS(state_from_bits(0, 0), std::invalid_argument);
}

TEST_CASE("inverse automaton reverses every forward arrow") {
    const ConstDfa& inv = inverse_dfa();
    CHECK(inv.start == ConstState::c10);
    CHECK(inv.accepting == std::array{false, true, false});
    for (ConstState s : kStates)
        for (int bit : {0, 1}) {
            CHECK(inv.step(forward_delta(s, bit), bit) == s);
            CHECK(forward_delta(inv.step(s, bit), bit) == s);
        }
}

TEST_CASE("both automata are permutative") {
    for (int bit : {0, 1}) {
        std::set<ConstState> forward_targets;
        std::set<ConstState> inverse_targets;
        for (ConstState s : kStates) {
            forward_targets.insert(forward_delta(s, bit));
            inverse_targets.insert(inverse_dfa().step(s, bit));
        }
        CHECK(forward_targets.size() == 3);
        CHECK(inverse_targets.size() == 3);
    }
}

TEST_CASE("acceptance on short words") {
    CHECK(accepts(""));
    CHECK(accepts("00"));
    CHECK(accepts("01"));
    CHECK_FALSE(accepts("10"));
    CHECK_FALSE(accepts("11"));
    CHECK(accepts("110"));
    CHECK_FALSE(accepts("0"));
    CHECK_FALSE(accepts("1"));
    CHECK_THROWS_AS(accepts("0a1"), std::invalid_argument);
}

TEST_CASE("closed-form counts") {
    CHECK(count_words_closed(0) == 1);
    CHECK(count_words_closed(1) == 0);
    CHECK(count_words_closed(3) == 2);
    CHECK(count_words_closed(4) == 6);
    CHECK(count_words_closed(10) == 342);
    CHECK_THROWS_AS(count_words_closed(-1), std::invalid_argument);
}

TEST_CASE("table, closed form and exhaustive filter agree to length 14") {
    for (int k = 0; k <= 14; ++k) {
        BigInt filtered = 0;
        for (const std::string& w : all_words(k))
            if (accepts(w)) ++filtered;
        CHECK(count_words_dfa(k) == count_words_closed(k));
        CHECK(filtered == count_words_closed(k));
    }
}

TEST_CASE("acceptance agrees with the block pattern to length 12") {
    for (int k = 0; k <= 12; ++k)
        for (const std::string& w : all_words(k))
            CHECK(accepts(w) == matches_block_pattern(w));
}

TEST_CASE("counts satisfy l_k = l_{k-1} + 2 l_{k-2}") {
    for (int k = 2; k <= 40; ++k)
        CHECK(count_words_closed(k) ==
              count_words_closed(k - 1) + 2 * count_words_closed(k - 2));
}

TEST_CASE("lexicographic enumeration, frozen prefixes") {
    CHECK(first_word(2) == "00");
    CHECK(next_word("00") == "01");
    CHECK_FALSE(next_word("01").has_value());
    CHECK_FALSE(first_word(1).has_value());
    CHECK(first_word(0) == "");
    const WordTable t4(4);
    std::vector<std::string> words;
    for (auto w = t4.first(); w; w = t4.next(*w)) words.push_back(*w);
    CHECK(words == std::vector<std::string>{"0000", "0001", "0100", "0101", "1010", "1011"});
}

TEST_CASE("enumeration is complete, ordered and accepted") {
    for (int k = 0; k <= 12; ++k) {
        const WordTable table(k);
        BigInt produced = 0;
        std::string previous;
        for (auto w = table.first(); w; w = table.next(*w)) {
            CHECK(accepts(*w));
            if (produced > 0) CHECK(previous < *w);
            previous = *w;
            ++produced;
        }
        CHECK(produced == count_words_closed(k));
    }
}

TEST_CASE("unrank") {
    CHECK(unrank_word(3, 0) == "110");
    CHECK(unrank_word(3, 1) == "111");
    CHECK_THROWS_AS(unrank_word(3, 2), std::out_of_range);
    CHECK_THROWS_AS(unrank_word(3, -1), std::out_of_range);
    CHECK_THROWS_AS(unrank_word(1, 0), std::out_of_range);
    for (int k = 0; k <= 10; ++k) {
        const WordTable table(k);
        BigInt rank = 0;
        for (auto w = table.first(); w; w = table.next(*w), ++rank)
            CHECK(table.unrank(rank) == *w);
    }
}

TEST_CASE("successor of a non-member finds the next member") {
    const WordTable table(3);
    CHECK(table.next("000") == "110");
    CHECK(table.next("111") == std::nullopt);
    CHECK_THROWS_AS(table.next("0000"), std::invalid_argument);
}
