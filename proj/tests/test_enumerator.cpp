#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>

#include "coprimes/enumerator.hpp"
#include "coprimes/oracle.hpp"
#include "testutil.hpp"

using namespace coprimes;
using testutil::P;

namespace {
std::vector<std::pair<Gf2Poly, Gf2Poly>> collect(PairCursor cursor) {
    std::vector<std::pair<Gf2Poly, Gf2Poly>> out;
    while (auto p = cursor.next()) out.push_back(std::move(*p));
    return out;
}
}  // namespace

TEST_CASE("assemble") {
    CHECK(assemble(Composition{{1, 1}, 2}, "", "00") ==
          std::vector{P("x"), P("x"), P("1")});
    CHECK(assemble(Composition{{1, 1}, 2}, "", "01") ==
          std::vector{P("x"), P("x+1"), P("1")});
    CHECK(assemble(Composition{{2, 1}, 3}, "1", "01") ==
          std::vector{P("x^2+x"), P("x+1"), P("1")});
    CHECK(assemble(Composition{{3, 2}, 5}, "101", "00") ==
          std::vector{P("x^3+x^2"), P("x^2+x"), P("1")});
}

TEST_CASE("assemble validation") {
    CHECK_THROWS_AS(assemble(Composition{{1, 1}, 2}, "", "0"), std::invalid_argument);
    CHECK_THROWS_AS(assemble(Composition{{1, 1}, 2}, "0", "00"), std::invalid_argument);
    CHECK_THROWS_AS(assemble(Composition{{1, 1}, 2}, "", "10"), std::invalid_argument);
    CHECK_THROWS_AS(assemble(Composition{{0, 2}, 2}, "", "00"), std::invalid_argument);
    CHECK_THROWS_AS(assemble(Composition{{1, 2}, 2}, "0", "00"), std::invalid_argument);
    CHECK_THROWS_AS(assemble(Composition{{2, 1}, 3}, "x", "01"), std::invalid_argument);
}

TEST_CASE("build_pair at degree 2") {
    CHECK(build_pair(Composition{{1, 1}, 2}, "", "00") ==
          std::pair{P("x^2+x+1"), P("x^2+1")});
    CHECK(build_pair(Composition{{1, 1}, 2}, "", "01") ==
          std::pair{P("x^2+1"), P("x^2+x+1")});
}

TEST_CASE("build_pair lands in A_n") {
    const auto [f, g] = build_pair(Composition{{2, 1}, 3}, "1", "01");
    CHECK(f == P("x^3+x^2+1"));
    CHECK(g == P("x^3+x+1"));
    CHECK(in_sn(f, 3));
    CHECK(in_sn(g, 3));
    CHECK(gcd(f, g).is_one());
}

TEST_CASE("stream basics") {
    CHECK(collect(PairCursor(1)).empty());
    CHECK(collect(PairCursor(2)) ==
          std::vector{std::pair{P("x^2+x+1"), P("x^2+1")},
                      std::pair{P("x^2+1"), P("x^2+x+1")}});
    CHECK(collect(PairCursor(3)).size() == 10);
    CHECK_THROWS_AS(PairCursor(0), std::invalid_argument);
}

TEST_CASE("stream is sound, duplicate-free and symmetric to degree 7") {
    for (int n = 1; n <= 7; ++n) {
        const auto pairs = collect(PairCursor(n));
        std::set<std::pair<Gf2Poly, Gf2Poly>> seen;
        for (const auto& [f, g] : pairs) {
            CHECK(in_sn(f, static_cast<std::size_t>(n)));
            CHECK(in_sn(g, static_cast<std::size_t>(n)));
            CHECK(gcd(f, g).is_one());
            CHECK(seen.insert({f, g}).second);  // no duplicates
        }
        for (const auto& [f, g] : pairs) CHECK(seen.contains({g, f}));
        CHECK(BigInt(pairs.size()) == count_pairs(n));
        CHECK(pairs.size() % 2 == 0);
    }
}

TEST_CASE("stream matches the brute-force set to degree 7") {
    for (int n = 2; n <= 7; ++n) {
        auto pairs = collect(PairCursor(n));
        std::sort(pairs.begin(), pairs.end());
        CHECK(pairs == brute_force_an(n));
    }
}

TEST_CASE("fixed-k streams partition the full stream") {
    const int n = 6;
    std::vector<std::pair<Gf2Poly, Gf2Poly>> merged;
    for (int k = 2; k <= n; ++k) {
        const auto part = collect(PairCursor(n, k));
        CHECK(BigInt(part.size()) == count_pairs_by_k(n, k));
        merged.insert(merged.end(), part.begin(), part.end());
    }
    CHECK(merged == collect(PairCursor(n)));
    CHECK(collect(PairCursor(6, 1)).empty());
    CHECK(collect(PairCursor(6, 7)).empty());
}

TEST_CASE("count_pairs_by_k") {
    CHECK(count_pairs_by_k(2, 2) == 2);
    CHECK(count_pairs_by_k(3, 2) == 8);
    CHECK(count_pairs_by_k(3, 3) == 2);
    CHECK(count_pairs_by_k(3, 1) == 0);
    CHECK(count_pairs_by_k(3, 4) == 0);
    CHECK_THROWS_AS(count_pairs_by_k(0, 2), std::domain_error);
}

TEST_CASE("count_pairs") {
    const BigInt expected[] = {0, 2, 10, 42, 170};
    for (int n = 1; n <= 5; ++n) CHECK(count_pairs(n) == expected[n - 1]);
    CHECK(count_pairs(10) == 174762);
    CHECK_THROWS_AS(count_pairs(0), std::domain_error);
    CHECK_THROWS_AS(count_pairs(-3), std::domain_error);
}

TEST_CASE("stream cardinality matches the closed form to degree 12") {
    for (int n : {11, 12}) {
        PairCursor cursor(n);
        BigInt produced = 0;
        while (cursor.next()) ++produced;
        CHECK(produced == count_pairs(n));
    }
}

TEST_CASE("per-k counts sum to the closed form") {
    for (int n = 1; n <= 64; ++n) {
        BigInt total = 0;
        for (int k = 2; k <= n; ++k) total += count_pairs_by_k(n, k);
        CHECK(total == count_pairs(n));
    }
}
