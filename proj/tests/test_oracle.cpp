#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "coprimes/enumerator.hpp"
#include "coprimes/oracle.hpp"
#include "testutil.hpp"

using namespace coprimes;
using testutil::P;

TEST_CASE("enumerate_sn") {
    CHECK(enumerate_sn(1) == std::vector{P("x+1")});
    CHECK(enumerate_sn(2) == std::vector{P("x^2+1"), P("x^2+x+1")});
    CHECK(enumerate_sn(5).size() == 16);
    for (int n = 1; n <= 10; ++n) {
        const auto sn = enumerate_sn(n);
        CHECK(sn.size() == std::size_t{1} << (n - 1));
        CHECK(std::is_sorted(sn.begin(), sn.end()));
        for (const Gf2Poly& p : sn) CHECK(in_sn(p, static_cast<std::size_t>(n)));
    }
    CHECK_THROWS_AS(enumerate_sn(0), std::invalid_argument);
    CHECK_THROWS_AS(enumerate_sn(64), std::invalid_argument);
}

TEST_CASE("brute_force_an") {
    CHECK(brute_force_an(1).empty());
    CHECK(brute_force_an(2) ==
          std::vector{std::pair{P("x^2+1"), P("x^2+x+1")},
                      std::pair{P("x^2+x+1"), P("x^2+1")}});
    CHECK(brute_force_an(4).size() == 42);
}

TEST_CASE("brute force set is swap-symmetric and off-diagonal") {
    for (int n = 1; n <= 6; ++n) {
        const auto pairs = brute_force_an(n);
        for (const auto& [f, g] : pairs) {
            CHECK(f != g);
            CHECK(std::binary_search(pairs.begin(), pairs.end(), std::pair{g, f}));
        }
    }
}

TEST_CASE("coprime pairs among all monic pairs number 2^(2n-1)") {
    for (int n = 1; n <= 5; ++n) {
        const auto monic = testutil::monic_of_degree(n);
        std::uint64_t coprime = 0;
        for (const Gf2Poly& f : monic)
            for (const Gf2Poly& g : monic)
                if (gcd(f, g).is_one()) ++coprime;
        CHECK(coprime == std::uint64_t{1} << (2 * n - 1));
    }
}

TEST_CASE("verify passes on small degrees") {
    for (int n : {1, 2, 4, 6}) {
        const VerifyReport report = verify(n);
        CHECK(report.ok);
        CHECK(report.missing.empty());
        CHECK(report.extra.empty());
        CHECK(report.oracle_count == report.enumerator_count);
        CHECK(report.oracle_count == report.formula_count);
    }
    CHECK(verify(6).oracle_count == 682);
}

TEST_CASE("verify guards large degrees") {
    CHECK_THROWS_AS(verify(11), std::invalid_argument);
    CHECK_THROWS_AS(verify(0), std::invalid_argument);
}

TEST_CASE("report harness flags injected defects") {
    const auto oracle_pairs = brute_force_an(3);

    SUBCASE("clean input is ok") {
        auto emitted = oracle_pairs;
        const auto report = make_report(3, oracle_pairs, emitted, BigInt(oracle_pairs.size()));
        CHECK(report.ok);
    }
    SUBCASE("a duplicate shows up as extra") {
        auto emitted = oracle_pairs;
        emitted.push_back(oracle_pairs.front());
        const auto report = make_report(3, oracle_pairs, emitted, BigInt(oracle_pairs.size()));
        CHECK_FALSE(report.ok);
        CHECK(report.extra == decltype(report.extra){oracle_pairs.front()});
        CHECK(report.missing.empty());
    }
    SUBCASE("a dropped pair shows up as missing") {
        auto emitted = oracle_pairs;
        emitted.pop_back();
        const auto report = make_report(3, oracle_pairs, emitted, BigInt(oracle_pairs.size()));
        CHECK_FALSE(report.ok);
        CHECK(report.missing == decltype(report.missing){oracle_pairs.back()});
        CHECK(report.extra.empty());
    }
    SUBCASE("a foreign pair shows up as extra") {
        auto emitted = oracle_pairs;
        emitted.emplace_back(P("x^3"), P("x^3"));
        const auto report = make_report(3, oracle_pairs, emitted, BigInt(oracle_pairs.size()));
        CHECK_FALSE(report.ok);
        CHECK(report.extra == decltype(report.extra){{P("x^3"), P("x^3")}});
    }
    SUBCASE("a wrong formula count fails") {
        auto emitted = oracle_pairs;
        const auto report = make_report(3, oracle_pairs, emitted, BigInt(11));
        CHECK_FALSE(report.ok);
        CHECK(report.missing.empty());
        CHECK(report.extra.empty());
    }
}
