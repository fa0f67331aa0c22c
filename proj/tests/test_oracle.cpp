#include "doctest.h"

#include "fixtures.hpp"

using namespace aut;
using fixtures::lasso;
using fixtures::word;

TEST_CASE("brute_congruence") {
    Dfa d = fixtures::toggle_dfa();
    SUBCASE("pairs at bound 2 match the three-class kernel") {
        std::vector<std::pair<Word, Word>> pairs = brute_congruence(d, 2);
        auto has = [&](const Word& u, const Word& v) {
            return std::find(pairs.begin(), pairs.end(), std::make_pair(u, v)) != pairs.end() ||
                   std::find(pairs.begin(), pairs.end(), std::make_pair(v, u)) != pairs.end();
        };
        CHECK(has(word({0}), word({0, 0})));       // a and aa act alike
        CHECK(has(word({1}), word({1, 1})));       // b and bb act alike
        CHECK_FALSE(has(word({}), word({1})));     // the empty word is the identity, b is not
        CHECK(has(word({0}), word({1, 0})));       // ba collapses to a
    }
    SUBCASE("bound 0 relates the empty word to itself only") {
        std::vector<std::pair<Word, Word>> pairs = brute_congruence(d, 0);
        REQUIRE(pairs.size() == 1);
        CHECK(pairs[0] == std::make_pair(word({}), word({})));
    }
    SUBCASE("agreement with the closure-based kernel on random automata") {
        Rng rng(107);
        for (int trial = 0; trial < 15; ++trial) {
            PointedDfa p = random_pointed_reachable(rng, 4, 2);
            CHECK(brute_congruence_agrees(p.dfa, transition_monoid(p), 3));
        }
    }
}

TEST_CASE("brute_gamma_pairs") {
    std::vector<std::pair<Lasso, Lasso>> pairs = brute_gamma_pairs(2, 2);
    auto has = [&](const Lasso& a, const Lasso& b) {
        return std::find(pairs.begin(), pairs.end(), std::make_pair(a, b)) != pairs.end() ||
               std::find(pairs.begin(), pairs.end(), std::make_pair(b, a)) != pairs.end();
    };
    CHECK(has(lasso({}, {0}), lasso({}, {0, 0})));
    CHECK(has(lasso({}, {0, 1}), lasso({0}, {1, 0})));
    CHECK_FALSE(has(lasso({}, {0, 1}), lasso({}, {1, 0})));
}

TEST_CASE("canonical_lasso") {
    CHECK(canonical_lasso(lasso({}, {0, 0})) == lasso({}, {0}));
    CHECK(canonical_lasso(lasso({0}, {1, 0})) == lasso({}, {0, 1}));
    CHECK(canonical_lasso(lasso({0, 1}, {0, 1})) == lasso({}, {0, 1}));
    SUBCASE("equality of canonical forms decides gamma-equivalence") {
        std::vector<Lasso> all = enumerate_lassos(2, 3, 3);
        for (std::size_t i = 0; i < all.size(); ++i)
            for (std::size_t j = i + 1; j < all.size(); ++j)
                CHECK((canonical_lasso(all[i]) == canonical_lasso(all[j])) ==
                      gamma_equivalent(all[i], all[j]));
    }
}

TEST_CASE("languages_equal_upto") {
    auto asb_star = [](const Word& w) { return w.empty() || w.letters.back() == 1; };
    auto bsa_star = [](const Word& w) { return w.empty() || w.letters.back() == 0; };
    SUBCASE("identical queries agree") {
        CHECK_FALSE(languages_equal_upto(asb_star, asb_star, 2, 4).has_value());
    }
    SUBCASE("witness is the least differing word") {
        auto diff = languages_equal_upto(asb_star, bsa_star, 2, 1);
        REQUIRE(diff.has_value());
        CHECK(*diff == word({0}));
    }
    SUBCASE("empty versus empty") {
        auto nothing = [](const Word&) { return false; };
        CHECK_FALSE(languages_equal_upto(nothing, nothing, 2, 4).has_value());
    }
}
