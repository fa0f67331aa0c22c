#include "doctest.h"

#include "fixtures.hpp"

using namespace aut;
using fixtures::word;

TEST_CASE("transition_monoid of the toggle has three classes") {
    CongruenceRep c = transition_monoid(fixtures::toggle_at_x());
    REQUIRE(c.class_count == 3);
    CHECK(c.eps_class == 0);
    CHECK(c.representative == std::vector<Word>{word({}), word({0}), word({1})});
    // right-Cayley rows: [eps] -a-> [a], [eps] -b-> [b], [a] -a-> [a],
    // [a] -b-> [b], [b] -a-> [a], [b] -b-> [b]
    CHECK(c.right(0, 0) == 1);
    CHECK(c.right(0, 1) == 2);
    CHECK(c.right(1, 0) == 1);
    CHECK(c.right(1, 1) == 2);
    CHECK(c.right(2, 0) == 1);
    CHECK(c.right(2, 1) == 2);
    // the kernel identifies u and v exactly when their state maps agree
    Dfa d = fixtures::toggle_dfa();
    for (const Word& u : words_upto(2, 4))
        for (const Word& v : words_upto(2, 4)) {
            bool same_fn = true;
            for (int s = 0; s < d.state_count && same_fn; ++s)
                same_fn = d.run(s, u) == d.run(s, v);
            CHECK(same_fn == (c.class_of_word(u) == c.class_of_word(v)));
        }
}

TEST_CASE("transition_monoid of the one-state automaton is trivial") {
    PointedDfa one{Dfa(letters_alphabet(2), 1, {0, 0}), 0};
    CHECK(transition_monoid(one).class_count == 1);
}

TEST_CASE("transition_monoid of the reachable subset automaton") {
    PowersetDfa lift = powerset_lift(fixtures::toggle_accept_x());
    PointedDfa reach = lift.reachable().automaton;
    CongruenceRep c = transition_monoid(reach);
    REQUIRE(c.class_count == 3);
    // the classes of a and b absorb both letters
    CHECK(c.right(1, 0) == 1);
    CHECK(c.right(1, 1) == 1);
    CHECK(c.right(2, 0) == 2);
    CHECK(c.right(2, 1) == 2);
}

TEST_CASE("transition_monoid requires reachability") {
    Dfa d(letters_alphabet(2), 2, {0, 0, 1, 1});
    CHECK_THROWS_AS(transition_monoid(PointedDfa{d, 0}), Error);
}

TEST_CASE("machine rebuilds the right-Cayley automaton") {
    CongruenceRep c = transition_monoid(fixtures::toggle_at_x());
    PointedDfa m = machine(c);
    CHECK(m.dfa.state_count == 3);
    CHECK(m.initial == 0);
    CHECK(m.dfa.step(0, 0) == 1);
    CHECK(m.dfa.step(0, 1) == 2);
    CHECK(m.dfa.step(1, 0) == 1);
    CHECK(m.dfa.step(1, 1) == 2);
    CHECK(is_reachable(m));

    SUBCASE("one class gives the one-state machine") {
        PointedDfa one{Dfa(letters_alphabet(2), 1, {0, 0}), 0};
        CHECK(machine(transition_monoid(one)).dfa.state_count == 1);
    }
    SUBCASE("unit law: the kernel of the machine is the congruence itself") {
        CongruenceRep round = transition_monoid(machine(c));
        CHECK(round.class_count == c.class_count);
        CHECK(round.right_step == c.right_step);
        CHECK(round.left_step == c.left_step);
        CHECK(round.representative == c.representative);
    }
}

TEST_CASE("congruence_leq") {
    CongruenceRep fine = transition_monoid(fixtures::toggle_at_x());
    PointedDfa one{Dfa(letters_alphabet(2), 1, {0, 0}), 0};
    CongruenceRep full = transition_monoid(one);
    CHECK(congruence_leq(fine, fine));
    CHECK(congruence_leq(fine, full));
    CHECK_FALSE(congruence_leq(full, fine));
    CongruenceRep other = transition_monoid(PointedDfa{Dfa(letters_alphabet(3), 1, {0, 0, 0}), 0});
    CHECK_THROWS_AS(congruence_leq(fine, other), Error);
}

TEST_CASE("verify_congruence") {
    SUBCASE("the three-class table is accepted") {
        CongruenceRep c = transition_monoid(fixtures::toggle_at_x());
        RawCayley raw{c.alphabet, c.class_count, c.eps_class, c.right_step};
        CongruenceRep v = verify_congruence(raw);
        CHECK(v.right_step == c.right_step);
        CHECK(v.left_step == c.left_step);
        CHECK(v.representative == c.representative);
    }
    SUBCASE("the parity-of-a congruence is accepted") {
        // classes: even / odd number of a's, a two-sided invariant
        RawCayley raw{letters_alphabet(2), 2, 0, {1, 0, 0, 1}};
        CongruenceRep v = verify_congruence(raw);
        CHECK(v.class_count == 2);
        CHECK(v.left(0, 0) == 1); // a . (even word) has odd count
        CHECK(v.left(0, 1) == 0);
        CHECK(v.left(1, 0) == 0);
        CHECK(v.left(1, 1) == 1);
    }
    SUBCASE("the ends-in-a right congruence is not two-sided") {
        // the empty word and b share a class, yet a.eps ends in a while a.b
        // does not, so the left action of a is ill-defined
        RawCayley raw{letters_alphabet(2), 2, 0, {1, 0, 1, 0}};
        try {
            verify_congruence(raw);
            FAIL("expected rejection");
        } catch (const CongruenceError& e) {
            CHECK(e.word == word({}));
            CHECK(e.symbol == 0);
        }
    }
    SUBCASE("a right congruence that is not two-sided is rejected with a witness") {
        // 0 -a-> 1, 0 -b-> 1, 1 -a-> 0, 1 -b-> 1: [a.?] is ambiguous at class 1
        RawCayley raw{letters_alphabet(2), 2, 0, {1, 1, 0, 1}};
        try {
            verify_congruence(raw);
            FAIL("expected rejection");
        } catch (const CongruenceError& e) {
            CHECK(e.word == word({0})); // class reached first by the word a
            CHECK(e.symbol == 0);
        }
    }
    SUBCASE("unreachable classes are rejected") {
        RawCayley raw{letters_alphabet(2), 2, 0, {0, 0, 1, 1}};
        CHECK_THROWS_AS(verify_congruence(raw), Error);
    }
}

TEST_CASE("counit") {
    SUBCASE("on the toggle pointed at x") {
        CounitResult r = counit(fixtures::toggle_at_x());
        CHECK(r.class_to_state == std::vector<int>{0, 1, 0});
    }
    SUBCASE("on the one-state automaton") {
        PointedDfa one{Dfa(letters_alphabet(2), 1, {0, 0}), 0};
        CHECK(counit(one).class_to_state == std::vector<int>{0});
    }
    SUBCASE("on the reachable subset automaton") {
        PointedDfa reach = powerset_lift(fixtures::toggle_accept_x()).reachable().automaton;
        CounitResult r = counit(reach);
        // reachable subsets in discovery order: {x}, then the empty set, then {x,y}
        CHECK(r.class_to_state == std::vector<int>{0, 1, 2});
    }
}

TEST_CASE("acceptance travels through T and M") {
    AcceptingDfa a = fixtures::toggle_accept_x();
    CongruenceRep c = t_with_acceptance(a);
    REQUIRE(c.accepted_classes.has_value());
    CHECK(*c.accepted_classes == std::vector<int>{0, 2}); // classes of the empty word and b

    AcceptingDfa m = m_with_acceptance(c);
    CHECK(m.accepting == std::vector<int>{0, 2});
    CHECK(bounded_languages_equal(a.dfa, *a.initial, a.accepting, m.dfa, *m.initial, m.accepting, 8));

    SUBCASE("no accepting states") {
        AcceptingDfa none{fixtures::toggle_dfa(), {}, 0};
        CHECK(t_with_acceptance(none).accepted_classes->empty());
    }
    SUBCASE("all states accepting") {
        AcceptingDfa all{fixtures::toggle_dfa(), {0, 1}, 0};
        CHECK(*t_with_acceptance(all).accepted_classes == std::vector<int>{0, 1, 2});
    }
}

TEST_CASE("galois laws on random automata") {
    Rng rng(101);
    for (int trial = 0; trial < 40; ++trial) {
        PointedDfa p = random_pointed_reachable(rng, 5, 2);
        CHECK(check_unit_law(p).pass);
        CHECK(check_counit(p).pass);
        CHECK(check_monotonicity(p).pass);
        CHECK(check_left_right_commute(transition_monoid(p)).pass);
    }
    for (int trial = 0; trial < 25; ++trial) {
        AcceptingDfa a = random_accepting_reachable(rng, 5, 2);
        CHECK(check_language_preservation(a).pass);
    }
}
