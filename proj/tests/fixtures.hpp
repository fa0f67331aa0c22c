#ifndef AUT_TEST_FIXTURES_HPP
#define AUT_TEST_FIXTURES_HPP

#include "aut/aut.hpp"

namespace fixtures {

// Two states x=0, y=1 over {a,b}: a sends both states to y, b sends both to x.
inline aut::Dfa toggle_dfa() {
    return aut::Dfa(aut::letters_alphabet(2), 2, {1, 0, 1, 0});
}

inline aut::PointedDfa toggle_at_x() { return {toggle_dfa(), 0}; }
inline aut::PointedDfa toggle_at_y() { return {toggle_dfa(), 1}; }

inline aut::AcceptingDfa toggle_accept_x() { return {toggle_dfa(), {0}, 0}; }

// Single spoke state p; loops starting with a land in r, with b in s;
// delta3 is the identity on each loop state.
inline aut::LassoAutomaton loop_head_lasso() {
    aut::LassoAutomaton la(aut::letters_alphabet(2), 1, 2,
                           {0, 0},        // delta1: p -a-> p, p -b-> p
                           {0, 1},        // delta2: p -a-> r, p -b-> s
                           {0, 0, 1, 1}); // delta3: identity per state
    la.initial = 0;
    la.accepting = std::vector<int>{0};
    return la;
}

inline aut::Word word(std::initializer_list<int> ls) { return aut::Word(std::vector<int>(ls)); }

inline aut::Lasso lasso(std::initializer_list<int> spoke, std::initializer_list<int> loop) {
    return aut::Lasso(word(spoke), word(loop));
}

} // namespace fixtures

#endif
