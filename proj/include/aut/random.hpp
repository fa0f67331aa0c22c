#ifndef AUT_RANDOM_HPP
#define AUT_RANDOM_HPP

#include "aut/lasso.hpp"

namespace aut {

inline Alphabet letters_alphabet(int n) {
    std::vector<std::string> syms;
    for (int i = 0; i < n; ++i)
        syms.push_back(std::string(1, static_cast<char>('a' + i)));
    return Alphabet(syms);
}

inline Dfa random_dfa(Rng& rng, int max_states, int alphabet_size) {
    int n = 1 + rng.below(max_states);
    std::vector<int> table(static_cast<std::size_t>(n) * static_cast<std::size_t>(alphabet_size));
    for (auto& t : table)
        t = rng.below(n);
    return Dfa(letters_alphabet(alphabet_size), n, std::move(table));
}

inline PointedDfa random_pointed_reachable(Rng& rng, int max_states, int alphabet_size) {
    Dfa d = random_dfa(rng, max_states, alphabet_size);
    int init = rng.below(d.state_count);
    return reachable_part(PointedDfa{std::move(d), init}).automaton;
}

inline AcceptingDfa random_accepting_reachable(Rng& rng, int max_states, int alphabet_size) {
    PointedDfa p = random_pointed_reachable(rng, max_states, alphabet_size);
    std::vector<int> acc;
    for (int s = 0; s < p.dfa.state_count; ++s)
        if (rng.coin())
            acc.push_back(s);
    return AcceptingDfa{p.dfa, std::move(acc), p.initial};
}

inline LassoAutomaton random_lasso_reachable(Rng& rng, int max_sort, int alphabet_size) {
    int n1 = 1 + rng.below(max_sort);
    int n2 = 1 + rng.below(max_sort);
    std::size_t a = static_cast<std::size_t>(alphabet_size);
    std::vector<int> d1(static_cast<std::size_t>(n1) * a), d2(static_cast<std::size_t>(n1) * a),
        d3(static_cast<std::size_t>(n2) * a);
    for (auto& t : d1)
        t = rng.below(n1);
    for (auto& t : d2)
        t = rng.below(n2);
    for (auto& t : d3)
        t = rng.below(n2);
    LassoAutomaton la(letters_alphabet(alphabet_size), n1, n2, std::move(d1), std::move(d2),
                      std::move(d3));
    la.initial = rng.below(n1);
    LassoAutomaton reach = lasso_reachable_part(la).automaton;
    std::vector<int> acc;
    for (int y = 0; y < reach.x2_count; ++y)
        if (rng.coin())
            acc.push_back(y);
    reach.accepting = std::move(acc);
    return reach;
}

} // namespace aut

#endif
