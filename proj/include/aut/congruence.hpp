#ifndef AUT_CONGRUENCE_HPP
#define AUT_CONGRUENCE_HPP

#include <map>
#include <optional>
#include <vector>

#include "aut/dfa.hpp"

namespace aut {

/// Finite presentation of a two-sided congruence on the free monoid:
/// the right-Cayley machine over the classes, a left-action certificate,
/// and shortlex-minimal representatives. Classes are numbered by their
/// representatives in shortlex order, so the class of the empty word is 0.
struct CongruenceRep {
    Alphabet alphabet;
    int class_count = 0;
    int eps_class = 0;
    std::vector<int> right_step; // class * |alphabet| + symbol
    std::vector<int> left_step;  // symbol * class_count + class
    std::vector<Word> representative;
    std::optional<std::vector<int>> accepted_classes; // sorted

    int right(int q, int a) const {
        return right_step[static_cast<std::size_t>(q) * static_cast<std::size_t>(alphabet.size()) +
                          static_cast<std::size_t>(a)];
    }
    int right_word(int q, const Word& w) const {
        for (int a : w.letters)
            q = right(q, a);
        return q;
    }
    int left(int a, int q) const {
        return left_step[static_cast<std::size_t>(a) * static_cast<std::size_t>(class_count) +
                         static_cast<std::size_t>(q)];
    }
    int class_of_word(const Word& w) const { return right_word(eps_class, w); }
};

/// Kernel of the extended transition function, quantified over all states:
/// classes are the distinct state-to-state maps reachable by composing the
/// one-letter maps. BFS in shortlex order yields canonical representatives.
inline CongruenceRep kernel_congruence(const Dfa& dfa) {
    const int n = dfa.state_count;
    const int asize = dfa.alphabet.size();

    std::vector<std::vector<int>> letter_fn(static_cast<std::size_t>(asize),
                                            std::vector<int>(static_cast<std::size_t>(n)));
    for (int a = 0; a < asize; ++a)
        for (int s = 0; s < n; ++s)
            letter_fn[static_cast<std::size_t>(a)][static_cast<std::size_t>(s)] = dfa.step(s, a);

    std::vector<int> identity(static_cast<std::size_t>(n));
    for (int s = 0; s < n; ++s)
        identity[static_cast<std::size_t>(s)] = s;

    std::map<std::vector<int>, int> index;
    std::vector<std::vector<int>> functions{identity};
    std::vector<Word> reps{Word{}};
    index[identity] = 0;
    std::vector<int> right;
    for (std::size_t head = 0; head < functions.size(); ++head) {
        std::vector<int> cur = functions[head];
        for (int a = 0; a < asize; ++a) {
            std::vector<int> composed(static_cast<std::size_t>(n));
            for (int s = 0; s < n; ++s)
                composed[static_cast<std::size_t>(s)] =
                    letter_fn[static_cast<std::size_t>(a)][static_cast<std::size_t>(cur[static_cast<std::size_t>(s)])];
            auto it = index.find(composed);
            if (it == index.end()) {
                it = index.emplace(composed, static_cast<int>(functions.size())).first;
                functions.push_back(composed);
                reps.push_back(reps[head].appended(a));
            }
            right.push_back(it->second);
        }
    }

    CongruenceRep c;
    c.alphabet = dfa.alphabet;
    c.class_count = static_cast<int>(functions.size());
    c.eps_class = 0;
    c.right_step = std::move(right);
    c.representative = std::move(reps);
    // left action: [u] maps to [au], i.e. compose the class function after
    // the letter function; always lands in the closed set
    c.left_step.resize(static_cast<std::size_t>(asize) * static_cast<std::size_t>(c.class_count));
    for (int a = 0; a < asize; ++a)
        for (int q = 0; q < c.class_count; ++q) {
            std::vector<int> composed(static_cast<std::size_t>(n));
            for (int s = 0; s < n; ++s)
                composed[static_cast<std::size_t>(s)] =
                    functions[static_cast<std::size_t>(q)][static_cast<std::size_t>(
                        letter_fn[static_cast<std::size_t>(a)][static_cast<std::size_t>(s)])];
            c.left_step[static_cast<std::size_t>(a) * static_cast<std::size_t>(c.class_count) +
                        static_cast<std::size_t>(q)] = index.at(composed);
        }
    return c;
}

/// Transition monoid of a reachable pointed automaton.
inline CongruenceRep transition_monoid(const PointedDfa& p) {
    if (!is_reachable(p))
        throw Error(ErrorKind::contract, "transition_monoid: automaton must be reachable");
    return kernel_congruence(p.dfa);
}

/// Right-Cayley machine of a congruence, pointed at the class of the
/// empty word. Reachable by construction.
inline PointedDfa machine(const CongruenceRep& c) {
    return PointedDfa{Dfa(c.alphabet, c.class_count, c.right_step), c.eps_class};
}

/// True iff c is finer than or equal to d, i.e. the map [w]_c -> [w]_d is
/// well-defined. Decided by a simultaneous walk over class pairs.
inline bool congruence_leq(const CongruenceRep& c, const CongruenceRep& d) {
    if (c.alphabet != d.alphabet)
        throw Error(ErrorKind::alphabet_mismatch, "congruence_leq across alphabets");
    std::vector<int> image(static_cast<std::size_t>(c.class_count), -1);
    std::vector<int> queue;
    image[static_cast<std::size_t>(c.eps_class)] = d.eps_class;
    queue.push_back(c.eps_class);
    for (std::size_t head = 0; head < queue.size(); ++head) {
        int qc = queue[head];
        int qd = image[static_cast<std::size_t>(qc)];
        for (int a = 0; a < c.alphabet.size(); ++a) {
            int tc = c.right(qc, a);
            int td = d.right(qd, a);
            if (image[static_cast<std::size_t>(tc)] < 0) {
                image[static_cast<std::size_t>(tc)] = td;
                queue.push_back(tc);
            } else if (image[static_cast<std::size_t>(tc)] != td) {
                return false;
            }
        }
    }
    return true;
}

/// A right-Cayley machine without the left-action certificate, as read from
/// input files.
struct RawCayley {
    Alphabet alphabet;
    int class_count = 0;
    int eps_class = 0;
    std::vector<int> right_step;
};

class CongruenceError : public Error {
  public:
    CongruenceError(const std::string& what, Word witness_word, int witness_symbol)
        : Error(ErrorKind::not_a_congruence, what), word(std::move(witness_word)), symbol(witness_symbol) {}
    Word word;  // representative w with ambiguous [symbol . w]
    int symbol; // the left-multiplied letter
};

/// Checks that a right congruence presented by its right-Cayley machine is
/// two-sided: propagates the left action of each letter from the class of
/// the empty word along right edges and verifies every edge agrees.
inline CongruenceRep verify_congruence(const RawCayley& raw) {
    const int asize = raw.alphabet.size();
    const int k = raw.class_count;
    if (k <= 0 || raw.eps_class < 0 || raw.eps_class >= k)
        throw Error(ErrorKind::contract, "verify_congruence: bad class data");
    if (raw.right_step.size() != static_cast<std::size_t>(k) * static_cast<std::size_t>(asize))
        throw Error(ErrorKind::contract, "verify_congruence: right_step is not total");
    for (int t : raw.right_step)
        if (t < 0 || t >= k)
            throw Error(ErrorKind::contract, "verify_congruence: right_step target out of range");

    // BFS from the empty-word class: reachability check + shortlex representatives
    std::vector<int> order;
    std::vector<Word> rep(static_cast<std::size_t>(k));
    std::vector<char> seen(static_cast<std::size_t>(k), 0);
    seen[static_cast<std::size_t>(raw.eps_class)] = 1;
    order.push_back(raw.eps_class);
    auto right = [&](int q, int a) {
        return raw.right_step[static_cast<std::size_t>(q) * static_cast<std::size_t>(asize) +
                              static_cast<std::size_t>(a)];
    };
    for (std::size_t head = 0; head < order.size(); ++head) {
        int q = order[head];
        for (int a = 0; a < asize; ++a) {
            int t = right(q, a);
            if (!seen[static_cast<std::size_t>(t)]) {
                seen[static_cast<std::size_t>(t)] = 1;
                rep[static_cast<std::size_t>(t)] = rep[static_cast<std::size_t>(q)].appended(a);
                order.push_back(t);
            }
        }
    }
    if (order.size() != static_cast<std::size_t>(k))
        throw Error(ErrorKind::contract, "verify_congruence: some class is unreachable from the empty word");

    std::vector<int> left(static_cast<std::size_t>(asize) * static_cast<std::size_t>(k), -1);
    auto left_at = [&](int a, int q) -> int& {
        return left[static_cast<std::size_t>(a) * static_cast<std::size_t>(k) + static_cast<std::size_t>(q)];
    };
    for (int a = 0; a < asize; ++a) {
        left_at(a, raw.eps_class) = right(raw.eps_class, a);
        for (std::size_t head = 0; head < order.size(); ++head) {
            int q = order[head];
            for (int b = 0; b < asize; ++b) {
                int t = right(q, b);
                int want = right(left_at(a, q), b);
                if (left_at(a, t) < 0)
                    left_at(a, t) = want;
                else if (left_at(a, t) != want)
                    throw CongruenceError(
                        "not a two-sided congruence: the class of " +
                            raw.alphabet.symbols[static_cast<std::size_t>(a)] + "." +
                            render_word(raw.alphabet, rep[static_cast<std::size_t>(t)]) +
                            " is ambiguous",
                        rep[static_cast<std::size_t>(t)], a);
            }
        }
    }

    // renumber classes so ids follow shortlex representatives
    std::vector<int> new_of_old(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i)
        new_of_old[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])] = i;
    CongruenceRep c;
    c.alphabet = raw.alphabet;
    c.class_count = k;
    c.eps_class = 0;
    c.right_step.resize(static_cast<std::size_t>(k) * static_cast<std::size_t>(asize));
    c.left_step.resize(static_cast<std::size_t>(asize) * static_cast<std::size_t>(k));
    c.representative.resize(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) {
        int old_q = order[static_cast<std::size_t>(i)];
        c.representative[static_cast<std::size_t>(i)] = rep[static_cast<std::size_t>(old_q)];
        for (int a = 0; a < asize; ++a) {
            c.right_step[static_cast<std::size_t>(i) * static_cast<std::size_t>(asize) + static_cast<std::size_t>(a)] =
                new_of_old[static_cast<std::size_t>(right(old_q, a))];
            c.left_step[static_cast<std::size_t>(a) * static_cast<std::size_t>(k) + static_cast<std::size_t>(i)] =
                new_of_old[static_cast<std::size_t>(left_at(a, old_q))];
        }
    }
    return c;
}

struct CounitResult {
    CongruenceRep table;
    std::vector<int> class_to_state;
};

/// Counit of the Galois connection: the class of u goes to the state reached
/// by u from the initial state. Verified to be a morphism of pointed automata.
inline CounitResult counit(const PointedDfa& p) {
    CounitResult r;
    r.table = transition_monoid(p);
    r.class_to_state.resize(static_cast<std::size_t>(r.table.class_count));
    for (int q = 0; q < r.table.class_count; ++q)
        r.class_to_state[static_cast<std::size_t>(q)] =
            p.dfa.run(p.initial, r.table.representative[static_cast<std::size_t>(q)]);
    if (!is_morphism(machine(r.table), p, r.class_to_state))
        throw Error(ErrorKind::contract, "counit: computed map is not a morphism");
    return r;
}

/// Transition monoid with the accepted classes induced by the accepting set.
inline CongruenceRep t_with_acceptance(const AcceptingDfa& a) {
    if (!a.initial)
        throw Error(ErrorKind::contract, "t_with_acceptance: automaton has no initial state");
    PointedDfa p{a.dfa, *a.initial};
    if (!is_reachable(p))
        throw Error(ErrorKind::contract, "t_with_acceptance: automaton must be reachable");
    CongruenceRep c = transition_monoid(p);
    std::vector<int> accepted;
    for (int q = 0; q < c.class_count; ++q)
        if (a.is_accepting(p.dfa.run(p.initial, c.representative[static_cast<std::size_t>(q)])))
            accepted.push_back(q);
    c.accepted_classes = std::move(accepted);
    return c;
}

inline AcceptingDfa m_with_acceptance(const CongruenceRep& c) {
    if (!c.accepted_classes)
        throw Error(ErrorKind::contract, "m_with_acceptance: congruence carries no accepted classes");
    PointedDfa p = machine(c);
    return AcceptingDfa{p.dfa, *c.accepted_classes, p.initial};
}

} // namespace aut

#endif
