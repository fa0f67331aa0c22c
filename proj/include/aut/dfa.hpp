#ifndef AUT_DFA_HPP
#define AUT_DFA_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <vector>

#include "aut/alphabet.hpp"
#include "aut/partition.hpp"

namespace aut {

/// Deterministic automaton with a total transition table and no chosen
/// initial or accepting structure.
struct Dfa {
    Alphabet alphabet;
    int state_count = 0;
    std::vector<int> delta; // state * |alphabet| + symbol

    Dfa() = default;
    Dfa(Alphabet alpha, int states, std::vector<int> table)
        : alphabet(std::move(alpha)), state_count(states), delta(std::move(table)) {
        if (state_count <= 0)
            throw Error(ErrorKind::contract, "automaton needs at least one state");
        if (delta.size() != static_cast<std::size_t>(state_count) * static_cast<std::size_t>(alphabet.size()))
            throw Error(ErrorKind::contract, "transition table is not total");
        for (int t : delta)
            if (t < 0 || t >= state_count)
                throw Error(ErrorKind::contract, "transition target out of range");
    }

    int step(int state, int symbol) const {
        return delta[static_cast<std::size_t>(state) * static_cast<std::size_t>(alphabet.size()) +
                     static_cast<std::size_t>(symbol)];
    }

    int run(int state, const Word& w) const {
        for (int a : w.letters)
            state = step(state, a);
        return state;
    }
};

struct PointedDfa {
    Dfa dfa;
    int initial = 0;
};

struct AcceptingDfa {
    Dfa dfa;
    std::vector<int> accepting; // sorted state indices
    std::optional<int> initial;

    bool is_accepting(int state) const {
        return std::binary_search(accepting.begin(), accepting.end(), state);
    }
};

inline int run_word(const Dfa& dfa, int start, const Word& w) { return dfa.run(start, w); }

inline bool accepts(const AcceptingDfa& a, const Word& w) {
    if (!a.initial)
        throw Error(ErrorKind::contract, "accepts: automaton has no initial state");
    return a.is_accepting(a.dfa.run(*a.initial, w));
}

struct ReachableResult {
    PointedDfa automaton;
    std::vector<int> old_to_new; // -1 for unreachable states
    std::vector<int> new_to_old;
};

/// Subautomaton on the states reachable from the initial state. BFS in
/// alphabet order fixes the state numbering.
inline ReachableResult reachable_part(const PointedDfa& p) {
    const int asize = p.dfa.alphabet.size();
    std::vector<int> old_to_new(static_cast<std::size_t>(p.dfa.state_count), -1);
    std::vector<int> new_to_old;
    old_to_new[static_cast<std::size_t>(p.initial)] = 0;
    new_to_old.push_back(p.initial);
    for (std::size_t head = 0; head < new_to_old.size(); ++head) {
        int s = new_to_old[head];
        for (int a = 0; a < asize; ++a) {
            int t = p.dfa.step(s, a);
            if (old_to_new[static_cast<std::size_t>(t)] < 0) {
                old_to_new[static_cast<std::size_t>(t)] = static_cast<int>(new_to_old.size());
                new_to_old.push_back(t);
            }
        }
    }
    int n = static_cast<int>(new_to_old.size());
    std::vector<int> table(static_cast<std::size_t>(n) * static_cast<std::size_t>(asize));
    for (int s = 0; s < n; ++s)
        for (int a = 0; a < asize; ++a)
            table[static_cast<std::size_t>(s) * static_cast<std::size_t>(asize) + static_cast<std::size_t>(a)] =
                old_to_new[static_cast<std::size_t>(p.dfa.step(new_to_old[static_cast<std::size_t>(s)], a))];
    ReachableResult r;
    r.automaton = PointedDfa{Dfa(p.dfa.alphabet, n, std::move(table)), 0};
    r.old_to_new = std::move(old_to_new);
    r.new_to_old = std::move(new_to_old);
    return r;
}

inline bool is_reachable(const PointedDfa& p) {
    return reachable_part(p).automaton.dfa.state_count == p.dfa.state_count;
}

/// Accepted words of length <= maxlen from `start`, in shortlex order.
inline std::vector<Word> language_upto(const Dfa& dfa, int start, const std::vector<int>& accepting,
                                       int maxlen) {
    std::vector<Word> out;
    auto acc = [&](int s) { return std::binary_search(accepting.begin(), accepting.end(), s); };
    // walk the prefix tree keeping the current state per node
    std::vector<std::pair<Word, int>> level{{Word{}, start}};
    if (acc(start))
        out.emplace_back();
    for (int len = 1; len <= maxlen; ++len) {
        std::vector<std::pair<Word, int>> next;
        next.reserve(level.size() * static_cast<std::size_t>(dfa.alphabet.size()));
        for (const auto& [w, s] : level)
            for (int a = 0; a < dfa.alphabet.size(); ++a) {
                int t = dfa.step(s, a);
                next.emplace_back(w.appended(a), t);
                if (acc(t))
                    out.push_back(next.back().first);
            }
        level = std::move(next);
    }
    return out;
}

inline std::vector<Word> language_upto(const AcceptingDfa& a, int start, int maxlen) {
    return language_upto(a.dfa, start, a.accepting, maxlen);
}

/// Bounded language equality via a shared walk of the prefix tree; agrees
/// with comparing language_upto on both sides at the same bound.
inline bool bounded_languages_equal(const Dfa& da, int sa, const std::vector<int>& acca,
                                    const Dfa& db, int sb, const std::vector<int>& accb, int bound) {
    auto in_a = [&](int s) { return std::binary_search(acca.begin(), acca.end(), s); };
    auto in_b = [&](int s) { return std::binary_search(accb.begin(), accb.end(), s); };
    if (in_a(sa) != in_b(sb))
        return false;
    const int asize = da.alphabet.size();
    std::vector<std::pair<int, int>> level{{sa, sb}};
    for (int len = 1; len <= bound; ++len) {
        std::vector<std::pair<int, int>> next;
        next.reserve(level.size() * static_cast<std::size_t>(asize));
        for (auto [x, y] : level)
            for (int a = 0; a < asize; ++a) {
                int x2 = da.step(x, a);
                int y2 = db.step(y, a);
                if (in_a(x2) != in_b(y2))
                    return false;
                next.emplace_back(x2, y2);
            }
        // identical pairs have identical subtrees
        std::sort(next.begin(), next.end());
        next.erase(std::unique(next.begin(), next.end()), next.end());
        level = std::move(next);
    }
    return true;
}

/// Exact language equality of two states (pair reachability; acceptance must
/// agree on every reachable pair).
inline bool languages_equal_exact(const Dfa& da, int sa, const std::vector<int>& acca,
                                  const Dfa& db, int sb, const std::vector<int>& accb) {
    if (da.alphabet != db.alphabet)
        throw Error(ErrorKind::alphabet_mismatch, "language comparison across alphabets");
    auto in_a = [&](int s) { return std::binary_search(acca.begin(), acca.end(), s); };
    auto in_b = [&](int s) { return std::binary_search(accb.begin(), accb.end(), s); };
    const int asize = da.alphabet.size();
    const std::size_t nb = static_cast<std::size_t>(db.state_count);
    if (static_cast<std::size_t>(da.state_count) * nb > (static_cast<std::size_t>(1) << 26))
        throw Error(ErrorKind::size_guard, "languages_equal_exact: pair space too large");
    std::vector<char> seen(static_cast<std::size_t>(da.state_count) * nb, 0);
    std::vector<std::pair<int, int>> queue{{sa, sb}};
    seen[static_cast<std::size_t>(sa) * nb + static_cast<std::size_t>(sb)] = 1;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        auto [x, y] = queue[head];
        if (in_a(x) != in_b(y))
            return false;
        for (int a = 0; a < asize; ++a) {
            int x2 = da.step(x, a);
            int y2 = db.step(y, a);
            std::size_t idx = static_cast<std::size_t>(x2) * nb + static_cast<std::size_t>(y2);
            if (!seen[idx]) {
                seen[idx] = 1;
                queue.emplace_back(x2, y2);
            }
        }
    }
    return true;
}

/// Morphisms of pointed automata are unique when they exist (thinness), so
/// propagating along the reachability tree and re-checking every edge either
/// finds the morphism or proves there is none.
inline std::optional<std::vector<int>> unique_morphism(const PointedDfa& src, const PointedDfa& dst) {
    if (src.dfa.alphabet != dst.dfa.alphabet)
        throw Error(ErrorKind::alphabet_mismatch, "unique_morphism across alphabets");
    if (!is_reachable(src))
        throw Error(ErrorKind::contract, "unique_morphism: source automaton must be reachable");
    const int asize = src.dfa.alphabet.size();
    std::vector<int> f(static_cast<std::size_t>(src.dfa.state_count), -1);
    std::vector<int> order;
    f[static_cast<std::size_t>(src.initial)] = dst.initial;
    order.push_back(src.initial);
    for (std::size_t head = 0; head < order.size(); ++head) {
        int s = order[head];
        for (int a = 0; a < asize; ++a) {
            int t = src.dfa.step(s, a);
            int image = dst.dfa.step(f[static_cast<std::size_t>(s)], a);
            if (f[static_cast<std::size_t>(t)] < 0) {
                f[static_cast<std::size_t>(t)] = image;
                order.push_back(t);
            } else if (f[static_cast<std::size_t>(t)] != image) {
                return std::nullopt;
            }
        }
    }
    return f;
}

inline bool is_morphism(const PointedDfa& src, const PointedDfa& dst, const std::vector<int>& f) {
    if (f.size() != static_cast<std::size_t>(src.dfa.state_count))
        return false;
    if (f[static_cast<std::size_t>(src.initial)] != dst.initial)
        return false;
    for (int s = 0; s < src.dfa.state_count; ++s)
        for (int a = 0; a < src.dfa.alphabet.size(); ++a)
            if (f[static_cast<std::size_t>(src.dfa.step(s, a))] != dst.dfa.step(f[static_cast<std::size_t>(s)], a))
                return false;
    return true;
}

/// Coarsest partition refining acceptance and closed under every letter's
/// successor map (Moore refinement); classes coincide with bisimilarity.
inline Partition bisimilarity_partition(const AcceptingDfa& a) {
    const int n = a.dfa.state_count;
    const int asize = a.dfa.alphabet.size();
    std::vector<int> cls(static_cast<std::size_t>(n));
    for (int s = 0; s < n; ++s)
        cls[static_cast<std::size_t>(s)] = a.is_accepting(s) ? 1 : 0;
    Partition part = Partition::from_class_of(cls);
    for (;;) {
        std::map<std::vector<int>, int> sig_to_class;
        std::vector<int> next(static_cast<std::size_t>(n));
        for (int s = 0; s < n; ++s) {
            std::vector<int> sig;
            sig.reserve(static_cast<std::size_t>(asize) + 1);
            sig.push_back(part.class_of[static_cast<std::size_t>(s)]);
            for (int x = 0; x < asize; ++x)
                sig.push_back(part.class_of[static_cast<std::size_t>(a.dfa.step(s, x))]);
            auto it = sig_to_class.find(sig);
            if (it == sig_to_class.end())
                it = sig_to_class.emplace(sig, static_cast<int>(sig_to_class.size())).first;
            next[static_cast<std::size_t>(s)] = it->second;
        }
        Partition refined = Partition::from_class_of(next);
        if (refined.class_count == part.class_count)
            return refined;
        part = std::move(refined);
    }
}

struct ProductResult {
    PointedDfa automaton;
    std::vector<std::vector<int>> state_tuples;
};

/// Componentwise product of pointed automata, restricted to the part
/// reachable from the tuple of initial states. The empty product is the
/// one-state automaton.
inline ProductResult product_pointed(const Alphabet& alphabet, const std::vector<PointedDfa>& ps) {
    for (const auto& p : ps)
        if (p.dfa.alphabet != alphabet)
            throw Error(ErrorKind::alphabet_mismatch, "product across alphabets");
    const int asize = alphabet.size();
    ProductResult r;
    if (ps.empty()) {
        std::vector<int> table(static_cast<std::size_t>(asize), 0);
        r.automaton = PointedDfa{Dfa(alphabet, 1, std::move(table)), 0};
        r.state_tuples = {{}};
        return r;
    }
    std::vector<int> init;
    for (const auto& p : ps)
        init.push_back(p.initial);
    std::map<std::vector<int>, int> index;
    std::vector<std::vector<int>> tuples{init};
    index[init] = 0;
    std::vector<int> table;
    for (std::size_t head = 0; head < tuples.size(); ++head) {
        std::vector<int> cur = tuples[head];
        for (int a = 0; a < asize; ++a) {
            std::vector<int> nxt(cur.size());
            for (std::size_t i = 0; i < ps.size(); ++i)
                nxt[i] = ps[i].dfa.step(cur[i], a);
            auto it = index.find(nxt);
            if (it == index.end()) {
                it = index.emplace(nxt, static_cast<int>(tuples.size())).first;
                tuples.push_back(nxt);
            }
            table.push_back(it->second);
        }
    }
    r.automaton = PointedDfa{Dfa(alphabet, static_cast<int>(tuples.size()), std::move(table)), 0};
    r.state_tuples = std::move(tuples);
    return r;
}

} // namespace aut

#endif
