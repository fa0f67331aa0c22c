#ifndef AUT_LASSO_HPP
#define AUT_LASSO_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <tuple>
#include <vector>

#include "aut/congruence.hpp"
#include "aut/equations.hpp"

namespace aut {

/// A pair (spoke, loop) with nonempty loop, standing for the ultimately
/// periodic word spoke . loop^omega.
struct Lasso {
    Word spoke;
    Word loop;

    Lasso() = default;
    Lasso(Word u, Word v) : spoke(std::move(u)), loop(std::move(v)) {
        if (loop.empty())
            throw Error(ErrorKind::contract, "lasso loop must be nonempty");
    }

    bool operator==(const Lasso&) const = default;
};

/// Canonical order: total length, then spoke length, then spoke, then loop.
inline bool lasso_less(const Lasso& a, const Lasso& b) {
    int ta = a.spoke.size() + a.loop.size();
    int tb = b.spoke.size() + b.loop.size();
    if (ta != tb)
        return ta < tb;
    if (a.spoke.size() != b.spoke.size())
        return a.spoke.size() < b.spoke.size();
    if (a.spoke != b.spoke)
        return lex_less(a.spoke, b.spoke);
    return lex_less(a.loop, b.loop);
}

inline std::vector<Lasso> enumerate_lassos(int alphabet_size, int max_spoke, int max_loop) {
    std::vector<Lasso> out;
    std::vector<std::vector<Word>> by_len(static_cast<std::size_t>(std::max(max_spoke, max_loop)) + 1);
    for (const Word& w : words_upto(alphabet_size, std::max(max_spoke, max_loop)))
        by_len[static_cast<std::size_t>(w.size())].push_back(w);
    for (int total = 1; total <= max_spoke + max_loop; ++total)
        for (int slen = 0; slen <= std::min(max_spoke, total - 1); ++slen) {
            int llen = total - slen;
            if (llen < 1 || llen > max_loop)
                continue;
            for (const Word& u : by_len[static_cast<std::size_t>(slen)])
                for (const Word& v : by_len[static_cast<std::size_t>(llen)])
                    out.emplace_back(u, v);
        }
    return out;
}

/// Two-sorted automaton: delta1 acts on the spoke sort, delta2 enters the
/// loop sort on the first loop letter, delta3 continues inside it.
struct LassoAutomaton {
    Alphabet alphabet;
    int x1_count = 0;
    int x2_count = 0;
    std::vector<int> delta1; // x1 * |alphabet| + symbol -> x1
    std::vector<int> delta2; // x1 * |alphabet| + symbol -> x2
    std::vector<int> delta3; // x2 * |alphabet| + symbol -> x2
    std::optional<int> initial;                 // in X1
    std::optional<std::vector<int>> accepting;  // sorted, in X2

    LassoAutomaton() = default;
    LassoAutomaton(Alphabet alpha, int n1, int n2, std::vector<int> d1, std::vector<int> d2,
                   std::vector<int> d3)
        : alphabet(std::move(alpha)), x1_count(n1), x2_count(n2), delta1(std::move(d1)),
          delta2(std::move(d2)), delta3(std::move(d3)) {
        if (x1_count <= 0 || x2_count <= 0)
            throw Error(ErrorKind::contract, "lasso automaton needs nonempty sorts");
        std::size_t a = static_cast<std::size_t>(alphabet.size());
        if (delta1.size() != static_cast<std::size_t>(x1_count) * a ||
            delta2.size() != static_cast<std::size_t>(x1_count) * a ||
            delta3.size() != static_cast<std::size_t>(x2_count) * a)
            throw Error(ErrorKind::contract, "lasso transition tables are not total");
        for (int t : delta1)
            if (t < 0 || t >= x1_count)
                throw Error(ErrorKind::contract, "delta1 target out of range");
        for (int t : delta2)
            if (t < 0 || t >= x2_count)
                throw Error(ErrorKind::contract, "delta2 target out of range");
        for (int t : delta3)
            if (t < 0 || t >= x2_count)
                throw Error(ErrorKind::contract, "delta3 target out of range");
    }

    int d1(int x, int a) const { return delta1[static_cast<std::size_t>(x) * static_cast<std::size_t>(alphabet.size()) + static_cast<std::size_t>(a)]; }
    int d2(int x, int a) const { return delta2[static_cast<std::size_t>(x) * static_cast<std::size_t>(alphabet.size()) + static_cast<std::size_t>(a)]; }
    int d3(int y, int a) const { return delta3[static_cast<std::size_t>(y) * static_cast<std::size_t>(alphabet.size()) + static_cast<std::size_t>(a)]; }

    int run_spoke(int x, const Word& w) const {
        for (int a : w.letters)
            x = d1(x, a);
        return x;
    }
    int run_d3(int y, const Word& w) const {
        for (int a : w.letters)
            y = d3(y, a);
        return y;
    }

    bool is_accepting(int y) const {
        return accepting && std::binary_search(accepting->begin(), accepting->end(), y);
    }

    Dfa spoke_dfa() const { return Dfa(alphabet, x1_count, delta1); }
    Dfa loop_dfa() const { return Dfa(alphabet, x2_count, delta3); }
};

inline int run_lasso(const LassoAutomaton& la, int x, const Lasso& l) {
    if (l.loop.empty())
        throw Error(ErrorKind::contract, "run_lasso: empty loop");
    x = la.run_spoke(x, l.spoke);
    int y = la.d2(x, l.loop.letters[0]);
    for (std::size_t i = 1; i < l.loop.letters.size(); ++i)
        y = la.d3(y, l.loop.letters[i]);
    return y;
}

inline bool lasso_accepts(const LassoAutomaton& la, const Lasso& l) {
    if (!la.initial || !la.accepting)
        throw Error(ErrorKind::contract, "lasso_accepts: automaton must be pointed and accepting");
    return la.is_accepting(run_lasso(la, *la.initial, l));
}

inline std::vector<Lasso> lasso_language_upto(const LassoAutomaton& la, int x, int max_spoke,
                                              int max_loop) {
    if (!la.accepting)
        throw Error(ErrorKind::contract, "lasso_language_upto: no accepting set");
    std::vector<Lasso> out;
    for (const Lasso& l : enumerate_lassos(la.alphabet.size(), max_spoke, max_loop))
        if (la.is_accepting(run_lasso(la, x, l)))
            out.push_back(l);
    return out;
}

struct LassoReachResult {
    LassoAutomaton automaton;
    std::vector<int> x1_old_to_new, x1_new_to_old;
    std::vector<int> x2_old_to_new, x2_new_to_old;
    std::vector<Word> x1_rep;   // BFS spoke words
    std::vector<Lasso> x2_rep;  // BFS lassos
};

inline LassoReachResult lasso_reachable_part(const LassoAutomaton& la) {
    if (!la.initial)
        throw Error(ErrorKind::contract, "lasso_reachable_part: no initial state");
    const int asize = la.alphabet.size();
    LassoReachResult r;
    r.x1_old_to_new.assign(static_cast<std::size_t>(la.x1_count), -1);
    r.x2_old_to_new.assign(static_cast<std::size_t>(la.x2_count), -1);

    r.x1_old_to_new[static_cast<std::size_t>(*la.initial)] = 0;
    r.x1_new_to_old.push_back(*la.initial);
    r.x1_rep.emplace_back();
    for (std::size_t head = 0; head < r.x1_new_to_old.size(); ++head) {
        int x = r.x1_new_to_old[head];
        for (int a = 0; a < asize; ++a) {
            int t = la.d1(x, a);
            if (r.x1_old_to_new[static_cast<std::size_t>(t)] < 0) {
                r.x1_old_to_new[static_cast<std::size_t>(t)] = static_cast<int>(r.x1_new_to_old.size());
                r.x1_new_to_old.push_back(t);
                r.x1_rep.push_back(r.x1_rep[head].appended(a));
            }
        }
    }
    for (std::size_t i = 0; i < r.x1_new_to_old.size(); ++i) {
        int x = r.x1_new_to_old[i];
        for (int a = 0; a < asize; ++a) {
            int y = la.d2(x, a);
            if (r.x2_old_to_new[static_cast<std::size_t>(y)] < 0) {
                r.x2_old_to_new[static_cast<std::size_t>(y)] = static_cast<int>(r.x2_new_to_old.size());
                r.x2_new_to_old.push_back(y);
                r.x2_rep.emplace_back(r.x1_rep[i], Word{{a}});
            }
        }
    }
    for (std::size_t head = 0; head < r.x2_new_to_old.size(); ++head) {
        int y = r.x2_new_to_old[head];
        for (int a = 0; a < asize; ++a) {
            int t = la.d3(y, a);
            if (r.x2_old_to_new[static_cast<std::size_t>(t)] < 0) {
                r.x2_old_to_new[static_cast<std::size_t>(t)] = static_cast<int>(r.x2_new_to_old.size());
                r.x2_new_to_old.push_back(t);
                r.x2_rep.emplace_back(r.x2_rep[head].spoke, r.x2_rep[head].loop.appended(a));
            }
        }
    }

    int n1 = static_cast<int>(r.x1_new_to_old.size());
    int n2 = static_cast<int>(r.x2_new_to_old.size());
    std::vector<int> d1(static_cast<std::size_t>(n1) * static_cast<std::size_t>(asize));
    std::vector<int> d2(static_cast<std::size_t>(n1) * static_cast<std::size_t>(asize));
    std::vector<int> d3(static_cast<std::size_t>(n2) * static_cast<std::size_t>(asize));
    for (int x = 0; x < n1; ++x)
        for (int a = 0; a < asize; ++a) {
            d1[static_cast<std::size_t>(x) * static_cast<std::size_t>(asize) + static_cast<std::size_t>(a)] =
                r.x1_old_to_new[static_cast<std::size_t>(la.d1(r.x1_new_to_old[static_cast<std::size_t>(x)], a))];
            d2[static_cast<std::size_t>(x) * static_cast<std::size_t>(asize) + static_cast<std::size_t>(a)] =
                r.x2_old_to_new[static_cast<std::size_t>(la.d2(r.x1_new_to_old[static_cast<std::size_t>(x)], a))];
        }
    for (int y = 0; y < n2; ++y)
        for (int a = 0; a < asize; ++a)
            d3[static_cast<std::size_t>(y) * static_cast<std::size_t>(asize) + static_cast<std::size_t>(a)] =
                r.x2_old_to_new[static_cast<std::size_t>(la.d3(r.x2_new_to_old[static_cast<std::size_t>(y)], a))];
    r.automaton = LassoAutomaton(la.alphabet, n1, n2, std::move(d1), std::move(d2), std::move(d3));
    r.automaton.initial = 0;
    if (la.accepting) {
        std::vector<int> acc;
        for (int y = 0; y < n2; ++y)
            if (la.is_accepting(r.x2_new_to_old[static_cast<std::size_t>(y)]))
                acc.push_back(y);
        r.automaton.accepting = std::move(acc);
    }
    return r;
}

inline bool lasso_is_reachable(const LassoAutomaton& la) {
    LassoReachResult r = lasso_reachable_part(la);
    return r.automaton.x1_count == la.x1_count && r.automaton.x2_count == la.x2_count;
}

/// Finite presentation of a congruence on (words, lassos): a word congruence
/// plus lasso classes with their step and left-extension tables.
struct LassoCongruenceRep {
    CongruenceRep word_part;
    int lasso_class_count = 0;
    std::vector<Lasso> lasso_representative;
    std::vector<int> sigma2;   // word class * |alphabet| + symbol -> lasso class
    std::vector<int> sigma3;   // lasso class * |alphabet| + symbol -> lasso class
    std::vector<int> left_ext; // symbol * lasso_class_count + lasso class
    std::optional<std::vector<int>> accepted_lasso_classes;

    int s2(int q, int a) const { return sigma2[static_cast<std::size_t>(q) * static_cast<std::size_t>(word_part.alphabet.size()) + static_cast<std::size_t>(a)]; }
    int s3(int p, int a) const { return sigma3[static_cast<std::size_t>(p) * static_cast<std::size_t>(word_part.alphabet.size()) + static_cast<std::size_t>(a)]; }
    int lext(int a, int p) const { return left_ext[static_cast<std::size_t>(a) * static_cast<std::size_t>(lasso_class_count) + static_cast<std::size_t>(p)]; }

    int class_of_lasso(const Lasso& l) const {
        int q = word_part.class_of_word(l.spoke);
        int p = s2(q, l.loop.letters[0]);
        for (std::size_t i = 1; i < l.loop.letters.size(); ++i)
            p = s3(p, l.loop.letters[i]);
        return p;
    }
};

/// Kernel of the lasso behaviors, quantified over every spoke-sort state:
/// classes are the distinct maps X1 -> X2 of the form (loop behavior after
/// word behavior). Also the largest set of equations the automaton satisfies.
inline LassoCongruenceRep eq_set(const LassoAutomaton& la) {
    const int asize = la.alphabet.size();
    const int n1 = la.x1_count;

    LassoCongruenceRep c;
    c.word_part = kernel_congruence(la.spoke_dfa());

    // distinct word behaviors as functions, aligned with word classes
    std::vector<std::vector<int>> word_fn(static_cast<std::size_t>(c.word_part.class_count));
    for (int q = 0; q < c.word_part.class_count; ++q) {
        std::vector<int> f(static_cast<std::size_t>(n1));
        for (int x = 0; x < n1; ++x)
            f[static_cast<std::size_t>(x)] =
                la.run_spoke(x, c.word_part.representative[static_cast<std::size_t>(q)]);
        word_fn[static_cast<std::size_t>(q)] = std::move(f);
    }

    // loop behaviors X1 -> X2, discovered in shortlex order of loop words
    std::map<std::vector<int>, int> loop_index;
    std::vector<std::vector<int>> loop_fn;
    std::vector<Word> loop_rep;
    for (int a = 0; a < asize; ++a) {
        std::vector<int> g(static_cast<std::size_t>(n1));
        for (int x = 0; x < n1; ++x)
            g[static_cast<std::size_t>(x)] = la.d2(x, a);
        if (!loop_index.count(g)) {
            loop_index.emplace(g, static_cast<int>(loop_fn.size()));
            loop_fn.push_back(g);
            loop_rep.push_back(Word{{a}});
        }
    }
    for (std::size_t head = 0; head < loop_fn.size(); ++head) {
        std::vector<int> cur = loop_fn[head];
        for (int a = 0; a < asize; ++a) {
            std::vector<int> ext(static_cast<std::size_t>(n1));
            for (int x = 0; x < n1; ++x)
                ext[static_cast<std::size_t>(x)] = la.d3(cur[static_cast<std::size_t>(x)], a);
            if (!loop_index.count(ext)) {
                loop_index.emplace(ext, static_cast<int>(loop_fn.size()));
                loop_fn.push_back(ext);
                loop_rep.push_back(loop_rep[head].appended(a));
            }
        }
    }

    // lasso behaviors: every loop behavior after every word behavior
    std::map<std::vector<int>, int> h_index; // function -> provisional id
    std::vector<std::vector<int>> h_fn;
    std::vector<Lasso> h_rep;
    for (std::size_t gi = 0; gi < loop_fn.size(); ++gi)
        for (int q = 0; q < c.word_part.class_count; ++q) {
            std::vector<int> h(static_cast<std::size_t>(n1));
            for (int x = 0; x < n1; ++x)
                h[static_cast<std::size_t>(x)] =
                    loop_fn[gi][static_cast<std::size_t>(word_fn[static_cast<std::size_t>(q)][static_cast<std::size_t>(x)])];
            Lasso cand(c.word_part.representative[static_cast<std::size_t>(q)], loop_rep[gi]);
            auto it = h_index.find(h);
            if (it == h_index.end()) {
                h_index.emplace(h, static_cast<int>(h_fn.size()));
                h_fn.push_back(std::move(h));
                h_rep.push_back(cand);
            } else if (lasso_less(cand, h_rep[static_cast<std::size_t>(it->second)])) {
                h_rep[static_cast<std::size_t>(it->second)] = cand;
            }
        }

    // renumber lasso classes by canonical representative
    int k = static_cast<int>(h_fn.size());
    std::vector<int> order(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i)
        order[static_cast<std::size_t>(i)] = i;
    std::sort(order.begin(), order.end(), [&](int i, int j) {
        return lasso_less(h_rep[static_cast<std::size_t>(i)], h_rep[static_cast<std::size_t>(j)]);
    });
    std::vector<int> new_of_old(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i)
        new_of_old[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])] = i;
    auto class_of_fn = [&](const std::vector<int>& h) {
        return new_of_old[static_cast<std::size_t>(h_index.at(h))];
    };

    c.lasso_class_count = k;
    c.lasso_representative.resize(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i)
        c.lasso_representative[static_cast<std::size_t>(i)] = h_rep[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])];

    c.sigma2.resize(static_cast<std::size_t>(c.word_part.class_count) * static_cast<std::size_t>(asize));
    for (int q = 0; q < c.word_part.class_count; ++q)
        for (int a = 0; a < asize; ++a) {
            std::vector<int> h(static_cast<std::size_t>(n1));
            for (int x = 0; x < n1; ++x)
                h[static_cast<std::size_t>(x)] =
                    la.d2(word_fn[static_cast<std::size_t>(q)][static_cast<std::size_t>(x)], a);
            c.sigma2[static_cast<std::size_t>(q) * static_cast<std::size_t>(asize) + static_cast<std::size_t>(a)] =
                class_of_fn(h);
        }
    c.sigma3.resize(static_cast<std::size_t>(k) * static_cast<std::size_t>(asize));
    c.left_ext.resize(static_cast<std::size_t>(asize) * static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) {
        const std::vector<int>& h = h_fn[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])];
        for (int a = 0; a < asize; ++a) {
            std::vector<int> ext(static_cast<std::size_t>(n1));
            for (int x = 0; x < n1; ++x)
                ext[static_cast<std::size_t>(x)] = la.d3(h[static_cast<std::size_t>(x)], a);
            c.sigma3[static_cast<std::size_t>(i) * static_cast<std::size_t>(asize) + static_cast<std::size_t>(a)] =
                class_of_fn(ext);
            std::vector<int> lx(static_cast<std::size_t>(n1));
            for (int x = 0; x < n1; ++x)
                lx[static_cast<std::size_t>(x)] = h[static_cast<std::size_t>(la.d1(x, a))];
            c.left_ext[static_cast<std::size_t>(a) * static_cast<std::size_t>(k) + static_cast<std::size_t>(i)] =
                class_of_fn(lx);
        }
    }

    if (la.initial && la.accepting) {
        std::vector<int> acc;
        for (int i = 0; i < k; ++i) {
            const std::vector<int>& h = h_fn[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])];
            if (la.is_accepting(h[static_cast<std::size_t>(*la.initial)]))
                acc.push_back(i);
        }
        c.accepted_lasso_classes = std::move(acc);
    }
    return c;
}

inline LassoCongruenceRep lasso_transition(const LassoAutomaton& la) {
    if (!la.initial)
        throw Error(ErrorKind::contract, "lasso_transition: automaton must be pointed");
    if (!lasso_is_reachable(la))
        throw Error(ErrorKind::contract, "lasso_transition: automaton must be reachable");
    return eq_set(la);
}

inline LassoAutomaton lasso_machine(const LassoCongruenceRep& c) {
    LassoAutomaton la(c.word_part.alphabet, c.word_part.class_count, c.lasso_class_count,
                      c.word_part.right_step, c.sigma2, c.sigma3);
    la.initial = c.word_part.eps_class;
    if (c.accepted_lasso_classes)
        la.accepting = c.accepted_lasso_classes;
    return la;
}

struct LassoCounitResult {
    LassoCongruenceRep table;
    std::vector<int> map1; // word class -> X1
    std::vector<int> map2; // lasso class -> X2
};

inline LassoCounitResult lasso_counit(const LassoAutomaton& la) {
    LassoCounitResult r;
    r.table = lasso_transition(la);
    r.map1.resize(static_cast<std::size_t>(r.table.word_part.class_count));
    r.map2.resize(static_cast<std::size_t>(r.table.lasso_class_count));
    for (int q = 0; q < r.table.word_part.class_count; ++q)
        r.map1[static_cast<std::size_t>(q)] =
            la.run_spoke(*la.initial, r.table.word_part.representative[static_cast<std::size_t>(q)]);
    for (int p = 0; p < r.table.lasso_class_count; ++p)
        r.map2[static_cast<std::size_t>(p)] =
            run_lasso(la, *la.initial, r.table.lasso_representative[static_cast<std::size_t>(p)]);
    // morphism laws
    LassoAutomaton m = lasso_machine(r.table);
    if (r.map1[static_cast<std::size_t>(*m.initial)] != *la.initial)
        throw Error(ErrorKind::contract, "lasso_counit: initial state not preserved");
    for (int q = 0; q < m.x1_count; ++q)
        for (int a = 0; a < m.alphabet.size(); ++a) {
            if (r.map1[static_cast<std::size_t>(m.d1(q, a))] != la.d1(r.map1[static_cast<std::size_t>(q)], a))
                throw Error(ErrorKind::contract, "lasso_counit: delta1 square does not commute");
            if (r.map2[static_cast<std::size_t>(m.d2(q, a))] != la.d2(r.map1[static_cast<std::size_t>(q)], a))
                throw Error(ErrorKind::contract, "lasso_counit: delta2 square does not commute");
        }
    for (int p = 0; p < m.x2_count; ++p)
        for (int a = 0; a < m.alphabet.size(); ++a)
            if (r.map2[static_cast<std::size_t>(m.d3(p, a))] != la.d3(r.map2[static_cast<std::size_t>(p)], a))
                throw Error(ErrorKind::contract, "lasso_counit: delta3 square does not commute");
    return r;
}

/// True iff E is finer than or equal to D on both sorts (the class maps are
/// well-defined). Simultaneous walk over class pairs.
inline bool lasso_congruence_leq(const LassoCongruenceRep& e, const LassoCongruenceRep& d) {
    if (e.word_part.alphabet != d.word_part.alphabet)
        throw Error(ErrorKind::alphabet_mismatch, "lasso_congruence_leq across alphabets");
    if (!congruence_leq(e.word_part, d.word_part))
        return false;
    const int asize = e.word_part.alphabet.size();
    // word-pair map is functional; rebuild it
    std::vector<int> word_image(static_cast<std::size_t>(e.word_part.class_count), -1);
    std::vector<int> queue{e.word_part.eps_class};
    word_image[static_cast<std::size_t>(e.word_part.eps_class)] = d.word_part.eps_class;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        int qe = queue[head];
        for (int a = 0; a < asize; ++a) {
            int te = e.word_part.right(qe, a);
            if (word_image[static_cast<std::size_t>(te)] < 0) {
                word_image[static_cast<std::size_t>(te)] =
                    d.word_part.right(word_image[static_cast<std::size_t>(qe)], a);
                queue.push_back(te);
            }
        }
    }
    std::vector<int> lasso_image(static_cast<std::size_t>(e.lasso_class_count), -1);
    std::vector<int> lqueue;
    for (int qe = 0; qe < e.word_part.class_count; ++qe)
        for (int a = 0; a < asize; ++a) {
            int pe = e.s2(qe, a);
            int pd = d.s2(word_image[static_cast<std::size_t>(qe)], a);
            if (lasso_image[static_cast<std::size_t>(pe)] < 0) {
                lasso_image[static_cast<std::size_t>(pe)] = pd;
                lqueue.push_back(pe);
            } else if (lasso_image[static_cast<std::size_t>(pe)] != pd) {
                return false;
            }
        }
    for (std::size_t head = 0; head < lqueue.size(); ++head) {
        int pe = lqueue[head];
        for (int a = 0; a < asize; ++a) {
            int te = e.s3(pe, a);
            int td = d.s3(lasso_image[static_cast<std::size_t>(pe)], a);
            if (lasso_image[static_cast<std::size_t>(te)] < 0) {
                lasso_image[static_cast<std::size_t>(te)] = td;
                lqueue.push_back(te);
            } else if (lasso_image[static_cast<std::size_t>(te)] != td) {
                return false;
            }
        }
    }
    return true;
}

inline bool satisfies_equations(const LassoAutomaton& la, const LassoCongruenceRep& e) {
    if (la.alphabet != e.word_part.alphabet)
        throw Error(ErrorKind::alphabet_mismatch, "satisfies_equations across alphabets");
    return lasso_congruence_leq(e, eq_set(la));
}

/// Coarsest two-sorted partition: loop-sort classes refine acceptance and
/// close under delta3; spoke-sort classes close under delta1 and delta2.
inline std::pair<Partition, Partition> lasso_bisimilarity(const LassoAutomaton& la) {
    if (!la.accepting)
        throw Error(ErrorKind::contract, "lasso_bisimilarity: no accepting set");
    const int asize = la.alphabet.size();
    std::vector<int> c2(static_cast<std::size_t>(la.x2_count));
    for (int y = 0; y < la.x2_count; ++y)
        c2[static_cast<std::size_t>(y)] = la.is_accepting(y) ? 1 : 0;
    Partition p2 = Partition::from_class_of(c2);
    Partition p1 = Partition::from_class_of(std::vector<int>(static_cast<std::size_t>(la.x1_count), 0));
    for (;;) {
        std::map<std::vector<int>, int> sig2;
        std::vector<int> n2(static_cast<std::size_t>(la.x2_count));
        for (int y = 0; y < la.x2_count; ++y) {
            std::vector<int> sig{p2.class_of[static_cast<std::size_t>(y)]};
            for (int a = 0; a < asize; ++a)
                sig.push_back(p2.class_of[static_cast<std::size_t>(la.d3(y, a))]);
            auto it = sig2.find(sig);
            if (it == sig2.end())
                it = sig2.emplace(sig, static_cast<int>(sig2.size())).first;
            n2[static_cast<std::size_t>(y)] = it->second;
        }
        Partition r2 = Partition::from_class_of(n2);
        std::map<std::vector<int>, int> sig1;
        std::vector<int> n1(static_cast<std::size_t>(la.x1_count));
        for (int x = 0; x < la.x1_count; ++x) {
            std::vector<int> sig{p1.class_of[static_cast<std::size_t>(x)]};
            for (int a = 0; a < asize; ++a) {
                sig.push_back(p1.class_of[static_cast<std::size_t>(la.d1(x, a))]);
                sig.push_back(r2.class_of[static_cast<std::size_t>(la.d2(x, a))]);
            }
            auto it = sig1.find(sig);
            if (it == sig1.end())
                it = sig1.emplace(sig, static_cast<int>(sig1.size())).first;
            n1[static_cast<std::size_t>(x)] = it->second;
        }
        Partition r1 = Partition::from_class_of(n1);
        if (r1.class_count == p1.class_count && r2.class_count == p2.class_count)
            return {r1, r2};
        p1 = std::move(r1);
        p2 = std::move(r2);
    }
}

struct LassoMinimalResult {
    LassoAutomaton automaton;
    std::vector<int> x1_class_of, x2_class_of; // over the reachable part
    LassoReachResult reach;
};

/// Reachable part quotiented by observational equivalence on both sorts.
inline LassoMinimalResult lasso_minimal(const LassoAutomaton& la) {
    if (!la.initial || !la.accepting)
        throw Error(ErrorKind::contract, "lasso_minimal: automaton must be pointed and accepting");
    LassoMinimalResult r;
    r.reach = lasso_reachable_part(la);
    const LassoAutomaton& reach = r.reach.automaton;
    auto [p1, p2] = lasso_bisimilarity(reach);
    const int asize = la.alphabet.size();
    std::vector<int> d1(static_cast<std::size_t>(p1.class_count) * static_cast<std::size_t>(asize), -1);
    std::vector<int> d2(static_cast<std::size_t>(p1.class_count) * static_cast<std::size_t>(asize), -1);
    std::vector<int> d3(static_cast<std::size_t>(p2.class_count) * static_cast<std::size_t>(asize), -1);
    for (int x = 0; x < reach.x1_count; ++x)
        for (int a = 0; a < asize; ++a) {
            std::size_t idx = static_cast<std::size_t>(p1.class_of[static_cast<std::size_t>(x)]) * static_cast<std::size_t>(asize) + static_cast<std::size_t>(a);
            d1[idx] = p1.class_of[static_cast<std::size_t>(reach.d1(x, a))];
            d2[idx] = p2.class_of[static_cast<std::size_t>(reach.d2(x, a))];
        }
    for (int y = 0; y < reach.x2_count; ++y)
        for (int a = 0; a < asize; ++a)
            d3[static_cast<std::size_t>(p2.class_of[static_cast<std::size_t>(y)]) * static_cast<std::size_t>(asize) + static_cast<std::size_t>(a)] =
                p2.class_of[static_cast<std::size_t>(reach.d3(y, a))];
    r.automaton = LassoAutomaton(la.alphabet, p1.class_count, p2.class_count, std::move(d1),
                                 std::move(d2), std::move(d3));
    r.automaton.initial = p1.class_of[0];
    std::vector<int> acc;
    for (int y = 0; y < reach.x2_count; ++y)
        if (reach.is_accepting(y))
            acc.push_back(p2.class_of[static_cast<std::size_t>(y)]);
    std::sort(acc.begin(), acc.end());
    acc.erase(std::unique(acc.begin(), acc.end()), acc.end());
    r.automaton.accepting = std::move(acc);
    r.x1_class_of = p1.class_of;
    r.x2_class_of = p2.class_of;
    return r;
}

inline LassoCongruenceRep syntactic_congruence(const LassoAutomaton& la) {
    return eq_set(lasso_minimal(la).automaton);
}

struct MyhillNerodeResult {
    LassoAutomaton minimal;
    std::vector<Word> x1_rep;
    std::vector<Lasso> x2_rep;
};

inline MyhillNerodeResult myhill_nerode(const LassoAutomaton& la) {
    LassoMinimalResult min = lasso_minimal(la);
    LassoReachResult reach = lasso_reachable_part(min.automaton);
    MyhillNerodeResult r;
    r.minimal = min.automaton;
    r.x1_rep.resize(static_cast<std::size_t>(min.automaton.x1_count));
    r.x2_rep.resize(static_cast<std::size_t>(min.automaton.x2_count));
    for (int i = 0; i < min.automaton.x1_count; ++i)
        r.x1_rep[static_cast<std::size_t>(reach.x1_new_to_old[static_cast<std::size_t>(i)])] =
            reach.x1_rep[static_cast<std::size_t>(i)];
    for (int i = 0; i < min.automaton.x2_count; ++i)
        r.x2_rep[static_cast<std::size_t>(reach.x2_new_to_old[static_cast<std::size_t>(i)])] =
            reach.x2_rep[static_cast<std::size_t>(i)];
    return r;
}

struct LassoNucResult {
    LassoCongruenceRep table;
    LassoAutomaton automaton;
};

inline LassoNucResult lasso_nuc(const LassoAutomaton& la,
                                const std::optional<std::vector<int>>& acc = std::nullopt) {
    if (!la.initial)
        throw Error(ErrorKind::contract, "lasso_nuc: automaton must be pointed");
    LassoReachResult reach = lasso_reachable_part(la);
    LassoNucResult r;
    r.table = lasso_transition(reach.automaton);
    if (acc) {
        std::vector<int> lifted;
        for (int p = 0; p < r.table.lasso_class_count; ++p) {
            int target = run_lasso(la, *la.initial, r.table.lasso_representative[static_cast<std::size_t>(p)]);
            if (std::binary_search(acc->begin(), acc->end(), target))
                lifted.push_back(p);
        }
        r.table.accepted_lasso_classes = std::move(lifted);
    }
    r.automaton = lasso_machine(r.table);
    return r;
}

inline std::optional<std::pair<std::vector<int>, std::vector<int>>>
lasso_unique_morphism(const LassoAutomaton& src, const LassoAutomaton& dst) {
    if (src.alphabet != dst.alphabet)
        throw Error(ErrorKind::alphabet_mismatch, "lasso_unique_morphism across alphabets");
    if (!src.initial || !dst.initial)
        throw Error(ErrorKind::contract, "lasso_unique_morphism: automata must be pointed");
    if (!lasso_is_reachable(src))
        throw Error(ErrorKind::contract, "lasso_unique_morphism: source must be reachable");
    const int asize = src.alphabet.size();
    std::vector<int> f1(static_cast<std::size_t>(src.x1_count), -1);
    std::vector<int> f2(static_cast<std::size_t>(src.x2_count), -1);
    std::vector<int> q1{*src.initial};
    f1[static_cast<std::size_t>(*src.initial)] = *dst.initial;
    for (std::size_t head = 0; head < q1.size(); ++head) {
        int x = q1[head];
        for (int a = 0; a < asize; ++a) {
            int t = src.d1(x, a);
            int img = dst.d1(f1[static_cast<std::size_t>(x)], a);
            if (f1[static_cast<std::size_t>(t)] < 0) {
                f1[static_cast<std::size_t>(t)] = img;
                q1.push_back(t);
            } else if (f1[static_cast<std::size_t>(t)] != img) {
                return std::nullopt;
            }
        }
    }
    std::vector<int> q2;
    for (int x = 0; x < src.x1_count; ++x)
        for (int a = 0; a < asize; ++a) {
            int y = src.d2(x, a);
            int img = dst.d2(f1[static_cast<std::size_t>(x)], a);
            if (f2[static_cast<std::size_t>(y)] < 0) {
                f2[static_cast<std::size_t>(y)] = img;
                q2.push_back(y);
            } else if (f2[static_cast<std::size_t>(y)] != img) {
                return std::nullopt;
            }
        }
    for (std::size_t head = 0; head < q2.size(); ++head) {
        int y = q2[head];
        for (int a = 0; a < asize; ++a) {
            int t = src.d3(y, a);
            int img = dst.d3(f2[static_cast<std::size_t>(y)], a);
            if (f2[static_cast<std::size_t>(t)] < 0) {
                f2[static_cast<std::size_t>(t)] = img;
                q2.push_back(t);
            } else if (f2[static_cast<std::size_t>(t)] != img) {
                return std::nullopt;
            }
        }
    }
    return std::make_pair(std::move(f1), std::move(f2));
}

/// Exact lasso-language equality of spoke-sort states across two automata:
/// all three transition squares explored over reachable pairs, acceptance
/// compared on the loop sort.
inline bool lasso_languages_equal_exact(const LassoAutomaton& a, int xa, const LassoAutomaton& b,
                                        int xb) {
    if (!a.accepting || !b.accepting)
        throw Error(ErrorKind::contract, "lasso language comparison needs accepting sets");
    const int asize = a.alphabet.size();
    std::map<std::pair<int, int>, bool> seen1, seen2;
    std::vector<std::pair<int, int>> q1{{xa, xb}}, q2;
    seen1[{xa, xb}] = true;
    auto push2 = [&](int ya, int yb) {
        if (!seen2.count({ya, yb})) {
            seen2[{ya, yb}] = true;
            q2.emplace_back(ya, yb);
        }
    };
    for (std::size_t head = 0; head < q1.size(); ++head) {
        auto [x, y] = q1[head];
        for (int s = 0; s < asize; ++s) {
            std::pair<int, int> t{a.d1(x, s), b.d1(y, s)};
            if (!seen1.count(t)) {
                seen1[t] = true;
                q1.push_back(t);
            }
            push2(a.d2(x, s), b.d2(y, s));
        }
    }
    for (std::size_t head = 0; head < q2.size(); ++head) {
        auto [ya, yb] = q2[head];
        if (a.is_accepting(ya) != b.is_accepting(yb))
            return false;
        for (int s = 0; s < asize; ++s)
            push2(a.d3(ya, s), b.d3(yb, s));
    }
    return true;
}

/// Membership test against a family of behaviors: every spoke-sort state's
/// lasso language must appear among the family's spoke-sort states.
inline bool satisfies_coequations(const LassoAutomaton& la, const LassoAutomaton& family) {
    if (la.alphabet != family.alphabet)
        throw Error(ErrorKind::alphabet_mismatch, "satisfies_coequations across alphabets");
    if (!la.accepting || !family.accepting)
        throw Error(ErrorKind::contract, "satisfies_coequations: accepting sets required");
    for (int x = 0; x < la.x1_count; ++x) {
        bool found = false;
        for (int d = 0; d < family.x1_count && !found; ++d)
            found = lasso_languages_equal_exact(la, x, family, d);
        if (!found)
            return false;
    }
    return true;
}

struct LassoLift {
    LassoAutomaton automaton; // pointed at the accepting set
    std::vector<std::uint64_t> y1_masks; // over X2
    std::vector<std::uint64_t> y2_masks; // over X1
};

/// Sort-swapped inverse-image automaton: the loop sort of the input drives
/// the spoke sort of the output and vice versa.
inline LassoLift lasso_powerset_lift(const LassoAutomaton& la) {
    if (!la.accepting)
        throw Error(ErrorKind::contract, "lasso_powerset_lift: no accepting set");
    if (la.x1_count > 62 || la.x2_count > 62)
        throw Error(ErrorKind::size_guard, "lasso_powerset_lift: sorts too large");
    const int asize = la.alphabet.size();
    std::uint64_t cmask = 0;
    for (int y : *la.accepting)
        cmask |= static_cast<std::uint64_t>(1) << y;

    auto tau1 = [&](std::uint64_t u, int a) {
        std::uint64_t out = 0;
        for (int y = 0; y < la.x2_count; ++y)
            if ((u >> la.d3(y, a)) & 1)
                out |= static_cast<std::uint64_t>(1) << y;
        return out;
    };
    auto tau2 = [&](std::uint64_t u, int a) {
        std::uint64_t out = 0;
        for (int x = 0; x < la.x1_count; ++x)
            if ((u >> la.d2(x, a)) & 1)
                out |= static_cast<std::uint64_t>(1) << x;
        return out;
    };
    auto tau3 = [&](std::uint64_t v, int a) {
        std::uint64_t out = 0;
        for (int x = 0; x < la.x1_count; ++x)
            if ((v >> la.d1(x, a)) & 1)
                out |= static_cast<std::uint64_t>(1) << x;
        return out;
    };

    LassoLift r;
    std::map<std::uint64_t, int> idx1, idx2;
    idx1[cmask] = 0;
    r.y1_masks.push_back(cmask);
    for (std::size_t head = 0; head < r.y1_masks.size(); ++head) {
        std::uint64_t u = r.y1_masks[head];
        for (int a = 0; a < asize; ++a) {
            std::uint64_t t = tau1(u, a);
            if (!idx1.count(t)) {
                idx1[t] = static_cast<int>(r.y1_masks.size());
                r.y1_masks.push_back(t);
            }
        }
    }
    for (std::size_t i = 0; i < r.y1_masks.size(); ++i)
        for (int a = 0; a < asize; ++a) {
            std::uint64_t v = tau2(r.y1_masks[i], a);
            if (!idx2.count(v)) {
                idx2[v] = static_cast<int>(r.y2_masks.size());
                r.y2_masks.push_back(v);
            }
        }
    for (std::size_t head = 0; head < r.y2_masks.size(); ++head) {
        std::uint64_t v = r.y2_masks[head];
        for (int a = 0; a < asize; ++a) {
            std::uint64_t t = tau3(v, a);
            if (!idx2.count(t)) {
                idx2[t] = static_cast<int>(r.y2_masks.size());
                r.y2_masks.push_back(t);
            }
        }
    }

    int n1 = static_cast<int>(r.y1_masks.size());
    int n2 = static_cast<int>(r.y2_masks.size());
    std::vector<int> d1(static_cast<std::size_t>(n1) * static_cast<std::size_t>(asize));
    std::vector<int> d2(static_cast<std::size_t>(n1) * static_cast<std::size_t>(asize));
    std::vector<int> d3(static_cast<std::size_t>(n2) * static_cast<std::size_t>(asize));
    for (int i = 0; i < n1; ++i)
        for (int a = 0; a < asize; ++a) {
            d1[static_cast<std::size_t>(i) * static_cast<std::size_t>(asize) + static_cast<std::size_t>(a)] =
                idx1.at(tau1(r.y1_masks[static_cast<std::size_t>(i)], a));
            d2[static_cast<std::size_t>(i) * static_cast<std::size_t>(asize) + static_cast<std::size_t>(a)] =
                idx2.at(tau2(r.y1_masks[static_cast<std::size_t>(i)], a));
        }
    for (int i = 0; i < n2; ++i)
        for (int a = 0; a < asize; ++a)
            d3[static_cast<std::size_t>(i) * static_cast<std::size_t>(asize) + static_cast<std::size_t>(a)] =
                idx2.at(tau3(r.y2_masks[static_cast<std::size_t>(i)], a));
    r.automaton = LassoAutomaton(la.alphabet, n1, n2, std::move(d1), std::move(d2), std::move(d3));
    r.automaton.initial = 0;
    return r;
}

struct LassoMuplResult {
    LassoCongruenceRep table; // congruence of the lifted automaton
    LassoAutomaton automaton; // spoke sort: masks over lasso classes; loop sort: masks over word classes
};

inline LassoMuplResult lasso_mupl(const LassoAutomaton& la, int max_classes = k_default_class_bound) {
    if (!la.accepting)
        throw Error(ErrorKind::contract, "lasso_mupl: no accepting set");
    LassoLift lift = lasso_powerset_lift(la);
    LassoMuplResult r;
    r.table = lasso_transition(lift.automaton);
    const int wk = r.table.word_part.class_count;
    const int lk = r.table.lasso_class_count;
    if (wk > max_classes || lk > max_classes || wk > 24 || lk > 24)
        throw Error(ErrorKind::size_guard, "lasso_mupl: class count exceeds bound");
    const int asize = la.alphabet.size();
    const int n1 = 1 << lk; // subsets of lasso classes
    const int n2 = 1 << wk; // subsets of word classes
    std::vector<int> d1(static_cast<std::size_t>(n1) * static_cast<std::size_t>(asize));
    std::vector<int> d2(static_cast<std::size_t>(n1) * static_cast<std::size_t>(asize));
    std::vector<int> d3(static_cast<std::size_t>(n2) * static_cast<std::size_t>(asize));
    for (int pm = 0; pm < n1; ++pm)
        for (int a = 0; a < asize; ++a) {
            int u1 = 0, u2 = 0;
            for (int p = 0; p < lk; ++p)
                if ((pm >> r.table.s3(p, a)) & 1)
                    u1 |= 1 << p;
            for (int q = 0; q < wk; ++q)
                if ((pm >> r.table.s2(q, a)) & 1)
                    u2 |= 1 << q;
            d1[static_cast<std::size_t>(pm) * static_cast<std::size_t>(asize) + static_cast<std::size_t>(a)] = u1;
            d2[static_cast<std::size_t>(pm) * static_cast<std::size_t>(asize) + static_cast<std::size_t>(a)] = u2;
        }
    for (int qm = 0; qm < n2; ++qm)
        for (int a = 0; a < asize; ++a) {
            int u = 0;
            for (int q = 0; q < wk; ++q)
                if ((qm >> r.table.word_part.right(q, a)) & 1)
                    u |= 1 << q;
            d3[static_cast<std::size_t>(qm) * static_cast<std::size_t>(asize) + static_cast<std::size_t>(a)] = u;
        }
    r.automaton = LassoAutomaton(la.alphabet, n1, n2, std::move(d1), std::move(d2), std::move(d3));
    std::vector<int> acc;
    for (int qm = 0; qm < n2; ++qm)
        if ((qm >> r.table.word_part.eps_class) & 1)
            acc.push_back(qm);
    r.automaton.accepting = std::move(acc);
    if (la.initial) {
        // eta1(x) = { [(u, a v)] | running (v^r, a u^r) from x is accepted }
        int mask = 0;
        for (int p = 0; p < lk; ++p) {
            const Lasso& rep = r.table.lasso_representative[static_cast<std::size_t>(p)];
            int first = rep.loop.letters[0];
            Word v(std::vector<int>(rep.loop.letters.begin() + 1, rep.loop.letters.end()));
            Word new_loop = Word{{first}}.concat(rep.spoke.reversed());
            Lasso flipped(v.reversed(), new_loop);
            if (la.is_accepting(run_lasso(la, *la.initial, flipped)))
                mask |= 1 << p;
        }
        r.automaton.initial = mask;
    }
    return r;
}

/// eta2(y) = { [u] | delta3(y)(u^r) accepted }
inline std::vector<int> lasso_unit_eta2(const LassoAutomaton& la, const LassoMuplResult& m) {
    std::vector<int> eta(static_cast<std::size_t>(la.x2_count), 0);
    for (int y = 0; y < la.x2_count; ++y)
        for (int q = 0; q < m.table.word_part.class_count; ++q) {
            Word rev = m.table.word_part.representative[static_cast<std::size_t>(q)].reversed();
            if (la.is_accepting(la.run_d3(y, rev)))
                eta[static_cast<std::size_t>(y)] |= 1 << q;
        }
    return eta;
}

/// eta1(x) per flipped-lasso formula.
inline std::vector<int> lasso_unit_eta1(const LassoAutomaton& la, const LassoMuplResult& m) {
    std::vector<int> eta(static_cast<std::size_t>(la.x1_count), 0);
    for (int x = 0; x < la.x1_count; ++x)
        for (int p = 0; p < m.table.lasso_class_count; ++p) {
            const Lasso& rep = m.table.lasso_representative[static_cast<std::size_t>(p)];
            int first = rep.loop.letters[0];
            Word v(std::vector<int>(rep.loop.letters.begin() + 1, rep.loop.letters.end()));
            Lasso flipped(v.reversed(), Word{{first}}.concat(rep.spoke.reversed()));
            if (la.is_accepting(run_lasso(la, x, flipped)))
                eta[static_cast<std::size_t>(x)] |= 1 << p;
        }
    return eta;
}

inline bool lasso_eta_is_morphism(const LassoAutomaton& la, const LassoMuplResult& m) {
    std::vector<int> eta1 = lasso_unit_eta1(la, m);
    std::vector<int> eta2 = lasso_unit_eta2(la, m);
    const LassoAutomaton& mu = m.automaton;
    for (int y = 0; y < la.x2_count; ++y) {
        if (la.is_accepting(y) != mu.is_accepting(eta2[static_cast<std::size_t>(y)]))
            return false;
        for (int a = 0; a < la.alphabet.size(); ++a)
            if (eta2[static_cast<std::size_t>(la.d3(y, a))] != mu.d3(eta2[static_cast<std::size_t>(y)], a))
                return false;
    }
    for (int x = 0; x < la.x1_count; ++x)
        for (int a = 0; a < la.alphabet.size(); ++a) {
            if (eta1[static_cast<std::size_t>(la.d1(x, a))] != mu.d1(eta1[static_cast<std::size_t>(x)], a))
                return false;
            if (eta2[static_cast<std::size_t>(la.d2(x, a))] != mu.d2(eta1[static_cast<std::size_t>(x)], a))
                return false;
        }
    return true;
}

/// Final-coalgebra transition 1: the lasso language of the a-derivative state.
inline LassoAutomaton spoke_derivative(const LassoAutomaton& la, int a) {
    if (!la.initial)
        throw Error(ErrorKind::contract, "spoke_derivative: no initial state");
    LassoAutomaton out = la;
    out.initial = la.d1(*la.initial, a);
    return out;
}

/// Final-coalgebra transition 2: the word language { u | (eps, a u) accepted }.
inline AcceptingDfa loop_word_language(const LassoAutomaton& la, int a) {
    if (!la.initial || !la.accepting)
        throw Error(ErrorKind::contract, "loop_word_language: automaton must be pointed and accepting");
    AcceptingDfa out;
    out.dfa = la.loop_dfa();
    out.accepting = *la.accepting;
    out.initial = la.d2(*la.initial, a);
    return out;
}

} // namespace aut

#endif
