#ifndef AUT_OMEGA_HPP
#define AUT_OMEGA_HPP

#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <vector>

#include "aut/lasso.hpp"

namespace aut {

/// Exact equality of the ultimately periodic words of two lassos: comparing
/// the first max(|u|,|u'|) + lcm(|v|,|v'|) letters is sufficient.
inline bool gamma_equivalent(const Lasso& l1, const Lasso& l2) {
    auto at = [](const Lasso& l, int i) {
        if (i < l.spoke.size())
            return l.spoke.letters[static_cast<std::size_t>(i)];
        return l.loop.letters[static_cast<std::size_t>((i - l.spoke.size()) % l.loop.size())];
    };
    int bound = std::max(l1.spoke.size(), l2.spoke.size()) +
                std::lcm(l1.loop.size(), l2.loop.size());
    for (int i = 0; i < bound; ++i)
        if (at(l1, i) != at(l2, i))
            return false;
    return true;
}

/// Word-behavior triple of the two sorts: spoke action, loop-entry behavior,
/// loop action.
struct WilkeTriple {
    std::vector<int> f; // X1 -> X1
    std::vector<int> g; // X1 -> X2
    std::vector<int> h; // X2 -> X2

    bool operator==(const WilkeTriple&) const = default;
    bool operator<(const WilkeTriple& other) const {
        return std::tie(f, g, h) < std::tie(other.f, other.g, other.h);
    }
};

inline WilkeTriple triple_mult(const WilkeTriple& s, const WilkeTriple& t) {
    WilkeTriple out;
    out.f.resize(s.f.size());
    out.g.resize(s.g.size());
    out.h.resize(s.h.size());
    for (std::size_t x = 0; x < s.f.size(); ++x) {
        out.f[x] = t.f[static_cast<std::size_t>(s.f[x])];
        out.g[x] = t.h[static_cast<std::size_t>(s.g[x])];
    }
    for (std::size_t y = 0; y < s.h.size(); ++y)
        out.h[y] = t.h[static_cast<std::size_t>(s.h[y])];
    return out;
}

struct TripleClosure {
    std::vector<WilkeTriple> triples; // discovery order = shortlex reps
    std::vector<Word> reps;
    std::vector<int> letter_class; // per alphabet symbol
    std::map<WilkeTriple, int> index;

    int mult(int i, int j) const {
        return index.at(triple_mult(triples[static_cast<std::size_t>(i)], triples[static_cast<std::size_t>(j)]));
    }
};

inline TripleClosure compute_triples(const LassoAutomaton& la) {
    const int asize = la.alphabet.size();
    TripleClosure c;
    std::vector<WilkeTriple> letters(static_cast<std::size_t>(asize));
    for (int a = 0; a < asize; ++a) {
        WilkeTriple t;
        t.f.resize(static_cast<std::size_t>(la.x1_count));
        t.g.resize(static_cast<std::size_t>(la.x1_count));
        t.h.resize(static_cast<std::size_t>(la.x2_count));
        for (int x = 0; x < la.x1_count; ++x) {
            t.f[static_cast<std::size_t>(x)] = la.d1(x, a);
            t.g[static_cast<std::size_t>(x)] = la.d2(x, a);
        }
        for (int y = 0; y < la.x2_count; ++y)
            t.h[static_cast<std::size_t>(y)] = la.d3(y, a);
        letters[static_cast<std::size_t>(a)] = t;
    }
    c.letter_class.resize(static_cast<std::size_t>(asize));
    for (int a = 0; a < asize; ++a) {
        auto it = c.index.find(letters[static_cast<std::size_t>(a)]);
        if (it == c.index.end()) {
            it = c.index.emplace(letters[static_cast<std::size_t>(a)], static_cast<int>(c.triples.size())).first;
            c.triples.push_back(letters[static_cast<std::size_t>(a)]);
            c.reps.push_back(Word{{a}});
        }
        c.letter_class[static_cast<std::size_t>(a)] = it->second;
    }
    for (std::size_t head = 0; head < c.triples.size(); ++head) {
        WilkeTriple cur = c.triples[head];
        for (int a = 0; a < asize; ++a) {
            WilkeTriple ext = triple_mult(cur, letters[static_cast<std::size_t>(a)]);
            if (!c.index.count(ext)) {
                c.index.emplace(ext, static_cast<int>(c.triples.size()));
                c.triples.push_back(ext);
                c.reps.push_back(c.reps[head].appended(a));
            }
        }
    }
    return c;
}

struct ConstraintPair {
    int p, q;      // identified loop-sort states
    int x;         // spoke-sort state the pair was produced from
    Lasso l1, l2;  // gamma-equivalent witnesses with run(x, l1) = p, run(x, l2) = q
};

struct AdmissibilityPartition {
    Partition base; // on X2
    std::vector<ConstraintPair> constraint_pairs;
};

/// Union-find closure of the loop-sort identifications forced by the three
/// generators of gamma-equivalence (unfold, pump, rotate), instantiated over
/// the finite word-behavior and loop-word-triple data. A subset of the loop
/// sort is admissible exactly when it is a union of the resulting classes.
inline AdmissibilityPartition saturation_partition(const LassoAutomaton& la) {
    if (!la.initial)
        throw Error(ErrorKind::contract, "saturation_partition: automaton must be pointed");
    if (!lasso_is_reachable(la))
        throw Error(ErrorKind::contract, "saturation_partition: automaton must be reachable");
    const int asize = la.alphabet.size();
    CongruenceRep words = kernel_congruence(la.spoke_dfa());
    std::vector<std::vector<int>> word_fn(static_cast<std::size_t>(words.class_count));
    for (int q = 0; q < words.class_count; ++q) {
        std::vector<int> f(static_cast<std::size_t>(la.x1_count));
        for (int x = 0; x < la.x1_count; ++x)
            f[static_cast<std::size_t>(x)] =
                la.run_spoke(x, words.representative[static_cast<std::size_t>(q)]);
        word_fn[static_cast<std::size_t>(q)] = std::move(f);
    }
    TripleClosure tri = compute_triples(la);

    AdmissibilityPartition r;
    DisjointSet ds(la.x2_count);
    auto add = [&](int p, int q, int x, Lasso l1, Lasso l2) {
        r.constraint_pairs.push_back(ConstraintPair{p, q, x, std::move(l1), std::move(l2)});
        ds.unite(p, q);
    };

    for (int fq = 0; fq < words.class_count; ++fq) {
        const std::vector<int>& f = word_fn[static_cast<std::size_t>(fq)];
        const Word& u = words.representative[static_cast<std::size_t>(fq)];
        for (std::size_t si = 0; si < tri.triples.size(); ++si) {
            const WilkeTriple& s = tri.triples[si];
            const Word& v = tri.reps[si];
            for (int x = 0; x < la.x1_count; ++x) {
                int y = f[static_cast<std::size_t>(x)];
                // unfold: (u, v) ~ (u v, v)
                add(s.g[static_cast<std::size_t>(y)], s.g[static_cast<std::size_t>(s.f[static_cast<std::size_t>(y)])], x,
                    Lasso(u, v), Lasso(u.concat(v), v));
                // pump: (u, v) ~ (u, v v)
                add(s.g[static_cast<std::size_t>(y)], s.h[static_cast<std::size_t>(s.g[static_cast<std::size_t>(y)])], x,
                    Lasso(u, v), Lasso(u, v.concat(v)));
            }
        }
        // rotate: (u, a v') ~ (u a, v' a), v' ranging over the empty word and
        // every loop-word triple
        for (int a = 0; a < asize; ++a) {
            const WilkeTriple& sa = tri.triples[static_cast<std::size_t>(tri.letter_class[static_cast<std::size_t>(a)])];
            for (int ti = -1; ti < static_cast<int>(tri.triples.size()); ++ti) {
                for (int x = 0; x < la.x1_count; ++x) {
                    int y = f[static_cast<std::size_t>(x)];
                    int lhs, rhs;
                    Word vprime = ti < 0 ? Word{} : tri.reps[static_cast<std::size_t>(ti)];
                    if (ti < 0) {
                        lhs = sa.g[static_cast<std::size_t>(y)];
                        rhs = sa.g[static_cast<std::size_t>(sa.f[static_cast<std::size_t>(y)])];
                    } else {
                        const WilkeTriple& t = tri.triples[static_cast<std::size_t>(ti)];
                        lhs = t.h[static_cast<std::size_t>(sa.g[static_cast<std::size_t>(y)])];
                        rhs = sa.h[static_cast<std::size_t>(t.g[static_cast<std::size_t>(sa.f[static_cast<std::size_t>(y)])])];
                    }
                    add(lhs, rhs, x, Lasso(u, Word{{a}}.concat(vprime)),
                        Lasso(u.appended(a), vprime.appended(a)));
                }
            }
        }
    }
    r.base = ds.to_partition();
    return r;
}

/// All unions of saturation classes, as masks over X2 in ascending order.
inline std::vector<std::uint64_t> admissible_sets(const LassoAutomaton& la,
                                                  const AdmissibilityPartition& adm,
                                                  int max_classes = k_default_class_bound) {
    const int k = adm.base.class_count;
    if (k > max_classes || k > 62)
        throw Error(ErrorKind::size_guard, "admissible_sets: too many classes");
    std::vector<std::uint64_t> class_mask(static_cast<std::size_t>(k), 0);
    for (int y = 0; y < la.x2_count; ++y)
        class_mask[static_cast<std::size_t>(adm.base.class_of[static_cast<std::size_t>(y)])] |=
            static_cast<std::uint64_t>(1) << y;
    std::vector<std::uint64_t> out;
    for (std::uint64_t combo = 0; combo < (static_cast<std::uint64_t>(1) << k); ++combo) {
        std::uint64_t m = 0;
        for (int c = 0; c < k; ++c)
            if ((combo >> c) & 1)
                m |= class_mask[static_cast<std::size_t>(c)];
        out.push_back(m);
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline bool is_admissible_mask(const LassoAutomaton& la, const AdmissibilityPartition& adm,
                               std::uint64_t mask) {
    for (int c = 0; c < adm.base.class_count; ++c) {
        bool any = false, all = true;
        for (int y = 0; y < la.x2_count; ++y)
            if (adm.base.class_of[static_cast<std::size_t>(y)] == c) {
                if ((mask >> y) & 1)
                    any = true;
                else
                    all = false;
            }
        if (any && !all)
            return false;
    }
    return true;
}

struct SaturationResult {
    bool saturated = false;
    std::optional<std::pair<Lasso, Lasso>> witness; // gamma-equivalent, acceptance differs
};

inline SaturationResult is_saturated(const LassoAutomaton& la, const AdmissibilityPartition& adm,
                                     int witness_bound = 4) {
    if (!la.accepting)
        throw Error(ErrorKind::contract, "is_saturated: no accepting set");
    std::uint64_t cmask = 0;
    for (int y : *la.accepting)
        cmask |= static_cast<std::uint64_t>(1) << y;
    SaturationResult r;
    r.saturated = is_admissible_mask(la, adm, cmask);
    if (!r.saturated && la.initial) {
        std::vector<Lasso> all = enumerate_lassos(la.alphabet.size(), witness_bound, witness_bound);
        for (std::size_t i = 0; i < all.size() && !r.witness; ++i)
            for (std::size_t j = i + 1; j < all.size(); ++j)
                if (lasso_accepts(la, all[i]) != lasso_accepts(la, all[j]) &&
                    gamma_equivalent(all[i], all[j])) {
                    r.witness = std::make_pair(all[i], all[j]);
                    break;
                }
    }
    return r;
}

inline bool up_equivalent(const LassoAutomaton& la, const AdmissibilityPartition& adm,
                          const Lasso& l1, const Lasso& l2) {
    for (int x = 0; x < la.x1_count; ++x)
        if (!adm.base.same(run_lasso(la, x, l1), run_lasso(la, x, l2)))
            return false;
    return true;
}

/// Finite presentation of the Wilke-algebra congruence: classes of loop-word
/// triples plus behavior functions modulo the saturation partition, with
/// omega power and mixed action on class representatives.
struct WilkeCongruenceRep {
    Alphabet alphabet;
    // plus part
    int plus_count = 0;
    std::vector<WilkeTriple> plus_triple;
    std::vector<Word> plus_rep;
    std::vector<int> letter_class;
    std::vector<int> mult_table; // i * plus_count + j
    // up part: partition of the lasso behavior classes
    LassoCongruenceRep behaviors;
    int up_count = 0;
    std::vector<int> up_of_behavior; // lasso class -> up class
    std::vector<Lasso> up_rep;
    std::vector<int> omega_map;    // plus class -> up class
    std::vector<int> mixed_action; // plus class * up_count + up class
    AdmissibilityPartition adm;

    int mult(int i, int j) const { return mult_table[static_cast<std::size_t>(i) * static_cast<std::size_t>(plus_count) + static_cast<std::size_t>(j)]; }
    int mixed(int s, int l) const { return mixed_action[static_cast<std::size_t>(s) * static_cast<std::size_t>(up_count) + static_cast<std::size_t>(l)]; }
    int plus_class_of_word(const Word& w) const {
        int c = letter_class[static_cast<std::size_t>(w.letters.front())];
        for (std::size_t i = 1; i < w.letters.size(); ++i)
            c = mult(c, letter_class[static_cast<std::size_t>(w.letters[i])]);
        return c;
    }
    int up_class_of_lasso(const Lasso& l) const {
        return up_of_behavior[static_cast<std::size_t>(behaviors.class_of_lasso(l))];
    }
};

inline WilkeCongruenceRep wilke_transition(const LassoAutomaton& la) {
    if (!la.initial)
        throw Error(ErrorKind::contract, "wilke_transition: automaton must be pointed");
    if (!lasso_is_reachable(la))
        throw Error(ErrorKind::contract, "wilke_transition: automaton must be reachable");
    WilkeCongruenceRep w;
    w.alphabet = la.alphabet;
    TripleClosure tri = compute_triples(la);
    w.plus_count = static_cast<int>(tri.triples.size());
    w.plus_triple = tri.triples;
    w.plus_rep = tri.reps;
    w.letter_class = tri.letter_class;
    w.mult_table.resize(static_cast<std::size_t>(w.plus_count) * static_cast<std::size_t>(w.plus_count));
    for (int i = 0; i < w.plus_count; ++i)
        for (int j = 0; j < w.plus_count; ++j)
            w.mult_table[static_cast<std::size_t>(i) * static_cast<std::size_t>(w.plus_count) + static_cast<std::size_t>(j)] =
                tri.mult(i, j);

    w.adm = saturation_partition(la);
    w.behaviors = eq_set(la);

    // group behavior classes by pointwise saturation equivalence
    const int k = w.behaviors.lasso_class_count;
    std::vector<std::vector<int>> fn(static_cast<std::size_t>(k));
    for (int p = 0; p < k; ++p) {
        std::vector<int> h(static_cast<std::size_t>(la.x1_count));
        for (int x = 0; x < la.x1_count; ++x)
            h[static_cast<std::size_t>(x)] = w.adm.base.class_of[static_cast<std::size_t>(
                run_lasso(la, x, w.behaviors.lasso_representative[static_cast<std::size_t>(p)]))];
        fn[static_cast<std::size_t>(p)] = std::move(h);
    }
    std::map<std::vector<int>, int> up_index;
    w.up_of_behavior.resize(static_cast<std::size_t>(k));
    for (int p = 0; p < k; ++p) {
        auto it = up_index.find(fn[static_cast<std::size_t>(p)]);
        if (it == up_index.end()) {
            it = up_index.emplace(fn[static_cast<std::size_t>(p)], static_cast<int>(w.up_rep.size())).first;
            w.up_rep.push_back(w.behaviors.lasso_representative[static_cast<std::size_t>(p)]);
        }
        w.up_of_behavior[static_cast<std::size_t>(p)] = it->second;
    }
    w.up_count = static_cast<int>(w.up_rep.size());

    w.omega_map.resize(static_cast<std::size_t>(w.plus_count));
    for (int s = 0; s < w.plus_count; ++s)
        w.omega_map[static_cast<std::size_t>(s)] =
            w.up_class_of_lasso(Lasso(Word{}, w.plus_rep[static_cast<std::size_t>(s)]));
    w.mixed_action.resize(static_cast<std::size_t>(w.plus_count) * static_cast<std::size_t>(w.up_count));
    for (int s = 0; s < w.plus_count; ++s)
        for (int l = 0; l < w.up_count; ++l) {
            const Lasso& rep = w.up_rep[static_cast<std::size_t>(l)];
            w.mixed_action[static_cast<std::size_t>(s) * static_cast<std::size_t>(w.up_count) + static_cast<std::size_t>(l)] =
                w.up_class_of_lasso(Lasso(w.plus_rep[static_cast<std::size_t>(s)].concat(rep.spoke), rep.loop));
        }
    return w;
}

struct MeetResult {
    LassoAutomaton automaton;
    std::vector<std::vector<int>> x1_tuples, x2_tuples;
};

/// Pointwise product of pointed lasso automata restricted to the reachable
/// part; the empty meet is the one-state-per-sort automaton.
inline MeetResult reachable_meet(const Alphabet& alphabet, const std::vector<LassoAutomaton>& las) {
    const int asize = alphabet.size();
    for (const auto& la : las) {
        if (la.alphabet != alphabet)
            throw Error(ErrorKind::alphabet_mismatch, "reachable_meet across alphabets");
        if (!la.initial)
            throw Error(ErrorKind::contract, "reachable_meet: all automata must be pointed");
    }
    MeetResult r;
    if (las.empty()) {
        std::vector<int> z(static_cast<std::size_t>(asize), 0);
        r.automaton = LassoAutomaton(alphabet, 1, 1, z, z, z);
        r.automaton.initial = 0;
        r.x1_tuples = {{}};
        r.x2_tuples = {{}};
        return r;
    }
    std::vector<int> init;
    for (const auto& la : las)
        init.push_back(*la.initial);
    std::map<std::vector<int>, int> idx1, idx2;
    r.x1_tuples.push_back(init);
    idx1[init] = 0;
    for (std::size_t head = 0; head < r.x1_tuples.size(); ++head) {
        std::vector<int> cur = r.x1_tuples[head];
        for (int a = 0; a < asize; ++a) {
            std::vector<int> nxt(cur.size());
            for (std::size_t i = 0; i < las.size(); ++i)
                nxt[i] = las[i].d1(cur[i], a);
            if (!idx1.count(nxt)) {
                idx1.emplace(nxt, static_cast<int>(r.x1_tuples.size()));
                r.x1_tuples.push_back(nxt);
            }
        }
    }
    for (std::size_t i = 0; i < r.x1_tuples.size(); ++i)
        for (int a = 0; a < asize; ++a) {
            std::vector<int> nxt(las.size());
            for (std::size_t j = 0; j < las.size(); ++j)
                nxt[j] = las[j].d2(r.x1_tuples[i][j], a);
            if (!idx2.count(nxt)) {
                idx2.emplace(nxt, static_cast<int>(r.x2_tuples.size()));
                r.x2_tuples.push_back(nxt);
            }
        }
    for (std::size_t head = 0; head < r.x2_tuples.size(); ++head) {
        std::vector<int> cur = r.x2_tuples[head];
        for (int a = 0; a < asize; ++a) {
            std::vector<int> nxt(cur.size());
            for (std::size_t i = 0; i < las.size(); ++i)
                nxt[i] = las[i].d3(cur[i], a);
            if (!idx2.count(nxt)) {
                idx2.emplace(nxt, static_cast<int>(r.x2_tuples.size()));
                r.x2_tuples.push_back(nxt);
            }
        }
    }
    int n1 = static_cast<int>(r.x1_tuples.size());
    int n2 = static_cast<int>(r.x2_tuples.size());
    std::vector<int> d1(static_cast<std::size_t>(n1) * static_cast<std::size_t>(asize));
    std::vector<int> d2(static_cast<std::size_t>(n1) * static_cast<std::size_t>(asize));
    std::vector<int> d3(static_cast<std::size_t>(n2) * static_cast<std::size_t>(asize));
    for (int s = 0; s < n1; ++s)
        for (int a = 0; a < asize; ++a) {
            std::vector<int> t1(las.size()), t2(las.size());
            for (std::size_t i = 0; i < las.size(); ++i) {
                t1[i] = las[i].d1(r.x1_tuples[static_cast<std::size_t>(s)][i], a);
                t2[i] = las[i].d2(r.x1_tuples[static_cast<std::size_t>(s)][i], a);
            }
            d1[static_cast<std::size_t>(s) * static_cast<std::size_t>(asize) + static_cast<std::size_t>(a)] = idx1.at(t1);
            d2[static_cast<std::size_t>(s) * static_cast<std::size_t>(asize) + static_cast<std::size_t>(a)] = idx2.at(t2);
        }
    for (int s = 0; s < n2; ++s)
        for (int a = 0; a < asize; ++a) {
            std::vector<int> t(las.size());
            for (std::size_t i = 0; i < las.size(); ++i)
                t[i] = las[i].d3(r.x2_tuples[static_cast<std::size_t>(s)][i], a);
            d3[static_cast<std::size_t>(s) * static_cast<std::size_t>(asize) + static_cast<std::size_t>(a)] = idx2.at(t);
        }
    r.automaton = LassoAutomaton(alphabet, n1, n2, std::move(d1), std::move(d2), std::move(d3));
    r.automaton.initial = 0;
    return r;
}

struct MeetComparison {
    bool coverage = true;    // every factor state occurs in some reachable tuple
    bool plus_exact = true;  // word congruence of the meet = intersection
    bool up_refines = true;  // meet-equivalent lassos are equivalent in every factor
    bool up_exact = true;    // ... and conversely

    bool exact() const { return coverage && plus_exact && up_refines && up_exact; }
};

/// Compares the Wilke congruence of the meet with the intersection of the
/// factors' congruences, clause by clause. The refinement direction follows
/// from monotonicity along the projections; exactness of the up part can
/// fail, because component identification chains need not synchronize into
/// chains over reachable tuples.
inline MeetComparison meet_compare(const Alphabet& alphabet,
                                   const std::vector<LassoAutomaton>& input) {
    MeetComparison r;
    std::vector<LassoAutomaton> las;
    for (const auto& la : input)
        las.push_back(lasso_reachable_part(la).automaton);
    MeetResult meet = reachable_meet(alphabet, las);
    if (las.empty())
        return r;
    WilkeCongruenceRep wm = wilke_transition(meet.automaton);
    std::vector<WilkeCongruenceRep> wf;
    for (const auto& la : las)
        wf.push_back(wilke_transition(la));

    for (std::size_t i = 0; i < las.size(); ++i) {
        std::vector<char> seen1(static_cast<std::size_t>(las[i].x1_count), 0);
        std::vector<char> seen2(static_cast<std::size_t>(las[i].x2_count), 0);
        for (const auto& t : meet.x1_tuples)
            seen1[static_cast<std::size_t>(t[i])] = 1;
        for (const auto& t : meet.x2_tuples)
            seen2[static_cast<std::size_t>(t[i])] = 1;
        for (char c : seen1)
            r.coverage = r.coverage && c;
        for (char c : seen2)
            r.coverage = r.coverage && c;
    }

    // plus part: the tuple map is injective exactly when the congruences agree
    {
        std::map<std::vector<int>, int> tuple_of;
        for (int s = 0; s < wm.plus_count; ++s) {
            std::vector<int> tup;
            for (const auto& f : wf)
                tup.push_back(f.plus_class_of_word(wm.plus_rep[static_cast<std::size_t>(s)]));
            auto [it, inserted] = tuple_of.emplace(tup, s);
            if (!inserted)
                r.plus_exact = false;
        }
    }
    // up part: constant factor tuples per meet class (refinement) and
    // distinct tuples across meet classes (exactness)
    {
        std::vector<std::vector<int>> class_tuple(static_cast<std::size_t>(wm.up_count));
        std::vector<char> have(static_cast<std::size_t>(wm.up_count), 0);
        for (int p = 0; p < wm.behaviors.lasso_class_count; ++p) {
            const Lasso& rep = wm.behaviors.lasso_representative[static_cast<std::size_t>(p)];
            std::vector<int> tup;
            for (const auto& f : wf)
                tup.push_back(f.up_class_of_lasso(rep));
            int u = wm.up_of_behavior[static_cast<std::size_t>(p)];
            if (!have[static_cast<std::size_t>(u)]) {
                have[static_cast<std::size_t>(u)] = 1;
                class_tuple[static_cast<std::size_t>(u)] = tup;
            } else if (class_tuple[static_cast<std::size_t>(u)] != tup) {
                r.up_refines = false;
            }
        }
        std::map<std::vector<int>, int> tuple_of;
        for (int u = 0; u < wm.up_count; ++u) {
            auto [it, inserted] = tuple_of.emplace(class_tuple[static_cast<std::size_t>(u)], u);
            if (!inserted)
                r.up_exact = false;
        }
    }
    return r;
}

inline bool meet_preservation_check(const Alphabet& alphabet,
                                    const std::vector<LassoAutomaton>& input) {
    return meet_compare(alphabet, input).exact();
}

} // namespace aut

#endif
