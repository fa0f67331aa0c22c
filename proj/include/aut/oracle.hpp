#ifndef AUT_ORACLE_HPP
#define AUT_ORACLE_HPP

#include <functional>
#include <optional>
#include <vector>

#include "aut/omega.hpp"

namespace aut {

struct BoundConfig {
    int max_word_len = 8;
    int max_spoke = 4;
    int max_loop = 4;
    int max_subset_classes = 20;
};

/// Kernel pairs by direct evaluation: all word pairs (u, v) with u <= v in
/// shortlex order, up to the bound, whose state functions coincide. Never
/// calls into the closure-based monoid code.
inline std::vector<std::pair<Word, Word>> brute_congruence(const Dfa& dfa, int bound) {
    std::vector<Word> words = words_upto(dfa.alphabet.size(), bound);
    std::vector<std::vector<int>> fn;
    fn.reserve(words.size());
    for (const Word& w : words) {
        std::vector<int> f(static_cast<std::size_t>(dfa.state_count));
        for (int s = 0; s < dfa.state_count; ++s)
            f[static_cast<std::size_t>(s)] = dfa.run(s, w);
        fn.push_back(std::move(f));
    }
    std::vector<std::pair<Word, Word>> out;
    for (std::size_t i = 0; i < words.size(); ++i)
        for (std::size_t j = i; j < words.size(); ++j)
            if (fn[i] == fn[j])
                out.emplace_back(words[i], words[j]);
    return out;
}

/// Agreement between the brute-force kernel and a congruence presentation,
/// restricted to words up to the bound.
inline bool brute_congruence_agrees(const Dfa& dfa, const CongruenceRep& c, int bound) {
    std::vector<Word> words = words_upto(dfa.alphabet.size(), bound);
    for (std::size_t i = 0; i < words.size(); ++i)
        for (std::size_t j = i + 1; j < words.size(); ++j) {
            bool brute = true;
            for (int s = 0; s < dfa.state_count && brute; ++s)
                brute = dfa.run(s, words[i]) == dfa.run(s, words[j]);
            bool table = c.class_of_word(words[i]) == c.class_of_word(words[j]);
            if (brute != table)
                return false;
        }
    return true;
}

/// Character-by-character comparison of the two ultimately periodic words on
/// a window `factor` times the exact bound.
inline bool naive_gamma_equivalent(const Lasso& l1, const Lasso& l2, int factor = 4) {
    auto at = [](const Lasso& l, int i) {
        if (i < l.spoke.size())
            return l.spoke.letters[static_cast<std::size_t>(i)];
        return l.loop.letters[static_cast<std::size_t>((i - l.spoke.size()) % l.loop.size())];
    };
    int bound = factor * (std::max(l1.spoke.size(), l2.spoke.size()) +
                          std::lcm(l1.loop.size(), l2.loop.size()));
    for (int i = 0; i < bound; ++i)
        if (at(l1, i) != at(l2, i))
            return false;
    return true;
}

/// Normal form under loop primitivization and rotation absorption; two
/// lassos denote the same infinite word exactly when their forms agree.
inline Lasso canonical_lasso(const Lasso& l) {
    Word loop = l.loop;
    int n = loop.size();
    for (int p = 1; p <= n; ++p) {
        if (n % p != 0)
            continue;
        bool periodic = true;
        for (int i = p; i < n && periodic; ++i)
            periodic = loop.letters[static_cast<std::size_t>(i)] == loop.letters[static_cast<std::size_t>(i - p)];
        if (periodic) {
            loop.letters.resize(static_cast<std::size_t>(p));
            break;
        }
    }
    Word spoke = l.spoke;
    while (!spoke.empty() && spoke.letters.back() == loop.letters.back()) {
        spoke.letters.pop_back();
        int last = loop.letters.back();
        loop.letters.pop_back();
        loop.letters.insert(loop.letters.begin(), last);
    }
    return Lasso(spoke, loop);
}

inline std::vector<std::pair<Lasso, Lasso>> brute_gamma_pairs(int alphabet_size, int bound) {
    std::vector<Lasso> all = enumerate_lassos(alphabet_size, bound, bound);
    std::vector<std::pair<Lasso, Lasso>> out;
    for (std::size_t i = 0; i < all.size(); ++i)
        for (std::size_t j = i + 1; j < all.size(); ++j)
            if (gamma_equivalent(all[i], all[j]))
                out.emplace_back(all[i], all[j]);
    return out;
}

/// Saturation classes by brute force: run every bounded lasso from every
/// spoke state and identify targets across gamma-equivalent lassos (grouped
/// by canonical form, so no pairwise scan is needed).
inline Partition brute_saturation(const LassoAutomaton& la, int bound) {
    std::vector<Lasso> all = enumerate_lassos(la.alphabet.size(), bound, bound);
    std::map<std::pair<std::vector<int>, std::vector<int>>, std::vector<std::size_t>> groups;
    for (std::size_t i = 0; i < all.size(); ++i) {
        Lasso c = canonical_lasso(all[i]);
        groups[{c.spoke.letters, c.loop.letters}].push_back(i);
    }
    DisjointSet ds(la.x2_count);
    for (const auto& [key, members] : groups)
        for (std::size_t m = 1; m < members.size(); ++m)
            for (int x = 0; x < la.x1_count; ++x)
                ds.unite(run_lasso(la, x, all[members[0]]), run_lasso(la, x, all[members[m]]));
    return ds.to_partition();
}

/// Lasso-class agreement: the congruence presentation must classify bounded
/// lassos exactly like the pointwise run vectors do.
inline bool brute_lasso_classes_agree(const LassoAutomaton& la, const LassoCongruenceRep& c,
                                      int bound) {
    std::vector<Lasso> all = enumerate_lassos(la.alphabet.size(), bound, bound);
    std::vector<std::vector<int>> runs;
    std::vector<int> cls;
    runs.reserve(all.size());
    for (const Lasso& l : all) {
        std::vector<int> v(static_cast<std::size_t>(la.x1_count));
        for (int x = 0; x < la.x1_count; ++x)
            v[static_cast<std::size_t>(x)] = run_lasso(la, x, l);
        runs.push_back(std::move(v));
        cls.push_back(c.class_of_lasso(l));
    }
    for (std::size_t i = 0; i < all.size(); ++i)
        for (std::size_t j = i + 1; j < all.size(); ++j)
            if ((runs[i] == runs[j]) != (cls[i] == cls[j]))
                return false;
    // word part likewise
    std::vector<Word> words = words_upto(la.alphabet.size(), bound);
    for (std::size_t i = 0; i < words.size(); ++i)
        for (std::size_t j = i + 1; j < words.size(); ++j) {
            bool brute = true;
            for (int x = 0; x < la.x1_count && brute; ++x)
                brute = la.run_spoke(x, words[i]) == la.run_spoke(x, words[j]);
            if (brute != (c.word_part.class_of_word(words[i]) == c.word_part.class_of_word(words[j])))
                return false;
        }
    return true;
}

/// Shortlex scan of two language queries; returns the least differing word.
inline std::optional<Word> languages_equal_upto(const std::function<bool(const Word&)>& a,
                                                const std::function<bool(const Word&)>& b,
                                                int alphabet_size, int bound) {
    for (const Word& w : words_upto(alphabet_size, bound))
        if (a(w) != b(w))
            return w;
    return std::nullopt;
}

/// Canonical-order scan of two lasso-language queries.
inline std::optional<Lasso> lasso_languages_equal_upto(const std::function<bool(const Lasso&)>& a,
                                                       const std::function<bool(const Lasso&)>& b,
                                                       int alphabet_size, int max_spoke, int max_loop) {
    for (const Lasso& l : enumerate_lassos(alphabet_size, max_spoke, max_loop))
        if (a(l) != b(l))
            return l;
    return std::nullopt;
}

} // namespace aut

#endif
