#ifndef AUT_EQUATIONS_HPP
#define AUT_EQUATIONS_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "aut/congruence.hpp"

namespace aut {

inline constexpr int k_default_class_bound = 20;
inline constexpr int k_powerset_state_bound = 16;

/// The inverse-image automaton on all subsets of the base state set, pointed
/// at the accepting set. Subset i is the mask i, so states are in
/// binary-counter order over base state indices.
struct PowersetDfa {
    AcceptingDfa base;
    int initial_index = 0;       // mask of base.accepting
    std::vector<int> delta_hat;  // mask * |alphabet| + symbol -> mask

    int subset_count() const { return 1 << base.dfa.state_count; }

    int step(int subset, int a) const {
        return delta_hat[static_cast<std::size_t>(subset) * static_cast<std::size_t>(base.dfa.alphabet.size()) +
                         static_cast<std::size_t>(a)];
    }

    PointedDfa as_pointed() const {
        return PointedDfa{Dfa(base.dfa.alphabet, subset_count(), delta_hat), initial_index};
    }

    /// The subsets reachable from the accepting set; the carrier every
    /// downstream kernel is computed on.
    ReachableResult reachable() const { return reachable_part(as_pointed()); }
};

inline PowersetDfa powerset_lift(const AcceptingDfa& a) {
    const int n = a.dfa.state_count;
    const int asize = a.dfa.alphabet.size();
    if (n > k_powerset_state_bound)
        throw Error(ErrorKind::size_guard, "powerset_lift: base automaton too large");
    PowersetDfa out;
    out.base = a;
    int cmask = 0;
    for (int s : a.accepting)
        cmask |= 1 << s;
    out.initial_index = cmask;
    out.delta_hat.resize((static_cast<std::size_t>(1) << n) * static_cast<std::size_t>(asize));
    // delta_hat(U, a) = { x | delta(x, a) in U }
    for (int a_sym = 0; a_sym < asize; ++a_sym) {
        std::vector<int> pre(static_cast<std::size_t>(n));
        for (int s = 0; s < n; ++s)
            pre[static_cast<std::size_t>(s)] = a.dfa.step(s, a_sym);
        for (int u = 0; u < (1 << n); ++u) {
            int img = 0;
            for (int s = 0; s < n; ++s)
                if ((u >> pre[static_cast<std::size_t>(s)]) & 1)
                    img |= 1 << s;
            out.delta_hat[static_cast<std::size_t>(u) * static_cast<std::size_t>(asize) +
                          static_cast<std::size_t>(a_sym)] = img;
        }
    }
    return out;
}

struct NucResult {
    CongruenceRep table;
    PointedDfa automaton;
    std::optional<std::vector<int>> accepting; // lifted classes, sorted
};

/// Machine of the transition monoid of the reachable part; with an accepting
/// set, classes whose representative reaches an accepting state are accepting.
inline NucResult nuc(const PointedDfa& p, const std::optional<std::vector<int>>& acc = std::nullopt) {
    ReachableResult reach = reachable_part(p);
    NucResult r;
    r.table = kernel_congruence(reach.automaton.dfa);
    r.automaton = machine(r.table);
    if (acc) {
        std::vector<int> lifted;
        for (int q = 0; q < r.table.class_count; ++q) {
            int target = p.dfa.run(p.initial, r.table.representative[static_cast<std::size_t>(q)]);
            if (std::binary_search(acc->begin(), acc->end(), target))
                lifted.push_back(q);
        }
        r.accepting = std::move(lifted);
    }
    return r;
}

struct FreeResult {
    CongruenceRep table;
    PointedDfa automaton;
};

/// Kernel quantified over the full state set, no reachability restriction.
inline FreeResult free_construction(const Dfa& d) {
    FreeResult r;
    r.table = kernel_congruence(d);
    r.automaton = machine(r.table);
    return r;
}

/// States are all subsets of the kernel classes of the reachable lifted
/// automaton, encoded as masks; transitions and acceptance are derived from
/// the class table on demand.
struct MuplAutomaton {
    CongruenceRep table;
    std::optional<std::uint64_t> initial_mask;

    int class_count() const { return table.class_count; }
    std::uint64_t state_total() const { return static_cast<std::uint64_t>(1) << class_count(); }
    std::uint64_t full_mask() const { return state_total() - 1; }

    // sigma(U)(a) = { [w] | [wa] in U }
    std::uint64_t step_mask(std::uint64_t u, int a) const {
        std::uint64_t out = 0;
        for (int q = 0; q < class_count(); ++q)
            if ((u >> table.right(q, a)) & 1)
                out |= static_cast<std::uint64_t>(1) << q;
        return out;
    }

    std::uint64_t run_mask(std::uint64_t u, const Word& w) const {
        for (int a : w.letters)
            u = step_mask(u, a);
        return u;
    }

    bool is_accepting_mask(std::uint64_t u) const { return (u >> table.eps_class) & 1; }

    AcceptingDfa as_accepting_dfa() const {
        if (class_count() > 22)
            throw Error(ErrorKind::size_guard, "mupl: too many classes to materialize");
        const int asize = table.alphabet.size();
        std::uint64_t total = state_total();
        std::vector<int> delta(static_cast<std::size_t>(total) * static_cast<std::size_t>(asize));
        std::vector<int> acc;
        for (std::uint64_t u = 0; u < total; ++u) {
            for (int a = 0; a < asize; ++a)
                delta[static_cast<std::size_t>(u) * static_cast<std::size_t>(asize) + static_cast<std::size_t>(a)] =
                    static_cast<int>(step_mask(u, a));
            if (is_accepting_mask(u))
                acc.push_back(static_cast<int>(u));
        }
        AcceptingDfa out;
        out.dfa = Dfa(table.alphabet, static_cast<int>(total), std::move(delta));
        out.accepting = std::move(acc);
        if (initial_mask)
            out.initial = static_cast<int>(*initial_mask);
        return out;
    }
};

inline MuplAutomaton mupl(const AcceptingDfa& a, int max_classes = k_default_class_bound) {
    PowersetDfa lift = powerset_lift(a);
    ReachableResult reach = lift.reachable();
    MuplAutomaton m;
    m.table = kernel_congruence(reach.automaton.dfa);
    if (m.table.class_count > max_classes || m.table.class_count > 62)
        throw Error(ErrorKind::size_guard, "mupl: class count exceeds bound");
    if (a.initial) {
        std::uint64_t mask = 0;
        for (int q = 0; q < m.table.class_count; ++q) {
            Word rev = m.table.representative[static_cast<std::size_t>(q)].reversed();
            if (a.is_accepting(a.dfa.run(*a.initial, rev)))
                mask |= static_cast<std::uint64_t>(1) << q;
        }
        m.initial_mask = mask;
    }
    return m;
}

/// eta(x) = { [u] | delta(x)(u^r) accepting }
inline std::vector<std::uint64_t> unit_eta(const AcceptingDfa& a, const MuplAutomaton& m) {
    std::vector<std::uint64_t> eta(static_cast<std::size_t>(a.dfa.state_count), 0);
    for (int x = 0; x < a.dfa.state_count; ++x)
        for (int q = 0; q < m.class_count(); ++q) {
            Word rev = m.table.representative[static_cast<std::size_t>(q)].reversed();
            if (a.is_accepting(a.dfa.run(x, rev)))
                eta[static_cast<std::size_t>(x)] |= static_cast<std::uint64_t>(1) << q;
        }
    return eta;
}

inline bool eta_is_morphism(const AcceptingDfa& a, const MuplAutomaton& m,
                            const std::vector<std::uint64_t>& eta) {
    for (int x = 0; x < a.dfa.state_count; ++x) {
        if (a.is_accepting(x) != m.is_accepting_mask(eta[static_cast<std::size_t>(x)]))
            return false;
        for (int s = 0; s < a.dfa.alphabet.size(); ++s)
            if (eta[static_cast<std::size_t>(a.dfa.step(x, s))] != m.step_mask(eta[static_cast<std::size_t>(x)], s))
                return false;
    }
    return true;
}

enum class CofreeMode { all_colorings, singleton_colorings };

struct CofreeResult {
    AcceptingDfa automaton; // no initial state; states are distinct behaviors
    std::vector<std::pair<int, std::uint64_t>> state_label; // least (state, coloring) per class
};

/// The languages L(x, U) for x a base state and U a coloring, as a finite
/// automaton: pairs (x, U) stepping on the first component, identified up to
/// bisimilarity. Closed under derivatives by construction.
inline CofreeResult cofree(const Dfa& d, CofreeMode mode) {
    const int n = d.state_count;
    const int asize = d.alphabet.size();
    if (n > k_powerset_state_bound)
        throw Error(ErrorKind::size_guard, "cofree: base automaton too large");
    std::vector<std::uint64_t> colorings;
    if (mode == CofreeMode::all_colorings) {
        for (std::uint64_t u = 0; u < (static_cast<std::uint64_t>(1) << n); ++u)
            colorings.push_back(u);
    } else {
        for (int s = 0; s < n; ++s)
            colorings.push_back(static_cast<std::uint64_t>(1) << s);
    }
    const int pairs = static_cast<int>(colorings.size()) * n;
    auto pair_index = [&](int x, int color) { return color * n + x; };
    std::vector<int> delta(static_cast<std::size_t>(pairs) * static_cast<std::size_t>(asize));
    std::vector<int> acc;
    for (int color = 0; color < static_cast<int>(colorings.size()); ++color)
        for (int x = 0; x < n; ++x) {
            int idx = pair_index(x, color);
            for (int a = 0; a < asize; ++a)
                delta[static_cast<std::size_t>(idx) * static_cast<std::size_t>(asize) + static_cast<std::size_t>(a)] =
                    pair_index(d.step(x, a), color);
            if ((colorings[static_cast<std::size_t>(color)] >> x) & 1)
                acc.push_back(idx);
        }
    AcceptingDfa pair_aut{Dfa(d.alphabet, pairs, std::move(delta)), std::move(acc), std::nullopt};
    Partition bisim = bisimilarity_partition(pair_aut);

    CofreeResult r;
    r.state_label.resize(static_cast<std::size_t>(bisim.class_count), {-1, 0});
    std::vector<int> qdelta(static_cast<std::size_t>(bisim.class_count) * static_cast<std::size_t>(asize));
    std::vector<int> qacc;
    for (int idx = 0; idx < pairs; ++idx) {
        int cls = bisim.class_of[static_cast<std::size_t>(idx)];
        int x = idx % n;
        int color = idx / n;
        if (r.state_label[static_cast<std::size_t>(cls)].first < 0) {
            // class ids follow least members, which this scan visits in order
            r.state_label[static_cast<std::size_t>(cls)] = {x, colorings[static_cast<std::size_t>(color)]};
            for (int a = 0; a < asize; ++a)
                qdelta[static_cast<std::size_t>(cls) * static_cast<std::size_t>(asize) + static_cast<std::size_t>(a)] =
                    bisim.class_of[static_cast<std::size_t>(pair_aut.dfa.step(idx, a))];
            if (pair_aut.is_accepting(idx))
                qacc.push_back(cls);
        }
    }
    std::sort(qacc.begin(), qacc.end());
    r.automaton = AcceptingDfa{Dfa(d.alphabet, bisim.class_count, std::move(qdelta)), std::move(qacc), std::nullopt};
    return r;
}

struct AtomTerm {
    int state;
    std::uint64_t subset;
    bool positive;

    bool operator==(const AtomTerm&) const = default;
};

/// Conjunction of (possibly complemented) terms L(x, U) with U ranging over
/// the subsets reachable from the accepting set.
struct AtomFormula {
    int atom_class = 0;
    Word witness; // representative of the atom's class
    std::vector<AtomTerm> terms;
};

inline AtomFormula atom_decomposition(const AcceptingDfa& a, const MuplAutomaton& m, int cls) {
    if (cls < 0 || cls >= m.class_count())
        throw Error(ErrorKind::contract, "atom_decomposition: class out of range");
    PowersetDfa lift = powerset_lift(a);
    ReachableResult reach = lift.reachable();
    AtomFormula f;
    f.atom_class = cls;
    f.witness = m.table.representative[static_cast<std::size_t>(cls)];
    Word wr = f.witness.reversed();
    for (int x = 0; x < a.dfa.state_count; ++x) {
        int landing = a.dfa.run(x, wr);
        for (int mask_state : reach.new_to_old) {
            std::uint64_t u = static_cast<std::uint64_t>(mask_state);
            f.terms.push_back(AtomTerm{x, u, ((u >> landing) & 1) != 0});
        }
    }
    return f;
}

/// Rewrites complemented terms as memberships of the complement subset and
/// drops full-set terms; the result is a conjunction of nontrivial
/// positive terms.
inline std::vector<AtomTerm> simplified_terms(const AtomFormula& f, int base_state_count) {
    std::uint64_t full = (static_cast<std::uint64_t>(1) << base_state_count) - 1;
    std::vector<AtomTerm> out;
    for (const AtomTerm& t : f.terms) {
        std::uint64_t u = t.positive ? t.subset : (~t.subset & full);
        if (u == full)
            continue;
        out.push_back(AtomTerm{t.state, u, true});
    }
    std::sort(out.begin(), out.end(), [](const AtomTerm& a, const AtomTerm& b) {
        return std::pair(a.state, a.subset) < std::pair(b.state, b.subset);
    });
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

inline bool atom_formula_member(const AcceptingDfa& a, const AtomFormula& f, const Word& w) {
    for (const AtomTerm& t : f.terms) {
        bool in = ((t.subset >> a.dfa.run(t.state, w)) & 1) != 0;
        if (in != t.positive)
            return false;
    }
    return true;
}

/// Structural closure checks on the subset states: complement, union,
/// intersection, and both word derivatives stay within the state space.
inline bool preformation_closure_check(const MuplAutomaton& m) {
    const int k = m.class_count();
    const std::uint64_t total = m.state_total();
    const std::uint64_t full = m.full_mask();
    auto in_range = [&](std::uint64_t u) { return u < total; };
    for (std::uint64_t u = 0; u < total; ++u) {
        if (!in_range(~u & full))
            return false;
        for (int a = 0; a < m.table.alphabet.size(); ++a) {
            if (!in_range(m.step_mask(u, a)))
                return false;
            std::uint64_t right_deriv = 0; // { [w] | [aw] in U }
            for (int q = 0; q < k; ++q)
                if ((u >> m.table.left(a, q)) & 1)
                    right_deriv |= static_cast<std::uint64_t>(1) << q;
            if (!in_range(right_deriv))
                return false;
        }
    }
    if (total <= 256) {
        for (std::uint64_t u = 0; u < total; ++u)
            for (std::uint64_t v = 0; v < total; ++v)
                if (!in_range(u | v) || !in_range(u & v))
                    return false;
    }
    return true;
}

struct EmbedCheckResult {
    bool hypothesis_holds = false;
    bool embeds = false;
};

/// The hypothesis asks that the Boolean closure of the reachable subsets is
/// the full powerset, which holds exactly when those subsets separate the
/// base states. Under it, every coloring language has an exact counterpart
/// among the subset states.
inline EmbedCheckResult embed_cofree_check(const AcceptingDfa& a,
                                           int max_classes = k_default_class_bound) {
    EmbedCheckResult r;
    const int n = a.dfa.state_count;
    PowersetDfa lift = powerset_lift(a);
    ReachableResult reach = lift.reachable();
    std::vector<std::uint64_t> patterns(static_cast<std::size_t>(n), 0);
    for (std::size_t i = 0; i < reach.new_to_old.size(); ++i)
        for (int x = 0; x < n; ++x)
            if ((static_cast<std::uint64_t>(reach.new_to_old[i]) >> x) & 1)
                patterns[static_cast<std::size_t>(x)] |= static_cast<std::uint64_t>(1) << i;
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y)
            if (patterns[static_cast<std::size_t>(x)] == patterns[static_cast<std::size_t>(y)])
                return r; // hypothesis fails
    r.hypothesis_holds = true;

    MuplAutomaton m = mupl(a, max_classes);
    AcceptingDfa big = m.as_accepting_dfa();
    for (int x = 0; x < n; ++x)
        for (std::uint64_t u = 0; u < (static_cast<std::uint64_t>(1) << n); ++u) {
            std::uint64_t v = 0;
            for (int q = 0; q < m.class_count(); ++q) {
                Word rev = m.table.representative[static_cast<std::size_t>(q)].reversed();
                if ((u >> a.dfa.run(x, rev)) & 1)
                    v |= static_cast<std::uint64_t>(1) << q;
            }
            std::vector<int> u_states;
            for (int s = 0; s < n; ++s)
                if ((u >> s) & 1)
                    u_states.push_back(s);
            if (!languages_equal_exact(big.dfa, static_cast<int>(v), big.accepting, a.dfa, x, u_states))
                return r;
        }
    r.embeds = true;
    return r;
}

} // namespace aut

#endif
