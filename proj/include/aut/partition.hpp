#ifndef AUT_PARTITION_HPP
#define AUT_PARTITION_HPP

#include <numeric>
#include <vector>

#include "aut/base.hpp"

namespace aut {

/// Equivalence relation on {0..n-1} with canonical class ids: scanning
/// elements in order, the first member of each class fixes its id, so
/// class k's least member is smaller than class k+1's.
struct Partition {
    int element_count = 0;
    int class_count = 0;
    std::vector<int> class_of;

    Partition() = default;

    static Partition from_class_of(const std::vector<int>& raw) {
        Partition p;
        p.element_count = static_cast<int>(raw.size());
        p.class_of.assign(raw.size(), -1);
        std::vector<int> relabel;
        for (std::size_t i = 0; i < raw.size(); ++i) {
            int r = raw[i];
            int found = -1;
            for (std::size_t k = 0; k < relabel.size(); ++k)
                if (relabel[k] == r) {
                    found = static_cast<int>(k);
                    break;
                }
            if (found < 0) {
                found = static_cast<int>(relabel.size());
                relabel.push_back(r);
            }
            p.class_of[i] = found;
        }
        p.class_count = static_cast<int>(relabel.size());
        return p;
    }

    static Partition discrete(int n) {
        Partition p;
        p.element_count = n;
        p.class_count = n;
        p.class_of.resize(static_cast<std::size_t>(n));
        std::iota(p.class_of.begin(), p.class_of.end(), 0);
        return p;
    }

    bool same(int i, int j) const { return class_of[static_cast<std::size_t>(i)] == class_of[static_cast<std::size_t>(j)]; }
    bool is_discrete() const { return class_count == element_count; }

    std::vector<std::vector<int>> classes() const {
        std::vector<std::vector<int>> out(static_cast<std::size_t>(class_count));
        for (int i = 0; i < element_count; ++i)
            out[static_cast<std::size_t>(class_of[static_cast<std::size_t>(i)])].push_back(i);
        return out;
    }

    bool operator==(const Partition&) const = default;
};

struct DisjointSet {
    std::vector<int> parent;

    explicit DisjointSet(int n) : parent(static_cast<std::size_t>(n)) {
        std::iota(parent.begin(), parent.end(), 0);
    }

    int find(int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    }

    // unions keep the smaller root so repeated runs give identical trees
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b)
            return false;
        if (b < a)
            std::swap(a, b);
        parent[static_cast<std::size_t>(b)] = a;
        return true;
    }

    Partition to_partition() {
        std::vector<int> roots(parent.size());
        for (std::size_t i = 0; i < parent.size(); ++i)
            roots[i] = find(static_cast<int>(i));
        return Partition::from_class_of(roots);
    }
};

} // namespace aut

#endif
