#include "latcut/levels.hpp"

#include <algorithm>
#include <numeric>

#include "latcut/lattice.hpp"

namespace latcut {

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
};

void require_semimodular(const FinitePoset& p) {
    if (!detail::lattice_cached(p))
        throw NotLatticeError("poset is not a lattice", -1, -1);
    auto sm = detail::semimodular_cached(p);
    if (!sm.ok)
        throw NotSemimodularError("lattice is not semimodular",
                                  sm.witness.first, sm.witness.second);
}

}  // namespace

bool tilde_related(const FinitePoset& p, int x, int y) {
    p.check_id(x);
    p.check_id(y);
    if (x == y) return true;
    const auto& lx = p.lower_covers(x);
    const auto& ly = p.lower_covers(y);
    // both sorted
    std::size_t i = 0, j = 0;
    while (i < lx.size() && j < ly.size()) {
        if (lx[i] == ly[j]) return true;
        if (lx[i] < ly[j]) ++i; else ++j;
    }
    return false;
}

LevelPartition level_classes(const FinitePoset& p) {
    UnionFind uf(p.size());
    for (int z = 0; z < p.size(); ++z) {
        const auto& ups = p.upper_covers(z);
        for (std::size_t i = 1; i < ups.size(); ++i) uf.unite(ups[0], ups[i]);
    }
    // class order = ascending smallest member; roots are already the minima
    std::vector<int> root_index(p.size(), -1);
    LevelPartition part;
    part.class_of.resize(p.size());
    for (int v = 0; v < p.size(); ++v) {
        int r = uf.find(v);
        if (root_index[r] < 0) {
            root_index[r] = static_cast<int>(part.classes.size());
            part.classes.emplace_back();
        }
        part.class_of[v] = root_index[r];
        part.classes[root_index[r]].push_back(v);
    }
    return part;
}

std::vector<std::vector<int>> levels_by_height(const FinitePoset& p) {
    auto mins = p.minimal_elements();
    int bottom = mins.size() == 1 ? mins[0] : -1;
    if (bottom < 0 || !std::all_of(mins.begin(), mins.end(), [&](int m) {
            return m == bottom;
        }))
        throw NoLeastElementError("poset has no unique least element");
    for (int v = 0; v < p.size(); ++v)
        if (!p.leq(bottom, v))
            throw NoLeastElementError("minimal element is not a least element");
    auto jd = check_jordan_dedekind(p);
    if (!jd.ok)
        throw NotGradedError("poset fails the Jordan-Dedekind condition",
                             jd.interval.first, jd.interval.second);
    std::vector<std::vector<int>> levels;
    for (int v = 0; v < p.size(); ++v) {
        int h = height(p, bottom, v);
        if (static_cast<int>(levels.size()) <= h) levels.resize(h + 1);
        levels[h].push_back(v);
    }
    return levels;
}

bool same_level_via_height(const FinitePoset& p, int x, int y) {
    p.check_id(x);
    p.check_id(y);
    require_semimodular(p);
    int z = meet(p, x, y);
    return height(p, z, x) == height(p, z, y);
}

bool common_lower_bound_height_check(const FinitePoset& p, int x, int y,
                                     int z) {
    if (!p.leq(z, x) || !p.leq(z, y))
        throw NotComparableError("z=" + std::to_string(z) +
                                 " is not a common lower bound");
    require_semimodular(p);
    return height(p, z, x) == height(p, z, y);
}

}  // namespace latcut
