#include "latcut/lattice.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <mutex>
#include <string>

namespace latcut {

namespace {

constexpr int kInf = std::numeric_limits<int>::max() / 2;

std::vector<int> topo_order(const FinitePoset& p) {
    const int n = p.size();
    std::vector<int> indeg(n, 0), order;
    order.reserve(n);
    for (int v = 0; v < n; ++v)
        indeg[v] = static_cast<int>(p.lower_covers(v).size());
    std::vector<int> queue;
    for (int v = 0; v < n; ++v)
        if (indeg[v] == 0) queue.push_back(v);
    for (std::size_t i = 0; i < queue.size(); ++i) {
        int v = queue[i];
        order.push_back(v);
        for (int w : p.upper_covers(v))
            if (--indeg[w] == 0) queue.push_back(w);
    }
    return order;
}

struct Distances {
    std::vector<int> dmin, dmax;        // cover-step distances from the source
    std::vector<int> pmin, pmax;        // predecessor on a shortest/longest path
};

// Shortest and longest cover-path distances from x to every y >= x.
// Every cover path from x to y stays inside [x,y], so these are exactly the
// extreme maximal-chain lengths of the interval.
Distances distances_from(const FinitePoset& p, int x,
                         const std::vector<int>& order) {
    const int n = p.size();
    Distances d{std::vector<int>(n, kInf), std::vector<int>(n, -1),
                std::vector<int>(n, -1), std::vector<int>(n, -1)};
    d.dmin[x] = 0;
    d.dmax[x] = 0;
    for (int v : order) {
        if (d.dmin[v] == kInf) continue;
        for (int w : p.upper_covers(v)) {
            if (d.dmin[v] + 1 < d.dmin[w]) {
                d.dmin[w] = d.dmin[v] + 1;
                d.pmin[w] = v;
            }
            if (d.dmax[v] + 1 > d.dmax[w]) {
                d.dmax[w] = d.dmax[v] + 1;
                d.pmax[w] = v;
            }
        }
    }
    return d;
}

Chain backtrack(const std::vector<int>& pred, int x, int y) {
    Chain c;
    for (int v = y; v != x; v = pred[v]) c.push_back(v);
    c.push_back(x);
    std::reverse(c.begin(), c.end());
    return c;
}

}  // namespace

std::optional<int> try_meet(const FinitePoset& p, int x, int y) {
    p.check_id(x);
    p.check_id(y);
    std::vector<int> lower;
    for (int z = 0; z < p.size(); ++z)
        if (p.leq(z, x) && p.leq(z, y)) lower.push_back(z);
    std::optional<int> best;
    for (int z : lower) {
        bool maximal = true;
        for (int w : lower)
            if (w != z && p.less(z, w)) {
                maximal = false;
                break;
            }
        if (maximal) {
            if (best) return std::nullopt;  // not unique
            best = z;
        }
    }
    return best;
}

std::optional<int> try_join(const FinitePoset& p, int x, int y) {
    p.check_id(x);
    p.check_id(y);
    std::vector<int> upper;
    for (int z = 0; z < p.size(); ++z)
        if (p.leq(x, z) && p.leq(y, z)) upper.push_back(z);
    std::optional<int> best;
    for (int z : upper) {
        bool minimal = true;
        for (int w : upper)
            if (w != z && p.less(w, z)) {
                minimal = false;
                break;
            }
        if (minimal) {
            if (best) return std::nullopt;
            best = z;
        }
    }
    return best;
}

namespace {

[[noreturn]] void throw_not_lattice(const FinitePoset& p, int x, int y,
                                    bool want_meet) {
    std::vector<int> bounds, extremal;
    for (int z = 0; z < p.size(); ++z) {
        bool in = want_meet ? (p.leq(z, x) && p.leq(z, y))
                            : (p.leq(x, z) && p.leq(y, z));
        if (in) bounds.push_back(z);
    }
    for (int z : bounds) {
        bool ext = true;
        for (int w : bounds)
            if (w != z && (want_meet ? p.less(z, w) : p.less(w, z))) {
                ext = false;
                break;
            }
        if (ext) extremal.push_back(z);
    }
    throw NotLatticeError(std::string(want_meet ? "meet" : "join") +
                              " undefined for (" + std::to_string(x) + "," +
                              std::to_string(y) + ")",
                          x, y, std::move(extremal));
}

}  // namespace

int meet(const FinitePoset& p, int x, int y) {
    if (auto m = try_meet(p, x, y)) return *m;
    throw_not_lattice(p, x, y, true);
}

int join(const FinitePoset& p, int x, int y) {
    if (auto j = try_join(p, x, y)) return *j;
    throw_not_lattice(p, x, y, false);
}

bool is_lattice(const FinitePoset& p) {
    for (int x = 0; x < p.size(); ++x)
        for (int y = x + 1; y < p.size(); ++y)
            if (!try_meet(p, x, y) || !try_join(p, x, y)) return false;
    return true;
}

SemimodularCheck check_semimodular(const FinitePoset& p) {
    for (int x = 0; x < p.size(); ++x) {
        for (int y = 0; y < p.size(); ++y) {
            if (x == y) continue;
            int z = meet(p, x, y);
            const auto& xlow = p.lower_covers(x);
            if (std::find(xlow.begin(), xlow.end(), z) == xlow.end()) continue;
            int w = join(p, x, y);
            const auto& wlow = p.lower_covers(w);
            if (std::find(wlow.begin(), wlow.end(), y) == wlow.end())
                return {false, {x, y}};
        }
    }
    return {true, {-1, -1}};
}

bool is_semimodular(const FinitePoset& p) { return check_semimodular(p).ok; }

GradedCheck check_jordan_dedekind(const FinitePoset& p) {
    auto order = topo_order(p);
    for (int x = 0; x < p.size(); ++x) {
        auto d = distances_from(p, x, order);
        for (int y = 0; y < p.size(); ++y) {
            if (d.dmin[y] == kInf || d.dmin[y] == d.dmax[y]) continue;
            GradedCheck bad;
            bad.ok = false;
            bad.interval = {x, y};
            bad.chain_a = backtrack(d.pmin, x, y);
            bad.chain_b = backtrack(d.pmax, x, y);
            return bad;
        }
    }
    GradedCheck good;
    good.ok = true;
    return good;
}

bool is_jordan_dedekind(const FinitePoset& p) {
    return check_jordan_dedekind(p).ok;
}

int height(const FinitePoset& p, int x, int y) {
    if (!p.leq(x, y))
        throw NotComparableError("height(" + std::to_string(x) + "," +
                                 std::to_string(y) + "): not x <= y");
    auto d = distances_from(p, x, topo_order(p));
    if (d.dmin[y] != d.dmax[y])
        throw NotGradedError("interval [" + std::to_string(x) + "," +
                                 std::to_string(y) +
                                 "] has maximal chains of unequal length",
                             x, y);
    return d.dmin[y];
}

int signed_height(const FinitePoset& p, int x, int y) {
    if (p.leq(x, y)) return height(p, x, y);
    if (p.leq(y, x)) return -height(p, y, x);
    throw NotComparableError("signed_height(" + std::to_string(x) + "," +
                             std::to_string(y) + "): incomparable");
}

namespace detail {

namespace {

using StructureKey = std::pair<int, std::vector<std::pair<int, int>>>;

template <typename T>
T memoized(const FinitePoset& p, std::map<StructureKey, T>& cache,
           std::mutex& mu, T (*compute)(const FinitePoset&)) {
    StructureKey key{p.size(), p.covers()};
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    T value = compute(p);
    std::lock_guard<std::mutex> lock(mu);
    cache.emplace(std::move(key), value);
    return value;
}

}  // namespace

bool lattice_cached(const FinitePoset& p) {
    static std::map<StructureKey, bool> cache;
    static std::mutex mu;
    return memoized<bool>(p, cache, mu, &is_lattice);
}

SemimodularCheck semimodular_cached(const FinitePoset& p) {
    static std::map<StructureKey, SemimodularCheck> cache;
    static std::mutex mu;
    return memoized<SemimodularCheck>(p, cache, mu, &check_semimodular);
}

}  // namespace detail

HeightTable::HeightTable(const FinitePoset& p) : n_(p.size()) {
    h_.assign(static_cast<std::size_t>(n_) * n_, -1);
    auto order = topo_order(p);
    for (int x = 0; x < n_; ++x) {
        auto d = distances_from(p, x, order);
        for (int y = 0; y < n_; ++y) {
            if (d.dmin[y] == kInf) continue;
            if (d.dmin[y] != d.dmax[y])
                throw NotGradedError("interval [" + std::to_string(x) + "," +
                                         std::to_string(y) + "] not graded",
                                     x, y);
            h_[static_cast<std::size_t>(x) * n_ + y] = d.dmin[y];
        }
    }
}

}  // namespace latcut
