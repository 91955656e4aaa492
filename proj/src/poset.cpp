#include "latcut/poset.hpp"

#include <algorithm>
#include <bit>

namespace latcut {

namespace {

using Row = std::vector<std::uint64_t>;

bool get_bit(const Row& r, int i) {
    return (r[static_cast<std::size_t>(i) >> 6] >> (i & 63)) & 1u;
}
void set_bit(Row& r, int i) {
    r[static_cast<std::size_t>(i) >> 6] |= std::uint64_t{1} << (i & 63);
}

}  // namespace

FinitePoset::FinitePoset(int n, const std::vector<std::pair<int, int>>& edges,
                         std::vector<std::string> labels)
    : n_(n) {
    if (n <= 0) throw EmptyError("poset must have at least one element");
    for (auto [a, b] : edges) {
        if (a < 0 || a >= n || b < 0 || b >= n)
            throw BoundsError("edge (" + std::to_string(a) + "," +
                              std::to_string(b) + ") out of range for n=" +
                              std::to_string(n));
    }
    if (!labels.empty()) {
        if (static_cast<int>(labels.size()) != n)
            throw ParamError("label count must equal n");
        auto sorted = labels;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw ParamError("labels must be pairwise distinct");
    }
    labels_ = std::move(labels);

    std::vector<std::vector<int>> adj(n);
    for (auto [a, b] : edges) adj[a].push_back(b);

    // Strict reachability by DFS from each element.
    const std::size_t words = (static_cast<std::size_t>(n) + 63) / 64;
    up_.assign(n, Row(words, 0));
    std::vector<int> stack;
    std::vector<char> seen(n);
    for (int s = 0; s < n; ++s) {
        std::fill(seen.begin(), seen.end(), 0);
        stack.assign(adj[s].begin(), adj[s].end());
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            if (seen[v]) continue;
            seen[v] = 1;
            set_bit(up_[s], v);
            for (int w : adj[v])
                if (!seen[w]) stack.push_back(w);
        }
        if (get_bit(up_[s], s))
            throw CycleError("cycle through element " + std::to_string(s));
    }

    // Transitive reduction: (a,b) is a cover iff nothing sits strictly between.
    up_covers_.assign(n, {});
    down_covers_.assign(n, {});
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            if (!get_bit(up_[a], b)) continue;
            bool intermediate = false;
            for (std::size_t w = 0; w < words && !intermediate; ++w) {
                // c with a < c and c < b
                std::uint64_t m = up_[a][w];
                if (!m) continue;
                while (m) {
                    int c = static_cast<int>(w * 64) +
                            std::countr_zero(m);
                    m &= m - 1;
                    if (c != b && get_bit(up_[c], b)) {
                        intermediate = true;
                        break;
                    }
                }
            }
            if (!intermediate) {
                covers_.emplace_back(a, b);
                up_covers_[a].push_back(b);
                down_covers_[b].push_back(a);
            }
        }
    }
    std::sort(covers_.begin(), covers_.end());
    for (auto& v : up_covers_) std::sort(v.begin(), v.end());
    for (auto& v : down_covers_) std::sort(v.begin(), v.end());
}

FinitePoset build_poset(int n, const std::vector<std::pair<int, int>>& edges,
                        std::vector<std::string> labels) {
    return FinitePoset(n, edges, std::move(labels));
}

std::vector<int> FinitePoset::minimal_elements() const {
    std::vector<int> out;
    for (int v = 0; v < n_; ++v)
        if (down_covers_[v].empty()) out.push_back(v);
    return out;
}

std::vector<int> FinitePoset::maximal_elements() const {
    std::vector<int> out;
    for (int v = 0; v < n_; ++v)
        if (up_covers_[v].empty()) out.push_back(v);
    return out;
}

namespace {

void chains_dfs(const FinitePoset& p, Chain& cur, std::vector<Chain>& out,
                std::size_t cap) {
    const auto& ups = p.upper_covers(cur.back());
    if (ups.empty()) {
        if (out.size() >= cap)
            throw LimitError("maximal chain count exceeds cap " +
                             std::to_string(cap));
        out.push_back(cur);
        return;
    }
    for (int w : ups) {
        cur.push_back(w);
        chains_dfs(p, cur, out, cap);
        cur.pop_back();
    }
}

}  // namespace

std::vector<Chain> maximal_chains(const FinitePoset& p, std::size_t cap) {
    std::vector<Chain> out;
    Chain cur;
    for (int m : p.minimal_elements()) {
        cur.assign(1, m);
        chains_dfs(p, cur, out, cap);
    }
    return out;
}

bool is_antichain(const FinitePoset& p, const std::vector<int>& a) {
    for (int x : a) p.check_id(x);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = i + 1; j < a.size(); ++j)
            if (a[i] != a[j] && p.comparable(a[i], a[j])) return false;
    return true;
}

IntervalSubposet interval_subposet(const FinitePoset& p, int x, int y) {
    if (!p.leq(x, y))
        throw NotComparableError("interval [" + std::to_string(x) + "," +
                                 std::to_string(y) + "]: not x <= y");
    std::vector<int> ids;
    for (int z = 0; z < p.size(); ++z)
        if (p.leq(x, z) && p.leq(z, y)) ids.push_back(z);
    std::vector<int> local(p.size(), -1);
    for (std::size_t i = 0; i < ids.size(); ++i) local[ids[i]] = static_cast<int>(i);
    std::vector<std::pair<int, int>> edges;
    for (int z : ids)
        for (int w : p.upper_covers(z))
            if (local[w] >= 0) edges.emplace_back(local[z], local[w]);
    return {FinitePoset(static_cast<int>(ids.size()), edges), std::move(ids)};
}

}  // namespace latcut
