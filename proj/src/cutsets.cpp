#include "latcut/cutsets.hpp"

#include <algorithm>
#include <string>

#include "latcut/lattice.hpp"

namespace latcut {

namespace {

void require_lattice(const FinitePoset& p) {
    if (!detail::lattice_cached(p))
        throw NotLatticeError("poset is not a lattice", -1, -1);
}

void require_semimodular(const FinitePoset& p) {
    require_lattice(p);
    auto sm = detail::semimodular_cached(p);
    if (!sm.ok)
        throw NotSemimodularError("lattice is not semimodular",
                                  sm.witness.first, sm.witness.second);
}

std::vector<char> membership(const FinitePoset& p, const std::vector<int>& a) {
    std::vector<char> in(p.size(), 0);
    for (int x : a) {
        p.check_id(x);
        in[x] = 1;
    }
    return in;
}

}  // namespace

CutsetCheck check_antichain_cutset(const FinitePoset& p,
                                   const std::vector<int>& a,
                                   const Budget& budget) {
    auto in = membership(p, a);
    for (auto& chain : maximal_chains(p, budget.chain_cap)) {
        int hits = 0;
        for (int v : chain) hits += in[v];
        if (hits != 1) return {false, std::move(chain)};
    }
    return {true, std::nullopt};
}

bool is_antichain_cutset(const FinitePoset& p, const std::vector<int>& a,
                         const Budget& budget) {
    return check_antichain_cutset(p, a, budget).ok;
}

namespace {

struct CutsetSearch {
    const FinitePoset& p;
    const std::vector<Chain>& chains;
    const Budget& budget;
    std::size_t nodes = 0;
    std::vector<int> chosen;
    std::vector<char> in_set;
    std::vector<std::vector<int>> out;

    void run() {
        in_set.assign(p.size(), 0);
        recurse(0);
        for (auto& s : out) std::sort(s.begin(), s.end());
        std::sort(out.begin(), out.end());
    }

    void recurse(std::size_t i) {
        if (++nodes > budget.node_budget)
            throw LimitError("cutset search node budget exhausted");
        if (i == chains.size()) {
            out.push_back(chosen);
            return;
        }
        int hits = 0;
        for (int v : chains[i]) hits += in_set[v];
        if (hits == 1) {
            recurse(i + 1);
            return;
        }
        if (hits > 1) return;  // two chosen elements would be comparable
        for (int e : chains[i]) {
            bool clash = false;
            for (int c : chosen)
                if (p.comparable(e, c)) {
                    clash = true;
                    break;
                }
            if (clash) continue;
            chosen.push_back(e);
            in_set[e] = 1;
            recurse(i + 1);
            in_set[e] = 0;
            chosen.pop_back();
        }
    }
};

}  // namespace

std::vector<std::vector<int>> enumerate_antichain_cutsets(const FinitePoset& p,
                                                          const Budget& budget) {
    auto chains = maximal_chains(p, budget.enum_chain_cap);
    CutsetSearch search{p, chains, budget};
    search.run();
    return std::move(search.out);
}

namespace {

AnalysisReport compare_levels_and_cutsets(const FinitePoset& p,
                                          const Budget& budget) {
    AnalysisReport report;
    auto part = level_classes(p);
    report.level_classes = part.classes;
    report.cutsets = enumerate_antichain_cutsets(p, budget);

    for (const auto& cls : report.level_classes) {
        if (std::binary_search(report.cutsets.begin(), report.cutsets.end(),
                               cls))
            continue;
        auto check = check_antichain_cutset(p, cls, budget);
        if (check.ok)
            throw InternalError("level class missing from cutset enumeration");
        Mismatch m;
        m.set = cls;
        m.kind = MismatchKind::level_not_cutset;
        m.chain = *check.offender;
        report.mismatches.push_back(std::move(m));
    }
    for (const auto& cut : report.cutsets) {
        bool is_class = std::any_of(
            report.level_classes.begin(), report.level_classes.end(),
            [&](const auto& cls) { return cls == cut; });
        if (is_class) continue;
        Mismatch m;
        m.set = cut;
        m.kind = MismatchKind::cutset_not_level;
        for (std::size_t i = 0; i + 1 < cut.size() && m.elements.first < 0; ++i)
            for (std::size_t j = i + 1; j < cut.size(); ++j)
                if (part.class_of[cut[i]] != part.class_of[cut[j]]) {
                    m.elements = {cut[i], cut[j]};
                    break;
                }
        if (m.elements.first < 0 && !cut.empty()) {
            // proper subset of a single class: pair the smallest member with
            // a class element the cutset misses
            for (int v : part.classes[part.class_of[cut[0]]])
                if (!std::binary_search(cut.begin(), cut.end(), v)) {
                    m.elements = {cut[0], v};
                    break;
                }
        }
        report.mismatches.push_back(std::move(m));
    }
    report.holds = report.mismatches.empty();
    return report;
}

}  // namespace

AnalysisReport verify_theorem(const FinitePoset& p, const Budget& budget) {
    require_semimodular(p);
    return compare_levels_and_cutsets(p, budget);
}

AnalysisReport compare_unchecked(const FinitePoset& p, const Budget& budget) {
    require_lattice(p);
    return compare_levels_and_cutsets(p, budget);
}

namespace {

bool is_maximal_chain(const FinitePoset& p, const Chain& c) {
    if (c.empty()) return false;
    if (!p.lower_covers(c.front()).empty()) return false;
    if (!p.upper_covers(c.back()).empty()) return false;
    for (std::size_t i = 0; i + 1 < c.size(); ++i) {
        const auto& ups = p.upper_covers(c[i]);
        if (std::find(ups.begin(), ups.end(), c[i + 1]) == ups.end())
            return false;
    }
    return true;
}

}  // namespace

int level_chain_intersection(const FinitePoset& p, const Chain& c, int a) {
    p.check_id(a);
    require_semimodular(p);
    if (!is_maximal_chain(p, c))
        throw ParamError("chain is not a maximal chain of the poset");
    // take y at the top of the chain; z = a^y; the class element sits at
    // height h(z,y) - h(z,a) below y on the chain
    int y = c.back();
    int z = meet(p, a, y);
    int offset = height(p, z, y) - height(p, z, a);
    auto idx = static_cast<long>(c.size()) - 1 - offset;
    if (idx < 0 || idx >= static_cast<long>(c.size()))
        throw InternalError("height arithmetic left the chain");
    int x = c[static_cast<std::size_t>(idx)];
    auto part = level_classes(p);
    if (part.class_of[x] != part.class_of[a])
        throw InternalError("chain element not in the level class of a");
    return x;
}

WitnessChain proof_witness_chain(const FinitePoset& p,
                                 const std::vector<int>& a_set) {
    require_semimodular(p);
    if (a_set.empty()) throw ParamError("witness set must be non-empty");
    auto in_a = membership(p, a_set);
    std::vector<int> a_sorted;
    for (int v = 0; v < p.size(); ++v)
        if (in_a[v]) a_sorted.push_back(v);
    for (std::size_t i = 0; i < a_sorted.size(); ++i)
        for (std::size_t j = i + 1; j < a_sorted.size(); ++j)
            if (p.comparable(a_sorted[i], a_sorted[j]))
                throw NotAntichainError("set contains comparable pair",
                                        a_sorted[i], a_sorted[j]);

    auto part = level_classes(p);
    for (const auto& cls : part.classes)
        if (cls == a_sorted)
            throw IsLevelClassError("set is a level class; every maximal "
                                    "chain meets it exactly once");

    int a = a_sorted.front();
    const auto& level = part.classes[part.class_of[a]];

    // BFS over ~ within the level class of a, to the nearest element
    // outside A; neighbors visited ascending, so paths are lexicographic.
    std::vector<int> parent(p.size(), -1), dist(p.size(), -1);
    std::vector<int> queue{a};
    dist[a] = 0;
    int b = -1;
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        int u = queue[qi];
        if (b >= 0 && dist[u] >= dist[b]) break;
        for (int v : level) {
            if (v == u || dist[v] >= 0 || !tilde_related(p, u, v)) continue;
            dist[v] = dist[u] + 1;
            parent[v] = u;
            queue.push_back(v);
            if (!in_a[v] && (b < 0 || dist[v] < dist[b] ||
                             (dist[v] == dist[b] && v < b)))
                b = v;
        }
    }
    if (b < 0)
        throw InternalError("level class of a has no element outside the set");

    Chain path;
    for (int v = b; v >= 0; v = parent[v]) path.push_back(v);
    std::reverse(path.begin(), path.end());

    std::size_t i = 0;
    while (i + 1 < path.size() && in_a[path[i + 1]]) ++i;
    if (i + 1 >= path.size() || !in_a[path[i]])
        throw InternalError("~-path does not cross out of the set");
    int x = path[i], y = path[i + 1];
    int z = meet(p, x, y), w = join(p, x, y);

    auto covers = [&](int lo, int hi) {
        const auto& ups = p.upper_covers(lo);
        return std::find(ups.begin(), ups.end(), hi) != ups.end();
    };
    if (!covers(z, x) || !covers(z, y))
        throw InternalError("meet of ~-related pair is not covered by both");
    if (!covers(x, w) || !covers(y, w))
        throw InternalError("semimodularity step failed: join does not cover");

    // extend {z, y, w} to a maximal chain, smallest-id greedy
    Chain down{z};
    while (!p.lower_covers(down.back()).empty())
        down.push_back(p.lower_covers(down.back()).front());
    std::reverse(down.begin(), down.end());
    Chain chain = std::move(down);
    chain.push_back(y);
    chain.push_back(w);
    while (!p.upper_covers(chain.back()).empty())
        chain.push_back(p.upper_covers(chain.back()).front());

    if (!is_maximal_chain(p, chain))
        throw InternalError("witness extension is not a maximal chain");
    for (int v : chain) {
        if (in_a[v]) throw InternalError("witness chain meets the set");
        if (v != y && v != z && v != w && !p.comparable(v, x))
            throw InternalError("chain element outside [z,w] incomparable to x");
    }

    WitnessChain wit;
    wit.chain = std::move(chain);
    wit.config = WitnessConfig{a, b, x, y, z, w};
    return wit;
}

}  // namespace latcut
