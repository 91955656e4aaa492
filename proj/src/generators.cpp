#include "latcut/generators.hpp"

#include <algorithm>
#include <bit>
#include <random>
#include <string>

namespace latcut {

FinitePoset boolean_lattice(int n) {
    if (n < 1 || n > 10)
        throw ParamError("boolean lattice order must be in 1..10");
    int size = 1 << n;
    std::vector<std::pair<int, int>> edges;
    for (int s = 0; s < size; ++s)
        for (int i = 0; i < n; ++i)
            if (!(s & (1 << i))) edges.emplace_back(s, s | (1 << i));
    return FinitePoset(size, edges);
}

FinitePoset chain_poset(int n) {
    if (n < 1) throw ParamError("chain length must be positive");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return FinitePoset(n, edges);
}

FinitePoset antichain_poset(int n) {
    if (n < 1) throw ParamError("antichain size must be positive");
    return FinitePoset(n, {});
}

FinitePoset diamond() {
    return FinitePoset(5, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 4}});
}

FinitePoset pentagon() {
    return FinitePoset(5, {{0, 1}, {0, 2}, {2, 3}, {1, 4}, {3, 4}});
}

FinitePoset divisor_lattice(long m) {
    if (m < 1) throw ParamError("divisor lattice needs m >= 1");
    std::vector<long> divs;
    for (long d = 1; d * d <= m; ++d) {
        if (m % d) continue;
        divs.push_back(d);
        if (d != m / d) divs.push_back(m / d);
    }
    std::sort(divs.begin(), divs.end());
    if (divs.size() > 4096) throw SizeError("too many divisors");
    int n = static_cast<int>(divs.size());
    std::vector<std::pair<int, int>> edges;
    std::vector<std::string> labels;
    for (int i = 0; i < n; ++i) {
        labels.push_back(std::to_string(divs[i]));
        for (int j = i + 1; j < n; ++j)
            if (divs[j] % divs[i] == 0) edges.emplace_back(i, j);
    }
    return FinitePoset(n, edges, std::move(labels));
}

namespace {

void rgs_recurse(std::vector<int>& cur, int n, int max_used,
                 std::vector<std::vector<int>>& out) {
    if (static_cast<int>(cur.size()) == n) {
        out.push_back(cur);
        return;
    }
    for (int v = 0; v <= max_used + 1; ++v) {
        cur.push_back(v);
        rgs_recurse(cur, n, std::max(max_used, v), out);
        cur.pop_back();
    }
}

// x refines y: blocks of x sit inside blocks of y
bool refines(const std::vector<int>& x, const std::vector<int>& y) {
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = i + 1; j < x.size(); ++j)
            if (x[i] == x[j] && y[i] != y[j]) return false;
    return true;
}

}  // namespace

FinitePoset partition_lattice(int n) {
    if (n < 1 || n > 6) throw ParamError("partition lattice order must be in 1..6");
    std::vector<std::vector<int>> rgs;
    std::vector<int> cur{0};
    rgs_recurse(cur, n, 0, rgs);  // emitted in lexicographic order
    int size = static_cast<int>(rgs.size());
    std::vector<std::pair<int, int>> edges;
    std::vector<std::string> labels;
    for (int i = 0; i < size; ++i) {
        std::string l;
        for (int v : rgs[i]) l += std::to_string(v);
        labels.push_back(std::move(l));
        for (int j = 0; j < size; ++j)
            if (i != j && refines(rgs[i], rgs[j])) edges.emplace_back(i, j);
    }
    return FinitePoset(size, edges, std::move(labels));
}

FinitePoset product_poset(const FinitePoset& p, const FinitePoset& q) {
    int np = p.size(), nq = q.size();
    if (static_cast<long>(np) * nq > 4096)
        throw SizeError("product exceeds the element cap");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < np; ++i)
        for (int j = 0; j < nq; ++j) {
            int id = i * nq + j;
            for (int i2 : p.upper_covers(i)) edges.emplace_back(id, i2 * nq + j);
            for (int j2 : q.upper_covers(j)) edges.emplace_back(id, i * nq + j2);
        }
    return FinitePoset(np * nq, edges);
}

FinitePoset downset_lattice(const FinitePoset& q, int cap) {
    if (q.size() > 20) throw SizeError("base poset too large for downsets");
    std::vector<std::uint32_t> downsets;
    std::uint32_t full = q.size() == 32 ? ~0u : (1u << q.size()) - 1;
    for (std::uint32_t mask = 0;; ++mask) {
        bool closed = true;
        for (int v = 0; v < q.size() && closed; ++v) {
            if (!(mask & (1u << v))) continue;
            for (int u : q.lower_covers(v))
                if (!(mask & (1u << u))) {
                    closed = false;
                    break;
                }
        }
        if (closed) {
            downsets.push_back(mask);
            if (static_cast<int>(downsets.size()) > cap)
                throw SizeError("downset count exceeds cap " +
                                std::to_string(cap));
        }
        if (mask == full) break;
    }
    // masks are generated ascending; covers add exactly one element
    int n = static_cast<int>(downsets.size());
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            std::uint32_t d = downsets[i] ^ downsets[j];
            if ((downsets[i] & downsets[j]) == downsets[i] &&
                std::popcount(d) == 1)
                edges.emplace_back(i, j);
        }
    return FinitePoset(n, edges);
}

FinitePoset random_poset(int n, double edge_prob, std::uint64_t seed) {
    if (n < 1 || n > 20) throw ParamError("random poset size must be in 1..20");
    if (edge_prob < 0.0 || edge_prob > 1.0)
        throw ParamError("edge probability must be in [0,1]");
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (coin(rng) < edge_prob) edges.emplace_back(i, j);
    return FinitePoset(n, edges);
}

namespace {

int parse_int(const std::string& s, const char* what) {
    try {
        std::size_t pos = 0;
        int v = std::stoi(s, &pos);
        if (pos != s.size()) throw ParamError("");
        return v;
    } catch (const std::exception&) {
        throw ParamError(std::string("invalid integer for ") + what + ": " + s);
    }
}

double parse_prob(const std::string& s) {
    try {
        std::size_t pos = 0;
        double v = std::stod(s, &pos);
        if (pos != s.size()) throw ParamError("");
        return v;
    } catch (const std::exception&) {
        throw ParamError("invalid probability: " + s);
    }
}

FinitePoset parse_spec(const std::vector<std::string>& tok, std::size_t& i,
                       std::uint64_t seed) {
    if (i >= tok.size()) throw ParamError("missing generator kind");
    const std::string kind = tok[i++];
    auto need = [&](const char* what) -> const std::string& {
        if (i >= tok.size())
            throw ParamError(std::string(kind) + ": missing parameter " + what);
        return tok[i++];
    };
    if (kind == "boolean") return boolean_lattice(parse_int(need("n"), "n"));
    if (kind == "chain") return chain_poset(parse_int(need("n"), "n"));
    if (kind == "antichain") return antichain_poset(parse_int(need("n"), "n"));
    if (kind == "diamond") return diamond();
    if (kind == "pentagon") return pentagon();
    if (kind == "divisor") return divisor_lattice(parse_int(need("m"), "m"));
    if (kind == "partition") return partition_lattice(parse_int(need("n"), "n"));
    if (kind == "product") {
        FinitePoset a = parse_spec(tok, i, seed);
        FinitePoset b = parse_spec(tok, i, seed);
        return product_poset(a, b);
    }
    if (kind == "downset") {
        FinitePoset base = parse_spec(tok, i, seed);
        return downset_lattice(base);
    }
    if (kind == "random_poset") {
        int n = parse_int(need("n"), "n");
        double pr = parse_prob(need("edge_prob"));
        return random_poset(n, pr, seed);
    }
    throw ParamError("unknown generator kind: " + kind);
}

}  // namespace

FinitePoset generate(const GeneratorSpec& spec) {
    std::vector<std::string> tok{spec.kind};
    tok.insert(tok.end(), spec.params.begin(), spec.params.end());
    std::size_t i = 0;
    FinitePoset p = parse_spec(tok, i, spec.seed.value_or(0));
    if (i != tok.size()) throw ParamError("trailing generator parameters");
    return p;
}

}  // namespace latcut
