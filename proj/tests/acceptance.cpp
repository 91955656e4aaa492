// Acceptance suite: one line per criterion, nonzero exit on any failure.
// argv[1] is the path to the latcut CLI binary (for exit-code checks).

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "latcut/cutsets.hpp"
#include "latcut/generators.hpp"
#include "latcut/io.hpp"
#include "latcut/lattice.hpp"
#include "latcut/levels.hpp"
#include "latcut/poset.hpp"

using namespace latcut;
using Clock = std::chrono::steady_clock;

namespace {

int g_failures = 0;
std::string g_cli;

void report(int num, const std::string& name, bool ok,
            const std::string& detail = "") {
    std::cout << "criterion " << num << " (" << name << "): "
              << (ok ? "PASS" : "FAIL");
    if (!detail.empty()) std::cout << " [" << detail << "]";
    std::cout << "\n";
    if (!ok) ++g_failures;
}

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::vector<std::vector<int>> sorted_sets(std::vector<std::vector<int>> s) {
    std::sort(s.begin(), s.end());
    return s;
}

int cli_exit(const std::string& cmd) {
    int status = std::system(cmd.c_str());
    if (status < 0) return -1;
    return WEXITSTATUS(status);
}

// corpus shared by criteria 6 and 7
std::vector<FinitePoset> semimodular_fixtures() {
    std::vector<FinitePoset> out;
    for (int n = 1; n <= 4; ++n) out.push_back(boolean_lattice(n));
    out.push_back(diamond());
    out.push_back(divisor_lattice(12));
    out.push_back(divisor_lattice(360));
    out.push_back(partition_lattice(4));
    out.push_back(product_poset(chain_poset(3), chain_poset(4)));
    return out;
}

FinitePoset fuzz_lattice(std::uint64_t seed) {
    int n = 1 + static_cast<int>(seed % 5);
    double p = (1.0 + static_cast<double>((seed / 5) % 9)) / 10.0;
    return downset_lattice(random_poset(n, p, seed));
}

void criterion1() {
    bool ok = true;
    std::string detail;
    for (int n = 1; n <= 4 && ok; ++n) {
        auto t0 = Clock::now();
        auto p = boolean_lattice(n);
        auto rpt = verify_theorem(p);
        auto levels = sorted_sets(levels_by_height(p));
        ok = rpt.holds &&
             static_cast<int>(rpt.level_classes.size()) == n + 1 &&
             sorted_sets(rpt.level_classes) == levels;
        double dt = seconds_since(t0);
        if (dt >= 1.0) {
            ok = false;
            detail = "B_" + std::to_string(n) + " took " + std::to_string(dt) +
                     "s";
        }
        if (!ok && detail.empty()) detail = "B_" + std::to_string(n);
    }
    report(1, "theorem on Boolean lattices B_1..B_4", ok, detail);
}

void criterion2() {
    auto t0 = Clock::now();
    bool ok = true;
    std::string detail;
    std::vector<std::pair<std::string, FinitePoset>> fixtures;
    fixtures.emplace_back("M_3", diamond());
    fixtures.emplace_back("divisor(12)", divisor_lattice(12));
    fixtures.emplace_back("divisor(360)", divisor_lattice(360));
    fixtures.emplace_back("partition(4)", partition_lattice(4));
    fixtures.emplace_back("chain(3)xchain(4)",
                          product_poset(chain_poset(3), chain_poset(4)));
    for (auto& [name, p] : fixtures) {
        auto rpt = verify_theorem(p);
        if (!rpt.holds) {
            ok = false;
            detail = name;
            break;
        }
        if (name == "partition(4)") {
            std::vector<std::size_t> sizes;
            for (const auto& c : rpt.level_classes) sizes.push_back(c.size());
            std::sort(sizes.begin(), sizes.end());
            if (rpt.level_classes.size() != 4 ||
                sizes != std::vector<std::size_t>{1, 1, 6, 7}) {
                ok = false;
                detail = "partition(4) class sizes";
            }
        }
    }
    double dt = seconds_since(t0);
    if (dt >= 5.0) {
        ok = false;
        detail = "took " + std::to_string(dt) + "s";
    }
    report(2, "theorem on non-Boolean semimodular lattices", ok, detail);
}

void criterion3() {
    bool ok = true;
    std::string detail;
    auto rpt = compare_unchecked(pentagon());
    using Sets = std::vector<std::vector<int>>;
    if (rpt.holds) { ok = false; detail = "holds"; }
    if (rpt.cutsets != Sets{{0}, {1, 2}, {1, 3}, {4}}) {
        ok = false;
        detail = "cutset list";
    }
    if (rpt.level_classes != Sets{{0}, {1, 2}, {3}, {4}}) {
        ok = false;
        detail = "level list";
    }
    bool saw_level = false, saw_cutset = false;
    for (const auto& m : rpt.mismatches) {
        if (m.kind == MismatchKind::level_not_cutset &&
            m.set == std::vector<int>{3} && m.chain == Chain{0, 1, 4})
            saw_level = true;
        if (m.kind == MismatchKind::cutset_not_level &&
            m.set == std::vector<int>{1, 3})
            saw_cutset = true;
    }
    if (!saw_level || !saw_cutset) { ok = false; detail = "mismatches"; }
    int code = cli_exit(g_cli + " gen pentagon | " + g_cli +
                        " verify - --unchecked >/dev/null 2>&1");
    if (code != 1) {
        ok = false;
        detail = "exit code " + std::to_string(code);
    }
    int code0 = cli_exit(g_cli + " gen boolean 3 | " + g_cli +
                         " verify - >/dev/null 2>&1");
    if (code0 != 0) {
        ok = false;
        detail = "B_3 pipeline exit " + std::to_string(code0);
    }
    report(3, "negative control on the pentagon", ok, detail);
}

void criterion4() {
    auto t0 = Clock::now();
    bool ok = true;
    std::string detail;
    for (std::uint64_t seed = 0; seed < 300 && ok; ++seed) {
        int n = 2 + static_cast<int>(seed % 9);
        double prob = static_cast<double>(seed % 11) / 10.0;
        auto p = random_poset(n, prob, seed);
        auto fast = enumerate_antichain_cutsets(p);
        auto chains = maximal_chains(p);
        std::vector<std::vector<int>> brute;
        for (unsigned mask = 0; mask < (1u << n); ++mask) {
            bool cutset = true;
            for (const auto& c : chains) {
                int hits = 0;
                for (int v : c) hits += (mask >> v) & 1;
                if (hits != 1) { cutset = false; break; }
            }
            if (!cutset) continue;
            std::vector<int> s;
            for (int v = 0; v < n; ++v)
                if ((mask >> v) & 1) s.push_back(v);
            brute.push_back(std::move(s));
        }
        std::sort(brute.begin(), brute.end());
        if (fast != brute) {
            ok = false;
            detail = "seed " + std::to_string(seed);
        }
    }
    double dt = seconds_since(t0);
    if (dt >= 60.0) { ok = false; detail = "took " + std::to_string(dt) + "s"; }
    report(4, "cutset enumeration vs subset oracle, 300 posets", ok, detail);
}

void criterion5() {
    bool ok = true;
    std::string detail;
    std::vector<FinitePoset> lattices;
    for (std::uint64_t seed = 0; seed < 200; ++seed)
        lattices.push_back(fuzz_lattice(seed));
    for (std::size_t i = 0; i < lattices.size() && ok; ++i) {
        for (const auto& cls : level_classes(lattices[i]).classes)
            if (!is_antichain_cutset(lattices[i], cls)) {
                ok = false;
                detail = "level class not cutset, seed " + std::to_string(i);
            }
    }
    // 100 sampled antichains that are not level classes
    std::mt19937_64 rng(999);
    int sampled = 0;
    for (std::size_t i = 0; sampled < 100 && ok; i = (i + 1) % lattices.size()) {
        const auto& p = lattices[i];
        auto part = level_classes(p);
        std::vector<int> perm(p.size());
        for (int v = 0; v < p.size(); ++v) perm[v] = v;
        std::shuffle(perm.begin(), perm.end(), rng);
        std::vector<int> a;
        for (int v : perm) {
            if (rng() % 2) continue;
            bool clash = false;
            for (int u : a)
                if (p.comparable(u, v)) clash = true;
            if (!clash) a.push_back(v);
        }
        std::sort(a.begin(), a.end());
        if (a.empty()) continue;
        if (std::any_of(part.classes.begin(), part.classes.end(),
                        [&](const auto& c) { return c == a; }))
            continue;
        ++sampled;
        auto wit = proof_witness_chain(p, a);
        auto chains = maximal_chains(p);
        bool maximal = std::find(chains.begin(), chains.end(), wit.chain) !=
                       chains.end();
        bool disjoint = true;
        for (int v : wit.chain)
            if (std::binary_search(a.begin(), a.end(), v)) disjoint = false;
        auto scan = check_antichain_cutset(p, a);
        if (!maximal || !disjoint || scan.ok) {
            ok = false;
            detail = "witness " + std::to_string(sampled);
        }
    }
    report(5, "fuzzed theorem + proof witnesses, 200 lattices", ok, detail);
}

void criterion6() {
    bool ok = true;
    std::string detail;
    auto fixtures = semimodular_fixtures();
    for (std::uint64_t seed = 0; seed < 200; ++seed)
        fixtures.push_back(fuzz_lattice(seed));
    for (std::size_t i = 0; i < fixtures.size() && ok; ++i) {
        const auto& p = fixtures[i];
        auto part = level_classes(p);
        for (int x = 0; x < p.size() && ok; ++x)
            for (int y = 0; y < p.size(); ++y)
                if (same_level_via_height(p, x, y) !=
                    (part.class_of[x] == part.class_of[y])) {
                    ok = false;
                    detail = "height/level disagreement, fixture " +
                             std::to_string(i);
                    break;
                }
        if (!ok) break;
        auto chains = maximal_chains(p);
        if (chains.size() > 200) continue;
        for (const auto& c : chains)
            for (int a = 0; a < p.size(); ++a)
                if (part.class_of[level_chain_intersection(p, c, a)] !=
                    part.class_of[a]) {
                    ok = false;
                    detail = "chain intersection, fixture " + std::to_string(i);
                }
    }
    report(6, "height/level equivalence + chain intersection", ok, detail);
}

void criterion7() {
    bool ok = true;
    std::string detail;
    auto corpus = semimodular_fixtures();
    corpus.push_back(pentagon());
    corpus.push_back(antichain_poset(4));
    corpus.push_back(chain_poset(6));
    for (std::uint64_t seed = 0; seed < 100; ++seed)
        corpus.push_back(fuzz_lattice(seed));
    for (std::uint64_t seed = 0; seed < 100; ++seed)
        corpus.push_back(random_poset(2 + seed % 9, 0.3, seed));
    for (std::size_t i = 0; i < corpus.size() && ok; ++i) {
        const auto& p = corpus[i];
        FinitePoset rebuilt(p.size(), p.covers());
        if (!(rebuilt.covers() == p.covers())) {
            ok = false;
            detail = "reduction idempotence, fixture " + std::to_string(i);
        }
        auto parsed = parse_document(emit_document(p));
        if (!(parsed.poset == p) || parsed.normalized) {
            ok = false;
            detail = "round trip, fixture " + std::to_string(i);
        }
        if (is_jordan_dedekind(p)) {
            HeightTable table(p);
            for (int x = 0; x < p.size(); ++x)
                for (int y = 0; y < p.size(); ++y) {
                    if (!p.leq(x, y)) continue;
                    for (int z = 0; z < p.size(); ++z)
                        if (p.leq(y, z) &&
                            table.h(x, z) != table.h(x, y) + table.h(y, z)) {
                            ok = false;
                            detail = "additivity, fixture " + std::to_string(i);
                        }
                }
        }
    }
    long factorial = 1;
    for (int n = 1; n <= 5; ++n) {
        factorial *= n;
        if (static_cast<long>(maximal_chains(boolean_lattice(n)).size()) !=
            factorial) {
            ok = false;
            detail = "B_" + std::to_string(n) + " chain count";
        }
    }
    report(7, "structural laws across the corpus", ok, detail);
}

}  // namespace

int main(int argc, char** argv) {
    if (argc > 1) g_cli = argv[1];
    try {
        criterion1();
        criterion2();
        criterion3();
        criterion4();
        criterion5();
        criterion6();
        criterion7();
    } catch (const std::exception& e) {
        std::cerr << "unexpected exception: " << e.what() << "\n";
        return 1;
    }
    if (g_failures) {
        std::cout << g_failures << " criteria failed\n";
        return 1;
    }
    std::cout << "all criteria passed\n";
    return 0;
}
