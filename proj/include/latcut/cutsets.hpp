#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "latcut/levels.hpp"
#include "latcut/poset.hpp"

namespace latcut {

/// Resource limits for chain and cutset enumeration.
struct Budget {
    std::size_t chain_cap = 1'000'000;   // maximal_chains listing
    std::size_t enum_chain_cap = 10'000; // chain count allowed for cutset search
    std::size_t node_budget = 10'000'000;// backtracking nodes

    static Budget scaled(std::size_t n) {
        Budget b;
        b.chain_cap = n;
        b.enum_chain_cap = n;
        b.node_budget = n * 1000;
        return b;
    }
};

struct CutsetCheck {
    bool ok = false;
    std::optional<Chain> offender;  // first chain (lex order) hit != once
};

/// A is an antichain cutset iff every maximal chain meets it exactly once.
CutsetCheck check_antichain_cutset(const FinitePoset& p,
                                   const std::vector<int>& a,
                                   const Budget& budget = {});
bool is_antichain_cutset(const FinitePoset& p, const std::vector<int>& a,
                         const Budget& budget = {});

/// All antichain cutsets, lexicographically ordered, via per-chain
/// backtracking (one element per maximal chain, pairwise incomparable).
std::vector<std::vector<int>> enumerate_antichain_cutsets(
    const FinitePoset& p, const Budget& budget = {});

enum class MismatchKind { level_not_cutset, cutset_not_level };

struct Mismatch {
    std::vector<int> set;
    MismatchKind kind;
    Chain chain;                      // offending chain (level_not_cutset)
    std::pair<int, int> elements{-1, -1};  // pair in different classes
};

struct AnalysisReport {
    bool holds = false;
    std::vector<std::vector<int>> level_classes;
    std::vector<std::vector<int>> cutsets;
    std::vector<Mismatch> mismatches;
};

/// Compares level classes with enumerated antichain cutsets; requires a
/// semimodular lattice.
AnalysisReport verify_theorem(const FinitePoset& p, const Budget& budget = {});

/// Same comparison without the semimodularity gate (negative controls).
AnalysisReport compare_unchecked(const FinitePoset& p,
                                 const Budget& budget = {});

/// The element of a maximal chain lying in the level class of `a`, located
/// arithmetically from heights above a meet, never by class search.
int level_chain_intersection(const FinitePoset& p, const Chain& c, int a);

struct WitnessConfig {
    int a, b, x, y, z, w;
};

struct WitnessChain {
    Chain chain;
    std::vector<int> hits;  // elements of the tested set on the chain
    std::optional<WitnessConfig> config;
};

/// For a non-empty antichain A that is not a level class, constructs a
/// maximal chain disjoint from A, certifying A is not an antichain cutset.
WitnessChain proof_witness_chain(const FinitePoset& p,
                                 const std::vector<int>& a);

}  // namespace latcut
