#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "latcut/poset.hpp"

namespace latcut {

FinitePoset boolean_lattice(int n);   // ids are subset bitmasks, 1 <= n <= 10
FinitePoset chain_poset(int n);       // ids are positions
FinitePoset antichain_poset(int n);
FinitePoset diamond();                // M_3
FinitePoset pentagon();               // N_5
FinitePoset divisor_lattice(long m);  // ids index divisors ascending
FinitePoset partition_lattice(int n); // ids index restricted-growth strings
                                      // in sorted order, refinement order
FinitePoset product_poset(const FinitePoset& p, const FinitePoset& q);

/// Lattice of down-closed subsets of q under inclusion; ids index downsets
/// in sorted bitmask order. Distributive, hence semimodular.
FinitePoset downset_lattice(const FinitePoset& q, int cap = 4096);

/// Random DAG on a fixed topological order, reduced. Reproducible per seed.
FinitePoset random_poset(int n, double edge_prob, std::uint64_t seed);

struct GeneratorSpec {
    std::string kind;                 // boolean, chain, antichain, diamond,
                                      // pentagon, divisor, partition, product,
                                      // downset, random_poset
    std::vector<std::string> params;  // kind-specific
    std::optional<std::uint64_t> seed;
};

FinitePoset generate(const GeneratorSpec& spec);

}  // namespace latcut
