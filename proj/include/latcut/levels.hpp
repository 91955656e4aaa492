#pragma once

#include <vector>

#include "latcut/poset.hpp"

namespace latcut {

/// Partition of the elements into level classes: equivalence classes of the
/// reflexive-transitive closure of x ~ y (some z is covered by both).
struct LevelPartition {
    std::vector<int> class_of;              // element -> class index
    std::vector<std::vector<int>> classes;  // sorted members, classes ordered
                                            // by smallest member
};

/// x ~ y: x == y, or some z is covered by both x and y.
bool tilde_related(const FinitePoset& p, int x, int y);

LevelPartition level_classes(const FinitePoset& p);

/// L_n = elements at height n above the unique least element.
/// Throws NoLeastElementError or NotGradedError.
std::vector<std::vector<int>> levels_by_height(const FinitePoset& p);

/// Same level iff equal height above the meet. Only endorsed on semimodular
/// lattices; throws NotLatticeError / NotSemimodularError otherwise.
bool same_level_via_height(const FinitePoset& p, int x, int y);

/// height(z,x) == height(z,y) for a common lower bound z of x and y.
bool common_lower_bound_height_check(const FinitePoset& p, int x, int y, int z);

}  // namespace latcut
