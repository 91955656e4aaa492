#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "latcut/errors.hpp"

namespace latcut {

/// A chain is a strictly increasing sequence of element ids.
/// Maximal chains run from a minimal to a maximal element along covers.
using Chain = std::vector<int>;

/// Finite poset over dense ids 0..n-1, stored as the cover relation
/// (transitive reduction) plus precomputed reachability. Immutable after
/// construction; all member queries are const and thread-safe.
class FinitePoset {
public:
    /// Builds from arbitrary order-generating edges (a,b) meaning a < b.
    /// Redundant edges are reduced away; covers become the transitive
    /// reduction of the closure. Throws EmptyError on n=0, BoundsError on
    /// out-of-range ids, CycleError if the closure violates antisymmetry.
    FinitePoset(int n, const std::vector<std::pair<int, int>>& edges,
                std::vector<std::string> labels = {});

    int size() const { return n_; }

    /// x <= y in the order relation (reflexive).
    bool leq(int x, int y) const {
        check_id(x);
        check_id(y);
        return x == y || bit(up_[x], y);
    }
    bool less(int x, int y) const {
        check_id(x);
        check_id(y);
        return bit(up_[x], y);
    }
    bool comparable(int x, int y) const { return leq(x, y) || leq(y, x); }

    const std::vector<int>& upper_covers(int x) const {
        check_id(x);
        return up_covers_[x];
    }
    const std::vector<int>& lower_covers(int x) const {
        check_id(x);
        return down_covers_[x];
    }

    std::vector<int> minimal_elements() const;
    std::vector<int> maximal_elements() const;

    /// All cover pairs (lower, upper), sorted.
    const std::vector<std::pair<int, int>>& covers() const { return covers_; }

    const std::vector<std::string>& labels() const { return labels_; }

    bool operator==(const FinitePoset& o) const {
        return n_ == o.n_ && covers_ == o.covers_ && labels_ == o.labels_;
    }

    void check_id(int x) const {
        if (x < 0 || x >= n_)
            throw BoundsError("element id " + std::to_string(x) +
                              " out of range [0," + std::to_string(n_) + ")");
    }

private:
    using Row = std::vector<std::uint64_t>;
    static bool bit(const Row& r, int i) {
        return (r[static_cast<std::size_t>(i) >> 6] >> (i & 63)) & 1u;
    }

    int n_ = 0;
    std::vector<Row> up_;  // strict reachability: up_[x] has bit y iff x < y
    std::vector<std::pair<int, int>> covers_;
    std::vector<std::vector<int>> up_covers_, down_covers_;  // sorted
    std::vector<std::string> labels_;
};

FinitePoset build_poset(int n, const std::vector<std::pair<int, int>>& edges,
                        std::vector<std::string> labels = {});

inline bool leq(const FinitePoset& p, int x, int y) { return p.leq(x, y); }

/// All maximal chains, in lexicographic order of element sequences.
/// Throws LimitError when more than `cap` chains exist.
std::vector<Chain> maximal_chains(const FinitePoset& p,
                                  std::size_t cap = 1'000'000);

/// True iff no two distinct members of a are comparable. Empty set counts.
bool is_antichain(const FinitePoset& p, const std::vector<int>& a);

struct IntervalSubposet {
    FinitePoset poset;
    std::vector<int> parent_ids;  // sub id -> parent id, ascending
};

/// Induced subposet on [x,y] with covers recomputed.
/// Throws NotComparableError unless x <= y.
IntervalSubposet interval_subposet(const FinitePoset& p, int x, int y);

}  // namespace latcut
