#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "latcut/poset.hpp"

namespace latcut {

/// Greatest lower bound if it exists and is unique.
std::optional<int> try_meet(const FinitePoset& p, int x, int y);
std::optional<int> try_join(const FinitePoset& p, int x, int y);

/// Throwing forms; NotLatticeError carries the offending pair and the
/// maximal lower (minimal upper) bounds found.
int meet(const FinitePoset& p, int x, int y);
int join(const FinitePoset& p, int x, int y);

bool is_lattice(const FinitePoset& p);

struct SemimodularCheck {
    bool ok = false;
    std::pair<int, int> witness{-1, -1};  // violating (x,y) when !ok
};

/// Lower covering condition, checked from the raw definition over all pairs:
/// x covers x^y implies xvy covers y. Requires a lattice.
SemimodularCheck check_semimodular(const FinitePoset& p);
bool is_semimodular(const FinitePoset& p);

struct GradedCheck {
    bool ok = false;
    std::pair<int, int> interval{-1, -1};
    Chain chain_a, chain_b;  // two maximal chains of the interval, unequal length
};

/// Jordan-Dedekind: within every interval all maximal chains have equal length.
GradedCheck check_jordan_dedekind(const FinitePoset& p);
bool is_jordan_dedekind(const FinitePoset& p);

/// Height of y above x: common cover-step count of maximal chains of [x,y].
/// Throws NotComparableError unless x <= y, NotGradedError if the interval's
/// chains disagree.
int height(const FinitePoset& p, int x, int y);

/// height(x,y) if x <= y, else -height(y,x).
int signed_height(const FinitePoset& p, int x, int y);

namespace detail {
/// Memoized verdicts keyed by poset structure; transparent accelerators for
/// the precondition gates that theorem operations re-check on every call.
bool lattice_cached(const FinitePoset& p);
SemimodularCheck semimodular_cached(const FinitePoset& p);
}  // namespace detail

/// Heights of all comparable pairs, built once. Requires every interval
/// graded (throws NotGradedError otherwise); then h is additive along
/// comparabilities.
class HeightTable {
public:
    explicit HeightTable(const FinitePoset& p);
    /// -1 when x,y incomparable or y < x.
    int h(int x, int y) const { return h_[static_cast<std::size_t>(x) * n_ + y]; }

private:
    int n_;
    std::vector<int> h_;
};

}  // namespace latcut
