#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace latcut {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Input validation
struct BoundsError : Error {
    using Error::Error;
};
struct EmptyError : Error {
    using Error::Error;
};
struct CycleError : Error {
    using Error::Error;
};
struct ParamError : Error {
    using Error::Error;
};
struct SizeError : Error {
    using Error::Error;
};
struct SyntaxError : Error {
    using Error::Error;
};

// Order-theoretic preconditions
struct NotComparableError : Error {
    using Error::Error;
};
struct NotGradedError : Error {
    NotGradedError(const std::string& msg, int lo, int hi)
        : Error(msg), interval(lo, hi) {}
    std::pair<int, int> interval;
};
struct NotLatticeError : Error {
    NotLatticeError(const std::string& msg, int x, int y,
                    std::vector<int> bounds = {})
        : Error(msg), pair(x, y), extremal_bounds(std::move(bounds)) {}
    std::pair<int, int> pair;
    // maximal lower bounds (meet) or minimal upper bounds (join) found
    std::vector<int> extremal_bounds;
};
struct NotSemimodularError : Error {
    NotSemimodularError(const std::string& msg, int x, int y)
        : Error(msg), witness(x, y) {}
    std::pair<int, int> witness;
};
struct NoLeastElementError : Error {
    using Error::Error;
};
struct NotAntichainError : Error {
    NotAntichainError(const std::string& msg, int x, int y)
        : Error(msg), pair(x, y) {}
    std::pair<int, int> pair;
};
struct IsLevelClassError : Error {
    using Error::Error;
};

// Resource budgets
struct LimitError : Error {
    using Error::Error;
};

// A postcondition that cannot fail under valid preconditions did fail.
struct InternalError : std::logic_error {
    using std::logic_error::logic_error;
};

}  // namespace latcut
