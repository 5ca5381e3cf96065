#pragma once

#include <stdexcept>
#include <string>

namespace mbfix {

/// A request that is well formed but outside what the library will compute:
/// an out-of-scope degree, an exhausted work budget, or an engine whose
/// preconditions do not hold for the given permutation.
class RefusalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An internal resource cap was hit (memo table size, dense matrix size).
class ResourceError : public RefusalError {
public:
    using RefusalError::RefusalError;
};

/// Two routes that must agree did not, or an exact division left a remainder.
class ConsistencyError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace mbfix
