#pragma once

#include <stdexcept>

namespace quartet {

// Base class for all conditions the library raises on purpose, so callers
// can catch everything from this project with one handler.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// homogenize(f, d) called with d below the degree of f.
struct DegreeTooSmallError : Error {
    using Error::Error;
};

// homogenize_family() on a family whose h-polynomial has degree above 4;
// the weight pattern (4, k+1, k, k+1, k) only balances up to quartic h.
struct DegreeTooLargeError : Error {
    using Error::Error;
};

// A two-parameter operation applied to a one-parameter family, or vice versa.
struct ArityMismatchError : Error {
    using Error::Error;
};

// canonicalize() on a solution whose two sides are rearrangements of each
// other (|A| = |C|, or h = 1 with (|A|,|B|) = (|D|,|C|)).
struct TrivialSolutionError : Error {
    using Error::Error;
};

// A search bound exceeding the configured work or memory ceiling.
struct BoundTooLargeError : Error {
    using Error::Error;
};

} // namespace quartet
