#pragma once

#include "quartet/exact.hpp"
#include "quartet/poly.hpp"

#include <vector>

namespace quartet {

// Every integer r with f(r) == target, ascending, without duplicates.
// f must be non-constant (throws std::invalid_argument otherwise).
//
// Strategy: a Fujiwara bound on the derivative confines every critical
// point of f to a window [-W, W]; that window is scanned directly, and on
// each side of it f is strictly monotone, so the two tails are resolved by
// exponential bracketing plus binary search — O(W + log |r|) evaluations
// rather than a scan out to the target's scale.
std::vector<ExactInt> integer_roots(const UniPoly& f, const ExactInt& target);

} // namespace quartet
