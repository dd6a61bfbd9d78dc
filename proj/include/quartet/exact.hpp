#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>
#include <string_view>

namespace quartet {

// Every arithmetic step in this library is exact. cpp_int never wraps, so
// identities that hold symbolically also hold for any concrete operands.
using ExactInt = boost::multiprecision::cpp_int;

inline ExactInt fourth(const ExactInt& x) {
    ExactInt s = x * x;
    return s * s;
}

// floor(x^(1/n)) for x >= 0, n >= 1, by bracketed binary search.
ExactInt iroot_floor(const ExactInt& x, unsigned n);

// A^4 + h*B^4 == C^4 + h*D^4, evaluated exactly.
bool equation_holds(const ExactInt& h, const ExactInt& a, const ExactInt& b,
                    const ExactInt& c, const ExactInt& d);

// Decimal rendering/parsing. All external formats carry values as decimal
// strings; they routinely exceed 64 bits and JSON numbers would mangle them.
std::string dec(const ExactInt& x);

// Strict parse: optional sign, then digits only. std::nullopt on anything else.
std::optional<ExactInt> parse_decimal(std::string_view s);

} // namespace quartet
