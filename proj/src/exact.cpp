#include "quartet/exact.hpp"

#include <cctype>
#include <stdexcept>

namespace quartet {

ExactInt iroot_floor(const ExactInt& x, unsigned n) {
    if (x < 0)
        throw std::invalid_argument("iroot_floor: negative argument");
    if (n == 0)
        throw std::invalid_argument("iroot_floor: zeroth root");
    if (x == 0)
        return 0;
    ExactInt hi = 1;
    while (boost::multiprecision::pow(hi, n) <= x)
        hi <<= 1;
    ExactInt lo = hi >> 1;                 // lo^n <= x < hi^n
    while (lo + 1 < hi) {
        ExactInt mid = (lo + hi) >> 1;
        if (boost::multiprecision::pow(mid, n) <= x)
            lo = mid;
        else
            hi = mid;
    }
    return lo;
}

bool equation_holds(const ExactInt& h, const ExactInt& a, const ExactInt& b,
                    const ExactInt& c, const ExactInt& d) {
    return fourth(a) + h * fourth(b) == fourth(c) + h * fourth(d);
}

std::string dec(const ExactInt& x) {
    return x.str();
}

std::optional<ExactInt> parse_decimal(std::string_view s) {
    if (s.empty())
        return std::nullopt;
    size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size())
        return std::nullopt;
    for (size_t k = i; k < s.size(); ++k)
        if (!std::isdigit(static_cast<unsigned char>(s[k])))
            return std::nullopt;
    // cpp_int's string constructor dislikes a leading '+'.
    std::string digits(s[0] == '+' ? s.substr(1) : s);
    return ExactInt(digits);
}

} // namespace quartet
