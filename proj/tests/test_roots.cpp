#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "quartet/family.hpp"
#include "quartet/roots.hpp"

#include <map>
#include <vector>

using namespace quartet;

namespace {

UniPoly up(std::vector<long long> c) {
    return UniPoly(std::vector<ExactInt>(c.begin(), c.end()));
}

std::vector<ExactInt> ints(std::vector<long long> v) {
    return std::vector<ExactInt>(v.begin(), v.end());
}

} // namespace

TEST_CASE("quadratic and quintic spot checks") {
    CHECK(integer_roots(up({2, 0, 1}), 3) == ints({-1, 1}));     // p^2 + 2 = 3
    CHECK(integer_roots(up({2, 0, 1}), 5).empty());              // p^2 + 2 = 5
    CHECK(integer_roots(up({0, 0, 0, -2, 0, 2}), 48) == ints({2}));  // 2p^5 - 2p^3
}

TEST_CASE("linear polynomials need exact divisibility") {
    CHECK(integer_roots(up({3, 2}), 7) == ints({2}));            // 2p + 3 = 7
    CHECK(integer_roots(up({3, 2}), 8).empty());
    CHECK(integer_roots(up({0, -3}), 9) == ints({-3}));          // -3p = 9
}

TEST_CASE("negative leading coefficient flips the tails") {
    // -p^3 + 10p: critical points near +-1.8, three monotone branches
    UniPoly f = up({0, 10, 0, -1});
    CHECK(integer_roots(f, 0) == ints({0}));
    CHECK(integer_roots(f, 3) == ints({3}));      // -27 + 30
    CHECK(integer_roots(f, -3) == ints({-3}));
    CHECK(integer_roots(f, -10000000).empty());
}

TEST_CASE("repeated and clustered roots inside the window") {
    // (p-1)^2 (p+2) = p^3 - 3p + 2, target 0: roots -2 and 1 (1 doubled)
    CHECK(integer_roots(up({2, -3, 0, 1}), 0) == ints({-2, 1}));
    // symmetric quartic p^4 - 5p^2 + 4 = (p-1)(p+1)(p-2)(p+2)
    CHECK(integer_roots(up({4, 0, -5, 0, 1}), 0) == ints({-2, -1, 1, 2}));
}

TEST_CASE("constant input is rejected") {
    CHECK_THROWS_AS(integer_roots(up({5}), 5), std::invalid_argument);
    CHECK_THROWS_AS(integer_roots(UniPoly(), 0), std::invalid_argument);
}

TEST_CASE("targets far beyond the window resolve in logarithmic time") {
    // p^2 + 2 at p = 31623
    ExactInt big = ExactInt(31623) * 31623 + 2;
    CHECK(integer_roots(up({2, 0, 1}), big) == ints({-31623, 31623}));
    // 2p^5 - 2p^3 at p = 1000 (about 2*10^15)
    UniPoly fg = up({0, 0, 0, -2, 0, 2});
    CHECK(integer_roots(fg, fg.eval(1000)) == ints({1000}));
    // and just off it
    CHECK(integer_roots(fg, fg.eval(1000) + 1).empty());
}

TEST_CASE("agrees with a full scan over every builtin h-polynomial") {
    // Oracle: tabulate h(p) for |p| <= 2000, then compare against
    // integer_roots for every target value 1..2000.
    for (const Family& f : builtin_families()) {
        if (f.arity != 1)
            continue;
        const UniPoly hp = f.h.to_unipoly();
        std::map<ExactInt, std::vector<ExactInt>> by_value;
        for (long long p = -2000; p <= 2000; ++p) {
            ExactInt v = hp.eval(p);
            if (v >= 1 && v <= 2000)
                by_value[v].push_back(p);
        }
        for (ExactInt target = 1; target <= 2000; ++target) {
            auto expect = by_value.count(target) ? by_value[target]
                                                 : std::vector<ExactInt>{};
            auto got = integer_roots(hp, target);
            // the scan only sees |p| <= 2000; any further root would exceed
            // the target range for every builtin, so the lists must agree
            CHECK(got == expect);
        }
    }
}
