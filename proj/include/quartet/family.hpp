#pragma once

#include "quartet/exact.hpp"
#include "quartet/poly.hpp"

#include <string>
#include <vector>

namespace quartet {

// A parametric identity A(p,q)^4 + h(p,q)*B(p,q)^4 = C(p,q)^4 + h(p,q)*D(p,q)^4
// that holds for every integer substitution. One-parameter families keep all
// five polynomials free of q (arity 1); homogenized families use both (arity 2).
struct Family {
    std::string id;          // "F1".."F6", "FG", "FP", "FT", "H1".."H6"
    int arity = 1;
    BiPoly h, a, b, c, d;
    std::string provenance;  // where the identity comes from
};

// The built-in catalog, in fixed order: F1..F6, FG, FP, FT, then their
// homogenized counterparts H1..H6. Constructed once; every entry has been
// re-verified symbolically before the reference escapes.
const std::vector<Family>& builtin_families();

// Index of id within builtin_families(), or throws std::out_of_range.
size_t catalog_index(const std::string& id);
const Family& family_by_id(const std::string& id);

// The residual A^4 + h*B^4 - C^4 - h*D^4 as a polynomial; identically zero
// exactly when the family is a genuine identity.
BiPoly verify_family(const Family& f);

// One concrete integer solution of A^4 + h*B^4 = C^4 + h*D^4.
struct Solution {
    ExactInt h, a, b, c, d;
    std::string source;      // "F1(p=1)", "FT(p=2,q=1)", or "search"
};

bool operator==(const Solution& x, const Solution& y);
bool equation_holds(const Solution& s);

inline std::ostream& operator<<(std::ostream& os, const Solution& s) {
    return os << "(h=" << s.h << ", " << s.a << ", " << s.b << ", " << s.c
              << ", " << s.d << ", " << s.source << ")";
}

// Builds a Solution and re-checks the defining equation exactly; throws
// std::logic_error when the five values do not satisfy it. Every solution
// the library hands out passes through here.
Solution make_checked_solution(ExactInt h, ExactInt a, ExactInt b, ExactInt c,
                               ExactInt d, std::string source);

// Substitute integers for the parameters. q must be 1 (the default) for
// arity-1 families; anything else throws ArityMismatchError. The resulting
// h may be zero or negative for extreme parameters — the identity holds
// regardless, and callers filter by whatever h-range they care about.
Solution instantiate(const Family& f, const ExactInt& p, const ExactInt& q = 1);

// Lift a one-parameter family to a two-parameter one: h' = q^4 h(p/q) and,
// with k = max(deg A - 1, deg B, deg C - 1, deg D) over the nonzero
// polynomials (at least 0), A' = q^(k+1) A(p/q), B' = q^k B(p/q), and
// likewise C', D'. The weights balance because the equation is quartic in
// (A, C) against h times a quartic in (B, D). Throws DegreeTooLargeError
// when deg h > 4 and ArityMismatchError on an arity-2 input.
Family homogenize_family(const Family& f);

// One hit of match_h: family_id at parameters (p, q) has h(p, q) == h.
struct FamilyMatch {
    std::string family_id;
    ExactInt p;
    ExactInt q;              // always 1 for arity-1 families
};

bool operator==(const FamilyMatch& x, const FamilyMatch& y);

inline std::ostream& operator<<(std::ostream& os, const FamilyMatch& m) {
    return os << m.family_id << "(p=" << m.p << ",q=" << m.q << ")";
}

// All parameter choices across the catalog that realize the given h >= 1,
// in deterministic order: catalog order, then p ascending, then q.
// Complete: p runs over all integers (exact root-finding per q), and q over
// 1..ceiling where the ceiling per family is implied by h's growth in q.
std::vector<FamilyMatch> match_h(const ExactInt& h);

// A solution is trivial when its two sides are rearrangements of each other:
// |A| = |C| (which forces |B| = |D| when h >= 1), or, for h = 1 only, the
// cross-match (|A|, |B|) = (|D|, |C|).
bool is_nontrivial(const Solution& s);

// Canonical representative of a nontrivial solution's symmetry class
// (h >= 1): all components non-negative, sides ordered so that A > C (which
// forces D > B), and for h = 1 — where (A,B,C,D) -> (D,C,B,A) is also a
// symmetry — the lexicographically larger of the two representatives.
// Throws TrivialSolutionError on trivial input.
Solution canonicalize(const Solution& s);

} // namespace quartet
