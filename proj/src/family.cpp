#include "quartet/family.hpp"

#include "quartet/errors.hpp"
#include "quartet/roots.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <stdexcept>
#include <tuple>
#include <utility>

namespace quartet {

namespace {

ExactInt abs_of(const ExactInt& x) {
    return x < 0 ? ExactInt(-x) : x;
}

// Coefficients in ascending order: U({-2, 0, 1}) is p^2 - 2.
BiPoly U(std::vector<long long> coeffs) {
    std::vector<ExactInt> c(coeffs.begin(), coeffs.end());
    return UniPoly(std::move(c)).to_bipoly();
}

Family one_param(std::string id, BiPoly h, BiPoly a, BiPoly b, BiPoly c, BiPoly d,
                 std::string provenance) {
    return Family{std::move(id), 1,       std::move(h), std::move(a),
                  std::move(b),  std::move(c), std::move(d), std::move(provenance)};
}

std::vector<Family> build_catalog() {
    std::vector<Family> v;

    // h = p^2 + 2
    v.push_back(one_param("F1", U({2, 0, 1}),
                          U({1, 2, 0, 1}),    // p^3 + 2p + 1
                          U({1, -1, 1}),      // p^2 - p + 1
                          U({-1, 2, 0, 1}),   // p^3 + 2p - 1
                          U({1, 1, 1}),       // p^2 + p + 1
                          "base catalog, quadratic h"));

    // h = p^3 + 4p, with the D side collapsing to zero (a fourth power
    // equal to a fourth power plus h times one)
    v.push_back(one_param("F2", U({0, 4, 0, 1}),
                          U({-2, 1}), U({2}), U({2, 1}), U({}),
                          "base catalog, cubic h, D = 0"));

    // h = 8p^3 + 8p
    v.push_back(one_param("F3", U({0, 8, 0, 8}),
                          U({-1, 1}), U({1}), U({1, 1}), U({}),
                          "base catalog, cubic h, D = 0"));

    // h = p^4 - 1, with B = 0
    v.push_back(one_param("F4", U({-1, 0, 0, 0, 1}),
                          U({0, 1}), U({}), U({1}), U({1}),
                          "base catalog, quartic h, B = 0"));

    // h = 2p^4 - 2
    v.push_back(one_param("F5", U({-2, 0, 0, 0, 2}),
                          U({-1, 2, 1}),      // p^2 + 2p - 1
                          U({-1, 1}),
                          U({-1, -2, 1}),     // p^2 - 2p - 1
                          U({1, 1}),
                          "base catalog, quartic h"));

    // h = p^4 + 3p^2 + 1
    v.push_back(one_param("F6", U({1, 0, 3, 0, 1}),
                          U({1, 1, 1}), U({-1, 1}), U({1, -1, 1}), U({1, 1}),
                          "base catalog, quartic h"));

    // h = 2p^5 - 2p^3: (2p^2)^4 + h(p-1)^4 = (2p)^4 + h(p+1)^4
    v.push_back(one_param("FG", U({0, 0, 0, -2, 0, 2}),
                          U({0, 0, 2}), U({-1, 1}), U({0, 2}), U({1, 1}),
                          "Gerardin's identity"));

    // h = p^2 - 3, cubic components
    v.push_back(one_param("FP", U({-3, 0, 1}),
                          U({-2, -3, 2, 1}),  // p^3 + 2p^2 - 3p - 2
                          U({-2, -1, 0, 1}),  // p^3 - p - 2
                          U({2, -3, -2, 1}),  // p^3 - 2p^2 - 3p + 2
                          U({2, -1, 0, 1}),   // p^3 - p + 2
                          "derived from a remark of Piezas"));

    // h = p^4 + q^4: (p^2)^4 + h*q^4 = (q^2)^4 + h*p^4
    v.push_back(Family{"FT", 2,
                       BiPoly::monomial(1, 4, 0) + BiPoly::monomial(1, 0, 4),
                       BiPoly::monomial(1, 2, 0), BiPoly::monomial(1, 0, 1),
                       BiPoly::monomial(1, 0, 2), BiPoly::monomial(1, 1, 0),
                       "Tomita's identity"});

    // Homogenized counterparts of the one-parameter rows with deg h <= 4.
    for (size_t i = 0; i < 6; ++i)
        v.push_back(homogenize_family(v[i]));

    for (const Family& f : v)
        if (!verify_family(f).is_zero())
            throw std::logic_error("builtin family " + f.id + " failed verification");
    return v;
}

} // namespace

const std::vector<Family>& builtin_families() {
    static const std::vector<Family> catalog = build_catalog();
    return catalog;
}

size_t catalog_index(const std::string& id) {
    const auto& cat = builtin_families();
    for (size_t i = 0; i < cat.size(); ++i)
        if (cat[i].id == id)
            return i;
    throw std::out_of_range("unknown family id: " + id);
}

const Family& family_by_id(const std::string& id) {
    return builtin_families()[catalog_index(id)];
}

BiPoly verify_family(const Family& f) {
    return f.a.pow(4) + f.h * f.b.pow(4) - f.c.pow(4) - f.h * f.d.pow(4);
}

bool operator==(const Solution& x, const Solution& y) {
    return std::tie(x.h, x.a, x.b, x.c, x.d, x.source) ==
           std::tie(y.h, y.a, y.b, y.c, y.d, y.source);
}

bool equation_holds(const Solution& s) {
    return equation_holds(s.h, s.a, s.b, s.c, s.d);
}

Solution make_checked_solution(ExactInt h, ExactInt a, ExactInt b, ExactInt c,
                               ExactInt d, std::string source) {
    Solution s{std::move(h), std::move(a), std::move(b),
               std::move(c), std::move(d), std::move(source)};
    if (!equation_holds(s))
        throw std::logic_error("solution from " + s.source +
                               " does not satisfy the equation");
    return s;
}

Solution instantiate(const Family& f, const ExactInt& p, const ExactInt& q) {
    if (f.arity == 1 && q != 1)
        throw ArityMismatchError("family " + f.id + " takes a single parameter");
    std::string source = f.id + "(p=" + dec(p) +
                         (f.arity == 2 ? ",q=" + dec(q) : "") + ")";
    return make_checked_solution(f.h.eval(p, q), f.a.eval(p, q), f.b.eval(p, q),
                                 f.c.eval(p, q), f.d.eval(p, q), std::move(source));
}

Family homogenize_family(const Family& f) {
    if (f.arity != 1)
        throw ArityMismatchError("homogenize_family: " + f.id + " already has two parameters");
    auto hdeg = f.h.degree_p();
    if (hdeg && *hdeg > 4)
        throw DegreeTooLargeError("homogenize_family: deg h = " + std::to_string(*hdeg) +
                                  " in " + f.id + " exceeds 4");

    // Smallest weight k that clears every denominator: A and C carry weight
    // k+1 (they face the quartic side of h directly), B and D carry k.
    int k = 0;
    auto consider = [&k](const BiPoly& g, int offset) {
        if (auto d = g.degree_p())
            k = std::max(k, *d + offset);
    };
    consider(f.a, -1);
    consider(f.b, 0);
    consider(f.c, -1);
    consider(f.d, 0);

    std::string id = (f.id.size() == 2 && f.id[0] == 'F' &&
                      std::isdigit(static_cast<unsigned char>(f.id[1])))
                         ? std::string("H") + f.id[1]
                         : "hom(" + f.id + ")";
    Family out{std::move(id),
               2,
               homogenize(f.h.to_unipoly(), 4),
               homogenize(f.a.to_unipoly(), k + 1),
               homogenize(f.b.to_unipoly(), k),
               homogenize(f.c.to_unipoly(), k + 1),
               homogenize(f.d.to_unipoly(), k),
               "homogenization of " + f.id};
    if (!verify_family(out).is_zero())
        throw std::logic_error("homogenization of " + f.id + " failed verification");
    return out;
}

bool operator==(const FamilyMatch& x, const FamilyMatch& y) {
    return std::tie(x.family_id, x.p, x.q) == std::tie(y.family_id, y.p, y.q);
}

namespace {

// For arity-2 families h grows in q once p is pinned down, so only finitely
// many q can reach a given h; these ceilings come from the smallest term of
// each h-polynomial that involves q alone (or nearly so).
ExactInt q_ceiling(const std::string& id, const ExactInt& h) {
    if (id == "H1")                                         // h >= 2q^4
        return iroot_floor(h / 2, 4) + 1;
    if (id == "H2" || id == "H3" || id == "H4" || id == "H5")
        return iroot_floor(h, 3) + 1;                       // h > 4q^3 at least
    return iroot_floor(h, 4) + 1;                           // H6, FT: h >= q^4
}

} // namespace

std::vector<FamilyMatch> match_h(const ExactInt& h) {
    if (h < 1)
        throw std::invalid_argument("match_h: h must be >= 1");
    std::vector<FamilyMatch> out;
    for (const Family& f : builtin_families()) {
        std::vector<std::pair<ExactInt, ExactInt>> pq;
        if (f.arity == 1) {
            const UniPoly hp = f.h.to_unipoly();
            for (const ExactInt& r : integer_roots(hp, h))
                pq.emplace_back(r, 1);
        } else {
            const ExactInt qmax = q_ceiling(f.id, h);
            for (ExactInt q0 = 1; q0 <= qmax; ++q0) {
                const UniPoly hp = f.h.specialize_q(q0);
                if (auto d = hp.degree(); d && *d >= 1)
                    for (const ExactInt& r : integer_roots(hp, h))
                        pq.emplace_back(r, q0);
            }
            std::sort(pq.begin(), pq.end());
        }
        for (auto& [p0, q0] : pq)
            out.push_back(FamilyMatch{f.id, std::move(p0), std::move(q0)});
    }
    return out;
}

bool is_nontrivial(const Solution& s) {
    const ExactInt A = abs_of(s.a), B = abs_of(s.b), C = abs_of(s.c), D = abs_of(s.d);
    if (A == C)
        return false;
    if (s.h == 1 && A == D && B == C)
        return false;
    return true;
}

Solution canonicalize(const Solution& s) {
    if (s.h < 1)
        throw std::invalid_argument("canonicalize: h must be >= 1");
    if (!is_nontrivial(s))
        throw TrivialSolutionError("trivial solution from " + s.source +
                                   ": the two sides are rearrangements");
    ExactInt A = abs_of(s.a), B = abs_of(s.b), C = abs_of(s.c), D = abs_of(s.d);
    if (A < C) {
        std::swap(A, C);
        std::swap(B, D);
    }
    // With the equation exact and h >= 1, A > C forces D > B.
    if (s.h == 1) {
        // Both terms of each side carry coefficient 1, so the components of
        // a side may swap and the sides may swap.  The representative is the
        // lexicographically largest rearrangement that keeps A > C, D > B.
        const std::array<std::array<const ExactInt*, 4>, 8> images{{
            {&A, &B, &C, &D},
            {&A, &B, &D, &C},
            {&B, &A, &C, &D},
            {&B, &A, &D, &C},
            {&C, &D, &A, &B},
            {&C, &D, &B, &A},
            {&D, &C, &A, &B},
            {&D, &C, &B, &A},
        }};
        const std::array<const ExactInt*, 4>* best = nullptr;
        for (const auto& t : images) {
            if (!(*t[0] > *t[2] && *t[3] > *t[1]))
                continue;
            if (!best || std::tie(*t[0], *t[1], *t[2], *t[3]) >
                             std::tie(*(*best)[0], *(*best)[1], *(*best)[2], *(*best)[3]))
                best = &t;
        }
        // At least the A > C orientation itself qualifies.
        return make_checked_solution(s.h, *(*best)[0], *(*best)[1], *(*best)[2],
                                     *(*best)[3], s.source);
    }
    return make_checked_solution(s.h, A, B, C, D, s.source);
}

} // namespace quartet
