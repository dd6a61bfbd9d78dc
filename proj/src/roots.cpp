#include "quartet/roots.hpp"

#include <algorithm>
#include <stdexcept>

namespace quartet {

namespace {

ExactInt abs_of(const ExactInt& x) {
    return x < 0 ? ExactInt(-x) : x;
}

// Integer radius W such that every real root of g lies in [-W, W], by the
// Fujiwara bound |z| <= 2 * max_i (|b_i| / |b_m|)^(1/(m-i)). Each root is
// rounded up through iroot_floor(ceil(|b_i|/|b_m|)) + 1, which strictly
// dominates the real value, so the returned radius is safe.
ExactInt root_radius(const UniPoly& g) {
    int m = *g.degree();
    if (m == 0)
        return 1;
    ExactInt lead = abs_of(g.leading());
    ExactInt best = 0;
    for (int i = 0; i < m; ++i) {
        ExactInt bi = abs_of(g.coeff(i));
        if (bi == 0)
            continue;
        ExactInt ratio = (bi + lead - 1) / lead;                    // ceil
        ExactInt bound = iroot_floor(ratio, static_cast<unsigned>(m - i)) + 1;
        best = std::max(best, bound);
    }
    if (best == 0)
        return 1;            // g is a pure power of p; only root is 0
    return 2 * best;
}

// Roots of f(x) == target with x >= start, given that f is strictly
// monotone on [start - 1, +inf). At most one exists; exponential bracket
// then binary search, all exact.
void right_tail_roots(const UniPoly& f, const ExactInt& target,
                      const ExactInt& start, std::vector<ExactInt>& out) {
    const UniPoly d = f.derivative();
    const bool increasing = d.leading() > 0;   // sign of f' beyond the radius

    ExactInt lo = start;
    ExactInt flo = f.eval(lo);
    if (flo == target) {
        out.push_back(lo);
        return;
    }
    if (increasing ? flo > target : flo < target)
        return;              // already past the target; monotone, so done

    ExactInt step = 1;
    ExactInt hi;
    for (;;) {
        hi = lo + step;
        ExactInt v = f.eval(hi);
        if (increasing ? v >= target : v <= target)
            break;
        step <<= 1;
    }
    // f(lo) strictly before target, f(hi) at or past it.
    ExactInt a = lo, b = hi;
    while (a + 1 < b) {
        ExactInt mid = (a + b) >> 1;
        ExactInt v = f.eval(mid);
        if (increasing ? v < target : v > target)
            a = mid;
        else
            b = mid;
    }
    if (f.eval(b) == target)
        out.push_back(b);
}

} // namespace

std::vector<ExactInt> integer_roots(const UniPoly& f, const ExactInt& target) {
    auto deg = f.degree();
    if (!deg || *deg < 1)
        throw std::invalid_argument("integer_roots: constant polynomial");

    // All critical points of f live in [-w, w], so f is strictly monotone
    // on [w, inf) and on (-inf, -w].
    const ExactInt w = root_radius(f.derivative());

    std::vector<ExactInt> roots;
    for (ExactInt x = -w; x <= w; ++x)
        if (f.eval(x) == target)
            roots.push_back(x);

    right_tail_roots(f, target, w + 1, roots);

    // The left tail of f is the right tail of f(-x).
    const UniPoly fr = f.reflected();
    std::vector<ExactInt> left;
    right_tail_roots(fr, target, w + 1, left);
    for (ExactInt& x : left)
        roots.push_back(-x);

    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

} // namespace quartet
