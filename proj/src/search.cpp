#include "quartet/search.hpp"

#include "quartet/errors.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdint>
#include <stdexcept>
#include <thread>
#include <tuple>
#include <unordered_map>
#include <utility>
#include <vector>

namespace quartet {

namespace {

// Candidates travel through the kernels as component quadruples only; the
// wide key values never leave them. Components fit easily in 32 bits —
// the key-entry memory ceiling caps the bound around 2*10^4.
struct RawQuad {
    uint32_t a, b, c, d;
};

bool raw_less(const RawQuad& x, const RawQuad& y) {
    return std::make_tuple(std::max(x.a, x.d), x.a, x.d, x.c, x.b) <
           std::make_tuple(std::max(y.a, y.d), y.a, y.d, y.c, y.b);
}

// The loops only produce A > C >= 0 and D > B >= 0, which is canonical form
// except at h = 1, where both terms of each side carry the same coefficient
// and the tuple can be rearranged without changing the identity: A and B may
// swap, C and D may swap, and the sides may swap.  Keep a tuple only if it
// is the lexicographically largest of its images that still satisfy A > C
// and D > B; self-mirrored tuples (a==d, b==c) are trivial and dropped.
bool keep_candidate(uint32_t a, uint32_t b, uint32_t c, uint32_t d, bool h_is_one) {
    if (!h_is_one)
        return true;
    if (a == d && b == c)
        return false;
    const std::array<std::array<uint32_t, 4>, 8> images{{{a, b, c, d},
                                                         {a, b, d, c},
                                                         {b, a, c, d},
                                                         {b, a, d, c},
                                                         {c, d, a, b},
                                                         {c, d, b, a},
                                                         {d, c, a, b},
                                                         {d, c, b, a}}};
    const std::array<uint32_t, 4> self{a, b, c, d};
    for (const auto& t : images)
        if (t[0] > t[2] && t[3] > t[1] && t > self)
            return false;
    return true;
}

// ------------------------------------------------------------ key widths

template <class U>
U to_key(const ExactInt& x);

template <>
uint64_t to_key<uint64_t>(const ExactInt& x) {
    return x.convert_to<uint64_t>();
}

#ifdef __SIZEOF_INT128__
using u128 = unsigned __int128;

template <>
u128 to_key<u128>(const ExactInt& x) {
    const uint64_t lo = ExactInt(x & 0xFFFFFFFFFFFFFFFF).convert_to<uint64_t>();
    const uint64_t hi = ExactInt(x >> 64).convert_to<uint64_t>();
    return (u128(hi) << 64) | lo;
}
#endif

template <>
ExactInt to_key<ExactInt>(const ExactInt& x) {
    return x;
}

// Hasher for whichever key width the kernel runs in. The arbitrary-precision
// instantiation only exists to satisfy the type — that kernel always takes
// the sorted-join path.
template <class U>
struct KeyHasher {
    size_t operator()(const U& v) const { return std::hash<U>()(v); }
};

#ifdef __SIZEOF_INT128__
template <>
struct KeyHasher<u128> {
    size_t operator()(u128 v) const {
        const uint64_t lo = static_cast<uint64_t>(v);
        const uint64_t hi = static_cast<uint64_t>(v >> 64);
        return std::hash<uint64_t>()(lo ^ (hi * 0x9E3779B97F4A7C15ull));
    }
};
#endif

template <>
struct KeyHasher<ExactInt> {
    size_t operator()(const ExactInt& v) const {
        return std::hash<std::string>()(v.str());
    }
};

template <class U>
std::vector<U> pow4_table(int n) {
    std::vector<U> t(static_cast<size_t>(n) + 1);
    for (int x = 0; x <= n; ++x) {
        U s = U(static_cast<unsigned>(x)) * U(static_cast<unsigned>(x));
        t[static_cast<size_t>(x)] = s * s;
    }
    return t;
}

// --------------------------------------------------------- brute kernel

template <class U>
std::vector<RawQuad> brute_kernel(const U& h, int n, bool h_is_one) {
    const auto p4 = pow4_table<U>(n);
    std::vector<RawQuad> out;
    for (uint32_t a = 1; a <= static_cast<uint32_t>(n); ++a)
        for (uint32_t c = 0; c < a; ++c) {
            const U lhs = p4[a] - p4[c];
            for (uint32_t d = 1; d <= static_cast<uint32_t>(n); ++d)
                for (uint32_t b = 0; b < d; ++b)
                    if (lhs == h * (p4[d] - p4[b]) &&
                        keep_candidate(a, b, c, d, h_is_one))
                        out.push_back({a, b, c, d});
        }
    return out;
}

// ----------------------------------------------------------- mitm kernel

// Fixed probe partition: contiguous A-ranges balanced by probe count
// (sum of a), independent of how many workers actually run.
std::vector<std::pair<uint32_t, uint32_t>> probe_ranges(int n, int workers) {
    std::vector<std::pair<uint32_t, uint32_t>> ranges;
    const uint64_t total = static_cast<uint64_t>(n) * (n + 1) / 2;
    const uint64_t per = total / static_cast<uint64_t>(workers) + 1;
    uint32_t lo = 1;
    uint64_t acc = 0;
    for (uint32_t a = 1; a <= static_cast<uint32_t>(n); ++a) {
        acc += a;
        if (acc >= per || a == static_cast<uint32_t>(n)) {
            ranges.emplace_back(lo, a);
            lo = a + 1;
            acc = 0;
        }
    }
    return ranges;
}

template <class U>
struct KeyEntry {
    U key;
    uint32_t b, d;
};

template <class U>
constexpr bool is_big_key = std::is_same_v<U, ExactInt>;

template <class U>
std::vector<RawQuad> mitm_kernel(const U& h, int n, bool h_is_one,
                                 const SearchLimits& lim) {
    const auto p4 = pow4_table<U>(n);
    const size_t entries = static_cast<size_t>(n) * (n + 1) / 2;

    std::vector<KeyEntry<U>> keys;
    keys.reserve(entries);
    for (uint32_t d = 1; d <= static_cast<uint32_t>(n); ++d)
        for (uint32_t b = 0; b < d; ++b)
            keys.push_back({h * (p4[d] - p4[b]), b, d});

    // Join strategy: hash map while the table is small, sorted vector with
    // binary search beyond that (half the memory, better locality). The
    // arbitrary-precision kernel always sorts — cpp_int has no cheap hash.
    const bool use_hash = !is_big_key<U> && entries <= lim.hash_join_threshold;

    std::unordered_multimap<U, std::pair<uint32_t, uint32_t>, KeyHasher<U>> hash_index;
    if (use_hash) {
        hash_index.reserve(entries);
        for (const auto& e : keys)
            hash_index.emplace(e.key, std::make_pair(e.b, e.d));
    } else {
        std::sort(keys.begin(), keys.end(),
                  [](const KeyEntry<U>& x, const KeyEntry<U>& y) {
                      return std::make_tuple(x.key, x.b, x.d) <
                             std::make_tuple(y.key, y.b, y.d);
                  });
    }

    auto probe_one = [&](uint32_t a, uint32_t c, std::vector<RawQuad>& out) {
        const U key = p4[a] - p4[c];
        auto emit = [&](uint32_t b, uint32_t d) {
            if (keep_candidate(a, b, c, d, h_is_one))
                out.push_back({a, b, c, d});
        };
        if (use_hash) {
            auto [it, end] = hash_index.equal_range(key);
            for (; it != end; ++it)
                emit(it->second.first, it->second.second);
        } else {
            auto it = std::lower_bound(keys.begin(), keys.end(), key,
                                       [](const KeyEntry<U>& e, const U& k) {
                                           return e.key < k;
                                       });
            for (; it != keys.end() && it->key == key; ++it)
                emit(it->b, it->d);
        }
    };

    auto probe_range = [&](uint32_t a_lo, uint32_t a_hi, std::vector<RawQuad>& out) {
        for (uint32_t a = a_lo; a <= a_hi; ++a)
            for (uint32_t c = 0; c < a; ++c)
                probe_one(a, c, out);
    };

    const int workers = std::max(1, lim.threads);
    if (workers == 1) {
        std::vector<RawQuad> out;
        probe_range(1, static_cast<uint32_t>(n), out);
        return out;
    }

    const auto ranges = probe_ranges(n, workers);
    std::vector<std::vector<RawQuad>> parts(ranges.size());
    std::vector<std::thread> pool;
    pool.reserve(ranges.size());
    for (size_t i = 0; i < ranges.size(); ++i)
        pool.emplace_back([&, i] { probe_range(ranges[i].first, ranges[i].second, parts[i]); });
    for (auto& t : pool)
        t.join();

    std::vector<RawQuad> out;
    for (auto& part : parts)
        out.insert(out.end(), part.begin(), part.end());
    return out;
}

// ------------------------------------------------------------- dispatch

KernelChoice pick_kernel(const ExactInt& h, int n, KernelChoice forced) {
    if (forced != KernelChoice::Auto)
        return forced;
    const ExactInt peak = h * fourth(ExactInt(n));
    if (peak < (ExactInt(1) << 63))
        return KernelChoice::U64;
#ifdef __SIZEOF_INT128__
    if (peak < (ExactInt(1) << 127))
        return KernelChoice::U128;
#endif
    return KernelChoice::Big;
}

std::vector<Solution> postprocess(std::vector<RawQuad> raw, const ExactInt& h) {
    std::sort(raw.begin(), raw.end(), raw_less);
    std::vector<Solution> out;
    out.reserve(raw.size());
    // Whatever width the kernel ran in, each emitted solution is re-checked
    // in exact arithmetic before it leaves the module.
    for (const RawQuad& r : raw)
        out.push_back(make_checked_solution(h, r.a, r.b, r.c, r.d, "search"));
    return out;
}

void check_preconditions(const ExactInt& h, int n) {
    if (h < 1)
        throw std::invalid_argument("search: h must be >= 1");
    if (n < 1)
        throw std::invalid_argument("search: bound must be >= 1");
}

template <class Kernel64, class Kernel128, class KernelBig>
std::vector<RawQuad> with_kernel(const ExactInt& h, int n, KernelChoice choice,
                                 Kernel64 k64, [[maybe_unused]] Kernel128 k128,
                                 KernelBig kbig) {
    switch (pick_kernel(h, n, choice)) {
    case KernelChoice::U64:
        return k64(to_key<uint64_t>(h));
#ifdef __SIZEOF_INT128__
    case KernelChoice::U128:
        return k128(to_key<u128>(h));
#endif
    default:
        return kbig(to_key<ExactInt>(h));
    }
}

} // namespace

std::vector<Solution> brute_force_search(const ExactInt& h, int n,
                                         const SearchLimits& limits) {
    check_preconditions(h, n);
    if (n > limits.max_brute_bound)
        throw BoundTooLargeError("brute-force bound " + std::to_string(n) +
                                 " exceeds the ceiling of " +
                                 std::to_string(limits.max_brute_bound));
    const bool h1 = h == 1;
    auto raw = with_kernel(
        h, n, limits.kernel,
        [&](uint64_t hk) { return brute_kernel<uint64_t>(hk, n, h1); },
#ifdef __SIZEOF_INT128__
        [&](u128 hk) { return brute_kernel<u128>(hk, n, h1); },
#else
        [&](const ExactInt& hk) { return brute_kernel<ExactInt>(hk, n, h1); },
#endif
        [&](const ExactInt& hk) { return brute_kernel<ExactInt>(hk, n, h1); });
    return postprocess(std::move(raw), h);
}

std::vector<Solution> mitm_search(const ExactInt& h, int n,
                                  const SearchLimits& limits) {
    check_preconditions(h, n);
    const size_t entries = static_cast<size_t>(n) * (n + 1) / 2;
    if (entries > limits.max_key_entries)
        throw BoundTooLargeError("bound " + std::to_string(n) + " needs " +
                                 std::to_string(entries) +
                                 " key entries, above the ceiling of " +
                                 std::to_string(limits.max_key_entries));
    const bool h1 = h == 1;
    auto raw = with_kernel(
        h, n, limits.kernel,
        [&](uint64_t hk) { return mitm_kernel<uint64_t>(hk, n, h1, limits); },
#ifdef __SIZEOF_INT128__
        [&](u128 hk) { return mitm_kernel<u128>(hk, n, h1, limits); },
#else
        [&](const ExactInt& hk) { return mitm_kernel<ExactInt>(hk, n, h1, limits); },
#endif
        [&](const ExactInt& hk) { return mitm_kernel<ExactInt>(hk, n, h1, limits); });
    return postprocess(std::move(raw), h);
}

std::vector<Solution> run_search(const SearchConfig& config, const SearchLimits& limits) {
    if (config.method == Method::Brute)
        return brute_force_search(config.h, config.bound, limits);
    return mitm_search(config.h, config.bound, limits);
}

bool solution_order_less(const Solution& x, const Solution& y) {
    return std::make_tuple(std::max(x.a, x.d), x.a, x.d, x.c, x.b) <
           std::make_tuple(std::max(y.a, y.d), y.a, y.d, y.c, y.b);
}

namespace {

ExactInt abs_of(const ExactInt& x) {
    return x < 0 ? ExactInt(-x) : x;
}

// Best family-provided solution for h, or nullopt. Candidates are compared
// by the solution order; ties (several parameter choices landing on the
// same canonical solution) prefer catalog order, then smaller q, then
// smaller |p| with positive p first — the plainest way to write the tag.
std::optional<Solution> pick_family_solution(const std::vector<FamilyMatch>& matches) {
    std::optional<Solution> best;
    std::tuple<size_t, ExactInt, ExactInt, int> best_meta;
    for (const FamilyMatch& m : matches) {
        const Family& fam = family_by_id(m.family_id);
        Solution raw = instantiate(fam, m.p, m.q);
        if (!is_nontrivial(raw))
            continue;
        Solution cand = canonicalize(raw);
        auto meta = std::make_tuple(catalog_index(m.family_id), m.q, abs_of(m.p),
                                    m.p < 0 ? 1 : 0);
        if (!best || solution_order_less(cand, *best) ||
            (!solution_order_less(*best, cand) && meta < best_meta)) {
            best = std::move(cand);
            best_meta = std::move(meta);
        }
    }
    return best;
}

std::optional<Solution> search_with_doubling(const ExactInt& h, int initial_bound,
                                             int max_bound, const SearchLimits& limits) {
    int n = initial_bound;
    for (;;) {
        auto sols = mitm_search(h, n, limits);
        if (!sols.empty())
            return sols.front();
        if (n >= max_bound)
            return std::nullopt;
        n = n > max_bound / 2 ? max_bound : n * 2;
    }
}

} // namespace

std::optional<Solution> find_solution(const ExactInt& h, int initial_bound,
                                      int max_bound, const SearchLimits& limits) {
    if (initial_bound < 1 || initial_bound > max_bound)
        throw std::invalid_argument("find_solution: need 1 <= initial_bound <= max_bound");
    if (auto fam = pick_family_solution(match_h(h)))
        return fam;
    return search_with_doubling(h, initial_bound, max_bound, limits);
}

std::vector<SearchReport> table_run(const ExactInt& h_lo, const ExactInt& h_hi,
                                    int bound, const SearchLimits& limits) {
    if (h_lo < 1 || h_hi < h_lo)
        throw std::invalid_argument("table_run: need 1 <= h_lo <= h_hi");
    if (bound < 1)
        throw std::invalid_argument("table_run: bound must be >= 1");
    std::vector<SearchReport> reports;
    for (ExactInt h = h_lo; h <= h_hi; ++h) {
        const auto t0 = std::chrono::steady_clock::now();
        SearchReport rep;
        rep.h = h;
        rep.bound = bound;
        rep.matches = match_h(h);
        if (auto fam = pick_family_solution(rep.matches)) {
            rep.solutions.push_back(std::move(*fam));
            rep.method = "family";
        } else if (auto found = search_with_doubling(h, bound, bound, limits)) {
            rep.solutions.push_back(std::move(*found));
            rep.method = "mitm";
        } else {
            rep.method = "none";
        }
        rep.elapsed_ms = std::chrono::duration<double, std::milli>(
                             std::chrono::steady_clock::now() - t0)
                             .count();
        reports.push_back(std::move(rep));
    }
    return reports;
}

} // namespace quartet
