#pragma once

#include "quartet/exact.hpp"
#include "quartet/family.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace quartet {

enum class Method { Auto, Mitm, Brute };

// Integer width the search kernels run in. Auto picks the narrowest type
// that can hold h * N^4 (decided in exact arithmetic before any kernel
// runs), falling back to arbitrary precision when nothing fixed fits, so a
// kernel can never overflow. The explicit choices exist for the
// equivalence tests.
enum class KernelChoice { Auto, U64, U128, Big };

struct SearchLimits {
    // brute_force_search is the quartic-cost oracle; refuse bounds where it
    // would grind (throws BoundTooLargeError above this).
    int max_brute_bound = 200;

    // Ceiling on key-side entries N(N+1)/2 held in memory by the
    // meet-in-the-middle search; ~2*10^8 entries (N around 20000) is a few
    // GiB, which is where a workstation stops being happy.
    std::size_t max_key_entries = 210'000'000;

    // At or below this many key entries the join uses a hash multimap;
    // above it, a sorted vector with binary search (leaner per entry).
    std::size_t hash_join_threshold = 1'000'000;

    int threads = 1;                     // probe-side workers, >= 1
    KernelChoice kernel = KernelChoice::Auto;
};

// One search request. The h = 1 side-swap deduplication is part of the
// canonical-form contract and is always applied; the flag only documents it.
struct SearchConfig {
    ExactInt h;
    int bound = 0;
    Method method = Method::Auto;
    bool dedup_h1 = true;
};

// Exhaustive reference search: all canonical nontrivial solutions with
// 0 <= C < A <= n and 0 <= B < D <= n, sorted ascending by
// (max component, A, D, C, B). Four nested loops, no shortcuts — this is
// the oracle the fast path is tested against.
std::vector<Solution> brute_force_search(const ExactInt& h, int n,
                                         const SearchLimits& limits = {});

// Same result set as brute_force_search, via meet-in-the-middle: key every
// h*(D^4 - B^4) once, then probe each A^4 - C^4 against the table.
// Deterministic for any thread count: probe ranges are fixed by the bound
// alone and the merged result is globally sorted.
std::vector<Solution> mitm_search(const ExactInt& h, int n,
                                  const SearchLimits& limits = {});

// Dispatch on config.method (Auto means Mitm).
std::vector<Solution> run_search(const SearchConfig& config,
                                 const SearchLimits& limits = {});

// Cheapest known solution for h: try the family catalog first (no search),
// otherwise run mitm_search with the bound doubling from initial_bound up
// to max_bound. Returns the solution minimizing (max component, A, D, C, B);
// family ties prefer catalog order, then smaller q, then smaller |p| with
// positive p ahead of negative. std::nullopt when even the final bound
// finds nothing.
std::optional<Solution> find_solution(const ExactInt& h, int initial_bound,
                                      int max_bound,
                                      const SearchLimits& limits = {});

// Everything learned about one h: the matches, at most one solution, and
// which route produced it ("family", "mitm", or "none").
struct SearchReport {
    ExactInt h;
    int bound = 0;
    std::vector<Solution> solutions;     // empty or a single best solution
    std::vector<FamilyMatch> matches;
    std::string method;
    double elapsed_ms = 0.0;
};

// One report per h in [h_lo, h_hi], in order. Reports are independent, so a
// range can be split and the pieces concatenated — table runs are resumable.
std::vector<SearchReport> table_run(const ExactInt& h_lo, const ExactInt& h_hi,
                                    int bound, const SearchLimits& limits = {});

// The ordering used for all solution lists: (max component, A, D, C, B).
bool solution_order_less(const Solution& x, const Solution& y);

} // namespace quartet
