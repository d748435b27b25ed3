#pragma once

// Deterministic random instances for property checks. Draws use raw
// mt19937_64 output reduced modulo the range, so a seed gives the same
// corpus on every platform.

#include "obr/adversary.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace obr::corpus {

struct Case {
    ProblemInstance instance;
    std::vector<Request> sequence;
};

class Draw {
public:
    explicit Draw(std::uint64_t seed) : rng_(seed) {}

    /// Uniform in [0, n).
    int below(int n) { return static_cast<int>(rng_() % static_cast<std::uint64_t>(n)); }
    /// Uniform in [lo, hi].
    int between(int lo, int hi) { return lo + below(hi - lo + 1); }
    template <class T>
    const T &pick(const std::vector<T> &values) {
        return values[static_cast<std::size_t>(below(static_cast<int>(values.size())))];
    }
    std::uint64_t raw() { return rng_(); }

    /// k/den with k uniform in [1, max_k].
    Rational grid(int den, int max_k) { return make_rational(between(1, max_k), den); }

private:
    std::mt19937_64 rng_;
};

inline std::vector<Request> random_jobs(Draw &d, int count, int den, int max_k) {
    std::vector<Request> out;
    for (int i = 0; i < count; ++i) {
        out.emplace_back(Job{d.grid(den, max_k)});
    }
    return out;
}

/// m in `ms`, up to `max_jobs` jobs with sizes on the 1/4 or 1/8 grid in (0, 1].
inline Case identical_makespan_case(Draw &d, const std::vector<int> &ms, int max_jobs) {
    const int m = d.pick(ms);
    const int den = d.pick(std::vector<int>{4, 8});
    return {identical_makespan(m), random_jobs(d, d.between(0, max_jobs), den, den)};
}

inline Case identical_santa_case(Draw &d, const std::vector<int> &ms, int max_jobs) {
    const int m = d.pick(ms);
    const int den = d.pick(std::vector<int>{4, 8});
    return {identical_santa(m), random_jobs(d, d.between(0, max_jobs), den, den)};
}

/// Two machines with speeds (s, 1); sizes k/4 for k in [1, 8].
inline Case related_makespan_case(Draw &d, const std::vector<Rational> &speeds, int max_jobs) {
    return {related_makespan(d.pick(speeds)), random_jobs(d, d.between(0, max_jobs), 4, 8)};
}

inline Case related_santa_case(Draw &d, const std::vector<Rational> &speeds, int max_jobs) {
    return {related_santa(d.pick(speeds)), random_jobs(d, d.between(0, max_jobs), 4, 8)};
}

inline std::vector<Request> random_items(Draw &d, int count, int den) {
    std::vector<Request> out;
    for (int i = 0; i < count; ++i) {
        out.emplace_back(Item{d.grid(den, den)});
    }
    return out;
}

/// Dual bin packing with `bins` bins and items on the 1/8 grid.
inline Case dual_case(Draw &d, int bins, int max_items) {
    return {DualBinPacking{bins}, random_items(d, d.between(0, max_items), 8)};
}

inline Case bin_packing_case(Draw &d, int max_items) { return {BinPacking{}, random_items(d, d.between(0, max_items), 8)}; }

inline Case covering_case(Draw &d, int max_items) {
    return {BinCovering{}, random_items(d, d.between(0, max_items), 8)};
}

/// k in [3, 6], up to 3 seats, intervals [a, b) with 1 <= a < b <= k.
inline Case seat_case(Draw &d, int max_requests) {
    const int k = d.between(3, 6);
    const int seats = d.between(1, 3);
    std::vector<Request> seq;
    const int count = d.between(0, max_requests);
    for (int i = 0; i < count; ++i) {
        const int a = d.between(1, k - 1);
        seq.emplace_back(Interval{a, d.between(a + 1, k)});
    }
    return {SeatReservation{k, seats}, std::move(seq)};
}

/// Edge arrivals on 2..8 vertices.
inline Case matching_case(Draw &d, int max_edges) {
    const int vertices = d.between(2, 8);
    return {Matching{}, adversary::random_edges(d.raw(), d.between(0, max_edges), vertices)};
}

}  // namespace obr::corpus
