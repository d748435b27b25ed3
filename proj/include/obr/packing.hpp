#pragma once

// Classic bin packing, bin covering and dual bin packing with unit-capacity
// bins.

#include "obr/problem.hpp"

#include <optional>
#include <vector>

namespace obr::packing {

/// Classic and covering states hold one load per open bin and grow on
/// OpenNewBin. Dual states hold exactly n loads from the start.
struct BinState {
    std::vector<Rational> loads;
    int accepted = 0;  // dual only
    int seen = 0;      // dual only: requests processed so far

    static BinState for_instance(const ProblemInstance &inst) {
        BinState s;
        if (const auto *d = std::get_if<DualBinPacking>(&inst)) {
            s.loads.assign(static_cast<std::size_t>(d->bins), Rational());
        }
        return s;
    }

    [[nodiscard]] int bins() const { return static_cast<int>(loads.size()); }
    [[nodiscard]] bool fits(int i, const Rational &size) const {
        return loads[static_cast<std::size_t>(i)] + size <= Rational(1);
    }
    [[nodiscard]] bool fits_somewhere(const Rational &size) const {
        for (int i = 0; i < bins(); ++i) {
            if (fits(i, size)) {
                return true;
            }
        }
        return false;
    }

    friend bool operator==(const BinState &, const BinState &) = default;
};

inline Rational bins_used(const BinState &s) { return Rational(s.bins()); }

inline Rational covered_bins(const BinState &s) {
    int covered = 0;
    for (const auto &l : s.loads) {
        covered += l >= Rational(1) ? 1 : 0;
    }
    return Rational(covered);
}

inline Rational accepted_count(const BinState &s) { return Rational(s.accepted); }

enum class PackPolicy {
    FirstFit,
    BestFit,
    WorstFit,
    CoveringGreedy,
    DualFirstFit,
    DualBestFit,
    DualWorstFit,
    UnfairFirstFit,
};

inline bool is_dual_policy(PackPolicy p) {
    return p == PackPolicy::DualFirstFit || p == PackPolicy::DualBestFit || p == PackPolicy::DualWorstFit ||
           p == PackPolicy::UnfairFirstFit;
}

/// Fair dual policies never reject an item that fits.
inline bool is_fair_policy(PackPolicy p) { return is_dual_policy(p) && p != PackPolicy::UnfairFirstFit; }

inline void check_policy(PackPolicy policy, const ProblemInstance &inst) {
    const bool ok = policy == PackPolicy::CoveringGreedy ? std::holds_alternative<BinCovering>(inst)
                    : is_dual_policy(policy)             ? std::holds_alternative<DualBinPacking>(inst)
                                                         : std::holds_alternative<BinPacking>(inst);
    if (!ok) {
        throw Error("policy/instance mismatch for a " + problem_name(inst) + " instance");
    }
}

namespace detail {

inline std::optional<int> first_fit(const BinState &s, const Rational &size) {
    for (int i = 0; i < s.bins(); ++i) {
        if (s.fits(i, size)) {
            return i;
        }
    }
    return std::nullopt;
}

/// Fullest (prefer_full) or emptiest bin with room, lowest index on ties.
inline std::optional<int> extreme_fit(const BinState &s, const Rational &size, bool prefer_full) {
    std::optional<int> best;
    for (int i = 0; i < s.bins(); ++i) {
        if (!s.fits(i, size)) {
            continue;
        }
        const auto &li = s.loads[static_cast<std::size_t>(i)];
        if (!best) {
            best = i;
            continue;
        }
        const auto &lb = s.loads[static_cast<std::size_t>(*best)];
        if (prefer_full ? li > lb : li < lb) {
            best = i;
        }
    }
    return best;
}

}  // namespace detail

inline Decision pack_step(PackPolicy policy, const ProblemInstance &inst, const BinState &state, const Item &item) {
    check_policy(policy, inst);
    const Rational &size = item.size;
    auto place_or = [](std::optional<int> bin, Decision otherwise) -> Decision {
        if (bin) {
            return AssignBin{*bin};
        }
        return otherwise;
    };
    switch (policy) {
    case PackPolicy::FirstFit:
        return place_or(detail::first_fit(state, size), OpenNewBin{});
    case PackPolicy::BestFit:
        return place_or(detail::extreme_fit(state, size, true), OpenNewBin{});
    case PackPolicy::WorstFit:
        return place_or(detail::extreme_fit(state, size, false), OpenNewBin{});
    case PackPolicy::CoveringGreedy:
        if (state.loads.empty() || state.loads.back() >= Rational(1)) {
            return OpenNewBin{};
        }
        return AssignBin{state.bins() - 1};
    case PackPolicy::DualFirstFit:
        return place_or(detail::first_fit(state, size), Reject{});
    case PackPolicy::DualBestFit:
        return place_or(detail::extreme_fit(state, size, true), Reject{});
    case PackPolicy::DualWorstFit:
        return place_or(detail::extreme_fit(state, size, false), Reject{});
    case PackPolicy::UnfairFirstFit: {
        // A large item is rejected while rejecting keeps the accepted count at
        // or above two thirds of the requests seen, this one included.
        if (size > make_rational(1, 2) && 3 * state.accepted >= 2 * (state.seen + 1)) {
            return Reject{};
        }
        return place_or(detail::first_fit(state, size), Reject{});
    }
    }
    throw Error("unknown packing policy");
}

}  // namespace obr::packing
