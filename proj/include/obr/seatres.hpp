#pragma once

// Unit-price seat reservation on a train with k stations.

#include "obr/problem.hpp"

#include <vector>

namespace obr::seatres {

struct SeatState {
    std::vector<std::vector<Interval>> seats;  // disjoint intervals per seat
    int accepted = 0;

    static SeatState for_instance(const SeatReservation &inst) {
        SeatState s;
        s.seats.resize(static_cast<std::size_t>(inst.seats));
        return s;
    }

    [[nodiscard]] int seat_count() const { return static_cast<int>(seats.size()); }

    [[nodiscard]] bool fits_on(int seat, const Interval &iv) const {
        for (const auto &held : seats[static_cast<std::size_t>(seat)]) {
            if (held.overlaps(iv)) {
                return false;
            }
        }
        return true;
    }

    [[nodiscard]] int occupied_length(int seat) const {
        int total = 0;
        for (const auto &held : seats[static_cast<std::size_t>(seat)]) {
            total += held.length();
        }
        return total;
    }

    friend bool operator==(const SeatState &, const SeatState &) = default;
};

inline bool fits_somewhere(const SeatState &state, const Interval &iv) {
    for (int i = 0; i < state.seat_count(); ++i) {
        if (state.fits_on(i, iv)) {
            return true;
        }
    }
    return false;
}

enum class SeatPolicy { FirstFit, BestFit };

/// Both policies are fair: they reject only when no seat can take the
/// interval. Best-Fit picks the seat left with the fewest empty stations.
inline Decision seat_step(SeatPolicy policy, const SeatReservation &inst, const SeatState &state,
                          const Interval &iv) {
    int best = -1;
    int best_free = 0;
    for (int i = 0; i < state.seat_count(); ++i) {
        if (!state.fits_on(i, iv)) {
            continue;
        }
        if (policy == SeatPolicy::FirstFit) {
            return AssignSeat{i};
        }
        const int free_after = (inst.stations - 1) - state.occupied_length(i) - iv.length();
        if (best < 0 || free_after < best_free) {
            best = i;
            best_free = free_after;
        }
    }
    if (best >= 0) {
        return AssignSeat{best};
    }
    return Reject{};
}

}  // namespace obr::seatres
