#pragma once

// Brute-force optimum: every legal decision at every step, no symmetry
// reduction, no bounds, no memo. Only for tiny inputs; used to cross-check
// the branch-and-bound oracle.

#include "obr/model.hpp"

#include <optional>
#include <vector>

namespace obr::reference {

/// Every decision that could be legal for the problem family, before the
/// legality filter.
inline std::vector<Decision> all_candidates(const State &state) {
    std::vector<Decision> out;
    if (const auto *s = std::get_if<scheduling::SchedState>(&state)) {
        for (int i = 0; i < s->machines(); ++i) {
            out.emplace_back(AssignMachine{i});
        }
    } else if (const auto *s = std::get_if<packing::BinState>(&state)) {
        for (int i = 0; i < s->bins(); ++i) {
            out.emplace_back(AssignBin{i});
        }
        out.emplace_back(OpenNewBin{});
        out.emplace_back(Reject{});
    } else if (const auto *s = std::get_if<seatres::SeatState>(&state)) {
        for (int i = 0; i < s->seat_count(); ++i) {
            out.emplace_back(AssignSeat{i});
        }
        out.emplace_back(Reject{});
    } else {
        out.emplace_back(AcceptEdge{});
        out.emplace_back(RejectEdge{});
    }
    return out;
}

namespace detail {

inline void explore(const ProblemInstance &inst, const std::vector<Request> &seq, const PrefixProfile *profile,
                    const State &state, std::size_t t, std::optional<Rational> &best) {
    const Direction dir = direction(inst);
    if (t == seq.size()) {
        const Rational v = objective(inst, state);
        if (!best || better(dir, v, *best)) {
            best = v;
        }
        return;
    }
    for (const auto &d : all_candidates(state)) {
        if (illegal_reason(inst, state, seq[t], d)) {
            continue;
        }
        State next = state;
        apply_in_place(inst, next, seq[t], d);
        if (profile != nullptr && !dominates(dir, objective(inst, next), profile->values[t])) {
            continue;
        }
        explore(inst, seq, profile, next, t + 1, best);
    }
}

}  // namespace detail

/// Exact optimum, constrained by `profile` when given; nullopt when no
/// decision sequence satisfies the constraint.
inline std::optional<Rational> naive_optimum(const ProblemInstance &inst, const std::vector<Request> &seq,
                                             const PrefixProfile *profile = nullptr) {
    check_sequence(inst, seq);
    if (profile != nullptr && profile->values.size() != seq.size()) {
        throw Error("profile length differs from the sequence length");
    }
    std::optional<Rational> best;
    detail::explore(inst, seq, profile, initial_state(inst), 0, best);
    return best;
}

}  // namespace obr::reference
