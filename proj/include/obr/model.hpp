#pragma once

// Problem-independent view of a partial solution: legality, transitions and
// the objective of every prefix.

#include "obr/graphs.hpp"
#include "obr/packing.hpp"
#include "obr/problem.hpp"
#include "obr/scheduling.hpp"
#include "obr/seatres.hpp"

#include <optional>
#include <string>
#include <variant>

namespace obr {

using State = std::variant<scheduling::SchedState, packing::BinState, seatres::SeatState, graphs::MatchState>;

inline State initial_state(const ProblemInstance &inst) {
    validate(inst);
    if (const auto *speeds = machine_speeds(inst)) {
        return scheduling::SchedState::empty(*speeds);
    }
    if (const auto *sr = std::get_if<SeatReservation>(&inst)) {
        return seatres::SeatState::for_instance(*sr);
    }
    if (std::holds_alternative<Matching>(inst)) {
        return graphs::MatchState{};
    }
    return packing::BinState::for_instance(inst);
}

/// Objective of a (possibly partial) solution.
inline Rational objective(const ProblemInstance &inst, const State &state) {
    if (std::holds_alternative<Makespan>(inst)) {
        return scheduling::makespan(std::get<scheduling::SchedState>(state));
    }
    if (std::holds_alternative<Santa>(inst)) {
        return scheduling::min_load(std::get<scheduling::SchedState>(state));
    }
    if (std::holds_alternative<BinPacking>(inst)) {
        return packing::bins_used(std::get<packing::BinState>(state));
    }
    if (std::holds_alternative<BinCovering>(inst)) {
        return packing::covered_bins(std::get<packing::BinState>(state));
    }
    if (std::holds_alternative<DualBinPacking>(inst)) {
        return packing::accepted_count(std::get<packing::BinState>(state));
    }
    if (std::holds_alternative<SeatReservation>(inst)) {
        return Rational(std::get<seatres::SeatState>(state).accepted);
    }
    return std::get<graphs::MatchState>(state).total_weight;
}

/// Empty when `d` is legal for `r` in `state`; otherwise the reason.
inline std::optional<std::string> illegal_reason(const ProblemInstance &inst, const State &state, const Request &r,
                                                 const Decision &d) {
    auto bad_kind = [&] { return "decision '" + describe(d) + "' does not apply to " + problem_name(inst); };
    if (machine_speeds(inst) != nullptr) {
        const auto *a = std::get_if<AssignMachine>(&d);
        if (a == nullptr) {
            return bad_kind();
        }
        const auto &s = std::get<scheduling::SchedState>(state);
        if (a->index < 0 || a->index >= s.machines()) {
            return "machine index " + std::to_string(a->index) + " out of range";
        }
        return std::nullopt;
    }
    if (std::holds_alternative<SeatReservation>(inst)) {
        if (std::holds_alternative<Reject>(d)) {
            return std::nullopt;
        }
        const auto *a = std::get_if<AssignSeat>(&d);
        if (a == nullptr) {
            return bad_kind();
        }
        const auto &s = std::get<seatres::SeatState>(state);
        if (a->index < 0 || a->index >= s.seat_count()) {
            return "seat index " + std::to_string(a->index) + " out of range";
        }
        if (!s.fits_on(a->index, std::get<Interval>(r))) {
            return "interval overlaps a reservation on seat " + std::to_string(a->index);
        }
        return std::nullopt;
    }
    if (std::holds_alternative<Matching>(inst)) {
        if (std::holds_alternative<RejectEdge>(d)) {
            return std::nullopt;
        }
        if (!std::holds_alternative<AcceptEdge>(d)) {
            return bad_kind();
        }
        if (!std::get<graphs::MatchState>(state).exposed(std::get<Edge>(r))) {
            return std::string("edge shares an endpoint with the matching");
        }
        return std::nullopt;
    }
    // Packing variants.
    const auto &s = std::get<packing::BinState>(state);
    const auto &size = std::get<Item>(r).size;
    const bool dual = std::holds_alternative<DualBinPacking>(inst);
    const bool covering = std::holds_alternative<BinCovering>(inst);
    if (std::holds_alternative<Reject>(d)) {
        return dual ? std::nullopt : std::optional<std::string>(bad_kind());
    }
    if (std::holds_alternative<OpenNewBin>(d)) {
        return dual ? std::optional<std::string>(bad_kind()) : std::nullopt;
    }
    const auto *a = std::get_if<AssignBin>(&d);
    if (a == nullptr) {
        return bad_kind();
    }
    if (a->index < 0 || a->index >= s.bins()) {
        return "bin index " + std::to_string(a->index) + " out of range";
    }
    if (!covering && !s.fits(a->index, size)) {
        return "item does not fit in bin " + std::to_string(a->index);
    }
    return std::nullopt;
}

/// Applies a decision known to be legal.
inline void apply_in_place(const ProblemInstance &inst, State &state, const Request &r, const Decision &d) {
    if (machine_speeds(inst) != nullptr) {
        auto &s = std::get<scheduling::SchedState>(state);
        s.assigned[static_cast<std::size_t>(std::get<AssignMachine>(d).index)] += std::get<Job>(r).size;
        return;
    }
    if (std::holds_alternative<SeatReservation>(inst)) {
        auto &s = std::get<seatres::SeatState>(state);
        if (const auto *a = std::get_if<AssignSeat>(&d)) {
            s.seats[static_cast<std::size_t>(a->index)].push_back(std::get<Interval>(r));
            ++s.accepted;
        }
        return;
    }
    if (std::holds_alternative<Matching>(inst)) {
        auto &s = std::get<graphs::MatchState>(state);
        if (std::holds_alternative<AcceptEdge>(d)) {
            const auto &e = std::get<Edge>(r);
            s.matched.insert(e.u);
            s.matched.insert(e.v);
            s.total_weight += e.weight;
            s.accepted_edges.push_back(e);
        }
        return;
    }
    auto &s = std::get<packing::BinState>(state);
    const auto &size = std::get<Item>(r).size;
    const bool dual = std::holds_alternative<DualBinPacking>(inst);
    if (const auto *a = std::get_if<AssignBin>(&d)) {
        s.loads[static_cast<std::size_t>(a->index)] += size;
        s.accepted += dual ? 1 : 0;
    } else if (std::holds_alternative<OpenNewBin>(d)) {
        s.loads.push_back(size);
    }
    s.seen += dual ? 1 : 0;
}

/// Checks legality, then applies. Throws with the reason on an illegal move.
inline State apply(const ProblemInstance &inst, State state, const Request &r, const Decision &d) {
    if (auto why = illegal_reason(inst, state, r, d)) {
        throw Error(*why);
    }
    apply_in_place(inst, state, r, d);
    return state;
}

}  // namespace obr
