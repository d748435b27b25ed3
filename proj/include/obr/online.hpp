#pragma once

// Online execution: named algorithms, the request-by-request loop and the
// resulting decision traces.

#include "obr/model.hpp"
#include "obr/oracle.hpp"

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace obr {

enum class AlgorithmId {
    GreedyIdentical,
    GreedyRelated,
    GreedyRelatedFastTies,
    Fast,
    SantaGreedy,
    SantaLeastLoaded,
    Threshold43,
    FirstFit,
    BestFit,
    WorstFit,
    CoveringGreedy,
    DualFirstFit,
    DualBestFit,
    DualWorstFit,
    UnfairFirstFit,
    SeatFirstFit,
    SeatBestFit,
    MatchingGreedy,
};

namespace detail {
struct AlgorithmName {
    AlgorithmId id;
    std::string_view name;
};
inline constexpr std::array<AlgorithmName, 18> kAlgorithmNames{{
    {AlgorithmId::GreedyIdentical, "greedy-identical"},
    {AlgorithmId::GreedyRelated, "greedy-related"},
    {AlgorithmId::GreedyRelatedFastTies, "greedy-related-fastties"},
    {AlgorithmId::Fast, "fast"},
    {AlgorithmId::SantaGreedy, "santa-greedy"},
    {AlgorithmId::SantaLeastLoaded, "santa-least-loaded"},
    {AlgorithmId::Threshold43, "threshold-4-3"},
    {AlgorithmId::FirstFit, "first-fit"},
    {AlgorithmId::BestFit, "best-fit"},
    {AlgorithmId::WorstFit, "worst-fit"},
    {AlgorithmId::CoveringGreedy, "covering-greedy"},
    {AlgorithmId::DualFirstFit, "dual-first-fit"},
    {AlgorithmId::DualBestFit, "dual-best-fit"},
    {AlgorithmId::DualWorstFit, "dual-worst-fit"},
    {AlgorithmId::UnfairFirstFit, "unfair-first-fit"},
    {AlgorithmId::SeatFirstFit, "seat-first-fit"},
    {AlgorithmId::SeatBestFit, "seat-best-fit"},
    {AlgorithmId::MatchingGreedy, "matching-greedy"},
}};
}  // namespace detail

inline std::string_view algorithm_name(AlgorithmId id) {
    for (const auto &a : detail::kAlgorithmNames) {
        if (a.id == id) {
            return a.name;
        }
    }
    return "?";
}

inline AlgorithmId parse_algorithm(std::string_view name) {
    for (const auto &a : detail::kAlgorithmNames) {
        if (a.name == name) {
            return a.id;
        }
    }
    throw Error("unknown algorithm id '" + std::string(name) + "'");
}

inline std::vector<std::string_view> algorithm_names() {
    std::vector<std::string_view> out;
    for (const auto &a : detail::kAlgorithmNames) {
        out.push_back(a.name);
    }
    return out;
}

/// An online decision rule. `history` holds every request seen so far, the
/// current one last.
using OnlinePolicy = std::function<Decision(const ProblemInstance &inst, const State &state, const Request &request,
                                            const std::vector<Request> &history)>;

namespace detail {

inline std::optional<scheduling::SchedPolicy> sched_policy(AlgorithmId id) {
    using P = scheduling::SchedPolicy;
    switch (id) {
    case AlgorithmId::GreedyIdentical: return P::GreedyIdentical;
    case AlgorithmId::GreedyRelated: return P::GreedyRelatedSlowTies;
    case AlgorithmId::GreedyRelatedFastTies: return P::GreedyRelatedFastTies;
    case AlgorithmId::Fast: return P::Fast;
    case AlgorithmId::SantaGreedy: return P::SantaGreedy;
    case AlgorithmId::SantaLeastLoaded: return P::SantaLeastLoaded;
    case AlgorithmId::Threshold43: return P::Threshold43;
    default: return std::nullopt;
    }
}

inline std::optional<packing::PackPolicy> pack_policy(AlgorithmId id) {
    using P = packing::PackPolicy;
    switch (id) {
    case AlgorithmId::FirstFit: return P::FirstFit;
    case AlgorithmId::BestFit: return P::BestFit;
    case AlgorithmId::WorstFit: return P::WorstFit;
    case AlgorithmId::CoveringGreedy: return P::CoveringGreedy;
    case AlgorithmId::DualFirstFit: return P::DualFirstFit;
    case AlgorithmId::DualBestFit: return P::DualBestFit;
    case AlgorithmId::DualWorstFit: return P::DualWorstFit;
    case AlgorithmId::UnfairFirstFit: return P::UnfairFirstFit;
    default: return std::nullopt;
    }
}

}  // namespace detail

/// Throws unless the algorithm is defined for the instance's problem family.
inline void check_algorithm(AlgorithmId id, const ProblemInstance &inst) {
    validate(inst);
    if (auto p = detail::sched_policy(id)) {
        scheduling::check_policy(*p, inst);
    } else if (auto p = detail::pack_policy(id)) {
        packing::check_policy(*p, inst);
    } else if (id == AlgorithmId::SeatFirstFit || id == AlgorithmId::SeatBestFit) {
        if (!std::holds_alternative<SeatReservation>(inst)) {
            throw Error("policy/instance mismatch: seat policies need a seat-reservation instance");
        }
    } else if (!std::holds_alternative<Matching>(inst)) {
        throw Error("policy/instance mismatch: matching-greedy needs a matching instance");
    }
}

/// The step function of a named algorithm. Threshold43 queries the exact
/// optimum of each prefix with `oracle_config`.
inline OnlinePolicy make_policy(AlgorithmId id, const oracle::SearchConfig &oracle_config = {}) {
    if (auto p = detail::sched_policy(id)) {
        const auto policy = *p;
        return [policy, oracle_config](const ProblemInstance &inst, const State &state, const Request &r,
                                       const std::vector<Request> &history) -> Decision {
            std::optional<Rational> prefix_opt;
            if (policy == scheduling::SchedPolicy::Threshold43) {
                auto opt = oracle::solve_unconstrained(inst, history, oracle_config);
                if (!opt.complete()) {
                    throw Error("threshold-4-3: prefix optimum not resolved (" + std::string(to_string(opt.status)) +
                                ")");
                }
                prefix_opt = opt.value;
            }
            return scheduling::schedule_step(policy, inst, std::get<scheduling::SchedState>(state), std::get<Job>(r),
                                             prefix_opt);
        };
    }
    if (auto p = detail::pack_policy(id)) {
        const auto policy = *p;
        return [policy](const ProblemInstance &inst, const State &state, const Request &r,
                        const std::vector<Request> &) -> Decision {
            return packing::pack_step(policy, inst, std::get<packing::BinState>(state), std::get<Item>(r));
        };
    }
    if (id == AlgorithmId::SeatFirstFit || id == AlgorithmId::SeatBestFit) {
        const auto policy = id == AlgorithmId::SeatFirstFit ? seatres::SeatPolicy::FirstFit : seatres::SeatPolicy::BestFit;
        return [policy](const ProblemInstance &inst, const State &state, const Request &r,
                        const std::vector<Request> &) -> Decision {
            const auto *sr = std::get_if<SeatReservation>(&inst);
            if (sr == nullptr) {
                throw Error("policy/instance mismatch: seat policies need a seat-reservation instance");
            }
            return seatres::seat_step(policy, *sr, std::get<seatres::SeatState>(state), std::get<Interval>(r));
        };
    }
    return [](const ProblemInstance &inst, const State &state, const Request &r,
              const std::vector<Request> &) -> Decision {
        if (!std::holds_alternative<Matching>(inst)) {
            throw Error("policy/instance mismatch: matching-greedy needs a matching instance");
        }
        return graphs::matching_greedy_step(std::get<graphs::MatchState>(state), std::get<Edge>(r));
    };
}

/// Incremental online run; adaptive adversaries feed it one request at a
/// time and read back each decision.
class OnlineRun {
public:
    OnlineRun(ProblemInstance inst, OnlinePolicy policy)
        : inst_(std::move(inst)), policy_(std::move(policy)), state_(initial_state(inst_)) {
        trace_.final_value = objective(inst_, state_);
    }

    const Decision &step(const Request &r) {
        check_request(inst_, r);
        history_.push_back(r);
        Decision d = policy_(inst_, state_, r, history_);
        if (auto why = illegal_reason(inst_, state_, r, d)) {
            throw Error("online algorithm made an illegal decision at step " + std::to_string(history_.size()) +
                        ": " + *why);
        }
        apply_in_place(inst_, state_, r, d);
        Rational v = objective(inst_, state_);
        trace_.final_value = v;
        trace_.steps.push_back({std::move(d), std::move(v)});
        return trace_.steps.back().decision;
    }

    [[nodiscard]] const ProblemInstance &instance() const { return inst_; }
    [[nodiscard]] const State &state() const { return state_; }
    [[nodiscard]] const DecisionTrace &trace() const { return trace_; }
    [[nodiscard]] const std::vector<Request> &sequence() const { return history_; }

private:
    ProblemInstance inst_;
    OnlinePolicy policy_;
    State state_;
    std::vector<Request> history_;
    DecisionTrace trace_;
};

inline DecisionTrace run_online(const ProblemInstance &inst, const OnlinePolicy &policy,
                                const std::vector<Request> &seq) {
    check_sequence(inst, seq);
    OnlineRun run(inst, policy);
    for (const auto &r : seq) {
        run.step(r);
    }
    return run.trace();
}

inline DecisionTrace run_online(const ProblemInstance &inst, AlgorithmId id, const std::vector<Request> &seq,
                                const oracle::SearchConfig &oracle_config = {}) {
    check_algorithm(id, inst);
    return run_online(inst, make_policy(id, oracle_config), seq);
}

inline DecisionTrace run_online(const ProblemInstance &inst, std::string_view algorithm,
                                const std::vector<Request> &seq) {
    return run_online(inst, parse_algorithm(algorithm), seq);
}

}  // namespace obr
