#pragma once

// Makespan and Santa Claus scheduling on identical and uniformly related
// machines.

#include "obr/problem.hpp"

#include <optional>
#include <vector>

namespace obr::scheduling {

struct SchedState {
    std::vector<Rational> assigned;  // total job size per machine
    std::vector<Rational> speeds;

    static SchedState empty(const std::vector<Rational> &speeds) {
        return SchedState{std::vector<Rational>(speeds.size()), speeds};
    }

    [[nodiscard]] int machines() const { return static_cast<int>(assigned.size()); }
    [[nodiscard]] Rational completion(int i) const {
        return assigned[static_cast<std::size_t>(i)] / speeds[static_cast<std::size_t>(i)];
    }
    /// Completion time of machine i if `size` were added to it.
    [[nodiscard]] Rational completion_with(int i, const Rational &size) const {
        return (assigned[static_cast<std::size_t>(i)] + size) / speeds[static_cast<std::size_t>(i)];
    }

    friend bool operator==(const SchedState &, const SchedState &) = default;
};

inline Rational makespan(const SchedState &s) {
    Rational best;
    for (int i = 0; i < s.machines(); ++i) {
        best = max(best, s.completion(i));
    }
    return best;
}

/// Minimum completion time; 0 while any machine is empty.
inline Rational min_load(const SchedState &s) {
    if (s.assigned.empty()) {
        return Rational();
    }
    Rational best = s.completion(0);
    for (int i = 1; i < s.machines(); ++i) {
        best = min(best, s.completion(i));
    }
    return best;
}

/// Makespan after adding `size` to machine i.
inline Rational makespan_with(const SchedState &s, int i, const Rational &size) {
    Rational best = s.completion_with(i, size);
    for (int j = 0; j < s.machines(); ++j) {
        if (j != i) {
            best = max(best, s.completion(j));
        }
    }
    return best;
}

enum class SchedPolicy {
    GreedyIdentical,
    GreedyRelatedSlowTies,
    GreedyRelatedFastTies,
    Fast,
    SantaGreedy,
    SantaLeastLoaded,
    Threshold43,
};

inline bool is_santa_policy(SchedPolicy p) {
    return p == SchedPolicy::SantaGreedy || p == SchedPolicy::SantaLeastLoaded;
}

inline void check_policy(SchedPolicy policy, const ProblemInstance &inst) {
    const auto *speeds = machine_speeds(inst);
    if (speeds == nullptr) {
        throw Error("scheduling policy used on a " + problem_name(inst) + " instance");
    }
    if (is_santa_policy(policy) != std::holds_alternative<Santa>(inst)) {
        throw Error("policy/instance mismatch: Santa Claus policies need a santa instance and vice versa");
    }
    switch (policy) {
    case SchedPolicy::GreedyRelatedSlowTies:
    case SchedPolicy::GreedyRelatedFastTies:
    case SchedPolicy::Fast:
        if (speeds->size() != 2) {
            throw Error("related-machine policies need exactly two machines");
        }
        break;
    case SchedPolicy::Threshold43:
        if (!identical_machines(*speeds)) {
            throw Error("threshold-4-3 needs identical machines");
        }
        break;
    default:
        break;
    }
}

inline int least_loaded(const SchedState &s) {
    int best = 0;
    for (int i = 1; i < s.machines(); ++i) {
        if (s.completion(i) < s.completion(best)) {
            best = i;
        }
    }
    return best;
}

/// One online scheduling decision. `prefix_opt` is the optimal makespan of
/// the prefix ending with `job` and is required by Threshold43 only.
inline Decision schedule_step(SchedPolicy policy, const ProblemInstance &inst, const SchedState &state,
                              const Job &job, const std::optional<Rational> &prefix_opt = std::nullopt) {
    check_policy(policy, inst);
    switch (policy) {
    case SchedPolicy::GreedyIdentical:
    case SchedPolicy::SantaGreedy:
    case SchedPolicy::SantaLeastLoaded:
        return AssignMachine{least_loaded(state)};
    case SchedPolicy::GreedyRelatedSlowTies:
    case SchedPolicy::GreedyRelatedFastTies: {
        const bool slow_ties = policy == SchedPolicy::GreedyRelatedSlowTies;
        int best = 0;
        Rational best_ms = makespan_with(state, 0, job.size);
        for (int i = 1; i < state.machines(); ++i) {
            const Rational ms = makespan_with(state, i, job.size);
            if (ms < best_ms || (ms == best_ms && slow_ties)) {
                best = i;
                best_ms = ms;
            }
        }
        return AssignMachine{best};
    }
    case SchedPolicy::Fast:
        return AssignMachine{0};
    case SchedPolicy::Threshold43: {
        if (!prefix_opt) {
            throw Error("threshold-4-3 needs the optimal makespan of the current prefix");
        }
        const Rational bound = make_rational(4, 3) * *prefix_opt;
        std::optional<int> best;
        for (int i = 0; i < state.machines(); ++i) {
            if (makespan_with(state, i, job.size) > bound) {
                continue;
            }
            if (!best || state.completion(i) > state.completion(*best)) {
                best = i;
            }
        }
        return AssignMachine{best ? *best : least_loaded(state)};
    }
    }
    throw Error("unknown scheduling policy");
}

}  // namespace obr::scheduling
