#pragma once

// Exact offline optimum, optionally constrained to be at least as good as a
// given prefix profile after every request.
//
// The search is a depth-first branch-and-bound over offline decisions in
// canonical order. A memo keyed by (request index, canonical state) records,
// for each explored subtree, a value the subtree provably cannot beat; it is
// only used to prune subtrees that cannot strictly improve the incumbent, so
// the first optimum found (the lexicographically smallest in canonical
// order) is the one returned.

#include "obr/model.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace obr::oracle {

struct SearchConfig {
    std::optional<std::uint64_t> node_budget = default_budget();
    bool canonicalize = true;
    bool memoize = true;

    static constexpr std::uint64_t kDefaultBudget = 20'000'000;

    /// OBR_NODE_BUDGET overrides the built-in default; "0" or "unlimited"
    /// removes the limit.
    static std::optional<std::uint64_t> default_budget() {
        if (const char *env = std::getenv("OBR_NODE_BUDGET")) {
            const std::string text(env);
            if (text == "unlimited" || text == "0") {
                return std::nullopt;
            }
            try {
                return std::stoull(text);
            } catch (const std::exception &) {
                throw Error("OBR_NODE_BUDGET must be a positive integer or 'unlimited'");
            }
        }
        return kDefaultBudget;
    }
};

enum class Status { Complete, BudgetExhausted, Infeasible };

inline const char *to_string(Status s) {
    switch (s) {
    case Status::Complete:
        return "COMPLETE";
    case Status::BudgetExhausted:
        return "BUDGET_EXHAUSTED";
    case Status::Infeasible:
        return "INFEASIBLE";
    }
    return "?";
}

struct OracleResult {
    Rational value;  // best found; exact only when status == Complete
    DecisionTrace witness;
    std::uint64_t nodes_explored = 0;
    Status status = Status::Complete;

    [[nodiscard]] bool complete() const { return status == Status::Complete; }
};

// ---------------------------------------------------------------------------
// Replay and witness validation

class WitnessError : public Error {
public:
    WitnessError(std::size_t step, const std::string &what)
        : Error("step " + std::to_string(step + 1) + ": " + what), step_(step) {}
    /// 0-based index of the offending request.
    [[nodiscard]] std::size_t step() const { return step_; }

private:
    std::size_t step_;
};

/// Rebuilds the per-prefix objective values of a decision sequence. When a
/// profile is given, every prefix must be at least as good as the profile.
inline DecisionTrace replay(const ProblemInstance &inst, const std::vector<Request> &seq,
                            const std::vector<Decision> &decisions, const PrefixProfile *profile = nullptr) {
    if (decisions.size() != seq.size()) {
        throw Error("trace has " + std::to_string(decisions.size()) + " decisions for " +
                    std::to_string(seq.size()) + " requests");
    }
    if (profile != nullptr && profile->values.size() != seq.size()) {
        throw Error("profile length does not match the sequence");
    }
    check_sequence(inst, seq);
    State state = initial_state(inst);
    DecisionTrace trace;
    trace.final_value = objective(inst, state);
    for (std::size_t t = 0; t < seq.size(); ++t) {
        if (auto why = illegal_reason(inst, state, seq[t], decisions[t])) {
            throw WitnessError(t, "illegal decision '" + describe(decisions[t]) + "': " + *why);
        }
        apply_in_place(inst, state, seq[t], decisions[t]);
        Rational v = objective(inst, state);
        if (profile != nullptr && !dominates(profile->direction, v, profile->values[t])) {
            throw WitnessError(t, "prefix constraint violated: offline value " + v.str() + " vs online " +
                                      profile->values[t].str());
        }
        trace.steps.push_back({decisions[t], v});
        trace.final_value = std::move(v);
    }
    return trace;
}

/// Validates a scripted offline strategy and returns its final value.
inline Rational check_witness(const ProblemInstance &inst, const std::vector<Request> &seq,
                              const PrefixProfile *profile, const std::vector<Decision> &decisions) {
    return replay(inst, seq, decisions, profile).final_value;
}

// ---------------------------------------------------------------------------
// Offline move generation

namespace detail {

inline std::vector<int> occupied_segments(const seatres::SeatState &s, int seat) {
    std::vector<int> out;
    for (const auto &iv : s.seats[static_cast<std::size_t>(seat)]) {
        for (int x = iv.start; x < iv.end; ++x) {
            out.push_back(x);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace detail

/// All legal offline decisions for `request`, in canonical order. With
/// `canonicalize`, interchangeable machines, bins and seats are represented
/// once, by their lowest index.
inline std::vector<Decision> enumerate_decisions(const ProblemInstance &inst, const State &state,
                                                 const Request &request, bool canonicalize = true) {
    std::vector<Decision> out;
    if (machine_speeds(inst) != nullptr) {
        const auto &s = std::get<scheduling::SchedState>(state);
        for (int i = 0; i < s.machines(); ++i) {
            bool duplicate = false;
            for (int j = 0; canonicalize && j < i && !duplicate; ++j) {
                duplicate = s.speeds[static_cast<std::size_t>(j)] == s.speeds[static_cast<std::size_t>(i)] &&
                            s.assigned[static_cast<std::size_t>(j)] == s.assigned[static_cast<std::size_t>(i)];
            }
            if (!duplicate) {
                out.emplace_back(AssignMachine{i});
            }
        }
        return out;
    }
    if (std::holds_alternative<SeatReservation>(inst)) {
        const auto &s = std::get<seatres::SeatState>(state);
        const auto &iv = std::get<Interval>(request);
        std::vector<std::vector<int>> seen;
        for (int i = 0; i < s.seat_count(); ++i) {
            if (!s.fits_on(i, iv)) {
                continue;
            }
            if (canonicalize) {
                auto occ = detail::occupied_segments(s, i);
                if (std::find(seen.begin(), seen.end(), occ) != seen.end()) {
                    continue;
                }
                seen.push_back(std::move(occ));
            }
            out.emplace_back(AssignSeat{i});
        }
        out.emplace_back(Reject{});
        return out;
    }
    if (std::holds_alternative<Matching>(inst)) {
        if (std::get<graphs::MatchState>(state).exposed(std::get<Edge>(request))) {
            out.emplace_back(AcceptEdge{});
        }
        out.emplace_back(RejectEdge{});
        return out;
    }
    const auto &s = std::get<packing::BinState>(state);
    const auto &size = std::get<Item>(request).size;
    const bool covering = std::holds_alternative<BinCovering>(inst);
    const bool dual = std::holds_alternative<DualBinPacking>(inst);
    auto klass = [&](int i) {
        const auto &l = s.loads[static_cast<std::size_t>(i)];
        return covering && l >= Rational(1) ? Rational(1) : l;
    };
    std::vector<Rational> seen;
    for (int i = 0; i < s.bins(); ++i) {
        if (!covering && !s.fits(i, size)) {
            continue;
        }
        if (canonicalize) {
            Rational k = klass(i);
            if (std::find(seen.begin(), seen.end(), k) != seen.end()) {
                continue;
            }
            seen.push_back(std::move(k));
        }
        out.emplace_back(AssignBin{i});
    }
    if (dual) {
        out.emplace_back(Reject{});
    } else {
        out.emplace_back(OpenNewBin{});
    }
    return out;
}

// ---------------------------------------------------------------------------
// Search

struct StateKey {
    std::size_t t = 0;
    std::vector<Rational> nums;
    std::vector<int> ints;
    friend auto operator<=>(const StateKey &, const StateKey &) = default;
};

/// States with equal keys at the same request index have identical futures.
inline StateKey state_key(const ProblemInstance &inst, const State &state, std::size_t t, bool canonicalize) {
    StateKey key{t, {}, {}};
    if (machine_speeds(inst) != nullptr) {
        const auto &s = std::get<scheduling::SchedState>(state);
        std::vector<std::pair<Rational, Rational>> machines;
        for (int i = 0; i < s.machines(); ++i) {
            machines.emplace_back(s.speeds[static_cast<std::size_t>(i)], s.assigned[static_cast<std::size_t>(i)]);
        }
        if (canonicalize) {
            std::sort(machines.begin(), machines.end());
        }
        for (auto &[speed, load] : machines) {
            key.nums.push_back(speed);
            key.nums.push_back(load);
        }
        return key;
    }
    if (std::holds_alternative<SeatReservation>(inst)) {
        const auto &s = std::get<seatres::SeatState>(state);
        std::vector<std::vector<int>> seats;
        for (int i = 0; i < s.seat_count(); ++i) {
            seats.push_back(detail::occupied_segments(s, i));
        }
        if (canonicalize) {
            std::sort(seats.begin(), seats.end());
        }
        key.ints.push_back(s.accepted);
        for (const auto &occ : seats) {
            key.ints.insert(key.ints.end(), occ.begin(), occ.end());
            key.ints.push_back(-1);
        }
        return key;
    }
    if (std::holds_alternative<Matching>(inst)) {
        const auto &s = std::get<graphs::MatchState>(state);
        key.ints.assign(s.matched.begin(), s.matched.end());
        key.nums.push_back(s.total_weight);
        return key;
    }
    const auto &s = std::get<packing::BinState>(state);
    const bool covering = std::holds_alternative<BinCovering>(inst);
    key.nums = s.loads;
    if (covering) {
        for (auto &l : key.nums) {
            l = min(l, Rational(1));
        }
    }
    if (canonicalize) {
        std::sort(key.nums.begin(), key.nums.end());
    }
    key.ints.push_back(s.accepted);
    return key;
}

namespace detail {

/// Suffix aggregates of the request sequence used by the admissible bounds.
struct SuffixStats {
    std::vector<Rational> total;          // sum of sizes of requests t..T-1
    std::vector<Rational> largest;        // max size among requests t..T-1
    std::vector<Rational> positive_weight;  // sum of positive edge weights t..T-1
    std::vector<std::vector<Rational>> big;  // sorted item sizes above 1/2 among t..T-1
    std::vector<std::optional<Rational>> smallest;  // smallest item size among t..T-1

    explicit SuffixStats(const std::vector<Request> &seq)
        : total(seq.size() + 1), largest(seq.size() + 1), positive_weight(seq.size() + 1), big(seq.size() + 1),
          smallest(seq.size() + 1) {
        for (std::size_t i = seq.size(); i-- > 0;) {
            Rational size;
            if (const auto *j = std::get_if<Job>(&seq[i])) {
                size = j->size;
            } else if (const auto *it = std::get_if<Item>(&seq[i])) {
                size = it->size;
            } else if (const auto *e = std::get_if<Edge>(&seq[i])) {
                positive_weight[i] = e->weight.sign() > 0 ? e->weight : Rational();
            }
            positive_weight[i] += positive_weight[i + 1];
            total[i] = total[i + 1] + size;
            largest[i] = max(largest[i + 1], size);
            big[i] = big[i + 1];
            smallest[i] = smallest[i + 1];
            if (std::holds_alternative<Item>(seq[i])) {
                if (size > make_rational(1, 2)) {
                    big[i].insert(std::lower_bound(big[i].begin(), big[i].end(), size), size);
                }
                smallest[i] = smallest[i] ? min(*smallest[i], size) : size;
            }
        }
    }

    /// Items above 1/2 still to come that are larger than `room`.
    [[nodiscard]] long long big_above(std::size_t t, const Rational &room) const {
        return static_cast<long long>(big[t].end() - std::upper_bound(big[t].begin(), big[t].end(), room));
    }
};

/// Optimistic bound on the final objective reachable from `state` with
/// requests t..T-1 still to come.
inline Rational optimistic_bound(const ProblemInstance &inst, const State &state, std::size_t t, std::size_t total,
                                 const SuffixStats &stats) {
    const Rational remaining(static_cast<long long>(total - t));
    if (machine_speeds(inst) != nullptr) {
        const auto &s = std::get<scheduling::SchedState>(state);
        Rational work = stats.total[t];
        Rational speed_sum;
        for (int i = 0; i < s.machines(); ++i) {
            work += s.assigned[static_cast<std::size_t>(i)];
            speed_sum += s.speeds[static_cast<std::size_t>(i)];
        }
        const Rational average = work / speed_sum;
        if (std::holds_alternative<Santa>(inst)) {
            return average;
        }
        return max(max(scheduling::makespan(s), stats.largest[t] / s.speeds.front()), average);
    }
    if (std::holds_alternative<SeatReservation>(inst)) {
        return Rational(std::get<seatres::SeatState>(state).accepted) + remaining;
    }
    if (std::holds_alternative<Matching>(inst)) {
        return std::get<graphs::MatchState>(state).total_weight + stats.positive_weight[t];
    }
    const auto &s = std::get<packing::BinState>(state);
    if (std::holds_alternative<DualBinPacking>(inst)) {
        return Rational(s.accepted) + remaining;
    }
    if (std::holds_alternative<BinCovering>(inst)) {
        Rational loose = stats.total[t];
        int covered = 0;
        for (const auto &l : s.loads) {
            if (l >= Rational(1)) {
                ++covered;
            } else {
                loose += l;
            }
        }
        return Rational(covered) + Rational::from_mpq(mpq_class(loose.floor()));
    }
    // Items above 1/2 that fit no open bin now never will, and no two share a
    // bin. Free space below the smallest remaining item is lost for good.
    Rational all = stats.total[t];
    Rational room;  // most free space in any open bin
    for (const auto &l : s.loads) {
        const Rational free = Rational(1) - l;
        all += l;
        room = max(room, free);
        if (stats.smallest[t] && free < *stats.smallest[t]) {
            all += free;
        }
    }
    const Rational separate(s.bins() + stats.big_above(t, room));
    return max(separate, Rational::from_mpq(mpq_class(all.ceil())));
}

class Searcher {
public:
    Searcher(const ProblemInstance &inst, const std::vector<Request> &seq, const PrefixProfile *profile,
             const SearchConfig &config)
        : inst_(inst), seq_(seq), profile_(profile), config_(config), dir_(direction(inst)), stats_(seq) {}

    OracleResult run() {
        path_.clear();
        dfs(0, initial_state(inst_));
        OracleResult result;
        result.nodes_explored = nodes_;
        if (exhausted_) {
            result.status = Status::BudgetExhausted;
        } else if (!incumbent_) {
            result.status = Status::Infeasible;
        }
        if (incumbent_) {
            result.value = *incumbent_;
            result.witness = replay(inst_, seq_, best_path_, profile_);
        }
        return result;
    }

private:
    struct Entry {
        bool infeasible = false;
        Rational no_better_than;  // the subtree cannot strictly beat this value
    };

    [[nodiscard]] bool cannot_improve(const Rational &optimistic) const {
        return incumbent_ && !better(dir_, optimistic, *incumbent_);
    }

    void record(StateKey key, const std::optional<Rational> &before) {
        Entry fresh;
        if (incumbent_ && (!before || better(dir_, *incumbent_, *before))) {
            fresh.no_better_than = *incumbent_;  // improved inside: exact value
        } else if (before) {
            fresh.no_better_than = *before;
        } else {
            fresh.infeasible = true;
        }
        auto [it, inserted] = memo_.try_emplace(std::move(key), fresh);
        if (inserted) {
            return;
        }
        Entry &old = it->second;
        if (old.infeasible) {
            return;
        }
        if (fresh.infeasible || better(dir_, old.no_better_than, fresh.no_better_than)) {
            old = fresh;
        }
    }

    void dfs(std::size_t t, const State &state) {
        if (exhausted_) {
            return;
        }
        if (config_.node_budget && nodes_ >= *config_.node_budget) {
            exhausted_ = true;
            return;
        }
        ++nodes_;
        if (t == seq_.size()) {
            Rational v = objective(inst_, state);
            if (!incumbent_ || better(dir_, v, *incumbent_)) {
                incumbent_ = std::move(v);
                best_path_ = path_;
            }
            return;
        }
        if (cannot_improve(optimistic_bound(inst_, state, t, seq_.size(), stats_))) {
            return;
        }
        std::optional<StateKey> key;
        if (config_.memoize) {
            key = state_key(inst_, state, t, config_.canonicalize);
            if (auto it = memo_.find(*key); it != memo_.end()) {
                if (it->second.infeasible || cannot_improve(it->second.no_better_than)) {
                    return;
                }
            }
        }
        const std::optional<Rational> before = incumbent_;
        for (const auto &d : enumerate_decisions(inst_, state, seq_[t], config_.canonicalize)) {
            State child = state;
            apply_in_place(inst_, child, seq_[t], d);
            if (profile_ != nullptr && !dominates(dir_, objective(inst_, child), profile_->values[t])) {
                continue;
            }
            path_.push_back(d);
            dfs(t + 1, child);
            path_.pop_back();
            if (exhausted_) {
                return;
            }
        }
        if (key) {
            record(std::move(*key), before);
        }
    }

    const ProblemInstance &inst_;
    const std::vector<Request> &seq_;
    const PrefixProfile *profile_;
    SearchConfig config_;
    Direction dir_;
    SuffixStats stats_;

    std::vector<Decision> path_;
    std::vector<Decision> best_path_;
    std::optional<Rational> incumbent_;
    std::uint64_t nodes_ = 0;
    bool exhausted_ = false;
    std::map<StateKey, Entry> memo_;
};

}  // namespace detail

/// OPT(I): the best offline solution for the whole sequence.
inline OracleResult solve_unconstrained(const ProblemInstance &inst, const std::vector<Request> &seq,
                                       const SearchConfig &config = {}) {
    validate(inst);
    check_sequence(inst, seq);
    return detail::Searcher(inst, seq, nullptr, config).run();
}

/// OPT_A(I): the best offline solution that is at least as good as the
/// online profile after every prefix.
inline OracleResult solve_bounded(const ProblemInstance &inst, const std::vector<Request> &seq,
                                  const PrefixProfile &profile, const SearchConfig &config = {}) {
    validate(inst);
    check_sequence(inst, seq);
    if (profile.values.size() != seq.size()) {
        throw Error("profile length " + std::to_string(profile.values.size()) + " does not match sequence length " +
                    std::to_string(seq.size()));
    }
    if (profile.direction != direction(inst)) {
        throw Error("profile direction does not match the problem");
    }
    return detail::Searcher(inst, seq, &profile, config).run();
}

}  // namespace obr::oracle
