#pragma once

// Adversarial sequences for online bounded analysis. Each construction
// bundles the instance, a static or adaptive request script and, where one
// exists, a scripted offline strategy whose validity is checked against the
// algorithm's prefix profile before it is trusted as a bound on OPT_A.

#include "obr/online.hpp"
#include "obr/oracle.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace obr::adversary {

/// Next request given everything emitted so far and the algorithm's trace on
/// it, or nullopt to end the sequence. Must depend on nothing else.
using AdaptiveScript =
    std::function<std::optional<Request>(const std::vector<Request> &emitted, const DecisionTrace &alg)>;

/// Offline decisions for the emitted sequence.
using WitnessBuilder = std::function<std::vector<Decision>(const std::vector<Request> &seq, const DecisionTrace &alg)>;

struct GeneratedInstance {
    std::string construction;
    ProblemInstance instance;
    std::variant<std::vector<Request>, AdaptiveScript> script;
    WitnessBuilder witness;  // empty when the construction has no scripted strategy
};

struct Played {
    std::vector<Request> sequence;
    DecisionTrace trace;
};

inline Played play(const GeneratedInstance &gen, const OnlinePolicy &policy) {
    OnlineRun run(gen.instance, policy);
    if (const auto *fixed = std::get_if<std::vector<Request>>(&gen.script)) {
        for (const auto &r : *fixed) {
            run.step(r);
        }
    } else {
        const auto &next = std::get<AdaptiveScript>(gen.script);
        while (auto r = next(run.sequence(), run.trace())) {
            run.step(*r);
        }
    }
    return {run.sequence(), run.trace()};
}

inline Played play(const GeneratedInstance &gen, AlgorithmId algorithm, const oracle::SearchConfig &oracle_config = {}) {
    check_algorithm(algorithm, gen.instance);
    return play(gen, make_policy(algorithm, oracle_config));
}

/// The scripted offline trace, validated against the algorithm's profile.
/// Throws oracle::WitnessError if the script breaks a rule.
inline std::optional<DecisionTrace> verified_witness(const GeneratedInstance &gen, const Played &played) {
    if (!gen.witness) {
        return std::nullopt;
    }
    const PrefixProfile profile = prefix_profile(played.trace, direction(gen.instance));
    return oracle::replay(gen.instance, played.sequence, gen.witness(played.sequence, played.trace), &profile);
}

namespace detail {

inline std::vector<Request> jobs(std::initializer_list<Rational> sizes) {
    std::vector<Request> out;
    for (const auto &s : sizes) {
        out.emplace_back(Job{s});
    }
    return out;
}

inline void require(bool ok, const std::string &what) {
    if (!ok) {
        throw Error(what);
    }
}

inline Rational size_of(const Request &r) {
    if (const auto *j = std::get_if<Job>(&r)) {
        return j->size;
    }
    return std::get<Item>(r).size;
}

/// Static script served through the adaptive interface; used when the rest
/// of the sequence is fixed once a branch is known.
inline std::optional<Request> nth(const std::vector<Request> &plan, std::size_t i) {
    if (i < plan.size()) {
        return plan[i];
    }
    return std::nullopt;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Makespan on identical machines

/// One job of size m-1, (m-1)(m-2) unit jobs, one more job of size m-1.
/// Greedy ends at 2m-3; the offline strategy keeps the first machine to the
/// first job, fills m-2 machines to m-1 with unit jobs and puts the last job
/// on the remaining machine.
inline GeneratedInstance gen_makespan_greedy_lb(int m) {
    detail::require(m >= 2, "makespan-greedy-lb needs m >= 2");
    std::vector<Request> seq{Job{Rational(m - 1)}};
    for (int i = 0; i < (m - 1) * (m - 2); ++i) {
        seq.emplace_back(Job{Rational(1)});
    }
    seq.emplace_back(Job{Rational(m - 1)});
    auto witness = [m](const std::vector<Request> &s, const DecisionTrace &) {
        std::vector<Decision> out{AssignMachine{0}};
        for (int i = 0; i < (m - 1) * (m - 2); ++i) {
            out.emplace_back(AssignMachine{1 + i / (m - 1)});
        }
        out.emplace_back(AssignMachine{m - 1});
        out.resize(s.size(), AssignMachine{0});
        return out;
    };
    return {"makespan-greedy-lb", identical_makespan(m), std::move(seq), witness};
}

/// m-2 jobs of size 3 and two unit jobs; stop if the algorithm is already at
/// makespan >= 4, otherwise add two jobs of size 2 when the unit jobs share a
/// machine and one job of size 3 when they do not. The offline schedule has
/// makespan 3 in every branch.
inline GeneratedInstance gen_makespan_adaptive_lb(int m) {
    detail::require(m >= 3, "makespan-adaptive-lb needs m >= 3");
    const auto base = static_cast<std::size_t>(m);  // requests before the extension
    AdaptiveScript script = [base](const std::vector<Request> &emitted,
                                   const DecisionTrace &alg) -> std::optional<Request> {
        const std::size_t c = emitted.size();
        if (c < base - 2) {
            return Job{Rational(3)};
        }
        if (c < base) {
            return Job{Rational(1)};
        }
        if (c == base) {
            if (alg.final_value >= Rational(4)) {
                return std::nullopt;
            }
            const bool stacked = alg.steps[base - 2].decision == alg.steps[base - 1].decision;
            return Job{Rational(stacked ? 2 : 3)};
        }
        if (c == base + 1 && detail::size_of(emitted[base]) == Rational(2)) {
            return Job{Rational(2)};
        }
        return std::nullopt;
    };
    auto witness = [m, base](const std::vector<Request> &s, const DecisionTrace &) {
        std::vector<Decision> out;
        for (int i = 0; i < m - 2; ++i) {
            out.emplace_back(AssignMachine{i});
        }
        const bool two_twos = s.size() > base && detail::size_of(s[base]) == Rational(2);
        if (two_twos) {
            out.emplace_back(AssignMachine{m - 2});
            out.emplace_back(AssignMachine{m - 1});
            out.emplace_back(AssignMachine{m - 2});
            out.emplace_back(AssignMachine{m - 1});
        } else {
            out.emplace_back(AssignMachine{m - 2});
            out.emplace_back(AssignMachine{m - 2});
            if (s.size() > base) {
                out.emplace_back(AssignMachine{m - 1});
            }
        }
        return out;
    };
    return {"makespan-adaptive-lb", identical_makespan(m), std::move(script), witness};
}

/// Greedy's 17/12 counterexample for the "most loaded machine within 4/3 of
/// the optimum" rule on three machines. Every machine ends at exactly 1
/// offline.
inline GeneratedInstance gen_threshold_counter() {
    auto seq = detail::jobs({make_rational(3, 4), make_rational(1, 4), make_rational(5, 12), make_rational(1, 6),
                             make_rational(7, 12), make_rational(5, 6)});
    auto witness = [](const std::vector<Request> &, const DecisionTrace &) {
        return std::vector<Decision>{AssignMachine{0}, AssignMachine{0}, AssignMachine{1},
                                     AssignMachine{2}, AssignMachine{1}, AssignMachine{2}};
    };
    return {"threshold-counter", identical_makespan(3), std::move(seq), witness};
}

// ---------------------------------------------------------------------------
// Two related machines, speeds (s, 1)

inline GeneratedInstance gen_greedy_fastties_counter(const Rational &s) {
    detail::require(s > Rational(1), "greedy-fastties-counter needs s > 1");
    auto seq = detail::jobs({s - Rational(1), Rational(1), s + Rational(1)});
    auto witness = [](const std::vector<Request> &, const DecisionTrace &) {
        return std::vector<Decision>{AssignMachine{0}, AssignMachine{1}, AssignMachine{0}};
    };
    return {"greedy-fastties-counter", related_makespan(s), std::move(seq), witness};
}

/// <s^2, s>: Fast stacks both on the fast machine.
inline GeneratedInstance gen_fast_lb(const Rational &s) {
    detail::require(s > Rational(1), "fast-lb needs s > 1");
    auto seq = detail::jobs({s * s, s});
    auto witness = [](const std::vector<Request> &, const DecisionTrace &) {
        return std::vector<Decision>{AssignMachine{0}, AssignMachine{1}};
    };
    return {"fast-lb", related_makespan(s), std::move(seq), witness};
}

/// Santa Claus: a unit job, then s if it went to the fast machine and 1/s if
/// it went to the slow one.
inline GeneratedInstance gen_santa_related_adaptive(const Rational &s) {
    detail::require(s > Rational(1), "santa-related-adaptive needs s > 1");
    AdaptiveScript script = [s](const std::vector<Request> &emitted,
                                const DecisionTrace &alg) -> std::optional<Request> {
        if (emitted.empty()) {
            return Job{Rational(1)};
        }
        if (emitted.size() == 1) {
            const bool fast = std::get<AssignMachine>(alg.steps[0].decision).index == 0;
            return Job{fast ? s : Rational(1) / s};
        }
        return std::nullopt;
    };
    auto witness = [s](const std::vector<Request> &seq, const DecisionTrace &) {
        const bool fast_branch = seq.size() > 1 && detail::size_of(seq[1]) == s;
        if (fast_branch) {
            return std::vector<Decision>{AssignMachine{1}, AssignMachine{0}};
        }
        std::vector<Decision> out{AssignMachine{0}, AssignMachine{1}};
        out.resize(seq.size());
        return out;
    };
    return {"santa-related-adaptive", related_santa(s), std::move(script), witness};
}

// ---------------------------------------------------------------------------
// Bin packing and covering

/// Epsilon used by the packing constructions: 1/(24n).
inline Rational packing_epsilon(int n) { return make_rational(1, 24LL * n); }

/// Any-Fit lower bound. After <2/3, 5/12, 1/4> the branch depends on which
/// bin took the 1/4 item; then n-1 groups
/// <1/2-i eps, 1/2-i eps, 1/2+i eps, 1/2+i eps> for i = n-1..1, each costing
/// the algorithm three bins and the offline strategy two.
inline GeneratedInstance gen_anyfit_lb(int n) {
    detail::require(n >= 2, "anyfit-lb needs n >= 2");
    const Rational eps = packing_epsilon(n);
    const Rational half = make_rational(1, 2);
    auto plan_for = [n, eps, half](bool with_first) {
        std::vector<Request> plan{Item{make_rational(2, 3)}, Item{make_rational(5, 12)}, Item{make_rational(1, 4)}};
        if (with_first) {
            plan.emplace_back(Item{make_rational(1, 3)});
            plan.emplace_back(Item{make_rational(1, 3)});
            plan.emplace_back(Item{half - Rational(n) * eps});
            plan.emplace_back(Item{half + Rational(n) * eps});
        } else {
            plan.emplace_back(Item{make_rational(7, 12)});
        }
        for (int i = n - 1; i >= 1; --i) {
            plan.emplace_back(Item{half - Rational(i) * eps});
            plan.emplace_back(Item{half - Rational(i) * eps});
            plan.emplace_back(Item{half + Rational(i) * eps});
            plan.emplace_back(Item{half + Rational(i) * eps});
        }
        return plan;
    };
    AdaptiveScript script = [plan_for](const std::vector<Request> &emitted,
                                       const DecisionTrace &alg) -> std::optional<Request> {
        if (emitted.size() < 3) {
            return plan_for(true)[emitted.size()];
        }
        const auto *third = std::get_if<AssignBin>(&alg.steps[2].decision);
        if (third == nullptr) {
            throw Error("anyfit-lb: the algorithm opened a bin for 1/4 although it fits; it is not Any-Fit");
        }
        return detail::nth(plan_for(third->index == 0), emitted.size());
    };
    auto witness = [n](const std::vector<Request> &seq, const DecisionTrace &) {
        const bool with_first = seq.size() > 3 && detail::size_of(seq[3]) == make_rational(1, 3);
        std::vector<Decision> out{OpenNewBin{}, OpenNewBin{}};
        int bins = 2;
        if (with_first) {
            // {2/3, 1/3}, {5/12, 1/4, 1/3}, {1/2 - n eps, 1/2 + n eps}
            out.insert(out.end(), {AssignBin{1}, AssignBin{0}, AssignBin{1}, OpenNewBin{}, AssignBin{2}});
            bins = 3;
        } else {
            // {2/3, 1/4}, {5/12, 7/12}
            out.insert(out.end(), {AssignBin{0}, AssignBin{1}});
        }
        for (int g = 0; g < n - 1; ++g) {
            out.insert(out.end(), {OpenNewBin{}, OpenNewBin{}, AssignBin{bins}, AssignBin{bins + 1}});
            bins += 2;
        }
        out.resize(seq.size(), OpenNewBin{});
        return out;
    };
    return {"anyfit-lb", BinPacking{}, std::move(script), witness};
}

/// q tiny items of size 1/(q+1) (total below 1), then L items that each
/// complete exactly one of L equal groups of tiny items.
inline GeneratedInstance gen_covering_lb(int q, int big) {
    detail::require(big >= 2 && q >= big && q % big == 0, "covering-lb needs q >= L >= 2 with L dividing q");
    const Rational delta = make_rational(1, q + 1);
    const int group = q / big;
    std::vector<Request> seq;
    for (int i = 0; i < q; ++i) {
        seq.emplace_back(Item{delta});
    }
    for (int j = 0; j < big; ++j) {
        seq.emplace_back(Item{Rational(1) - Rational(group) * delta});
    }
    auto witness = [q, group, big](const std::vector<Request> &, const DecisionTrace &) {
        std::vector<Decision> out;
        for (int i = 0; i < q; ++i) {
            if (i % group == 0) {
                out.emplace_back(OpenNewBin{});
            } else {
                out.emplace_back(AssignBin{i / group});
            }
        }
        for (int j = 0; j < big; ++j) {
            out.emplace_back(AssignBin{j});
        }
        return out;
    };
    return {"covering-lb", BinCovering{}, std::move(seq), witness};
}

// ---------------------------------------------------------------------------
// Dual bin packing

/// <1-eps, eps, 1/2+eps> n times, then (n-1)(1/2-2eps)/eps items of size eps.
/// Unfair-First-Fit refuses every 1/2+eps item; the offline strategy keeps
/// only the first 1-eps item, pairs each later eps item with a 1/2+eps item
/// and fills those n-1 bins with the tail.
inline GeneratedInstance gen_uff_lb(int n) {
    detail::require(n >= 2, "uff-lb needs n >= 2");
    const Rational eps = packing_epsilon(n);
    const Rational tail_per_bin = (make_rational(1, 2) - Rational(2) * eps) / eps;
    const int per_bin = static_cast<int>(tail_per_bin.floor().get_si());
    std::vector<Request> seq;
    for (int g = 0; g < n; ++g) {
        seq.emplace_back(Item{Rational(1) - eps});
        seq.emplace_back(Item{eps});
        seq.emplace_back(Item{make_rational(1, 2) + eps});
    }
    for (int i = 0; i < (n - 1) * per_bin; ++i) {
        seq.emplace_back(Item{eps});
    }
    auto witness = [n, per_bin](const std::vector<Request> &, const DecisionTrace &) {
        std::vector<Decision> out;
        for (int g = 0; g < n; ++g) {
            out.emplace_back(g == 0 ? Decision{AssignBin{0}} : Decision{Reject{}});
            out.emplace_back(AssignBin{g});
            out.emplace_back(g + 1 < n ? Decision{AssignBin{g + 1}} : Decision{Reject{}});
        }
        for (int i = 0; i < (n - 1) * per_bin; ++i) {
            out.emplace_back(AssignBin{1 + i / per_bin});
        }
        return out;
    };
    return {"uff-lb", DualBinPacking{n}, std::move(seq), witness};
}

/// Closed-form ratio of the Unfair-First-Fit construction,
/// 2n / (2n + (n-1)(1/2 - 2eps)/eps).
inline Rational uff_ratio_formula(int n, const Rational &eps) {
    const Rational two_n(2 * n);
    return two_n / (two_n + Rational(n - 1) * (make_rational(1, 2) - Rational(2) * eps) / eps);
}

// ---------------------------------------------------------------------------
// Seat reservation

/// Number of seats holding two intervals after the opening pairs.
inline int doubled_seats(const DecisionTrace &alg, std::size_t opening) {
    std::vector<int> count;
    for (std::size_t i = 0; i < opening && i < alg.steps.size(); ++i) {
        if (const auto *a = std::get_if<AssignSeat>(&alg.steps[i].decision)) {
            if (static_cast<std::size_t>(a->index) >= count.size()) {
                count.resize(static_cast<std::size_t>(a->index) + 1);
            }
            ++count[static_cast<std::size_t>(a->index)];
        }
    }
    int r = 0;
    for (int c : count) {
        r += c >= 2 ? 1 : 0;
    }
    return r;
}

/// Adaptive lower bound for fair seat-reservation algorithms with n seats
/// (n divisible by 4) and k stations. Opening: n/2 pairs [k-3,k-2), [k-1,k).
/// With r doubled seats, case 1 (r >= n/4) continues with n/2 x [k-2,k) and
/// n/2 x [k-3,k-1); case 2 with n/2 x [k-3,k). Both cases then send
/// n/4 x [1,k-2), 3n/4 x [1,k-3) and n/4 x [i,i+1) for i = 1..k-4.
inline GeneratedInstance gen_seatres_lb(int k, int seats) {
    detail::require(seats >= 4 && seats % 4 == 0, "seatres-lb needs a seat count divisible by 4");
    detail::require(k >= 8, "seatres-lb needs k >= 8");
    const int n = seats;
    const auto opening = static_cast<std::size_t>(n);
    auto plan_for = [k, n](bool case1) {
        std::vector<Request> plan;
        for (int p = 0; p < n / 2; ++p) {
            plan.emplace_back(Interval{k - 3, k - 2});
            plan.emplace_back(Interval{k - 1, k});
        }
        if (case1) {
            plan.insert(plan.end(), static_cast<std::size_t>(n / 2), Interval{k - 2, k});
            plan.insert(plan.end(), static_cast<std::size_t>(n / 2), Interval{k - 3, k - 1});
        } else {
            plan.insert(plan.end(), static_cast<std::size_t>(n / 2), Interval{k - 3, k});
        }
        plan.insert(plan.end(), static_cast<std::size_t>(n / 4), Interval{1, k - 2});
        plan.insert(plan.end(), static_cast<std::size_t>(3 * n / 4), Interval{1, k - 3});
        for (int i = 1; i <= k - 4; ++i) {
            plan.insert(plan.end(), static_cast<std::size_t>(n / 4), Interval{i, i + 1});
        }
        return plan;
    };
    AdaptiveScript script = [plan_for, n, opening](const std::vector<Request> &emitted,
                                                   const DecisionTrace &alg) -> std::optional<Request> {
        if (emitted.size() < opening) {
            return plan_for(true)[emitted.size()];
        }
        return detail::nth(plan_for(4 * doubled_seats(alg, opening) >= n), emitted.size());
    };
    auto witness = [k, n, opening](const std::vector<Request> &seq, const DecisionTrace &) {
        const bool case1 = seq.size() > opening && std::get<Interval>(seq[opening]) == Interval{k - 2, k};
        std::vector<Decision> out;
        for (int j = 0; j < n; ++j) {
            out.emplace_back(AssignSeat{case1 ? j : j / 2});
        }
        if (case1) {
            for (int t = 0; t < n / 2; ++t) {
                out.emplace_back(AssignSeat{2 * t});  // [k-2,k) after [k-3,k-2)
            }
            for (int t = 0; t < n / 2; ++t) {
                out.emplace_back(AssignSeat{2 * t + 1});  // [k-3,k-1) before [k-1,k)
            }
        } else {
            for (int t = 0; t < n / 2; ++t) {
                out.emplace_back(AssignSeat{n / 2 + t});
            }
        }
        out.insert(out.end(), static_cast<std::size_t>(n / 4), Reject{});
        for (int t = 0; t < 3 * n / 4; ++t) {
            out.emplace_back(AssignSeat{t});
        }
        for (int i = 1; i <= k - 4; ++i) {
            for (int t = 0; t < n / 4; ++t) {
                out.emplace_back(AssignSeat{3 * n / 4 + t});
            }
        }
        return out;
    };
    return {"seatres-lb", SeatReservation{k, seats}, std::move(script), witness};
}

// ---------------------------------------------------------------------------
// Matching

/// Deterministic edge sequence on vertices 0..7 with weights drawn from
/// {0, 1/4, 1/2, 3/4, 1, 3/2, 2}.
inline std::vector<Request> random_edges(std::uint64_t seed, int size, int vertices = 8) {
    static const Rational kWeights[] = {Rational(0), make_rational(1, 4), make_rational(1, 2), make_rational(3, 4),
                                        Rational(1), make_rational(3, 2), Rational(2)};
    std::mt19937_64 rng(seed);
    std::vector<Request> out;
    for (int i = 0; i < size; ++i) {
        const int u = static_cast<int>(rng() % static_cast<std::uint64_t>(vertices));
        int v = static_cast<int>(rng() % static_cast<std::uint64_t>(vertices - 1));
        if (v >= u) {
            ++v;
        }
        out.emplace_back(Edge{u, v, kWeights[rng() % std::size(kWeights)]});
    }
    return out;
}

inline GeneratedInstance gen_matching_edge_arrival_random(std::uint64_t seed, int size) {
    detail::require(size >= 0, "matching-random needs size >= 0");
    return {"matching-random", Matching{}, random_edges(seed, size), {}};
}

// ---------------------------------------------------------------------------
// Registry

struct ConstructionParams {
    std::optional<int> m, n, k, seats, q, L, size;
    std::optional<Rational> s;
    std::optional<std::uint64_t> seed;
};

struct ConstructionInfo {
    std::string_view id;
    AlgorithmId default_algorithm;
    std::vector<std::string_view> params;  // parameters that shape the instance
};

inline const std::vector<ConstructionInfo> &constructions() {
    static const std::vector<ConstructionInfo> all{
        {"makespan-greedy-lb", AlgorithmId::GreedyIdentical, {"m"}},
        {"makespan-adaptive-lb", AlgorithmId::GreedyIdentical, {"m"}},
        {"greedy-fastties-counter", AlgorithmId::GreedyRelatedFastTies, {"s"}},
        {"fast-lb", AlgorithmId::Fast, {"s"}},
        {"threshold-counter", AlgorithmId::Threshold43, {}},
        {"santa-related-adaptive", AlgorithmId::SantaLeastLoaded, {"s"}},
        {"anyfit-lb", AlgorithmId::FirstFit, {"n"}},
        {"uff-lb", AlgorithmId::UnfairFirstFit, {"n"}},
        {"seatres-lb", AlgorithmId::SeatFirstFit, {"k", "seats"}},
        {"covering-lb", AlgorithmId::CoveringGreedy, {"q", "L"}},
        {"matching-random", AlgorithmId::MatchingGreedy, {"seed", "size"}},
    };
    return all;
}

inline const ConstructionInfo &construction_info(std::string_view id) {
    for (const auto &c : constructions()) {
        if (c.id == id) {
            return c;
        }
    }
    throw Error("unknown construction id '" + std::string(id) + "'");
}

/// Fills unset parameters with their defaults
/// (m=3, s=2, n=2, k=12, seats=8, q=10, L=10, seed=1, size=6).
inline ConstructionParams with_defaults(ConstructionParams p) {
    p.m = p.m.value_or(3);
    p.n = p.n.value_or(2);
    p.k = p.k.value_or(12);
    p.seats = p.seats.value_or(8);
    p.q = p.q.value_or(10);
    p.L = p.L.value_or(10);
    p.size = p.size.value_or(6);
    p.s = p.s.value_or(Rational(2));
    p.seed = p.seed.value_or(1);
    return p;
}

inline GeneratedInstance make_construction(std::string_view id, const ConstructionParams &params = {}) {
    const auto &info = construction_info(id);
    const auto p = with_defaults(params);
    if (info.id == "makespan-greedy-lb") return gen_makespan_greedy_lb(*p.m);
    if (info.id == "makespan-adaptive-lb") return gen_makespan_adaptive_lb(*p.m);
    if (info.id == "greedy-fastties-counter") return gen_greedy_fastties_counter(*p.s);
    if (info.id == "fast-lb") return gen_fast_lb(*p.s);
    if (info.id == "threshold-counter") return gen_threshold_counter();
    if (info.id == "santa-related-adaptive") return gen_santa_related_adaptive(*p.s);
    if (info.id == "anyfit-lb") return gen_anyfit_lb(*p.n);
    if (info.id == "uff-lb") return gen_uff_lb(*p.n);
    if (info.id == "seatres-lb") return gen_seatres_lb(*p.k, *p.seats);
    if (info.id == "covering-lb") return gen_covering_lb(*p.q, *p.L);
    return gen_matching_edge_arrival_random(*p.seed, *p.size);
}

}  // namespace obr::adversary
