// Randomized invariants over the deterministic corpus generators.

#include "support/helpers.hpp"

#include <gtest/gtest.h>

using namespace obr;
using obr::test::R;

namespace {

struct Source {
    const char *name;
    AlgorithmId algorithm;
    std::function<corpus::Case(corpus::Draw &)> make;
};

std::vector<Source> sources() {
    const auto speeds = test::rs({"3/2", "2", "3"});
    return {
        {"greedy-identical", AlgorithmId::GreedyIdentical,
         [](corpus::Draw &d) { return corpus::identical_makespan_case(d, {2, 3}, 6); }},
        {"greedy-related", AlgorithmId::GreedyRelated,
         [speeds](corpus::Draw &d) { return corpus::related_makespan_case(d, speeds, 6); }},
        {"fast", AlgorithmId::Fast, [speeds](corpus::Draw &d) { return corpus::related_makespan_case(d, speeds, 5); }},
        {"santa-greedy", AlgorithmId::SantaGreedy,
         [](corpus::Draw &d) { return corpus::identical_santa_case(d, {2, 3}, 6); }},
        {"first-fit", AlgorithmId::FirstFit, [](corpus::Draw &d) { return corpus::bin_packing_case(d, 6); }},
        {"covering-greedy", AlgorithmId::CoveringGreedy, [](corpus::Draw &d) { return corpus::covering_case(d, 6); }},
        {"dual-worst-fit", AlgorithmId::DualWorstFit, [](corpus::Draw &d) { return corpus::dual_case(d, 2, 6); }},
        {"unfair-first-fit", AlgorithmId::UnfairFirstFit, [](corpus::Draw &d) { return corpus::dual_case(d, 2, 6); }},
        {"seat-best-fit", AlgorithmId::SeatBestFit, [](corpus::Draw &d) { return corpus::seat_case(d, 5); }},
        {"matching-greedy", AlgorithmId::MatchingGreedy, [](corpus::Draw &d) { return corpus::matching_case(d, 6); }},
    };
}

oracle::SearchConfig unlimited() {
    oracle::SearchConfig c;
    c.node_budget = std::nullopt;
    return c;
}

}  // namespace

TEST(Properties, OptimumOrdering) {
    for (const auto &src : sources()) {
        corpus::Draw d(4242);
        for (int i = 0; i < 40; ++i) {
            const auto c = src.make(d);
            const Direction dir = direction(c.instance);
            const auto trace = run_online(c.instance, src.algorithm, c.sequence);
            const auto profile = prefix_profile(trace, dir);
            const auto free = oracle::solve_unconstrained(c.instance, c.sequence, unlimited());
            const auto bounded = oracle::solve_bounded(c.instance, c.sequence, profile, unlimited());
            ASSERT_TRUE(bounded.complete()) << src.name << " case " << i;
            // OPT is at least as good as OPT_A, which is at least as good as A.
            EXPECT_TRUE(dominates(dir, free.value, bounded.value)) << src.name << " case " << i;
            EXPECT_TRUE(dominates(dir, bounded.value, trace.final_value)) << src.name << " case " << i;
            // The online run is itself a feasible bounded solution.
            EXPECT_EQ(oracle::check_witness(c.instance, c.sequence, &profile, trace.decisions()), trace.final_value);
            EXPECT_EQ(oracle::check_witness(c.instance, c.sequence, &profile, bounded.witness.decisions()),
                      bounded.value);
        }
    }
}

TEST(Properties, RunsAreDeterministic) {
    for (const auto &src : sources()) {
        corpus::Draw a(7), b(7);
        for (int i = 0; i < 20; ++i) {
            const auto ca = src.make(a);
            const auto cb = src.make(b);
            ASSERT_EQ(ca.sequence, cb.sequence);
            EXPECT_EQ(run_online(ca.instance, src.algorithm, ca.sequence),
                      run_online(cb.instance, src.algorithm, cb.sequence));
        }
    }
}

TEST(Properties, TraceValuesMatchReplay) {
    for (const auto &src : sources()) {
        corpus::Draw d(99);
        for (int i = 0; i < 30; ++i) {
            const auto c = src.make(d);
            const auto trace = run_online(c.instance, src.algorithm, c.sequence);
            EXPECT_EQ(oracle::replay(c.instance, c.sequence, trace.decisions()), trace) << src.name;
            State s = initial_state(c.instance);
            for (std::size_t t = 0; t < c.sequence.size(); ++t) {
                s = apply(c.instance, s, c.sequence[t], trace.steps[t].decision);
                EXPECT_EQ(objective(c.instance, s), trace.steps[t].value);
            }
        }
    }
}

TEST(Properties, SearchFlagsAgree) {
    for (const auto &src : sources()) {
        corpus::Draw d(1234);
        for (int i = 0; i < 20; ++i) {
            const auto c = src.make(d);
            auto plain = unlimited();
            plain.memoize = false;
            plain.canonicalize = false;
            EXPECT_EQ(oracle::solve_unconstrained(c.instance, c.sequence, unlimited()).value,
                      oracle::solve_unconstrained(c.instance, c.sequence, plain).value)
                << src.name << " case " << i;
        }
    }
}

TEST(Properties, GreedyIsBoundedOptimalWhereExpected) {
    // Two-machine makespan greedy (identical or related with slow ties),
    // Santa greedy on identical machines and edge-arrival matching greedy
    // all match the bounded optimum.
    const auto speeds = test::rs({"3/2", "2", "5/2", "3"});
    corpus::Draw d(555);
    for (int i = 0; i < 60; ++i) {
        const std::vector<std::pair<corpus::Case, AlgorithmId>> cases{
            {corpus::identical_makespan_case(d, {2}, 7), AlgorithmId::GreedyIdentical},
            {corpus::identical_santa_case(d, {2, 3, 4}, 6), AlgorithmId::SantaGreedy},
            {corpus::related_makespan_case(d, speeds, 6), AlgorithmId::GreedyRelated},
            {corpus::matching_case(d, 7), AlgorithmId::MatchingGreedy},
        };
        for (const auto &[c, alg] : cases) {
            const auto trace = run_online(c.instance, alg, c.sequence);
            const auto bounded = oracle::solve_bounded(c.instance, c.sequence,
                                                       prefix_profile(trace, direction(c.instance)), unlimited());
            EXPECT_EQ(bounded.value, trace.final_value) << algorithm_name(alg) << " case " << i;
        }
    }
}

TEST(Properties, FairSeatPoliciesAcceptAtLeastTwoOverK) {
    corpus::Draw d(31);
    for (int i = 0; i < 60; ++i) {
        const auto c = corpus::seat_case(d, 6);
        const int k = std::get<SeatReservation>(c.instance).stations;
        for (const auto alg : {AlgorithmId::SeatFirstFit, AlgorithmId::SeatBestFit}) {
            const auto trace = run_online(c.instance, alg, c.sequence);
            const auto bounded =
                oracle::solve_bounded(c.instance, c.sequence, prefix_profile(trace, Direction::Max), unlimited());
            EXPECT_GE(trace.final_value * Rational(k), bounded.value * Rational(2)) << "case " << i;
        }
    }
}

TEST(Properties, FairDualAlgorithmsOnTheAccommodatingSubsequence) {
    corpus::Draw d(808);
    for (int i = 0; i < 40; ++i) {
        const auto c = corpus::dual_case(d, 2, 6);
        const auto &inst = std::get<DualBinPacking>(c.instance);
        for (const auto alg : {AlgorithmId::DualFirstFit, AlgorithmId::DualBestFit, AlgorithmId::DualWorstFit}) {
            const auto trace = run_online(c.instance, alg, c.sequence);
            const auto opt =
                oracle::solve_bounded(c.instance, c.sequence, prefix_profile(trace, Direction::Max), unlimited());
            const auto sub = packing::accommodating_subsequence(c.sequence, trace, opt.witness);
            EXPECT_TRUE(packing::is_accommodating(inst, sub)) << "case " << i;
            EXPECT_EQ(run_online(c.instance, alg, sub).final_value, trace.final_value) << "case " << i;
            EXPECT_EQ(Rational(static_cast<long long>(sub.size())), opt.value) << "case " << i;
        }
    }
}
