#include "support/helpers.hpp"

#include <gtest/gtest.h>

using namespace obr;
using namespace obr::packing;
using obr::test::items;
using obr::test::R;
using obr::test::rs;
using obr::test::values;

namespace {

BinState loads(std::initializer_list<const char *> l) { return BinState{rs(l), 0, 0}; }

}  // namespace

TEST(PackStep, AnyFitExamples) {
    const ProblemInstance bp = BinPacking{};
    const auto s = loads({"2/3", "5/12"});
    EXPECT_EQ(pack_step(PackPolicy::FirstFit, bp, s, Item{R("1/4")}), Decision{AssignBin{0}});
    EXPECT_EQ(pack_step(PackPolicy::BestFit, bp, s, Item{R("1/4")}), Decision{AssignBin{0}});
    EXPECT_EQ(pack_step(PackPolicy::WorstFit, bp, s, Item{R("1/4")}), Decision{AssignBin{1}});
    EXPECT_EQ(pack_step(PackPolicy::FirstFit, bp, s, Item{R("2/3")}), Decision{OpenNewBin{}});
}

TEST(PackStep, BestAndWorstFitBreakTiesByLowestIndex) {
    const ProblemInstance bp = BinPacking{};
    const auto s = loads({"1/2", "1/4", "1/2", "1/4"});
    EXPECT_EQ(pack_step(PackPolicy::BestFit, bp, s, Item{R("1/4")}), Decision{AssignBin{0}});
    EXPECT_EQ(pack_step(PackPolicy::WorstFit, bp, s, Item{R("1/4")}), Decision{AssignBin{1}});
}

TEST(PackStep, ExactFitIsAllowed) {
    EXPECT_EQ(pack_step(PackPolicy::FirstFit, BinPacking{}, loads({"3/4"}), Item{R("1/4")}), Decision{AssignBin{0}});
}

TEST(PackStep, UnfairFirstFitRejectsLargeItemsAtTwoThirds) {
    const ProblemInstance dual = DualBinPacking{2};
    BinState s{rs({"1", "0"}), 2, 2};
    EXPECT_EQ(pack_step(PackPolicy::UnfairFirstFit, dual, s, Item{R("25/48")}), Decision{Reject{}});
    // Small items are still placed first-fit.
    EXPECT_EQ(pack_step(PackPolicy::UnfairFirstFit, dual, s, Item{R("1/2")}), Decision{AssignBin{1}});
    // Rejecting here would leave 1 of 3 accepted: the item is taken.
    BinState t{rs({"1/4", "0"}), 1, 2};
    EXPECT_EQ(pack_step(PackPolicy::UnfairFirstFit, dual, t, Item{R("3/4")}), Decision{AssignBin{0}});
}

TEST(PackStep, DualPoliciesRejectOnlyWhenNothingFits) {
    const ProblemInstance dual = DualBinPacking{2};
    const BinState s{rs({"3/4", "1/2"}), 2, 2};
    EXPECT_EQ(pack_step(PackPolicy::DualFirstFit, dual, s, Item{R("1/2")}), Decision{AssignBin{1}});
    EXPECT_EQ(pack_step(PackPolicy::DualBestFit, dual, s, Item{R("1/4")}), Decision{AssignBin{0}});
    EXPECT_EQ(pack_step(PackPolicy::DualWorstFit, dual, s, Item{R("1/4")}), Decision{AssignBin{1}});
    EXPECT_EQ(pack_step(PackPolicy::DualFirstFit, dual, s, Item{R("3/4")}), Decision{Reject{}});
}

TEST(PackStep, DualWorstFitConsidersEmptyBins) {
    const ProblemInstance dual = DualBinPacking{3};
    const BinState s{rs({"1/2", "0", "0"}), 1, 1};
    EXPECT_EQ(pack_step(PackPolicy::DualWorstFit, dual, s, Item{R("1/4")}), Decision{AssignBin{1}});
}

TEST(PackStep, CoveringGreedyFillsTheActiveBin) {
    const ProblemInstance cov = BinCovering{};
    EXPECT_EQ(pack_step(PackPolicy::CoveringGreedy, cov, loads({}), Item{R("1/2")}), Decision{OpenNewBin{}});
    EXPECT_EQ(pack_step(PackPolicy::CoveringGreedy, cov, loads({"1/2"}), Item{R("3/4")}), Decision{AssignBin{0}});
    EXPECT_EQ(pack_step(PackPolicy::CoveringGreedy, cov, loads({"5/4"}), Item{R("1/4")}), Decision{OpenNewBin{}});
}

TEST(PackStep, PolicyInstanceMismatch) {
    EXPECT_THROW(pack_step(PackPolicy::FirstFit, DualBinPacking{1}, loads({"0"}), Item{R("1/2")}), Error);
    EXPECT_THROW(pack_step(PackPolicy::CoveringGreedy, BinPacking{}, loads({}), Item{R("1/2")}), Error);
    EXPECT_THROW(pack_step(PackPolicy::UnfairFirstFit, BinPacking{}, loads({}), Item{R("1/2")}), Error);
}

TEST(Objectives, Counts) {
    EXPECT_EQ(bins_used(loads({"2/3", "5/12", "1/3"})), Rational(3));
    EXPECT_EQ(covered_bins(loads({"1", "1/2"})), Rational(1));
    EXPECT_EQ(accepted_count(BinState{{}, 5, 9}), Rational(5));
}

TEST(Accommodating, Examples) {
    EXPECT_TRUE(is_accommodating(DualBinPacking{2}, items({"1/2", "1/2", "1/2", "1/2"})));
    EXPECT_FALSE(is_accommodating(DualBinPacking{1}, items({"3/4", "3/4"})));
    EXPECT_TRUE(is_accommodating(DualBinPacking{1}, {}));
}

TEST(Accommodating, NoDivergenceKeepsThePackedSubsequence) {
    const auto seq = items({"1/2", "3/4", "1/2"});
    const auto trace = run_online(DualBinPacking{1}, "dual-first-fit", seq);
    const auto sub = accommodating_subsequence(seq, trace, trace);
    EXPECT_EQ(sub, items({"1/2", "1/2"}));
}

TEST(Accommodating, SwapsRejectedForAccepted) {
    // ALG keeps 3/4 and drops the two halves; OPT does the opposite.
    const auto seq = items({"3/4", "1/2", "1/2"});
    const auto alg = run_online(DualBinPacking{1}, "dual-first-fit", seq);
    DecisionTrace opt;
    opt.steps = {{Reject{}, Rational(0)}, {AssignBin{0}, Rational(1)}, {AssignBin{0}, Rational(2)}};
    opt.final_value = Rational(2);
    const auto sub = accommodating_subsequence(seq, alg, opt);
    // The first half is swapped for 3/4; original order is kept.
    EXPECT_EQ(sub, items({"3/4", "1/2"}));
}

TEST(Accommodating, InconsistentTracesAreAnError) {
    const auto seq = items({"1/2"});
    EXPECT_THROW(accommodating_subsequence(seq, DecisionTrace{}, DecisionTrace{}), Error);
}

TEST(UnfairFirstFitRun, RejectsEveryLargeItemOfTheConstruction) {
    const auto gen = adversary::gen_uff_lb(2);
    const auto played = adversary::play(gen, AlgorithmId::UnfairFirstFit);
    for (std::size_t i = 0; i < played.sequence.size(); ++i) {
        if (std::get<Item>(played.sequence[i]).size == make_rational(1, 2) + adversary::packing_epsilon(2)) {
            EXPECT_EQ(played.trace.steps[i].decision, Decision{Reject{}}) << "step " << i;
        }
    }
    EXPECT_EQ(played.trace.final_value, Rational(4));
}
