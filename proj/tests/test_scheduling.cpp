#include "support/helpers.hpp"

#include <gtest/gtest.h>

using namespace obr;
using namespace obr::scheduling;
using obr::test::jobs;
using obr::test::R;
using obr::test::rs;
using obr::test::values;

namespace {

SchedState state_of(std::initializer_list<const char *> assigned, std::initializer_list<const char *> speeds) {
    return SchedState{rs(assigned), rs(speeds)};
}

int machine(const Decision &d) { return std::get<AssignMachine>(d).index; }

}  // namespace

TEST(Makespan, Examples) {
    EXPECT_EQ(makespan(state_of({"2", "3", "1"}, {"1", "1", "1"})), Rational(3));
    EXPECT_EQ(makespan(SchedState::empty(rs({"1", "1"}))), Rational(0));
    EXPECT_EQ(makespan(state_of({"6", "0"}, {"2", "1"})), Rational(3));
}

TEST(MinLoad, Examples) {
    EXPECT_EQ(min_load(state_of({"1", "1"}, {"2", "1"})), R("1/2"));
    EXPECT_EQ(min_load(state_of({"5", "0"}, {"1", "1"})), Rational(0));
    EXPECT_EQ(min_load(state_of({"2", "2", "2"}, {"1", "1", "1"})), Rational(2));
}

TEST(ScheduleStep, GreedyRelatedBreaksTiesTowardTheSlowMachine) {
    const auto inst = related_makespan(R("2"));
    const auto s = state_of({"2", "0"}, {"2", "1"});
    EXPECT_EQ(machine(schedule_step(SchedPolicy::GreedyRelatedSlowTies, inst, s, Job{R("2")})), 1);
    EXPECT_EQ(machine(schedule_step(SchedPolicy::GreedyRelatedFastTies, inst, s, Job{R("2")})), 0);
}

TEST(ScheduleStep, GreedyRelatedPicksTheSmallerMakespan) {
    const auto inst = related_makespan(R("2"));
    // fast: (2+3)/2 = 5/2, slow: 3
    EXPECT_EQ(machine(schedule_step(SchedPolicy::GreedyRelatedSlowTies, inst, state_of({"2", "0"}, {"2", "1"}),
                                    Job{R("3")})),
              0);
}

TEST(ScheduleStep, FastAlwaysUsesTheFastMachine) {
    const auto inst = related_makespan(R("2"));
    const auto s = state_of({"4", "0"}, {"2", "1"});
    const auto d = schedule_step(SchedPolicy::Fast, inst, s, Job{R("2")});
    EXPECT_EQ(machine(d), 0);
    EXPECT_EQ(makespan_with(s, 0, R("2")), Rational(3));
}

TEST(ScheduleStep, GreedyIdenticalLowestIndexOnTies) {
    const auto inst = identical_makespan(3);
    EXPECT_EQ(machine(schedule_step(SchedPolicy::GreedyIdentical, inst, state_of({"1", "0", "0"}, {"1", "1", "1"}),
                                    Job{R("1")})),
              1);
}

TEST(ScheduleStep, SantaPoliciesChooseTheLeastLoadedMachine) {
    const auto inst = related_santa(R("2"));
    // completion times 1/2 and 0: the slow machine is less loaded
    const auto s = state_of({"1", "0"}, {"2", "1"});
    EXPECT_EQ(machine(schedule_step(SchedPolicy::SantaLeastLoaded, inst, s, Job{R("2")})), 1);
    EXPECT_EQ(machine(schedule_step(SchedPolicy::SantaGreedy, inst, s, Job{R("2")})), 1);
    EXPECT_EQ(machine(schedule_step(SchedPolicy::SantaLeastLoaded, inst, SchedState::empty(rs({"2", "1"})),
                                    Job{R("1")})),
              0);
}

TEST(ScheduleStep, ThresholdPicksTheFullestMachineUnderTheBound) {
    const auto inst = identical_makespan(3);
    const auto s = state_of({"1", "7/12", "0"}, {"1", "1", "1"});
    EXPECT_EQ(machine(schedule_step(SchedPolicy::Threshold43, inst, s, Job{R("7/12")}, R("3/4"))), 2);
    // With a generous optimum the fullest machine wins.
    EXPECT_EQ(machine(schedule_step(SchedPolicy::Threshold43, inst, s, Job{R("1/4")}, R("1"))), 0);
}

TEST(ScheduleStep, ThresholdFallsBackToTheLeastLoadedMachine) {
    const auto inst = identical_makespan(3);
    // Sixth job of the counterexample: every machine would exceed 4/3.
    const auto s = state_of({"1", "7/12", "3/4"}, {"1", "1", "1"});
    EXPECT_EQ(machine(schedule_step(SchedPolicy::Threshold43, inst, s, Job{R("5/6")}, R("1"))), 1);
}

TEST(ScheduleStep, ThresholdNeedsThePrefixOptimum) {
    EXPECT_THROW(schedule_step(SchedPolicy::Threshold43, identical_makespan(3),
                               SchedState::empty(rs({"1", "1", "1"})), Job{R("1")}),
                 Error);
}

TEST(ScheduleStep, PolicyInstanceMismatch) {
    EXPECT_THROW(schedule_step(SchedPolicy::Fast, identical_makespan(3), SchedState::empty(rs({"1", "1", "1"})),
                               Job{R("1")}),
                 Error);
    EXPECT_THROW(schedule_step(SchedPolicy::SantaGreedy, identical_makespan(2), SchedState::empty(rs({"1", "1"})),
                               Job{R("1")}),
                 Error);
    EXPECT_THROW(schedule_step(SchedPolicy::Threshold43, related_makespan(R("2")), SchedState::empty(rs({"2", "1"})),
                               Job{R("1")}, R("1")),
                 Error);
}

TEST(ThresholdRun, CounterexampleTraceReaches17Over12) {
    const auto trace = run_online(identical_makespan(3), "threshold-4-3",
                                  jobs({"3/4", "1/4", "5/12", "1/6", "7/12", "5/6"}));
    std::vector<int> placed;
    for (const auto &s : trace.steps) {
        placed.push_back(machine(s.decision));
    }
    EXPECT_EQ(placed, (std::vector<int>{0, 0, 1, 1, 2, 1}));
    EXPECT_EQ(trace.final_value, R("17/12"));
}

TEST(GreedyRun, MakespanLowerBoundSequenceForFourMachines) {
    const auto trace = run_online(identical_makespan(4), "greedy-identical",
                                  jobs({"3", "1", "1", "1", "1", "1", "1", "3"}));
    EXPECT_EQ(trace.final_value, Rational(5));
}
