#include "support/helpers.hpp"

#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

using namespace obr;
using namespace obr::harness;
using obr::test::jobs;
using obr::test::R;

namespace {

ExperimentSpec sweep_spec(const std::string &construction, const std::string &sweep) {
    ExperimentSpec spec;
    spec.construction = construction;
    spec.sweep = parse_sweep(sweep);
    return spec;
}

std::vector<std::string> ratios(const RatioReport &r) {
    std::vector<std::string> out;
    for (const auto &row : r.rows) {
        out.push_back(row.ratio ? row.ratio->str() : "UNRESOLVED");
    }
    return out;
}

RatioRow row(const char *params, long long a, long long opt_a) {
    RatioRow r;
    r.params = params;
    r.a = Rational(a);
    r.opt_a = Rational(opt_a);
    r.ratio = Rational(a) / Rational(opt_a);
    r.opt_source = "witness";
    return r;
}

}  // namespace

TEST(ParseSweep, RangesAndLists) {
    const auto range = parse_sweep("n=2..4");
    EXPECT_EQ(range.param, "n");
    EXPECT_EQ(range.values, (std::vector<Rational>{Rational(2), Rational(3), Rational(4)}));
    const auto list = parse_sweep("s=3/2,2");
    EXPECT_EQ(list.param, "s");
    EXPECT_EQ(list.values, (std::vector<Rational>{R("3/2"), Rational(2)}));
}

TEST(ParseSweep, Errors) {
    for (const char *bad : {"n", "=1..2", "n=", "n=4..2", "n=1/2..3", "n=1,,2", "n=x"}) {
        EXPECT_THROW(parse_sweep(bad), Error) << bad;
    }
}

TEST(SetParam, Errors) {
    adversary::ConstructionParams p;
    EXPECT_THROW(set_param(p, "m", R("3/2")), Error);
    EXPECT_THROW(set_param(p, "zzz", Rational(1)), Error);
    EXPECT_THROW(set_param(p, "seed", Rational(-1)), Error);
    set_param(p, "s", R("5/2"));
    EXPECT_EQ(*p.s, R("5/2"));
}

TEST(RunExperiment, MakespanSweep) {
    const auto report = run_experiment(sweep_spec("makespan-greedy-lb", "m=3..5"));
    EXPECT_EQ(ratios(report), (std::vector<std::string>{"3/2", "5/3", "7/4"}));
    EXPECT_EQ(report.algorithm, "greedy-identical");
    EXPECT_EQ(report.direction, Direction::Min);
    for (const auto &r : report.rows) {
        EXPECT_EQ(r.opt_source, "oracle+witness");
        EXPECT_EQ(r.opt, r.opt_a);
    }
    EXPECT_EQ(exit_code(report), 0);
}

TEST(RunExperiment, AnyFitSweepAndFit) {
    auto spec = sweep_spec("anyfit-lb", "n=2..4");
    spec.asymptotic = true;
    const auto report = run_experiment(spec);
    EXPECT_EQ(ratios(report), (std::vector<std::string>{"7/5", "10/7", "13/9"}));
    ASSERT_TRUE(report.fitted);
    EXPECT_EQ(report.fitted->c, R("3/2"));
    EXPECT_EQ(report.fitted->alpha, R("-1/2"));
    // 10 = (3/2)·7 - 1/2 exactly.
    EXPECT_TRUE(report.fitted->warnings.empty());
}

TEST(RunExperiment, WitnessOnlyRows) {
    auto spec = sweep_spec("anyfit-lb", "n=2..3");
    spec.opt_source = OptSource::Witness;
    const auto report = run_experiment(spec);
    for (const auto &r : report.rows) {
        EXPECT_EQ(r.opt_source, "witness");
    }
    EXPECT_EQ(ratios(report), (std::vector<std::string>{"7/5", "10/7"}));
}

TEST(RunExperiment, BudgetExhaustedWithoutWitnessIsUnresolved) {
    auto spec = sweep_spec("makespan-greedy-lb", "m=4..4");
    spec.opt_source = OptSource::Oracle;
    spec.oracle.node_budget = 3;
    const auto report = run_experiment(spec);
    ASSERT_EQ(report.rows.size(), 1U);
    EXPECT_FALSE(report.rows[0].resolved());
    EXPECT_EQ(report.rows[0].opt_source, "none");
    EXPECT_EQ(exit_code(report), 2);
    const auto csv = render_report(report, Format::Csv);
    EXPECT_NE(csv.find("m=4,5/1,UNRESOLVED,,UNRESOLVED,none"), std::string::npos) << csv;
}

TEST(RunExperiment, BudgetExhaustedFallsBackToTheWitness) {
    auto spec = sweep_spec("makespan-greedy-lb", "m=4..4");
    spec.oracle.node_budget = 3;
    const auto report = run_experiment(spec);
    EXPECT_EQ(report.rows[0].opt_source, "witness");
    EXPECT_EQ(*report.rows[0].ratio, R("5/3"));
    EXPECT_FALSE(report.rows[0].opt.has_value());
}

TEST(RunExperiment, EmptySequenceHasRatioOne) {
    ExperimentSpec spec;
    spec.instance = identical_makespan(2);
    spec.algorithm = AlgorithmId::GreedyIdentical;
    const auto report = run_experiment(spec);
    ASSERT_EQ(report.rows.size(), 1U);
    EXPECT_EQ(report.rows[0].params, "file");
    EXPECT_EQ(*report.rows[0].ratio, Rational(1));
}

TEST(RunExperiment, FileMode) {
    ExperimentSpec spec;
    spec.instance = identical_makespan(3);
    spec.sequence = jobs({"2", "1", "1", "2"});
    spec.algorithm = AlgorithmId::GreedyIdentical;
    const auto report = run_experiment(spec);
    EXPECT_EQ(report.construction, "file");
    EXPECT_EQ(*report.rows[0].ratio, R("3/2"));
    EXPECT_EQ(report.rows[0].opt_source, "oracle");
}

TEST(RunExperiment, InvalidExperiments) {
    ExperimentSpec no_alg;
    no_alg.instance = identical_makespan(2);
    EXPECT_THROW(run_experiment(no_alg), Error);
    EXPECT_THROW(run_experiment(sweep_spec("makespan-greedy-lb", "n=2..3")), Error);
    EXPECT_THROW(run_experiment(sweep_spec("no-such", "m=3..4")), Error);
    ExperimentSpec mismatch = sweep_spec("fast-lb", "s=2,3");
    mismatch.algorithm = AlgorithmId::FirstFit;
    EXPECT_THROW(run_experiment(mismatch), Error);
}

TEST(RunExperiment, DefaultLabels) {
    ExperimentSpec spec;
    spec.construction = "seatres-lb";
    EXPECT_EQ(run_experiment(spec).rows[0].params, "k=12;seats=8");
    spec.construction = "threshold-counter";
    EXPECT_EQ(run_experiment(spec).rows[0].params, "-");
}

TEST(FitAsymptotic, NeedsTwoRowsAndDistinctOptimum) {
    EXPECT_THROW(fit_asymptotic({row("a", 3, 2)}), Error);
    EXPECT_THROW(fit_asymptotic({row("a", 3, 2), row("b", 5, 2)}), Error);
    RatioRow unresolved;
    unresolved.params = "u";
    EXPECT_THROW(fit_asymptotic({row("a", 3, 2), unresolved}), Error);
}

TEST(FitAsymptotic, WarnsOffTheLine) {
    const auto fit = fit_asymptotic({row("a", 7, 5), row("b", 11, 7), row("c", 13, 9)});
    EXPECT_EQ(fit.c, R("3/2"));
    EXPECT_EQ(fit.alpha, R("-1/2"));
    ASSERT_EQ(fit.warnings.size(), 1U);
    EXPECT_EQ(fit.warnings[0], "non-affine: row b has A = 11/1, fit predicts 10/1");
}

TEST(FitAsymptotic, UffRowsAreFlaggedNonAffine) {
    auto spec = sweep_spec("uff-lb", "n=2..4");
    spec.asymptotic = true;
    const auto report = run_experiment(spec);
    ASSERT_TRUE(report.fitted);
    EXPECT_FALSE(report.fitted->warnings.empty());
    EXPECT_LT(report.fitted->c, R("1/10"));
}

TEST(EmitReport, GoldenCsv) {
    const auto csv = render_report(run_experiment(sweep_spec("makespan-greedy-lb", "m=3..5")), Format::Csv);
    std::ifstream in(std::string(OBR_GOLDEN_DIR) + "/makespan_greedy_lb_m3-5.csv", std::ios::binary);
    ASSERT_TRUE(in);
    std::stringstream golden;
    golden << in.rdbuf();
    EXPECT_EQ(csv, golden.str());
}

TEST(EmitReport, ByteStable) {
    ExperimentSpec spec;
    spec.construction = "threshold-counter";
    for (const auto f : {Format::Csv, Format::Json, Format::Markdown}) {
        EXPECT_EQ(render_report(run_experiment(spec), f), render_report(run_experiment(spec), f));
    }
    const auto csv = render_report(run_experiment(spec), Format::Csv);
    EXPECT_EQ(csv, "params,A,OPT_A,OPT,ratio,opt_source\n-,17/12,1/1,1/1,17/12,oracle+witness\n");
}

TEST(EmitReport, JsonShape) {
    auto spec = sweep_spec("anyfit-lb", "n=2..3");
    spec.asymptotic = true;
    const auto j = report_to_json(run_experiment(spec));
    EXPECT_EQ(j["construction"], "anyfit-lb");
    EXPECT_EQ(j["algorithm"], "first-fit");
    EXPECT_EQ(j["direction"], "MIN");
    EXPECT_EQ(j["rows"].size(), 2U);
    EXPECT_EQ(j["rows"][0]["ratio"], "7/5");
    EXPECT_EQ(j["fitted"]["c"], "3/2");
}

TEST(EmitReport, MarkdownHasTableAndFit) {
    auto spec = sweep_spec("anyfit-lb", "n=2..3");
    spec.asymptotic = true;
    const auto md = render_report(run_experiment(spec), Format::Markdown);
    EXPECT_NE(md.find("| n=2 | 7/1 | 5/1 |"), std::string::npos) << md;
    EXPECT_NE(md.find("fitted: c = 3/2, alpha = -1/2"), std::string::npos) << md;
}

TEST(Formats, Parse) {
    EXPECT_EQ(parse_format("md"), Format::Markdown);
    EXPECT_THROW(parse_format("xml"), Error);
    EXPECT_EQ(parse_opt_source("both"), OptSource::Both);
    EXPECT_THROW(parse_opt_source("either"), Error);
}

TEST(ClosedForm, MatchesTheSweeps) {
    for (const auto &[construction, sweep] : std::vector<std::pair<std::string, std::string>>{
             {"makespan-greedy-lb", "m=2..6"}, {"fast-lb", "s=3/2,2,3"}, {"anyfit-lb", "n=2..4"},
             {"uff-lb", "n=2..3"}, {"covering-lb", "L=2,5,10"}}) {
        const auto spec = sweep_spec(construction, sweep);
        const auto report = run_experiment(spec);
        const auto &info = adversary::construction_info(construction);
        for (std::size_t i = 0; i < report.rows.size(); ++i) {
            auto p = spec.params;
            set_param(p, spec.sweep->param, spec.sweep->values[i]);
            EXPECT_EQ(report.rows[i].ratio, closed_form_ratio(construction, info.default_algorithm, p))
                << construction << " " << report.rows[i].params;
        }
    }
}
