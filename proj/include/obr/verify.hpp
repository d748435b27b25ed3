#pragma once

// The acceptance corpus: every quantitative claim the library reproduces,
// checked exactly. Shared by `obr verify` and the acceptance test binary.

#include "obr/accommodating.hpp"
#include "obr/corpus.hpp"
#include "obr/harness.hpp"
#include "obr/reference.hpp"

#include <functional>
#include <sstream>
#include <string>
#include <vector>

namespace obr::verify {

struct CheckResult {
    int id = 0;
    std::string name;
    bool passed = false;
    std::string detail;
};

/// Counts expectations and keeps the first failure.
class Tally {
public:
    template <class Message>
    void expect(bool ok, Message &&message) {
        ++checked_;
        if (!ok) {
            ++failed_;
            if (first_failure_.empty()) {
                first_failure_ = message();
            }
        }
    }

    [[nodiscard]] bool passed() const { return failed_ == 0; }
    [[nodiscard]] std::size_t checked() const { return checked_; }
    [[nodiscard]] std::string summary() const {
        std::ostringstream out;
        out << checked_ << " checks";
        if (failed_ > 0) {
            out << ", " << failed_ << " failed; first: " << first_failure_;
        }
        return out.str();
    }

private:
    std::size_t checked_ = 0;
    std::size_t failed_ = 0;
    std::string first_failure_;
};

struct Check {
    int id;
    std::string name;
    std::function<void(Tally &)> body;
};

namespace detail {

inline std::string show(const std::vector<Request> &seq) { return io::sequence_to_json(seq).dump(); }

/// OPT_A for the algorithm's run on `seq`; throws if the oracle stops early.
inline oracle::OracleResult bounded(const ProblemInstance &inst, const std::vector<Request> &seq,
                                    const DecisionTrace &trace) {
    auto r = oracle::solve_bounded(inst, seq, prefix_profile(trace, direction(inst)));
    if (!r.complete()) {
        throw Error(std::string("oracle did not complete: ") + oracle::to_string(r.status) + " on " + show(seq));
    }
    return r;
}

inline oracle::OracleResult unconstrained(const ProblemInstance &inst, const std::vector<Request> &seq) {
    auto r = oracle::solve_unconstrained(inst, seq);
    if (!r.complete()) {
        throw Error(std::string("oracle did not complete: ") + oracle::to_string(r.status) + " on " + show(seq));
    }
    return r;
}

/// Runs `alg` on `count` random cases from `make` and hands each
/// (case, A, OPT_A) to `judge`.
template <class Make, class Judge>
void ratio_corpus(std::uint64_t seed, int count, AlgorithmId alg, Make make, Judge judge) {
    corpus::Draw draw(seed);
    for (int i = 0; i < count; ++i) {
        const corpus::Case c = make(draw);
        const auto trace = run_online(c.instance, alg, c.sequence);
        const auto opt_a = bounded(c.instance, c.sequence, trace);
        judge(c, trace.final_value, opt_a.value);
    }
}

inline harness::RatioRow point(std::string_view construction, AlgorithmId alg, adversary::ConstructionParams p,
                               harness::OptSource source) {
    harness::ExperimentSpec spec;
    spec.construction = std::string(construction);
    spec.algorithm = alg;
    spec.opt_source = source;
    return harness::run_point(spec, p);
}

inline std::string row_text(const harness::RatioRow &r) {
    return r.params + ": A=" + r.a.str() + " OPT_A=" + (r.opt_a ? r.opt_a->str() : "UNRESOLVED") +
           " source=" + r.opt_source;
}

/// Replays a seat-reservation trace and reports the first rejection of an
/// interval that still fitted.
inline std::optional<std::size_t> unfair_step(const SeatReservation &inst, const std::vector<Request> &seq,
                                              const DecisionTrace &trace) {
    State state = initial_state(inst);
    for (std::size_t t = 0; t < seq.size(); ++t) {
        const auto &iv = std::get<Interval>(seq[t]);
        if (std::holds_alternative<Reject>(trace.steps[t].decision) &&
            seatres::fits_somewhere(std::get<seatres::SeatState>(state), iv)) {
            return t;
        }
        apply_in_place(inst, state, seq[t], trace.steps[t].decision);
    }
    return std::nullopt;
}

inline constexpr std::uint64_t kDualSeed = 1200;
inline constexpr int kDualCases = 300;

}  // namespace detail

inline std::vector<Check> acceptance_checks() {
    using adversary::ConstructionParams;
    using harness::OptSource;
    std::vector<Check> checks;

    checks.push_back({1, "makespan greedy lower bound 2-1/(m-1)", [](Tally &t) {
                          for (int m = 3; m <= 6; ++m) {
                              ConstructionParams p;
                              p.m = m;
                              const auto row = detail::point("makespan-greedy-lb", AlgorithmId::GreedyIdentical, p,
                                                             m <= 4 ? OptSource::Both : OptSource::Witness);
                              t.expect(row.ratio == make_rational(2LL * m - 3, m - 1),
                                       [&] { return detail::row_text(row); });
                              if (m <= 4) {
                                  t.expect(row.opt_source == "oracle+witness", [&] { return detail::row_text(row); });
                              }
                          }
                      }});

    checks.push_back({2, "makespan greedy upper bound property", [](Tally &t) {
                          detail::ratio_corpus(
                              1002, 1000, AlgorithmId::GreedyIdentical,
                              [](corpus::Draw &d) { return corpus::identical_makespan_case(d, {3, 4}, 8); },
                              [&](const corpus::Case &c, const Rational &a, const Rational &opt_a) {
                                  const int m = static_cast<int>(machine_speeds(c.instance)->size());
                                  t.expect(a <= make_rational(2LL * m - 3, m - 1) * opt_a,
                                           [&] { return "m=" + std::to_string(m) + " " + detail::show(c.sequence); });
                              });
                      }});

    checks.push_back({3, "two related machines: greedy = OPT_greedy", [](Tally &t) {
                          detail::ratio_corpus(
                              1003, 1000, AlgorithmId::GreedyRelated,
                              [](corpus::Draw &d) {
                                  return corpus::related_makespan_case(
                                      d, {make_rational(3, 2), Rational(2), Rational(3)}, 7);
                              },
                              [&](const corpus::Case &c, const Rational &a, const Rational &opt_a) {
                                  t.expect(a == opt_a, [&] { return detail::show(c.sequence); });
                              });
                      }});

    checks.push_back({4, "greedy with fast-machine ties above 1", [](Tally &t) {
                          ConstructionParams p;
                          p.s = Rational(2);
                          const auto row = detail::point("greedy-fastties-counter", AlgorithmId::GreedyRelatedFastTies,
                                                         p, OptSource::Both);
                          t.expect(row.a == make_rational(5, 2) && row.opt_a == Rational(2),
                                   [&] { return detail::row_text(row); });
                      }});

    checks.push_back({5, "Fast ratio (s+1)/s", [](Tally &t) {
                          for (const auto &s : {make_rational(3, 2), Rational(2), make_rational(5, 2)}) {
                              ConstructionParams p;
                              p.s = s;
                              const auto row = detail::point("fast-lb", AlgorithmId::Fast, p, OptSource::Both);
                              t.expect(row.ratio == (s + Rational(1)) / s, [&] { return detail::row_text(row); });
                          }
                          detail::ratio_corpus(
                              1005, 500, AlgorithmId::Fast,
                              [](corpus::Draw &d) {
                                  return corpus::related_makespan_case(
                                      d, {make_rational(3, 2), Rational(2), make_rational(5, 2)}, 7);
                              },
                              [&](const corpus::Case &c, const Rational &a, const Rational &opt_a) {
                                  const Rational s = machine_speeds(c.instance)->front();
                                  t.expect(a <= (s + Rational(1)) / s * opt_a, [&] { return detail::show(c.sequence); });
                              });
                      }});

    checks.push_back({6, "adaptive 4/3 lower bound", [](Tally &t) {
                          for (int m = 3; m <= 4; ++m) {
                              for (const auto alg : {AlgorithmId::GreedyIdentical, AlgorithmId::Threshold43}) {
                                  const auto gen = adversary::gen_makespan_adaptive_lb(m);
                                  const auto played = adversary::play(gen, alg);
                                  const auto witness = adversary::verified_witness(gen, played);
                                  t.expect(played.trace.final_value >= Rational(4) && witness &&
                                               witness->final_value == Rational(3),
                                           [&] {
                                               return std::string(algorithm_name(alg)) + " m=" + std::to_string(m) +
                                                      " A=" + played.trace.final_value.str();
                                           });
                              }
                          }
                      }});

    checks.push_back({7, "threshold counterexample 17/12", [](Tally &t) {
                          const auto row = detail::point("threshold-counter", AlgorithmId::Threshold43, {},
                                                         OptSource::Both);
                          t.expect(row.a == make_rational(17, 12) && row.opt == Rational(1),
                                   [&] { return detail::row_text(row); });
                      }});

    checks.push_back({8, "Santa identical machines ratio 1", [](Tally &t) {
                          detail::ratio_corpus(
                              1008, 1000, AlgorithmId::SantaGreedy,
                              [](corpus::Draw &d) { return corpus::identical_santa_case(d, {2, 3, 4}, 7); },
                              [&](const corpus::Case &c, const Rational &a, const Rational &opt_a) {
                                  t.expect(a == opt_a, [&] { return detail::show(c.sequence); });
                              });
                      }});

    checks.push_back({9, "Santa related machines 1/s", [](Tally &t) {
                          for (const auto &s : {make_rational(3, 2), Rational(2)}) {
                              ConstructionParams p;
                              p.s = s;
                              const auto row = detail::point("santa-related-adaptive", AlgorithmId::SantaLeastLoaded,
                                                             p, OptSource::Both);
                              t.expect(row.ratio && *row.ratio <= Rational(1) / s,
                                       [&] { return detail::row_text(row); });
                          }
                          detail::ratio_corpus(
                              1009, 500, AlgorithmId::SantaGreedy,
                              [](corpus::Draw &d) {
                                  return corpus::related_santa_case(d, {make_rational(3, 2), Rational(2)}, 7);
                              },
                              [&](const corpus::Case &c, const Rational &a, const Rational &opt_a) {
                                  const Rational s = machine_speeds(c.instance)->front();
                                  t.expect(a >= opt_a / s, [&] { return detail::show(c.sequence); });
                              });
                      }});

    checks.push_back({10, "Any-Fit asymptotic 3/2", [](Tally &t) {
                          for (const auto alg : {AlgorithmId::FirstFit, AlgorithmId::BestFit, AlgorithmId::WorstFit}) {
                              harness::ExperimentSpec spec;
                              spec.construction = "anyfit-lb";
                              spec.algorithm = alg;
                              spec.sweep = harness::parse_sweep("n=2..6");
                              spec.opt_source = OptSource::Witness;
                              spec.asymptotic = true;
                              const auto report = harness::run_experiment(spec);
                              const auto &first = report.rows.front();
                              const Rational c_a = first.a, c_o = first.opt_a.value_or(Rational(-1));
                              // branch constants: (4, 3) when 1/4 joins the 2/3 bin, (3, 2) otherwise
                              const bool known = (c_a == Rational(7) && c_o == Rational(5)) ||
                                                 (c_a == Rational(6) && c_o == Rational(4));
                              t.expect(known, [&] {
                                  return std::string(algorithm_name(alg)) + " unexpected branch constants " +
                                         detail::row_text(first);
                              });
                              for (int n = 2; n <= 6; ++n) {
                                  const auto &row = report.rows[static_cast<std::size_t>(n - 2)];
                                  t.expect(row.a == Rational(3 * (n - 1)) + c_a - Rational(3) &&
                                               row.opt_a == Rational(2 * (n - 1)) + c_o - Rational(2) &&
                                               row.opt_source == "witness",
                                           [&] { return std::string(algorithm_name(alg)) + " " + detail::row_text(row); });
                              }
                              t.expect(report.fitted && report.fitted->c == make_rational(3, 2), [&] {
                                  return std::string(algorithm_name(alg)) + " fitted c=" +
                                         (report.fitted ? report.fitted->c.str() : "-");
                              });
                              ConstructionParams p;
                              p.n = 2;
                              const auto row = detail::point("anyfit-lb", alg, p, OptSource::Both);
                              t.expect(row.opt_source == "oracle+witness", [&] {
                                  return std::string(algorithm_name(alg)) + " " + detail::row_text(row);
                              });
                          }
                      }});

    checks.push_back({11, "bin covering greedy 1/2", [](Tally &t) {
                          const auto gen = adversary::gen_covering_lb(10, 10);
                          const auto played = adversary::play(gen, AlgorithmId::CoveringGreedy);
                          const auto witness = adversary::verified_witness(gen, played);
                          t.expect(played.trace.final_value == Rational(5) && witness &&
                                       witness->final_value == Rational(10),
                                   [&] { return "A=" + played.trace.final_value.str(); });
                          for (std::size_t i = 0; i < 10; ++i) {
                              t.expect(played.trace.steps[i].value.is_zero() && witness &&
                                           witness->steps[i].value.is_zero(),
                                       [&] { return "nonzero value in the small-item phase at step " + std::to_string(i + 1); });
                          }
                          t.expect(played.trace.final_value / witness->final_value == make_rational(1, 2),
                                   [] { return std::string("ratio differs from 1/2"); });
                      }});

    checks.push_back({12, "dual bin packing accommodating transformation", [](Tally &t) {
                          for (const auto alg :
                               {AlgorithmId::DualFirstFit, AlgorithmId::DualBestFit, AlgorithmId::DualWorstFit}) {
                              corpus::Draw draw(detail::kDualSeed);
                              for (int i = 0; i < detail::kDualCases; ++i) {
                                  const auto c = corpus::dual_case(draw, 2, 7);
                                  const auto &inst = std::get<DualBinPacking>(c.instance);
                                  const auto trace = run_online(c.instance, alg, c.sequence);
                                  const auto opt_a = detail::bounded(c.instance, c.sequence, trace);
                                  const auto sub = packing::accommodating_subsequence(c.sequence, trace, opt_a.witness);
                                  const auto sub_trace = run_online(c.instance, alg, sub);
                                  const auto sub_opt = detail::unconstrained(c.instance, sub);
                                  t.expect(packing::is_accommodating(inst, sub) &&
                                               sub_trace.final_value == trace.final_value &&
                                               sub_opt.value == opt_a.value,
                                           [&] {
                                               return std::string(algorithm_name(alg)) + " " +
                                                      detail::show(c.sequence) + " -> " + detail::show(sub);
                                           });
                              }
                          }
                      }});

    checks.push_back({13, "Unfair-First-Fit ratio tends to 0", [](Tally &t) {
                          std::optional<Rational> previous;
                          for (int n = 2; n <= 4; ++n) {
                              ConstructionParams p;
                              p.n = n;
                              const auto row =
                                  detail::point("uff-lb", AlgorithmId::UnfairFirstFit, p, OptSource::Witness);
                              const Rational expected =
                                  adversary::uff_ratio_formula(n, adversary::packing_epsilon(n));
                              t.expect(row.ratio == expected && row.opt_source == "witness",
                                       [&] { return detail::row_text(row) + " expected " + expected.str(); });
                              t.expect(!previous || (row.ratio && *row.ratio < *previous),
                                       [&] { return "ratio not strictly decreasing at n=" + std::to_string(n); });
                              previous = row.ratio;
                          }
                      }});

    checks.push_back({14, "fair dual first/best fit never below 1/2", [](Tally &t) {
                          for (const auto alg : {AlgorithmId::DualFirstFit, AlgorithmId::DualBestFit}) {
                              detail::ratio_corpus(
                                  detail::kDualSeed, detail::kDualCases, alg,
                                  [](corpus::Draw &d) { return corpus::dual_case(d, 2, 7); },
                                  [&](const corpus::Case &c, const Rational &a, const Rational &opt_a) {
                                      t.expect(Rational(2) * a >= opt_a, [&] { return detail::show(c.sequence); });
                                  });
                          }
                      }});

    checks.push_back({15, "seat reservation 11/(k+7)", [](Tally &t) {
                          for (const int k : {12, 16}) {
                              const auto gen = adversary::gen_seatres_lb(k, 8);
                              const auto played = adversary::play(gen, AlgorithmId::SeatFirstFit);
                              const auto witness = adversary::verified_witness(gen, played);
                              t.expect(witness.has_value() &&
                                           played.trace.final_value / witness->final_value <= make_rational(11, k + 7),
                                       [&] { return "k=" + std::to_string(k) + " A=" + played.trace.final_value.str(); });
                              const auto bad =
                                  detail::unfair_step(std::get<SeatReservation>(gen.instance), played.sequence, played.trace);
                              t.expect(!bad, [&] { return "unfair rejection at step " + std::to_string(*bad + 1); });
                          }
                      }});

    checks.push_back({16, "edge-arrival matching greedy ratio 1", [](Tally &t) {
                          detail::ratio_corpus(
                              1016, 500, AlgorithmId::MatchingGreedy,
                              [](corpus::Draw &d) { return corpus::matching_case(d, 8); },
                              [&](const corpus::Case &c, const Rational &a, const Rational &opt_a) {
                                  t.expect(a == opt_a, [&] { return detail::show(c.sequence); });
                              });
                      }});

    checks.push_back({17, "oracle equals brute force on small inputs", [](Tally &t) {
                          struct Source {
                              std::function<corpus::Case(corpus::Draw &)> make;
                              std::vector<AlgorithmId> algorithms;
                          };
                          const std::vector<Source> sources{
                              {[](corpus::Draw &d) { return corpus::identical_makespan_case(d, {2, 3}, 6); },
                               {AlgorithmId::GreedyIdentical}},
                              {[](corpus::Draw &d) {
                                   return corpus::related_makespan_case(d, {make_rational(3, 2), Rational(2)}, 6);
                               },
                               {AlgorithmId::GreedyRelated, AlgorithmId::GreedyRelatedFastTies, AlgorithmId::Fast}},
                              {[](corpus::Draw &d) { return corpus::identical_santa_case(d, {2, 3}, 6); },
                               {AlgorithmId::SantaGreedy}},
                              {[](corpus::Draw &d) { return corpus::related_santa_case(d, {Rational(2)}, 6); },
                               {AlgorithmId::SantaLeastLoaded}},
                              {[](corpus::Draw &d) { return corpus::bin_packing_case(d, 6); },
                               {AlgorithmId::FirstFit, AlgorithmId::BestFit, AlgorithmId::WorstFit}},
                              {[](corpus::Draw &d) { return corpus::covering_case(d, 6); },
                               {AlgorithmId::CoveringGreedy}},
                              {[](corpus::Draw &d) { return corpus::dual_case(d, 2, 6); },
                               {AlgorithmId::DualFirstFit, AlgorithmId::DualBestFit, AlgorithmId::DualWorstFit,
                                AlgorithmId::UnfairFirstFit}},
                              {[](corpus::Draw &d) { return corpus::seat_case(d, 6); },
                               {AlgorithmId::SeatFirstFit, AlgorithmId::SeatBestFit}},
                              {[](corpus::Draw &d) { return corpus::matching_case(d, 6); },
                               {AlgorithmId::MatchingGreedy}},
                          };
                          corpus::Draw draw(1017);
                          for (const auto &source : sources) {
                              for (int i = 0; i < 60; ++i) {
                                  const auto c = source.make(draw);
                                  const auto naive_free = reference::naive_optimum(c.instance, c.sequence);
                                  const auto free = oracle::solve_unconstrained(c.instance, c.sequence);
                                  t.expect(free.complete() && naive_free == free.value, [&] {
                                      return problem_name(c.instance) + " unconstrained " + detail::show(c.sequence);
                                  });
                                  for (const auto alg : source.algorithms) {
                                      const auto trace = run_online(c.instance, alg, c.sequence);
                                      const auto profile = prefix_profile(trace, direction(c.instance));
                                      const auto naive = reference::naive_optimum(c.instance, c.sequence, &profile);
                                      const auto fast = oracle::solve_bounded(c.instance, c.sequence, profile);
                                      t.expect(fast.complete() && naive == fast.value, [&] {
                                          return problem_name(c.instance) + " bounded by " +
                                                 std::string(algorithm_name(alg)) + " " + detail::show(c.sequence);
                                      });
                                  }
                              }
                          }
                      }});

    return checks;
}

inline CheckResult run_check(const Check &check) {
    Tally tally;
    CheckResult result{check.id, check.name, false, {}};
    try {
        check.body(tally);
        result.passed = tally.passed() && tally.checked() > 0;
        result.detail = tally.summary();
    } catch (const std::exception &e) {
        result.detail = std::string("error: ") + e.what();
    }
    return result;
}

inline std::string format_result(const CheckResult &r) {
    return std::string(r.passed ? "PASS" : "FAIL") + " [" + std::to_string(r.id) + "] " + r.name + " (" + r.detail +
           ")";
}

}  // namespace obr::verify
