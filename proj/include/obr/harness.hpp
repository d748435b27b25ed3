#pragma once

// Experiment orchestration: play an algorithm against a construction (or a
// fixed sequence), bound OPT_A by the oracle and/or a verified witness, and
// report exact ratios.

#include "obr/adversary.hpp"
#include "obr/io.hpp"

#include <json.hpp>

#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace obr::harness {

/// An ordering invariant or a witness failed; the result cannot be trusted.
class InvariantViolation : public Error {
public:
    using Error::Error;
};

enum class OptSource { Oracle, Witness, Both };

inline OptSource parse_opt_source(std::string_view text) {
    if (text == "oracle") return OptSource::Oracle;
    if (text == "witness") return OptSource::Witness;
    if (text == "both") return OptSource::Both;
    throw Error("opt source must be oracle, witness or both, not '" + std::string(text) + "'");
}

struct Sweep {
    std::string param;
    std::vector<Rational> values;
};

/// Either `construction` is set, or `instance` and `sequence` describe a
/// fixed input.
struct ExperimentSpec {
    std::string construction;
    std::optional<ProblemInstance> instance;
    std::vector<Request> sequence;
    std::optional<AlgorithmId> algorithm;  // defaults to the construction's own
    adversary::ConstructionParams params;
    std::optional<Sweep> sweep;
    oracle::SearchConfig oracle;
    OptSource opt_source = OptSource::Both;
    bool asymptotic = false;
};

struct RatioRow {
    std::string params;
    Rational a;
    std::optional<Rational> opt_a;  // empty: UNRESOLVED
    std::optional<Rational> opt;
    std::optional<Rational> ratio;
    std::string opt_source;  // oracle, witness, oracle+witness, none
    std::vector<Request> sequence;

    [[nodiscard]] bool resolved() const { return opt_a.has_value(); }
};

struct AsymptoticFit {
    Rational c;
    Rational alpha;
    std::vector<std::string> warnings;
};

struct RatioReport {
    std::string construction;
    std::string algorithm;
    Direction direction = Direction::Min;
    std::vector<RatioRow> rows;
    std::optional<AsymptoticFit> fitted;

    [[nodiscard]] bool all_resolved() const {
        for (const auto &r : rows) {
            if (!r.resolved()) {
                return false;
            }
        }
        return true;
    }
};

/// 0 when every row is resolved, 2 otherwise.
inline int exit_code(const RatioReport &report) { return report.all_resolved() ? 0 : 2; }

// ---------------------------------------------------------------------------
// Parameters

inline void set_param(adversary::ConstructionParams &p, std::string_view name, const Rational &value) {
    if (name == "s") {
        p.s = value;
        return;
    }
    if (!value.is_integer()) {
        throw Error("parameter " + std::string(name) + " must be an integer");
    }
    const long v = value.numerator().get_si();
    if (name == "seed") {
        if (v < 0) {
            throw Error("seed must be non-negative");
        }
        p.seed = static_cast<std::uint64_t>(v);
        return;
    }
    const int i = static_cast<int>(v);
    if (name == "m") p.m = i;
    else if (name == "n") p.n = i;
    else if (name == "k") p.k = i;
    else if (name == "seats") p.seats = i;
    else if (name == "q") p.q = i;
    else if (name == "L") p.L = i;
    else if (name == "size") p.size = i;
    else throw Error("unknown parameter '" + std::string(name) + "'");
}

/// "n=2..6" (integer range) or "s=3/2,2,5/2" (explicit list).
inline Sweep parse_sweep(std::string_view text) {
    const auto eq = text.find('=');
    if (eq == std::string_view::npos || eq == 0 || eq + 1 == text.size()) {
        throw Error("sweep must look like name=a..b or name=v1,v2,...");
    }
    Sweep sweep{std::string(text.substr(0, eq)), {}};
    const auto body = text.substr(eq + 1);
    if (const auto dots = body.find(".."); dots != std::string_view::npos) {
        const Rational lo = parse_rational(body.substr(0, dots));
        const Rational hi = parse_rational(body.substr(dots + 2));
        if (!lo.is_integer() || !hi.is_integer() || hi < lo) {
            throw Error("sweep range needs integer bounds with lo <= hi");
        }
        for (Rational v = lo; v <= hi; v = v + Rational(1)) {
            sweep.values.push_back(v);
        }
    } else {
        std::size_t start = 0;
        while (start <= body.size()) {
            const auto comma = body.find(',', start);
            const auto piece = body.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
            sweep.values.push_back(parse_rational(piece));
            if (comma == std::string_view::npos) {
                break;
            }
            start = comma + 1;
        }
    }
    return sweep;
}

inline std::string param_label(const adversary::ConstructionInfo &info, const adversary::ConstructionParams &params) {
    const auto p = adversary::with_defaults(params);
    std::string out;
    for (const auto name : info.params) {
        std::string value;
        if (name == "m") value = std::to_string(*p.m);
        else if (name == "n") value = std::to_string(*p.n);
        else if (name == "k") value = std::to_string(*p.k);
        else if (name == "seats") value = std::to_string(*p.seats);
        else if (name == "q") value = std::to_string(*p.q);
        else if (name == "L") value = std::to_string(*p.L);
        else if (name == "size") value = std::to_string(*p.size);
        else if (name == "seed") value = std::to_string(*p.seed);
        else if (name == "s") value = p.s->str();
        out += (out.empty() ? "" : ";") + std::string(name) + "=" + value;
    }
    return out.empty() ? "-" : out;
}

// ---------------------------------------------------------------------------
// Closed forms

/// Ratio the construction provably forces on its default algorithm, where
/// one is known exactly.
inline std::optional<Rational> closed_form_ratio(std::string_view construction, AlgorithmId algorithm,
                                                 const adversary::ConstructionParams &params) {
    const auto p = adversary::with_defaults(params);
    const int m = *p.m;
    const int n = *p.n;
    const Rational s = *p.s;
    if (construction == "makespan-greedy-lb" && algorithm == AlgorithmId::GreedyIdentical) {
        return make_rational(2LL * m - 3, m - 1);
    }
    if (construction == "fast-lb" && algorithm == AlgorithmId::Fast) {
        return (s + Rational(1)) / s;
    }
    if (construction == "greedy-fastties-counter" && algorithm == AlgorithmId::GreedyRelatedFastTies &&
        s == Rational(2)) {
        return make_rational(5, 4);
    }
    if (construction == "threshold-counter" && algorithm == AlgorithmId::Threshold43) {
        return make_rational(17, 12);
    }
    if (construction == "santa-related-adaptive" && algorithm == AlgorithmId::SantaLeastLoaded) {
        return Rational(1) / s;
    }
    if (construction == "anyfit-lb" && (algorithm == AlgorithmId::FirstFit || algorithm == AlgorithmId::BestFit)) {
        return make_rational(4 + 3LL * (n - 1), 3 + 2LL * (n - 1));
    }
    if (construction == "anyfit-lb" && algorithm == AlgorithmId::WorstFit) {
        return make_rational(3, 2);
    }
    if (construction == "uff-lb" && algorithm == AlgorithmId::UnfairFirstFit) {
        return adversary::uff_ratio_formula(n, adversary::packing_epsilon(n));
    }
    if (construction == "covering-lb" && algorithm == AlgorithmId::CoveringGreedy) {
        const int big = *p.L;
        return make_rational(1 + (big - 1) / 2, big);
    }
    if (construction == "matching-random" && algorithm == AlgorithmId::MatchingGreedy) {
        return Rational(1);
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Rows

namespace detail {

inline void require_order(bool ok, const std::string &label, const std::string &what) {
    if (!ok) {
        throw InvariantViolation("row " + label + ": " + what);
    }
}

inline RatioRow evaluate(const ProblemInstance &inst, const adversary::Played &played,
                         const std::optional<DecisionTrace> &witness, const ExperimentSpec &spec, std::string label) {
    const Direction dir = direction(inst);
    RatioRow row;
    row.params = std::move(label);
    row.a = played.trace.final_value;
    row.sequence = played.sequence;
    row.opt_source = "none";

    std::optional<Rational> from_oracle;
    if (spec.opt_source != OptSource::Witness) {
        const PrefixProfile profile = prefix_profile(played.trace, dir);
        const auto bounded = oracle::solve_bounded(inst, played.sequence, profile, spec.oracle);
        if (bounded.status == oracle::Status::Infeasible) {
            throw InvariantViolation("row " + row.params + ": bounded oracle reports INFEASIBLE for a real trace");
        }
        if (bounded.complete()) {
            from_oracle = bounded.value;
        }
        const auto free = oracle::solve_unconstrained(inst, played.sequence, spec.oracle);
        if (free.complete()) {
            row.opt = free.value;
        }
    }
    const bool use_witness = spec.opt_source != OptSource::Oracle && witness.has_value();
    if (from_oracle && use_witness) {
        require_order(dominates(dir, *from_oracle, witness->final_value), row.params,
                      "verified witness " + witness->final_value.str() + " beats the oracle optimum " +
                          from_oracle->str());
    }
    if (from_oracle) {
        row.opt_a = from_oracle;
        row.opt_source = use_witness && witness->final_value == *from_oracle ? "oracle+witness" : "oracle";
    } else if (use_witness) {
        row.opt_a = witness->final_value;
        row.opt_source = "witness";
    }

    if (row.opt) {
        require_order(dominates(dir, *row.opt, row.opt_a.value_or(*row.opt)), row.params,
                      "OPT does not dominate OPT_A");
        require_order(dominates(dir, *row.opt, row.a), row.params, "OPT does not dominate A");
    }
    if (row.opt_a) {
        require_order(dominates(dir, *row.opt_a, row.a), row.params,
                      "OPT_A " + row.opt_a->str() + " does not dominate A " + row.a.str());
        if (row.opt_a->is_zero()) {
            require_order(row.a.is_zero(), row.params, "OPT_A is 0 while A is not");
            row.ratio = Rational(1);
        } else {
            row.ratio = row.a / *row.opt_a;
        }
    }
    return row;
}

}  // namespace detail

/// One row for a fixed construction and parameter point.
inline RatioRow run_point(const ExperimentSpec &spec, const adversary::ConstructionParams &params) {
    const auto &info = adversary::construction_info(spec.construction);
    const auto gen = adversary::make_construction(spec.construction, params);
    const AlgorithmId alg = spec.algorithm.value_or(info.default_algorithm);
    const auto played = adversary::play(gen, alg, spec.oracle);
    std::optional<DecisionTrace> witness;
    if (spec.opt_source != OptSource::Oracle) {
        try {
            witness = adversary::verified_witness(gen, played);
        } catch (const oracle::WitnessError &e) {
            throw InvariantViolation(std::string("witness rejected for ") + spec.construction + " (" +
                                     param_label(info, params) + "): " + e.what());
        }
    }
    return detail::evaluate(gen.instance, played, witness, spec, param_label(info, params));
}

inline AsymptoticFit fit_asymptotic(const std::vector<RatioRow> &rows);

inline RatioReport run_experiment(const ExperimentSpec &spec) {
    RatioReport report;
    if (spec.instance) {
        if (!spec.construction.empty() || spec.sweep) {
            throw Error("an experiment takes either a construction or an instance with a sequence");
        }
        if (!spec.algorithm) {
            throw Error("an algorithm is required with an explicit instance");
        }
        check_algorithm(*spec.algorithm, *spec.instance);
        check_sequence(*spec.instance, spec.sequence);
        report.construction = "file";
        report.algorithm = std::string(algorithm_name(*spec.algorithm));
        report.direction = direction(*spec.instance);
        const auto trace = run_online(*spec.instance, make_policy(*spec.algorithm, spec.oracle), spec.sequence);
        report.rows.push_back(
            detail::evaluate(*spec.instance, {spec.sequence, trace}, std::nullopt, spec, "file"));
    } else {
        const auto &info = adversary::construction_info(spec.construction);
        report.construction = std::string(info.id);
        report.algorithm = std::string(algorithm_name(spec.algorithm.value_or(info.default_algorithm)));
        std::vector<adversary::ConstructionParams> points;
        if (spec.sweep) {
            if (spec.sweep->values.empty()) {
                throw Error("sweep is empty");
            }
            if (std::find(info.params.begin(), info.params.end(), spec.sweep->param) == info.params.end()) {
                throw Error("construction " + report.construction + " has no parameter '" + spec.sweep->param + "'");
            }
            for (const auto &v : spec.sweep->values) {
                auto p = spec.params;
                set_param(p, spec.sweep->param, v);
                points.push_back(p);
            }
        } else {
            points.push_back(spec.params);
        }
        for (const auto &p : points) {
            report.rows.push_back(run_point(spec, p));
        }
        report.direction = direction(adversary::make_construction(spec.construction, points.front()).instance);
    }
    if (spec.asymptotic) {
        report.fitted = fit_asymptotic(report.rows);
    }
    return report;
}

/// c and alpha of the affine map OPT_A -> A through the first and last
/// resolved rows; intermediate rows off that line produce warnings.
inline AsymptoticFit fit_asymptotic(const std::vector<RatioRow> &rows) {
    std::vector<const RatioRow *> usable;
    for (const auto &r : rows) {
        if (r.resolved()) {
            usable.push_back(&r);
        }
    }
    if (usable.size() < 2) {
        throw Error("asymptotic fit needs at least 2 resolved rows");
    }
    const RatioRow &first = *usable.front();
    const RatioRow &last = *usable.back();
    if (*first.opt_a == *last.opt_a) {
        throw Error("asymptotic fit needs distinct OPT_A values in the first and last rows");
    }
    AsymptoticFit fit;
    fit.c = (last.a - first.a) / (*last.opt_a - *first.opt_a);
    fit.alpha = last.a - fit.c * *last.opt_a;
    for (std::size_t i = 1; i + 1 < usable.size(); ++i) {
        const Rational predicted = fit.c * *usable[i]->opt_a + fit.alpha;
        if (predicted != usable[i]->a) {
            fit.warnings.push_back("non-affine: row " + usable[i]->params + " has A = " + usable[i]->a.str() +
                                   ", fit predicts " + predicted.str());
        }
    }
    return fit;
}

// ---------------------------------------------------------------------------
// Output

enum class Format { Csv, Json, Markdown };

inline Format parse_format(std::string_view text) {
    if (text == "csv") return Format::Csv;
    if (text == "json") return Format::Json;
    if (text == "markdown" || text == "md") return Format::Markdown;
    throw Error("format must be csv, json or markdown, not '" + std::string(text) + "'");
}

namespace detail {

inline std::string cell(const std::optional<Rational> &v, const char *missing) { return v ? v->str() : missing; }

}  // namespace detail

inline nlohmann::ordered_json report_to_json(const RatioReport &report) {
    using J = nlohmann::ordered_json;
    J rows = J::array();
    for (const auto &r : report.rows) {
        J row;
        row["params"] = r.params;
        row["A"] = r.a.str();
        row["OPT_A"] = r.opt_a ? J(r.opt_a->str()) : J("UNRESOLVED");
        row["OPT"] = r.opt ? J(r.opt->str()) : J(nullptr);
        row["ratio"] = r.ratio ? J(r.ratio->str()) : J("UNRESOLVED");
        row["opt_source"] = r.opt_source;
        rows.push_back(std::move(row));
    }
    J out;
    out["construction"] = report.construction;
    out["algorithm"] = report.algorithm;
    out["direction"] = to_string(report.direction);
    out["rows"] = std::move(rows);
    if (report.fitted) {
        out["fitted"] = {{"c", report.fitted->c.str()},
                         {"alpha", report.fitted->alpha.str()},
                         {"warnings", report.fitted->warnings}};
    } else {
        out["fitted"] = nullptr;
    }
    return out;
}

inline void emit_report(const RatioReport &report, Format format, std::ostream &out) {
    switch (format) {
    case Format::Csv:
        out << "params,A,OPT_A,OPT,ratio,opt_source\n";
        for (const auto &r : report.rows) {
            out << r.params << ',' << r.a.str() << ',' << detail::cell(r.opt_a, "UNRESOLVED") << ','
                << detail::cell(r.opt, "") << ',' << detail::cell(r.ratio, "UNRESOLVED") << ',' << r.opt_source
                << '\n';
        }
        break;
    case Format::Json:
        out << report_to_json(report).dump(2) << '\n';
        break;
    case Format::Markdown:
        out << "### " << report.construction << " vs " << report.algorithm << " (" << to_string(report.direction)
            << ")\n\n";
        out << "| params | A | OPT_A | OPT | ratio | opt_source |\n";
        out << "|---|---|---|---|---|---|\n";
        for (const auto &r : report.rows) {
            out << "| " << r.params << " | " << r.a.str() << " | " << detail::cell(r.opt_a, "UNRESOLVED") << " | "
                << detail::cell(r.opt, "-") << " | " << detail::cell(r.ratio, "UNRESOLVED") << " | " << r.opt_source
                << " |\n";
        }
        if (report.fitted) {
            out << "\nfitted: c = " << report.fitted->c.str() << ", alpha = " << report.fitted->alpha.str() << '\n';
            for (const auto &w : report.fitted->warnings) {
                out << "\nwarning: " << w << '\n';
            }
        }
        break;
    }
}

inline std::string render_report(const RatioReport &report, Format format) {
    std::ostringstream out;
    emit_report(report, format, out);
    return out.str();
}

}  // namespace obr::harness
