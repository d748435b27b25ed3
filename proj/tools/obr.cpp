// Command-line front end: online runs, oracle solves, construction
// reproduction and the acceptance corpus.
//
// Exit codes: 0 success, 2 some result unresolved (budget), 1 error or
// invariant violation.

#include "obr/obr.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>

namespace {

using namespace obr;

std::optional<std::uint64_t> parse_budget(const std::string &text) {
    if (text == "unlimited" || text == "0") {
        return std::nullopt;
    }
    try {
        std::size_t used = 0;
        const auto v = std::stoull(text, &used);
        if (used == text.size()) {
            return v;
        }
    } catch (const std::exception &) {
    }
    throw Error("--budget takes a positive integer or 'unlimited'");
}

void write_output(const std::string &path, const std::string &text) {
    if (path.empty() || path == "-") {
        std::cout << text;
    } else {
        io::write_text(path, text);
    }
}

struct OracleFlags {
    std::string budget;
    bool no_memo = false;
    bool no_canonical = false;

    void attach(CLI::App *app) {
        app->add_option("--budget", budget, "node budget, or 'unlimited' (default: $OBR_NODE_BUDGET or 20000000)");
        app->add_flag("--no-memo", no_memo, "disable memoization");
        app->add_flag("--no-canonical", no_canonical, "disable symmetry reduction");
    }

    [[nodiscard]] oracle::SearchConfig config() const {
        oracle::SearchConfig c;
        if (!budget.empty()) {
            c.node_budget = parse_budget(budget);
        }
        c.memoize = !no_memo;
        c.canonicalize = !no_canonical;
        return c;
    }
};

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Online bounded analysis: exact competitive ratios against the prefix-constrained optimum"};
    app.require_subcommand(1);

    // run
    auto *run = app.add_subcommand("run", "run an online algorithm and print its decision trace");
    std::string run_instance, run_sequence, run_algorithm, run_out;
    run->add_option("--instance", run_instance, "instance JSON file")->required();
    run->add_option("--sequence", run_sequence, "request sequence JSON file")->required();
    run->add_option("--algorithm", run_algorithm, "algorithm id")->required();
    run->add_option("--out", run_out, "output file (default stdout)");

    // oracle
    auto *orc = app.add_subcommand("oracle", "exact offline optimum, optionally bounded by an algorithm's profile");
    std::string orc_instance, orc_sequence, orc_bounded_by, orc_out;
    OracleFlags orc_flags;
    orc->add_option("--instance", orc_instance, "instance JSON file")->required();
    orc->add_option("--sequence", orc_sequence, "request sequence JSON file")->required();
    orc->add_option("--bounded-by", orc_bounded_by, "algorithm whose prefix profile constrains the optimum");
    orc->add_option("--out", orc_out, "output file (default stdout)");
    orc_flags.attach(orc);

    // check
    auto *chk = app.add_subcommand("check", "replay an offline trace and validate it");
    std::string chk_instance, chk_sequence, chk_witness, chk_bounded_by;
    chk->add_option("--instance", chk_instance, "instance JSON file")->required();
    chk->add_option("--sequence", chk_sequence, "request sequence JSON file")->required();
    chk->add_option("--witness", chk_witness, "decisions: a trace or an array of decisions")->required();
    chk->add_option("--bounded-by", chk_bounded_by, "also enforce this algorithm's prefix profile");

    // reproduce
    auto *rep = app.add_subcommand("reproduce", "ratio report for a construction or a fixed input");
    std::string rep_construction, rep_algorithm, rep_instance, rep_sequence, rep_sweep, rep_format = "csv", rep_out,
        rep_source = "both", rep_dump_sequence, rep_dump_instance, rep_s;
    std::optional<int> rep_m, rep_n, rep_k, rep_seats, rep_q, rep_l, rep_size;
    std::optional<std::uint64_t> rep_seed;
    bool rep_asymptotic = false;
    OracleFlags rep_flags;
    rep->add_option("--construction", rep_construction, "construction id (see `obr list`)");
    rep->add_option("--instance", rep_instance, "instance JSON file (instead of a construction)");
    rep->add_option("--sequence", rep_sequence, "request sequence JSON file (with --instance)");
    rep->add_option("--algorithm", rep_algorithm, "algorithm id (default: the construction's target)");
    rep->add_option("--m", rep_m, "machines");
    rep->add_option("--s", rep_s, "speed ratio s > 1, as p/q");
    rep->add_option("--n", rep_n, "construction size n");
    rep->add_option("--k", rep_k, "stations");
    rep->add_option("--seats", rep_seats, "seats");
    rep->add_option("--q", rep_q, "small items (covering)");
    rep->add_option("--L", rep_l, "large items (covering)");
    rep->add_option("--seed", rep_seed, "random seed (matching)");
    rep->add_option("--size", rep_size, "sequence length (matching)");
    rep->add_option("--sweep", rep_sweep, "parameter sweep, e.g. n=2..6 or s=3/2,2");
    rep->add_option("--opt-source", rep_source, "oracle, witness or both")->check(CLI::IsMember({"oracle", "witness", "both"}));
    rep->add_flag("--asymptotic", rep_asymptotic, "fit A = c OPT_A + alpha over the sweep");
    rep->add_option("--format", rep_format, "csv, json or markdown")->check(CLI::IsMember({"csv", "json", "markdown", "md"}));
    rep->add_option("--out", rep_out, "output file (default stdout)");
    rep->add_option("--dump-sequence", rep_dump_sequence, "write the emitted sequence (single point only)");
    rep->add_option("--dump-instance", rep_dump_instance, "write the instance (single point only)");
    rep_flags.attach(rep);

    // verify
    auto *ver = app.add_subcommand("verify", "run the acceptance corpus");
    std::vector<int> ver_only;
    ver->add_option("--only", ver_only, "run only these criterion numbers");

    // list
    auto *lst = app.add_subcommand("list", "list algorithm and construction ids");

    CLI11_PARSE(app, argc, argv);

    try {
        if (run->parsed()) {
            const auto inst = io::load_instance(run_instance);
            const auto seq = io::load_sequence(run_sequence);
            const auto trace = run_online(inst, parse_algorithm(run_algorithm), seq);
            write_output(run_out, io::dump(io::to_json(trace)));
            return 0;
        }
        if (orc->parsed()) {
            const auto inst = io::load_instance(orc_instance);
            const auto seq = io::load_sequence(orc_sequence);
            const auto config = orc_flags.config();
            oracle::OracleResult result;
            if (orc_bounded_by.empty()) {
                result = oracle::solve_unconstrained(inst, seq, config);
            } else {
                const auto trace = run_online(inst, parse_algorithm(orc_bounded_by), seq, config);
                result = oracle::solve_bounded(inst, seq, prefix_profile(trace, direction(inst)), config);
            }
            write_output(orc_out, io::dump(io::to_json(result)));
            switch (result.status) {
            case oracle::Status::Complete: return 0;
            case oracle::Status::BudgetExhausted: return 2;
            case oracle::Status::Infeasible: return 1;
            }
        }
        if (chk->parsed()) {
            const auto inst = io::load_instance(chk_instance);
            const auto seq = io::load_sequence(chk_sequence);
            const auto decisions = io::decisions_from_json(io::parse(io::read_text(chk_witness), chk_witness));
            std::optional<PrefixProfile> profile;
            if (!chk_bounded_by.empty()) {
                profile = prefix_profile(run_online(inst, parse_algorithm(chk_bounded_by), seq), direction(inst));
            }
            const Rational value = oracle::check_witness(inst, seq, profile ? &*profile : nullptr, decisions);
            std::cout << value.str() << '\n';
            return 0;
        }
        if (rep->parsed()) {
            harness::ExperimentSpec spec;
            spec.oracle = rep_flags.config();
            spec.opt_source = harness::parse_opt_source(rep_source);
            spec.asymptotic = rep_asymptotic;
            if (!rep_algorithm.empty()) {
                spec.algorithm = parse_algorithm(rep_algorithm);
            }
            if (!rep_instance.empty()) {
                if (!rep_construction.empty() || rep_sequence.empty()) {
                    throw Error("use either --construction, or --instance together with --sequence");
                }
                spec.instance = io::load_instance(rep_instance);
                spec.sequence = io::load_sequence(rep_sequence);
            } else {
                if (rep_construction.empty()) {
                    throw Error("--construction or --instance is required");
                }
                spec.construction = rep_construction;
                auto &p = spec.params;
                p.m = rep_m;
                p.n = rep_n;
                p.k = rep_k;
                p.seats = rep_seats;
                p.q = rep_q;
                p.L = rep_l;
                p.size = rep_size;
                p.seed = rep_seed;
                if (!rep_s.empty()) {
                    p.s = parse_rational(rep_s);
                }
                if (!rep_sweep.empty()) {
                    spec.sweep = harness::parse_sweep(rep_sweep);
                }
            }
            const auto report = harness::run_experiment(spec);
            write_output(rep_out, harness::render_report(report, harness::parse_format(rep_format)));
            if (!rep_dump_sequence.empty() || !rep_dump_instance.empty()) {
                if (report.rows.size() != 1) {
                    throw Error("--dump-sequence and --dump-instance need a single parameter point");
                }
                if (!rep_dump_sequence.empty()) {
                    io::write_text(rep_dump_sequence, io::dump(io::sequence_to_json(report.rows.front().sequence)));
                }
                if (!rep_dump_instance.empty()) {
                    const ProblemInstance inst = spec.instance ? *spec.instance
                                                               : adversary::make_construction(spec.construction, spec.params).instance;
                    io::write_text(rep_dump_instance, io::dump(io::to_json(inst)));
                }
            }
            return harness::exit_code(report);
        }
        if (ver->parsed()) {
            bool ok = true;
            for (const auto &check : verify::acceptance_checks()) {
                if (!ver_only.empty() && std::find(ver_only.begin(), ver_only.end(), check.id) == ver_only.end()) {
                    continue;
                }
                const auto result = verify::run_check(check);
                std::cout << verify::format_result(result) << std::endl;
                ok = ok && result.passed;
            }
            return ok ? 0 : 1;
        }
        if (lst->parsed()) {
            std::cout << "algorithms:\n";
            for (const auto name : algorithm_names()) {
                std::cout << "  " << name << '\n';
            }
            std::cout << "constructions:\n";
            for (const auto &c : adversary::constructions()) {
                std::cout << "  " << c.id << " (default algorithm " << algorithm_name(c.default_algorithm) << ")\n";
            }
            return 0;
        }
    } catch (const harness::InvariantViolation &e) {
        std::cerr << "invariant violation: " << e.what() << '\n';
        return 1;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 1;
}
