#pragma once

// Problem families, requests, decisions and traces shared by every module.

#include "obr/rational.hpp"

#include <string>
#include <variant>
#include <vector>

namespace obr {

enum class Direction { Min, Max };

inline const char *to_string(Direction d) { return d == Direction::Min ? "MIN" : "MAX"; }

/// `better(a, b)`: a is strictly better than b in direction d.
inline bool better(Direction d, const Rational &a, const Rational &b) {
    return d == Direction::Min ? a < b : a > b;
}

/// `dominates(a, b)`: a is at least as good as b in direction d.
inline bool dominates(Direction d, const Rational &a, const Rational &b) {
    return d == Direction::Min ? a <= b : a >= b;
}

// ---------------------------------------------------------------------------
// Instances

/// Machine 0 is the fastest; speeds are non-increasing.
struct Makespan {
    std::vector<Rational> speeds;
    friend bool operator==(const Makespan &, const Makespan &) = default;
};
struct Santa {
    std::vector<Rational> speeds;
    friend bool operator==(const Santa &, const Santa &) = default;
};
struct BinPacking {
    friend bool operator==(const BinPacking &, const BinPacking &) = default;
};
struct BinCovering {
    friend bool operator==(const BinCovering &, const BinCovering &) = default;
};
struct DualBinPacking {
    int bins = 1;
    friend bool operator==(const DualBinPacking &, const DualBinPacking &) = default;
};
struct SeatReservation {
    int stations = 2;
    int seats = 1;
    friend bool operator==(const SeatReservation &, const SeatReservation &) = default;
};
struct Matching {
    friend bool operator==(const Matching &, const Matching &) = default;
};

using ProblemInstance =
    std::variant<Makespan, Santa, BinPacking, BinCovering, DualBinPacking, SeatReservation, Matching>;

inline Direction direction(const ProblemInstance &inst) {
    return std::holds_alternative<Makespan>(inst) || std::holds_alternative<BinPacking>(inst) ? Direction::Min
                                                                                             : Direction::Max;
}

inline std::string problem_name(const ProblemInstance &inst) {
    static const char *const names[] = {"makespan",         "santa",           "bin-packing", "bin-covering",
                                        "dual-bin-packing", "seat-reservation", "matching"};
    return names[inst.index()];
}

inline const std::vector<Rational> *machine_speeds(const ProblemInstance &inst) {
    if (const auto *p = std::get_if<Makespan>(&inst)) {
        return &p->speeds;
    }
    if (const auto *p = std::get_if<Santa>(&inst)) {
        return &p->speeds;
    }
    return nullptr;
}

inline bool identical_machines(const std::vector<Rational> &speeds) {
    for (const auto &s : speeds) {
        if (s != speeds.front()) {
            return false;
        }
    }
    return true;
}

/// Throws if the static parameters are out of range.
inline void validate(const ProblemInstance &inst) {
    if (const auto *speeds = machine_speeds(inst)) {
        if (speeds->empty()) {
            throw Error("machine count must be at least 1");
        }
        for (std::size_t i = 0; i < speeds->size(); ++i) {
            if ((*speeds)[i].sign() <= 0) {
                throw Error("machine speeds must be positive");
            }
            if (i > 0 && (*speeds)[i] > (*speeds)[i - 1]) {
                throw Error("machine speeds must be listed non-increasing");
            }
        }
    } else if (const auto *d = std::get_if<DualBinPacking>(&inst)) {
        if (d->bins < 1) {
            throw Error("dual bin packing needs at least one bin");
        }
    } else if (const auto *s = std::get_if<SeatReservation>(&inst)) {
        if (s->stations < 2) {
            throw Error("seat reservation needs at least two stations");
        }
        if (s->seats < 1) {
            throw Error("seat reservation needs at least one seat");
        }
    }
}

inline Makespan identical_makespan(int m) { return Makespan{std::vector<Rational>(static_cast<std::size_t>(m), Rational(1))}; }
inline Santa identical_santa(int m) { return Santa{std::vector<Rational>(static_cast<std::size_t>(m), Rational(1))}; }
/// Two related machines with speeds (s, 1).
inline Makespan related_makespan(const Rational &s) { return Makespan{{s, Rational(1)}}; }
inline Santa related_santa(const Rational &s) { return Santa{{s, Rational(1)}}; }

// ---------------------------------------------------------------------------
// Requests

struct Job {
    Rational size;
    friend bool operator==(const Job &, const Job &) = default;
};
struct Item {
    Rational size;
    friend bool operator==(const Item &, const Item &) = default;
};
/// Half-open station interval [start, end).
struct Interval {
    int start = 1;
    int end = 2;
    friend bool operator==(const Interval &, const Interval &) = default;
    [[nodiscard]] bool overlaps(const Interval &o) const { return start < o.end && o.start < end; }
    [[nodiscard]] int length() const { return end - start; }
};
struct Edge {
    int u = 0;
    int v = 1;
    Rational weight;
    friend bool operator==(const Edge &, const Edge &) = default;
};

using Request = std::variant<Job, Item, Interval, Edge>;

/// Throws if `r` is not a valid request for `inst`.
inline void check_request(const ProblemInstance &inst, const Request &r) {
    const bool sched = std::holds_alternative<Makespan>(inst) || std::holds_alternative<Santa>(inst);
    const bool pack = std::holds_alternative<BinPacking>(inst) || std::holds_alternative<BinCovering>(inst) ||
                      std::holds_alternative<DualBinPacking>(inst);
    if (sched) {
        const auto *j = std::get_if<Job>(&r);
        if (j == nullptr) {
            throw Error("request/instance mismatch: " + problem_name(inst) + " expects jobs");
        }
        if (j->size.sign() <= 0) {
            throw Error("job sizes must be positive");
        }
    } else if (pack) {
        const auto *it = std::get_if<Item>(&r);
        if (it == nullptr) {
            throw Error("request/instance mismatch: " + problem_name(inst) + " expects items");
        }
        if (it->size.sign() <= 0 || it->size > Rational(1)) {
            throw Error("item sizes must lie in (0, 1]");
        }
    } else if (const auto *sr = std::get_if<SeatReservation>(&inst)) {
        const auto *iv = std::get_if<Interval>(&r);
        if (iv == nullptr) {
            throw Error("request/instance mismatch: seat-reservation expects intervals");
        }
        if (iv->start < 1 || iv->start >= iv->end || iv->end > sr->stations) {
            throw Error("interval [" + std::to_string(iv->start) + "," + std::to_string(iv->end) +
                        ") outside stations 1.." + std::to_string(sr->stations));
        }
    } else {
        const auto *e = std::get_if<Edge>(&r);
        if (e == nullptr) {
            throw Error("request/instance mismatch: matching expects edges");
        }
        if (e->u == e->v || e->u < 0 || e->v < 0) {
            throw Error("edges need two distinct non-negative vertex ids");
        }
    }
}

inline void check_sequence(const ProblemInstance &inst, const std::vector<Request> &seq) {
    for (const auto &r : seq) {
        check_request(inst, r);
    }
}

// ---------------------------------------------------------------------------
// Decisions and traces. Indices are 0-based.

struct AssignMachine {
    int index = 0;
    friend bool operator==(const AssignMachine &, const AssignMachine &) = default;
};
struct AssignBin {
    int index = 0;
    friend bool operator==(const AssignBin &, const AssignBin &) = default;
};
struct OpenNewBin {
    friend bool operator==(const OpenNewBin &, const OpenNewBin &) = default;
};
struct Reject {
    friend bool operator==(const Reject &, const Reject &) = default;
};
struct AssignSeat {
    int index = 0;
    friend bool operator==(const AssignSeat &, const AssignSeat &) = default;
};
struct AcceptEdge {
    friend bool operator==(const AcceptEdge &, const AcceptEdge &) = default;
};
struct RejectEdge {
    friend bool operator==(const RejectEdge &, const RejectEdge &) = default;
};

using Decision = std::variant<AssignMachine, AssignBin, OpenNewBin, Reject, AssignSeat, AcceptEdge, RejectEdge>;

inline std::string describe(const Decision &d) {
    struct V {
        std::string operator()(const AssignMachine &a) const { return "machine " + std::to_string(a.index); }
        std::string operator()(const AssignBin &a) const { return "bin " + std::to_string(a.index); }
        std::string operator()(const OpenNewBin &) const { return "new bin"; }
        std::string operator()(const Reject &) const { return "reject"; }
        std::string operator()(const AssignSeat &a) const { return "seat " + std::to_string(a.index); }
        std::string operator()(const AcceptEdge &) const { return "accept"; }
        std::string operator()(const RejectEdge &) const { return "decline"; }
    };
    return std::visit(V{}, d);
}

struct TraceStep {
    Decision decision;
    Rational value;  // objective after this step
    friend bool operator==(const TraceStep &, const TraceStep &) = default;
};

struct DecisionTrace {
    std::vector<TraceStep> steps;
    Rational final_value;

    [[nodiscard]] std::vector<Decision> decisions() const {
        std::vector<Decision> out;
        out.reserve(steps.size());
        for (const auto &s : steps) {
            out.push_back(s.decision);
        }
        return out;
    }
    friend bool operator==(const DecisionTrace &, const DecisionTrace &) = default;
};

struct PrefixProfile {
    Direction direction = Direction::Min;
    std::vector<Rational> values;  // values[t] constrains the prefix of length t + 1
    friend bool operator==(const PrefixProfile &, const PrefixProfile &) = default;
};

inline PrefixProfile prefix_profile(const DecisionTrace &trace, Direction dir) {
    PrefixProfile p{dir, {}};
    p.values.reserve(trace.steps.size());
    for (const auto &s : trace.steps) {
        p.values.push_back(s.value);
    }
    return p;
}

}  // namespace obr
