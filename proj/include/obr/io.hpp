#pragma once

// JSON encodings of instances, request sequences, decisions, traces and
// oracle results. Rationals are always written as "p/q" strings.

#include "obr/oracle.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace obr::io {

using Json = nlohmann::ordered_json;

inline Json to_json(const Rational &r) { return r.str(); }

inline Rational rational_from_json(const Json &j) {
    if (j.is_string()) {
        return parse_rational(j.get<std::string>());
    }
    if (j.is_number_integer()) {
        return Rational(j.get<long long>());
    }
    throw Error("expected a rational as a \"p/q\" string, got " + j.dump());
}

namespace detail {

inline const Json &field(const Json &j, const char *key) {
    if (!j.is_object() || !j.contains(key)) {
        throw Error(std::string("missing field '") + key + "' in " + j.dump());
    }
    return j.at(key);
}

inline int int_field(const Json &j, const char *key) {
    const Json &v = field(j, key);
    if (!v.is_number_integer()) {
        throw Error(std::string("field '") + key + "' must be an integer");
    }
    return v.get<int>();
}

inline Json rationals(const std::vector<Rational> &values) {
    Json out = Json::array();
    for (const auto &v : values) {
        out.push_back(to_json(v));
    }
    return out;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Requests

inline Json to_json(const Request &r) {
    return std::visit(
        [](const auto &x) -> Json {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, Job>) {
                return {{"job", to_json(x.size)}};
            } else if constexpr (std::is_same_v<T, Item>) {
                return {{"item", to_json(x.size)}};
            } else if constexpr (std::is_same_v<T, Interval>) {
                return {{"interval", {x.start, x.end}}};
            } else {
                return {{"edge", {x.u, x.v, to_json(x.weight)}}};
            }
        },
        r);
}

inline Request request_from_json(const Json &j) {
    if (!j.is_object() || j.size() != 1) {
        throw Error("a request is an object with exactly one key, got " + j.dump());
    }
    const auto &[key, v] = *j.items().begin();
    if (key == "job") {
        return Job{rational_from_json(v)};
    }
    if (key == "item") {
        return Item{rational_from_json(v)};
    }
    if (key == "interval") {
        if (!v.is_array() || v.size() != 2 || !v[0].is_number_integer() || !v[1].is_number_integer()) {
            throw Error("interval must be [start, end] with integer stations");
        }
        return Interval{v[0].get<int>(), v[1].get<int>()};
    }
    if (key == "edge") {
        if (!v.is_array() || v.size() != 3 || !v[0].is_number_integer() || !v[1].is_number_integer()) {
            throw Error("edge must be [u, v, \"weight\"]");
        }
        return Edge{v[0].get<int>(), v[1].get<int>(), rational_from_json(v[2])};
    }
    throw Error("unknown request kind '" + key + "'");
}

inline Json sequence_to_json(const std::vector<Request> &seq) {
    Json out = Json::array();
    for (const auto &r : seq) {
        out.push_back(to_json(r));
    }
    return out;
}

inline std::vector<Request> sequence_from_json(const Json &j) {
    if (!j.is_array()) {
        throw Error("a sequence is a JSON array of requests");
    }
    std::vector<Request> out;
    for (const auto &r : j) {
        out.push_back(request_from_json(r));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Instances

inline Json to_json(const ProblemInstance &inst) {
    Json out{{"problem", problem_name(inst)}};
    if (const auto *speeds = machine_speeds(inst)) {
        out["m"] = speeds->size();
        out["speeds"] = detail::rationals(*speeds);
    } else if (const auto *d = std::get_if<DualBinPacking>(&inst)) {
        out["n"] = d->bins;
    } else if (const auto *s = std::get_if<SeatReservation>(&inst)) {
        out["k"] = s->stations;
        out["seats"] = s->seats;
    }
    return out;
}

/// Machine problems take "m" and optional "speeds" (identical when absent).
inline ProblemInstance instance_from_json(const Json &j) {
    const Json &name = detail::field(j, "problem");
    if (!name.is_string()) {
        throw Error("field 'problem' must be a string");
    }
    const auto problem = name.get<std::string>();
    ProblemInstance inst;
    if (problem == "makespan" || problem == "santa") {
        std::vector<Rational> speeds;
        if (j.contains("speeds")) {
            for (const auto &s : j.at("speeds")) {
                speeds.push_back(rational_from_json(s));
            }
            if (j.contains("m") && detail::int_field(j, "m") != static_cast<int>(speeds.size())) {
                throw Error("'m' disagrees with the number of speeds");
            }
        } else {
            const int m = detail::int_field(j, "m");
            if (m < 1) {
                throw Error("m must be at least 1");
            }
            speeds.assign(static_cast<std::size_t>(m), Rational(1));
        }
        inst = problem == "makespan" ? ProblemInstance{Makespan{speeds}} : ProblemInstance{Santa{speeds}};
    } else if (problem == "bin-packing") {
        inst = BinPacking{};
    } else if (problem == "bin-covering") {
        inst = BinCovering{};
    } else if (problem == "dual-bin-packing") {
        inst = DualBinPacking{detail::int_field(j, "n")};
    } else if (problem == "seat-reservation") {
        inst = SeatReservation{detail::int_field(j, "k"), detail::int_field(j, "seats")};
    } else if (problem == "matching") {
        inst = Matching{};
    } else {
        throw Error("unknown problem '" + problem + "'");
    }
    validate(inst);
    return inst;
}

// ---------------------------------------------------------------------------
// Decisions and traces

inline Json to_json(const Decision &d) {
    return std::visit(
        [](const auto &x) -> Json {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, AssignMachine>) {
                return {{"op", "assign_machine"}, {"index", x.index}};
            } else if constexpr (std::is_same_v<T, AssignBin>) {
                return {{"op", "assign_bin"}, {"index", x.index}};
            } else if constexpr (std::is_same_v<T, AssignSeat>) {
                return {{"op", "assign_seat"}, {"index", x.index}};
            } else if constexpr (std::is_same_v<T, OpenNewBin>) {
                return {{"op", "open_new_bin"}};
            } else if constexpr (std::is_same_v<T, Reject>) {
                return {{"op", "reject"}};
            } else if constexpr (std::is_same_v<T, AcceptEdge>) {
                return {{"op", "accept_edge"}};
            } else {
                return {{"op", "reject_edge"}};
            }
        },
        d);
}

inline Decision decision_from_json(const Json &j) {
    const Json &op = detail::field(j, "op");
    const auto name = op.is_string() ? op.get<std::string>() : std::string();
    if (name == "assign_machine") return AssignMachine{detail::int_field(j, "index")};
    if (name == "assign_bin") return AssignBin{detail::int_field(j, "index")};
    if (name == "assign_seat") return AssignSeat{detail::int_field(j, "index")};
    if (name == "open_new_bin") return OpenNewBin{};
    if (name == "reject") return Reject{};
    if (name == "accept_edge") return AcceptEdge{};
    if (name == "reject_edge") return RejectEdge{};
    throw Error("unknown decision " + j.dump());
}

inline Json steps_to_json(const DecisionTrace &trace) {
    Json steps = Json::array();
    for (const auto &s : trace.steps) {
        steps.push_back({{"decision", to_json(s.decision)}, {"value", to_json(s.value)}});
    }
    return steps;
}

inline Json to_json(const DecisionTrace &trace) {
    return {{"steps", steps_to_json(trace)}, {"final_value", to_json(trace.final_value)}};
}

/// Decisions of a trace or of a bare witness array; values are ignored and
/// recomputed on replay.
inline std::vector<Decision> decisions_from_json(const Json &j) {
    const Json &steps = j.is_object() ? (j.contains("steps") ? j.at("steps") : detail::field(j, "witness")) : j;
    if (!steps.is_array()) {
        throw Error("expected an array of decisions");
    }
    std::vector<Decision> out;
    for (const auto &s : steps) {
        out.push_back(decision_from_json(s.contains("decision") ? s.at("decision") : s));
    }
    return out;
}

inline Json to_json(const oracle::OracleResult &r) {
    return {{"value", to_json(r.value)},
            {"witness", steps_to_json(r.witness)},
            {"nodes", r.nodes_explored},
            {"status", oracle::to_string(r.status)}};
}

// ---------------------------------------------------------------------------
// Files

inline std::string read_text(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error("cannot open '" + path + "' for reading");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

inline void write_text(const std::string &path, const std::string &text) {
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << text) || !out.flush()) {
        throw Error("cannot write '" + path + "'");
    }
}

inline Json parse(const std::string &text, const std::string &origin) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error &e) {
        throw Error(origin + ": " + e.what());
    }
}

inline ProblemInstance load_instance(const std::string &path) { return instance_from_json(parse(read_text(path), path)); }

inline std::vector<Request> load_sequence(const std::string &path) {
    return sequence_from_json(parse(read_text(path), path));
}

inline std::string dump(const Json &j) { return j.dump(2) + "\n"; }

}  // namespace obr::io
