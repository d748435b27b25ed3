#pragma once

// Weighted matching with edges arriving online.

#include "obr/problem.hpp"

#include <set>
#include <vector>

namespace obr::graphs {

struct MatchState {
    std::set<int> matched;
    Rational total_weight;
    std::vector<Edge> accepted_edges;

    [[nodiscard]] bool exposed(const Edge &e) const {
        return matched.count(e.u) == 0 && matched.count(e.v) == 0;
    }

    friend bool operator==(const MatchState &, const MatchState &) = default;
};

/// Accept iff both endpoints are still exposed and the weight is strictly
/// positive.
inline Decision matching_greedy_step(const MatchState &state, const Edge &edge) {
    if (state.exposed(edge) && edge.weight.sign() > 0) {
        return AcceptEdge{};
    }
    return RejectEdge{};
}

}  // namespace obr::graphs
