#pragma once

// Accommodating sequences for dual bin packing: inputs the offline optimum
// packs completely.

#include "obr/online.hpp"
#include "obr/oracle.hpp"

#include <vector>

namespace obr::packing {

/// True iff the offline optimum packs every item. Throws if the oracle does
/// not finish within its budget.
inline bool is_accommodating(const DualBinPacking &inst, const std::vector<Request> &seq,
                             const oracle::SearchConfig &config = {}) {
    const auto opt = oracle::solve_unconstrained(inst, seq, config);
    if (!opt.complete()) {
        throw Error(std::string("is_accommodating: oracle ") + oracle::to_string(opt.status));
    }
    return opt.value == Rational(static_cast<long long>(seq.size()));
}

/// Builds the accommodating subsequence I' of I for a fair,
/// rejection-invariant algorithm: take the items the offline solution packs,
/// swap the i-th item it packs but the algorithm rejects for the i-th item
/// the algorithm packs but it rejects, and keep the survivors in their
/// original order.
inline std::vector<Request> accommodating_subsequence(const std::vector<Request> &seq,
                                                      const DecisionTrace &alg_trace,
                                                      const DecisionTrace &opt_trace) {
    if (alg_trace.steps.size() != seq.size() || opt_trace.steps.size() != seq.size()) {
        throw Error("traces inconsistent with the sequence length");
    }
    auto packed = [](const Decision &d) { return std::holds_alternative<AssignBin>(d); };
    std::vector<bool> keep(seq.size());
    std::vector<std::size_t> only_opt;
    std::vector<std::size_t> only_alg;
    for (std::size_t i = 0; i < seq.size(); ++i) {
        const bool a = packed(alg_trace.steps[i].decision);
        const bool o = packed(opt_trace.steps[i].decision);
        keep[i] = o;
        if (o && !a) {
            only_opt.push_back(i);
        } else if (a && !o) {
            only_alg.push_back(i);
        }
    }
    if (only_alg.size() > only_opt.size()) {
        throw Error("offline trace packs fewer items than the algorithm; it is not prefix-dominant");
    }
    for (std::size_t i = 0; i < only_alg.size(); ++i) {
        keep[only_opt[i]] = false;
        keep[only_alg[i]] = true;
    }
    std::vector<Request> out;
    for (std::size_t i = 0; i < seq.size(); ++i) {
        if (keep[i]) {
            out.push_back(seq[i]);
        }
    }
    return out;
}

}  // namespace obr::packing
