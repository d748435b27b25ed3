#pragma once

#include "obr/obr.hpp"

#include <initializer_list>
#include <string>
#include <vector>

namespace obr::test {

inline Rational R(const char *text) { return parse_rational(text); }

inline std::vector<Request> jobs(std::initializer_list<const char *> sizes) {
    std::vector<Request> out;
    for (const char *s : sizes) {
        out.emplace_back(Job{R(s)});
    }
    return out;
}

inline std::vector<Request> items(std::initializer_list<const char *> sizes) {
    std::vector<Request> out;
    for (const char *s : sizes) {
        out.emplace_back(Item{R(s)});
    }
    return out;
}

inline std::vector<Rational> values(const DecisionTrace &trace) {
    std::vector<Rational> out;
    for (const auto &s : trace.steps) {
        out.push_back(s.value);
    }
    return out;
}

inline std::vector<Rational> rs(std::initializer_list<const char *> texts) {
    std::vector<Rational> out;
    for (const char *t : texts) {
        out.push_back(R(t));
    }
    return out;
}

}  // namespace obr::test
