// Runs every acceptance criterion and prints one line per criterion.

#include "obr/obr.hpp"

#include <iostream>

int main() {
    int failed = 0;
    for (const auto &check : obr::verify::acceptance_checks()) {
        const auto result = obr::verify::run_check(check);
        std::cout << obr::verify::format_result(result) << std::endl;
        failed += result.passed ? 0 : 1;
    }
    std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << std::endl;
    return failed == 0 ? 0 : 1;
}
