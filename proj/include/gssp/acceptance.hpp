#pragma once

#include <optional>
#include <string>
#include <vector>

namespace gssp {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
    double wall_ms = 0.0;
};

/// Runs the acceptance criteria (all of them, or just `only`), returning one
/// result per criterion. Used by both the selftest command and the
/// acceptance test binary.
std::vector<CriterionResult> run_acceptance(std::optional<int> only = std::nullopt);

std::string format_criterion_line(const CriterionResult& r);

}  // namespace gssp
