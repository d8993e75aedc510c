#pragma once

#include <optional>
#include <string>
#include <vector>

namespace heatengine {

struct ValidationGroup {
    std::string name;
    bool passed = false;
    bool advisory = false;  // reported but never fails the run
    double max_deviation = 0.0;
    std::string detail;
};

struct ValidationOptions {
    /// Overrides every group's default threshold when set.
    std::optional<double> tol;
    /// When nonempty, only groups whose name starts with one of these
    /// run ("tables", "closed_forms", "invariants").
    std::vector<std::string> groups;
    unsigned seed = 20240917u;
};

/// Reference-spectrum fixtures, closed-form equivalence over the
/// standard grid, and the structural invariant suite.
std::vector<ValidationGroup> run_validation(const ValidationOptions& options = {});

bool all_blocking_passed(const std::vector<ValidationGroup>& groups);

}  // namespace heatengine
