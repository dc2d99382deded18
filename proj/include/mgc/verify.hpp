#pragma once

#include <functional>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "mgc/complex.hpp"

namespace mgc {

/// Outcome of one property suite. `checks` counts individual assertions.
struct SuiteResult {
    std::string name;
    long long checks = 0;
    std::vector<std::string> violations;
    std::vector<std::string> notes;
    double seconds = 0;

    bool passed() const { return violations.empty(); }
};

struct SuiteOptions {
    std::optional<int> g;            // restrict to one genus where meaningful
    std::optional<int> max_edges;    // core-bounds and edge-cutting limit
    long long class_limit = 50000;   // d-squared: larger complexes are skipped and noted
    BuildOptions build;
    std::function<void(const std::string&)> progress;  // optional, for long runs
};

/// Triples (g,n,r) with 1 <= g <= 3, 0 <= n <= 6 and 0 <= m <= 6.
std::vector<std::tuple<int, int, int>> d_squared_range(std::optional<int> g = std::nullopt);

SuiteResult suite_d_squared(const SuiteOptions& opt = {});
SuiteResult suite_trivial_complex(const SuiteOptions& opt = {});
SuiteResult suite_genus_one(const SuiteOptions& opt = {});
SuiteResult suite_excess_three(const SuiteOptions& opt = {});
SuiteResult suite_excess_four(const SuiteOptions& opt = {});
SuiteResult suite_vanishing(const SuiteOptions& opt = {});
SuiteResult suite_sharp_bound(const SuiteOptions& opt = {});
SuiteResult suite_core_bounds(const SuiteOptions& opt = {});
SuiteResult suite_formula(const SuiteOptions& opt = {});
SuiteResult suite_reptheory(const SuiteOptions& opt = {});
SuiteResult suite_edge_cutting(const SuiteOptions& opt = {});

/// Suite names accepted by run_suite, in acceptance order.
const std::vector<std::string>& suite_names();
/// Throws std::invalid_argument on an unknown name.
SuiteResult run_suite(const std::string& name, const SuiteOptions& opt = {});

}  // namespace mgc
