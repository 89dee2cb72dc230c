#pragma once

#include "dicolor/c3_coloring.hpp"
#include "dicolor/instances.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace dicolor {

enum class AlphaSource { exact, by_construction, undecided, unknown };

struct AlphaInfo {
    AlphaSource source = AlphaSource::unknown;
    int value = 0; // meaningful for exact and by_construction
};

struct RunOptions {
    bool verify = true;
    bool oracle = false; // exact alpha and chi, subject to the budget
    bool timings = false;
    std::uint64_t budget = default_node_budget;
    std::optional<int> alpha_bound; // known by construction
};

struct PhaseTimes {
    double color_ms = 0;
    double verify_ms = 0;
    double oracle_ms = 0;
};

// One colouring run. Field names of the JSON form are stable.
struct RunReport {
    std::string instance;
    std::size_t n = 0;
    std::size_t arcs = 0;
    bool c3free = true;
    std::optional<Triangle> triangle;
    AlphaInfo alpha;
    std::optional<int> colors_used;
    std::optional<std::uint64_t> budget; // g(alpha) when alpha is known
    std::optional<int> oracle_chi;
    bool oracle_undecided = false;
    std::optional<bool> valid; // unset when verification was skipped
    std::size_t invariant_violations = 0;
    std::optional<std::string> internal_error;
    ColoringStats stats;
    PhaseTimes times;
    Coloring coloring;

    bool within_budget() const { return !budget || !colors_used || static_cast<std::uint64_t>(*colors_used) <= *budget; }
};

RunReport run_instance(const Digraph& d, std::string instance, const RunOptions& options);

nlohmann::ordered_json to_json(const RunReport& report, bool timings);
std::string to_text(const RunReport& report, bool timings);

// Suite files hold a JSON array of specs (or {"instances": [...]}), each
// {"family": ..., "n": ..., "alpha": ..., "p": ..., "seed": ...}.
std::vector<InstanceSpec> parse_suite(const nlohmann::json& suite);
nlohmann::ordered_json spec_to_json(const InstanceSpec& spec);

struct SuiteResult {
    std::vector<RunReport> reports;
    nlohmann::ordered_json json;
    bool ok = true; // every C3-free instance valid, within budget, no violations
};

SuiteResult run_suite(const std::vector<InstanceSpec>& specs, const RunOptions& options);

} // namespace dicolor
