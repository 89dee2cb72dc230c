#include "dicolor/report.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <sstream>

namespace dicolor {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point since)
{
    return std::chrono::duration<double, std::milli>(Clock::now() - since).count();
}

std::string_view alpha_source_name(AlphaSource s)
{
    switch (s) {
    case AlphaSource::exact:
        return "exact";
    case AlphaSource::by_construction:
        return "by-construction";
    case AlphaSource::undecided:
        return "undecided";
    case AlphaSource::unknown:
        return "unknown";
    }
    return "unknown";
}

} // namespace

RunReport run_instance(const Digraph& d, std::string instance, const RunOptions& options)
{
    RunReport r;
    r.instance = std::move(instance);
    r.n = d.size();
    r.arcs = d.arc_count();
    r.triangle = find_directed_triangle(d);
    r.c3free = !r.triangle.has_value();

    if (options.alpha_bound)
        r.alpha = {AlphaSource::by_construction, *options.alpha_bound};
    if (options.oracle && d.size() <= max_oracle_order) {
        const auto start = Clock::now();
        OracleResult a = independence_number(d, options.budget);
        if (a.decided())
            r.alpha = {AlphaSource::exact, a.value};
        else if (r.alpha.source != AlphaSource::by_construction)
            r.alpha = {AlphaSource::undecided, 0};
        OracleResult chi = dichromatic_number(d, options.budget);
        if (chi.decided())
            r.oracle_chi = chi.value;
        else
            r.oracle_undecided = true;
        r.times.oracle_ms = elapsed_ms(start);
    }
    if ((r.alpha.source == AlphaSource::exact || r.alpha.source == AlphaSource::by_construction) && r.alpha.value >= 1 &&
        r.alpha.value <= 9)
        r.budget = color_budget(r.alpha.value);

    if (!r.c3free)
        return r;

    try {
        const auto start = Clock::now();
        C3Coloring result = color_c3_free(d);
        r.times.color_ms = elapsed_ms(start);
        r.coloring = std::move(result.coloring);
        r.stats = result.stats;
        r.colors_used = r.coloring.num_colors;
        r.invariant_violations = r.stats.invariant_violations + r.stats.splice_progress_failures +
                                 r.stats.quasi_domination_failures;
    } catch (const InvariantViolation& e) {
        r.internal_error = e.what();
        r.invariant_violations += 1;
        r.valid = false;
        return r;
    }

    if (options.verify) {
        const auto start = Clock::now();
        r.valid = verify_coloring(d, r.coloring).valid;
        r.times.verify_ms = elapsed_ms(start);
    }
    return r;
}

nlohmann::ordered_json to_json(const RunReport& r, bool timings)
{
    using nlohmann::ordered_json;
    ordered_json j;
    j["instance"] = r.instance;
    j["n"] = r.n;
    j["arcs"] = r.arcs;
    j["c3free"] = r.c3free;
    if (r.triangle)
        j["triangle"] = {(*r.triangle)[0] + 1, (*r.triangle)[1] + 1, (*r.triangle)[2] + 1};
    ordered_json alpha;
    alpha["source"] = alpha_source_name(r.alpha.source);
    if (r.alpha.source == AlphaSource::exact || r.alpha.source == AlphaSource::by_construction)
        alpha["value"] = r.alpha.value;
    else
        alpha["value"] = nullptr;
    j["alpha"] = alpha;
    j["colors_used"] = r.colors_used ? ordered_json(*r.colors_used) : ordered_json(nullptr);
    j["budget"] = r.budget ? ordered_json(*r.budget) : ordered_json(nullptr);
    if (r.oracle_chi)
        j["oracle_chi"] = *r.oracle_chi;
    else
        j["oracle_chi"] = r.oracle_undecided ? ordered_json("undecided") : ordered_json(nullptr);
    j["valid"] = r.valid ? ordered_json(*r.valid) : ordered_json(nullptr);
    j["within_budget"] = r.within_budget();
    j["invariant_violations"] = r.invariant_violations;
    if (r.internal_error)
        j["internal_error"] = *r.internal_error;
    j["recursion"] = {{"calls", r.stats.recursive_calls},
                      {"max_depth", r.stats.max_depth},
                      {"splice_iterations", r.stats.splice_iterations},
                      {"non_bag_chain_recursions", r.stats.non_bag_chain_recursions}};
    if (timings)
        j["wall_time_ms"] = {{"color", r.times.color_ms}, {"verify", r.times.verify_ms}, {"oracle", r.times.oracle_ms}};
    return j;
}

std::string to_text(const RunReport& r, bool timings)
{
    std::ostringstream os;
    os << "instance: " << r.instance << '\n' << "vertices: " << r.n << ", arcs: " << r.arcs << '\n';
    if (!r.c3free) {
        const Triangle& t = *r.triangle;
        os << "not C3-free, directed triangle: " << t[0] + 1 << ' ' << t[1] + 1 << ' ' << t[2] + 1 << '\n';
        return os.str();
    }
    os << "alpha: ";
    switch (r.alpha.source) {
    case AlphaSource::exact:
        os << r.alpha.value << " (exact)";
        break;
    case AlphaSource::by_construction:
        os << "<= " << r.alpha.value << " (by construction)";
        break;
    default:
        os << alpha_source_name(r.alpha.source);
    }
    os << '\n';
    if (r.colors_used)
        os << "colors used: " << *r.colors_used << '\n';
    if (r.budget)
        os << "budget: " << *r.budget << (r.within_budget() ? " (respected)" : " (EXCEEDED)") << '\n';
    if (r.oracle_chi)
        os << "oracle chi: " << *r.oracle_chi << '\n';
    else if (r.oracle_undecided)
        os << "oracle chi: undecided at budget\n";
    if (r.valid)
        os << "verified: " << (*r.valid ? "valid" : "INVALID") << '\n';
    os << "invariant violations: " << r.invariant_violations << '\n';
    if (r.internal_error)
        os << "internal error: " << *r.internal_error << '\n';
    if (timings)
        os << "time (ms): color " << r.times.color_ms << ", verify " << r.times.verify_ms << ", oracle "
           << r.times.oracle_ms << '\n';
    return os.str();
}

std::vector<InstanceSpec> parse_suite(const nlohmann::json& suite)
{
    const nlohmann::json& list = suite.is_object() ? suite.at("instances") : suite;
    if (!list.is_array())
        throw std::invalid_argument("suite must be a JSON array of instance specs");
    std::vector<InstanceSpec> specs;
    for (const auto& item : list) {
        InstanceSpec s;
        s.family = parse_family(item.at("family").get<std::string>());
        s.n = item.at("n").get<std::size_t>();
        s.alpha = item.value("alpha", std::size_t{1});
        s.p = item.value("p", 0.5);
        s.seed = item.at("seed").get<std::uint64_t>();
        specs.push_back(s);
    }
    return specs;
}

nlohmann::ordered_json spec_to_json(const InstanceSpec& spec)
{
    nlohmann::ordered_json j;
    j["family"] = family_name(spec.family);
    j["n"] = spec.n;
    j["alpha"] = spec.alpha;
    j["p"] = spec.p;
    j["seed"] = spec.seed;
    return j;
}

SuiteResult run_suite(const std::vector<InstanceSpec>& specs, const RunOptions& options)
{
    using nlohmann::ordered_json;
    SuiteResult out;
    ordered_json reports = ordered_json::array();
    std::size_t violations = 0, invalid = 0, over_budget = 0, not_c3free = 0;
    double max_ratio = 0;
    std::map<std::size_t, std::pair<double, std::size_t>> time_by_n;

    for (const InstanceSpec& spec : specs) {
        RunOptions opts = options;
        if (spec.family == Family::c3free_layered)
            opts.alpha_bound = static_cast<int>(spec.alpha);
        else if (spec.n >= 1 && (spec.family == Family::transitive || spec.family == Family::random_tournament))
            opts.alpha_bound = 1;
        RunReport r = run_instance(generate(spec), spec.id(), opts);

        violations += r.invariant_violations;
        if (!r.c3free) {
            ++not_c3free;
        } else {
            if (r.valid && !*r.valid)
                ++invalid;
            if (!r.within_budget())
                ++over_budget;
            if (r.colors_used && r.budget)
                max_ratio = std::max(max_ratio, static_cast<double>(*r.colors_used) / static_cast<double>(*r.budget));
            auto& [total, count] = time_by_n[r.n];
            total += r.times.color_ms;
            ++count;
        }
        ordered_json j = to_json(r, options.timings);
        j["spec"] = spec_to_json(spec);
        reports.push_back(std::move(j));
        out.reports.push_back(std::move(r));
    }

    ordered_json aggregate;
    aggregate["instances"] = specs.size();
    aggregate["not_c3free"] = not_c3free;
    aggregate["invalid"] = invalid;
    aggregate["over_budget"] = over_budget;
    aggregate["invariant_violations"] = violations;
    aggregate["max_colors_budget_ratio"] = max_ratio;
    if (options.timings) {
        ordered_json table = ordered_json::array();
        for (const auto& [n, acc] : time_by_n)
            table.push_back({{"n", n}, {"instances", acc.second}, {"mean_color_ms", acc.first / static_cast<double>(acc.second)}});
        aggregate["time_by_n"] = table;
    }
    out.ok = violations == 0 && invalid == 0 && over_budget == 0;
    out.json["reports"] = std::move(reports);
    out.json["aggregate"] = std::move(aggregate);
    return out;
}

} // namespace dicolor
