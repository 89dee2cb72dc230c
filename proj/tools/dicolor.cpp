// dicolor: acyclic colouring of digraphs without directed triangles, exact
// oracles and structural detectors.
//
// Exit codes: 0 success, 2 input has a directed triangle, 3 verification or
// internal invariant failure, 4 oracle undecided at budget, 5 usage or parse
// error.

#include "dicolor/c3_coloring.hpp"
#include "dicolor/instances.hpp"
#include "dicolor/io.hpp"
#include "dicolor/oracles.hpp"
#include "dicolor/report.hpp"
#include "dicolor/structure.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>

using namespace dicolor;

namespace {

enum Exit : int {
    ok = 0,
    not_c3_free = 2,
    verification_failed = 3,
    undecided = 4,
    usage = 5,
};

std::uint64_t budget_from_env()
{
    if (const char* env = std::getenv("DICOLOR_ORACLE_BUDGET")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            std::cerr << "ignoring malformed DICOLOR_ORACLE_BUDGET='" << env << "'\n";
        }
    }
    return default_node_budget;
}

std::string one_based(const std::vector<Vertex>& vs)
{
    std::string s;
    for (Vertex v : vs)
        s += (s.empty() ? "" : " ") + std::to_string(v + 1);
    return s;
}

std::string one_based(const VertexSet& vs)
{
    return one_based(vs.to_vector());
}

void print_mountain(std::ostream& os, const MountainCertificate& cert, int indent)
{
    const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
    os << pad << cert.level << "-mountain on " << one_based(cert.vertices) << " (clique " << one_based(cert.clique)
       << ")\n";
    for (std::size_t i = 0; i < cert.sub.size(); ++i) {
        os << pad << "  arc " << cert.thick_arcs[i].first + 1 << "->" << cert.thick_arcs[i].second + 1
           << " certified by:\n";
        print_mountain(os, cert.sub[i], indent + 2);
    }
}

struct ColorArgs {
    std::string input, output;
    bool verify = false, oracle = false, json = false, timings = false;
};

int run_color(const ColorArgs& a, std::uint64_t budget)
{
    const Digraph d = parse_digraph_file(a.input);
    RunOptions options;
    options.verify = a.verify;
    options.oracle = a.oracle;
    options.timings = a.timings;
    options.budget = budget;
    const RunReport r = run_instance(d, a.input, options);

    if (a.json)
        std::cout << to_json(r, a.timings).dump(2) << '\n';
    else
        std::cout << to_text(r, a.timings);

    if (!r.c3free) {
        const Triangle& t = *r.triangle;
        std::cerr << "error: input contains a directed triangle: " << t[0] + 1 << ' ' << t[1] + 1 << ' ' << t[2] + 1
                  << '\n';
        return not_c3_free;
    }
    if (r.colors_used) {
        if (!a.output.empty())
            write_coloring_file(r.coloring, a.output);
        else if (!a.json)
            std::cout << format_coloring(r.coloring);
    }
    if (r.invariant_violations > 0 || (r.valid && !*r.valid))
        return verification_failed;
    if (r.oracle_undecided)
        return undecided;
    return ok;
}

int run_exact(const std::string& what, const std::string& input, std::uint64_t budget, bool json)
{
    const Digraph d = parse_digraph_file(input);
    OracleResult r = what == "chi" ? dichromatic_number(d, budget)
                   : what == "alpha" ? independence_number(d, budget)
                                     : max_acyclic_set(d, budget);
    nlohmann::ordered_json j;
    j["quantity"] = what;
    j["n"] = d.size();
    j["explored"] = r.explored;
    if (!r.decided()) {
        j["value"] = "undecided";
        if (json)
            std::cout << j.dump(2) << '\n';
        else
            std::cout << what << ": undecided after " << r.explored << " search nodes\n";
        return undecided;
    }
    j["value"] = r.value;
    if (const auto* c = std::get_if<Coloring>(&r.witness)) {
        j["witness"] = c->colors;
        if (!json)
            std::cout << what << ": " << r.value << '\n' << format_coloring(*c);
    } else if (const auto* s = std::get_if<VertexSet>(&r.witness)) {
        nlohmann::ordered_json members = nlohmann::ordered_json::array();
        for (Vertex v : *s)
            members.push_back(v + 1);
        j["witness"] = members;
        if (!json)
            std::cout << what << ": " << r.value << "\nwitness: " << one_based(*s) << '\n';
    }
    if (json)
        std::cout << j.dump(2) << '\n';
    return ok;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Acyclic colouring of digraphs without directed triangles"};
    app.require_subcommand(1);
    std::uint64_t budget = budget_from_env();

    ColorArgs color_args;
    auto* color = app.add_subcommand("color", "colour a C3-free digraph");
    color->add_option("-i,--input", color_args.input, "digraph file (dgf)")->required()->check(CLI::ExistingFile);
    color->add_option("-o,--output", color_args.output, "write the colouring here");
    color->add_flag("--verify", color_args.verify, "check every colour class is acyclic");
    color->add_flag("--oracle", color_args.oracle, "compute exact alpha and chi (small inputs)");
    color->add_flag("--json", color_args.json, "emit a JSON report");
    color->add_flag("--timings", color_args.timings, "include wall-clock times");
    color->add_option("--budget", budget, "oracle node budget");

    std::string exact_what, exact_input;
    bool exact_json = false;
    auto* exact = app.add_subcommand("exact", "exact chi, alpha or beta with witness");
    exact->add_option("quantity", exact_what, "chi | alpha | beta")
        ->required()
        ->check(CLI::IsMember({"chi", "alpha", "beta"}));
    exact->add_option("-i,--input", exact_input, "digraph file (dgf)")->required()->check(CLI::ExistingFile);
    exact->add_option("--budget", budget, "oracle node budget");
    exact->add_flag("--json", exact_json, "emit JSON");

    std::string family, gen_output;
    InstanceSpec spec;
    auto* gen = app.add_subcommand("gen", "generate a seeded instance");
    gen->add_option("--family", family, "transitive | random-digraph | random-tournament | c3free-layered")
        ->required()
        ->check(CLI::IsMember({"transitive", "random-digraph", "random-tournament", "c3free-layered"}));
    gen->add_option("--n", spec.n, "vertex count")->required();
    gen->add_option("--alpha", spec.alpha, "number of transitive parts (c3free-layered)");
    gen->add_option("--p", spec.p, "arc probability");
    gen->add_option("--seed", spec.seed, "64-bit seed")->required();
    gen->add_option("-o,--output", gen_output, "output file")->required();

    std::string detect_input;
    int level = 1, size = 1;
    std::size_t tail = 0, head = 0;
    auto* detect = app.add_subcommand("detect", "structural witnesses");
    detect->require_subcommand(1);
    auto* triangle = detect->add_subcommand("triangle", "least directed triangle");
    auto* mountain = detect->add_subcommand("mountain", "an r-mountain");
    auto* clique = detect->add_subcommand("clique", "an (r,s)-clique");
    auto* thick = detect->add_subcommand("thick", "whether arc u->v is r-thick");
    for (auto* sub : {triangle, mountain, clique, thick})
        sub->add_option("-i,--input", detect_input, "digraph file (dgf)")->required()->check(CLI::ExistingFile);
    for (auto* sub : {mountain, clique, thick})
        sub->add_option("-r", level, "level r")->required();
    clique->add_option("-s", size, "size s")->required();
    thick->add_option("-u", tail, "arc tail (1-based)")->required();
    thick->add_option("-v", head, "arc head (1-based)")->required();

    std::string suite_file;
    bool bench_json = false, bench_timings = false, bench_oracle = false;
    auto* bench = app.add_subcommand("bench", "run a suite of instance specs");
    bench->add_option("--suite", suite_file, "JSON suite file")->required()->check(CLI::ExistingFile);
    bench->add_flag("--json", bench_json, "emit the JSON report array");
    bench->add_flag("--timings", bench_timings, "include wall-clock times");
    bench->add_flag("--oracle", bench_oracle, "exact alpha and chi per instance");
    bench->add_option("--budget", budget, "oracle node budget");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? ok : usage;
    }

    try {
        if (*color)
            return run_color(color_args, budget);

        if (*exact)
            return run_exact(exact_what, exact_input, budget, exact_json);

        if (*gen) {
            spec.family = parse_family(family);
            const Digraph d = generate(spec);
            write_digraph_file(d, gen_output, "gen " + spec.id());
            return ok;
        }

        if (*detect) {
            const Digraph d = parse_digraph_file(detect_input);
            if (*triangle) {
                if (auto t = find_directed_triangle(d))
                    std::cout << "triangle: " << (*t)[0] + 1 << ' ' << (*t)[1] + 1 << ' ' << (*t)[2] + 1 << '\n';
                else
                    std::cout << "triangle: none\n";
            } else if (*mountain) {
                if (auto m = find_mountain(d, level))
                    print_mountain(std::cout, *m, 0);
                else
                    std::cout << "mountain: none\n";
            } else if (*clique) {
                if (auto c = find_rs_clique(d, level, size)) {
                    std::cout << "clique: " << one_based(c->members) << '\n';
                    for (std::size_t i = 0; i < c->arcs.size(); ++i) {
                        std::cout << "  arc " << c->arcs[i].first + 1 << "->" << c->arcs[i].second + 1
                                  << " certified by:\n";
                        print_mountain(std::cout, c->certificates[i], 2);
                    }
                } else {
                    std::cout << "clique: none\n";
                }
            } else if (*thick) {
                if (tail < 1 || head < 1)
                    throw std::invalid_argument("vertices are 1-based");
                if (auto m = is_r_thick(d, tail - 1, head - 1, level)) {
                    std::cout << "thick: yes\n";
                    print_mountain(std::cout, *m, 1);
                } else {
                    std::cout << "thick: no\n";
                }
            }
            return ok;
        }

        if (*bench) {
            std::ifstream in(suite_file);
            const auto specs = parse_suite(nlohmann::json::parse(in));
            RunOptions options;
            options.timings = bench_timings;
            options.oracle = bench_oracle;
            options.budget = budget;
            const SuiteResult result = run_suite(specs, options);
            if (bench_json) {
                std::cout << result.json.dump(2) << '\n';
            } else {
                for (const auto& r : result.reports)
                    std::cout << to_text(r, bench_timings) << '\n';
                std::cout << "aggregate: " << result.json["aggregate"].dump() << '\n';
            }
            return result.ok ? ok : verification_failed;
        }
    } catch (const InvariantViolation& e) {
        std::cerr << "internal invariant violated: " << e.what() << '\n';
        return verification_failed;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return usage;
    }
    return usage;
}
