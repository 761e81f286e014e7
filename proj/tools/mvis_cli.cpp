// mvis: command-line front end for the mutual-visibility solvers.
//
// Exit codes: 0 success, 1 usage error, 2 data error, 3 solver timeout,
// 4 `check` found the set is not a mutual-visibility set.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "mvis/bench.hpp"
#include "mvis/generators.hpp"
#include "mvis/graph_io.hpp"
#include "mvis/solvers.hpp"
#include "mvis/visibility.hpp"

namespace fs = std::filesystem;
using namespace mvis;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitData = 2;
constexpr int kExitTimeout = 3;
constexpr int kExitNotMv = 4;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

void write_text(const fs::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << text;
}

CandidateSet parse_set(const std::string& text) {
    std::vector<Vertex> members;
    std::istringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        if (item.empty()) continue;
        std::size_t pos = 0;
        long long v = 0;
        try {
            v = std::stoll(item, &pos);
        } catch (const std::exception&) {
            throw UsageError("bad vertex id '" + item + "' in --set");
        }
        if (pos != item.size() || v < 0 || v > INT32_MAX) throw UsageError("bad vertex id '" + item + "' in --set");
        members.push_back(static_cast<Vertex>(v));
    }
    return CandidateSet(std::move(members));
}

struct GenerateArgs {
    std::string graph_class;
    std::string params;
    std::string suite;
    std::uint64_t seed = 0;
    std::string out;
    std::string dir;
    std::string manifest;
    std::string category = "n10";
};

int run_generate(const GenerateArgs& a) {
    if (!a.suite.empty()) {
        if (a.dir.empty()) throw UsageError("--suite requires --dir");
        Category category;
        try {
            category = parse_category(a.suite);
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
        auto suite = build_suite(category, a.seed);
        fs::create_directories(a.dir);
        for (const auto& inst : suite) write_graph_file(fs::path(a.dir) / (inst.id + ".graph"), inst.graph);
        write_text(fs::path(a.dir) / "manifest.tsv", manifest_tsv(suite));
        std::cout << "wrote " << suite.size() << " instances to " << a.dir << '\n';
        return kExitOk;
    }
    if (a.graph_class.empty() || a.params.empty()) throw UsageError("generate needs --class and --params, or --suite");
    GraphClassSpec spec;
    try {
        spec = parse_class_spec(a.graph_class, a.params);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    auto g = generate(spec, a.seed);
    if (a.out.empty()) {
        write_graph(std::cout, g);
    } else {
        write_graph_file(a.out, g);
    }
    if (!a.manifest.empty()) {
        Category category;
        try {
            category = parse_category(a.category);
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
        Instance inst{class_name(spec) + "-" + a.params, spec, g, known_mu(spec, g), category, a.seed};
        write_text(a.manifest, manifest_tsv({inst}));
    }
    return kExitOk;
}

int run_check(const std::string& graph_path, const std::string& set_text) {
    auto g = read_graph_file(graph_path);
    auto set = parse_set(set_text);
    auto rep = violations(g, set);
    std::cout << "MV: " << (rep.count == 0 ? "yes" : "no") << '\n';
    std::cout << "violations: " << rep.count << '\n';
    for (auto [u, v] : rep.pairs) std::cout << u << ' ' << v << '\n';
    return rep.count == 0 ? kExitOk : kExitNotMv;
}

struct SolveArgs {
    std::string algo;
    std::string graph;
    std::uint64_t seed = 0;
    std::size_t trials = kDefaultTrials;
    std::size_t pop = 50;
    std::size_t gens = 200;
    std::optional<double> penalty;
    bool repair = false;
    std::size_t cap = 16;
    std::optional<double> budget;
    std::string out;
};

int run_solve(const SolveArgs& a) {
    Algo algo;
    try {
        algo = parse_algo(a.algo);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    auto g = read_graph_file(a.graph);
    nlohmann::ordered_json params;
    params["seed"] = a.seed;
    SolveResult result;
    switch (algo) {
    case Algo::Random:
        params["trials"] = a.trials;
        result = random_sampling(g, a.trials, a.seed);
        break;
    case Algo::Genetic: {
        GaParams p;
        p.population_size = a.pop;
        p.max_iterations = a.gens;
        p.penalty = a.penalty;
        p.seed = a.seed;
        params["pop"] = a.pop;
        params["gens"] = a.gens;
        params["penalty"] = p.penalty_for(g);
        params["crossover_prob"] = p.crossover_prob;
        params["mutation_prob"] = p.mutation_prob;
        params["repair"] = a.repair;
        try {
            p.validate();
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
        result = ga_solve(g, p);
        if (a.repair) result = repaired(g, std::move(result));
        break;
    }
    case Algo::Hyper: result = hypergraph_solve(g); break;
    case Algo::Exact: {
        ExactOptions opt;
        opt.cap = a.cap;
        if (a.budget) opt.budget = std::chrono::duration<double>(*a.budget);
        params["cap"] = a.cap;
        if (a.budget) params["budget_seconds"] = *a.budget;
        result = exact_solve(g, opt);
        break;
    }
    }

    nlohmann::ordered_json j;
    j["algo"] = to_string(algo);
    j["parameters"] = params;
    j["set"] = std::vector<Vertex>(result.set.begin(), result.set.end());
    j["size"] = result.size();
    j["feasible"] = result.feasible;
    j["violation_count"] = result.violation_count;
    j["effort"] = result.effort;
    j["elapsed_seconds"] = result.elapsed_seconds;
    const auto text = j.dump(2) + "\n";
    if (a.out.empty()) {
        std::cout << text;
    } else {
        write_text(a.out, text);
    }
    return kExitOk;
}

int run_bounds(const std::string& graph_path) {
    auto g = read_graph_file(graph_path);
    std::cout << "n: " << g.order() << '\n' << "m: " << g.size() << '\n';
    if (g.order() > 0) std::cout << "delta: " << degree_lower_bound(g).value << '\n';
    std::cout << "clique: " << clique_lower_bound(g) << '\n';
    const double avg = average_distance(g);
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", std::sqrt(static_cast<double>(g.order()) / avg));
    std::cout << "hyper_bound: " << buf << '\n';
    std::snprintf(buf, sizeof buf, "%.6f", avg);
    std::cout << "avg_distance: " << buf << '\n';
    return kExitOk;
}

struct BenchArgs {
    std::string suite;
    std::string algos = "random,genetic,hyper";
    std::size_t reps = 5;
    std::uint64_t seed = 0;
    std::string out;
    std::string summary;
    std::string scatter;
    std::size_t trials = kDefaultTrials;
    std::size_t pop = 50;
    std::size_t gens = 200;
    std::optional<double> penalty;
    bool repair = false;
    std::size_t cap = 16;
    std::size_t jobs = 1;
    bool no_timing = false;
};

int run_bench(const BenchArgs& a) {
    Category category;
    AlgoSelection sel;
    try {
        category = parse_category(a.suite);
        sel.algos = parse_algo_list(a.algos);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    if (a.reps < 1) throw UsageError("--reps must be at least 1");
    sel.trials = a.trials;
    sel.ga.population_size = a.pop;
    sel.ga.max_iterations = a.gens;
    sel.ga.penalty = a.penalty;
    sel.repair = a.repair;
    sel.exact.cap = a.cap;

    auto suite = build_suite(category, a.seed);
    RunOptions opt;
    opt.jobs = a.jobs;
    opt.timing = !a.no_timing;
    auto records = run_matrix(suite, sel, a.reps, a.seed, opt);

    bool timed_out = false;
    for (const auto& r : records) {
        if (!r.error.empty()) std::cerr << "warning: " << r.graph_id << " " << to_string(r.algo) << ": " << r.error << '\n';
        timed_out = timed_out || r.timed_out;
    }
    write_text(a.out, records_csv(records));
    if (!a.summary.empty()) write_text(a.summary, summary_csv(summarize(records)));
    if (!a.scatter.empty()) {
        std::vector<RunRecord> category_two;
        for (const auto& r : records) {
            if (r.graph_class == "generalized_petersen" || r.graph_class == "erdos_renyi") category_two.push_back(r);
        }
        write_text(a.scatter, scatter_csv(export_scatter(category_two)));
    }
    return timed_out ? kExitTimeout : kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Mutual-visibility solvers, generators and benchmark harness"};
    app.require_subcommand(1);

    GenerateArgs gen;
    auto* generate_cmd = app.add_subcommand("generate", "Generate a graph class instance or a benchmark suite");
    generate_cmd->add_option("--class", gen.graph_class, "Graph class (complete, tree, path, cycle, grid, torus, "
                                                          "mycielskian_cycle, mycielskian_path, mycielskian_star, "
                                                          "generalized_petersen, erdos_renyi)");
    generate_cmd->add_option("--params", gen.params, "Comma-separated class parameters, e.g. 3,4");
    generate_cmd->add_option("--suite", gen.suite, "Generate a whole suite: n10 or n100");
    generate_cmd->add_option("--seed", gen.seed, "64-bit seed");
    generate_cmd->add_option("--out", gen.out, "Output graph file (stdout if omitted)");
    generate_cmd->add_option("--dir", gen.dir, "Output directory for --suite");
    generate_cmd->add_option("--manifest", gen.manifest, "Write a one-row manifest TSV");
    generate_cmd->add_option("--category", gen.category, "Category recorded in the manifest (n10 or n100)");

    std::string check_graph;
    std::string check_set;
    auto* check_cmd = app.add_subcommand("check", "Check whether a vertex set is a mutual-visibility set");
    check_cmd->add_option("--graph", check_graph, "Graph file")->required();
    check_cmd->add_option("--set", check_set, "Comma-separated vertex ids")->required();

    SolveArgs solve;
    auto* solve_cmd = app.add_subcommand("solve", "Run one solver on a graph");
    solve_cmd->add_option("--algo", solve.algo, "random, genetic, hyper or exact")->required();
    solve_cmd->add_option("--graph", solve.graph, "Graph file")->required();
    solve_cmd->add_option("--seed", solve.seed, "64-bit seed");
    solve_cmd->add_option("--trials", solve.trials, "Random sampling trials");
    solve_cmd->add_option("--pop", solve.pop, "GA population size");
    solve_cmd->add_option("--gens", solve.gens, "GA generations");
    solve_cmd->add_option("--penalty", solve.penalty, "GA penalty per violation (default n + 1)");
    solve_cmd->add_flag("--repair", solve.repair, "Repair the GA result into a mutual-visibility set");
    solve_cmd->add_option("--cap", solve.cap, "Exact solver vertex cap");
    solve_cmd->add_option("--budget", solve.budget, "Exact solver time budget in seconds");
    solve_cmd->add_option("--out", solve.out, "Result JSON file (stdout if omitted)");

    std::string bounds_graph;
    auto* bounds_cmd = app.add_subcommand("bounds", "Print lower bounds and average distance");
    bounds_cmd->add_option("--graph", bounds_graph, "Graph file")->required();

    BenchArgs bench;
    auto* bench_cmd = app.add_subcommand("bench", "Run the benchmark matrix over a suite");
    bench_cmd->add_option("--suite", bench.suite, "n10 or n100")->required();
    bench_cmd->add_option("--algos", bench.algos, "Comma-separated algorithms");
    bench_cmd->add_option("--reps", bench.reps, "Repetitions per instance and algorithm");
    bench_cmd->add_option("--seed", bench.seed, "Master seed (also seeds the suite)");
    bench_cmd->add_option("--out", bench.out, "Records CSV")->required();
    bench_cmd->add_option("--summary", bench.summary, "Summary CSV");
    bench_cmd->add_option("--scatter", bench.scatter, "Scatter CSV for generalized Petersen and Erdos-Renyi rows");
    bench_cmd->add_option("--trials", bench.trials, "Random sampling trials");
    bench_cmd->add_option("--pop", bench.pop, "GA population size");
    bench_cmd->add_option("--gens", bench.gens, "GA generations");
    bench_cmd->add_option("--penalty", bench.penalty, "GA penalty per violation (default n + 1)");
    bench_cmd->add_flag("--repair", bench.repair, "Repair GA results");
    bench_cmd->add_option("--cap", bench.cap, "Exact solver vertex cap");
    bench_cmd->add_option("--jobs", bench.jobs, "Worker threads");
    bench_cmd->add_flag("--no-timing", bench.no_timing, "Leave elapsed columns empty");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (generate_cmd->parsed()) return run_generate(gen);
        if (check_cmd->parsed()) return run_check(check_graph, check_set);
        if (solve_cmd->parsed()) return run_solve(solve);
        if (bounds_cmd->parsed()) return run_bounds(bounds_graph);
        if (bench_cmd->parsed()) return run_bench(bench);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const TimeoutError& e) {
        std::cerr << "timeout: " << e.what() << '\n';
        return kExitTimeout;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitData;
    }
    return kExitUsage;
}
