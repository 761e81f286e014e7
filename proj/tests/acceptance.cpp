// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure.

#include <sys/wait.h>

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <unistd.h>
#include <vector>

#include "mvis/bench.hpp"
#include "mvis/generators.hpp"
#include "mvis/hypergraph.hpp"
#include "mvis/random.hpp"
#include "mvis/solvers.hpp"
#include "mvis/visibility.hpp"
#include "oracles.hpp"

using namespace mvis;
namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

namespace {

struct Outcome {
    bool pass = true;
    std::ostringstream detail;

    void require(bool ok, const std::string& what) {
        if (!ok && pass) {
            pass = false;
            detail.str("");
            detail << what;
        } else if (!ok) {
            detail << "; " << what;
        }
    }
};

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmt(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3f", x);
    return buf;
}

// 1. Complete graphs give |S| = n for every algorithm and rep.
void complete_graphs(Outcome& o) {
    const std::size_t reps = 5;
    for (std::size_t n : {10, 100}) {
        std::vector<Instance> suite;
        gclass::Complete spec{n};
        Graph g = complete_graph(n);
        const auto known = known_mu(spec, g);
        suite.push_back({"k" + std::to_string(n), spec, std::move(g), known, n == 10 ? Category::N10 : Category::N100, 0});
        const auto start = Clock::now();
        auto records = run_matrix(suite, AlgoSelection{}, reps, 2024);
        const double elapsed = seconds_since(start);
        o.require(records.size() == 3 * reps, "K" + std::to_string(n) + ": wrong record count");
        for (const auto& r : records) {
            if (r.set_size != std::optional<std::size_t>(n) || !r.ratio || *r.ratio != 1.0 || !r.feasible) {
                o.require(false, "K" + std::to_string(n) + " " + to_string(r.algo) + " rep " + std::to_string(r.rep) +
                                     " returned " + (r.set_size ? std::to_string(*r.set_size) : "nothing"));
            }
        }
        if (n == 100) {
            o.require(elapsed < 60.0, "K100 cell took " + fmt(elapsed) + " s");
            o.detail << "K100 cell " << fmt(elapsed) << " s";
        }
    }
}

// 2. Random trees with ten vertices.
void trees(Outcome& o) {
    const auto start = Clock::now();
    double hyper_sum = 0.0;
    double random_sum = 0.0;
    const int count = 20;
    for (int i = 0; i < count; ++i) {
        const auto seed = derive_seed(77, static_cast<std::uint64_t>(i));
        Graph t = random_tree(10, seed);
        const auto mu = known_mu(gclass::Tree{10}, t);
        const double leaf_count = static_cast<double>(leaves(t).size());
        o.require(mu.kind == MuKind::Exact && static_cast<double>(*mu.value) == leaf_count, "leaf formula mismatch");
        o.require(exact_mu(t).mu == leaves(t).size(), "exact solver disagrees with leaf count");
        auto h = hypergraph_solve(t);
        o.require(h.feasible, "hypergraph result infeasible");
        hyper_sum += static_cast<double>(h.size()) / leaf_count;
        auto r = random_sampling(t, kDefaultTrials, derive_seed(seed, "random"));
        random_sum += static_cast<double>(r.size()) / leaf_count;
    }
    const double hyper_mean = hyper_sum / count;
    const double random_mean = random_sum / count;
    const double elapsed = seconds_since(start);
    o.require(hyper_mean == 1.0, "hypergraph mean ratio " + fmt(hyper_mean));
    o.require(random_mean >= 0.95, "random mean ratio " + fmt(random_mean));
    o.require(elapsed < 30.0, "took " + fmt(elapsed) + " s");
    if (o.pass) o.detail << "hyper " << fmt(hyper_mean) << ", random " << fmt(random_mean) << ", " << fmt(elapsed) << " s";
}

// 3. Exact solver against closed-form values.
void exact_vs_formula(Outcome& o) {
    std::vector<GraphClassSpec> specs;
    for (std::size_t n = 2; n <= 8; ++n) specs.push_back(gclass::Complete{n});
    for (std::size_t n = 1; n <= 14; ++n) specs.push_back(gclass::Path{n});
    for (std::size_t n = 1; n <= 14; ++n) specs.push_back(gclass::Tree{n});
    specs.push_back(gclass::MycielskianCycle{4});
    specs.push_back(gclass::MycielskianPath{4});
    specs.push_back(gclass::MycielskianStar{4});
    specs.push_back(gclass::MycielskianCycle{5});
    specs.push_back(gclass::MycielskianPath{5});
    specs.push_back(gclass::MycielskianStar{2});
    specs.push_back(gclass::MycielskianStar{3});

    std::size_t checked = 0;
    for (const auto& spec : specs) {
        for (std::uint64_t seed = 0; seed < (std::holds_alternative<gclass::Tree>(spec) ? 5u : 1u); ++seed) {
            Graph g = generate(spec, seed);
            const auto known = known_mu(spec, g);
            if (known.kind != MuKind::Exact || g.order() > 14) continue;
            const auto mu = exact_mu(g).mu;
            o.require(mu == *known.value, class_name(spec) + "(" + class_params(spec) + "): exact " +
                                              std::to_string(mu) + " vs formula " + std::to_string(*known.value));
            ++checked;
        }
    }
    for (std::size_t k = 2; k <= 13; ++k) {
        o.require(exact_mu(star_graph(k)).mu == k, "star K1," + std::to_string(k));
        ++checked;
    }

    const auto start = Clock::now();
    ExactOptions opts;
    opts.budget = std::chrono::duration<double>(600.0);
    Graph grid = grid_graph(4, 4);
    const auto known = known_mu(gclass::Grid{4, 4}, grid);
    const auto result = exact_mu(grid, opts);
    const double elapsed = seconds_since(start);
    o.require(known.kind == MuKind::Exact && *known.value == 8, "grid formula is not 8");
    o.require(result.mu == 8, "exact_mu(Grid(4,4)) = " + std::to_string(result.mu));
    o.require(violations(grid, result.witness).count == 0, "grid witness fails");
    if (o.pass) o.detail << checked << " formula instances, Grid(4,4) = 8 in " << fmt(elapsed) << " s";
}

Graph soundness_graph(Rng& rng, std::uint64_t seed) {
    switch (rng.uniform_below(6)) {
    case 0: return random_tree(2 + rng.uniform_below(30), seed);
    case 1: return erdos_renyi_connected(5 + rng.uniform_below(25), 0.3 + 0.3 * rng.unit(), seed);
    case 2: return grid_graph(2 + rng.uniform_below(5), 2 + rng.uniform_below(5));
    case 3: {
        const std::size_t n = 5 + rng.uniform_below(10);
        return generalized_petersen(n, 1 + rng.uniform_below((n - 1) / 2));
    }
    case 4: return mycielskian(cycle_graph(3 + rng.uniform_below(8)));
    default: return oracle::random_connected(4 + rng.uniform_below(30), 0.05 + 0.2 * rng.unit(), seed);
    }
}

// 4. Randomized soundness properties.
void soundness(Outcome& o) {
    Rng rng(0xacce55);
    std::size_t feasible_checked = 0;
    for (int trial = 0; trial < 500; ++trial) {
        const auto seed = derive_seed(4242, static_cast<std::uint64_t>(trial));
        Graph g = soundness_graph(rng, seed);
        const std::string tag = "trial " + std::to_string(trial);
        VisibilityChecker checker(g);

        std::vector<SolveResult> results;
        results.push_back(random_sampling(g, 200, seed));
        GaParams ga;
        ga.seed = seed;
        ga.population_size = 20;
        ga.max_iterations = 20;
        const auto ga_raw = ga_solve(g, ga);
        results.push_back(ga_raw);
        results.push_back(repaired(g, ga_raw));
        results.push_back(hypergraph_solve(g));
        if (g.order() <= 12) results.push_back(exact_solve(g));

        for (const auto& r : results) {
            const auto f = checker.count(r.set);
            o.require(f == r.violation_count, tag + ": reported violation count is wrong");
            if (r.feasible) {
                o.require(f == 0, tag + ": feasible result has violations");
                ++feasible_checked;
                // (b) hereditary on random subsets
                for (int s = 0; s < 5; ++s) {
                    std::vector<Vertex> sub;
                    for (Vertex v : r.set)
                        if (rng.bernoulli(0.5)) sub.push_back(v);
                    o.require(checker.count(CandidateSet(sub)) == 0, tag + ": subset of an MV set fails");
                }
            }
        }
        o.require(results[2].feasible, tag + ": repaired GA result infeasible");

        const auto bound = degree_lower_bound(g);
        o.require(bound.value == max_degree(g) && checker.count(bound.witness) == 0, tag + ": degree witness fails");

        const auto h = build_hypergraph(g);
        const auto indep = greedy_independent_set(h);
        for (const auto& e : h.edges()) {
            const bool inside = indep.contains(e[0]) && indep.contains(e[1]) && indep.contains(e[2]);
            o.require(!inside, tag + ": greedy set contains a hyperedge");
        }
    }
    if (o.pass) o.detail << "500 trials, " << feasible_checked << " feasible results verified";
}

// 5. Hypergraph construction against the all-shortest-paths oracle.
void hypergraph_oracle(Outcome& o) {
    std::vector<Graph> graphs;
    for (std::size_t n = 1; n <= 9; ++n) graphs.push_back(path_graph(n));
    for (std::size_t n = 3; n <= 9; ++n) graphs.push_back(cycle_graph(n));
    for (std::size_t n = 1; n <= 9; ++n)
        for (std::uint64_t seed = 0; seed < 20; ++seed) graphs.push_back(random_tree(n, seed));
    for (std::size_t k = 1; k <= 8; ++k) graphs.push_back(star_graph(k));
    for (const auto& g : graphs) {
        const auto h = build_hypergraph(g);
        const std::set<HyperEdge> built(h.edges().begin(), h.edges().end());
        o.require(built == oracle::canonical_hyperedges(g), "mismatch on a graph with " + std::to_string(g.order()) +
                                                                 " vertices and " + std::to_string(g.size()) + " edges");
    }
    std::size_t steps = 0;
    auto p3 = greedy_independent_set(build_hypergraph(path_graph(3)), &steps);
    o.require(p3 == CandidateSet({1, 2}) && steps == 1, "P3 greedy trace");
    auto p4h = build_hypergraph(path_graph(4));
    o.require(p4h.edges().size() == 4, "P4 should have four hyperedges");
    auto p4 = greedy_independent_set(p4h, &steps);
    o.require(p4 == CandidateSet({2, 3}) && steps == 2, "P4 greedy trace");
    if (o.pass) o.detail << graphs.size() << " graphs matched";
}

// 6. GA over-unity on grids and repair soundness.
void ga_behaviour(Outcome& o) {
    std::size_t over_unity = 0;
    std::size_t repaired_ok = 0;
    std::size_t runs = 0;
    double best_ratio = 0.0;
    for (auto [rows, cols] : {std::pair<std::size_t, std::size_t>{10, 10}, {4, 25}}) {
        Graph g = grid_graph(rows, cols);
        const auto mu = *known_mu(gclass::Grid{rows, cols}, g).value;
        for (std::uint64_t s = 0; s < 10; ++s) {
            GaParams p;
            p.seed = derive_seed(606, s);
            auto raw = ga_solve(g, p);
            ++runs;
            if (!raw.feasible && raw.size() > mu) ++over_unity;
            best_ratio = std::max(best_ratio, static_cast<double>(raw.size()) / static_cast<double>(mu));
            auto fixed = repaired(g, raw);
            if (fixed.feasible && violations(g, fixed.set).count == 0) ++repaired_ok;
        }
    }
    o.require(over_unity >= 1, "no infeasible over-unity GA run");
    o.require(repaired_ok == runs, std::to_string(runs - repaired_ok) + " repaired sets failed");
    if (o.pass)
        o.detail << over_unity << "/" << runs << " runs over-unity (max |S|/mu " << fmt(best_ratio) << "), "
                 << repaired_ok << "/" << runs << " repaired sets verify";
}

int run_cli(const std::string& args) {
    const int status = std::system((std::string(MVIS_CLI_PATH) + " " + args + " > /dev/null 2>&1").c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

// Drops the given comma-separated columns from every line.
std::string drop_columns(const std::string& csv, const std::vector<std::size_t>& drop) {
    std::istringstream in(csv);
    std::ostringstream out;
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream cells(line);
        std::string cell;
        std::size_t i = 0;
        bool first = true;
        while (std::getline(cells, cell, ',')) {
            if (std::find(drop.begin(), drop.end(), i++) == drop.end()) {
                out << (first ? "" : ",") << cell;
                first = false;
            }
        }
        out << '\n';
    }
    return out.str();
}

// 7. Bench determinism through the CLI.
void determinism(Outcome& o) {
    const auto dir = fs::temp_directory_path() / ("mvis_acceptance_" + std::to_string(::getpid()));
    fs::create_directories(dir);
    auto bench = [&](const std::string& tag, bool timing) {
        const auto base = (dir / tag).string();
        const std::string args = "bench --suite n10 --algos random,hyper,genetic --reps 5 --seed 2718 --jobs 2 --out " +
                                 base + "_results.csv --summary " + base + "_summary.csv --scatter " + base +
                                 "_scatter.csv" + (timing ? "" : " --no-timing");
        o.require(run_cli(args) == 0, "bench " + tag + " failed");
        return std::array<std::string, 3>{slurp(base + "_results.csv"), slurp(base + "_summary.csv"),
                                          slurp(base + "_scatter.csv")};
    };
    const auto a = bench("a", false);
    const auto b = bench("b", false);
    o.require(!a[0].empty() && !a[1].empty() && !a[2].empty(), "bench produced empty output");
    o.require(a[0] == b[0], "results.csv differs");
    o.require(a[1] == b[1], "summary.csv differs");
    o.require(a[2] == b[2], "scatter.csv differs");

    // Timed runs agree everywhere except the wall-clock columns.
    const auto c = bench("c", true);
    const auto d = bench("d", true);
    o.require(drop_columns(c[0], {13}) == drop_columns(d[0], {13}), "timed results differ outside elapsed_s");
    o.require(drop_columns(c[0], {13}) == drop_columns(a[0], {13}), "timed and untimed results differ");
    o.require(drop_columns(c[1], {5, 6, 7}) == drop_columns(d[1], {5, 6, 7}), "timed summaries differ outside t_*");
    o.require(c[2] == d[2], "timed scatter differs");
    fs::remove_all(dir);
    if (o.pass) o.detail << "untimed output byte-identical, " << std::count(a[0].begin(), a[0].end(), '\n') - 1 << " records";
}

// 8. Runtime sanity on the n100 suite.
void runtimes(Outcome& o) {
    const auto suite = build_suite(Category::N100, 1);
    double worst_hyper = 0.0;
    double worst_random = 0.0;
    for (const auto& inst : suite) {
        auto start = Clock::now();
        auto h = hypergraph_solve(inst.graph);
        const double th = seconds_since(start);
        o.require(h.feasible && std::isfinite(th) && std::isfinite(h.elapsed_seconds), inst.id + ": hypergraph run");
        worst_hyper = std::max(worst_hyper, th);

        start = Clock::now();
        auto r = random_sampling(inst.graph, kDefaultTrials, inst.seed);
        const double tr = seconds_since(start);
        o.require(r.feasible && tr < 30.0, inst.id + ": random sampling took " + fmt(tr) + " s");
        worst_random = std::max(worst_random, tr);
    }
    if (o.pass)
        o.detail << suite.size() << " instances, slowest hyper " << fmt(worst_hyper) << " s, slowest random "
                 << fmt(worst_random) << " s";
}

// 9. Lower bounds <= mu <= ... and hypergraph result <= mu.
void bound_ordering(Outcome& o) {
    std::vector<Graph> graphs;
    for (const auto& inst : build_suite(Category::N10, 1)) graphs.push_back(inst.graph);
    for (std::size_t n = 2; n <= 14; ++n) {
        graphs.push_back(complete_graph(n));
        graphs.push_back(path_graph(n));
        if (n >= 3) graphs.push_back(cycle_graph(n));
        graphs.push_back(random_tree(n, n));
    }
    graphs.push_back(grid_graph(3, 4));
    graphs.push_back(mycielskian(cycle_graph(4)));
    graphs.push_back(mycielskian(path_graph(4)));
    graphs.push_back(mycielskian(star_graph(4)));
    graphs.push_back(generalized_petersen(7, 2));
    for (std::uint64_t seed = 0; seed < 60; ++seed)
        graphs.push_back(oracle::random_connected(4 + seed % 11, 0.1 + 0.005 * static_cast<double>(seed), seed));

    for (const auto& g : graphs) {
        if (g.order() > 14) continue;
        const auto mu = exact_mu(g).mu;
        const auto lower = std::max(degree_lower_bound(g).value, clique_lower_bound(g));
        const auto hyper = hypergraph_solve(g).size();
        o.require(lower <= mu, "lower bound " + std::to_string(lower) + " exceeds mu " + std::to_string(mu));
        o.require(hyper <= mu, "hypergraph set " + std::to_string(hyper) + " exceeds mu " + std::to_string(mu));
    }
    if (o.pass) o.detail << graphs.size() << " instances";
}

} // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria{
        {"complete graphs reach n", complete_graphs},
        {"trees with ten vertices", trees},
        {"exact solver matches closed forms", exact_vs_formula},
        {"randomized soundness", soundness},
        {"hypergraph small-case oracle", hypergraph_oracle},
        {"GA over-unity and repair", ga_behaviour},
        {"bench determinism", determinism},
        {"n100 runtimes", runtimes},
        {"bound ordering", bound_ordering},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        const auto start = Clock::now();
        try {
            criteria[i].second(o);
        } catch (const std::exception& e) {
            o.require(false, std::string("exception: ") + e.what());
        }
        if (!o.pass) ++failures;
        std::cout << "AC" << (i + 1) << ' ' << (o.pass ? "PASS" : "FAIL") << "  " << criteria[i].first << " ["
                  << fmt(seconds_since(start)) << " s] " << o.detail.str() << std::endl;
    }
    std::cout << (criteria.size() - static_cast<std::size_t>(failures)) << "/" << criteria.size()
              << " acceptance criteria passed" << std::endl;
    return failures == 0 ? 0 : 1;
}
