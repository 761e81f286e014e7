#include "mvis/bench.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <thread>
#include <tuple>

#include "mvis/random.hpp"

namespace mvis {

std::string to_string(Algo a) {
    switch (a) {
    case Algo::Random: return "random";
    case Algo::Hyper: return "hyper";
    case Algo::Genetic: return "genetic";
    case Algo::Exact: return "exact";
    }
    return "random";
}

Algo parse_algo(const std::string& s) {
    if (s == "random") return Algo::Random;
    if (s == "hyper") return Algo::Hyper;
    if (s == "genetic") return Algo::Genetic;
    if (s == "exact") return Algo::Exact;
    throw std::invalid_argument("unknown algorithm '" + s + "' (expected random, genetic, hyper or exact)");
}

std::vector<Algo> parse_algo_list(const std::string& s) {
    std::vector<Algo> out;
    std::istringstream in(s);
    std::string item;
    while (std::getline(in, item, ',')) {
        auto a = parse_algo(item);
        if (std::find(out.begin(), out.end(), a) == out.end()) out.push_back(a);
    }
    if (out.empty()) throw std::invalid_argument("empty algorithm list");
    return out;
}

std::uint64_t rep_seed(std::uint64_t master_seed, const std::string& graph_id, Algo algo, std::size_t rep) {
    return derive_seed(derive_seed(derive_seed(master_seed, graph_id), to_string(algo)), rep);
}

namespace {

struct InstanceBounds {
    std::size_t delta = 0;
    std::optional<double> hyper_lb;
    std::optional<double> avg_distance;
};

InstanceBounds bounds_of(const Graph& g) {
    InstanceBounds b;
    b.delta = max_degree(g);
    if (g.order() >= 2 && is_connected(g)) {
        b.avg_distance = average_distance(g);
        b.hyper_lb = std::sqrt(static_cast<double>(g.order()) / *b.avg_distance);
    }
    return b;
}

SolveResult solve_one(const Graph& g, Algo algo, const AlgoSelection& sel, std::uint64_t seed) {
    switch (algo) {
    case Algo::Random: return random_sampling(g, sel.trials, seed);
    case Algo::Hyper: return hypergraph_solve(g);
    case Algo::Genetic: {
        GaParams p = sel.ga;
        p.seed = seed;
        auto r = ga_solve(g, p);
        return sel.repair ? repaired(g, std::move(r)) : r;
    }
    case Algo::Exact: return exact_solve(g, sel.exact);
    }
    throw std::logic_error("unhandled algorithm");
}

struct Cell {
    std::size_t instance;
    Algo algo;
    std::size_t rep;
};

} // namespace

std::vector<RunRecord> run_matrix(const std::vector<Instance>& suite, const AlgoSelection& selection,
                                  std::size_t reps, std::uint64_t master_seed, const RunOptions& options) {
    if (reps < 1) throw std::invalid_argument("reps must be at least 1");

    std::vector<InstanceBounds> bounds;
    bounds.reserve(suite.size());
    for (const auto& inst : suite) bounds.push_back(bounds_of(inst.graph));

    std::vector<Cell> cells;
    for (std::size_t i = 0; i < suite.size(); ++i)
        for (Algo a : selection.algos)
            for (std::size_t r = 0; r < reps; ++r) cells.push_back({i, a, r});

    std::vector<RunRecord> records(cells.size());
    auto run_cell = [&](std::size_t c) {
        const auto& cell = cells[c];
        const auto& inst = suite[cell.instance];
        const auto& b = bounds[cell.instance];
        RunRecord rec;
        rec.graph_id = inst.id;
        rec.graph_class = class_name(inst.spec);
        rec.category = inst.category;
        rec.n = inst.graph.order();
        rec.m = inst.graph.size();
        rec.algo = cell.algo;
        rec.seed = rep_seed(master_seed, inst.id, cell.algo, cell.rep);
        rec.rep = cell.rep;
        rec.known = inst.known;
        rec.delta_lb = b.delta;
        rec.hyper_lb = b.hyper_lb;
        rec.avg_distance = b.avg_distance;
        try {
            auto result = solve_one(inst.graph, cell.algo, selection, rec.seed);
            rec.set_size = result.size();
            rec.feasible = result.feasible;
            if (options.timing) rec.elapsed_seconds = result.elapsed_seconds;
            if (inst.known.kind == MuKind::Exact && *inst.known.value > 0) {
                rec.ratio = static_cast<double>(result.size()) / static_cast<double>(*inst.known.value);
            }
        } catch (const TimeoutError& e) {
            rec.error = e.what();
            rec.timed_out = true;
        } catch (const std::exception& e) {
            rec.error = e.what();
        }
        records[c] = std::move(rec);
    };

    const auto jobs = std::max<std::size_t>(1, std::min(options.jobs, cells.size()));
    if (jobs == 1) {
        for (std::size_t c = 0; c < cells.size(); ++c) run_cell(c);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::jthread> workers;
        for (std::size_t w = 0; w < jobs; ++w) {
            workers.emplace_back([&] {
                for (std::size_t c = next++; c < cells.size(); c = next++) run_cell(c);
            });
        }
    }

    std::stable_sort(records.begin(), records.end(), [](const RunRecord& a, const RunRecord& b) {
        return std::forward_as_tuple(a.graph_id, to_string(a.algo), a.rep) <
               std::forward_as_tuple(b.graph_id, to_string(b.algo), b.rep);
    });
    return records;
}

namespace {

bool is_mycielskian_class(const std::string& c) {
    return c == "mycielskian_cycle" || c == "mycielskian_path" || c == "mycielskian_star";
}

struct Accumulator {
    double ratio_sum = 0.0;
    std::size_t ratio_count = 0;
    double elapsed_sum = 0.0;
    std::size_t elapsed_count = 0;

    void add(const RunRecord& r) {
        if (r.ratio) {
            ratio_sum += *r.ratio;
            ++ratio_count;
        }
        if (r.elapsed_seconds) {
            elapsed_sum += *r.elapsed_seconds;
            ++elapsed_count;
        }
    }
    AlgoSummary result() const {
        AlgoSummary s;
        if (ratio_count) s.mean_ratio = ratio_sum / static_cast<double>(ratio_count);
        if (elapsed_count) s.mean_elapsed = elapsed_sum / static_cast<double>(elapsed_count);
        return s;
    }
};

} // namespace

std::vector<SummaryRow> summarize(const std::vector<RunRecord>& records) {
    std::map<std::pair<std::string, std::string>, std::map<Algo, Accumulator>> groups;
    std::map<std::pair<std::string, std::string>, Category> categories;
    for (const auto& r : records) {
        const auto cat = to_string(r.category);
        groups[{r.graph_class, cat}][r.algo].add(r);
        categories[{r.graph_class, cat}] = r.category;
        if (is_mycielskian_class(r.graph_class)) {
            groups[{kMycielskianRollup, cat}][r.algo].add(r);
            categories[{kMycielskianRollup, cat}] = r.category;
        }
    }
    std::vector<SummaryRow> rows;
    for (const auto& [key, per_algo] : groups) {
        SummaryRow row;
        row.graph_class = key.first;
        row.category = categories[key];
        for (const auto& [algo, acc] : per_algo) row.per_algo[algo] = acc.result();
        rows.push_back(std::move(row));
    }
    return rows;
}

std::vector<ScatterRow> export_scatter(const std::vector<RunRecord>& records) {
    std::vector<ScatterRow> rows;
    rows.reserve(records.size());
    for (const auto& r : records) rows.push_back({r.graph_id, r.graph_class, r.delta_lb, r.set_size, r.algo});
    return rows;
}

namespace {

std::string fixed6(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", x);
    return buf;
}

std::string opt_fixed6(const std::optional<double>& x) { return x ? fixed6(*x) : std::string{}; }

template <class T>
std::string opt_int(const std::optional<T>& x) {
    return x ? std::to_string(*x) : std::string{};
}

constexpr Algo kAlgoColumnOrder[] = {Algo::Random, Algo::Hyper, Algo::Genetic, Algo::Exact};

} // namespace

std::string records_csv(const std::vector<RunRecord>& records) {
    std::ostringstream out;
    out << kRecordsHeader << '\n';
    for (const auto& r : records) {
        out << r.graph_id << ',' << r.graph_class << ',' << to_string(r.category) << ',' << r.n << ',' << r.m << ','
            << to_string(r.algo) << ',' << r.seed << ',' << r.rep << ',' << opt_int(r.set_size) << ','
            << (r.feasible ? "true" : "false") << ',' << to_string(r.known.kind) << ',' << opt_int(r.known.value)
            << ',' << opt_fixed6(r.ratio) << ',' << opt_fixed6(r.elapsed_seconds) << ',' << r.delta_lb << ','
            << opt_fixed6(r.hyper_lb) << ',' << opt_fixed6(r.avg_distance) << '\n';
    }
    return out.str();
}

std::string summary_csv(const std::vector<SummaryRow>& rows) {
    std::vector<Algo> present;
    for (Algo a : kAlgoColumnOrder) {
        if (std::any_of(rows.begin(), rows.end(), [a](const SummaryRow& r) { return r.per_algo.count(a) > 0; })) {
            present.push_back(a);
        }
    }
    std::ostringstream out;
    out << "class,category";
    for (Algo a : present) out << ",alpha_" << to_string(a);
    for (Algo a : present) out << ",t_" << to_string(a);
    out << '\n';
    for (const auto& row : rows) {
        out << row.graph_class << ',' << to_string(row.category);
        for (Algo a : present) {
            auto it = row.per_algo.find(a);
            out << ',' << (it == row.per_algo.end() ? std::string{} : opt_fixed6(it->second.mean_ratio));
        }
        for (Algo a : present) {
            auto it = row.per_algo.find(a);
            out << ',' << (it == row.per_algo.end() ? std::string{} : opt_fixed6(it->second.mean_elapsed));
        }
        out << '\n';
    }
    return out.str();
}

std::string scatter_csv(const std::vector<ScatterRow>& rows) {
    std::ostringstream out;
    out << "graph_id,class,delta_lb,set_size,algo\n";
    for (const auto& r : rows) {
        out << r.graph_id << ',' << r.graph_class << ',' << r.delta_lb << ',' << opt_int(r.set_size) << ','
            << to_string(r.algo) << '\n';
    }
    return out.str();
}

} // namespace mvis
