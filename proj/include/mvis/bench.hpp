#ifndef MVIS_BENCH_HPP
#define MVIS_BENCH_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mvis/generators.hpp"
#include "mvis/solvers.hpp"

namespace mvis {

enum class Algo { Random, Hyper, Genetic, Exact };

std::string to_string(Algo a);
Algo parse_algo(const std::string& s);
// Comma-separated list, e.g. "random,genetic,hyper".
std::vector<Algo> parse_algo_list(const std::string& s);

struct AlgoSelection {
    std::vector<Algo> algos{Algo::Random, Algo::Hyper, Algo::Genetic};
    std::size_t trials = kDefaultTrials;
    // ga.seed is replaced by the per-rep seed.
    GaParams ga;
    bool repair = false;
    ExactOptions exact;
};

struct RunOptions {
    std::size_t jobs = 1;
    // When false, elapsed fields stay empty so output is byte-reproducible.
    bool timing = true;
};

struct RunRecord {
    std::string graph_id;
    std::string graph_class;
    Category category = Category::N10;
    std::size_t n = 0;
    std::size_t m = 0;
    Algo algo = Algo::Random;
    std::uint64_t seed = 0;
    std::size_t rep = 0;
    std::optional<std::size_t> set_size;
    bool feasible = false;
    KnownMu known;
    std::optional<double> ratio;
    std::optional<double> elapsed_seconds;
    std::size_t delta_lb = 0;
    std::optional<double> hyper_lb;
    std::optional<double> avg_distance;
    // Set when the solver failed (timeout, invalid input); not serialized.
    std::string error;
    bool timed_out = false;
};

std::uint64_t rep_seed(std::uint64_t master_seed, const std::string& graph_id, Algo algo, std::size_t rep);

// One record per (instance, algo, rep), sorted by (graph_id, algo name, rep).
// Solver failures become rows with feasible = false and no set size.
std::vector<RunRecord> run_matrix(const std::vector<Instance>& suite, const AlgoSelection& selection,
                                  std::size_t reps, std::uint64_t master_seed, const RunOptions& options = {});

struct AlgoSummary {
    std::optional<double> mean_ratio;
    std::optional<double> mean_elapsed;
};

struct SummaryRow {
    std::string graph_class;
    Category category = Category::N10;
    std::map<Algo, AlgoSummary> per_algo;
};

inline constexpr const char* kMycielskianRollup = "mycielskian";

// Groups by (class, category); the three Mycielskian classes are also merged
// into a "mycielskian" row. Sorted by class name, then category.
std::vector<SummaryRow> summarize(const std::vector<RunRecord>& records);

struct ScatterRow {
    std::string graph_id;
    std::string graph_class;
    std::size_t delta_lb = 0;
    std::optional<std::size_t> set_size;
    Algo algo = Algo::Random;
};

std::vector<ScatterRow> export_scatter(const std::vector<RunRecord>& records);

inline constexpr const char* kRecordsHeader =
    "graph_id,class,category,n,m,algo,seed,rep,set_size,feasible,known_kind,known_mu,ratio,elapsed_s,delta_lb,"
    "hyper_lb,avg_dist";

std::string records_csv(const std::vector<RunRecord>& records);
std::string summary_csv(const std::vector<SummaryRow>& rows);
std::string scatter_csv(const std::vector<ScatterRow>& rows);

} // namespace mvis

#endif
