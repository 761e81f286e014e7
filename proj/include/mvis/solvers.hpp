#ifndef MVIS_SOLVERS_HPP
#define MVIS_SOLVERS_HPP

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "mvis/graph.hpp"
#include "mvis/visibility.hpp"

namespace mvis {

class TimeoutError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct SolveResult {
    CandidateSet set;
    bool feasible = false;
    std::size_t violation_count = 0;
    // Trials (random), generations (genetic), greedy removals (hyper) or
    // subsets visited (exact).
    std::size_t effort = 0;
    double elapsed_seconds = 0.0;

    std::size_t size() const { return set.size(); }
};

inline constexpr std::size_t kDefaultTrials = 10000;

// Per trial: k uniform in [1, n], then a uniform k-subset; the subset replaces
// the incumbent iff it is larger and a mutual-visibility set. The random
// stream is consumed identically whatever the incumbent, so a run with T
// trials is a prefix of a run with more trials under the same seed.
SolveResult random_sampling(const Graph& g, std::size_t trials, std::uint64_t seed);

struct GaParams {
    std::size_t population_size = 50;
    std::size_t max_iterations = 200;
    double crossover_prob = 1.0;
    double mutation_prob = 1.0;
    // Defaults to n + 1, so a single violation outweighs any size gain.
    std::optional<double> penalty;
    std::uint64_t seed = 0;

    double penalty_for(const Graph& g) const {
        return penalty.value_or(static_cast<double>(g.order()) + 1.0);
    }
    // Throws std::invalid_argument.
    void validate() const;
};

struct Individual {
    std::vector<std::uint8_t> genes;
    double fitness = 0.0;
    std::size_t violations = 0;

    std::size_t popcount() const;
};

// |S| - M * f, f being the number of non-visible pairs in S.
double ga_fitness(const Graph& g, const Individual& indiv, double penalty);
double ga_fitness(const VisibilityChecker& checker, const Individual& indiv, double penalty);

// Bitwise OR of both parents.
Individual or_crossover(const Individual& a, const Individual& b);

// Genetic search over characteristic vectors. Each generation draws
// population_size / 2 ordered parent pairs of distinct individuals; each pair
// yields one child (OR of both parents with probability crossover_prob,
// otherwise a copy of the first) and each child a mutant (two distinct genes
// swapped) with probability mutation_prob. Parents, children and mutants are
// stably sorted by fitness and truncated to population_size.
//
// The best individual is returned as is and may be infeasible; see repair().
SolveResult ga_solve(const Graph& g, const GaParams& params);

// Removes the vertex involved in the most violating pairs (smallest id on
// ties) until the set is a mutual-visibility set.
CandidateSet repair(const Graph& g, const CandidateSet& x);

// Applies repair() to result.set and refreshes its feasibility fields.
SolveResult repaired(const Graph& g, SolveResult result);

// Exact for n <= 6, otherwise the greedy independent set of the canonical
// shortest-path hypergraph. Throws DomainError if g is disconnected.
inline constexpr std::size_t kHypergraphBruteForceLimit = 6;
SolveResult hypergraph_solve(const Graph& g);

struct ExactOptions {
    std::size_t cap = 16;
    std::optional<std::chrono::duration<double>> budget;
    // Skip subsets containing a recorded obstruction: a failing pair plus the
    // set members lying on its shortest paths. Any superset fails too.
    bool pruning = true;
};

struct ExactResult {
    std::size_t mu = 0;
    CandidateSet witness;
    std::size_t subsets_visited = 0;
};

// Largest mutual-visibility set by enumeration in decreasing size. Throws
// std::invalid_argument if n exceeds the cap (or 63) and TimeoutError when the
// budget runs out.
ExactResult exact_mu(const Graph& g, const ExactOptions& options = {});

SolveResult exact_solve(const Graph& g, const ExactOptions& options = {});

} // namespace mvis

#endif
