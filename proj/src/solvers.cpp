#include "mvis/solvers.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "mvis/hypergraph.hpp"
#include "mvis/random.hpp"

namespace mvis {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

} // namespace

SolveResult random_sampling(const Graph& g, std::size_t trials, std::uint64_t seed) {
    const auto start = Clock::now();
    const auto n = g.order();
    SolveResult result;
    result.feasible = true;
    result.effort = trials;
    if (n == 0) {
        result.elapsed_seconds = seconds_since(start);
        return result;
    }

    VisibilityChecker checker(g);
    Rng rng(seed);
    std::vector<Vertex> perm(n);
    std::iota(perm.begin(), perm.end(), 0);

    for (std::size_t t = 0; t < trials; ++t) {
        const auto k = static_cast<std::size_t>(rng.uniform_int(1, static_cast<std::int64_t>(n)));
        // Partial Fisher-Yates; the first k slots are a uniform k-subset
        // whatever order perm was left in.
        for (std::size_t i = 0; i < k; ++i) {
            const auto j = i + static_cast<std::size_t>(rng.uniform_below(n - i));
            std::swap(perm[i], perm[j]);
        }
        if (k <= result.set.size()) continue;
        CandidateSet candidate(std::vector<Vertex>(perm.begin(), perm.begin() + static_cast<std::ptrdiff_t>(k)));
        if (checker.is_mutual_visibility_set(candidate)) result.set = std::move(candidate);
    }
    result.elapsed_seconds = seconds_since(start);
    return result;
}

void GaParams::validate() const {
    if (population_size < 2) throw std::invalid_argument("population size must be at least 2");
    if (max_iterations < 1) throw std::invalid_argument("max iterations must be at least 1");
    if (!(crossover_prob >= 0.0 && crossover_prob <= 1.0)) throw std::invalid_argument("crossover prob must be in [0, 1]");
    if (!(mutation_prob >= 0.0 && mutation_prob <= 1.0)) throw std::invalid_argument("mutation prob must be in [0, 1]");
    if (penalty && !(*penalty > 0.0)) throw std::invalid_argument("penalty must be positive");
}

std::size_t Individual::popcount() const {
    return static_cast<std::size_t>(std::count_if(genes.begin(), genes.end(), [](std::uint8_t b) { return b != 0; }));
}

double ga_fitness(const VisibilityChecker& checker, const Individual& indiv, double penalty) {
    const auto f = checker.count(indiv.genes);
    return static_cast<double>(indiv.popcount()) - penalty * static_cast<double>(f);
}

double ga_fitness(const Graph& g, const Individual& indiv, double penalty) {
    if (indiv.genes.size() != g.order()) throw std::invalid_argument("gene length differs from n");
    return ga_fitness(VisibilityChecker(g), indiv, penalty);
}

Individual or_crossover(const Individual& a, const Individual& b) {
    Individual child;
    child.genes.resize(a.genes.size());
    for (std::size_t i = 0; i < a.genes.size(); ++i) child.genes[i] = (a.genes[i] | b.genes[i]) ? 1 : 0;
    return child;
}

namespace {

void evaluate(const VisibilityChecker& checker, Individual& indiv, double penalty) {
    indiv.violations = checker.count(indiv.genes);
    indiv.fitness = static_cast<double>(indiv.popcount()) - penalty * static_cast<double>(indiv.violations);
}

} // namespace

SolveResult ga_solve(const Graph& g, const GaParams& params) {
    params.validate();
    const auto start = Clock::now();
    const auto n = g.order();
    const auto pop_size = params.population_size;
    const double penalty = params.penalty_for(g);

    VisibilityChecker checker(g);
    Rng rng(params.seed);

    std::vector<Individual> population(pop_size);
    for (auto& indiv : population) {
        indiv.genes.resize(n);
        for (auto& gene : indiv.genes) gene = rng.bernoulli(0.5) ? 1 : 0;
        evaluate(checker, indiv, penalty);
    }

    const std::size_t pairs = pop_size / 2;
    std::vector<Individual> offspring;
    std::vector<Individual> mutants;
    for (std::size_t gen = 0; gen < params.max_iterations; ++gen) {
        offspring.clear();
        mutants.clear();
        for (std::size_t p = 0; p < pairs; ++p) {
            const auto a = static_cast<std::size_t>(rng.uniform_below(pop_size));
            auto b = static_cast<std::size_t>(rng.uniform_below(pop_size - 1));
            if (b >= a) ++b;
            if (rng.bernoulli(params.crossover_prob)) {
                offspring.push_back(or_crossover(population[a], population[b]));
                evaluate(checker, offspring.back(), penalty);
            } else {
                offspring.push_back(population[a]);
            }
        }
        for (const auto& child : offspring) {
            if (!rng.bernoulli(params.mutation_prob)) continue;
            Individual mutant = child;
            if (n >= 2) {
                const auto i = static_cast<std::size_t>(rng.uniform_below(n));
                auto j = static_cast<std::size_t>(rng.uniform_below(n - 1));
                if (j >= i) ++j;
                std::swap(mutant.genes[i], mutant.genes[j]);
                // Swapping equal genes changes nothing.
                if (mutant.genes[i] != mutant.genes[j]) evaluate(checker, mutant, penalty);
            }
            mutants.push_back(std::move(mutant));
        }

        for (auto& c : offspring) population.push_back(std::move(c));
        for (auto& c : mutants) population.push_back(std::move(c));
        std::stable_sort(population.begin(), population.end(),
                         [](const Individual& x, const Individual& y) { return x.fitness > y.fitness; });
        population.resize(pop_size);
    }

    const auto& best = population.front();
    SolveResult result;
    result.set = CandidateSet::from_mask(best.genes);
    result.violation_count = best.violations;
    result.feasible = best.violations == 0;
    result.effort = params.max_iterations;
    result.elapsed_seconds = seconds_since(start);
    return result;
}

CandidateSet repair(const Graph& g, const CandidateSet& x) {
    if (x.size() <= 1) return x;
    VisibilityChecker checker(g);
    std::vector<Vertex> members(x.begin(), x.end());
    std::vector<std::size_t> involvement(g.order());
    for (;;) {
        CandidateSet current(members);
        auto rep = checker.report(current);
        if (rep.count == 0) return current;
        std::fill(involvement.begin(), involvement.end(), 0);
        for (auto [u, v] : rep.pairs) {
            ++involvement[static_cast<std::size_t>(u)];
            ++involvement[static_cast<std::size_t>(v)];
        }
        Vertex worst = members.front();
        for (Vertex v : members)
            if (involvement[static_cast<std::size_t>(v)] > involvement[static_cast<std::size_t>(worst)]) worst = v;
        std::erase(members, worst);
    }
}

SolveResult repaired(const Graph& g, SolveResult result) {
    const auto start = Clock::now();
    result.set = repair(g, result.set);
    result.violation_count = 0;
    result.feasible = true;
    result.elapsed_seconds += seconds_since(start);
    return result;
}

SolveResult hypergraph_solve(const Graph& g) {
    if (!is_connected(g)) throw DomainError("hypergraph solver needs a connected graph");
    if (g.order() <= kHypergraphBruteForceLimit) return exact_solve(g);

    const auto start = Clock::now();
    SolveResult result;
    const auto h = build_hypergraph(g);
    result.set = greedy_independent_set(h, &result.effort);
    result.violation_count = violations(g, result.set).count;
    result.feasible = result.violation_count == 0;
    result.elapsed_seconds = seconds_since(start);
    return result;
}

ExactResult exact_mu(const Graph& g, const ExactOptions& options) {
    const auto n = g.order();
    if (n > options.cap) {
        throw std::invalid_argument("exact solver: n = " + std::to_string(n) + " exceeds cap " +
                                    std::to_string(options.cap));
    }
    if (n > 63) throw std::invalid_argument("exact solver supports at most 63 vertices");

    const auto start = Clock::now();
    ExactResult result;
    if (n == 0) return result;

    VisibilityChecker checker(g);
    const auto& dist = checker.distances();
    std::vector<std::uint64_t> obstructions;

    auto members_of = [n](std::uint64_t mask) {
        std::vector<Vertex> m;
        for (std::size_t v = 0; v < n; ++v)
            if (mask >> v & 1U) m.push_back(static_cast<Vertex>(v));
        return m;
    };
    // Members of the set lying strictly inside some shortest u-v path.
    auto obstruction = [&](std::uint64_t mask, Vertex u, Vertex v) {
        std::uint64_t w = (std::uint64_t{1} << u) | (std::uint64_t{1} << v);
        if (!dist.reachable(u, v)) return w;
        const auto duv = dist.at(u, v);
        for (std::size_t x = 0; x < n; ++x) {
            const auto xv = static_cast<Vertex>(x);
            if (!(mask >> x & 1U) || xv == u || xv == v) continue;
            if (dist.at(u, xv) + dist.at(xv, v) == duv) w |= std::uint64_t{1} << x;
        }
        return w;
    };

    for (std::size_t k = n; k >= 1; --k) {
        // Gosper's hack walks every k-bit mask below 2^n in increasing order.
        std::uint64_t mask = (k == 64) ? ~std::uint64_t{0} : (std::uint64_t{1} << k) - 1;
        const std::uint64_t limit = std::uint64_t{1} << n;
        while (mask < limit) {
            ++result.subsets_visited;
            if (options.budget && (result.subsets_visited & 0xff) == 0 && seconds_since(start) > options.budget->count()) {
                throw TimeoutError("exact solver exceeded its time budget after " +
                                   std::to_string(result.subsets_visited) + " subsets");
            }
            const bool skip = options.pruning && std::any_of(obstructions.begin(), obstructions.end(),
                                                             [mask](std::uint64_t w) { return (mask & w) == w; });
            if (!skip) {
                CandidateSet candidate(members_of(mask));
                auto bad = checker.first_violation(candidate);
                if (!bad) {
                    result.mu = k;
                    result.witness = std::move(candidate);
                    return result;
                }
                if (options.pruning) obstructions.push_back(obstruction(mask, bad->first, bad->second));
            }
            const std::uint64_t c = mask & (~mask + 1);
            const std::uint64_t r = mask + c;
            if (r == 0) break;
            mask = (((r ^ mask) >> 2) / c) | r;
        }
    }
    return result;
}

SolveResult exact_solve(const Graph& g, const ExactOptions& options) {
    const auto start = Clock::now();
    auto exact = exact_mu(g, options);
    SolveResult result;
    result.set = std::move(exact.witness);
    result.feasible = true;
    result.effort = exact.subsets_visited;
    result.elapsed_seconds = seconds_since(start);
    return result;
}

} // namespace mvis
