#ifndef MVIS_VISIBILITY_HPP
#define MVIS_VISIBILITY_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "mvis/graph.hpp"

namespace mvis {

// Set of distinct vertex ids kept in ascending order.
class CandidateSet {
public:
    CandidateSet() = default;
    // Sorts; throws std::invalid_argument on duplicates or negative ids.
    explicit CandidateSet(std::vector<Vertex> members);
    static CandidateSet from_mask(std::span<const std::uint8_t> mask);

    std::span<const Vertex> members() const { return members_; }
    std::size_t size() const { return members_.size(); }
    bool empty() const { return members_.empty(); }
    bool contains(Vertex v) const;
    auto begin() const { return members_.begin(); }
    auto end() const { return members_.end(); }

    friend bool operator==(const CandidateSet&, const CandidateSet&) = default;

private:
    std::vector<Vertex> members_;
};

struct ViolationReport {
    std::size_t count = 0;
    // Unordered pairs (u, v), u < v, not mutually visible; ascending.
    std::vector<Edge> pairs;

    bool mutually_visible() const { return count == 0; }
};

// Decides mutual visibility against a fixed graph. Holds the distance table so
// repeated queries (solvers evaluate thousands of sets) skip the all-pairs BFS.
//
// A pair u, v in X is X-visible iff a BFS from u that never expands through
// members of X other than u reaches v at distance d(u, v). One such BFS per
// source settles every partner at once. Adjacent pairs are always visible and
// unreachable pairs are never visible.
//
// Safe to share across threads; queries allocate their own scratch.
class VisibilityChecker {
public:
    explicit VisibilityChecker(const Graph& g);
    VisibilityChecker(const Graph& g, DistanceMatrix dist);

    const Graph& graph() const { return *graph_; }
    const DistanceMatrix& distances() const { return dist_; }

    ViolationReport report(const CandidateSet& x) const;
    std::size_t count(const CandidateSet& x) const;
    // Stops at the first violating pair.
    bool is_mutual_visibility_set(const CandidateSet& x) const;
    std::optional<Edge> first_violation(const CandidateSet& x) const;

    // mask[v] != 0 marks membership; mask.size() must equal n.
    std::size_t count(std::span<const std::uint8_t> mask) const;

private:
    enum class Mode { Count, FirstViolation, Report };
    std::size_t scan(std::span<const Vertex> members, std::span<const std::uint8_t> mask, Mode mode,
                     std::vector<Edge>* pairs) const;

    const Graph* graph_;
    DistanceMatrix dist_;
};

// True iff some shortest u-v path has every internal vertex outside x.
// Implemented as a BFS over G[(V \ x) + {u, v}] compared against d(u, v).
// Unreachable pairs are not visible.
bool x_visible(const Graph& g, const DistanceMatrix& dist, Vertex u, Vertex v, const CandidateSet& x);

// Throws std::out_of_range if a member id is not a vertex of g.
ViolationReport violations(const Graph& g, const CandidateSet& x);

bool is_mutual_visibility_set(const Graph& g, const CandidateSet& x);

struct DegreeBound {
    std::size_t value = 0;
    CandidateSet witness;
};

// Delta(G) together with N(v*) for the smallest-id maximum-degree vertex v*.
// The neighbourhood is always a mutual-visibility set, so mu(G) >= Delta(G).
DegreeBound degree_lower_bound(const Graph& g);

// Greedy clique: repeatedly add the highest-degree vertex adjacent to every
// vertex chosen so far (smallest id on ties). A lower bound on omega(G) and
// hence on mu(G).
CandidateSet greedy_clique(const Graph& g);
std::size_t clique_lower_bound(const Graph& g);

// sqrt(n / average_distance). Throws DomainError if g is disconnected or
// n < 2.
double hypergraph_bound(const Graph& g);

} // namespace mvis

#endif
