#ifndef MVIS_GRAPH_HPP
#define MVIS_GRAPH_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace mvis {

using Vertex = std::int32_t;
using Edge = std::pair<Vertex, Vertex>;

// Raised for structurally invalid input (bad ids, self-loops, bad parameters).
class InvalidGraph : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Raised when an operation is undefined for the given graph, e.g. average
// distance of a disconnected graph.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Immutable undirected simple graph on vertices 0..n-1. Adjacency lists are
// sorted and symmetric.
class Graph {
public:
    Graph() = default;

    // Builds the graph from an unordered edge list. Duplicate edges (in either
    // orientation) collapse; self-loops and out-of-range ids throw
    // InvalidGraph naming the offending pair.
    static Graph from_edge_list(std::size_t n, std::span<const Edge> edges);

    std::size_t order() const { return adjacency_.size(); }
    std::size_t size() const { return m_; }

    std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[static_cast<std::size_t>(v)]; }
    std::size_t degree(Vertex v) const { return adjacency_[static_cast<std::size_t>(v)].size(); }
    bool has_edge(Vertex u, Vertex v) const;

    // Edges as (u, v) with u < v in ascending lexicographic order.
    std::vector<Edge> edges() const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    std::vector<std::vector<Vertex>> adjacency_;
    std::size_t m_ = 0;
};

// Dense all-pairs hop-count table. Disconnected pairs hold kUnreachable,
// which callers must test via reachable() rather than treat as a distance.
class DistanceMatrix {
public:
    static constexpr std::int32_t kUnreachable = -1;

    DistanceMatrix() = default;
    explicit DistanceMatrix(std::size_t n) : n_(n), dist_(n * n, kUnreachable) {}

    std::size_t order() const { return n_; }
    std::int32_t at(Vertex u, Vertex v) const { return dist_[index(u, v)]; }
    bool reachable(Vertex u, Vertex v) const { return at(u, v) != kUnreachable; }
    void set(Vertex u, Vertex v, std::int32_t d) { dist_[index(u, v)] = d; }

    std::span<const std::int32_t> row(Vertex u) const {
        return {dist_.data() + static_cast<std::size_t>(u) * n_, n_};
    }

private:
    std::size_t index(Vertex u, Vertex v) const {
        return static_cast<std::size_t>(u) * n_ + static_cast<std::size_t>(v);
    }

    std::size_t n_ = 0;
    std::vector<std::int32_t> dist_;
};

// Hop distances from source; kUnreachable where no path exists.
std::vector<std::int32_t> bfs_distances(const Graph& g, Vertex source);

DistanceMatrix all_pairs_distances(const Graph& g);

// True iff a BFS from vertex 0 reaches every vertex. Graphs with n <= 1 are
// connected.
bool is_connected(const Graph& g);

// Mean shortest-path distance over unordered vertex pairs:
//   2 / (n (n - 1)) * sum_{u < v} d(u, v)
// Throws DomainError for n < 2 or a disconnected graph.
double average_distance(const Graph& g);
double average_distance(const DistanceMatrix& dist);

std::size_t max_degree(const Graph& g);

// Vertices of degree exactly one, ascending.
std::vector<Vertex> leaves(const Graph& g);

} // namespace mvis

#endif
