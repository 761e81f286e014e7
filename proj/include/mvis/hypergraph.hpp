#ifndef MVIS_HYPERGRAPH_HPP
#define MVIS_HYPERGRAPH_HPP

#include <array>
#include <cstddef>
#include <span>
#include <vector>

#include "mvis/graph.hpp"
#include "mvis/visibility.hpp"

namespace mvis {

// Sorted vertex triple.
using HyperEdge = std::array<Vertex, 3>;

// 3-uniform hypergraph on the vertices of a source graph. Edges are kept
// sorted and unique.
class Hypergraph {
public:
    Hypergraph() = default;
    // Throws std::invalid_argument for out-of-range or repeated members.
    Hypergraph(std::size_t n, std::vector<HyperEdge> edges);

    std::size_t order() const { return degree_.size(); }
    std::span<const HyperEdge> edges() const { return edges_; }
    std::size_t degree(Vertex v) const { return degree_[static_cast<std::size_t>(v)]; }

private:
    std::vector<HyperEdge> edges_;
    std::vector<std::size_t> degree_;
};

// Canonical shortest path between u and v, from min(u, v) to max(u, v).
// Every vertex's parent is its smallest-id neighbour one BFS layer closer to
// the root min(u, v). Empty if unreachable.
std::vector<Vertex> canonical_shortest_path(const Graph& g, Vertex u, Vertex v);

// For each non-adjacent pair {u, v}, adds {u, v, x} for every internal vertex
// x of the canonical shortest path. Throws DomainError if g is disconnected.
Hypergraph build_hypergraph(const Graph& g);

// Removes a maximum-degree vertex (smallest id on ties) and its incident
// edges until no edge remains; returns the surviving vertices.
CandidateSet greedy_independent_set(const Hypergraph& h, std::size_t* removals = nullptr);

bool is_independent(const Hypergraph& h, const CandidateSet& s);

} // namespace mvis

#endif
