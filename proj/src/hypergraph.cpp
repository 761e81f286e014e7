#include "mvis/hypergraph.hpp"

#include <algorithm>
#include <stdexcept>

namespace mvis {

Hypergraph::Hypergraph(std::size_t n, std::vector<HyperEdge> edges) : edges_(std::move(edges)), degree_(n, 0) {
    for (auto& e : edges_) {
        std::sort(e.begin(), e.end());
        if (e[0] < 0 || static_cast<std::size_t>(e[2]) >= n) throw std::invalid_argument("hyperedge vertex out of range");
        if (e[0] == e[1] || e[1] == e[2]) throw std::invalid_argument("hyperedge needs three distinct vertices");
    }
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
    for (const auto& e : edges_)
        for (Vertex v : e) ++degree_[static_cast<std::size_t>(v)];
}

namespace {

// BFS parents with the smallest-id-neighbour-in-previous-layer rule. Since
// adjacency lists are sorted, that neighbour is simply the first one found at
// level - 1.
std::vector<Vertex> canonical_parents(const Graph& g, const std::vector<std::int32_t>& level) {
    std::vector<Vertex> parent(g.order(), -1);
    for (std::size_t v = 0; v < g.order(); ++v) {
        const auto lv = level[v];
        if (lv <= 0) continue;
        for (Vertex y : g.neighbors(static_cast<Vertex>(v))) {
            if (level[static_cast<std::size_t>(y)] == lv - 1) {
                parent[v] = y;
                break;
            }
        }
    }
    return parent;
}

} // namespace

std::vector<Vertex> canonical_shortest_path(const Graph& g, Vertex u, Vertex v) {
    const Vertex root = std::min(u, v);
    const Vertex far = std::max(u, v);
    const auto level = bfs_distances(g, root);
    if (level[static_cast<std::size_t>(far)] == DistanceMatrix::kUnreachable) return {};
    const auto parent = canonical_parents(g, level);
    std::vector<Vertex> path{far};
    while (path.back() != root) path.push_back(parent[static_cast<std::size_t>(path.back())]);
    std::reverse(path.begin(), path.end());
    return path;
}

Hypergraph build_hypergraph(const Graph& g) {
    if (!is_connected(g)) throw DomainError("hypergraph construction needs a connected graph");
    const auto n = g.order();
    std::vector<HyperEdge> edges;
    for (std::size_t r = 0; r < n; ++r) {
        const auto root = static_cast<Vertex>(r);
        const auto level = bfs_distances(g, root);
        const auto parent = canonical_parents(g, level);
        for (std::size_t v = r + 1; v < n; ++v) {
            if (level[v] < 2) continue;
            for (Vertex x = parent[v]; x != root; x = parent[static_cast<std::size_t>(x)]) {
                edges.push_back({root, x, static_cast<Vertex>(v)});
            }
        }
    }
    return Hypergraph(n, std::move(edges));
}

CandidateSet greedy_independent_set(const Hypergraph& h, std::size_t* removals) {
    const auto n = h.order();
    const auto edges = h.edges();
    std::vector<std::vector<std::size_t>> incident(n);
    std::vector<std::size_t> degree(n, 0);
    for (std::size_t i = 0; i < edges.size(); ++i) {
        for (Vertex v : edges[i]) {
            incident[static_cast<std::size_t>(v)].push_back(i);
            ++degree[static_cast<std::size_t>(v)];
        }
    }
    std::vector<std::uint8_t> edge_alive(edges.size(), 1);
    std::vector<std::uint8_t> in_set(n, 1);
    std::size_t alive = edges.size();
    std::size_t steps = 0;

    while (alive > 0) {
        std::size_t pick = 0;
        for (std::size_t v = 1; v < n; ++v)
            if (degree[v] > degree[pick]) pick = v;
        in_set[pick] = 0;
        ++steps;
        for (std::size_t e : incident[pick]) {
            if (!edge_alive[e]) continue;
            edge_alive[e] = 0;
            --alive;
            for (Vertex w : edges[e]) --degree[static_cast<std::size_t>(w)];
        }
    }
    if (removals) *removals = steps;
    return CandidateSet::from_mask(in_set);
}

bool is_independent(const Hypergraph& h, const CandidateSet& s) {
    return std::none_of(h.edges().begin(), h.edges().end(), [&](const HyperEdge& e) {
        return s.contains(e[0]) && s.contains(e[1]) && s.contains(e[2]);
    });
}

} // namespace mvis
