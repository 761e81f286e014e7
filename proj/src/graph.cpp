#include "mvis/graph.hpp"

#include <algorithm>

namespace mvis {

Graph Graph::from_edge_list(std::size_t n, std::span<const Edge> edges) {
    Graph g;
    g.adjacency_.resize(n);
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || static_cast<std::size_t>(u) >= n || static_cast<std::size_t>(v) >= n) {
            throw InvalidGraph("vertex id out of range in edge (" + std::to_string(u) + ", " +
                               std::to_string(v) + ") for n = " + std::to_string(n));
        }
        if (u == v) {
            throw InvalidGraph("self-loop (" + std::to_string(u) + ", " + std::to_string(v) + ")");
        }
        g.adjacency_[static_cast<std::size_t>(u)].push_back(v);
        g.adjacency_[static_cast<std::size_t>(v)].push_back(u);
    }
    std::size_t total = 0;
    for (auto& adj : g.adjacency_) {
        std::sort(adj.begin(), adj.end());
        adj.erase(std::unique(adj.begin(), adj.end()), adj.end());
        total += adj.size();
    }
    g.m_ = total / 2;
    return g;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
    auto adj = neighbors(u);
    return std::binary_search(adj.begin(), adj.end(), v);
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(m_);
    for (std::size_t u = 0; u < adjacency_.size(); ++u) {
        for (Vertex v : adjacency_[u]) {
            if (static_cast<std::size_t>(v) > u) out.emplace_back(static_cast<Vertex>(u), v);
        }
    }
    return out;
}

std::vector<std::int32_t> bfs_distances(const Graph& g, Vertex source) {
    std::vector<std::int32_t> dist(g.order(), DistanceMatrix::kUnreachable);
    std::vector<Vertex> queue;
    queue.reserve(g.order());
    dist[static_cast<std::size_t>(source)] = 0;
    queue.push_back(source);
    for (std::size_t head = 0; head < queue.size(); ++head) {
        Vertex x = queue[head];
        for (Vertex y : g.neighbors(x)) {
            auto& dy = dist[static_cast<std::size_t>(y)];
            if (dy == DistanceMatrix::kUnreachable) {
                dy = dist[static_cast<std::size_t>(x)] + 1;
                queue.push_back(y);
            }
        }
    }
    return dist;
}

DistanceMatrix all_pairs_distances(const Graph& g) {
    const auto n = g.order();
    DistanceMatrix dm(n);
    for (std::size_t s = 0; s < n; ++s) {
        auto row = bfs_distances(g, static_cast<Vertex>(s));
        for (std::size_t t = 0; t < n; ++t) dm.set(static_cast<Vertex>(s), static_cast<Vertex>(t), row[t]);
    }
    return dm;
}

bool is_connected(const Graph& g) {
    if (g.order() <= 1) return true;
    auto dist = bfs_distances(g, 0);
    return std::none_of(dist.begin(), dist.end(),
                        [](std::int32_t d) { return d == DistanceMatrix::kUnreachable; });
}

double average_distance(const DistanceMatrix& dist) {
    const auto n = dist.order();
    if (n < 2) throw DomainError("average distance needs at least two vertices");
    std::uint64_t total = 0;
    for (std::size_t u = 0; u < n; ++u) {
        for (std::size_t v = u + 1; v < n; ++v) {
            auto d = dist.at(static_cast<Vertex>(u), static_cast<Vertex>(v));
            if (d == DistanceMatrix::kUnreachable) {
                throw DomainError("average distance undefined for a disconnected graph");
            }
            total += static_cast<std::uint64_t>(d);
        }
    }
    const double pairs = static_cast<double>(n) * static_cast<double>(n - 1);
    return 2.0 * static_cast<double>(total) / pairs;
}

double average_distance(const Graph& g) {
    if (g.order() < 2) throw DomainError("average distance needs at least two vertices");
    return average_distance(all_pairs_distances(g));
}

std::size_t max_degree(const Graph& g) {
    std::size_t best = 0;
    for (std::size_t v = 0; v < g.order(); ++v) best = std::max(best, g.degree(static_cast<Vertex>(v)));
    return best;
}

std::vector<Vertex> leaves(const Graph& g) {
    std::vector<Vertex> out;
    for (std::size_t v = 0; v < g.order(); ++v) {
        if (g.degree(static_cast<Vertex>(v)) == 1) out.push_back(static_cast<Vertex>(v));
    }
    return out;
}

} // namespace mvis
