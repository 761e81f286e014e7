#include "mvis/visibility.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace mvis {

CandidateSet::CandidateSet(std::vector<Vertex> members) : members_(std::move(members)) {
    std::sort(members_.begin(), members_.end());
    if (std::adjacent_find(members_.begin(), members_.end()) != members_.end()) {
        throw std::invalid_argument("candidate set contains a duplicate vertex");
    }
    if (!members_.empty() && members_.front() < 0) {
        throw std::invalid_argument("candidate set contains a negative vertex id");
    }
}

CandidateSet CandidateSet::from_mask(std::span<const std::uint8_t> mask) {
    CandidateSet s;
    for (std::size_t v = 0; v < mask.size(); ++v)
        if (mask[v]) s.members_.push_back(static_cast<Vertex>(v));
    return s;
}

bool CandidateSet::contains(Vertex v) const {
    return std::binary_search(members_.begin(), members_.end(), v);
}

VisibilityChecker::VisibilityChecker(const Graph& g) : graph_(&g), dist_(all_pairs_distances(g)) {}

VisibilityChecker::VisibilityChecker(const Graph& g, DistanceMatrix dist) : graph_(&g), dist_(std::move(dist)) {
    if (dist_.order() != g.order()) throw std::invalid_argument("distance matrix does not match graph order");
}

namespace {

void check_members(const Graph& g, std::span<const Vertex> members) {
    for (Vertex v : members) {
        if (v < 0 || static_cast<std::size_t>(v) >= g.order()) {
            throw std::out_of_range("vertex " + std::to_string(v) + " is not in a graph with " +
                                    std::to_string(g.order()) + " vertices");
        }
    }
}

} // namespace

std::size_t VisibilityChecker::scan(std::span<const Vertex> members, std::span<const std::uint8_t> mask, Mode mode,
                                    std::vector<Edge>* pairs) const {
    const auto& g = *graph_;
    const auto n = g.order();
    std::vector<std::int32_t> level(n, DistanceMatrix::kUnreachable);
    std::vector<Vertex> queue;
    queue.reserve(n);
    std::size_t violations = 0;

    auto record = [&](Vertex u, Vertex v) {
        ++violations;
        if (pairs) pairs->emplace_back(u, v);
    };

    for (std::size_t i = 0; i < members.size(); ++i) {
        const Vertex u = members[i];
        const auto row = dist_.row(u);

        // Partners v > u that need a search; adjacent pairs are always visible.
        std::int32_t horizon = 0;
        for (std::size_t j = i + 1; j < members.size(); ++j) {
            const auto d = row[static_cast<std::size_t>(members[j])];
            if (d == DistanceMatrix::kUnreachable) continue;
            horizon = std::max(horizon, d);
        }

        if (horizon >= 2) {
            level[static_cast<std::size_t>(u)] = 0;
            queue.push_back(u);
            for (std::size_t head = 0; head < queue.size(); ++head) {
                const Vertex x = queue[head];
                const auto lx = level[static_cast<std::size_t>(x)];
                if (x != u && mask[static_cast<std::size_t>(x)]) continue;
                if (lx + 1 > horizon) continue;
                for (Vertex y : g.neighbors(x)) {
                    auto& ly = level[static_cast<std::size_t>(y)];
                    if (ly == DistanceMatrix::kUnreachable) {
                        ly = lx + 1;
                        queue.push_back(y);
                    }
                }
            }
        }

        for (std::size_t j = i + 1; j < members.size(); ++j) {
            const Vertex v = members[j];
            const auto d = row[static_cast<std::size_t>(v)];
            bool visible;
            if (d == DistanceMatrix::kUnreachable) {
                visible = false;
            } else if (d <= 1) {
                visible = true;
            } else {
                visible = level[static_cast<std::size_t>(v)] == d;
            }
            if (!visible) {
                record(u, v);
                if (mode == Mode::FirstViolation) return violations;
            }
        }

        for (Vertex x : queue) level[static_cast<std::size_t>(x)] = DistanceMatrix::kUnreachable;
        queue.clear();
    }
    return violations;
}

ViolationReport VisibilityChecker::report(const CandidateSet& x) const {
    check_members(*graph_, x.members());
    std::vector<std::uint8_t> mask(graph_->order(), 0);
    for (Vertex v : x) mask[static_cast<std::size_t>(v)] = 1;
    ViolationReport r;
    r.count = scan(x.members(), mask, Mode::Report, &r.pairs);
    return r;
}

std::size_t VisibilityChecker::count(const CandidateSet& x) const {
    check_members(*graph_, x.members());
    std::vector<std::uint8_t> mask(graph_->order(), 0);
    for (Vertex v : x) mask[static_cast<std::size_t>(v)] = 1;
    return scan(x.members(), mask, Mode::Count, nullptr);
}

bool VisibilityChecker::is_mutual_visibility_set(const CandidateSet& x) const {
    check_members(*graph_, x.members());
    std::vector<std::uint8_t> mask(graph_->order(), 0);
    for (Vertex v : x) mask[static_cast<std::size_t>(v)] = 1;
    return scan(x.members(), mask, Mode::FirstViolation, nullptr) == 0;
}

std::optional<Edge> VisibilityChecker::first_violation(const CandidateSet& x) const {
    check_members(*graph_, x.members());
    std::vector<std::uint8_t> mask(graph_->order(), 0);
    for (Vertex v : x) mask[static_cast<std::size_t>(v)] = 1;
    std::vector<Edge> pairs;
    if (scan(x.members(), mask, Mode::FirstViolation, &pairs) == 0) return std::nullopt;
    return pairs.front();
}

std::size_t VisibilityChecker::count(std::span<const std::uint8_t> mask) const {
    if (mask.size() != graph_->order()) throw std::invalid_argument("membership mask length differs from n");
    std::vector<Vertex> members;
    for (std::size_t v = 0; v < mask.size(); ++v)
        if (mask[v]) members.push_back(static_cast<Vertex>(v));
    return scan(members, mask, Mode::Count, nullptr);
}

bool x_visible(const Graph& g, const DistanceMatrix& dist, Vertex u, Vertex v, const CandidateSet& x) {
    if (!dist.reachable(u, v)) return false;
    const auto target = dist.at(u, v);
    std::vector<std::int32_t> level(g.order(), DistanceMatrix::kUnreachable);
    std::vector<Vertex> queue{u};
    level[static_cast<std::size_t>(u)] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const Vertex a = queue[head];
        if (a == v) break;
        for (Vertex b : g.neighbors(a)) {
            if (b != v && x.contains(b)) continue;
            auto& lb = level[static_cast<std::size_t>(b)];
            if (lb == DistanceMatrix::kUnreachable) {
                lb = level[static_cast<std::size_t>(a)] + 1;
                queue.push_back(b);
            }
        }
    }
    return level[static_cast<std::size_t>(v)] == target;
}

ViolationReport violations(const Graph& g, const CandidateSet& x) {
    check_members(g, x.members());
    if (x.size() <= 1) return {};
    return VisibilityChecker(g).report(x);
}

bool is_mutual_visibility_set(const Graph& g, const CandidateSet& x) {
    check_members(g, x.members());
    if (x.size() <= 1) return true;
    return VisibilityChecker(g).is_mutual_visibility_set(x);
}

DegreeBound degree_lower_bound(const Graph& g) {
    if (g.order() == 0) throw std::invalid_argument("degree bound needs at least one vertex");
    Vertex best = 0;
    for (std::size_t v = 1; v < g.order(); ++v)
        if (g.degree(static_cast<Vertex>(v)) > g.degree(best)) best = static_cast<Vertex>(v);
    auto nbrs = g.neighbors(best);
    return {g.degree(best), CandidateSet(std::vector<Vertex>(nbrs.begin(), nbrs.end()))};
}

CandidateSet greedy_clique(const Graph& g) {
    std::vector<Vertex> candidates(g.order());
    for (std::size_t v = 0; v < g.order(); ++v) candidates[v] = static_cast<Vertex>(v);
    std::vector<Vertex> clique;
    while (!candidates.empty()) {
        Vertex pick = candidates.front();
        for (Vertex c : candidates)
            if (g.degree(c) > g.degree(pick)) pick = c;
        clique.push_back(pick);
        std::erase_if(candidates, [&](Vertex c) { return c == pick || !g.has_edge(pick, c); });
    }
    return CandidateSet(std::move(clique));
}

std::size_t clique_lower_bound(const Graph& g) { return greedy_clique(g).size(); }

double hypergraph_bound(const Graph& g) {
    const double avg = average_distance(g);
    return std::sqrt(static_cast<double>(g.order()) / avg);
}

} // namespace mvis
