#include "mvis/generators.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <queue>
#include <sstream>

#include "mvis/random.hpp"

namespace mvis {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

std::string format_real(double x) {
    char buf[64];
    auto r = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, r.ptr);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    std::istringstream in(s);
    while (std::getline(in, cur, sep)) parts.push_back(cur);
    return parts;
}

std::size_t parse_size(const std::string& s) {
    std::size_t v = 0;
    auto r = std::from_chars(s.data(), s.data() + s.size(), v);
    if (r.ec != std::errc{} || r.ptr != s.data() + s.size()) {
        throw std::invalid_argument("bad integer parameter '" + s + "'");
    }
    return v;
}

double parse_real(const std::string& s) {
    double v = 0;
    auto r = std::from_chars(s.data(), s.data() + s.size(), v);
    if (r.ec != std::errc{} || r.ptr != s.data() + s.size()) {
        throw std::invalid_argument("bad real parameter '" + s + "'");
    }
    return v;
}

void require(bool ok, const std::string& msg) {
    if (!ok) throw InvalidGraph(msg);
}

} // namespace

std::string class_name(const GraphClassSpec& spec) {
    return std::visit(overloaded{
                          [](const gclass::Complete&) { return "complete"; },
                          [](const gclass::Tree&) { return "tree"; },
                          [](const gclass::Path&) { return "path"; },
                          [](const gclass::Cycle&) { return "cycle"; },
                          [](const gclass::Grid&) { return "grid"; },
                          [](const gclass::Torus&) { return "torus"; },
                          [](const gclass::MycielskianCycle&) { return "mycielskian_cycle"; },
                          [](const gclass::MycielskianPath&) { return "mycielskian_path"; },
                          [](const gclass::MycielskianStar&) { return "mycielskian_star"; },
                          [](const gclass::GeneralizedPetersen&) { return "generalized_petersen"; },
                          [](const gclass::ErdosRenyi&) { return "erdos_renyi"; },
                      },
                      spec);
}

std::string class_params(const GraphClassSpec& spec) {
    return std::visit(overloaded{
                          [](const gclass::Grid& c) { return std::to_string(c.rows) + "," + std::to_string(c.cols); },
                          [](const gclass::Torus& c) { return std::to_string(c.rows) + "," + std::to_string(c.cols); },
                          [](const gclass::GeneralizedPetersen& c) {
                              return std::to_string(c.n) + "," + std::to_string(c.k);
                          },
                          [](const gclass::ErdosRenyi& c) { return std::to_string(c.n) + "," + format_real(c.p); },
                          [](const gclass::MycielskianStar& c) { return std::to_string(c.k); },
                          [](const auto& c) { return std::to_string(c.n); },
                      },
                      spec);
}

GraphClassSpec parse_class_spec(const std::string& name, const std::string& params) {
    auto p = split(params, ',');
    auto want = [&](std::size_t count) {
        if (p.size() != count) {
            throw std::invalid_argument("class '" + name + "' takes " + std::to_string(count) + " parameter(s)");
        }
    };
    if (name == "complete") { want(1); return gclass::Complete{parse_size(p[0])}; }
    if (name == "tree") { want(1); return gclass::Tree{parse_size(p[0])}; }
    if (name == "path") { want(1); return gclass::Path{parse_size(p[0])}; }
    if (name == "cycle") { want(1); return gclass::Cycle{parse_size(p[0])}; }
    if (name == "grid") { want(2); return gclass::Grid{parse_size(p[0]), parse_size(p[1])}; }
    if (name == "torus") { want(2); return gclass::Torus{parse_size(p[0]), parse_size(p[1])}; }
    if (name == "mycielskian_cycle") { want(1); return gclass::MycielskianCycle{parse_size(p[0])}; }
    if (name == "mycielskian_path") { want(1); return gclass::MycielskianPath{parse_size(p[0])}; }
    if (name == "mycielskian_star") { want(1); return gclass::MycielskianStar{parse_size(p[0])}; }
    if (name == "generalized_petersen") {
        want(2);
        return gclass::GeneralizedPetersen{parse_size(p[0]), parse_size(p[1])};
    }
    if (name == "erdos_renyi") { want(2); return gclass::ErdosRenyi{parse_size(p[0]), parse_real(p[1])}; }
    throw std::invalid_argument("unknown graph class '" + name + "'");
}

bool is_category_two(const GraphClassSpec& spec) {
    return std::holds_alternative<gclass::GeneralizedPetersen>(spec) ||
           std::holds_alternative<gclass::ErdosRenyi>(spec);
}

void validate(const GraphClassSpec& spec) {
    std::visit(overloaded{
                   [](const gclass::Cycle& c) { require(c.n >= 3, "cycle needs n >= 3"); },
                   [](const gclass::MycielskianCycle& c) { require(c.n >= 3, "mycielskian_cycle needs n >= 3"); },
                   [](const gclass::MycielskianStar& c) { require(c.k >= 1, "mycielskian_star needs k >= 1"); },
                   [](const gclass::Grid& c) { require(c.rows >= 1 && c.cols >= 1, "grid needs m, n >= 1"); },
                   [](const gclass::Torus& c) {
                       require(c.rows >= 3 && c.cols >= 3, "torus needs m, n >= 3 to stay simple");
                   },
                   [](const gclass::GeneralizedPetersen& c) {
                       require(c.n >= 3 && c.k >= 1 && 2 * c.k < c.n, "generalized_petersen needs n >= 3, 1 <= k < n/2");
                   },
                   [](const gclass::ErdosRenyi& c) {
                       require(c.n >= 1, "erdos_renyi needs n >= 1");
                       require(c.p > 0.0 && c.p <= 1.0, "erdos_renyi needs 0 < p <= 1");
                   },
                   [](const auto& c) { require(c.n >= 1, "size parameter must be >= 1"); },
               },
               spec);
}

std::size_t expected_order(const GraphClassSpec& spec) {
    return std::visit(overloaded{
                          [](const gclass::Grid& c) { return c.rows * c.cols; },
                          [](const gclass::Torus& c) { return c.rows * c.cols; },
                          [](const gclass::MycielskianCycle& c) { return 2 * c.n + 1; },
                          [](const gclass::MycielskianPath& c) { return 2 * c.n + 1; },
                          [](const gclass::MycielskianStar& c) { return 2 * (c.k + 1) + 1; },
                          [](const gclass::GeneralizedPetersen& c) { return 2 * c.n; },
                          [](const auto& c) { return c.n; },
                      },
                      spec);
}

Graph complete_graph(std::size_t n) {
    std::vector<Edge> e;
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v) e.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    return Graph::from_edge_list(n, e);
}

Graph path_graph(std::size_t n) {
    std::vector<Edge> e;
    for (std::size_t i = 0; i + 1 < n; ++i) e.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(i + 1));
    return Graph::from_edge_list(n, e);
}

Graph cycle_graph(std::size_t n) {
    require(n >= 3, "cycle needs n >= 3");
    std::vector<Edge> e;
    for (std::size_t i = 0; i < n; ++i) e.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>((i + 1) % n));
    return Graph::from_edge_list(n, e);
}

Graph star_graph(std::size_t k) {
    std::vector<Edge> e;
    for (std::size_t i = 1; i <= k; ++i) e.emplace_back(0, static_cast<Vertex>(i));
    return Graph::from_edge_list(k + 1, e);
}

Graph grid_graph(std::size_t rows, std::size_t cols) {
    auto id = [cols](std::size_t r, std::size_t c) { return static_cast<Vertex>(r * cols + c); };
    std::vector<Edge> e;
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) {
            if (c + 1 < cols) e.emplace_back(id(r, c), id(r, c + 1));
            if (r + 1 < rows) e.emplace_back(id(r, c), id(r + 1, c));
        }
    }
    return Graph::from_edge_list(rows * cols, e);
}

Graph torus_graph(std::size_t rows, std::size_t cols) {
    require(rows >= 3 && cols >= 3, "torus needs m, n >= 3 to stay simple");
    auto id = [cols](std::size_t r, std::size_t c) { return static_cast<Vertex>(r * cols + c); };
    std::vector<Edge> e;
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) {
            e.emplace_back(id(r, c), id(r, (c + 1) % cols));
            e.emplace_back(id(r, c), id((r + 1) % rows, c));
        }
    }
    return Graph::from_edge_list(rows * cols, e);
}

Graph generalized_petersen(std::size_t n, std::size_t k) {
    validate(gclass::GeneralizedPetersen{n, k});
    std::vector<Edge> e;
    for (std::size_t i = 0; i < n; ++i) {
        e.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>((i + 1) % n));
        e.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(n + i));
        e.emplace_back(static_cast<Vertex>(n + i), static_cast<Vertex>(n + (i + k) % n));
    }
    return Graph::from_edge_list(2 * n, e);
}

Graph mycielskian(const Graph& g) {
    const auto n = g.order();
    auto edges = g.edges();
    const auto apex = static_cast<Vertex>(2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        const auto shadow = static_cast<Vertex>(n + i);
        for (Vertex x : g.neighbors(static_cast<Vertex>(i))) edges.emplace_back(shadow, x);
        edges.emplace_back(shadow, apex);
    }
    return Graph::from_edge_list(2 * n + 1, edges);
}

Graph random_tree(std::size_t n, std::uint64_t seed) {
    if (n <= 1) return Graph::from_edge_list(n, {});
    if (n == 2) {
        const Edge e{0, 1};
        return Graph::from_edge_list(2, std::span(&e, 1));
    }
    Rng rng(seed);
    std::vector<Vertex> code(n - 2);
    for (auto& c : code) c = static_cast<Vertex>(rng.uniform_below(n));

    // Pruefer decoding: repeatedly join the smallest current leaf to the next
    // code entry.
    std::vector<std::size_t> degree(n, 1);
    for (Vertex c : code) ++degree[static_cast<std::size_t>(c)];
    std::priority_queue<Vertex, std::vector<Vertex>, std::greater<>> leaf_heap;
    for (std::size_t v = 0; v < n; ++v)
        if (degree[v] == 1) leaf_heap.push(static_cast<Vertex>(v));

    std::vector<Edge> edges;
    edges.reserve(n - 1);
    for (Vertex c : code) {
        Vertex leaf = leaf_heap.top();
        leaf_heap.pop();
        edges.emplace_back(leaf, c);
        if (--degree[static_cast<std::size_t>(c)] == 1) leaf_heap.push(c);
    }
    Vertex a = leaf_heap.top();
    leaf_heap.pop();
    Vertex b = leaf_heap.top();
    edges.emplace_back(a, b);
    return Graph::from_edge_list(n, edges);
}

Graph erdos_renyi_connected(std::size_t n, double p, std::uint64_t seed) {
    validate(gclass::ErdosRenyi{n, p});
    for (int attempt = 0; attempt < kErdosRenyiMaxAttempts; ++attempt) {
        Rng rng(derive_seed(seed, static_cast<std::uint64_t>(attempt)));
        std::vector<Edge> edges;
        for (std::size_t u = 0; u < n; ++u)
            for (std::size_t v = u + 1; v < n; ++v)
                if (rng.bernoulli(p)) edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
        auto g = Graph::from_edge_list(n, edges);
        if (is_connected(g)) return g;
    }
    throw GenerationError("no connected G(" + std::to_string(n) + ", " + format_real(p) + ") sample in " +
                          std::to_string(kErdosRenyiMaxAttempts) + " attempts");
}

Graph generate(const GraphClassSpec& spec, std::uint64_t seed) {
    validate(spec);
    return std::visit(overloaded{
                          [](const gclass::Complete& c) { return complete_graph(c.n); },
                          [&](const gclass::Tree& c) { return random_tree(c.n, seed); },
                          [](const gclass::Path& c) { return path_graph(c.n); },
                          [](const gclass::Cycle& c) { return cycle_graph(c.n); },
                          [](const gclass::Grid& c) { return grid_graph(c.rows, c.cols); },
                          [](const gclass::Torus& c) { return torus_graph(c.rows, c.cols); },
                          [](const gclass::MycielskianCycle& c) { return mycielskian(cycle_graph(c.n)); },
                          [](const gclass::MycielskianPath& c) { return mycielskian(path_graph(c.n)); },
                          [](const gclass::MycielskianStar& c) { return mycielskian(star_graph(c.k)); },
                          [](const gclass::GeneralizedPetersen& c) { return generalized_petersen(c.n, c.k); },
                          [&](const gclass::ErdosRenyi& c) { return erdos_renyi_connected(c.n, c.p, seed); },
                      },
                      spec);
}

std::string to_string(MuKind kind) {
    switch (kind) {
    case MuKind::Exact: return "exact";
    case MuKind::UpperBound: return "upper_bound";
    case MuKind::Unknown: return "unknown";
    }
    return "unknown";
}

KnownMu known_mu(const GraphClassSpec& spec, const Graph& g) {
    if (g.order() != expected_order(spec)) {
        throw std::invalid_argument("graph with " + std::to_string(g.order()) + " vertices does not match " +
                                    class_name(spec) + "(" + class_params(spec) + ")");
    }
    auto tree_like = [&]() {
        // A single vertex has no leaves but is trivially an MV set of size 1.
        if (g.order() == 1) return KnownMu::exact(1);
        return KnownMu::exact(leaves(g).size());
    };
    return std::visit(overloaded{
                          [](const gclass::Complete& c) { return KnownMu::exact(c.n); },
                          [&](const gclass::Tree&) { return tree_like(); },
                          [&](const gclass::Path&) { return tree_like(); },
                          [](const gclass::Grid& c) {
                              if (c.rows > 3 && c.cols > 3) return KnownMu::exact(2 * std::min(c.rows, c.cols));
                              return KnownMu::unknown();
                          },
                          [](const gclass::Torus& c) {
                              const auto side = std::min(c.rows, c.cols);
                              if (side == 12 || side == 15) return KnownMu::exact(3 * side);
                              return KnownMu::upper_bound(3 * side);
                          },
                          [](const gclass::MycielskianCycle& c) {
                              if (c.n >= 8) return KnownMu::exact(c.n + c.n / 4);
                              if (c.n >= 4) return KnownMu::exact(c.n + 2);
                              return KnownMu::unknown();
                          },
                          [](const gclass::MycielskianPath& c) {
                              if (c.n >= 5) return KnownMu::exact(c.n + (c.n + 1) / 4);
                              if (c.n == 4) return KnownMu::exact(6);
                              return KnownMu::unknown();
                          },
                          [](const gclass::MycielskianStar& c) { return KnownMu::exact(2 * c.k + 1); },
                          [](const auto&) { return KnownMu::unknown(); },
                      },
                      spec);
}

std::string to_string(Category c) { return c == Category::N10 ? "n10" : "n100"; }

Category parse_category(const std::string& s) {
    if (s == "n10") return Category::N10;
    if (s == "n100") return Category::N100;
    throw std::invalid_argument("unknown suite category '" + s + "' (expected n10 or n100)");
}

namespace {

struct SuiteEntry {
    std::string id;
    GraphClassSpec spec;
};

std::vector<SuiteEntry> suite_entries(Category category) {
    std::vector<SuiteEntry> out;
    const std::string pre = to_string(category) + "-";
    const bool small = category == Category::N10;
    const std::size_t n = small ? 10 : 100;
    const std::string ns = std::to_string(n);

    out.push_back({pre + "complete-" + ns, gclass::Complete{n}});
    for (int i = 0; i < 5; ++i) out.push_back({pre + "tree-" + ns + "-r" + std::to_string(i), gclass::Tree{n}});
    if (small) {
        out.push_back({pre + "grid-2x5", gclass::Grid{2, 5}});
        out.push_back({pre + "grid-3x4", gclass::Grid{3, 4}});
        out.push_back({pre + "mycielskian_cycle-4", gclass::MycielskianCycle{4}});
        out.push_back({pre + "mycielskian_path-4", gclass::MycielskianPath{4}});
        out.push_back({pre + "mycielskian_star-4", gclass::MycielskianStar{4}});
        out.push_back({pre + "generalized_petersen-5-2", gclass::GeneralizedPetersen{5, 2}});
    } else {
        out.push_back({pre + "grid-10x10", gclass::Grid{10, 10}});
        out.push_back({pre + "grid-4x25", gclass::Grid{4, 25}});
        out.push_back({pre + "torus-10x10", gclass::Torus{10, 10}});
        out.push_back({pre + "mycielskian_cycle-49", gclass::MycielskianCycle{49}});
        out.push_back({pre + "mycielskian_path-49", gclass::MycielskianPath{49}});
        out.push_back({pre + "mycielskian_star-49", gclass::MycielskianStar{49}});
        out.push_back({pre + "generalized_petersen-50-2", gclass::GeneralizedPetersen{50, 2}});
        out.push_back({pre + "generalized_petersen-50-7", gclass::GeneralizedPetersen{50, 7}});
    }
    const std::vector<double> probs = small ? std::vector<double>{0.2, 0.3, 0.5} : std::vector<double>{0.05, 0.1, 0.2};
    for (std::size_t i = 0; i < 5; ++i) {
        const double p = probs[i % probs.size()];
        out.push_back({pre + "erdos_renyi-" + ns + "-" + format_real(p) + "-r" + std::to_string(i),
                       gclass::ErdosRenyi{n, p}});
    }
    return out;
}

} // namespace

std::vector<Instance> build_suite(Category category, std::uint64_t seed) {
    std::vector<Instance> suite;
    for (auto& entry : suite_entries(category)) {
        const auto instance_seed = derive_seed(seed, entry.id);
        auto g = generate(entry.spec, instance_seed);
        auto known = known_mu(entry.spec, g);
        suite.push_back({entry.id, entry.spec, std::move(g), known, category, instance_seed});
    }
    return suite;
}

std::string manifest_tsv(const std::vector<Instance>& suite) {
    std::ostringstream out;
    out << "id\tclass\tparams\tn\tm\tknown_kind\tknown_value\tcategory\tseed\n";
    for (const auto& inst : suite) {
        out << inst.id << '\t' << class_name(inst.spec) << '\t' << class_params(inst.spec) << '\t'
            << inst.graph.order() << '\t' << inst.graph.size() << '\t' << to_string(inst.known.kind) << '\t';
        if (inst.known.value) out << *inst.known.value;
        out << '\t' << to_string(inst.category) << '\t' << inst.seed << '\n';
    }
    return out.str();
}

} // namespace mvis
