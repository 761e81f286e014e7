#ifndef MVIS_GENERATORS_HPP
#define MVIS_GENERATORS_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "mvis/graph.hpp"

namespace mvis {

// Graph classes used for evaluation. Canonical labelings:
//   Complete   0..n-1
//   Path       0-1-...-(n-1)
//   Cycle      path plus (n-1, 0)
//   Tree       uniform labeled tree decoded from a seeded Pruefer sequence
//   Grid       row-major, vertex (r, c) -> r * cols + c
//   Torus      grid plus wrap edges in both dimensions
//   Mycielskian*  see mycielskian(); base star K_{1,k} has center 0
//   GeneralizedPetersen  outer 0..n-1, inner n..2n-1, spokes i~n+i,
//                        inner n+i ~ n+((i+k) mod n)
//   ErdosRenyi each pair independently with probability p, resampled until
//              connected
namespace gclass {
struct Complete { std::size_t n; };
struct Tree { std::size_t n; };
struct Path { std::size_t n; };
struct Cycle { std::size_t n; };
struct Grid { std::size_t rows; std::size_t cols; };
struct Torus { std::size_t rows; std::size_t cols; };
struct MycielskianCycle { std::size_t n; };
struct MycielskianPath { std::size_t n; };
struct MycielskianStar { std::size_t k; };
struct GeneralizedPetersen { std::size_t n; std::size_t k; };
struct ErdosRenyi { std::size_t n; double p; };
} // namespace gclass

using GraphClassSpec =
    std::variant<gclass::Complete, gclass::Tree, gclass::Path, gclass::Cycle, gclass::Grid, gclass::Torus,
                 gclass::MycielskianCycle, gclass::MycielskianPath, gclass::MycielskianStar,
                 gclass::GeneralizedPetersen, gclass::ErdosRenyi>;

// Raised when random generation cannot satisfy its postcondition, e.g. no
// connected G(n, p) sample within the retry budget.
class GenerationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline constexpr int kErdosRenyiMaxAttempts = 1000;

// Short snake_case class name ("grid", "mycielskian_cycle", ...).
std::string class_name(const GraphClassSpec& spec);
// Comma-separated parameters ("3,4", "10,0.300000").
std::string class_params(const GraphClassSpec& spec);
// Inverse of class_name/class_params. Throws std::invalid_argument.
GraphClassSpec parse_class_spec(const std::string& name, const std::string& params);

// Category 1 classes have a validation formula for mu; category 2 do not.
bool is_category_two(const GraphClassSpec& spec);

// Throws InvalidGraph if parameters are out of range.
void validate(const GraphClassSpec& spec);

// Vertex count generate() will produce.
std::size_t expected_order(const GraphClassSpec& spec);

// Deterministic in (spec, seed); the seed only matters for Tree and
// ErdosRenyi.
Graph generate(const GraphClassSpec& spec, std::uint64_t seed);

// Originals keep ids 0..n-1, shadow u_i gets n+i, apex gets 2n.
Graph mycielskian(const Graph& g);

Graph complete_graph(std::size_t n);
Graph path_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
Graph star_graph(std::size_t k);
Graph grid_graph(std::size_t rows, std::size_t cols);
Graph torus_graph(std::size_t rows, std::size_t cols);
Graph generalized_petersen(std::size_t n, std::size_t k);
Graph random_tree(std::size_t n, std::uint64_t seed);
Graph erdos_renyi_connected(std::size_t n, double p, std::uint64_t seed);

enum class MuKind { Exact, UpperBound, Unknown };

struct KnownMu {
    MuKind kind = MuKind::Unknown;
    std::optional<std::size_t> value;

    static KnownMu exact(std::size_t v) { return {MuKind::Exact, v}; }
    static KnownMu upper_bound(std::size_t v) { return {MuKind::UpperBound, v}; }
    static KnownMu unknown() { return {}; }

    friend bool operator==(const KnownMu&, const KnownMu&) = default;
};

std::string to_string(MuKind kind);

// Validation value of mu(G) for the class. Throws std::invalid_argument if g
// does not have the vertex count the class produces.
KnownMu known_mu(const GraphClassSpec& spec, const Graph& g);

enum class Category { N10, N100 };

std::string to_string(Category c);
Category parse_category(const std::string& s);

struct Instance {
    std::string id;
    GraphClassSpec spec;
    Graph graph;
    KnownMu known;
    Category category;
    std::uint64_t seed;
};

// Fixed per-category instance list, one or more per class. Random classes
// draw their seeds from derive_seed(seed, id).
std::vector<Instance> build_suite(Category category, std::uint64_t seed);

// TSV manifest: header `id class params n m known_kind known_value category
// seed`, one row per instance.
std::string manifest_tsv(const std::vector<Instance>& suite);

} // namespace mvis

#endif
