#include "mvis/graph_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

namespace mvis {

FormatError::FormatError(std::size_t line, const std::string& what)
    : std::runtime_error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
      line_(line) {}

namespace {

// Parses exactly two space-separated unsigned integers.
bool parse_pair(const std::string& line, std::uint64_t& a, std::uint64_t& b) {
    const char* p = line.data();
    const char* end = p + line.size();
    auto r1 = std::from_chars(p, end, a);
    if (r1.ec != std::errc{} || r1.ptr == p || r1.ptr == end || *r1.ptr != ' ') return false;
    const char* q = r1.ptr + 1;
    auto r2 = std::from_chars(q, end, b);
    return r2.ec == std::errc{} && r2.ptr != q && r2.ptr == end;
}

} // namespace

Graph read_graph(std::istream& in) {
    std::string line;
    std::size_t lineno = 0;
    bool have_header = false;
    std::uint64_t n = 0;
    std::uint64_t m = 0;
    std::vector<Edge> edges;

    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') throw FormatError(lineno, "CR line ending");
        if (!line.empty() && line.front() == '#') continue;
        if (!have_header) {
            if (!parse_pair(line, n, m)) throw FormatError(lineno, "malformed header, expected 'n m'");
            if (n > static_cast<std::uint64_t>(INT32_MAX)) throw FormatError(lineno, "vertex count too large");
            if (m > n * (n - (n > 0 ? 1 : 0)) / 2) throw FormatError(lineno, "edge count exceeds n(n-1)/2");
            have_header = true;
            edges.reserve(m);
            continue;
        }
        if (edges.size() == m) throw FormatError(lineno, "more edge lines than declared");
        std::uint64_t u = 0;
        std::uint64_t v = 0;
        if (!parse_pair(line, u, v)) throw FormatError(lineno, "malformed edge line, expected 'u v'");
        if (u >= n || v >= n) throw FormatError(lineno, "vertex id out of range");
        if (u == v) throw FormatError(lineno, "self-loop");
        if (u > v) throw FormatError(lineno, "edge endpoints not ordered (need u < v)");
        Edge e{static_cast<Vertex>(u), static_cast<Vertex>(v)};
        if (!edges.empty()) {
            if (e == edges.back()) throw FormatError(lineno, "duplicate edge");
            if (e < edges.back()) throw FormatError(lineno, "edges out of order");
        }
        edges.push_back(e);
    }
    if (!have_header) throw FormatError(0, "missing header");
    if (edges.size() != m) {
        throw FormatError(0, "expected " + std::to_string(m) + " edges, found " + std::to_string(edges.size()));
    }
    return Graph::from_edge_list(static_cast<std::size_t>(n), edges);
}

Graph read_graph(const std::string& text) {
    std::istringstream in(text);
    return read_graph(in);
}

Graph read_graph_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    return read_graph(in);
}

void write_graph(std::ostream& out, const Graph& g) {
    out << g.order() << ' ' << g.size() << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

std::string write_graph(const Graph& g) {
    std::ostringstream out;
    write_graph(out, g);
    return out.str();
}

void write_graph_file(const std::filesystem::path& path, const Graph& g) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    write_graph(out, g);
}

} // namespace mvis
