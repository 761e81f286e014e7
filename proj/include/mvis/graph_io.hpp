#ifndef MVIS_GRAPH_IO_HPP
#define MVIS_GRAPH_IO_HPP

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>

#include "mvis/graph.hpp"

namespace mvis {

// Malformed graph text. line() is 1-based; 0 means the error is not tied to a
// single line (e.g. the file ended early).
class FormatError : public std::runtime_error {
public:
    FormatError(std::size_t line, const std::string& what);
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

// Text format:
//   # optional comment lines
//   n m
//   u v        (exactly m lines, u < v, strictly ascending)
// ASCII with LF line endings. Writing emits no comments, so canonical files
// round-trip byte for byte.
Graph read_graph(std::istream& in);
Graph read_graph(const std::string& text);
Graph read_graph_file(const std::filesystem::path& path);

void write_graph(std::ostream& out, const Graph& g);
std::string write_graph(const Graph& g);
void write_graph_file(const std::filesystem::path& path, const Graph& g);

} // namespace mvis

#endif
