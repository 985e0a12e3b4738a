#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "dicut/multigraph.hpp"

namespace dicut {

struct StreamEdge {
  VertexId from;
  VertexId to;
};

/// An ordered edge stream over vertices 1..n. Position in `edges` is the
/// stream index (0-based).
struct EdgeStream {
  std::uint64_t n = 0;
  std::vector<StreamEdge> edges;

  Multigraph to_graph() const;
};

/// Text format: '#' comment lines, then "n <N>", then one "u v" per line.
/// Blank lines are ignored. Throws ParseError with the 1-based line number.
EdgeStream parse_stream(std::istream& in);
EdgeStream read_stream(const std::filesystem::path& path);

void write_stream(std::ostream& out, const EdgeStream& s);
void write_stream(const std::filesystem::path& path, const EdgeStream& s);

}  // namespace dicut
