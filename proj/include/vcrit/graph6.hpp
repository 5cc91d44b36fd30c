#pragma once

#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include "vcrit/graph.hpp"

namespace vcrit {

enum class Graph6ErrorKind {
  kEmpty,            // no bytes at all
  kLongForm,         // n >= 63 needs the long header, which is not supported
  kByteOutOfRange,   // byte outside [63, 126]
  kBadLength,        // body length does not match the order
  kNonzeroPadding,   // trailing pad bits in the last byte are set
  kUnsupportedOrder  // encoding a graph with more than 62 vertices
};

class Graph6Error : public std::runtime_error {
 public:
  Graph6Error(Graph6ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  Graph6ErrorKind kind() const { return kind_; }

 private:
  Graph6ErrorKind kind_;
};

inline constexpr int kMaxGraph6Order = 62;

Graph parse_graph6(std::string_view text);
std::string emit_graph6(const Graph& g);

/// Reads one graph per line; blank lines and ">>" header lines are skipped
/// (a ">>graph6<<" prefix glued to the first graph is stripped).
std::vector<Graph> read_graph6_stream(std::istream& in);
std::vector<Graph> read_graph6_file(const std::string& path);

}  // namespace vcrit
