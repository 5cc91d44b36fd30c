#include "vcrit/graph6.hpp"

#include <fstream>

namespace vcrit {

namespace {

constexpr int kBias = 63;

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r' || s.back() == ' ' || s.back() == '\t'))
    s.remove_suffix(1);
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  return s;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
  text = trim(text);
  if (text.empty()) throw Graph6Error(Graph6ErrorKind::kEmpty, "graph6: empty input");
  for (char c : text) {
    const int b = static_cast<unsigned char>(c);
    if (b < 63 || b > 126)
      throw Graph6Error(Graph6ErrorKind::kByteOutOfRange, "graph6: byte " + std::to_string(b) + " outside [63,126]");
  }
  const int n = static_cast<unsigned char>(text[0]) - kBias;
  if (n > kMaxGraph6Order) throw Graph6Error(Graph6ErrorKind::kLongForm, "graph6: long-form orders are not supported");

  const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t body = (bits + 5) / 6;
  if (text.size() != body + 1)
    throw Graph6Error(Graph6ErrorKind::kBadLength, "graph6: expected " + std::to_string(body + 1) + " bytes for order " +
                                                       std::to_string(n) + ", got " + std::to_string(text.size()));

  Graph g(n);
  std::size_t k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const int byte = static_cast<unsigned char>(text[1 + k / 6]) - kBias;
      if ((byte >> (5 - k % 6)) & 1) g.add_edge(i, j);
    }
  }
  if (body > 0 && bits % 6 != 0) {
    const int last = static_cast<unsigned char>(text.back()) - kBias;
    const int pad = static_cast<int>(6 - bits % 6);
    if ((last & ((1 << pad) - 1)) != 0)
      throw Graph6Error(Graph6ErrorKind::kNonzeroPadding, "graph6: nonzero padding bits");
  }
  return g;
}

std::string emit_graph6(const Graph& g) {
  const int n = g.order();
  if (n > kMaxGraph6Order)
    throw Graph6Error(Graph6ErrorKind::kUnsupportedOrder, "graph6: order " + std::to_string(n) + " needs long form");
  const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  std::string out(1 + (bits + 5) / 6, static_cast<char>(kBias));
  out[0] = static_cast<char>(n + kBias);
  std::size_t k = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++k)
      if (g.adjacent(i, j)) out[1 + k / 6] = static_cast<char>(out[1 + k / 6] + (1 << (5 - k % 6)));
  return out;
}

std::vector<Graph> read_graph6_stream(std::istream& in) {
  std::vector<Graph> out;
  std::string line;
  while (std::getline(in, line)) {
    std::string_view view = trim(line);
    constexpr std::string_view kHeader = ">>graph6<<";
    if (view.starts_with(kHeader)) view.remove_prefix(kHeader.size());
    else if (view.starts_with(">>")) continue;
    if (view.empty()) continue;
    out.push_back(parse_graph6(view));
  }
  return out;
}

std::vector<Graph> read_graph6_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return read_graph6_stream(in);
}

}  // namespace vcrit
