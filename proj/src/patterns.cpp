#include "vcrit/patterns.hpp"

#include <cctype>
#include <charconv>
#include <map>
#include <optional>

namespace vcrit {

namespace {

using EdgeList = std::vector<std::pair<int, int>>;

struct Order4Entry {
  const char* name;
  EdgeList edges;
};

const std::vector<Order4Entry>& order4_table() {
  static const std::vector<Order4Entry> table = {
      {"4P1", {}},
      {"P2+2P1", {{0, 3}}},
      {"P3+P1", {{0, 3}, {1, 3}}},
      {"2P2", {{0, 2}, {1, 3}}},
      {"claw", {{0, 3}, {1, 3}, {2, 3}}},
      {"P4", {{0, 2}, {0, 3}, {1, 3}}},
      {"K3+P1", {{0, 2}, {0, 3}, {2, 3}}},
      {"paw", {{0, 2}, {0, 3}, {1, 3}, {2, 3}}},
      {"C4", {{0, 2}, {0, 3}, {1, 2}, {1, 3}}},
      {"diamond", {{0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}},
      {"K4", {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}},
  };
  return table;
}

void require(bool ok, const std::string& msg) {
  if (!ok) throw PatternError(msg);
}

Graph checked_union(const Graph& a, const Graph& b) {
  require(a.order() + b.order() <= kMaxOrder, "pattern exceeds 64 vertices");
  return disjoint_union(a, b);
}

Graph repeat(const Graph& g, int times) {
  require(times >= 0, "negative multiplicity");
  require(static_cast<long>(g.order()) * times <= kMaxOrder, "pattern exceeds 64 vertices");
  Graph out(0);
  for (int i = 0; i < times; ++i) out = disjoint_union(out, g);
  return out;
}

Graph cogem() { return disjoint_union(path_graph(4), Graph(1)); }

Graph gem() { return add_vertex(path_graph(4), VertexSet::first(4)); }

Graph bull() { return Graph(5, {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {1, 4}}); }

std::optional<int> parse_int(std::string_view s) {
  int value = 0;
  if (s.empty()) return std::nullopt;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return value;
}

Graph sized_family(char kind, int n) {
  require(n <= kMaxOrder, "pattern exceeds 64 vertices");
  switch (kind) {
    case 'K':
      require(n >= 1, "K_k needs k >= 1");
      return complete_graph(n);
    case 'P':
      require(n >= 1, "P_n needs n >= 1");
      return path_graph(n);
    case 'C':
      require(n >= 3, "C_n needs n >= 3");
      return cycle_graph(n);
    default:
      throw PatternError("unknown family");
  }
}

std::optional<Graph> base_term(std::string_view t) {
  for (const auto& e : order4_table())
    if (t == e.name) return Graph(4, e.edges);
  if (t == "co-gem" || t == "cogem") return cogem();
  if (t == "gem") return gem();
  if (t == "bull") return bull();
  if (t.starts_with("antihole_")) {
    auto n = parse_int(t.substr(9));
    require(n.has_value(), "antihole_n needs an integer n");
    return antihole(*n);
  }
  if (t.size() >= 2 && (t[0] == 'K' || t[0] == 'P' || t[0] == 'C')) {
    std::string_view rest = t.substr(1);
    if (rest.starts_with("_")) rest.remove_prefix(1);
    if (auto n = parse_int(rest)) return sized_family(t[0], *n);
  }
  return std::nullopt;
}

Graph parse_term(std::string_view t) {
  std::size_t digits = 0;
  while (digits < t.size() && std::isdigit(static_cast<unsigned char>(t[digits]))) ++digits;
  // "4P1" is both a table entry and a multiple; the table is tried first.
  if (auto g = base_term(t)) return *g;
  if (digits > 0 && digits < t.size()) {
    const int times = *parse_int(t.substr(0, digits));
    if (auto g = base_term(t.substr(digits))) return repeat(*g, times);
  }
  throw PatternError("unknown pattern term '" + std::string(t) + "'");
}

}  // namespace

Graph antihole(int n) {
  require(n >= 5 && n % 2 == 1 && n <= kMaxOrder, "antihole needs odd n in [5, 64]");
  return complement(cycle_graph(n));
}

Graph realize(const PatternId& id) {
  const auto param = [&](std::size_t i) {
    require(id.params.size() > i, "pattern '" + id.name + "' needs a parameter");
    return id.params[i];
  };
  if (id.name == "K_k") return sized_family('K', param(0));
  if (id.name == "C_n") return sized_family('C', param(0));
  if (id.name == "P_n") return sized_family('P', param(0));
  if (id.name == "antihole_n") return antihole(param(0));
  if (id.name == "P3+cP2") {
    require(param(0) >= 0, "c must be non-negative");
    return checked_union(path_graph(3), repeat(path_graph(2), param(0)));
  }
  if (id.name == "P3+lP1") {
    require(param(0) >= 0, "l must be non-negative");
    return checked_union(path_graph(3), repeat(Graph(1), param(0)));
  }
  require(id.params.empty(), "pattern '" + id.name + "' takes no parameters");
  return parse_pattern(id.name);
}

Graph parse_pattern(std::string_view text) {
  require(!text.empty(), "empty pattern name");
  if (auto g = base_term(text)) return *g;
  Graph out(0);
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t plus = text.find('+', start);
    if (plus == std::string_view::npos) plus = text.size();
    std::string_view term = text.substr(start, plus - start);
    require(!term.empty(), "malformed pattern '" + std::string(text) + "'");
    out = checked_union(out, parse_term(term));
    start = plus + 1;
  }
  return out;
}

std::vector<Graph> catalog_order4() {
  std::vector<Graph> out;
  for (const auto& e : order4_table()) out.emplace_back(4, e.edges);
  return out;
}

std::vector<std::string> catalog_order4_names() {
  std::vector<std::string> out;
  for (const auto& e : order4_table()) out.emplace_back(e.name);
  return out;
}

std::vector<std::string> catalog_names() {
  std::vector<std::string> out = catalog_order4_names();
  for (const char* extra : {"co-gem", "gem", "bull", "P5", "paw+P1", "P3+P2", "P3+2P1", "C5", "K5", "antihole_7"})
    out.emplace_back(extra);
  return out;
}

std::vector<Graph> four_critical_cogem_free() {
  return {
      complete_graph(4),
      Graph(6, {{0, 1}, {0, 4}, {0, 5}, {1, 2}, {1, 5}, {2, 3}, {2, 5}, {3, 4}, {3, 5}, {4, 5}}),
      Graph(7, {{0, 1}, {0, 4}, {0, 5}, {1, 2}, {1, 5}, {1, 6}, {2, 3}, {2, 6}, {3, 4}, {3, 6}, {4, 5}}),
      Graph(7, {{0, 1}, {0, 4}, {0, 5}, {1, 2}, {1, 5}, {1, 6}, {2, 3}, {2, 6}, {3, 4}, {3, 6}, {4, 5}, {4, 6}}),
      Graph(7, {{0, 1}, {0, 4}, {0, 5}, {0, 6}, {1, 2}, {1, 5}, {2, 3}, {2, 5}, {2, 6}, {3, 4}, {3, 6}, {4, 5}, {4, 6}}),
      Graph(7, {{0, 1}, {0, 4}, {0, 5}, {0, 6}, {1, 2}, {1, 5}, {1, 6}, {2, 3}, {2, 5}, {3, 4}, {3, 6}, {4, 5}}),
      Graph(7, {{0, 1}, {0, 4}, {0, 5}, {0, 6}, {1, 2}, {1, 5}, {1, 6}, {2, 3}, {2, 5}, {2, 6}, {3, 4}, {3, 6}, {4, 5}}),
      Graph(7, {{0, 1}, {0, 4}, {0, 5}, {0, 6}, {1, 2}, {1, 5}, {1, 6}, {2, 3}, {2, 6}, {3, 4}, {3, 6}, {4, 5}}),
      Graph(7, {{0, 2}, {0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4}, {1, 5}, {1, 6}, {2, 4}, {2, 5}, {2, 6}, {3, 5}, {3, 6}, {4, 6}}),
  };
}

}  // namespace vcrit
