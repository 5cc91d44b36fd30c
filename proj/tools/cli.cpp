#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <random>
#include <sstream>

#include "vcrit/certify.hpp"
#include "vcrit/claims.hpp"
#include "vcrit/coloring.hpp"
#include "vcrit/criticality.hpp"
#include "vcrit/enumerate.hpp"
#include "vcrit/graph6.hpp"
#include "vcrit/iso.hpp"
#include "vcrit/patterns.hpp"
#include "vcrit/search.hpp"

namespace vcrit::cli {

namespace {

using nlohmann::json;

constexpr int kOk = 0;
constexpr int kDomainFailure = 1;
constexpr int kUsage = 2;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Catalog name or expression first, raw graph6 second.
Graph resolve_pattern(const std::string& text) {
  try {
    return parse_pattern(text);
  } catch (const PatternError&) {
  }
  try {
    return parse_graph6(text);
  } catch (const Graph6Error&) {
  }
  throw UsageError("unknown pattern '" + text + "' (not a catalog name or graph6 word)");
}

std::vector<Graph> read_inputs(const std::vector<std::string>& paths, std::istream& in) {
  if (paths.empty()) return read_graph6_stream(in);
  std::vector<Graph> out;
  for (const std::string& p : paths) {
    std::vector<Graph> part = p == "-" ? read_graph6_stream(in) : read_graph6_file(p);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

json graph6_list(const std::vector<Graph>& graphs) {
  json arr = json::array();
  for (const Graph& g : graphs) arr.push_back(emit_graph6(g));
  return arr;
}

json report_json(const EnumerationConfig& cfg, const EnumerationReport& r) {
  json counts = json::object();
  for (auto [order, count] : r.counts_by_order) counts[std::to_string(order)] = count;
  const EnumerationStats& s = r.stats;
  return {
      {"schema", 1},
      {"k", cfg.k},
      {"max_order", cfg.max_order},
      {"forbidden", graph6_list(cfg.forbidden)},
      {"found", graph6_list(r.found)},
      {"counts_by_order", counts},
      {"complete", r.complete},
      {"stats",
       {{"expansions", s.expansions},
        {"children", s.children},
        {"duplicates", s.duplicates},
        {"prune_family", s.prune_family},
        {"prune_chromatic", s.prune_chromatic},
        {"prune_comparable", s.prune_comparable},
        {"prune_degree_deadline", s.prune_degree_deadline},
        {"truncated", s.truncated},
        {"live_by_order", s.live_by_order}}},
  };
}

json certificate_json(const Graph& g, int k, const Certificate& cert) {
  json j = {{"schema", 1}, {"input", emit_graph6(g)}, {"verdict", verdict_name(cert)}};
  if (const auto* c = std::get_if<Colourable>(&cert)) {
    j["colouring"] = c->colouring.colours;
  } else if (const auto* c = std::get_if<NotColourable>(&cert)) {
    j["critical"] = emit_graph6(c->critical);
    j["embedding"] = c->embedding.map;
  } else {
    const auto& v = std::get<NotInFamily>(cert);
    j["pattern"] = emit_graph6(v.pattern);
    j["pattern_index"] = v.pattern_index;
    j["embedding"] = v.embedding.map;
  }
  j["verified"] = verify_certificate(g, k, cert).ok;
  return j;
}

void write_stats(const std::string& path, const json& j, std::ostream& err) {
  if (path.empty()) {
    err << j.dump() << '\n';
    return;
  }
  std::ofstream f(path);
  if (!f) throw UsageError("cannot write " + path);
  f << j.dump(2) << '\n';
}

std::string criticality_status(const CriticalityReport& r) {
  switch (r.verdict) {
    case CriticalityVerdict::kCritical:
      return "critical";
    case CriticalityVerdict::kChromaticBelow:
      return "not-critical chromatic-below chi=" + std::to_string(r.chromatic);
    case CriticalityVerdict::kChromaticAbove:
      return "not-critical chromatic-above chi=" + std::to_string(r.chromatic);
    case CriticalityVerdict::kRemovableVertex:
      return "not-critical removable-vertex v=" + std::to_string(r.removable);
  }
  return "unknown";
}

struct ClaimsOptions {
  std::string suite;
  int k = 0;
  int max_order = 0;
  unsigned threads = 0;
  std::uint64_t seed = 1;
};

EnumerationReport critical_in(int k, std::vector<Graph> family, int max_order, unsigned threads) {
  EnumerationConfig cfg;
  cfg.k = k;
  cfg.forbidden = std::move(family);
  cfg.max_order = max_order;
  cfg.threads = threads;
  return enumerate_critical(cfg);
}

json run_claims(const ClaimsOptions& o) {
  json j = {{"schema", 1}, {"suite", o.suite}};
  const int k = o.k != 0 ? o.k : 5;
  const int max_order = o.max_order != 0 ? o.max_order : 10;
  if (o.suite == "sperner") {
    std::uint64_t families = 0, failures = 0;
    for (int n = 0; n <= 4; ++n) {
      const int subsets = 1 << n;
      for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << subsets); ++pick) {
        SetFamily f{n, {}};
        for (int s = 0; s < subsets; ++s)
          if ((pick >> s) & 1U) f.members.push_back(static_cast<std::uint64_t>(s));
        ++families;
        if (static_cast<std::uint64_t>(max_antichain(f)) > sperner_bound(n)) ++failures;
      }
    }
    std::mt19937_64 rng(o.seed);
    for (int i = 0; i < 1000; ++i) {
      const int n = std::uniform_int_distribution<int>(0, 10)(rng);
      const int members = std::uniform_int_distribution<int>(0, 40)(rng);
      SetFamily f{n, {}};
      for (int m = 0; m < members; ++m)
        f.members.push_back(std::uniform_int_distribution<std::uint64_t>(0, (std::uint64_t{1} << n) - 1)(rng));
      ++families;
      if (static_cast<std::uint64_t>(max_antichain(f)) > sperner_bound(n)) ++failures;
    }
    j["families"] = families;
    j["failures"] = failures;
    j["pass"] = failures == 0;
  } else if (o.suite == "cp2-sperner" || o.suite == "paw-p1") {
    const bool cp2 = o.suite == "cp2-sperner";
    std::vector<Graph> family = {parse_pattern("co-gem")};
    if (cp2) {
      family.push_back(path_graph(5));
      family.push_back(parse_pattern("P3+P2"));
    } else {
      family.push_back(parse_pattern("paw+P1"));
    }
    const EnumerationReport r = critical_in(k, family, max_order, o.threads);
    std::uint64_t failures = 0;
    for (const Graph& g : r.found)
      if (!(cp2 ? check_p3_cp2_consequence(g, k, 1) : check_paw_p1_consequence(g))) ++failures;
    j["k"] = k;
    j["max_order"] = max_order;
    j["checked"] = r.found.size();
    j["failures"] = failures;
    j["pass"] = failures == 0;
  } else if (o.suite == "antichain") {
    const EnumerationReport r = critical_in(k, {parse_pattern("co-gem")}, max_order, o.threads);
    std::uint64_t sets = 0, failures = 0;
    for (const Graph& g : r.found) {
      const std::uint64_t limit = std::uint64_t{1} << g.order();
      for (std::uint64_t s = 0; s < limit; ++s) {
        const VertexSet set(s);
        if (set.size() < 2) continue;
        bool independent = true;
        for (int x : set) independent = independent && (g.neighbours(x) & set).empty();
        if (!independent) continue;
        ++sets;
        if (!check_neighbourhood_antichain(g, set)) ++failures;
      }
    }
    j["k"] = k;
    j["graphs"] = r.found.size();
    j["independent_sets"] = sets;
    j["failures"] = failures;
    j["pass"] = failures == 0;
  } else if (o.suite == "conjecture") {
    const int ck = o.k != 0 ? o.k : 4;
    const int order = o.max_order != 0 ? o.max_order : 10;
    const EnumerationReport r = conjecture_slice(ck, order, o.threads);
    j["k"] = ck;
    j["max_order"] = order;
    j["forbidden"] = graph6_list(conjecture_family(ck));
    j["found"] = graph6_list(r.found);
    j["complete"] = r.complete;
    j["label"] = r.found.empty() ? "supports" : "refutes";
    j["pass"] = r.found.empty();
  } else if (o.suite == "bull") {
    const int bk = o.k != 0 ? o.k : 4;
    const int order = o.max_order != 0 ? o.max_order : 9;
    j["k"] = bk;
    j["max_order"] = order;
    j["pass"] = bull_equivalence(bk, order, o.threads);
  } else {
    throw UsageError("unknown suite '" + o.suite + "'");
  }
  return j;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Vertex-critical graph enumeration and certified colouring"};
  app.require_subcommand(1);

  // enumerate
  EnumerationConfig ecfg;
  std::vector<std::string> forbid;
  std::string seeds_path, stats_path;
  bool no_comparable = false, allow_disconnected = false;
  auto* enumerate_cmd = app.add_subcommand("enumerate", "List k-vertex-critical graphs of an H-free class");
  enumerate_cmd->add_option("-k", ecfg.k, "Target criticality")->required();
  enumerate_cmd->add_option("--forbid", forbid, "Forbidden induced subgraph (name or graph6)");
  enumerate_cmd->add_option("--max-order", ecfg.max_order, "Largest order searched")->required();
  enumerate_cmd->add_option("--seeds", seeds_path, "graph6 file of starting graphs");
  enumerate_cmd->add_option("--threads", ecfg.threads, "Worker threads (0 = all cores)");
  enumerate_cmd->add_option("--stats", stats_path, "Write the JSON report here instead of stderr");
  enumerate_cmd->add_option("--lemma-clique-size", ecfg.lemma_clique_size, "1 or 2");
  enumerate_cmd->add_flag("--no-comparable-pruning", no_comparable);
  enumerate_cmd->add_flag("--allow-disconnected", allow_disconnected);

  // certify
  int certify_k = 0;
  std::string family_text = "cogem", list_path;
  std::vector<std::string> inputs;
  auto* certify_cmd = app.add_subcommand("certify", "Certified k-colourability via critical induced subgraphs");
  certify_cmd->add_option("-k", certify_k, "Number of colours")->required();
  certify_cmd->add_option("--family", family_text, "Comma-separated forbidden graphs; 'cogem' for co-gem");
  certify_cmd->add_option("--list", list_path, "graph6 file of the (k+1)-vertex-critical graphs of the family");
  certify_cmd->add_option("inputs", inputs, "graph6 files ('-' for stdin)");

  bool witness = false;
  auto* chromatic_cmd = app.add_subcommand("chromatic", "Chromatic number per input graph");
  chromatic_cmd->add_flag("--witness", witness, "Also print an optimal colouring");
  chromatic_cmd->add_option("inputs", inputs);

  int critical_k = 0;
  auto* critical_cmd = app.add_subcommand("critical-check", "Classify graphs as k-vertex-critical or not");
  critical_cmd->add_option("-k", critical_k)->required();
  critical_cmd->add_option("inputs", inputs);

  std::string pattern_text;
  auto* find_cmd = app.add_subcommand("find-induced", "Find an induced copy of a pattern");
  find_cmd->add_option("--pattern", pattern_text)->required();
  find_cmd->add_option("inputs", inputs);

  bool keep_order = false, unique = false;
  auto* canon_cmd = app.add_subcommand("canon", "Canonical graph6 forms, sorted by (order, form)");
  canon_cmd->add_flag("--keep-order", keep_order, "Keep input order instead of sorting");
  canon_cmd->add_flag("--unique", unique, "Drop isomorphic duplicates");
  canon_cmd->add_option("inputs", inputs);

  std::vector<std::string> catalog_ids;
  auto* catalog_cmd = app.add_subcommand("catalog", "List named graphs, or print graph6 for the given names");
  catalog_cmd->add_option("names", catalog_ids);

  ClaimsOptions claims;
  auto* claims_cmd = app.add_subcommand("claims", "Executable structural checks");
  claims_cmd->add_option("--suite", claims.suite)
      ->required()
      ->check(CLI::IsMember({"sperner", "cp2-sperner", "paw-p1", "antichain", "conjecture", "bull"}));
  claims_cmd->add_option("-k", claims.k);
  claims_cmd->add_option("--max-order", claims.max_order);
  claims_cmd->add_option("--threads", claims.threads);
  claims_cmd->add_option("--seed", claims.seed);

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n" << app.help();
    return kUsage;
  }

  try {
    if (*enumerate_cmd) {
      for (const auto& f : forbid) ecfg.forbidden.push_back(resolve_pattern(f));
      if (!seeds_path.empty()) ecfg.seeds = read_graph6_file(seeds_path);
      ecfg.prune_comparable = !no_comparable;
      ecfg.connected_only = !allow_disconnected;
      try {
        validate(ecfg);
      } catch (const ConfigError& e) {
        throw UsageError(e.what());
      }
      const EnumerationReport r = enumerate_critical(ecfg);
      for (const Graph& g : r.found) out << emit_graph6(g) << '\n';
      write_stats(stats_path, report_json(ecfg, r), err);
      return kOk;
    }
    if (*certify_cmd) {
      std::vector<Graph> family;
      std::stringstream ss(family_text);
      for (std::string item; std::getline(ss, item, ',');)
        family.push_back(item == "cogem" ? parse_pattern("co-gem") : resolve_pattern(item));
      std::optional<CriticalList> list;
      if (!list_path.empty()) {
        list.emplace(certify_k, family, read_graph6_file(list_path), Provenance::kFile);
      } else if (family.size() == 1 && family[0] == parse_pattern("co-gem") && (certify_k == 2 || certify_k == 3)) {
        list.emplace(shipped_cogem_list(certify_k));
      } else {
        throw UsageError("no shipped critical list for this family and k; pass --list");
      }
      int code = kOk;
      for (const Graph& g : read_inputs(inputs, in)) {
        try {
          const Certificate cert = certify_colourable(g, certify_k, *list);
          if (std::holds_alternative<NotInFamily>(cert)) code = kDomainFailure;
          out << certificate_json(g, certify_k, cert).dump() << '\n';
        } catch (const IncompleteListError& e) {
          code = kDomainFailure;
          out << json{{"schema", 1}, {"input", emit_graph6(g)}, {"verdict", "IncompleteList"}, {"verified", false}}.dump()
              << '\n';
        }
      }
      return code;
    }
    if (*chromatic_cmd) {
      for (const Graph& g : read_inputs(inputs, in)) {
        const int chi = chromatic_number(g);
        out << chi;
        if (witness) {
          const Colouring c = *k_colourable(g, chi);
          for (int col : c.colours) out << ' ' << col;
        }
        out << '\n';
      }
      return kOk;
    }
    if (*critical_cmd) {
      if (critical_k < 1) throw UsageError("-k must be at least 1");
      for (const Graph& g : read_inputs(inputs, in))
        out << emit_graph6(g) << '\t' << criticality_status(classify_criticality(g, critical_k)) << '\n';
      return kOk;
    }
    if (*find_cmd) {
      const InducedMatcher matcher(resolve_pattern(pattern_text));
      for (const Graph& g : read_inputs(inputs, in)) {
        if (auto e = matcher.find(g)) {
          for (std::size_t i = 0; i < e->map.size(); ++i) out << (i ? " " : "") << e->map[i];
          out << '\n';
        } else {
          out << "free\n";
        }
      }
      return kOk;
    }
    if (*canon_cmd) {
      std::vector<Graph> graphs = read_inputs(inputs, in);
      std::vector<std::pair<std::pair<int, std::string>, std::size_t>> forms;
      for (std::size_t i = 0; i < graphs.size(); ++i)
        forms.push_back({{graphs[i].order(), canonical_form(graphs[i]).graph6}, i});
      if (!keep_order) std::stable_sort(forms.begin(), forms.end());
      std::set<std::string> seen;
      for (const auto& [key, index] : forms) {
        if (unique && !seen.insert(key.second).second) continue;
        out << key.second << '\n';
      }
      return kOk;
    }
    if (*catalog_cmd) {
      const std::vector<std::string> names = catalog_ids.empty() ? catalog_names() : catalog_ids;
      for (const auto& name : names) out << name << '\t' << emit_graph6(resolve_pattern(name)) << '\n';
      return kOk;
    }
    if (*claims_cmd) {
      const json j = run_claims(claims);
      out << j.dump() << '\n';
      return j.value("pass", false) ? kOk : kDomainFailure;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kDomainFailure;
  }
  return kUsage;
}

}  // namespace vcrit::cli
