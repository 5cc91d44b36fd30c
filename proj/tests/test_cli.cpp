#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "cli.hpp"
#include "vcrit/graph6.hpp"
#include "vcrit/iso.hpp"
#include "vcrit/patterns.hpp"

using namespace vcrit;

namespace {

struct Result {
  int code = 0;
  std::string out, err;
};

Result run(std::vector<std::string> args, const std::string& input = "") {
  args.insert(args.begin(), "vcrit");
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

std::string data(const std::string& name) { return std::string(VCRIT_DATA_DIR) + "/" + name; }

}  // namespace

TEST_CASE("usage errors exit with 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"enumerate", "-k", "4"}).code == 2);
  CHECK(run({"enumerate", "-k", "1", "--max-order", "5"}).code == 2);
  CHECK(run({"find-induced", "--pattern", "nonsense!"}, "C~\n").code == 2);
  CHECK(run({"claims", "--suite", "other"}).code == 2);
  CHECK(run({"certify", "-k", "4", "--family", "cogem"}, "C~\n").code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("chromatic") {
  const Result r = run({"chromatic"}, "C~\nDhc\n");
  CHECK(r.code == 0);
  CHECK(lines(r.out) == std::vector<std::string>{"4", "3"});
  const Result w = run({"chromatic", "--witness", "-"}, "Dhc\n");
  const auto parts = lines(w.out);
  REQUIRE(parts.size() == 1);
  CHECK(parts[0].substr(0, 2) == "3 ");
}

TEST_CASE("enumerate prints the sorted list and a JSON report") {
  const Result r = run({"enumerate", "-k", "4", "--forbid", "co-gem", "--max-order", "10"});
  CHECK(r.code == 0);
  const auto found = lines(r.out);
  CHECK(found.size() == 9);
  std::vector<std::string> expected;
  for (const Graph& g : canonical_sorted(four_critical_cogem_free())) expected.push_back(emit_graph6(g));
  CHECK(found == expected);
  const nlohmann::json report = nlohmann::json::parse(r.err);
  CHECK(report["schema"] == 1);
  CHECK(report["counts_by_order"]["7"] == 7);
  CHECK(report["found"].size() == 9);

  // graph6 patterns and thread counts give identical bytes
  const Result again = run({"enumerate", "-k", "4", "--forbid", "Dh?", "--max-order", "10", "--threads", "3"});
  CHECK(again.out == r.out);
}

TEST_CASE("enumerate from a seed file") {
  const std::string path = "cli_seeds.g6";
  std::ofstream(path) << "C~\n";
  const Result r = run({"enumerate", "-k", "4", "--forbid", "co-gem", "--max-order", "8", "--seeds", path});
  CHECK(lines(r.out) == std::vector<std::string>{"C~"});
  std::remove(path.c_str());
}

TEST_CASE("certify") {
  const Graph w5 = four_critical_cogem_free()[1];
  const Result r = run({"certify", "-k", "3", "--family", "cogem"}, emit_graph6(w5) + "\nDhc\n");
  CHECK(r.code == 0);
  const auto out = lines(r.out);
  REQUIRE(out.size() == 2);
  const auto first = nlohmann::json::parse(out[0]);
  CHECK(first["verdict"] == "NotColourable");
  CHECK(first["verified"] == true);
  CHECK(first["schema"] == 1);
  const auto second = nlohmann::json::parse(out[1]);
  CHECK(second["verdict"] == "Colourable");
  CHECK(second["colouring"].size() == 5);

  const Result bad = run({"certify", "-k", "3"}, emit_graph6(path_graph(6)) + "\n");
  CHECK(bad.code == 1);
  CHECK(nlohmann::json::parse(lines(bad.out)[0])["verdict"] == "NotInFamily");

  const Result listed = run({"certify", "-k", "2", "--list", data("3critical-cogem.g6")}, "Dhc\n");
  CHECK(listed.code == 0);
  CHECK(nlohmann::json::parse(lines(listed.out)[0])["verdict"] == "NotColourable");

  const Result four = run({"certify", "-k", "3", "--list", data("4critical-cogem.g6"), data("4critical-cogem.g6")});
  CHECK(four.code == 0);
  CHECK(lines(four.out).size() == 9);
}

TEST_CASE("shipped data files match the library lists") {
  CHECK(canonical_sorted(read_graph6_file(data("3critical-cogem.g6"))) ==
        canonical_sorted({complete_graph(3), cycle_graph(5)}));
  CHECK(canonical_sorted(read_graph6_file(data("4critical-cogem.g6"))) ==
        canonical_sorted(four_critical_cogem_free()));
}

TEST_CASE("critical-check") {
  const Result r = run({"critical-check", "-k", "3"}, "Dhc\nC~\n" + emit_graph6(cycle_graph(6)) + "\n");
  const auto out = lines(r.out);
  REQUIRE(out.size() == 3);
  CHECK(out[0] == "Dhc\tcritical");
  CHECK(out[1].find("chromatic-above") != std::string::npos);
  CHECK(out[2].find("not-critical") != std::string::npos);
}

TEST_CASE("find-induced") {
  const Result r = run({"find-induced", "--pattern", "co-gem"}, "Dhc\n" + emit_graph6(path_graph(6)) + "\n");
  const auto out = lines(r.out);
  REQUIRE(out.size() == 2);
  CHECK(out[0] == "free");
  CHECK(out[1] != "free");
  CHECK(run({"find-induced", "--pattern", "C~"}, "C~\n").out == "0 1 2 3\n");
}

TEST_CASE("canon") {
  const std::string input = "Dhc\nC~\n" + emit_graph6(relabel(cycle_graph(5), {0, 2, 4, 1, 3})) + "\n";
  const auto sorted = lines(run({"canon"}, input).out);
  REQUIRE(sorted.size() == 3);
  CHECK(sorted[0] == "C~");
  CHECK(sorted[1] == sorted[2]);
  CHECK(lines(run({"canon", "--unique"}, input).out).size() == 2);
  CHECK(lines(run({"canon", "--keep-order"}, input).out)[1] == "C~");
}

TEST_CASE("catalog") {
  const auto all = lines(run({"catalog"}).out);
  CHECK(all.size() == catalog_names().size());
  CHECK(run({"catalog", "co-gem"}).out == "co-gem\tDh?\n");
  CHECK(run({"catalog", "zzz"}).code == 2);
}

TEST_CASE("claims") {
  const Result s = run({"claims", "--suite", "sperner"});
  CHECK(s.code == 0);
  CHECK(nlohmann::json::parse(s.out)["pass"] == true);
  const Result b = run({"claims", "--suite", "bull", "-k", "3", "--max-order", "8"});
  CHECK(b.code == 0);
  const Result c = run({"claims", "--suite", "conjecture", "-k", "4", "--max-order", "8"});
  const auto j = nlohmann::json::parse(c.out);
  CHECK(j["label"] == "supports");
  CHECK(j.contains("complete"));
}
