#include <catch2/catch_amalgamated.hpp>

#include "nnsd/families.hpp"
#include "nnsd/graph_io.hpp"
#include "support/reference.hpp"

using namespace nnsd;

namespace {
bool same_graph(const Graph& a, const Graph& b) {
  return a.order() == b.order() && a.edges() == b.edges();
}
}  // namespace

TEST_CASE("graph6 encodes the singleton as @") {
  REQUIRE(encode_graph6(make_graph(1, {})) == "@");
  REQUIRE(same_graph(decode_graph6("@"), make_graph(1, {})));
}

TEST_CASE("graph6 known encodings") {
  REQUIRE(encode_graph6(complete_graph(4)) == "C~");
  REQUIRE(encode_graph6(path_graph(4)) == "Ch");
  REQUIRE(encode_graph6(cycle_graph(4)) == "Cl");
  REQUIRE(encode_graph6(empty_graph(5)) == "D??");
}

TEST_CASE("graph6 round-trips on random graphs") {
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    const int n = 1 + int(seed % 10);
    Graph g = testref::erdos_renyi(n, 50, seed * 31337);
    REQUIRE(same_graph(decode_graph6(encode_graph6(g)), g));
  }
}

TEST_CASE("graph6 encoding is injective on labeled graphs") {
  std::set<std::string> seen;
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    Graph g = testref::erdos_renyi(8, 50, seed * 41);
    seen.insert(encode_graph6(g));
  }
  // a couple of collisions are possible only if two seeds gave equal graphs
  std::set<std::string> edge_sets;
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    Graph g = testref::erdos_renyi(8, 50, seed * 41);
    std::string key;
    for (auto [u, v] : g.edges()) key += std::to_string(u) + "," + std::to_string(v) + ";";
    edge_sets.insert(key);
  }
  REQUIRE(seen.size() == edge_sets.size());
}

TEST_CASE("graph6 decode error paths") {
  REQUIRE_THROWS_AS(decode_graph6(""), MalformedHeader);
  REQUIRE_THROWS_AS(decode_graph6(std::string(1, char(62))), MalformedHeader);
  REQUIRE_THROWS_AS(decode_graph6("~??"), MalformedHeader);
  REQUIRE_THROWS_AS(decode_graph6("C~~"), TruncatedBitStream);  // trailing data
  REQUIRE_THROWS_AS(decode_graph6("D?"), TruncatedBitStream);   // too short
  // n = 3 uses 3 bits; a set bit in the 3 padding positions is not canonical
  REQUIRE_THROWS_AS(decode_graph6("B@"), NonCanonicalPadding);
  REQUIRE(decode_graph6("B?").order() == 3);
  REQUIRE_THROWS_AS(decode_graph6("@\x7f"), MalformedHeader);
}

TEST_CASE("graph6 rejects n above 62 on encode") {
  REQUIRE_THROWS_AS(encode_graph6(empty_graph(63)), TooLarge);
  REQUIRE(encode_graph6(empty_graph(62)).size() == 1 + (62 * 61 / 2 + 5) / 6);
}

TEST_CASE("edge list emit is lexicographically sorted") {
  REQUIRE(emit_edge_list(cycle_graph(4)) == "4 4\n0 1\n0 3\n1 2\n2 3\n");
}

TEST_CASE("edge list parses P3") {
  Graph g = parse_edge_list("3 2\n0 1\n1 2\n");
  REQUIRE(same_graph(g, path_graph(3)));
}

TEST_CASE("edge list tolerates comments and blank lines") {
  Graph g = parse_edge_list("# a path\n\n3 2\n# edge one\n0 1\n1 2\n\n");
  REQUIRE(same_graph(g, path_graph(3)));
}

TEST_CASE("edge list round-trips up to edge ordering") {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    Graph g = testref::erdos_renyi(1 + int(seed % 9), 60, seed * 127);
    REQUIRE(same_graph(parse_edge_list(emit_edge_list(g)), g));
  }
}

TEST_CASE("edge list error paths") {
  REQUIRE_THROWS_AS(parse_edge_list(""), BadHeader);
  REQUIRE_THROWS_AS(parse_edge_list("x y\n"), BadHeader);
  REQUIRE_THROWS_AS(parse_edge_list("3 2 1\n"), BadHeader);
  REQUIRE_THROWS_AS(parse_edge_list("2 1\n0 5\n"), IndexOutOfRange);
  REQUIRE_THROWS_AS(parse_edge_list("3 2\n0 1\n"), EdgeCountMismatch);
  REQUIRE_THROWS_AS(parse_edge_list("3 1\n0 1\n1 2\n"), EdgeCountMismatch);
  REQUIRE_THROWS_AS(parse_edge_list("3 1\n1 1\n"), SelfLoop);
  REQUIRE_THROWS_AS(parse_edge_list("3 1\n1 0\n"), BadInput);
}

TEST_CASE("codecs round-trip on family graphs") {
  const Graph graphs[] = {turan_graph(8, 3),     sigma_family(2).graph, prism_graph(),
                          observation_tree(-3),  star_graph(5),         turan_graph(62, 5),
                          complete_graph(30)};
  for (const Graph& g : graphs) {
    REQUIRE(same_graph(decode_graph6(encode_graph6(g)), g));
    REQUIRE(same_graph(parse_edge_list(emit_edge_list(g)), g));
  }
}
