#include <doctest.h>

#include <set>

#include "netsemi/netgen.hpp"
#include "netsemi/network.hpp"

using namespace netsemi;

namespace {

Network from_text(const std::string& text) {
  return Network::validate(parse_network_text(text));
}

}  // namespace

TEST_CASE("parsing and validation of the worked example") {
  Network net = from_text(
      "# four vertices, two relations\n"
      "vertices v1 v2 v3 v4\n"
      "rel t1 : v1 v2 -> v3\n"
      "rel t2 : v3 -> v4\n");
  CHECK(net.vertices().size() == 4);
  CHECK(net.relations().size() == 2);

  // T0 = sources and ranges plus singletons, each subset once.
  std::set<VertexSet> t0(net.t0().begin(), net.t0().end());
  std::set<VertexSet> expected = {
      VertexSet({"v1", "v2"}), VertexSet({"v1"}), VertexSet({"v2"}),
      VertexSet({"v3"}), VertexSet({"v4"})};
  CHECK(t0 == expected);
  CHECK(net.junction_coherent());
  CHECK_FALSE(net.is_graph());
}

TEST_CASE("single vertex, no relations") {
  Network net = from_text("vertices v\n");
  REQUIRE(net.t0().size() == 1);
  CHECK(net.t0()[0] == VertexSet({"v"}));
  CHECK(net.is_graph());
}

TEST_CASE("validation errors") {
  CHECK_THROWS_WITH_AS(from_text("vertices v1\nrel t : v1 -> v1\n"),
                       doctest::Contains("SourceRangeOverlap"), Error);
  CHECK_THROWS_WITH_AS(
      from_text("vertices v1 v2\nrel t : v1 -> v2\nrel t : v2 -> v1\n"),
      doctest::Contains("DuplicateRelationName"), Error);
  CHECK_THROWS_WITH_AS(from_text("vertices v1 v2\nrel t : v1 -> v9\n"),
                       doctest::Contains("UnknownVertex"), Error);
  CHECK_THROWS_WITH_AS(from_text("vertices v1 v2\nrel t : v1 ->\n"),
                       doctest::Contains("EmptySourceOrRange"), Error);
  CHECK_THROWS_AS(from_text("vertices v1\nrel t v1 -> v1\n"), Error);
}

TEST_CASE("t0 recomputation is stable") {
  Network net = example6_network();
  NetworkDescription desc;
  desc.vertices = net.vertices();
  for (const auto& r : net.relations())
    desc.relations.push_back({r.name, r.source.members, r.range.members});
  Network again = Network::validate(desc);
  CHECK(net.t0() == again.t0());
}

TEST_CASE("out index") {
  Network net = example6_network();
  CHECK(net.out_index(VertexSet({"v3"})) == 1);
  CHECK(net.out_index(VertexSet({"v4"})) == 0);
  CHECK(net.out_index(VertexSet({"v9"})) == 0);
  CHECK(net.out_index(VertexSet({"v1", "v2"})) == 1);
}

TEST_CASE("graph detection") {
  CHECK_FALSE(example6_network().is_graph());
  CHECK(two_vertex_graph().is_graph());
  CHECK(from_text("vertices a b\n").is_graph());
}

TEST_CASE("identity and renaming isomorphisms") {
  Network net = example6_network();
  auto id = find_isomorphism(net, net);
  REQUIRE(id.has_value());
  CHECK(verify_isomorphism(net, net, *id));
  for (const auto& [a, b] : id->vertex_map) CHECK(a == b);
  for (const auto& [a, b] : id->relation_map) CHECK(a == b);

  Network renamed = from_text(
      "vertices w1 w2 w3 w4\n"
      "rel s1 : w1 w2 -> w3\n"
      "rel s2 : w3 -> w4\n");
  auto iso = find_isomorphism(net, renamed);
  REQUIRE(iso.has_value());
  CHECK(verify_isomorphism(net, renamed, *iso));
  CHECK(iso->relation_map.at("t1") == "s1");
  CHECK(iso->relation_map.at("t2") == "s2");
  CHECK(iso->vertex_map.at("v3") == "w3");
  CHECK(iso->vertex_map.at("v4") == "w4");
}

TEST_CASE("non-isomorphic networks") {
  CHECK_FALSE(find_isomorphism(example6_network(), two_vertex_graph()));
  // same profile sizes but different wiring
  Network chain = from_text(
      "vertices a b c\nrel e1 : a -> b\nrel e2 : b -> c\n");
  Network fan = from_text(
      "vertices a b c\nrel e1 : a -> b\nrel e2 : a -> c\n");
  CHECK_FALSE(find_isomorphism(chain, fan));
  CHECK(find_isomorphism(chain, chain));
}

TEST_CASE("isomorphism is symmetric and composes to the identity") {
  Network g = example6_network();
  Network d = Network::validate([] {
    NetworkDescription desc;
    desc.vertices = {"x4", "x3", "x2", "x1"};
    desc.relations.push_back({"b", {"x3"}, {"x4"}});
    desc.relations.push_back({"a", {"x1", "x2"}, {"x3"}});
    return desc;
  }());
  auto there = find_isomorphism(g, d);
  auto back = find_isomorphism(d, g);
  REQUIRE(there.has_value());
  REQUIRE(back.has_value());
  auto round = compose_isomorphisms(*there, *back);
  for (const auto& [a, b] : round.vertex_map) CHECK(a == b);
  for (const auto& [a, b] : round.relation_map) CHECK(a == b);
  auto inv = invert_isomorphism(*there);
  CHECK(verify_isomorphism(d, g, inv));
}

TEST_CASE("two relations may share the same endpoint pair") {
  Network net = from_text(
      "vertices a b c\n"
      "rel t1 : a b -> c\n"
      "rel t2 : a b -> c\n");
  CHECK(net.relations().size() == 2);
  CHECK(net.out_index(VertexSet({"a", "b"})) == 2);
  CHECK(net.junction_coherent());
  auto iso = find_isomorphism(net, net);
  REQUIRE(iso.has_value());
  CHECK(verify_isomorphism(net, net, *iso));
}

TEST_CASE("random networks validate and respect the coherence guarantee") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    Network net = random_network({6, 4, false}, seed);
    CHECK(net.junction_coherent());
    CHECK(net.relations().size() >= 1);
    CHECK(net.vertices().size() >= 2);
  }
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    Network net = random_network({6, 4, true}, seed);
    CHECK(net.is_graph());
    CHECK(net.junction_coherent());
  }
}
