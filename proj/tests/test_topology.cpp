#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "doctest.h"
#include "mgdm/data.hpp"
#include "mgdm/topology.hpp"
#include "mgdm/util.hpp"

using namespace mgdm;

namespace {

// Reference enumeration: every simple path by DFS, ranked with the same
// route order the library uses. The library must reproduce a truncation of
// this list exactly, ties included.
void dfs_paths(const topo::Topology& t, int at, int dst, std::vector<bool>& visited,
               std::vector<int>& links, LinkMask used, int src,
               std::vector<topo::Route>& out) {
  if (at == dst) {
    out.push_back(topo::make_route(t, src, links));
    return;
  }
  for (int lid : t.incident(at)) {
    if (used & link_bit(lid)) continue;
    int next = t.link(lid).other(at);
    if (visited[next]) continue;
    visited[next] = true;
    links.push_back(lid);
    dfs_paths(t, next, dst, visited, links, used | link_bit(lid), src, out);
    links.pop_back();
    visited[next] = false;
  }
}

std::vector<topo::Route> all_simple_paths(const topo::Topology& t, int src, int dst) {
  std::vector<topo::Route> out;
  std::vector<bool> visited(t.node_count(), false);
  std::vector<int> links;
  visited[src] = true;
  dfs_paths(t, src, dst, visited, links, 0, src, out);
  std::sort(out.begin(), out.end(), topo::route_less);
  return out;
}

topo::Topology random_connected(SplitMix64& g, int n) {
  std::string json = "{\"nodes\":[";
  for (int i = 0; i < n; ++i) json += (i ? ",\"n" : "\"n") + std::to_string(i) + "\"";
  json += "],\"links\":[";
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i < n; ++i) edges.push_back({(int)g.next_below(i), i});
  for (int e = 0; e < n; ++e) {
    int a = (int)g.next_below(n), b = (int)g.next_below(n);
    if (a == b) continue;
    if (a > b) std::swap(a, b);
    bool dup = false;
    for (auto& [x, y] : edges) dup |= (x == a && y == b);
    if (!dup) edges.push_back({a, b});
  }
  bool first = true;
  for (auto& [a, b] : edges) {
    if (!first) json += ",";
    first = false;
    json += "{\"a\":\"n" + std::to_string(a) + "\",\"b\":\"n" + std::to_string(b) +
            "\",\"length_km\":" + std::to_string(1 + (int)g.next_below(20)) + "}";
  }
  json += "]}";
  return topo::parse_topology(json);
}

bool same_routes(const std::vector<topo::Route>& a, const std::vector<topo::Route>& b) {
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i].links != b[i].links) return false;
  return true;
}

}  // namespace

TEST_CASE("triangle graph lists the direct link before the detour") {
  topo::Topology t = topo::parse_topology(R"({
    "nodes": ["A", "B", "C"],
    "links": [{"a": "A", "b": "B", "length_km": 1},
              {"a": "B", "b": "C", "length_km": 1},
              {"a": "A", "b": "C", "length_km": 1}]
  })");
  auto routes = topo::k_shortest_paths(t, 0, 1, 3);
  REQUIRE(routes.size() == 2);
  CHECK(routes[0].links == std::vector<int>{0});
  CHECK(routes[0].length_km == 1.0);
  CHECK(routes[1].links == std::vector<int>{2, 1});
  CHECK(routes[1].length_km == 2.0);
}

TEST_CASE("two nodes with one link yield exactly one route regardless of k") {
  topo::Topology t = topo::parse_topology(R"({
    "nodes": ["A", "B"],
    "links": [{"a": "A", "b": "B", "length_km": 5}]
  })");
  auto routes = topo::k_shortest_paths(t, 0, 1, 5);
  REQUIRE(routes.size() == 1);
  CHECK(routes[0].links == std::vector<int>{0});
}

TEST_CASE("routes are simple, correctly priced and sorted") {
  SplitMix64 g(4242);
  for (int trial = 0; trial < 50; ++trial) {
    topo::Topology t = random_connected(g, 4 + (int)g.next_below(5));
    int src = (int)g.next_below(t.node_count());
    int dst = (src + 1 + (int)g.next_below(t.node_count() - 1)) % t.node_count();
    auto routes = topo::k_shortest_paths(t, src, dst, 6);
    for (size_t i = 0; i < routes.size(); ++i) {
      double len = 0;
      LinkMask seen = 0;
      for (int lid : routes[i].links) {
        CHECK(masks_disjoint(seen, link_bit(lid)));
        seen |= link_bit(lid);
        len += t.link(lid).length_km;
      }
      CHECK(routes[i].length_km == doctest::Approx(len));
      if (i > 0) CHECK(routes[i - 1].length_km <= routes[i].length_km);
    }
  }
}

TEST_CASE("enumeration matches brute force on small random graphs") {
  SplitMix64 g(777);
  for (int trial = 0; trial < 80; ++trial) {
    topo::Topology t = random_connected(g, 4 + (int)g.next_below(5));  // 4..8 nodes
    int src = (int)g.next_below(t.node_count());
    int dst = (src + 1 + (int)g.next_below(t.node_count() - 1)) % t.node_count();
    auto expected = all_simple_paths(t, src, dst);
    for (int k : {1, 2, 3, 7, 100}) {
      auto got = topo::k_shortest_paths(t, src, dst, k);
      auto want = expected;
      if ((int)want.size() > k) want.resize(k);
      CHECK(same_routes(got, want));
    }
  }
}

TEST_CASE("german backbone matches brute force for a pair with alternatives") {
  topo::Topology t = data::german17();
  int src = t.node_by_name("Hamburg");
  int dst = t.node_by_name("Frankfurt");
  auto expected = all_simple_paths(t, src, dst);
  REQUIRE(expected.size() >= 3);
  expected.resize(3);
  CHECK(same_routes(topo::k_shortest_paths(t, src, dst, 3), expected));
}

TEST_CASE("banned links are absent from avoiding enumeration") {
  SplitMix64 g(31);
  for (int trial = 0; trial < 40; ++trial) {
    topo::Topology t = random_connected(g, 5 + (int)g.next_below(3));
    int src = (int)g.next_below(t.node_count());
    int dst = (src + 1 + (int)g.next_below(t.node_count() - 1)) % t.node_count();
    LinkMask banned = 0;
    for (int lid = 0; lid < t.link_count(); ++lid)
      if (g.next_below(3) == 0) banned |= link_bit(lid);
    auto got = topo::k_shortest_paths_avoiding(t, src, dst, 10, banned);
    // reference: filter the brute-force list
    auto full = all_simple_paths(t, src, dst);
    std::vector<topo::Route> want;
    for (auto& r : full)
      if (masks_disjoint(r.mask, banned)) want.push_back(r);
    if ((int)want.size() > 10) want.resize(10);
    CHECK(same_routes(got, want));
  }
}

TEST_CASE("scaling hits the target maximum and preserves ratios") {
  topo::Topology t = topo::parse_topology(R"({
    "nodes": ["A", "B", "C"],
    "links": [{"a": "A", "b": "B", "length_km": 10},
              {"a": "B", "b": "C", "length_km": 20}]
  })");
  topo::Topology s = topo::scale_link_lengths(t, 3.0);
  CHECK(s.link(0).length_km == doctest::Approx(1.5));
  CHECK(s.link(1).length_km == doctest::Approx(3.0));

  topo::Topology big = topo::scale_link_lengths(data::german17(), 380.0);
  double mx = 0;
  for (auto& l : big.links()) mx = std::max(mx, l.length_km);
  CHECK(mx == doctest::Approx(380.0));
  for (int i = 0; i < big.link_count(); ++i) {
    double ratio = big.link(i).length_km / data::german17().link(i).length_km;
    CHECK(std::abs(ratio - 380.0 / 313.0) < 1e-9);
  }
}

TEST_CASE("scaled topologies keep every chosen route identical") {
  topo::Topology t = data::german17();
  topo::Topology s = topo::scale_link_lengths(t, 42.0);
  SplitMix64 g(5);
  for (int trial = 0; trial < 20; ++trial) {
    int src = (int)g.next_below(17);
    int dst = (src + 1 + (int)g.next_below(16)) % 17;
    auto a = topo::k_shortest_paths(t, src, dst, 4);
    auto b = topo::k_shortest_paths(s, src, dst, 4);
    CHECK(same_routes(a, b));
  }
}

TEST_CASE("parser rejects malformed topologies") {
  CHECK_THROWS(topo::parse_topology(R"({"nodes": ["A"], "links": []})"));
  CHECK_THROWS(topo::parse_topology(R"({
    "nodes": ["A", "B", "C"],
    "links": [{"a": "A", "b": "B", "length_km": 1}]
  })"));  // C unreachable
  CHECK_THROWS(topo::parse_topology(R"({
    "nodes": ["A", "B"],
    "links": [{"a": "A", "b": "B", "length_km": 0}]
  })"));  // nonpositive length
  CHECK_THROWS(topo::parse_topology(R"({
    "nodes": ["A", "B"],
    "links": [{"a": "A", "b": "B", "length_km": 1},
              {"a": "B", "b": "A", "length_km": 2}]
  })"));  // duplicate link
}

TEST_CASE("reference backbone has the documented shape") {
  topo::Topology t = data::german17();
  CHECK(t.node_count() == 17);
  CHECK(t.link_count() == 26);
  double mn = 1e18, mx = 0;
  for (auto& l : t.links()) {
    mn = std::min(mn, l.length_km);
    mx = std::max(mx, l.length_km);
  }
  CHECK(mn == doctest::Approx(31.0));
  CHECK(mx == doctest::Approx(313.0));
  CHECK(t.node_by_name("Norden") == 0);
  CHECK_THROWS(t.node_by_name("Atlantis"));
}
