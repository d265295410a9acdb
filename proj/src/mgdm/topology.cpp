#include "mgdm/topology.hpp"

#include <algorithm>
#include <fstream>
#include <queue>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include <json.hpp>

namespace mgdm::topo {

namespace {

void check_connected(int n, const std::vector<Link>& links) {
  if (n < 2) throw std::invalid_argument("topology must have at least 2 nodes");
  std::vector<std::vector<int>> adj(n);
  for (const auto& l : links) {
    adj[l.a].push_back(l.b);
    adj[l.b].push_back(l.a);
  }
  std::vector<bool> seen(n, false);
  std::queue<int> q;
  q.push(0);
  seen[0] = true;
  int reached = 1;
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    for (int v : adj[u]) {
      if (!seen[v]) {
        seen[v] = true;
        ++reached;
        q.push(v);
      }
    }
  }
  if (reached != n) throw std::invalid_argument("topology is disconnected");
}

}  // namespace

Topology::Topology(std::vector<std::string> node_names, std::vector<Link> links)
    : node_names_(std::move(node_names)), links_(std::move(links)) {
  const int n = static_cast<int>(node_names_.size());
  if (static_cast<int>(links_.size()) > 64)
    throw std::invalid_argument("topology exceeds 64 links (unsupported)");
  if (n > 64) throw std::invalid_argument("topology exceeds 64 nodes (unsupported)");
  std::set<std::pair<NodeId, NodeId>> seen_pairs;
  for (int i = 0; i < static_cast<int>(links_.size()); ++i) {
    Link& l = links_[i];
    l.id = i;
    if (l.a < 0 || l.a >= n || l.b < 0 || l.b >= n)
      throw std::invalid_argument("link endpoint out of range");
    if (l.a == l.b) throw std::invalid_argument("link endpoints must be distinct");
    if (!(l.length_km > 0.0))
      throw std::invalid_argument("non-positive length on link " + std::to_string(i));
    auto key = std::minmax(l.a, l.b);
    if (!seen_pairs.insert({key.first, key.second}).second)
      throw std::invalid_argument("duplicate link between nodes " +
                                  std::to_string(l.a) + " and " + std::to_string(l.b));
  }
  check_connected(n, links_);
  adjacency_.assign(n, {});
  for (const auto& l : links_) {
    adjacency_[l.a].push_back(l.id);
    adjacency_[l.b].push_back(l.id);
  }
}

NodeId Topology::node_by_name(const std::string& name) const {
  for (int i = 0; i < node_count(); ++i)
    if (node_names_[i] == name) return i;
  throw std::invalid_argument("unknown node name: " + name);
}

Route make_route(const Topology& t, NodeId src, const std::vector<LinkId>& links) {
  if (links.empty()) throw std::invalid_argument("route must have at least one link");
  Route r;
  r.src = src;
  r.links = links;
  std::vector<bool> visited(t.node_count(), false);
  visited[src] = true;
  NodeId at = src;
  for (LinkId id : links) {
    const Link& l = t.link(id);
    if (l.a != at && l.b != at)
      throw std::invalid_argument("route links are not consecutive");
    at = l.other(at);
    if (visited[at]) throw std::invalid_argument("route repeats a node");
    visited[at] = true;
    r.length_km += l.length_km;
    r.mask |= link_bit(id);
  }
  r.dst = at;
  return r;
}

bool route_less(const Route& lhs, const Route& rhs) {
  if (lhs.length_km != rhs.length_km) return lhs.length_km < rhs.length_km;
  if (lhs.hops() != rhs.hops()) return lhs.hops() < rhs.hops();
  return std::lexicographical_compare(lhs.links.begin(), lhs.links.end(),
                                      rhs.links.begin(), rhs.links.end());
}

Topology parse_topology(const std::string& json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("topology parse error: ") + e.what());
  }
  if (!j.contains("nodes") || !j.contains("links"))
    throw std::invalid_argument("topology parse error: missing nodes or links");
  std::vector<std::string> names = j.at("nodes").get<std::vector<std::string>>();
  std::unordered_map<std::string, int> index;
  for (int i = 0; i < static_cast<int>(names.size()); ++i) {
    if (!index.emplace(names[i], i).second)
      throw std::invalid_argument("duplicate node name: " + names[i]);
  }
  std::vector<Link> links;
  for (const auto& lj : j.at("links")) {
    Link l;
    const std::string a = lj.at("a").get<std::string>();
    const std::string b = lj.at("b").get<std::string>();
    auto ita = index.find(a);
    auto itb = index.find(b);
    if (ita == index.end() || itb == index.end())
      throw std::invalid_argument("link references unknown node");
    l.a = ita->second;
    l.b = itb->second;
    l.length_km = lj.at("length_km").get<double>();
    links.push_back(l);
  }
  return Topology(std::move(names), std::move(links));
}

Topology load_topology(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open topology file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_topology(ss.str());
}

Topology scale_link_lengths(const Topology& t, double target_max_km) {
  if (!(target_max_km > 0.0))
    throw std::invalid_argument("target max link length must be positive");
  double cur_max = 0.0;
  for (const auto& l : t.links()) cur_max = std::max(cur_max, l.length_km);
  std::vector<Link> links = t.links();
  // (len / max) * target makes the current maximum land on target exactly.
  for (auto& l : links) l.length_km = (l.length_km / cur_max) * target_max_km;
  std::vector<std::string> names;
  names.reserve(t.node_count());
  for (int i = 0; i < t.node_count(); ++i) names.push_back(t.node_name(i));
  return Topology(std::move(names), std::move(links));
}

namespace {

struct PartialPath {
  double length = 0.0;
  std::vector<LinkId> links;
  NodeId at = -1;
  uint64_t visited = 0;  // node-id bitmask; node count <= 64 follows from link cap
};

struct PartialOrder {
  // priority_queue is a max-heap; invert route_less-style ordering.
  bool operator()(const PartialPath& a, const PartialPath& b) const {
    if (a.length != b.length) return a.length > b.length;
    if (a.links.size() != b.links.size()) return a.links.size() > b.links.size();
    return std::lexicographical_compare(b.links.begin(), b.links.end(),
                                        a.links.begin(), a.links.end());
  }
};

}  // namespace

std::vector<Route> k_shortest_paths_avoiding(const Topology& t, NodeId src, NodeId dst,
                                             int k, LinkMask banned_mask) {
  if (src == dst) throw std::invalid_argument("src and dst must differ");
  if (src < 0 || src >= t.node_count() || dst < 0 || dst >= t.node_count())
    throw std::invalid_argument("node id out of range");
  if (k <= 0) throw std::invalid_argument("k must be positive");

  std::vector<Route> out;
  std::priority_queue<PartialPath, std::vector<PartialPath>, PartialOrder> frontier;
  PartialPath start;
  start.at = src;
  start.visited = uint64_t{1} << src;
  frontier.push(start);

  while (!frontier.empty()) {
    PartialPath p = frontier.top();
    frontier.pop();
    // Completed paths with this prefix's length can no longer beat the k-th
    // result; lengths only grow along extensions.
    if (static_cast<int>(out.size()) == k) break;
    if (p.at == dst && !p.links.empty()) {
      out.push_back(make_route(t, src, p.links));
      continue;
    }
    for (LinkId id : t.incident(p.at)) {
      if (banned_mask & link_bit(id)) continue;
      const Link& l = t.link(id);
      NodeId nxt = l.other(p.at);
      if (p.visited & (uint64_t{1} << nxt)) continue;
      PartialPath q = p;
      q.length += l.length_km;
      q.links.push_back(id);
      q.at = nxt;
      q.visited |= uint64_t{1} << nxt;
      frontier.push(q);
    }
  }
  return out;
}

std::vector<Route> k_shortest_paths(const Topology& t, NodeId src, NodeId dst, int k) {
  return k_shortest_paths_avoiding(t, src, dst, k, 0);
}

}  // namespace mgdm::topo
