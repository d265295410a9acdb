#pragma once

#include <string>
#include <vector>

#include "mgdm/util.hpp"

namespace mgdm::topo {

using NodeId = int;
using LinkId = int;

struct Link {
  LinkId id = -1;
  NodeId a = -1;
  NodeId b = -1;
  double length_km = 0.0;

  NodeId other(NodeId n) const { return n == a ? b : a; }
};

// Undirected weighted graph. Immutable after construction; safe to read from
// concurrent workers.
class Topology {
 public:
  Topology(std::vector<std::string> node_names, std::vector<Link> links);

  int node_count() const { return static_cast<int>(node_names_.size()); }
  int link_count() const { return static_cast<int>(links_.size()); }
  const std::vector<Link>& links() const { return links_; }
  const Link& link(LinkId id) const { return links_[id]; }
  const std::vector<LinkId>& incident(NodeId n) const { return adjacency_[n]; }
  const std::string& node_name(NodeId n) const { return node_names_[n]; }
  NodeId node_by_name(const std::string& name) const;

 private:
  std::vector<std::string> node_names_;
  std::vector<Link> links_;
  std::vector<std::vector<LinkId>> adjacency_;
};

// Simple path: consecutive links share a node, no node repeats.
struct Route {
  NodeId src = -1;
  NodeId dst = -1;
  std::vector<LinkId> links;
  double length_km = 0.0;
  LinkMask mask = 0;

  int hops() const { return static_cast<int>(links.size()); }
};

// Builds a Route from a link sequence, validating simplicity and summing
// lengths. Throws std::invalid_argument on a malformed sequence.
Route make_route(const Topology& t, NodeId src, const std::vector<LinkId>& links);

// Total order used everywhere routes are ranked: length, then hop count,
// then lexicographic link-id sequence.
bool route_less(const Route& lhs, const Route& rhs);

// Parses the JSON topology format: {"nodes": [...], "links": [{a,b,length_km}]}.
// Validates connectivity, positive lengths and duplicate links; link ids are
// assigned 0..L-1 in file order.
Topology load_topology(const std::string& path);
Topology parse_topology(const std::string& json_text);

// Multiplies every length by target_max_km / current max. The longest link
// comes out at exactly target_max_km.
Topology scale_link_lengths(const Topology& t, double target_max_km);

// Loopless paths in route_less order, at most k of them. Implemented as an
// ordered best-first enumeration of simple paths with length pruning, which
// reproduces the brute-force ordering exactly for any k.
std::vector<Route> k_shortest_paths(const Topology& t, NodeId src, NodeId dst, int k);

// Same contract, but links in banned_mask may not be used.
std::vector<Route> k_shortest_paths_avoiding(const Topology& t, NodeId src, NodeId dst,
                                             int k, LinkMask banned_mask);

}  // namespace mgdm::topo
