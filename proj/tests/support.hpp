#pragma once

// Instance builders shared between the unit and acceptance suites. Everything
// here is seeded through derive_seed so any failing instance can be rebuilt
// from its bank and index alone.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mgdm/oracle.hpp"
#include "mgdm/provision.hpp"
#include "mgdm/spp.hpp"
#include "mgdm/topology.hpp"
#include "mgdm/traffic.hpp"
#include "mgdm/util.hpp"

namespace testsupport {

// Small random connected multigraph-free topology: spanning tree plus a few
// extra edges, lengths mixing metro (1..40 km) and long-haul (x20) spans.
inline mgdm::topo::Topology random_tiny_topology(mgdm::SplitMix64& g) {
  int n = 3 + static_cast<int>(g.next_below(4));  // 3..6 nodes
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i < n; ++i) edges.push_back({static_cast<int>(g.next_below(i)), i});
  int extra = 1 + static_cast<int>(g.next_below(2 * n));
  for (int e = 0; e < extra; ++e) {
    int a = static_cast<int>(g.next_below(n));
    int b = static_cast<int>(g.next_below(n));
    if (a == b) continue;
    if (a > b) std::swap(a, b);
    bool dup = false;
    for (auto& [x, y] : edges) dup |= (x == a && y == b);
    if (!dup) edges.push_back({a, b});
  }
  std::string json = "{\"nodes\":[";
  for (int i = 0; i < n; ++i) json += (i ? ",\"n" : "\"n") + std::to_string(i) + "\"";
  json += "],\"links\":[";
  for (size_t i = 0; i < edges.size(); ++i) {
    double km = (1 + static_cast<int>(g.next_below(40))) * (g.next_below(4) ? 1.0 : 20.0);
    if (i) json += ",";
    json += "{\"a\":\"n" + std::to_string(edges[i].first) + "\",\"b\":\"n" +
            std::to_string(edges[i].second) +
            "\",\"length_km\":" + mgdm::double_text(km) + "}";
  }
  json += "]}";
  return mgdm::topo::parse_topology(json);
}

struct TinyOutcome {
  int compared = 0;        // both sides produced an option
  int agreed_reject = 0;   // both sides rejected
  int skipped = 0;         // the working leg itself was infeasible
  int mismatches = 0;
};

// Runs one random tiny instance: provision a short random request stream,
// then pit the incremental backup assignment against the exhaustive search
// on the final request. Returns counters for the caller to aggregate.
inline void run_tiny_instance(uint64_t bank, int index, TinyOutcome& out,
                              const mgdm::fmt::ReachTable& table) {
  using namespace mgdm;
  SplitMix64 g(derive_seed(bank, index));
  topo::Topology t = random_tiny_topology(g);
  int wavelengths = 1 + static_cast<int>(g.next_below(3));
  auto scenario = static_cast<fmt::Scenario>(g.next_below(4));
  auto protection = g.next_below(2) ? prov::Protection::Spp : prov::Protection::Dpp;
  // k large enough to enumerate every simple path at these sizes, so the
  // heuristic and the oracle consider the same route set
  prov::Context ctx{t, table, scenario, protection, wavelengths, 50};
  state::NetworkState net(t, scenario, wavelengths);

  int nreq = 1 + static_cast<int>(g.next_below(3));
  auto reqs = traffic::generate({g.next(), nreq}, t);

  // everything before the last request becomes prior state
  for (int i = 0; i + 1 < nreq; ++i) {
    auto w = prov::provision_working(ctx, net, reqs[i]);
    if (!w) continue;
    if (!spp::assign_backup(ctx, net, reqs[i], *w)) net.release(reqs[i].id);
  }

  const prov::Request& last = reqs[nreq - 1];
  auto w = prov::provision_working(ctx, net, last);
  if (!w) {
    ++out.skipped;
    return;
  }
  // the oracle is a pure query and must run before the heuristic commits
  auto want = oracle::exhaustive_backup_option(ctx, net, last, *w);
  auto got = spp::assign_backup(ctx, net, last, *w);

  if (got.has_value() != want.has_value()) {
    ++out.mismatches;
    return;
  }
  if (!got) {
    ++out.agreed_reject;
    return;
  }
  ++out.compared;
  std::vector<std::string> tokens;
  for (const auto& gc : got->groups) tokens.push_back(fmt::selector_token(gc.selector));
  if (got->route.links != want->route_links || got->wavelength != want->wavelength ||
      tokens != want->selector_tokens)
    ++out.mismatches;
}

}  // namespace testsupport
