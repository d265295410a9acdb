#include "mgdm/oracle.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace mgdm::oracle {

// Everything below re-derives costs and rules directly from the scenario
// definitions and raw state records. Keeping it independent of the heuristic
// implementation is the point; resist the urge to deduplicate.

namespace {

struct OracleUnit {
  fmt::Selector selector;
  int usable_modes = 0;
  int detected_modes = 0;
};

std::vector<OracleUnit> scenario_units(fmt::Scenario s) {
  std::vector<OracleUnit> out;
  switch (s) {
    case fmt::Scenario::Smt:
      out.push_back({{fmt::Selector::Kind::Single, fmt::Mg::A}, 1, 1});
      break;
    case fmt::Scenario::FullMimo:
      out.push_back({{fmt::Selector::Kind::Joint, fmt::Mg::A}, 15, 15});
      break;
    case fmt::Scenario::Mgdm:
      for (int g = 0; g < fmt::kGroupCount; ++g)
        out.push_back({{fmt::Selector::Kind::Group, static_cast<fmt::Mg>(g)}, g + 1, g + 1});
      break;
    case fmt::Scenario::MfMgdm:
      for (int g = 0; g < fmt::kGroupCount; ++g)
        out.push_back({{fmt::Selector::Kind::Group, static_cast<fmt::Mg>(g)}, 1, 1});
      break;
  }
  return out;
}

double unit_detection_cost(const OracleUnit& u) {
  double n = 2.0 * u.detected_modes;
  return n * n / 4.0;
}

unsigned unit_bits(const fmt::Selector& sel) {
  if (sel.kind == fmt::Selector::Kind::Group) return 1u << static_cast<int>(sel.group);
  return (1u << fmt::kGroupCount) - 1;
}

LinkMask mask_from_links(const std::vector<int>& links) {
  LinkMask m = 0;
  for (int id : links) m |= LinkMask{1} << id;
  return m;
}

// Highest per-mode capacity whose reach covers the length, straight off the
// raw table rows.
std::optional<double> best_gbps(const fmt::ReachTable& table, fmt::Scenario s,
                                const fmt::Selector& sel, double length_km) {
  std::optional<double> best;
  for (const fmt::ReachEntry& e : table.entries()) {
    if (e.scenario != s || !(e.selector == sel) || e.reach_km < length_km) continue;
    if (!best || e.gbps_per_mode > *best) best = e.gbps_per_mode;
  }
  return best;
}

struct SimplePath {
  std::vector<int> links;
  double length_km = 0.0;
};

void dfs_paths(const topo::Topology& t, int at, int dst, LinkMask banned, uint64_t visited,
               SimplePath& cur, std::vector<SimplePath>& out) {
  if (at == dst) {
    out.push_back(cur);
    return;
  }
  for (int lid : t.incident(at)) {
    if (banned & (LinkMask{1} << lid)) continue;
    const topo::Link& l = t.link(lid);
    int next = l.other(at);
    if (visited & (uint64_t{1} << next)) continue;
    cur.links.push_back(lid);
    cur.length_km += l.length_km;
    dfs_paths(t, next, dst, banned, visited | (uint64_t{1} << next), cur, out);
    cur.links.pop_back();
    cur.length_km -= l.length_km;
  }
}

std::vector<SimplePath> all_simple_paths(const topo::Topology& t, int src, int dst,
                                         LinkMask banned) {
  std::vector<SimplePath> out;
  SimplePath cur;
  dfs_paths(t, src, dst, banned, uint64_t{1} << src, cur, out);
  std::sort(out.begin(), out.end(), [](const SimplePath& a, const SimplePath& b) {
    if (a.length_km != b.length_km) return a.length_km < b.length_km;
    if (a.links.size() != b.links.size()) return a.links.size() < b.links.size();
    return a.links < b.links;
  });
  return out;
}

struct SubsetChoice {
  std::vector<const OracleUnit*> units;
  std::vector<double> gbps;  // per unit
  std::string labels;
};

std::string subset_labels(const std::vector<const OracleUnit*>& units) {
  if (units.size() == 1 && units[0]->selector.kind != fmt::Selector::Kind::Group)
    return fmt::selector_token(units[0]->selector);
  std::string s;
  for (const OracleUnit* u : units) s += fmt::selector_token(u->selector);
  return s;
}

// All minimal rate-covering subsets. Minimality is checked the blunt way,
// against every other feasible subset.
std::vector<SubsetChoice> minimal_subsets(const std::vector<OracleUnit>& units,
                                          const fmt::ReachTable& table, fmt::Scenario s,
                                          double length_km, int rate_gbps) {
  const int n = static_cast<int>(units.size());
  std::vector<std::optional<double>> gbps(n);
  for (int i = 0; i < n; ++i) gbps[i] = best_gbps(table, s, units[i].selector, length_km);

  std::vector<unsigned> feasible;
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    double cap = 0.0;
    bool ok = true;
    for (int i = 0; i < n; ++i) {
      if (!(mask & (1u << i))) continue;
      if (!gbps[i]) {
        ok = false;
        break;
      }
      cap += units[i].usable_modes * *gbps[i];
    }
    if (ok && cap >= rate_gbps) feasible.push_back(mask);
  }

  std::vector<SubsetChoice> out;
  for (unsigned mask : feasible) {
    bool minimal = true;
    for (unsigned other : feasible)
      if (other != mask && (other & mask) == other) minimal = false;
    if (!minimal) continue;
    SubsetChoice c;
    for (int i = 0; i < n; ++i) {
      if (!(mask & (1u << i))) continue;
      c.units.push_back(&units[i]);
      c.gbps.push_back(*gbps[i]);
    }
    c.labels = subset_labels(c.units);
    out.push_back(std::move(c));
  }
  return out;
}

bool slot_ok(const state::SpectrumState& sp, int link, int wl, const fmt::Selector& sel,
             bool shared_mode, LinkMask working_mask) {
  bool has_working = false;
  unsigned bits = 0;
  const state::SlotOccupancy* same = nullptr;
  for (const state::SlotOccupancy& r : sp.records(link, wl)) {
    if (r.role == state::Role::Working) has_working = true;
    bits |= unit_bits(r.selector);
    if (r.selector == sel) same = &r;
  }
  if (has_working) return false;
  if (same) {
    if (!shared_mode || same->role != state::Role::BackupShared) return false;
    for (const state::Owner& o : same->owners)
      if (mask_from_links(o.working_links) & working_mask) return false;
    return true;
  }
  return (bits & unit_bits(sel)) == 0;
}

bool receiver_shareable(const state::MimoPool& pool, int node, const fmt::Selector& sel,
                        LinkMask working_mask) {
  for (const state::ReceiverUnit& u : pool.at_node(node)) {
    if (u.role != state::Role::BackupShared || !(u.selector == sel)) continue;
    bool ok = true;
    for (const state::Owner& o : u.owners)
      if (mask_from_links(o.working_links) & working_mask) ok = false;
    if (ok) return true;
  }
  return false;
}

}  // namespace

std::optional<Choice> exhaustive_backup_option(const prov::Context& ctx,
                                               const state::NetworkState& net,
                                               const prov::Request& req,
                                               const prov::Assignment& working) {
  if (ctx.topology.node_count() > 6 || ctx.wavelengths > 3)
    throw std::invalid_argument("instance exceeds oracle bounds");

  const bool shared_mode = ctx.protection == prov::Protection::Spp;
  const LinkMask working_mask = mask_from_links(working.route.links);
  std::vector<fmt::Selector> working_sels;
  for (const prov::GroupChoice& g : working.groups) working_sels.push_back(g.selector);

  std::vector<SimplePath> paths =
      all_simple_paths(ctx.topology, req.src, req.dst, working_mask);
  std::vector<OracleUnit> units = scenario_units(ctx.scenario);

  std::optional<Choice> best;
  int best_route_pos = -1;
  std::string best_labels;
  for (size_t pi = 0; pi < paths.size(); ++pi) {
    const SimplePath& path = paths[pi];
    std::vector<SubsetChoice> subsets =
        minimal_subsets(units, ctx.table, ctx.scenario, path.length_km, req.rate_gbps);
    for (int wl = 0; wl < ctx.wavelengths; ++wl) {
      for (const SubsetChoice& sub : subsets) {
        bool ok = true;
        for (int link : path.links) {
          for (const OracleUnit* u : sub.units)
            if (!slot_ok(net.spectrum, link, wl, u->selector, shared_mode, working_mask)) {
              ok = false;
              break;
            }
          if (!ok) break;
        }
        if (!ok) continue;

        int spectrum = 0;
        for (int link : path.links)
          if (net.spectrum.records(link, wl).empty()) ++spectrum;

        double mimo = 0.0;
        for (const OracleUnit* u : sub.units) {
          bool reused = false;
          for (const fmt::Selector& w : working_sels)
            if (w == u->selector) reused = true;
          if (reused) continue;
          if (shared_mode && receiver_shareable(net.receivers, req.dst, u->selector, working_mask))
            continue;
          mimo += unit_detection_cost(*u);
        }

        bool better = false;
        if (!best) {
          better = true;
        } else if (spectrum != best->spectrum) {
          better = spectrum < best->spectrum;
        } else if (mimo != best->mimo) {
          better = mimo < best->mimo;
        } else if (static_cast<int>(pi) != best_route_pos) {
          better = static_cast<int>(pi) < best_route_pos;
        } else if (wl != best->wavelength) {
          better = wl < best->wavelength;
        } else {
          better = sub.labels < best_labels;
        }
        if (!better) continue;

        Choice c;
        c.route_links = path.links;
        c.wavelength = wl;
        for (const OracleUnit* u : sub.units)
          c.selector_tokens.push_back(fmt::selector_token(u->selector));
        c.spectrum = spectrum;
        c.mimo = mimo;
        best = std::move(c);
        best_route_pos = static_cast<int>(pi);
        best_labels = sub.labels;
      }
    }
  }
  return best;
}

bool verify_sharing_legality(const std::vector<prov::Assignment>& log) {
  std::map<int, LinkMask> working_of;
  for (const prov::Assignment& a : log)
    if (a.role == state::Role::Working) working_of[a.request] = mask_from_links(a.route.links);

  // Slot key -> owning requests, rebuilt from the log alone.
  std::map<std::tuple<int, int, std::string>, std::vector<int>> sharers;
  for (const prov::Assignment& a : log) {
    if (a.role == state::Role::Working) continue;
    if (!working_of.count(a.request))
      throw std::invalid_argument("malformed log: backup without a working leg");
    for (int link : a.route.links)
      for (const prov::GroupChoice& g : a.groups)
        sharers[{link, a.wavelength, fmt::selector_token(g.selector)}].push_back(a.request);
  }

  for (const auto& [key, owners] : sharers) {
    for (size_t i = 0; i < owners.size(); ++i)
      for (size_t j = i + 1; j < owners.size(); ++j)
        if (working_of[owners[i]] & working_of[owners[j]]) return false;
  }
  return true;
}

}  // namespace mgdm::oracle
