#include "mgdm/spp.hpp"

#include <algorithm>
#include <stdexcept>

namespace mgdm::spp {

namespace {

struct FeasibleUnit {
  fmt::Selector selector;
  fmt::ModChoice modulation;
  int usable_modes = 0;
  double detection_cost = 0.0;
};

std::string combo_labels(const std::vector<prov::GroupChoice>& groups) {
  if (groups.size() == 1 && groups[0].selector.kind != fmt::Selector::Kind::Group)
    return fmt::selector_token(groups[0].selector);
  std::string s;
  for (const prov::GroupChoice& g : groups) s += fmt::selector_token(g.selector);
  return s;
}

}  // namespace

std::vector<Combo> group_combinations(fmt::Scenario scenario, int rate_gbps,
                                      double route_length_km, const fmt::ReachTable& table) {
  std::vector<FeasibleUnit> units;
  for (const fmt::ScenarioGroup& g : fmt::scenario_groups(scenario)) {
    auto mod = table.select_modulation(scenario, g.selector, route_length_km);
    if (mod) units.push_back({g.selector, *mod, g.usable_modes, g.detection_cost});
  }
  const int n = static_cast<int>(units.size());

  std::vector<Combo> out;
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    double capacity = 0.0;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) capacity += units[i].usable_modes * units[i].modulation.gbps_per_mode;
    if (capacity < rate_gbps) continue;
    // Keep only minimal sets: dropping any one member must break feasibility.
    bool minimal = true;
    if ((mask & (mask - 1)) != 0) {
      for (int i = 0; i < n && minimal; ++i) {
        if (!(mask & (1u << i))) continue;
        double without = capacity - units[i].usable_modes * units[i].modulation.gbps_per_mode;
        if (without >= rate_gbps) minimal = false;
      }
    }
    if (!minimal) continue;

    Combo c;
    c.capacity_gbps = capacity;
    for (int i = 0; i < n; ++i) {
      if (!(mask & (1u << i))) continue;
      c.groups.push_back({units[i].selector, units[i].modulation});
      c.detection_cost_total += units[i].detection_cost;
    }
    c.labels = combo_labels(c.groups);
    out.push_back(std::move(c));
  }

  std::sort(out.begin(), out.end(), [](const Combo& a, const Combo& b) {
    if (a.groups.size() != b.groups.size()) return a.groups.size() < b.groups.size();
    if (a.detection_cost_total != b.detection_cost_total)
      return a.detection_cost_total < b.detection_cost_total;
    return a.labels < b.labels;
  });
  return out;
}

namespace {

bool slot_feasible(const state::SpectrumState& sp, int link, int wl,
                   const fmt::Selector& sel, state::Role role, LinkMask working_mask) {
  bool has_working = false;
  bool has_backup = false;
  unsigned bits = 0;
  const state::SlotOccupancy* same = nullptr;
  for (const state::SlotOccupancy& r : sp.records(link, wl)) {
    if (r.role == state::Role::Working) has_working = true;
    else has_backup = true;
    bits |= fmt::group_bits(r.selector);
    if (r.selector == sel) same = &r;
  }
  if (role == state::Role::Working) {
    if (has_backup) return false;
    return (bits & fmt::group_bits(sel)) == 0;
  }
  if (has_working) return false;
  if (same)
    return role == state::Role::BackupShared && same->role == state::Role::BackupShared &&
           state::can_share_slot(*same, working_mask);
  return (bits & fmt::group_bits(sel)) == 0;
}

std::vector<fmt::Selector> combo_selectors(const Combo& c) {
  std::vector<fmt::Selector> sels;
  sels.reserve(c.groups.size());
  for (const prov::GroupChoice& g : c.groups) sels.push_back(g.selector);
  return sels;
}

}  // namespace

bool option_less(const CandidateOption& a, const CandidateOption& b) {
  if (a.incremental_spectrum != b.incremental_spectrum)
    return a.incremental_spectrum < b.incremental_spectrum;
  if (a.incremental_mimo != b.incremental_mimo) return a.incremental_mimo < b.incremental_mimo;
  if (a.route_index != b.route_index) return a.route_index < b.route_index;
  if (a.wavelength != b.wavelength) return a.wavelength < b.wavelength;
  return a.combo.labels < b.combo.labels;
}

std::vector<CandidateOption> enumerate_role_options(const prov::Context& ctx,
                                                    const state::NetworkState& net,
                                                    const prov::Request& req,
                                                    const std::vector<topo::Route>& routes,
                                                    state::Role role,
                                                    const std::vector<fmt::Selector>& reusable_sels,
                                                    LinkMask working_mask) {
  const bool share = role == state::Role::BackupShared;
  std::vector<CandidateOption> out;
  for (size_t ri = 0; ri < routes.size(); ++ri) {
    const topo::Route& route = routes[ri];
    std::vector<Combo> combos =
        group_combinations(ctx.scenario, req.rate_gbps, route.length_km, ctx.table);
    if (combos.empty()) continue;
    for (int wl = 0; wl < ctx.wavelengths; ++wl) {
      int fresh = 0;
      for (int link : route.links)
        if (!net.spectrum.pair_lit(link, wl)) ++fresh;
      for (const Combo& combo : combos) {
        bool ok = true;
        for (int link : route.links) {
          for (const prov::GroupChoice& g : combo.groups) {
            if (!slot_feasible(net.spectrum, link, wl, g.selector, role, working_mask)) {
              ok = false;
              break;
            }
          }
          if (!ok) break;
        }
        if (!ok) continue;
        CandidateOption opt;
        opt.route_index = static_cast<int>(ri);
        opt.route = &route;
        opt.wavelength = wl;
        opt.combo = combo;
        opt.incremental_spectrum = fresh;
        opt.incremental_mimo = net.receivers.additional_backup_mimo(
            req.dst, combo_selectors(combo), reusable_sels, working_mask, share, ctx.scenario);
        out.push_back(std::move(opt));
      }
    }
  }
  return out;
}

std::vector<CandidateOption> enumerate_options(const prov::Context& ctx,
                                               const state::NetworkState& net,
                                               const prov::Request& req,
                                               const prov::Assignment& working,
                                               const std::vector<topo::Route>& routes) {
  state::Role role = ctx.protection == prov::Protection::Spp ? state::Role::BackupShared
                                                             : state::Role::BackupDedicated;
  return enumerate_role_options(ctx, net, req, routes, role, prov::selectors_of(working),
                                working.route.mask);
}

std::optional<prov::Assignment> assign_backup(const prov::Context& ctx, state::NetworkState& net,
                                              const prov::Request& req,
                                              const prov::Assignment& working) {
  std::vector<topo::Route> routes = topo::k_shortest_paths_avoiding(
      ctx.topology, req.src, req.dst, ctx.k, working.route.mask);
  std::vector<CandidateOption> options = enumerate_options(ctx, net, req, working, routes);
  if (options.empty()) return std::nullopt;
  const CandidateOption* best = &options[0];
  for (const CandidateOption& o : options)
    if (option_less(o, *best)) best = &o;

  state::Role role = ctx.protection == prov::Protection::Spp ? state::Role::BackupShared
                                                             : state::Role::BackupDedicated;
  for (int link : best->route->links)
    for (const prov::GroupChoice& g : best->combo.groups)
      net.spectrum.occupy({link, best->wavelength, g.selector}, role, req.id,
                          working.route.links);
  double deployed = net.receivers.commit_backup(
      req.dst, combo_selectors(best->combo), prov::selectors_of(working), req.id,
      working.route.links, role == state::Role::BackupShared, ctx.scenario);
  if (deployed != best->incremental_mimo)
    throw std::logic_error("receiver commit disagrees with the quoted incremental cost");

  prov::Assignment a;
  a.request = req.id;
  a.role = role;
  a.route = *best->route;
  a.wavelength = best->wavelength;
  a.groups = best->combo.groups;
  a.capacity_gbps = best->combo.capacity_gbps;
  a.mimo_deployed = deployed;
  return a;
}

}  // namespace mgdm::spp
