#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mgdm/provision.hpp"

namespace mgdm::spp {

// One rate-covering set of selectable units with its per-unit modulation.
struct Combo {
  std::vector<prov::GroupChoice> groups;  // selector order
  double capacity_gbps = 0.0;
  double detection_cost_total = 0.0;
  std::string labels;  // sorted selector tokens, e.g. "AC", "single", "joint"
};

// All minimal feasible unit sets for the rate at the given route length:
// every set whose capacity (at each unit's best feasible modulation) covers
// the rate and that contains no smaller feasible set, ordered by unit count,
// then total detection cost, then labels.
std::vector<Combo> group_combinations(fmt::Scenario scenario, int rate_gbps,
                                      double route_length_km, const fmt::ReachTable& table);

struct CandidateOption {
  int route_index = -1;  // position in the enumerated route list
  const topo::Route* route = nullptr;
  int wavelength = -1;
  Combo combo;
  int incremental_spectrum = 0;   // newly lit (link, wavelength) pairs
  double incremental_mimo = 0.0;  // receiver cost after reuse and sharing
};

// Cost order used everywhere a single option must win: spectrum, then MIMO,
// then route position (routes come sorted by length), wavelength, labels.
bool option_less(const CandidateOption& a, const CandidateOption& b);

// Shared enumeration core. Working legs pass Role::Working with no reusable
// receivers and an empty mask; backup legs pass their protection's role, the
// working path's selectors (receivers the backup may reuse for free) and the
// working path's link mask (what the sharing rule checks against).
std::vector<CandidateOption> enumerate_role_options(const prov::Context& ctx,
                                                    const state::NetworkState& net,
                                                    const prov::Request& req,
                                                    const std::vector<topo::Route>& routes,
                                                    state::Role role,
                                                    const std::vector<fmt::Selector>& reusable_sels,
                                                    LinkMask working_mask);

// Every feasible backup option for the request: k shortest routes that avoid
// the working route's links, crossed with all wavelengths and all minimal
// group combinations. Sharing legality is already enforced; options that
// would violate it are absent.
std::vector<CandidateOption> enumerate_options(const prov::Context& ctx,
                                               const state::NetworkState& net,
                                               const prov::Request& req,
                                               const prov::Assignment& working,
                                               const std::vector<topo::Route>& routes);

// Picks the option_less-minimal option and commits it (shared slots under
// SPP, dedicated under DPP, receivers with sharing bookkeeping). Rejection is
// a value.
std::optional<prov::Assignment> assign_backup(const prov::Context& ctx,
                                              state::NetworkState& net,
                                              const prov::Request& req,
                                              const prov::Assignment& working);

}  // namespace mgdm::spp
