#pragma once

#include <optional>
#include <vector>

#include "mgdm/fmt.hpp"
#include "mgdm/state.hpp"
#include "mgdm/topology.hpp"

namespace mgdm::prov {

enum class Protection { Spp, Dpp };

const char* to_string(Protection p);
Protection protection_from_string(const std::string& s);

struct Request {
  int id = -1;
  int src = -1;
  int dst = -1;
  int rate_gbps = 0;
};

struct GroupChoice {
  fmt::Selector selector;
  fmt::ModChoice modulation;
};

struct Assignment {
  int request = -1;
  state::Role role = state::Role::Working;
  topo::Route route;
  int wavelength = -1;
  std::vector<GroupChoice> groups;  // in selector order
  double capacity_gbps = 0.0;
  double mimo_deployed = 0.0;  // receiver cost newly deployed when committing
};

std::vector<fmt::Selector> selectors_of(const Assignment& a);

// Immutable per-run configuration shared by the provisioning and backup
// assignment passes.
struct Context {
  const topo::Topology& topology;
  const fmt::ReachTable& table;
  fmt::Scenario scenario = fmt::Scenario::Smt;
  Protection protection = Protection::Dpp;
  int wavelengths = 100;
  int k = 3;
};

// First-fit working lightpath: cheapest (newly lit pairs, receiver cost)
// option over k shortest routes, wavelengths ascending, and the minimal group
// combinations covering the rate. Commits to the state on success; rejection
// is a value, not an error.
std::optional<Assignment> provision_working(const Context& ctx, state::NetworkState& net,
                                            const Request& req);

struct ProvisionResult {
  std::vector<Assignment> assignments;  // working/backup pairs in arrival order
  std::vector<int> rejected;            // request ids
  int accepted = 0;
  double rejection_ratio = 0.0;
};

// Working then backup per request, in request order. A request whose backup
// cannot be placed is rolled back entirely and counted rejected.
ProvisionResult provision_all(const Context& ctx, state::NetworkState& net,
                              const std::vector<Request>& requests);

// Assignment log CSV: request,role,links,wavelength,groups,modulations,
// capacity_gbps,mimo_deployed with pipe-separated list fields. The loader
// restores what the legality checker needs (routes as link lists, roles,
// wavelengths, groups); route endpoints and lengths are not part of the log.
std::string assignments_to_csv(const std::vector<Assignment>& log);
std::vector<Assignment> load_assignment_log(const std::string& path);

}  // namespace mgdm::prov
