#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mgdm/provision.hpp"

namespace mgdm::oracle {

// What the exhaustive search settles on. Kept structural (links, wavelength,
// selector tokens) so tests can compare it against an Assignment without
// touching the heuristic's own types.
struct Choice {
  std::vector<int> route_links;
  int wavelength = -1;
  std::vector<std::string> selector_tokens;  // selector order
  int spectrum = 0;
  double mimo = 0.0;
};

// Brute-force best backup option: every simple route avoiding the working
// links, every wavelength, every minimal rate-covering selector subset, with
// feasibility, sharing and both cost terms re-derived from first principles.
// The heuristic's cost code is deliberately not reused. Only instances within
// the small-instance bounds (<= 6 nodes, <= 3 wavelengths) are accepted.
std::optional<Choice> exhaustive_backup_option(const prov::Context& ctx,
                                               const state::NetworkState& net,
                                               const prov::Request& req,
                                               const prov::Assignment& working);

// Post-hoc legality sweep over a finished run's assignment log: every backup
// slot shared by several requests must belong to requests whose working
// routes are pairwise link-disjoint. Recomputed from the log alone. Throws on
// a malformed log (a backup with no working leg).
bool verify_sharing_legality(const std::vector<prov::Assignment>& log);

}  // namespace mgdm::oracle
