#pragma once

#include <string>

#include "mgdm/fmt.hpp"
#include "mgdm/topology.hpp"

namespace mgdm::data {

// Reconstructed 17-node / 26-link German reference backbone. Link lengths are
// approximate city-pair distances; documented in data/german17.json, which
// holds the same bytes.
const std::string& german17_json();
topo::Topology german17();

// Default reach/capacity table (see data/default_reach_table.json and the
// README for the rationale behind the numbers).
const std::string& default_reach_table_json();
fmt::ReachTable default_reach_table();

// Resolves "german17" to the embedded topology, anything else as a file path.
topo::Topology resolve_topology(const std::string& name_or_path);

}  // namespace mgdm::data
