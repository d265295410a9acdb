#pragma once

#include <cstdint>
#include <vector>

#include "mgdm/fmt.hpp"
#include "mgdm/provision.hpp"
#include "mgdm/topology.hpp"

namespace mgdm::traffic {

struct TrafficConfig {
  uint64_t seed = 0;
  int count = 0;
};

// Deterministic request stream: per request, one draw for the ordered node
// pair (uniform over the N*(N-1) pairs) and one draw for the rate (uniform
// over 100/200/300 Gb/s). Everything comes from SplitMix64, so the stream is
// identical on every platform. Request ids are 1-based arrival positions.
std::vector<prov::Request> generate(const TrafficConfig& cfg, const topo::Topology& t);

struct CalibrationConfig {
  int wavelengths = 100;
  int k = 3;
  double target_rejection = 0.01;
  int replicas = 10;
  uint64_t seed = 0;
  int max_count = 1 << 20;
};

struct CalibrationResult {
  int high_load = 0;
  int low_load = 0;  // ceil(high_load / 2)
  double mean_rejection_at_high = 0.0;
};

// Mean rejection ratio over the replicas at a fixed request count, simulated
// with single-mode transmission under dedicated protection (the reference
// load condition).
double mean_rejection(const topo::Topology& t, const fmt::ReachTable& table,
                      const CalibrationConfig& cfg, int count);

// Smallest count whose mean rejection reaches the target: doubling until the
// target is bracketed, then bisection on the measured means. Throws when the
// target is never reached within max_count.
CalibrationResult calibrate_high_load(const topo::Topology& t, const fmt::ReachTable& table,
                                      const CalibrationConfig& cfg);

}  // namespace mgdm::traffic
