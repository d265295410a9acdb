#include "mgdm/traffic.hpp"

#include <stdexcept>

#include "mgdm/state.hpp"
#include "mgdm/util.hpp"

namespace mgdm::traffic {

std::vector<prov::Request> generate(const TrafficConfig& cfg, const topo::Topology& t) {
  if (cfg.count < 0) throw std::invalid_argument("negative request count");
  const uint64_t n = t.node_count();
  SplitMix64 g(cfg.seed);
  std::vector<prov::Request> out;
  out.reserve(cfg.count);
  for (int i = 0; i < cfg.count; ++i) {
    uint64_t pair = g.next_below(n * (n - 1));
    int src = static_cast<int>(pair / (n - 1));
    int rest = static_cast<int>(pair % (n - 1));
    int dst = rest + (rest >= src ? 1 : 0);
    int rate = 100 * (1 + static_cast<int>(g.next_below(3)));
    out.push_back({i + 1, src, dst, rate});
  }
  return out;
}

double mean_rejection(const topo::Topology& t, const fmt::ReachTable& table,
                      const CalibrationConfig& cfg, int count) {
  double sum = 0.0;
  for (int r = 0; r < cfg.replicas; ++r) {
    std::vector<prov::Request> requests = generate({derive_seed(cfg.seed, r), count}, t);
    state::NetworkState net(t, fmt::Scenario::Smt, cfg.wavelengths);
    prov::Context ctx{t, table, fmt::Scenario::Smt, prov::Protection::Dpp,
                      cfg.wavelengths, cfg.k};
    sum += prov::provision_all(ctx, net, requests).rejection_ratio;
  }
  return sum / cfg.replicas;
}

CalibrationResult calibrate_high_load(const topo::Topology& t, const fmt::ReachTable& table,
                                      const CalibrationConfig& cfg) {
  if (cfg.target_rejection <= 0.0 || cfg.target_rejection > 1.0)
    throw std::invalid_argument("target rejection must be in (0, 1]");
  if (cfg.replicas <= 0) throw std::invalid_argument("replica count must be positive");

  // Double until the target is reached, keeping the largest count below it.
  int lo = 0;  // mean rejection at 0 requests is 0 by definition
  int hi = 1;
  double mean_hi = mean_rejection(t, table, cfg, hi);
  while (mean_hi < cfg.target_rejection) {
    lo = hi;
    if (hi > cfg.max_count / 2)
      throw std::runtime_error("rejection never reaches the target within search bounds");
    hi *= 2;
    mean_hi = mean_rejection(t, table, cfg, hi);
  }

  // Bisect on measured means; lo stays below target, hi at or above.
  while (hi - lo > 1) {
    int mid = lo + (hi - lo) / 2;
    double m = mean_rejection(t, table, cfg, mid);
    if (m >= cfg.target_rejection) {
      hi = mid;
      mean_hi = m;
    } else {
      lo = mid;
    }
  }

  CalibrationResult res;
  res.high_load = hi;
  res.low_load = (hi + 1) / 2;
  res.mean_rejection_at_high = mean_hi;
  return res;
}

}  // namespace mgdm::traffic
