#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mgdm/provision.hpp"
#include "mgdm/traffic.hpp"

namespace mgdm::experiments {

// Exact per-run aggregates the metrics divide out. Spectrum shows up twice:
// lit pairs are (link, wavelength) pairs whose occupants are all backups (the
// reported spectrum metric; co-located groups count once), records are the
// group-granular slot entries (a shared slot counts once). MIMO cost is the
// summed cost of deployed backup receiver units, shared units once.
struct RawTotals {
  int requested = 0;
  int accepted = 0;
  long long accepted_gbps = 0;
  int backup_lit_pairs = 0;
  int backup_records = 0;
  double backup_mimo_cost = 0.0;
};

RawTotals collect_totals(const prov::ProvisionResult& result, const state::NetworkState& net,
                         const std::vector<prov::Request>& requests);

struct MetricsRecord {
  std::string scenario;
  std::string mode;
  std::string regime;  // "S" (short links) or "L" (long links)
  std::string load;    // "high" or "low"
  uint64_t seed = 0;
  // Absent (not zero) when the run accepted nothing.
  std::optional<double> spectrum_per_req;
  std::optional<double> mimo_per_tbps;
  double rejection = 0.0;
};

// Metric fields only; the sweep labels (scenario/mode/regime/load/seed) stay
// at their defaults for the caller to fill in.
MetricsRecord compute_metrics(const prov::ProvisionResult& result,
                              const state::NetworkState& net,
                              const std::vector<prov::Request>& requests);

struct SweepConfig {
  int wavelengths = 100;
  int k = 3;
  uint64_t seed = 1;
  int calibration_replicas = 10;
  double target_rejection = 0.01;
  double short_max_km = 3.0;
  double long_max_km = 380.0;
  // Pinned per-regime high-load counts skip the calibration searches.
  std::optional<int> high_load_short;
  std::optional<int> high_load_long;
};

// The full grid: regime (S, L) x scenario x protection x load, minus the
// MF-MGDM cells of the L regime, whose reach gate rejects everything. One
// deterministic traffic realization per cell, seeded from the config seed
// and the cell's position in the fixed enumeration order.
std::vector<MetricsRecord> run_sweep(const topo::Topology& base, const fmt::ReachTable& table,
                                     const SweepConfig& cfg);

// Fixed-schema CSV: scenario,mode,regime,load,seed,spectrum_per_req,
// mimo_per_tbps,rejection. Absent metrics become empty cells. Numbers are
// emitted in shortest round-trip form, so equal configs give identical bytes.
std::string to_csv(const std::vector<MetricsRecord>& records);

}  // namespace mgdm::experiments
