// mgdmsim: provisioning simulator for protected lightpaths on networks with
// mode-group multiplexed links. Four subcommands: run (one traffic cell),
// sweep (the full scenario/protection/regime/load grid), calibrate (search
// for the request count that hits a target rejection ratio), verify (re-check
// the sharing legality of a finished run's assignment log).

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "mgdm/data.hpp"
#include "mgdm/experiments.hpp"
#include "mgdm/oracle.hpp"
#include "mgdm/provision.hpp"
#include "mgdm/traffic.hpp"
#include "mgdm/util.hpp"

namespace {

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

mgdm::fmt::ReachTable resolve_table(const std::string& path) {
  if (path.empty()) return mgdm::data::default_reach_table();
  return mgdm::fmt::load_reach_table(path);
}

mgdm::topo::Topology resolve_scaled_topology(const std::string& name, double max_link_km) {
  mgdm::topo::Topology t = mgdm::data::resolve_topology(name);
  if (max_link_km > 0.0) return mgdm::topo::scale_link_lengths(t, max_link_km);
  return t;
}

// An out-of-reach configuration (say MF-MGDM on continental link lengths) is
// allowed, it just rejects everything; point that out once instead of leaving
// the user staring at rejection 1.
void warn_if_nothing_reaches(const mgdm::topo::Topology& t, const mgdm::fmt::ReachTable& table,
                             mgdm::fmt::Scenario scenario) {
  double min_link = 0.0;
  for (int i = 0; i < t.link_count(); ++i) {
    double len = t.link(i).length_km;
    if (i == 0 || len < min_link) min_link = len;
  }
  if (t.link_count() > 0 && table.max_reach(scenario) < min_link)
    std::cerr << "warning: shortest link (" << min_link
              << " km) exceeds the scenario's best reach; every request will be rejected\n";
}

struct RunOptions {
  std::string topology = "german17";
  double max_link_km = 0.0;  // 0 keeps the lengths as loaded
  std::string reach_table;
  std::string scenario = "smt";
  std::string mode = "dpp";
  int wavelengths = 100;
  int k = 3;
  uint64_t seed = 1;
  int requests = 0;
  bool calibrate = false;
  int replicas = 10;
  double target = 0.01;
  std::string assignments_out;
  std::string dump_state;
  std::string results_out;
};

int do_run(const RunOptions& opt) {
  mgdm::topo::Topology t = resolve_scaled_topology(opt.topology, opt.max_link_km);
  mgdm::fmt::ReachTable table = resolve_table(opt.reach_table);
  mgdm::fmt::Scenario scenario = mgdm::fmt::scenario_from_string(opt.scenario);
  mgdm::prov::Protection mode = mgdm::prov::protection_from_string(opt.mode);
  warn_if_nothing_reaches(t, table, scenario);

  int count = opt.requests;
  if (opt.calibrate) {
    mgdm::traffic::CalibrationConfig ccfg;
    ccfg.wavelengths = opt.wavelengths;
    ccfg.k = opt.k;
    ccfg.target_rejection = opt.target;
    ccfg.replicas = opt.replicas;
    ccfg.seed = mgdm::derive_seed(opt.seed, 0xCA11);
    count = mgdm::traffic::calibrate_high_load(t, table, ccfg).high_load;
    std::cerr << "calibrated request count: " << count << "\n";
  }
  if (count <= 0) throw std::runtime_error("need --requests N or --calibrate");

  std::vector<mgdm::prov::Request> reqs = mgdm::traffic::generate({opt.seed, count}, t);
  mgdm::state::NetworkState net(t, scenario, opt.wavelengths);
  mgdm::prov::Context ctx{t, table, scenario, mode, opt.wavelengths, opt.k};
  mgdm::prov::ProvisionResult result = mgdm::prov::provision_all(ctx, net, reqs);
  net.check_invariants();

  mgdm::experiments::MetricsRecord m = mgdm::experiments::compute_metrics(result, net, reqs);
  m.scenario = opt.scenario;
  m.mode = opt.mode;
  m.seed = opt.seed;
  std::string csv = mgdm::experiments::to_csv({m});
  std::cout << csv;
  if (!opt.results_out.empty()) write_file(opt.results_out, csv);
  if (!opt.assignments_out.empty())
    write_file(opt.assignments_out, mgdm::prov::assignments_to_csv(result.assignments));
  if (!opt.dump_state.empty()) write_file(opt.dump_state, net.dump());
  return 0;
}

struct SweepOptions {
  std::string topology = "german17";
  std::string reach_table;
  int wavelengths = 100;
  int k = 3;
  uint64_t seed = 1;
  int replicas = 10;
  double target = 0.01;
  double short_km = 3.0;
  double long_km = 380.0;
  int high_load_short = 0;  // 0 means calibrate
  int high_load_long = 0;
  std::string results_out;
};

int do_sweep(const SweepOptions& opt) {
  mgdm::topo::Topology base = mgdm::data::resolve_topology(opt.topology);
  mgdm::fmt::ReachTable table = resolve_table(opt.reach_table);
  mgdm::experiments::SweepConfig cfg;
  cfg.wavelengths = opt.wavelengths;
  cfg.k = opt.k;
  cfg.seed = opt.seed;
  cfg.calibration_replicas = opt.replicas;
  cfg.target_rejection = opt.target;
  cfg.short_max_km = opt.short_km;
  cfg.long_max_km = opt.long_km;
  if (opt.high_load_short > 0) cfg.high_load_short = opt.high_load_short;
  if (opt.high_load_long > 0) cfg.high_load_long = opt.high_load_long;
  std::vector<mgdm::experiments::MetricsRecord> records =
      mgdm::experiments::run_sweep(base, table, cfg);
  std::string csv = mgdm::experiments::to_csv(records);
  std::cout << csv;
  if (!opt.results_out.empty()) write_file(opt.results_out, csv);
  return 0;
}

struct CalibrateOptions {
  std::string topology = "german17";
  double max_link_km = 0.0;
  std::string reach_table;
  int wavelengths = 100;
  int k = 3;
  uint64_t seed = 0;
  int replicas = 10;
  double target = 0.01;
};

int do_calibrate(const CalibrateOptions& opt) {
  mgdm::topo::Topology t = resolve_scaled_topology(opt.topology, opt.max_link_km);
  mgdm::fmt::ReachTable table = resolve_table(opt.reach_table);
  mgdm::traffic::CalibrationConfig cfg;
  cfg.wavelengths = opt.wavelengths;
  cfg.k = opt.k;
  cfg.target_rejection = opt.target;
  cfg.replicas = opt.replicas;
  cfg.seed = opt.seed;
  mgdm::traffic::CalibrationResult r = mgdm::traffic::calibrate_high_load(t, table, cfg);
  std::cout << "high_load=" << r.high_load << "\n"
            << "low_load=" << r.low_load << "\n"
            << "mean_rejection_at_high=" << mgdm::double_text(r.mean_rejection_at_high) << "\n";
  return 0;
}

int do_verify(const std::string& log_path) {
  std::vector<mgdm::prov::Assignment> log = mgdm::prov::load_assignment_log(log_path);
  bool legal = mgdm::oracle::verify_sharing_legality(log);
  std::cout << (legal ? "legal" : "illegal") << "\n";
  return legal ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Protected lightpath provisioning on mode-group multiplexed networks"};
  app.require_subcommand(1);

  RunOptions run_opt;
  CLI::App* run = app.add_subcommand("run", "Provision one request stream and print metrics");
  run->set_config("--config");
  run->add_option("--topology", run_opt.topology,
                  "Topology name (german17) or path to a topology file");
  run->add_option("--max-link-km", run_opt.max_link_km,
                  "Rescale link lengths so the longest equals this; 0 keeps them");
  run->add_option("--reach-table", run_opt.reach_table,
                  "Reach/capacity table file; embedded defaults when absent");
  run->add_option("--scenario", run_opt.scenario, "smt, mgdm, mf_mgdm or full_mimo");
  run->add_option("--mode", run_opt.mode, "Protection mode: spp or dpp");
  run->add_option("--wavelengths", run_opt.wavelengths, "Wavelength channels per link");
  run->add_option("--k", run_opt.k, "Candidate routes per request");
  run->add_option("--seed", run_opt.seed, "Master seed; all randomness derives from it");
  run->add_option("--requests", run_opt.requests, "Number of requests to generate");
  run->add_flag("--calibrate", run_opt.calibrate,
                "Search the request count for the target rejection instead of --requests");
  run->add_option("--replicas", run_opt.replicas, "Traffic replicas per calibration probe");
  run->add_option("--target", run_opt.target, "Target mean rejection ratio for --calibrate");
  run->add_option("--assignments-out", run_opt.assignments_out,
                  "Write the accepted assignments as CSV");
  run->add_option("--dump-state", run_opt.dump_state,
                  "Write the final spectrum/receiver state as sorted text");
  run->add_option("--results-out", run_opt.results_out, "Also write the metrics CSV here");

  SweepOptions sweep_opt;
  CLI::App* sweep = app.add_subcommand("sweep", "Run the full experiment grid and print CSV");
  sweep->set_config("--config");
  sweep->add_option("--topology", sweep_opt.topology,
                    "Topology name (german17) or path to a topology file");
  sweep->add_option("--reach-table", sweep_opt.reach_table,
                    "Reach/capacity table file; embedded defaults when absent");
  sweep->add_option("--wavelengths", sweep_opt.wavelengths, "Wavelength channels per link");
  sweep->add_option("--k", sweep_opt.k, "Candidate routes per request");
  sweep->add_option("--seed", sweep_opt.seed, "Master seed for the whole grid");
  sweep->add_option("--replicas", sweep_opt.replicas, "Traffic replicas per calibration probe");
  sweep->add_option("--target", sweep_opt.target, "Target mean rejection ratio at high load");
  sweep->add_option("--short-km", sweep_opt.short_km, "Longest link in the short-link regime");
  sweep->add_option("--long-km", sweep_opt.long_km, "Longest link in the long-link regime");
  sweep->add_option("--high-load-short", sweep_opt.high_load_short,
                    "Pin the short-regime high-load request count (skips calibration)");
  sweep->add_option("--high-load-long", sweep_opt.high_load_long,
                    "Pin the long-regime high-load request count (skips calibration)");
  sweep->add_option("--results-out", sweep_opt.results_out, "Also write the CSV here");

  CalibrateOptions cal_opt;
  CLI::App* cal = app.add_subcommand("calibrate", "Search the high-load request count");
  cal->add_option("--topology", cal_opt.topology,
                  "Topology name (german17) or path to a topology file");
  cal->add_option("--max-link-km", cal_opt.max_link_km,
                  "Rescale link lengths so the longest equals this; 0 keeps them");
  cal->add_option("--reach-table", cal_opt.reach_table,
                  "Reach/capacity table file; embedded defaults when absent");
  cal->add_option("--wavelengths", cal_opt.wavelengths, "Wavelength channels per link");
  cal->add_option("--k", cal_opt.k, "Candidate routes per request");
  cal->add_option("--seed", cal_opt.seed, "Seed for the calibration replicas");
  cal->add_option("--replicas", cal_opt.replicas, "Traffic replicas per probe");
  cal->add_option("--target", cal_opt.target, "Target mean rejection ratio");

  std::string verify_log;
  CLI::App* verify = app.add_subcommand("verify", "Re-check an assignment log's sharing");
  verify->add_option("--assignments,--log", verify_log, "Assignment log CSV to check")
      ->required()
      ->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (*run) return do_run(run_opt);
    if (*sweep) return do_sweep(sweep_opt);
    if (*cal) return do_calibrate(cal_opt);
    if (*verify) return do_verify(verify_log);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
