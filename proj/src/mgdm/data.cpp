#include "mgdm/data.hpp"

namespace mgdm::data {

namespace {

const char kGerman17[] = R"({
  "nodes": ["Norden", "Bremen", "Hamburg", "Hannover", "Berlin", "Leipzig",
            "Dortmund", "Essen", "Duesseldorf", "Koeln", "Frankfurt",
            "Mannheim", "Karlsruhe", "Stuttgart", "Ulm", "Muenchen",
            "Nuernberg"],
  "links": [
    {"a": "Norden",     "b": "Bremen",     "length_km": 150},
    {"a": "Norden",     "b": "Dortmund",   "length_km": 173},
    {"a": "Bremen",     "b": "Hamburg",    "length_km": 114},
    {"a": "Bremen",     "b": "Hannover",   "length_km": 118},
    {"a": "Hamburg",    "b": "Hannover",   "length_km": 151},
    {"a": "Hamburg",    "b": "Berlin",     "length_km": 289},
    {"a": "Hannover",   "b": "Berlin",     "length_km": 249},
    {"a": "Hannover",   "b": "Dortmund",   "length_km": 211},
    {"a": "Hannover",   "b": "Leipzig",    "length_km": 257},
    {"a": "Hannover",   "b": "Frankfurt",  "length_km": 313},
    {"a": "Berlin",     "b": "Leipzig",    "length_km": 173},
    {"a": "Leipzig",    "b": "Nuernberg",  "length_km": 280},
    {"a": "Dortmund",   "b": "Essen",      "length_km": 35},
    {"a": "Dortmund",   "b": "Koeln",      "length_km": 94},
    {"a": "Essen",      "b": "Duesseldorf","length_km": 31},
    {"a": "Duesseldorf","b": "Koeln",      "length_km": 34},
    {"a": "Koeln",      "b": "Frankfurt",  "length_km": 152},
    {"a": "Frankfurt",  "b": "Mannheim",   "length_km": 79},
    {"a": "Frankfurt",  "b": "Nuernberg",  "length_km": 187},
    {"a": "Mannheim",   "b": "Karlsruhe",  "length_km": 54},
    {"a": "Mannheim",   "b": "Stuttgart",  "length_km": 107},
    {"a": "Karlsruhe",  "b": "Stuttgart",  "length_km": 64},
    {"a": "Stuttgart",  "b": "Ulm",        "length_km": 72},
    {"a": "Stuttgart",  "b": "Nuernberg",  "length_km": 157},
    {"a": "Ulm",        "b": "Muenchen",   "length_km": 123},
    {"a": "Muenchen",   "b": "Nuernberg",  "length_km": 149}
  ]
}
)";

// Per-mode data rates follow the request quantum (100G); reaches are ordered
// full_mimo > smt > mgdm > mf_mgdm, with the 21 km MF-MGDM ceiling that
// separates the short- and long-link regimes.
const char kDefaultReachTable[] = R"({
  "entries": [
    {"scenario": "smt", "selector": "single", "modulation": "qpsk",  "reach_km": 5000, "gbps_per_mode": 100},
    {"scenario": "smt", "selector": "single", "modulation": "16qam", "reach_km": 3000, "gbps_per_mode": 200},
    {"scenario": "smt", "selector": "single", "modulation": "64qam", "reach_km": 2000, "gbps_per_mode": 300},

    {"scenario": "mgdm", "selector": "A", "modulation": "qpsk",  "reach_km": 3000, "gbps_per_mode": 100},
    {"scenario": "mgdm", "selector": "A", "modulation": "16qam", "reach_km": 1500, "gbps_per_mode": 200},
    {"scenario": "mgdm", "selector": "A", "modulation": "64qam", "reach_km": 800,  "gbps_per_mode": 300},
    {"scenario": "mgdm", "selector": "B", "modulation": "qpsk",  "reach_km": 3000, "gbps_per_mode": 100},
    {"scenario": "mgdm", "selector": "B", "modulation": "16qam", "reach_km": 1500, "gbps_per_mode": 200},
    {"scenario": "mgdm", "selector": "B", "modulation": "64qam", "reach_km": 800,  "gbps_per_mode": 300},
    {"scenario": "mgdm", "selector": "C", "modulation": "qpsk",  "reach_km": 3000, "gbps_per_mode": 100},
    {"scenario": "mgdm", "selector": "C", "modulation": "16qam", "reach_km": 1500, "gbps_per_mode": 200},
    {"scenario": "mgdm", "selector": "C", "modulation": "64qam", "reach_km": 800,  "gbps_per_mode": 300},
    {"scenario": "mgdm", "selector": "D", "modulation": "qpsk",  "reach_km": 3000, "gbps_per_mode": 100},
    {"scenario": "mgdm", "selector": "D", "modulation": "16qam", "reach_km": 1500, "gbps_per_mode": 200},
    {"scenario": "mgdm", "selector": "D", "modulation": "64qam", "reach_km": 800,  "gbps_per_mode": 300},
    {"scenario": "mgdm", "selector": "E", "modulation": "qpsk",  "reach_km": 3000, "gbps_per_mode": 100},
    {"scenario": "mgdm", "selector": "E", "modulation": "16qam", "reach_km": 1500, "gbps_per_mode": 200},
    {"scenario": "mgdm", "selector": "E", "modulation": "64qam", "reach_km": 800,  "gbps_per_mode": 300},

    {"scenario": "mf_mgdm", "selector": "A", "modulation": "qpsk",  "reach_km": 21, "gbps_per_mode": 100},
    {"scenario": "mf_mgdm", "selector": "A", "modulation": "16qam", "reach_km": 6,  "gbps_per_mode": 200},
    {"scenario": "mf_mgdm", "selector": "A", "modulation": "64qam", "reach_km": 2,  "gbps_per_mode": 300},
    {"scenario": "mf_mgdm", "selector": "B", "modulation": "qpsk",  "reach_km": 21, "gbps_per_mode": 100},
    {"scenario": "mf_mgdm", "selector": "B", "modulation": "16qam", "reach_km": 6,  "gbps_per_mode": 200},
    {"scenario": "mf_mgdm", "selector": "B", "modulation": "64qam", "reach_km": 2,  "gbps_per_mode": 300},
    {"scenario": "mf_mgdm", "selector": "C", "modulation": "qpsk",  "reach_km": 21, "gbps_per_mode": 100},
    {"scenario": "mf_mgdm", "selector": "C", "modulation": "16qam", "reach_km": 6,  "gbps_per_mode": 200},
    {"scenario": "mf_mgdm", "selector": "C", "modulation": "64qam", "reach_km": 2,  "gbps_per_mode": 300},
    {"scenario": "mf_mgdm", "selector": "D", "modulation": "qpsk",  "reach_km": 21, "gbps_per_mode": 100},
    {"scenario": "mf_mgdm", "selector": "D", "modulation": "16qam", "reach_km": 6,  "gbps_per_mode": 200},
    {"scenario": "mf_mgdm", "selector": "D", "modulation": "64qam", "reach_km": 2,  "gbps_per_mode": 300},
    {"scenario": "mf_mgdm", "selector": "E", "modulation": "qpsk",  "reach_km": 21, "gbps_per_mode": 100},
    {"scenario": "mf_mgdm", "selector": "E", "modulation": "16qam", "reach_km": 6,  "gbps_per_mode": 200},
    {"scenario": "mf_mgdm", "selector": "E", "modulation": "64qam", "reach_km": 2,  "gbps_per_mode": 300},

    {"scenario": "full_mimo", "selector": "joint", "modulation": "qpsk",  "reach_km": 6000, "gbps_per_mode": 100},
    {"scenario": "full_mimo", "selector": "joint", "modulation": "16qam", "reach_km": 4000, "gbps_per_mode": 200},
    {"scenario": "full_mimo", "selector": "joint", "modulation": "64qam", "reach_km": 2500, "gbps_per_mode": 300}
  ]
}
)";

}  // namespace

const std::string& german17_json() {
  static const std::string s = kGerman17;
  return s;
}

topo::Topology german17() { return topo::parse_topology(german17_json()); }

const std::string& default_reach_table_json() {
  static const std::string s = kDefaultReachTable;
  return s;
}

fmt::ReachTable default_reach_table() {
  return fmt::parse_reach_table(default_reach_table_json());
}

topo::Topology resolve_topology(const std::string& name_or_path) {
  if (name_or_path == "german17") return german17();
  return topo::load_topology(name_or_path);
}

}  // namespace mgdm::data
