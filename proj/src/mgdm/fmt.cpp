#include "mgdm/fmt.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace mgdm::fmt {

Mg mg_from_label(char c) {
  if (c < 'A' || c > 'E') throw std::invalid_argument("unknown mode group label");
  return static_cast<Mg>(c - 'A');
}

const char* to_string(Scenario s) {
  switch (s) {
    case Scenario::Smt: return "smt";
    case Scenario::Mgdm: return "mgdm";
    case Scenario::MfMgdm: return "mf_mgdm";
    case Scenario::FullMimo: return "full_mimo";
  }
  return "?";
}

Scenario scenario_from_string(const std::string& s) {
  if (s == "smt") return Scenario::Smt;
  if (s == "mgdm") return Scenario::Mgdm;
  if (s == "mf_mgdm" || s == "mf-mgdm") return Scenario::MfMgdm;
  if (s == "full_mimo" || s == "full-mimo") return Scenario::FullMimo;
  throw std::invalid_argument("unknown scenario: " + s);
}

bool selector_less(const Selector& a, const Selector& b) {
  auto rank = [](const Selector& s) {
    switch (s.kind) {
      case Selector::Kind::Single: return 0;
      case Selector::Kind::Group: return 1 + static_cast<int>(s.group);
      case Selector::Kind::Joint: return 6;
    }
    return 7;
  };
  return rank(a) < rank(b);
}

std::string selector_token(const Selector& s) {
  switch (s.kind) {
    case Selector::Kind::Single: return "single";
    case Selector::Kind::Joint: return "joint";
    case Selector::Kind::Group: return std::string(1, label(s.group));
  }
  return "?";
}

Selector selector_from_token(const std::string& token) {
  if (token == "single") return {Selector::Kind::Single, Mg::A};
  if (token == "joint") return {Selector::Kind::Joint, Mg::A};
  if (token.size() == 1) return {Selector::Kind::Group, mg_from_label(token[0])};
  throw std::invalid_argument("unknown selector token: " + token);
}

double mimo_complexity(int jointly_detected_modes) {
  if (jointly_detected_modes < 1)
    throw std::invalid_argument("jointly detected modes must be >= 1");
  const double n = 2.0 * jointly_detected_modes;
  return (n * n) / 4.0;
}

int usable_modes(Scenario s, const Selector& sel) {
  switch (sel.kind) {
    case Selector::Kind::Single: return 1;
    case Selector::Kind::Joint: return kTotalModes;
    case Selector::Kind::Group:
      return s == Scenario::MfMgdm ? 1 : mode_count(sel.group);
  }
  return 0;
}

int jointly_detected_modes(Scenario s, const Selector& sel) {
  // MF-MGDM detects the one transmitted mode of a group; MGDM detects the
  // whole group.
  return usable_modes(s, sel);
}

double detection_cost(Scenario s, const Selector& sel) {
  return mimo_complexity(jointly_detected_modes(s, sel));
}

std::vector<ScenarioGroup> scenario_groups(Scenario s) {
  std::vector<ScenarioGroup> out;
  switch (s) {
    case Scenario::Smt: {
      Selector sel{Selector::Kind::Single, Mg::A};
      out.push_back({sel, 1, detection_cost(s, sel)});
      break;
    }
    case Scenario::FullMimo: {
      Selector sel{Selector::Kind::Joint, Mg::A};
      out.push_back({sel, kTotalModes, detection_cost(s, sel)});
      break;
    }
    case Scenario::Mgdm:
    case Scenario::MfMgdm: {
      for (int g = 0; g < kGroupCount; ++g) {
        Selector sel{Selector::Kind::Group, static_cast<Mg>(g)};
        out.push_back({sel, usable_modes(s, sel), detection_cost(s, sel)});
      }
      break;
    }
  }
  return out;
}

ReachTable::ReachTable(std::vector<ReachEntry> entries) : entries_(std::move(entries)) {
  std::map<std::pair<int, std::string>, std::vector<const ReachEntry*>> per_selector;
  for (const auto& e : entries_) {
    if (!(e.reach_km > 0.0)) throw std::invalid_argument("reach_km must be positive");
    if (!(e.gbps_per_mode > 0.0))
      throw std::invalid_argument("gbps_per_mode must be positive");
    per_selector[{static_cast<int>(e.scenario), selector_token(e.selector)}].push_back(&e);
  }
  for (auto& [key, rows] : per_selector) {
    std::sort(rows.begin(), rows.end(), [](const ReachEntry* a, const ReachEntry* b) {
      return a->gbps_per_mode < b->gbps_per_mode;
    });
    for (size_t i = 1; i < rows.size(); ++i) {
      if (rows[i]->gbps_per_mode == rows[i - 1]->gbps_per_mode)
        throw std::invalid_argument("duplicate capacity within one selector");
      if (rows[i]->reach_km > rows[i - 1]->reach_km)
        throw std::invalid_argument(
            "reach table violates monotonicity: higher-capacity modulation "
            "must not reach farther");
    }
  }
}

std::optional<ModChoice> ReachTable::select_modulation(Scenario s, const Selector& sel,
                                                       double route_length_km) const {
  const ReachEntry* best = nullptr;
  for (const auto& e : entries_) {
    if (e.scenario != s || !(e.selector == sel)) continue;
    if (e.reach_km < route_length_km) continue;
    if (best == nullptr || e.gbps_per_mode > best->gbps_per_mode) best = &e;
  }
  if (best == nullptr) return std::nullopt;
  return ModChoice{best->modulation, best->reach_km, best->gbps_per_mode};
}

double ReachTable::max_reach(Scenario s) const {
  double r = 0.0;
  for (const auto& e : entries_)
    if (e.scenario == s) r = std::max(r, e.reach_km);
  return r;
}

ReachTable parse_reach_table(const std::string& json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("reach table parse error: ") + e.what());
  }
  std::vector<ReachEntry> entries;
  for (const auto& row : j.at("entries")) {
    ReachEntry e;
    e.scenario = scenario_from_string(row.at("scenario").get<std::string>());
    e.selector = selector_from_token(row.at("selector").get<std::string>());
    e.modulation = row.at("modulation").get<std::string>();
    e.reach_km = row.at("reach_km").get<double>();
    e.gbps_per_mode = row.at("gbps_per_mode").get<double>();
    entries.push_back(e);
  }
  return ReachTable(std::move(entries));
}

ReachTable load_reach_table(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open reach table file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_reach_table(ss.str());
}

double group_combination_capacity(Scenario s,
                                  const std::vector<Selector>& selectors,
                                  const std::vector<ModChoice>& modulations) {
  if (selectors.size() != modulations.size())
    throw std::invalid_argument("one modulation choice per selector required");
  double total = 0.0;
  for (size_t i = 0; i < selectors.size(); ++i) {
    if (!(modulations[i].gbps_per_mode > 0.0))
      throw std::invalid_argument("infeasible group/modulation pairing");
    total += usable_modes(s, selectors[i]) * modulations[i].gbps_per_mode;
  }
  return total;
}

}  // namespace mgdm::fmt
