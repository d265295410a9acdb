#pragma once

#include <optional>
#include <string>
#include <vector>

namespace mgdm::fmt {

// Mode groups A..E carry 1..5 spatial modes.
enum class Mg : uint8_t { A = 0, B = 1, C = 2, D = 3, E = 4 };

constexpr int kGroupCount = 5;
constexpr int kTotalModes = 15;  // 1+2+3+4+5

inline int mode_count(Mg g) { return static_cast<int>(g) + 1; }
inline char label(Mg g) { return static_cast<char>('A' + static_cast<int>(g)); }
Mg mg_from_label(char c);

enum class Scenario { Smt, Mgdm, MfMgdm, FullMimo };

const char* to_string(Scenario s);
Scenario scenario_from_string(const std::string& s);

// One detectable transmission unit: the single mode of SMT, one mode group,
// or the joint block of all groups under full MIMO.
struct Selector {
  enum class Kind { Single, Group, Joint } kind = Kind::Single;
  Mg group = Mg::A;  // meaningful only for Kind::Group

  bool operator==(const Selector&) const = default;
};

bool selector_less(const Selector& a, const Selector& b);
std::string selector_token(const Selector& s);
Selector selector_from_token(const std::string& token);

// Mode-group bits a selector occupies on a wavelength. A group takes its own
// bit; the SMT single mode and the full-MIMO joint block take the whole
// wavelength.
inline unsigned group_bits(const Selector& s) {
  if (s.kind == Selector::Kind::Group) return 1u << static_cast<int>(s.group);
  return (1u << kGroupCount) - 1;
}

// Normalized equalizer count for jointly detecting k modes: a k-mode group
// needs a 2k x 2k MIMO, counted as (2k)^2 equalizers and normalized to the
// 4 equalizers of the 2x2 single-mode baseline.
double mimo_complexity(int jointly_detected_modes);

int usable_modes(Scenario s, const Selector& sel);
int jointly_detected_modes(Scenario s, const Selector& sel);
double detection_cost(Scenario s, const Selector& sel);

struct ScenarioGroup {
  Selector selector;
  int usable_modes = 0;
  double detection_cost = 0.0;
};

// The selectable units of a scenario, in selector order.
std::vector<ScenarioGroup> scenario_groups(Scenario s);

struct ReachEntry {
  Scenario scenario = Scenario::Smt;
  Selector selector;
  std::string modulation;
  double reach_km = 0.0;
  double gbps_per_mode = 0.0;
};

struct ModChoice {
  std::string modulation;
  double reach_km = 0.0;
  double gbps_per_mode = 0.0;
};

// Reach/capacity table. Validation rejects rows where, within one
// (scenario, selector), higher capacity does not come with shorter-or-equal
// reach.
class ReachTable {
 public:
  explicit ReachTable(std::vector<ReachEntry> entries);

  const std::vector<ReachEntry>& entries() const { return entries_; }

  // Highest-capacity modulation whose reach covers the route; nullopt when
  // nothing reaches.
  std::optional<ModChoice> select_modulation(Scenario s, const Selector& sel,
                                             double route_length_km) const;

  // Longest reach over the scenario's modulations (0 when the scenario has
  // no entries at all).
  double max_reach(Scenario s) const;

 private:
  std::vector<ReachEntry> entries_;
};

ReachTable parse_reach_table(const std::string& json_text);
ReachTable load_reach_table(const std::string& path);

// Sum over selected units of usable_modes * per-mode capacity. Throws when a
// unit has no feasible modulation at the route length.
double group_combination_capacity(Scenario s,
                                  const std::vector<Selector>& selectors,
                                  const std::vector<ModChoice>& modulations);

}  // namespace mgdm::fmt
