#pragma once

#include <string>
#include <vector>

#include "mgdm/fmt.hpp"
#include "mgdm/topology.hpp"
#include "mgdm/util.hpp"

namespace mgdm::state {

enum class Role { Working, BackupDedicated, BackupShared };

const char* to_string(Role r);
Role role_from_string(const std::string& s);

// One request's stake in a slot or receiver. working_links is the request's
// working route; for shared backup resources it is the set the sharing rule
// checks disjointness against.
struct Owner {
  int request = -1;
  LinkMask working_mask = 0;
  std::vector<int> working_links;  // sorted copy, for dumps and logs
};

struct SlotKey {
  int link = -1;
  int wavelength = -1;
  fmt::Selector selector;
};

// Occupancy of one selectable unit (single mode, mode group, or joint block)
// on one (link, wavelength). Working and dedicated-backup records have
// exactly one owner; shared-backup records carry every sharer.
struct SlotOccupancy {
  fmt::Selector selector;
  Role role = Role::Working;
  std::vector<Owner> owners;
};

// True iff the candidate working path is link-disjoint from every current
// sharer's working path. Only meaningful for shared backup records; calling
// it on anything else is a contract violation.
bool can_share_slot(const SlotOccupancy& occ, LinkMask candidate_working_links);

class SpectrumState {
 public:
  SpectrumState(const topo::Topology& t, fmt::Scenario scenario, int wavelengths);

  fmt::Scenario scenario() const { return scenario_; }
  int wavelengths() const { return wavelengths_; }
  int link_count() const { return link_count_; }

  const std::vector<SlotOccupancy>& records(int link, int wavelength) const;
  const SlotOccupancy* find(int link, int wavelength, const fmt::Selector& sel) const;

  // Union of group bits occupied on the wavelength, and whether any of the
  // occupants is a working lightpath. Backups never join a wavelength that
  // carries working traffic, and vice versa.
  unsigned occupied_bits(int link, int wavelength) const;
  bool pair_lit(int link, int wavelength) const;
  bool pair_has_working(int link, int wavelength) const;

  // Records the occupancy; extends the sharer list when role is BackupShared
  // and a record for the selector already exists. Throws on any conflict the
  // sharing rule does not permit.
  void occupy(const SlotKey& key, Role role, int request,
              const std::vector<int>& working_links);

  // Frees everything the request owns (slots and nothing else; receivers are
  // the MimoPool's job). Shared records shrink by one owner. Throws on an
  // unknown request.
  void release(int request);

  bool owns_anything(int request) const;

  // Counts used for metrics: backup records (shared ones once each) and lit
  // wavelength pairs whose occupants are all backups.
  int backup_unit_count() const;
  int backup_pair_count() const;

  // Sorted textual serialization for golden tests and --dump-state.
  std::string dump() const;

  // Structural sweep; throws std::logic_error naming the first violation.
  void check_invariants() const;

 private:
  std::vector<SlotOccupancy>& cell(int link, int wavelength);
  const std::vector<SlotOccupancy>& cell(int link, int wavelength) const;

  fmt::Scenario scenario_;
  int link_count_ = 0;
  int wavelengths_ = 0;
  std::vector<std::vector<SlotOccupancy>> cells_;  // index link * W + wavelength
};

// One deployed receiver at a destination node. Working receivers belong to
// their request; backup receivers may be shared under the same link-disjoint
// working-path rule as slots.
struct ReceiverUnit {
  fmt::Selector selector;
  Role role = Role::Working;
  double cost = 0.0;
  std::vector<Owner> owners;
};

class MimoPool {
 public:
  explicit MimoPool(int node_count);

  const std::vector<ReceiverUnit>& at_node(int node) const;

  void add_working(int node, const fmt::Selector& sel, double cost, int request,
                   const std::vector<int>& working_links);

  // Incremental cost of deploying receivers for the backup selectors, after
  // reusing the request's own working receivers (selectors it already owns
  // at the node) and, when sharing is allowed, joining existing shareable
  // backup units. Pure query; commit_backup performs the same walk and
  // mutates.
  double additional_backup_mimo(int node, const std::vector<fmt::Selector>& backup_sels,
                                const std::vector<fmt::Selector>& own_working_sels,
                                LinkMask working_mask, bool allow_sharing,
                                fmt::Scenario scenario) const;

  double commit_backup(int node, const std::vector<fmt::Selector>& backup_sels,
                       const std::vector<fmt::Selector>& own_working_sels, int request,
                       const std::vector<int>& working_links, bool allow_sharing,
                       fmt::Scenario scenario);

  void release(int request);

  // Sum of backup receiver unit costs, shared units counted once.
  double backup_unit_cost_total() const;

  std::string dump() const;
  void check_invariants() const;

 private:
  std::vector<std::vector<ReceiverUnit>> per_node_;
};

// Everything one simulation run mutates: the spectrum grid plus the receiver
// pools. Single writer per run.
struct NetworkState {
  SpectrumState spectrum;
  MimoPool receivers;

  NetworkState(const topo::Topology& t, fmt::Scenario scenario, int wavelengths)
      : spectrum(t, scenario, wavelengths), receivers(t.node_count()) {}

  void release(int request) {
    spectrum.release(request);
    receivers.release(request);
  }

  std::string dump() const { return spectrum.dump() + receivers.dump(); }

  void check_invariants() const {
    spectrum.check_invariants();
    receivers.check_invariants();
  }
};

}  // namespace mgdm::state
