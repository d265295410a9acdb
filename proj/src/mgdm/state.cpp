#include "mgdm/state.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace mgdm::state {

const char* to_string(Role r) {
  switch (r) {
    case Role::Working: return "working";
    case Role::BackupDedicated: return "backup-dedicated";
    case Role::BackupShared: return "backup-shared";
  }
  return "?";
}

Role role_from_string(const std::string& s) {
  if (s == "working") return Role::Working;
  if (s == "backup-dedicated") return Role::BackupDedicated;
  if (s == "backup-shared") return Role::BackupShared;
  throw std::invalid_argument("unknown role: " + s);
}

bool can_share_slot(const SlotOccupancy& occ, LinkMask candidate_working_links) {
  if (occ.role != Role::BackupShared)
    throw std::logic_error("can_share_slot called on a non-shared slot");
  for (const Owner& o : occ.owners)
    if (!masks_disjoint(o.working_mask, candidate_working_links)) return false;
  return true;
}

namespace {

Owner make_owner(int request, const std::vector<int>& working_links) {
  Owner o;
  o.request = request;
  o.working_links = working_links;
  std::sort(o.working_links.begin(), o.working_links.end());
  o.working_mask = mask_of(o.working_links);
  return o;
}

void insert_owner(std::vector<Owner>& owners, Owner o) {
  for (const Owner& cur : owners)
    if (cur.request == o.request)
      throw std::logic_error("request already owns this resource");
  auto pos = std::find_if(owners.begin(), owners.end(),
                          [&](const Owner& c) { return c.request > o.request; });
  owners.insert(pos, std::move(o));
}

std::string owners_text(const std::vector<Owner>& owners) {
  std::string out;
  for (size_t i = 0; i < owners.size(); ++i) {
    if (i) out.push_back(';');
    out += std::to_string(owners[i].request);
    out += "{" + join_ints(owners[i].working_links, ',') + "}";
  }
  return out;
}

std::string num_text(double v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

bool selector_allowed(fmt::Scenario s, const fmt::Selector& sel) {
  for (const fmt::ScenarioGroup& g : fmt::scenario_groups(s))
    if (g.selector == sel) return true;
  return false;
}

}  // namespace

SpectrumState::SpectrumState(const topo::Topology& t, fmt::Scenario scenario,
                             int wavelengths)
    : scenario_(scenario), link_count_(t.link_count()), wavelengths_(wavelengths) {
  if (wavelengths <= 0) throw std::invalid_argument("wavelength count must be positive");
  cells_.resize(static_cast<size_t>(link_count_) * wavelengths_);
}

std::vector<SlotOccupancy>& SpectrumState::cell(int link, int wavelength) {
  if (link < 0 || link >= link_count_ || wavelength < 0 || wavelength >= wavelengths_)
    throw std::out_of_range("slot key outside the spectrum grid");
  return cells_[static_cast<size_t>(link) * wavelengths_ + wavelength];
}

const std::vector<SlotOccupancy>& SpectrumState::cell(int link, int wavelength) const {
  return const_cast<SpectrumState*>(this)->cell(link, wavelength);
}

const std::vector<SlotOccupancy>& SpectrumState::records(int link, int wavelength) const {
  return cell(link, wavelength);
}

const SlotOccupancy* SpectrumState::find(int link, int wavelength,
                                         const fmt::Selector& sel) const {
  for (const SlotOccupancy& r : cell(link, wavelength))
    if (r.selector == sel) return &r;
  return nullptr;
}

unsigned SpectrumState::occupied_bits(int link, int wavelength) const {
  unsigned bits = 0;
  for (const SlotOccupancy& r : cell(link, wavelength)) bits |= fmt::group_bits(r.selector);
  return bits;
}

bool SpectrumState::pair_lit(int link, int wavelength) const {
  return !cell(link, wavelength).empty();
}

bool SpectrumState::pair_has_working(int link, int wavelength) const {
  for (const SlotOccupancy& r : cell(link, wavelength))
    if (r.role == Role::Working) return true;
  return false;
}

void SpectrumState::occupy(const SlotKey& key, Role role, int request,
                           const std::vector<int>& working_links) {
  if (!selector_allowed(scenario_, key.selector))
    throw std::invalid_argument("selector not available in this scenario");
  std::vector<SlotOccupancy>& recs = cell(key.link, key.wavelength);

  // Working traffic and backups never mix on one wavelength of a link.
  bool has_working = false;
  for (const SlotOccupancy& r : recs) has_working |= (r.role == Role::Working);
  if (role == Role::Working && !recs.empty() && !has_working)
    throw std::runtime_error("slot conflict: wavelength carries backup traffic");
  if (role != Role::Working && has_working)
    throw std::runtime_error("slot conflict: wavelength carries working traffic");

  for (SlotOccupancy& r : recs) {
    if (!(r.selector == key.selector)) continue;
    if (role != Role::BackupShared || r.role != Role::BackupShared)
      throw std::runtime_error("slot conflict: selector already occupied");
    Owner o = make_owner(request, working_links);
    if (!can_share_slot(r, o.working_mask))
      throw std::runtime_error("slot conflict: working paths not link-disjoint");
    insert_owner(r.owners, std::move(o));
    return;
  }

  if (occupied_bits(key.link, key.wavelength) & fmt::group_bits(key.selector))
    throw std::runtime_error("slot conflict: overlapping mode groups");

  SlotOccupancy rec;
  rec.selector = key.selector;
  rec.role = role;
  rec.owners.push_back(make_owner(request, working_links));
  recs.push_back(std::move(rec));
}

void SpectrumState::release(int request) {
  bool found = false;
  for (std::vector<SlotOccupancy>& recs : cells_) {
    for (SlotOccupancy& r : recs) {
      auto it = std::remove_if(r.owners.begin(), r.owners.end(),
                               [&](const Owner& o) { return o.request == request; });
      if (it != r.owners.end()) {
        found = true;
        r.owners.erase(it, r.owners.end());
      }
    }
    recs.erase(std::remove_if(recs.begin(), recs.end(),
                              [](const SlotOccupancy& r) { return r.owners.empty(); }),
               recs.end());
  }
  if (!found) throw std::invalid_argument("release of unknown request");
}

bool SpectrumState::owns_anything(int request) const {
  for (const std::vector<SlotOccupancy>& recs : cells_)
    for (const SlotOccupancy& r : recs)
      for (const Owner& o : r.owners)
        if (o.request == request) return true;
  return false;
}

int SpectrumState::backup_unit_count() const {
  int n = 0;
  for (const std::vector<SlotOccupancy>& recs : cells_)
    for (const SlotOccupancy& r : recs)
      if (r.role != Role::Working) ++n;
  return n;
}

int SpectrumState::backup_pair_count() const {
  int n = 0;
  for (const std::vector<SlotOccupancy>& recs : cells_) {
    if (recs.empty()) continue;
    bool all_backup = true;
    for (const SlotOccupancy& r : recs) all_backup &= (r.role != Role::Working);
    if (all_backup) ++n;
  }
  return n;
}

std::string SpectrumState::dump() const {
  std::ostringstream os;
  os << "spectrum\n";
  for (int link = 0; link < link_count_; ++link) {
    for (int wl = 0; wl < wavelengths_; ++wl) {
      std::vector<const SlotOccupancy*> recs;
      for (const SlotOccupancy& r : cell(link, wl)) recs.push_back(&r);
      std::sort(recs.begin(), recs.end(), [](const SlotOccupancy* a, const SlotOccupancy* b) {
        return fmt::selector_less(a->selector, b->selector);
      });
      for (const SlotOccupancy* r : recs)
        os << "  link=" << link << " wl=" << wl << " sel=" << fmt::selector_token(r->selector)
           << " role=" << to_string(r->role) << " owners=" << owners_text(r->owners) << "\n";
    }
  }
  return os.str();
}

void SpectrumState::check_invariants() const {
  for (int link = 0; link < link_count_; ++link) {
    for (int wl = 0; wl < wavelengths_; ++wl) {
      const std::vector<SlotOccupancy>& recs = cell(link, wl);
      unsigned bits = 0;
      bool any_working = false, any_backup = false;
      for (const SlotOccupancy& r : recs) {
        if (r.owners.empty()) throw std::logic_error("ownerless slot record");
        if (!selector_allowed(scenario_, r.selector))
          throw std::logic_error("slot selector foreign to the scenario");
        if (r.role == Role::Working) any_working = true;
        else any_backup = true;
        if (r.role != Role::BackupShared && r.owners.size() != 1)
          throw std::logic_error("exclusive slot with multiple owners");
        for (size_t i = 0; i < r.owners.size(); ++i)
          for (size_t j = i + 1; j < r.owners.size(); ++j)
            if (!masks_disjoint(r.owners[i].working_mask, r.owners[j].working_mask))
              throw std::logic_error("sharers with overlapping working paths");
        unsigned b = fmt::group_bits(r.selector);
        if (bits & b) throw std::logic_error("overlapping slot records on one wavelength");
        bits |= b;
      }
      if (any_working && any_backup)
        throw std::logic_error("working and backup traffic on one wavelength");
    }
  }
}

MimoPool::MimoPool(int node_count) : per_node_(node_count) {}

const std::vector<ReceiverUnit>& MimoPool::at_node(int node) const {
  return per_node_.at(node);
}

void MimoPool::add_working(int node, const fmt::Selector& sel, double cost, int request,
                           const std::vector<int>& working_links) {
  ReceiverUnit u;
  u.selector = sel;
  u.role = Role::Working;
  u.cost = cost;
  u.owners.push_back(make_owner(request, working_links));
  per_node_.at(node).push_back(std::move(u));
}

namespace {

bool contains(const std::vector<fmt::Selector>& sels, const fmt::Selector& s) {
  return std::find(sels.begin(), sels.end(), s) != sels.end();
}

const ReceiverUnit* find_shareable(const std::vector<ReceiverUnit>& units,
                                   const fmt::Selector& sel, LinkMask working_mask) {
  for (const ReceiverUnit& u : units) {
    if (u.role != Role::BackupShared || !(u.selector == sel)) continue;
    bool ok = true;
    for (const Owner& o : u.owners) ok &= masks_disjoint(o.working_mask, working_mask);
    if (ok) return &u;
  }
  return nullptr;
}

}  // namespace

double MimoPool::additional_backup_mimo(int node, const std::vector<fmt::Selector>& backup_sels,
                                        const std::vector<fmt::Selector>& own_working_sels,
                                        LinkMask working_mask, bool allow_sharing,
                                        fmt::Scenario scenario) const {
  const std::vector<ReceiverUnit>& units = per_node_.at(node);
  double total = 0.0;
  for (const fmt::Selector& sel : backup_sels) {
    if (contains(own_working_sels, sel)) continue;  // reuse the working receiver
    if (allow_sharing && find_shareable(units, sel, working_mask)) continue;
    total += fmt::detection_cost(scenario, sel);
  }
  return total;
}

double MimoPool::commit_backup(int node, const std::vector<fmt::Selector>& backup_sels,
                               const std::vector<fmt::Selector>& own_working_sels, int request,
                               const std::vector<int>& working_links, bool allow_sharing,
                               fmt::Scenario scenario) {
  std::vector<ReceiverUnit>& units = per_node_.at(node);
  Owner base = make_owner(request, working_links);
  double total = 0.0;
  for (const fmt::Selector& sel : backup_sels) {
    if (contains(own_working_sels, sel)) continue;
    if (allow_sharing) {
      const ReceiverUnit* hit = find_shareable(units, sel, base.working_mask);
      if (hit) {
        insert_owner(const_cast<ReceiverUnit*>(hit)->owners, base);
        continue;
      }
    }
    ReceiverUnit u;
    u.selector = sel;
    u.role = allow_sharing ? Role::BackupShared : Role::BackupDedicated;
    u.cost = fmt::detection_cost(scenario, sel);
    u.owners.push_back(base);
    total += u.cost;
    units.push_back(std::move(u));
  }
  return total;
}

void MimoPool::release(int request) {
  for (std::vector<ReceiverUnit>& units : per_node_) {
    for (ReceiverUnit& u : units) {
      u.owners.erase(std::remove_if(u.owners.begin(), u.owners.end(),
                                    [&](const Owner& o) { return o.request == request; }),
                     u.owners.end());
    }
    units.erase(std::remove_if(units.begin(), units.end(),
                               [](const ReceiverUnit& u) { return u.owners.empty(); }),
                units.end());
  }
}

double MimoPool::backup_unit_cost_total() const {
  double total = 0.0;
  for (const std::vector<ReceiverUnit>& units : per_node_)
    for (const ReceiverUnit& u : units)
      if (u.role != Role::Working) total += u.cost;
  return total;
}

std::string MimoPool::dump() const {
  std::ostringstream os;
  os << "receivers\n";
  for (size_t node = 0; node < per_node_.size(); ++node) {
    std::vector<const ReceiverUnit*> units;
    for (const ReceiverUnit& u : per_node_[node]) units.push_back(&u);
    std::sort(units.begin(), units.end(), [](const ReceiverUnit* a, const ReceiverUnit* b) {
      if (!(a->selector == b->selector)) return fmt::selector_less(a->selector, b->selector);
      if (a->role != b->role) return a->role < b->role;
      return a->owners.front().request < b->owners.front().request;
    });
    for (const ReceiverUnit* u : units)
      os << "  node=" << node << " sel=" << fmt::selector_token(u->selector)
         << " role=" << to_string(u->role) << " cost=" << num_text(u->cost)
         << " owners=" << owners_text(u->owners) << "\n";
  }
  return os.str();
}

void MimoPool::check_invariants() const {
  for (const std::vector<ReceiverUnit>& units : per_node_) {
    for (const ReceiverUnit& u : units) {
      if (u.owners.empty()) throw std::logic_error("ownerless receiver unit");
      if (u.cost <= 0.0) throw std::logic_error("receiver unit with non-positive cost");
      if (u.role != Role::BackupShared && u.owners.size() != 1)
        throw std::logic_error("exclusive receiver with multiple owners");
      for (size_t i = 0; i < u.owners.size(); ++i)
        for (size_t j = i + 1; j < u.owners.size(); ++j)
          if (!masks_disjoint(u.owners[i].working_mask, u.owners[j].working_mask))
            throw std::logic_error("receiver sharers with overlapping working paths");
    }
  }
}

}  // namespace mgdm::state
