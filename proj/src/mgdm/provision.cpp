#include "mgdm/provision.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "mgdm/spp.hpp"
#include "mgdm/util.hpp"

namespace mgdm::prov {

const char* to_string(Protection p) {
  return p == Protection::Spp ? "spp" : "dpp";
}

Protection protection_from_string(const std::string& s) {
  if (s == "spp") return Protection::Spp;
  if (s == "dpp") return Protection::Dpp;
  throw std::invalid_argument("unknown protection mode: " + s);
}

std::vector<fmt::Selector> selectors_of(const Assignment& a) {
  std::vector<fmt::Selector> sels;
  sels.reserve(a.groups.size());
  for (const GroupChoice& g : a.groups) sels.push_back(g.selector);
  return sels;
}

std::optional<Assignment> provision_working(const Context& ctx, state::NetworkState& net,
                                            const Request& req) {
  std::vector<topo::Route> routes =
      topo::k_shortest_paths(ctx.topology, req.src, req.dst, ctx.k);
  std::vector<spp::CandidateOption> options =
      spp::enumerate_role_options(ctx, net, req, routes, state::Role::Working, {}, 0);
  if (options.empty()) return std::nullopt;
  const spp::CandidateOption* best = &options[0];
  for (const spp::CandidateOption& o : options)
    if (spp::option_less(o, *best)) best = &o;

  for (int link : best->route->links)
    for (const GroupChoice& g : best->combo.groups)
      net.spectrum.occupy({link, best->wavelength, g.selector}, state::Role::Working, req.id,
                          best->route->links);
  for (const GroupChoice& g : best->combo.groups)
    net.receivers.add_working(req.dst, g.selector,
                              fmt::detection_cost(ctx.scenario, g.selector), req.id,
                              best->route->links);

  Assignment a;
  a.request = req.id;
  a.role = state::Role::Working;
  a.route = *best->route;
  a.wavelength = best->wavelength;
  a.groups = best->combo.groups;
  a.capacity_gbps = best->combo.capacity_gbps;
  a.mimo_deployed = best->combo.detection_cost_total;
  return a;
}

ProvisionResult provision_all(const Context& ctx, state::NetworkState& net,
                              const std::vector<Request>& requests) {
  ProvisionResult res;
  for (const Request& req : requests) {
    std::optional<Assignment> working = provision_working(ctx, net, req);
    if (!working) {
      res.rejected.push_back(req.id);
      continue;
    }
    std::optional<Assignment> backup = spp::assign_backup(ctx, net, req, *working);
    if (!backup) {
      net.release(req.id);  // a request is all-or-nothing
      res.rejected.push_back(req.id);
      continue;
    }
    res.assignments.push_back(std::move(*working));
    res.assignments.push_back(std::move(*backup));
    ++res.accepted;
  }
  if (!requests.empty())
    res.rejection_ratio = static_cast<double>(res.rejected.size()) / requests.size();
  return res;
}

namespace {

constexpr const char* kLogHeader =
    "request,role,links,wavelength,groups,modulations,capacity_gbps,mimo_deployed";

std::vector<std::string> split_fields(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  std::string field;
  while (std::getline(ss, field, sep)) out.push_back(field);
  if (!line.empty() && line.back() == sep) out.emplace_back();
  return out;
}

}  // namespace

std::string assignments_to_csv(const std::vector<Assignment>& log) {
  std::string out = kLogHeader;
  out += '\n';
  for (const Assignment& a : log) {
    std::string groups, mods;
    for (const GroupChoice& g : a.groups) {
      if (!groups.empty()) {
        groups += '|';
        mods += '|';
      }
      groups += fmt::selector_token(g.selector);
      mods += g.modulation.modulation;
    }
    out += std::to_string(a.request);
    out += ',';
    out += state::to_string(a.role);
    out += ',';
    out += join_ints(a.route.links, '|');
    out += ',';
    out += std::to_string(a.wavelength);
    out += ',';
    out += groups;
    out += ',';
    out += mods;
    out += ',';
    out += double_text(a.capacity_gbps);
    out += ',';
    out += double_text(a.mimo_deployed);
    out += '\n';
  }
  return out;
}

std::vector<Assignment> load_assignment_log(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open assignment log: " + path);
  std::string line;
  if (!std::getline(in, line) || line != kLogHeader)
    throw std::runtime_error("assignment log header mismatch in " + path);
  std::vector<Assignment> log;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<std::string> f = split_fields(line, ',');
    if (f.size() != 8)
      throw std::runtime_error("assignment log row needs 8 fields, got " +
                               std::to_string(f.size()));
    Assignment a;
    a.request = std::stoi(f[0]);
    a.role = state::role_from_string(f[1]);
    a.route.links = split_ints(f[2], '|');
    a.route.mask = mask_of(a.route.links);
    a.route.length_km = 0.0;  // not recorded; the checker never reads it
    a.wavelength = std::stoi(f[3]);
    std::vector<std::string> sels = split_fields(f[4], '|');
    std::vector<std::string> mods = split_fields(f[5], '|');
    if (sels.size() != mods.size())
      throw std::runtime_error("assignment log row has mismatched group lists");
    for (size_t i = 0; i < sels.size(); ++i) {
      GroupChoice g;
      g.selector = fmt::selector_from_token(sels[i]);
      g.modulation.modulation = mods[i];
      a.groups.push_back(g);
    }
    a.capacity_gbps = std::stod(f[6]);
    a.mimo_deployed = std::stod(f[7]);
    log.push_back(std::move(a));
  }
  return log;
}

}  // namespace mgdm::prov
