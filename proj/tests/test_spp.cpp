#include <optional>
#include <string>
#include <vector>

#include "doctest.h"
#include "mgdm/data.hpp"
#include "mgdm/provision.hpp"
#include "mgdm/spp.hpp"

using namespace mgdm;
using fmt::Mg;
using fmt::Scenario;
using fmt::Selector;

namespace {

// Square with a diagonal: two link-disjoint routes between any corner pair.
topo::Topology square() {
  return topo::parse_topology(R"({
    "nodes": ["A", "B", "C", "D"],
    "links": [{"a": "A", "b": "B", "length_km": 10},
              {"a": "B", "b": "C", "length_km": 10},
              {"a": "C", "b": "D", "length_km": 10},
              {"a": "D", "b": "A", "length_km": 10},
              {"a": "A", "b": "C", "length_km": 15}]
  })");
}

std::string combo_labels(const std::vector<spp::Combo>& combos) {
  std::string out;
  for (const auto& c : combos) {
    if (!out.empty()) out += ",";
    out += c.labels;
  }
  return out;
}

}  // namespace

TEST_CASE("minimal combinations cover the rate with no redundant unit") {
  fmt::ReachTable t = data::default_reach_table();

  // 100 Gb/s at qpsk distance: every single group suffices, pairs are not minimal
  auto c100 = spp::group_combinations(Scenario::Mgdm, 100, 2000, t);
  CHECK(combo_labels(c100) == "A,B,C,D,E");
  CHECK(c100[0].capacity_gbps == doctest::Approx(100));
  CHECK(c100[0].detection_cost_total == doctest::Approx(1));

  // 300 Gb/s at qpsk distance: C, D, E alone; then the two-group covers
  auto c300 = spp::group_combinations(Scenario::Mgdm, 300, 2000, t);
  CHECK(combo_labels(c300) == "C,D,E,AB");
  CHECK(c300[0].groups.size() == 1);
  CHECK(c300[0].groups[0].selector == Selector{Selector::Kind::Group, Mg::C});
  CHECK(c300[3].capacity_gbps == doctest::Approx(300));

  // at 64qam distance one group of A already covers 300
  auto near = spp::group_combinations(Scenario::Mgdm, 300, 500, t);
  CHECK(near[0].labels == "A");
  CHECK(near[0].groups[0].modulation.modulation == "64qam");

  // the single mode cannot cover 200 at a distance where only qpsk reaches
  auto smt = spp::group_combinations(Scenario::Smt, 200, 4000, t);
  CHECK(smt.empty());
  auto smt_near = spp::group_combinations(Scenario::Smt, 200, 2500, t);
  REQUIRE(smt_near.size() == 1);
  CHECK(smt_near[0].labels == "single");
  CHECK(smt_near[0].groups[0].modulation.modulation == "16qam");

  // the joint block is the only full-MIMO unit
  auto joint = spp::group_combinations(Scenario::FullMimo, 1500, 5000, t);
  REQUIRE(joint.size() == 1);
  CHECK(joint[0].labels == "joint");
  CHECK(joint[0].capacity_gbps == doctest::Approx(1500));

  // beyond every reach nothing is feasible
  CHECK(spp::group_combinations(Scenario::Mgdm, 100, 3500, t).empty());

  // filtered groups carry one mode each, so 300 needs three of them
  auto mf = spp::group_combinations(Scenario::MfMgdm, 300, 10, t);
  REQUIRE(!mf.empty());
  CHECK(mf[0].groups.size() == 3);
  CHECK(mf[0].labels == "ABC");
}

TEST_CASE("option order prefers spectrum, then receivers, then position") {
  topo::Topology t = square();
  auto routes = topo::k_shortest_paths(t, 0, 2, 3);
  spp::CandidateOption a, b;
  a.route_index = 1;
  a.route = &routes[1];
  a.wavelength = 5;
  a.incremental_spectrum = 1;
  a.incremental_mimo = 25.0;
  b = a;

  b.incremental_spectrum = 2;
  b.incremental_mimo = 0.0;
  CHECK(spp::option_less(a, b));  // fewer new pairs wins over cheaper receivers

  b = a;
  b.incremental_mimo = 1.0;
  CHECK(spp::option_less(b, a));

  b = a;
  a.route_index = 0;
  a.route = &routes[0];
  CHECK(spp::option_less(a, b));

  b = a;
  b.wavelength = 6;
  CHECK(spp::option_less(a, b));

  b = a;
  a.combo.labels = "A";
  b.combo.labels = "E";
  CHECK(spp::option_less(a, b));
}

TEST_CASE("on an empty network the backup lights one pair per hop") {
  topo::Topology t = square();
  fmt::ReachTable table = data::default_reach_table();
  prov::Context ctx{t, table, Scenario::Mgdm, prov::Protection::Spp, 4, 3};
  state::NetworkState net(t, ctx.scenario, ctx.wavelengths);

  prov::Request req{1, 0, 2, 100};
  auto working = prov::provision_working(ctx, net, req);
  REQUIRE(working.has_value());
  CHECK(working->route.links == std::vector<int>{4});  // 15 km direct beats 20 km detour

  auto routes = topo::k_shortest_paths_avoiding(t, req.src, req.dst, ctx.k,
                                                working->route.mask);
  auto options = spp::enumerate_options(ctx, net, req, *working, routes);
  REQUIRE(!options.empty());
  for (const auto& o : options) {
    CHECK(masks_disjoint(o.route->mask, working->route.mask));
    CHECK(o.incremental_spectrum == (int)o.route->links.size());
    // only a backup on the working path's own group rides its receiver free
    if (o.combo.labels == "A") CHECK(o.incremental_mimo == doctest::Approx(0.0));
    if (o.combo.labels == "E") CHECK(o.incremental_mimo == doctest::Approx(25.0));
  }

  auto backup = spp::assign_backup(ctx, net, req, *working);
  REQUIRE(backup.has_value());
  CHECK(backup->route.links == std::vector<int>{0, 1});
  CHECK(backup->wavelength == 0);
  CHECK(backup->role == state::Role::BackupShared);
  net.check_invariants();
}

TEST_CASE("cheap wide groups lose to cheap narrow ones at equal spectrum") {
  // 100 Gb/s: every group lights one pair, but A needs a 2x2 and E a 10x10.
  topo::Topology t = square();
  fmt::ReachTable table = data::default_reach_table();
  prov::Context ctx{t, table, Scenario::Mgdm, prov::Protection::Dpp, 2, 3};
  state::NetworkState net(t, ctx.scenario, ctx.wavelengths);

  prov::Request req{1, 0, 2, 100};
  auto working = prov::provision_working(ctx, net, req);
  REQUIRE(working.has_value());
  REQUIRE(working->groups.size() == 1);
  CHECK(working->groups[0].selector == Selector{Selector::Kind::Group, Mg::A});

  auto backup = spp::assign_backup(ctx, net, req, *working);
  REQUIRE(backup.has_value());
  CHECK(backup->groups[0].selector == Selector{Selector::Kind::Group, Mg::A});
  // the backup's A receiver is the working one, reused
  CHECK(backup->mimo_deployed == doctest::Approx(0.0));
}

TEST_CASE("no disjoint route means rejection") {
  topo::Topology t = topo::parse_topology(R"({
    "nodes": ["A", "B", "C"],
    "links": [{"a": "A", "b": "B", "length_km": 10},
              {"a": "B", "b": "C", "length_km": 10}]
  })");
  fmt::ReachTable table = data::default_reach_table();
  prov::Context ctx{t, table, Scenario::Mgdm, prov::Protection::Spp, 4, 3};
  state::NetworkState net(t, ctx.scenario, ctx.wavelengths);
  prov::Request req{1, 0, 2, 100};
  auto working = prov::provision_working(ctx, net, req);
  REQUIRE(working.has_value());
  CHECK_FALSE(spp::assign_backup(ctx, net, req, *working).has_value());
}

TEST_CASE("backups of link-disjoint workers share slots, receivers and pairs") {
  // two requests into node C whose workings are disjoint and whose backups
  // both want the diagonal
  topo::Topology t = square();
  fmt::ReachTable table = data::default_reach_table();
  prov::Context ctx{t, table, Scenario::Mgdm, prov::Protection::Spp, 4, 3};
  state::NetworkState net(t, ctx.scenario, ctx.wavelengths);

  prov::Request r1{1, 1, 2, 100};  // B -> C, works the direct link
  prov::Request r2{2, 3, 2, 100};  // D -> C, works the direct link
  auto w1 = prov::provision_working(ctx, net, r1);
  auto w2 = prov::provision_working(ctx, net, r2);
  REQUIRE(w1.has_value());
  REQUIRE(w2.has_value());
  REQUIRE(w1->route.links == std::vector<int>{1});
  REQUIRE(w2->route.links == std::vector<int>{2});

  int pairs_before = net.spectrum.backup_pair_count();
  auto b1 = spp::assign_backup(ctx, net, r1, *w1);
  REQUIRE(b1.has_value());
  int pairs_mid = net.spectrum.backup_pair_count();
  auto b2 = spp::assign_backup(ctx, net, r2, *w2);
  REQUIRE(b2.has_value());
  int pairs_after = net.spectrum.backup_pair_count();

  CHECK(pairs_before == 0);
  // both backups traverse the diagonal; under sharing the second one rides
  // some of the first one's pairs
  CHECK(pairs_after - pairs_mid < (int)b2->route.links.size());
  net.check_invariants();
}

TEST_CASE("the chosen option is invariant under feasibility-preserving rescaling") {
  topo::Topology t = square();
  topo::Topology s = topo::scale_link_lengths(t, 20.0 * (15.0 / 10.0));  // x1.5, keeps qpsk everywhere
  fmt::ReachTable table = data::default_reach_table();
  for (auto proto : {prov::Protection::Spp, prov::Protection::Dpp}) {
    prov::Context c1{t, table, Scenario::Mgdm, proto, 3, 3};
    prov::Context c2{s, table, Scenario::Mgdm, proto, 3, 3};
    state::NetworkState n1(t, c1.scenario, c1.wavelengths);
    state::NetworkState n2(s, c2.scenario, c2.wavelengths);
    for (int id = 1; id <= 3; ++id) {
      prov::Request req{id, (id - 1) % 4, 2, 100};
      if (req.src == req.dst) req.src = 3;
      auto w1 = prov::provision_working(c1, n1, req);
      auto w2 = prov::provision_working(c2, n2, req);
      REQUIRE(w1.has_value() == w2.has_value());
      if (!w1) continue;
      CHECK(w1->route.links == w2->route.links);
      auto b1 = spp::assign_backup(c1, n1, req, *w1);
      auto b2 = spp::assign_backup(c2, n2, req, *w2);
      REQUIRE(b1.has_value() == b2.has_value());
      if (b1) {
        CHECK(b1->route.links == b2->route.links);
        CHECK(b1->wavelength == b2->wavelength);
      }
    }
    CHECK(n1.dump() == n2.dump());
  }
}
