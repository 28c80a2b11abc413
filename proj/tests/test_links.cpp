#include <doctest.h>

#include <numeric>
#include <random>

#include "torkh/errors.hpp"
#include "torkh/links.hpp"

using namespace torkh;

TEST_CASE("torus and D braids expand as words") {
  CHECK(torus_braid(3, 2).letters == std::vector<int>{1, 2, 1, 2});
  CHECK(torus_braid(1, 5).letters.empty());
  CHECK(torus_braid(2, 2).letters == std::vector<int>{1, 1});
  CHECK(dlink_braid(3, 2, 0) == torus_braid(3, 2));
  CHECK(dlink_braid(6, 5, 4).letters.size() == 29);
  CHECK_THROWS_AS(torus_braid(0, 1), InvalidParameter);
  CHECK_THROWS_AS(torus_braid(2, -1), InvalidParameter);
  CHECK_THROWS_AS(dlink_braid(3, 2, 3), InvalidParameter);
}

TEST_CASE("braid closures") {
  auto t22 = braid_closure(torus_braid(2, 2));
  CHECK(t22.crossing_count() == 2);
  CHECK(t22.component_count() == 2);
  CHECK(t22.positive_crossings() == 2);
  CHECK(braid_closure(torus_braid(3, 2)).component_count() == 1);
  auto unlink = braid_closure(BraidWord{3, {}});
  CHECK(unlink.crossing_count() == 0);
  CHECK(unlink.component_count() == 3);
  CHECK(unlink.free_loops.size() == 3);
  auto partial = braid_closure(BraidWord{3, {1, -1}});
  CHECK(partial.component_count() == 3);
  CHECK(partial.free_loops.size() == 1);
  CHECK(partial.negative_crossings() == 1);
  partial.validate();
}

TEST_CASE("torus closures have gcd components and uniform linking") {
  for (int n = 1; n <= 12; ++n)
    for (int m = 1; m <= 12; ++m) {
      auto d = braid_closure(torus_braid(n, m));
      d.validate();
      int g = std::gcd(n, m);
      REQUIRE(d.component_count() == g);
      auto lk = components_and_linking(d);
      int expect = (n / g) * (m / g);
      for (int i = 0; i < g; ++i)
        for (int j = 0; j < g; ++j) CHECK(lk.linking[i][j] == (i == j ? 0 : expect));
    }
}

TEST_CASE("linking matrices") {
  auto t42 = components_and_linking(braid_closure(torus_braid(4, 2)));
  CHECK(t42.count == 2);
  CHECK(t42.linking == std::vector<std::vector<int>>{{0, 2}, {2, 0}});
  auto t64 = components_and_linking(braid_closure(torus_braid(6, 4)));
  CHECK(t64.linking[0][1] == 6);
  auto u = components_and_linking(braid_closure(BraidWord{2, {}}));
  CHECK(u.linking == std::vector<std::vector<int>>{{0, 0}, {0, 0}});
}

TEST_CASE("orientation shifts") {
  auto lk = components_and_linking(braid_closure(torus_braid(4, 4))).linking;
  CHECK(orientation_shift(lk, {}) == BidegreeShift{0, 0});
  CHECK(orientation_shift(lk, {0}) == BidegreeShift{6, 18});      // p=1, q=3
  CHECK(orientation_shift(lk, {0, 2}) == BidegreeShift{8, 24});   // p=q=2
  CHECK(orientation_shift(lk, {1, 3}) == orientation_shift(lk, {0, 2}));
  auto lk64 = components_and_linking(braid_closure(torus_braid(6, 4))).linking;
  CHECK(orientation_shift(lk64, {1}) == BidegreeShift{12, 36});
  // block-diagonal additivity
  std::vector<std::vector<int>> a{{0, 3}, {3, 0}}, b{{0, -1}, {-1, 0}};
  std::vector<std::vector<int>> ab{{0, 3, 0, 0}, {3, 0, 0, 0}, {0, 0, 0, -1}, {0, 0, -1, 0}};
  CHECK(orientation_shift(ab, {0, 2}).dh == orientation_shift(a, {0}).dh + orientation_shift(b, {0}).dh);
}

TEST_CASE("reorienting and mirroring") {
  auto t22 = braid_closure(torus_braid(2, 2));
  auto r = reorient(t22, {1});
  r.validate();
  CHECK(r.negative_crossings() == 2);
  CHECK(reorient(r, {1}) == t22);
  auto m = mirror(t22);
  m.validate();
  CHECK(m.negative_crossings() == 2);
  CHECK(mirror(m) == t22);
  auto t32 = braid_closure(torus_braid(3, 2));
  CHECK(mirror(t32) == braid_closure(BraidWord{3, {-1, -2, -1, -2}}));
}

TEST_CASE("resolving crossings") {
  // 0-resolution of the last crossing of D^i gives D^{i-1}
  for (int i = 1; i <= 3; ++i) {
    auto d = braid_closure(dlink_braid(4, 3, i));
    auto r = resolve_crossing(d, d.crossing_count() - 1, 0);
    r.validate();
    CHECK(r == braid_closure(dlink_braid(4, 3, i - 1)));
  }
  auto d = braid_closure(dlink_braid(6, 5, 3));
  auto e = resolve_crossing(d, d.crossing_count() - 1, 1);
  e.validate();
  CHECK(e.component_count() == braid_closure(dlink_braid(4, 3, 2)).component_count());
  // one-crossing unknot: the two smoothings give 1 and 2 circles
  auto u = braid_closure(BraidWord{2, {1}});
  auto r0 = resolve_crossing(u, 0, 0);
  auto r1 = resolve_crossing(u, 0, 1);
  CHECK(r0.component_count() + r1.component_count() == 3);
  CHECK_THROWS_AS(resolve_crossing(u, 1, 0), InvalidParameter);
  CHECK_THROWS_AS(resolve_crossing(u, 0, 2), InvalidParameter);
}

TEST_CASE("E links") {
  for (int n = 3; n <= 6; ++n) {
    auto e = e_link_diagram(n, n, 0);
    e.validate();
    CHECK(e.component_count() == n - 1);
    CHECK(e.negative_crossings() == 2 * n - 2);
    for (int i = 0; i <= n - 2; ++i) {
      auto e1 = e_link_diagram(n, n - 1, i);
      e1.validate();
      CHECK(e1.negative_crossings() == 2 * n - 3);
    }
  }
  CHECK_THROWS_AS(e_link_diagram(5, 3, 0), InvalidParameter);
  CHECK_THROWS_AS(e_link_diagram(5, 5, 4), InvalidParameter);
}

TEST_CASE("canonical hash") {
  auto d = braid_closure(torus_braid(3, 3));
  std::vector<int> perm(d.edge_count());
  std::iota(perm.begin(), perm.end(), 0);
  std::mt19937 rng(7);
  std::shuffle(perm.begin(), perm.end(), rng);
  auto p = d;
  for (auto& c : p.crossings)
    for (auto& e : c.edges) e = perm[e];
  CHECK(canonical_hash(p) == canonical_hash(d));
  auto flipped = d;
  flipped.crossings[0].sign = -1;
  CHECK(canonical_hash(flipped) != canonical_hash(d));
  CHECK(canonical_hash(d).size() == 16);
  CHECK(canonical_hash(braid_closure(torus_braid(2, 2))) == canonical_hash(braid_closure(torus_braid(2, 2))));
}

TEST_CASE("link spec parsing") {
  CHECK(parse_link_spec("torus:3,2").diagram == braid_closure(torus_braid(3, 2)));
  CHECK(parse_link_spec("torus:3,-2").diagram.negative_crossings() == 4);
  CHECK(parse_link_spec("braid:3:1,-2,1").diagram.crossing_count() == 3);
  CHECK(parse_link_spec("braid:2:").diagram.component_count() == 2);
  CHECK(parse_link_spec("dlink:4,3,2").diagram == braid_closure(dlink_braid(4, 3, 2)));
  CHECK(parse_link_spec("elink:4,4,1").diagram == e_link_diagram(4, 4, 1));
  auto t = braid_closure(torus_braid(2, 3));
  CHECK(parse_link_spec(to_pd_string(t)).diagram == t);
  // arbitrary edge ids are compacted in order
  CHECK(parse_link_spec("pd:[[11,13,12,10;+],[13,11,10,12;+]]").diagram == braid_closure(torus_braid(2, 2)));
  CHECK_THROWS_AS(parse_link_spec("pd:[[1,2,3;+]]"), InvalidInput);
  CHECK_THROWS_AS(parse_link_spec("pd:[[1,2,3,4;+]]"), InvalidInput);
  CHECK_THROWS_AS(parse_link_spec("knot:3_1"), InvalidInput);
  CHECK_THROWS_AS(parse_link_spec("braid:3:1,3"), InvalidParameter);
  CHECK(parse_orientation_subset("rev=1,3") == std::vector<int>{0, 2});
  CHECK(parse_orientation_subset("rev=").empty());
  CHECK_THROWS_AS(parse_orientation_subset("rev=0"), InvalidInput);
}
