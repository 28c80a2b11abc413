#include <doctest.h>

#include "torkh/cube.hpp"
#include "torkh/errors.hpp"
#include "torkh/homology.hpp"

using namespace torkh;

namespace {

HomologyGroup free1() { return {1, {}}; }

}  // namespace

TEST_CASE("cube of the unknot") {
  LinkDiagram u{{}, {0}};
  auto cx = khovanov_cube(u);
  REQUIRE(cx.size() == 2);
  auto t = homology(cx, CoefficientRing::integers());
  CHECK(t.rank(0, 1) == 1);
  CHECK(t.rank(0, -1) == 1);
}

TEST_CASE("cube homology of T(2,2) and T(3,2)") {
  auto t22 = homology(khovanov_cube(braid_closure(torus_braid(2, 2))), CoefficientRing::integers());
  CHECK(t22.groups.size() == 4);
  for (auto [h, q] : std::vector<Bidegree>{{0, 0}, {0, 2}, {2, 4}, {2, 6}}) CHECK(t22.groups.at({h, q}) == free1());

  auto t32 = homology(khovanov_cube(braid_closure(torus_braid(3, 2))), CoefficientRing::integers());
  CHECK(t32.groups.size() == 5);
  for (auto [h, q] : std::vector<Bidegree>{{0, 1}, {0, 3}, {2, 5}, {3, 9}}) CHECK(t32.groups.at({h, q}) == free1());
  CHECK(t32.groups.at({3, 7}) == HomologyGroup{0, {2}});

  auto f2 = homology(khovanov_cube(braid_closure(torus_braid(3, 2))), CoefficientRing::prime_field(2));
  CHECK(f2 == t32.reduce_mod(2));
  CHECK(f2.rank(2, 7) == 1);
  CHECK(f2.rank(3, 7) == 1);
}

TEST_CASE("cube differentials square to zero in every theory") {
  for (Theory th : {Theory::Khovanov, Theory::Lee, Theory::BarNatan})
    for (const char* w : {"torus:3,2", "braid:3:1,-2,1,-2", "torus:2,-3", "torus:3,3"}) {
      auto cx = khovanov_cube(parse_link_spec(w).diagram, th);
      CHECK_NOTHROW(cx.check(CoefficientRing::integers()));
    }
}

TEST_CASE("cube refuses large diagrams") {
  CHECK_THROWS_AS(khovanov_cube(braid_closure(torus_braid(4, 5))), ResourceLimit);
}

TEST_CASE("canonical chains are cycles") {
  auto d = braid_closure(torus_braid(2, 2));
  for (std::vector<int> rev : {std::vector<int>{}, {0}, {1}, {0, 1}}) {
    auto r = reorient(d, rev);
    for (Theory th : {Theory::Lee, Theory::BarNatan}) {
      auto cx = khovanov_cube(r, th);
      auto z = cube_chain(r, {canonical_vertex_chain(r, th)});
      REQUIRE(!z.empty());
      Chain dz;
      for (const auto& [x, c] : z)
        for (const auto& [y, e] : cx.d[x]) dz[y] += c * e;
      for (const auto& [y, v] : dz) CHECK(v == 0);
    }
  }
}
