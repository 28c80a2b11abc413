#include <doctest.h>

#include <random>

#include "torkh/errors.hpp"
#include "torkh/homology.hpp"

using namespace torkh;

namespace {

// Z --2--> Z in degrees 0 -> 1 at q = 0, plus a free generator.
BigradedComplex two_torsion() {
  BigradedComplex cx;
  int a = cx.add_generator(0, 0);
  int b = cx.add_generator(1, 0);
  cx.add_generator(0, 2);
  cx.d[a].push_back({b, 2});
  return cx;
}

}  // namespace

TEST_CASE("smith normal form invariant factors") {
  IntMatrix m{{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}};
  auto f = smith_invariant_factors(m);
  REQUIRE(f.size() == 3);
  CHECK(f[0] == 2);
  CHECK(f[1] == 6);
  CHECK(f[2] == 12);
  CHECK(smith_invariant_factors(IntMatrix{{0, 0}, {0, 0}}).empty());
  CHECK(smith_invariant_factors(IntMatrix{{4, 0}, {0, 6}}) == std::vector<BigInt>{2, 12});
}

TEST_CASE("field ranks") {
  IntMatrix m{{1, 2}, {2, 4}};
  CHECK(matrix_rank(m, 0) == 1);
  IntMatrix m2{{2, 0}, {0, 3}};
  CHECK(matrix_rank(m2, 0) == 2);
  CHECK(matrix_rank(m2, 2) == 1);
  CHECK(matrix_rank(m2, 3) == 1);
}

TEST_CASE("homology of small complexes") {
  BigradedComplex one;
  one.add_generator(0, 1);
  auto t = homology(one, CoefficientRing::integers());
  CHECK(t.rank(0, 1) == 1);
  CHECK(t.total_rank() == 1);

  auto cx = two_torsion();
  cx.check(CoefficientRing::integers());
  auto z = homology(cx, CoefficientRing::integers());
  CHECK(z.groups.at({1, 0}).torsion == std::vector<BigInt>{2});
  CHECK(z.groups.at({1, 0}).free == 0);
  CHECK(z.rank(0, 2) == 1);
  CHECK(z.is_zero(0, 0));
  auto q = homology(cx, CoefficientRing::rationals());
  CHECK(q.total_rank() == 1);
  auto f2 = homology(cx, CoefficientRing::prime_field(2));
  CHECK(f2.rank(0, 0) == 1);
  CHECK(f2.rank(1, 0) == 1);
  CHECK(f2 == z.reduce_mod(2));
  CHECK(homology(cx, CoefficientRing::prime_field(3)) == z.reduce_mod(3));
}

TEST_CASE("d∘d check rejects bad complexes") {
  BigradedComplex cx;
  int a = cx.add_generator(0, 0);
  int b = cx.add_generator(1, 0);
  int c = cx.add_generator(2, 0);
  cx.d[a].push_back({b, 1});
  cx.d[b].push_back({c, 2});
  CHECK_THROWS_AS(cx.check(CoefficientRing::integers()), InvalidInput);
  CHECK_NOTHROW(cx.check(CoefficientRing::prime_field(2)));
}

TEST_CASE("unit cancellation tracks chains") {
  // x -> y (unit), x -> z; a chain supported on y must land on -z.
  BigradedComplex cx;
  int x = cx.add_generator(0, 0);
  int y = cx.add_generator(1, 0);
  int z = cx.add_generator(1, 0);
  cx.d[x] = {{y, 1}, {z, 3}};
  std::vector<Chain> tracked{Chain{{y, 1}}};
  auto red = reduce_complex(cx, CoefficientRing::integers(), &tracked);
  CHECK(red.size() == 1);
  CHECK(tracked[0].size() == 1);
  CHECK(tracked[0].begin()->second == -3);
}

TEST_CASE("random complexes: reduction preserves ranks") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    // C1 = C1a ⊕ C1b; A lands in C1a and B reads only C1b, so d∘d = 0
    int n0 = 3, n1 = 5, n2 = 3;
    std::uniform_int_distribution<int> dist(-2, 2);
    IntMatrix A(n0, std::vector<BigInt>(n1));
    for (auto& r : A)
      for (auto& v : r) v = dist(rng);
    BigradedComplex cx;
    std::vector<int> g0, g1, g2;
    for (int i = 0; i < n0; ++i) g0.push_back(cx.add_generator(0, 0));
    for (int i = 0; i < n1; ++i) g1.push_back(cx.add_generator(1, 0));
    for (int i = 0; i < n2; ++i) g2.push_back(cx.add_generator(2, 0));
    for (int i = 0; i < n0; ++i)
      for (int j = 0; j < 2; ++j)
        if (A[i][j] != 0) cx.d[g0[i]].push_back({g1[j], A[i][j]});
    for (int j = 2; j < n1; ++j)
      for (int k = 0; k < n2; ++k) {
        int v = dist(rng);
        if (v) cx.d[g1[j]].push_back({g2[k], v});
      }
    cx.check(CoefficientRing::integers());
    auto z = homology(cx, CoefficientRing::integers());
    for (std::int64_t p : {2, 3, 5}) CHECK(homology(cx, CoefficientRing::prime_field(p)) == z.reduce_mod(p));
    auto qt = homology(cx, CoefficientRing::rationals());
    CHECK(qt.total_rank() == z.total_rank());
  }
}
