#include <doctest.h>

#include <cstdlib>
#include <numeric>

#include "torkh/errors.hpp"
#include "torkh/formulas.hpp"
#include "torkh/homology.hpp"
#include "torkh/jones.hpp"
#include "torkh/scan.hpp"

using namespace torkh;

TEST_CASE("s formula examples and symmetries") {
  CHECK(s_torus(3, 2, 1, 0) == 2);
  CHECK(s_torus(6, 6, 3, 3) == -5);
  CHECK(s_torus(2, -2, 1, 1) == 1);
  CHECK(s_torus(3, -2, 1, 0) == -2);
  CHECK_THROWS_AS(s_torus(4, 4, 1, 1), InvalidParameter);
  CHECK_THROWS_AS(s_torus(4, 0, 2, 2), InvalidParameter);
  for (int n = 1; n <= 8; ++n)
    for (int m = 1; m <= 8; ++m) {
      const int d = std::gcd(n, m);
      for (int p = 0; p <= d; ++p) {
        CHECK(s_torus(n, m, p, d - p) == s_torus(m, n, p, d - p));
        CHECK(s_torus(n, m, p, d - p) == s_torus(n, m, d - p, p));
      }
    }
}

TEST_CASE("Lee rank formula") {
  CHECK(lee_rank_torus(2, 2) == std::map<int, std::int64_t>{{0, 2}, {2, 2}});
  CHECK(lee_rank_torus(6, 6) == std::map<int, std::int64_t>{{0, 2}, {10, 12}, {16, 30}, {18, 20}});
  CHECK(lee_rank_torus(3, 2) == std::map<int, std::int64_t>{{0, 2}});
  for (int n = 1; n <= 10; ++n)
    for (int m = 1; m <= 10; ++m) {
      std::int64_t s = 0;
      for (auto [h, v] : lee_rank_torus(n, m)) s += v;
      CHECK(s == (std::int64_t{1} << std::gcd(n, m)));
    }
}

TEST_CASE("predicted associated graded tables") {
  auto t = gr_lee_torus(2, 2);
  std::map<Bidegree, std::int64_t> got;
  for (const auto& [k, g] : t.groups) got[k] = g.free;
  CHECK(got == std::map<Bidegree, std::int64_t>{{{0, 0}, 1}, {{0, 2}, 1}, {{2, 4}, 1}, {{2, 6}, 1}});
  auto t44 = gr_lee_torus(4, 4);
  CHECK(t44.rank(8, 20) == 1);
  CHECK(t44.rank(8, 22) == 3);
  CHECK(t44.rank(8, 24) == 2);
  for (int n = 1; n <= 8; ++n)
    for (int m = 1; m <= 8; ++m) {
      auto gr = gr_lee_torus(n, m);
      std::map<int, std::int64_t> sums;
      for (const auto& [k, g] : gr.groups) {
        sums[k.first] += g.free;
        CHECK(((k.second % 2) + 2) % 2 == std::gcd(n, m) % 2);
      }
      CHECK(sums == lee_rank_torus(n, m));
    }
}

TEST_CASE("staircase examples") {
  CHECK(q_nn(6, 0) == 24);
  CHECK(q_nn(6, 10) == 36);
  CHECK(q_nn(6, 16) == 44);
  CHECK(q_nn(6, 18) == 48);
  CHECK(q_nn(6, 19) == kInfinity);
  CHECK(q_nn(6, -1) == kInfinity);
  CHECK(q_n1n(6, 11) == 43);
  CHECK(h_max(6, Family::nn) == 18);
  CHECK(h_max(6, Family::n1n) == 21);
  CHECK(h_max(1, Family::nn) == 0);
  CHECK(StaircaseFn{6, Family::n1n}(11) == 43);
  // trefoil: lowest q in each degree (the h=3 class is torsion at q=7)
  CHECK(q_n1n(2, 0) == 1);
  CHECK(q_n1n(2, 3) == 7);
}

TEST_CASE("staircases agree with the literal case analysis") {
  auto nn_oracle = [](int n, int h) -> ExtInt {
    if (h < 0 || h > n * n / 2) return kInfinity;
    if (h == 0) return n * n - 2 * n;
    for (int q = 1; 2 * q <= n; ++q) {
      const int p = n - q;
      if (2 * (p + 1) * (q - 1) < h && h <= 2 * p * q) return n * n + 2 * ((h + 1) / 2) - 2 * p;
    }
    return kInfinity;
  };
  auto n1n_oracle = [&](int n, int h) -> ExtInt {
    const int hn = n * n / 2;
    if (h < 0 || h > hn + n / 2) return kInfinity;
    for (int q = 1; 2 * q <= n; ++q)
      if (h == 2 * (n - q) * q + 1 && h <= hn) return nn_oracle(n, h) + n - 3;
    if (h <= hn) return nn_oracle(n, h) + n - 1;
    return hn + 2 * h - 1;
  };
  for (int n = 0; n <= 120; ++n)
    for (int h = -2; h <= n * n / 2 + n / 2 + 2; ++h) {
      CAPTURE(n);
      CAPTURE(h);
      REQUIRE(q_nn(n, h) == nn_oracle(n, h));
      REQUIRE(q_n1n(n, h) == n1n_oracle(n, h));
    }
}

TEST_CASE("staircases are monotone with small steps") {
  for (int n = 1; n <= 200; ++n)
    for (Family f : {Family::nn, Family::n1n}) {
      StaircaseFn q{n, f};
      for (int h = 1; h <= h_max(n, f); ++h) {
        ExtInt step = q(h) - q(h - 1);
        CHECK(q(h) != kInfinity);
        CHECK((step == 0 || step == 2 || step == 4));
      }
      CHECK(q(h_max(n, f) + 1) == kInfinity);
    }
  // the two clauses defining q_n1n agree where they overlap
  for (int n = 1; n <= 200; ++n) {
    const int h = h_max(n, Family::nn);
    CHECK(q_nn(n, h) + n - 1 == n * n / 2 + 2 * h - 1);
  }
}

TEST_CASE("rep dims, binomials and Catalan numbers") {
  CHECK(rep_dim(6, 3) == 5);
  CHECK(rep_dim(5, 0) == 1);
  CHECK(rep_dim(4, 2) == 2);
  CHECK_THROWS_AS(rep_dim(4, 3), InvalidParameter);
  CHECK(catalan(0) == 1);
  CHECK(catalan(3) == 5);
  CHECK(catalan(10) == 16796);
  CHECK(catalan(60) * 61 == binomial(120, 60));
}

TEST_CASE("recursion base cases") {
  auto m = [](int t, int q) { return LaurentPoly2::monomial(t, q); };
  CHECK(K_poly(2) == m(0, 1) + m(0, 3) + m(2, 5) + m(3, 9));
  CHECK(L_poly(0) == m(0, 0));
  CHECK(L_poly(2) == m(0, 0) + m(0, 2) + m(2, 4) + m(2, 6));
  for (int n = 0; n <= 10; ++n) {
    for (const auto& [k, c] : L_poly(n).terms()) CHECK(c > 0);
    for (const auto& [k, c] : K_poly(n).terms()) CHECK(c > 0);
  }
  const auto Q = CoefficientRing::rationals();
  for (int n = 1; n <= 3; ++n) {
    auto tnn = parse_link_spec("torus:" + std::to_string(n) + "," + std::to_string(n)).diagram;
    auto tn1 = parse_link_spec("torus:" + std::to_string(n + 1) + "," + std::to_string(n)).diagram;
    CHECK(L_poly(n) == poincare(homology(scan_complex(tnn, Theory::Khovanov, Q).complex, Q)));
    CHECK(K_poly(n) == poincare(homology(scan_complex(tn1, Theory::Khovanov, Q).complex, Q)));
  }
}

TEST_CASE("q relations hold and the checker can fail") {
  for (int n = 3; n <= 40; ++n) {
    auto r = check_q_relations(n);
    CAPTURE(n);
    CHECK(r.ok());
  }
  StaircaseProvider bad;
  bad.nn = [](int n, int h) {
    ExtInt v = q_nn(n, h);
    return (n == 6 && h == 7 && v != kInfinity) ? v - 2 : v;
  };
  auto r = check_q_relations(6, bad);
  REQUIRE(!r.ok());
  CHECK(r.violations.front().h >= 0);
}

TEST_CASE("twist bounds on torus families") {
  // T(2,-2k), antiparallel strands: the lower end is reached
  auto r = twist_bound_check(2, -2, 2, 1, 1);
  CHECK(r.ok());
  CHECK(r.value == r.lo);
  // parallel orientation: normalized difference vanishes
  for (int n = 2; n <= 6; ++n) {
    auto par = twist_bound_check(n, n, 3 * n, n, 0);
    CHECK(par.value == 0);
  }
  for (int n = 1; n <= 6; ++n)
    for (int m = -3 * n; m <= 3 * n; ++m)
      for (int k = 1; k <= 3; ++k) {
        const int d = std::gcd(n, std::abs(m));
        for (int p = 0; p <= d; ++p) {
          auto t = twist_bound_check(n, m, m + k * n, p, d - p);
          CAPTURE(n);
          CAPTURE(m);
          CAPTURE(k);
          CAPTURE(p);
          CHECK(t.ok());
        }
      }
}
