#include <doctest.h>

#include <random>

#include "torkh/homology.hpp"
#include "torkh/jones.hpp"
#include "torkh/scan.hpp"

using namespace torkh;

namespace {

BigradedTable kh(const LinkDiagram& d, const CoefficientRing& ring) {
  return homology(scan_complex(d, Theory::Khovanov, ring).complex, ring);
}

LaurentPoly2 q(int e, int c = 1) { return LaurentPoly2::monomial(0, e, c); }

}  // namespace

TEST_CASE("unknot and Hopf link brackets") {
  CHECK(jones_kauffman(parse_link_spec("braid:1:").diagram) == q(-1) + q(1));
  // positive Hopf link
  auto hopf = parse_link_spec("torus:2,2").diagram;
  CHECK(jones_kauffman(hopf) == q(0) + q(2) + q(4) + q(6));
  CHECK(jones_kauffman(hopf) == euler_characteristic(kh(hopf, CoefficientRing::rationals())));
}

TEST_CASE("trefoil Poincare polynomial") {
  auto p = poincare(kh(parse_link_spec("torus:3,2").diagram, CoefficientRing::rationals()));
  LaurentPoly2 want = LaurentPoly2::monomial(0, 1) + LaurentPoly2::monomial(0, 3) + LaurentPoly2::monomial(2, 5) +
                      LaurentPoly2::monomial(3, 9);
  CHECK(p == want);
  CHECK(p.at_t_minus_one() == jones_kauffman(parse_link_spec("torus:3,2").diagram));
  CHECK_THROWS(poincare(kh(parse_link_spec("torus:3,2").diagram, CoefficientRing::integers())));
}

TEST_CASE("dynamic program equals naive state sum") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    BraidWord b{4, {}};
    std::uniform_int_distribution<int> letter(1, 3), sign(0, 1);
    for (int i = 0; i < 9; ++i) b.letters.push_back(letter(rng) * (sign(rng) ? 1 : -1));
    auto d = braid_closure(b);
    CHECK(jones_kauffman(d) == jones_state_sum_naive(d));
  }
  for (const char* spec : {"torus:3,3", "dlink:3,2,1", "elink:4,3,1", "torus:2,-5"}) {
    auto d = parse_link_spec(spec).diagram;
    CAPTURE(spec);
    CHECK(jones_kauffman(d) == jones_state_sum_naive(d));
    CHECK(jones_kauffman(d) == euler_characteristic(kh(d, CoefficientRing::integers())));
  }
}

TEST_CASE("min q profile") {
  auto t = kh(parse_link_spec("torus:3,2").diagram, CoefficientRing::integers());
  auto prof = min_q_profile(t);
  CHECK(prof.at(0) == 1);
  CHECK(prof.at(2) == 5);
  CHECK(prof.at(3) == 7);  // Z/2 torsion sits at (3,7)
  CHECK(prof.at(1) == kInfinity);
}
