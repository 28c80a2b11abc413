#include <doctest.h>

#include <random>

#include "torkh/cube.hpp"
#include "torkh/errors.hpp"
#include "torkh/homology.hpp"
#include "torkh/scan.hpp"

using namespace torkh;

namespace {

BigradedTable scan_kh(const LinkDiagram& d, const CoefficientRing& ring, const ScanOptions& opts = {}) {
  auto res = scan_complex(d, Theory::Khovanov, ring, {}, opts);
  res.complex.check(ring);
  return homology(res.complex, ring);
}

BigradedTable cube_kh(const LinkDiagram& d, const CoefficientRing& ring) {
  return homology(khovanov_cube(d), ring);
}

const std::vector<CoefficientRing> kRings{CoefficientRing::integers(), CoefficientRing::rationals(),
                                          CoefficientRing::prime_field(2), CoefficientRing::prime_field(3)};

}  // namespace

TEST_CASE("scan matches the cube on small links") {
  for (const char* spec : {"braid:1:", "braid:3:", "torus:2,2", "torus:3,2", "torus:2,-3", "torus:3,3",
                           "braid:3:1,-2,1,-2", "torus:4,2", "dlink:3,2,1", "elink:4,3,1", "braid:2:1",
                           "braid:2:-1", "braid:3:1,1,-2"}) {
    auto d = parse_link_spec(spec).diagram;
    for (const auto& ring : kRings) {
      CAPTURE(spec);
      CAPTURE(ring.name());
      CHECK(scan_kh(d, ring) == cube_kh(d, ring));
    }
  }
}

TEST_CASE("scan is independent of crossing order") {
  auto d = parse_link_spec("braid:4:1,-2,3,2,-1,3,2").diagram;
  ScanOptions rev;
  for (int i = d.crossing_count() - 1; i >= 0; --i) rev.order.push_back(i);
  for (const auto& ring : kRings) CHECK(scan_kh(d, ring) == scan_kh(d, ring, rev));
}

TEST_CASE("random braids: scan versus cube") {
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 12; ++trial) {
    BraidWord b{4, {}};
    std::uniform_int_distribution<int> letter(1, 3), sign(0, 1);
    for (int i = 0; i < 7; ++i) b.letters.push_back(letter(rng) * (sign(rng) ? 1 : -1));
    auto d = braid_closure(b);
    for (const auto& ring : kRings) CHECK(scan_kh(d, ring) == cube_kh(d, ring));
  }
}

TEST_CASE("deformed scans have 2^components homology") {
  for (const char* spec : {"torus:2,2", "torus:3,2", "torus:3,3", "braid:3:1,-2,1,-2", "braid:2:"}) {
    auto d = parse_link_spec(spec).diagram;
    const std::int64_t expect = std::int64_t{1} << d.component_count();
    for (auto [th, ring] : {std::pair{Theory::Lee, CoefficientRing::rationals()},
                            std::pair{Theory::Lee, CoefficientRing::prime_field(3)},
                            std::pair{Theory::BarNatan, CoefficientRing::prime_field(2)}}) {
      auto res = scan_complex(d, th, ring);
      res.complex.check(ring);
      // after full cancellation over a field the remaining differential has no
      // q-preserving units; count homology by ranks
      auto red = reduce_complex(res.complex, ring);
      std::int64_t rank = 0;
      std::vector<std::map<int, BigInt>> rows(red.size());
      for (int x = 0; x < red.size(); ++x)
        for (const auto& [y, c] : red.d[x]) rows[x][y] = c;
      rank = sparse_rank(rows, ring);
      CHECK(red.size() - 2 * rank == expect);
    }
  }
}

TEST_CASE("tracking the zero chain") {
  auto d = parse_link_spec("torus:3,2").diagram;
  VertexChain zero;
  zero.smoothing = oriented_smoothing(d);
  auto circ = resolution_circles(d, zero.smoothing);
  zero.labels.assign(*std::max_element(circ.begin(), circ.end()) + 1, {0, 0});
  auto res = scan_complex(d, Theory::Lee, CoefficientRing::rationals(), {{zero}});
  CHECK(res.tracked.at(0).empty());
}

TEST_CASE("generator budget") {
  ScanOptions tight;
  tight.max_generators = 3;
  CHECK_THROWS_AS(scan_complex(parse_link_spec("torus:3,3").diagram, Theory::Khovanov,
                               CoefficientRing::rationals(), {}, tight),
                  ResourceLimit);
}
