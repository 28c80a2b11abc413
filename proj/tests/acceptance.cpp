// Acceptance checks: one PASS/FAIL line per criterion. Pass --slow to also
// run the large integral and n = 6 targets.

#include <chrono>
#include <cstring>
#include <functional>
#include <iostream>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "torkh/corpus.hpp"
#include "torkh/cube.hpp"
#include "torkh/formulas.hpp"
#include "torkh/homology.hpp"
#include "torkh/jones.hpp"
#include "torkh/lee.hpp"
#include "torkh/scan.hpp"
#include "torkh/verify.hpp"

using namespace torkh;

namespace {

bool g_slow = false;
const CoefficientRing Z = CoefficientRing::integers();
const CoefficientRing Q = CoefficientRing::rationals();
const CoefficientRing F2 = CoefficientRing::prime_field(2);
const CoefficientRing F3 = CoefficientRing::prime_field(3);

using Clock = std::chrono::steady_clock;
double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

// Accumulates failures; the criterion passes when none were recorded.
struct Check {
  std::vector<std::string> failures;
  std::vector<std::string> notes;
  void expect(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
  void note(const std::string& s) { notes.push_back(s); }
};

std::string fmt(double s) {
  std::ostringstream os;
  os.precision(2);
  os << std::fixed << s << "s";
  return os.str();
}

std::string report_text(const VerificationReport& r) {
  std::string s = r.claim + " " + r.params.dump() + " " + status_name(r.status);
  if (r.witness)
    s += " at (" + std::to_string(r.witness->h) + "," + std::to_string(r.witness->q) + ") expected " +
         r.witness->expected + " got " + r.witness->got;
  return s;
}

LinkDiagram torus(int n, int m) { return parse_link_spec("torus:" + std::to_string(n) + "," + std::to_string(m)).diagram; }

const std::vector<CorpusLink>& corpus() {
  static const std::vector<CorpusLink> c = link_corpus();
  return c;
}

void c1(Check& c) {
  for (int n : {4, 5, 6}) {
    const auto t0 = Clock::now();
    auto r = verify_lower_bound(n, Family::nn, Q);
    const double el = seconds_since(t0);
    c.expect(r.passed(), report_text(r));
    c.expect(el <= (n == 6 ? 900.0 : 10.0), "T(" + std::to_string(n) + "," + std::to_string(n) + ") took " + fmt(el));
    c.note("n=" + std::to_string(n) + " " + fmt(el));
  }
  auto t = khovanov_table(torus(6, 6), Q);
  for (auto [h, q] : {Bidegree{0, 24}, {10, 36}, {16, 44}, {18, 48}})
    c.expect(t.rank(h, q) == 1 && t.is_zero(h, q) == false,
             "dim at (" + std::to_string(h) + "," + std::to_string(q) + ") = " + std::to_string(t.rank(h, q)));
}

void c2(Check& c) {
  auto r = verify_lower_bound(6, Family::n1n, Q);
  c.expect(r.passed(), report_text(r));
  auto t = khovanov_table(torus(7, 6), Q);
  c.expect(t.rank(11, 43) == 0, "rational dim at (11,43) = " + std::to_string(t.rank(11, 43)));
  if (!g_slow) {
    c.note("integral (11,43) check skipped without --slow");
    return;
  }
  auto rz = verify_lower_bound(6, Family::n1n, Z);
  c.expect(rz.passed(), report_text(rz));
  c.expect(rz.details.value("torsion_only", false), "integral (11,43) group is not pure torsion");
  c.note("integral (11,43) = " + rz.details["cells"][0]["group"].get<std::string>());
}

void c3(Check& c) {
  const auto t0 = Clock::now();
  int count = 0;
  for (auto [n, m] : {std::pair{2, 2}, {2, -2}, {3, 2}, {3, -2}, {3, 3}, {3, -3}, {4, 2}, {4, -2}, {4, 3}, {4, 4}}) {
    const auto d = torus(n, m);
    const int comps = d.component_count();
    for (const auto& f : {Q, F3})
      for (int mask = 0; mask < (1 << comps); ++mask) {
        std::vector<int> rev;
        for (int k = 0; k < comps; ++k)
          if (mask >> k & 1) rev.push_back(k);
        const int q = static_cast<int>(rev.size());
        const int want = s_torus(n, m, comps - q, q);
        const int got = s_invariant(d, rev, f).s;
        ++count;
        c.expect(got == want, "s(T(" + std::to_string(n) + "," + std::to_string(m) + "), mask " +
                                  std::to_string(mask) + ", " + f.name() + ") = " + std::to_string(got) +
                                  ", formula " + std::to_string(want));
      }
  }
  const double el = seconds_since(t0);
  c.expect(el <= 60.0, "took " + fmt(el));
  c.note(std::to_string(count) + " orientation/field cases in " + fmt(el));
}

void c4(Check& c) {
  const auto t0 = Clock::now();
  for (auto [n, m] : {std::pair{2, 2}, {3, 3}, {4, 2}, {4, 4}, {6, 2}}) {
    auto r = verify_filtration(n, m);
    c.expect(r.passed(), report_text(r));
    if (n == 4 && m == 4) {
      auto gr = table_from_json(r.details["gr"]);
      c.expect(gr.rank(8, 20) == 1 && gr.rank(8, 22) == 3 && gr.rank(8, 24) == 2,
               "T(4,4) h=8 pattern is " + std::to_string(gr.rank(8, 20)) + "/" + std::to_string(gr.rank(8, 22)) +
                   "/" + std::to_string(gr.rank(8, 24)));
    }
  }
  const double el = seconds_since(t0);
  c.expect(el <= 300.0, "took " + fmt(el));
  c.note(fmt(el));
}

void c5(Check& c) {
  const int top = g_slow ? 6 : 5;
  int count = 0;
  for (int n = 2; n <= top; ++n)
    for (int i = 1; i < n; ++i) {
      auto r = verify_les_additivity(n, n - 1, i, Q);
      ++count;
      c.expect(r.passed(), report_text(r));
    }
  c.note(std::to_string(count) + " rational cases up to n=" + std::to_string(top));
  if (!g_slow) {
    c.note("n=6 and the integral n=7 case skipped without --slow");
    return;
  }
  auto rz = verify_les_additivity(7, 6, 6, Z);
  c.expect(rz.status == Status::fail && rz.details.value("euler_consistent", false),
           "integral additivity at n=7, i=6 was expected to fail: " + report_text(rz));
  if (rz.witness)
    c.note("integral failure at (" + std::to_string(rz.witness->h) + "," + std::to_string(rz.witness->q) +
           "): split sum " + rz.witness->expected + ", actual " + rz.witness->got);
}

void c6(Check& c) {
  const int top = g_slow ? 5 : 4;
  for (int n = 1; n <= top; ++n) {
    auto r = verify_recursions(n);
    c.expect(r.passed(), report_text(r));
  }
  c.note("n <= " + std::to_string(top));
}

void c7(Check& c) {
  const auto t0 = Clock::now();
  std::size_t violations = 0;
  for (int n = 3; n <= 200; ++n) {
    auto r = check_q_relations(n);
    violations += r.violations.size();
    for (const auto& v : r.violations)
      c.expect(false, "n=" + std::to_string(n) + " " + v.relation + " at h=" + std::to_string(v.h));
  }
  const double el = seconds_since(t0);
  c.expect(el < 1.0, "took " + fmt(el));
  StaircaseProvider bad;
  bad.nn = [](int n, int h) {
    ExtInt v = q_nn(n, h);
    return n == 8 && h == 13 && v != kInfinity ? v - 2 : v;
  };
  c.expect(!check_q_relations(8, bad).ok(), "perturbed staircase was not flagged");
  c.note("n=3..200 in " + fmt(el) + ", mutation flagged");
}

void c8(Check& c) {
  const auto t0 = Clock::now();
  for (const auto& e : corpus())
    for (const auto& ring : {Z, Q, F2, F3}) {
      auto scanned = homology(scan_complex(e.diagram, Theory::Khovanov, ring).complex, ring);
      auto naive = homology(khovanov_cube(e.diagram), ring);
      c.expect(scanned == naive, e.spec + " over " + ring.name());
    }
  c.note(std::to_string(corpus().size()) + " links x 4 rings in " + fmt(seconds_since(t0)));
}

void c9(Check& c) {
  for (const auto& e : corpus()) {
    auto chi = euler_characteristic(homology(scan_complex(e.diagram, Theory::Khovanov, Q).complex, Q));
    c.expect(chi == jones_state_sum_naive(e.diagram), e.spec + ": Euler characteristic vs state sum");
    c.expect(chi == jones_kauffman(e.diagram), e.spec + ": Euler characteristic vs bracket recursion");
  }
  for (int n = 1; n <= 6; ++n)
    c.expect(L_poly(n).at_t_minus_one() == jones_kauffman(torus(n, n)),
             "L_" + std::to_string(n) + " at t=-1 vs bracket of T(n,n)");
  c.note(std::to_string(corpus().size()) + " links; L_n for n <= 6");
}

void c10(Check& c) {
  for (const auto& e : corpus())
    for (const auto& f : {Q, F2}) {
      auto ft = lee_filtration(e.diagram, f);
      std::int64_t total = 0;
      for (const auto& [h, lv] : ft.levels) {
        total += ft.dim(h);
        std::int64_t prev = ft.dim(h);
        for (const auto& [j, v] : lv) {
          c.expect(v <= prev, e.spec + ": filtration increases at h=" + std::to_string(h));
          prev = v;
        }
      }
      c.expect(total == (std::int64_t{1} << e.diagram.component_count()),
               e.spec + " over " + f.name() + ": total " + std::to_string(total));
      std::map<int, std::int64_t> sums;
      for (const auto& [k, g] : gr_dimensions(ft).groups) sums[k.first] += g.free;
      for (const auto& [h, lv] : ft.levels)
        c.expect(sums[h] == ft.dim(h), e.spec + ": gr sum at h=" + std::to_string(h));
    }
  c.note(std::to_string(corpus().size()) + " links over Q (Lee) and F2 (Bar-Natan)");
}

}  // namespace

int main(int argc, char** argv) {
  for (int k = 1; k < argc; ++k)
    if (std::strcmp(argv[k], "--slow") == 0) g_slow = true;

  const std::vector<std::pair<std::string, std::function<void(Check&)>>> criteria{
      {"1 T(6,6) vanishes below q_nn, rank one at h=2pq", c1},
      {"2 T(7,6) vanishes below q_n1n, (11,43) rationally zero", c2},
      {"3 s-invariants of torus links match the formula", c3},
      {"4 associated graded Lee tables match the prediction", c4},
      {"5 skein additivity over Q", c5},
      {"6 L_n and K_n recursions", c6},
      {"7 staircase relations for 3 <= n <= 200", c7},
      {"8 scanning equals the cube on the corpus", c8},
      {"9 Euler characteristic equals the bracket state sum", c9},
      {"10 deformed homology has dimension 2^components", c10},
  };
  int failed = 0;
  for (const auto& [name, fn] : criteria) {
    Check c;
    const auto t0 = Clock::now();
    try {
      fn(c);
    } catch (const std::exception& e) {
      c.expect(false, std::string("exception: ") + e.what());
    }
    const bool ok = c.failures.empty();
    failed += !ok;
    std::cout << (ok ? "[PASS] " : "[FAIL] ") << name << " (" << fmt(seconds_since(t0)) << ")";
    for (const auto& n : c.notes) std::cout << "; " << n;
    std::cout << '\n';
    for (std::size_t k = 0; k < c.failures.size() && k < 10; ++k) std::cout << "    " << c.failures[k] << '\n';
    if (c.failures.size() > 10) std::cout << "    ... " << c.failures.size() - 10 << " more\n";
    std::cout.flush();
  }
  std::cout << (failed ? std::to_string(failed) + " criteria failed" : "all criteria passed")
            << (g_slow ? "" : " (fast tier; --slow adds the large targets)") << '\n';
  return failed ? 1 : 0;
}
