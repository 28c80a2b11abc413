#include "torkh/jones.hpp"

#include <algorithm>

#include "scan_internal.hpp"
#include "torkh/cube.hpp"
#include "torkh/errors.hpp"

namespace torkh {

namespace {

LaurentPoly2 circle_value() { return LaurentPoly2::monomial(0, -1) + LaurentPoly2::monomial(0, 1); }

LaurentPoly2 power(const LaurentPoly2& p, int k) {
  LaurentPoly2 r = LaurentPoly2::constant(1);
  for (int i = 0; i < k; ++i) r = r * p;
  return r;
}

LaurentPoly2 normalization(const LinkDiagram& d) {
  const int np = d.positive_crossings(), nm = d.negative_crossings();
  return LaurentPoly2::monomial(0, np - 2 * nm, nm % 2 ? -1 : 1);
}

}  // namespace

LaurentPoly2 poincare(const BigradedTable& table) {
  if (!table.ring.is_field()) throw InvalidInput("poincare needs a field-coefficient table");
  LaurentPoly2 p;
  for (const auto& [k, g] : table.groups) p.add_term(k.first, k.second, g.free);
  return p;
}

LaurentPoly2 euler_characteristic(const BigradedTable& table) {
  LaurentPoly2 p;
  for (const auto& [k, g] : table.groups) p.add_term(0, k.second, k.first % 2 ? -g.free : g.free);
  return p;
}

LaurentPoly2 jones_kauffman(const LinkDiagram& diag, std::size_t max_states) {
  diag.validate();
  using detail::Matching;
  std::map<Matching, LaurentPoly2> states;
  states[Matching{}] = power(circle_value(), static_cast<int>(diag.free_loops.size()));
  std::vector<int> boundary;
  const LaurentPoly2 mq = LaurentPoly2::monomial(0, 1, -1);
  for (const auto& cr : diag.crossings) {
    auto g = detail::make_step(boundary, cr.edges);
    std::map<Matching, LaurentPoly2> next;
    for (const auto& [m, poly] : states)
      for (int r = 0; r < 2; ++r) {
        auto go = detail::glue_object(g, m, r);
        LaurentPoly2 w = poly * power(circle_value(), static_cast<int>(go.loop_rep.size()));
        if (r) w = w * mq;
        auto& slot = next[go.matching];
        slot = slot + w;
      }
    if (next.size() > max_states) throw ResourceLimit("too many boundary states", next.size());
    states = std::move(next);
    boundary.clear();
    for (int v : g.survivors) boundary.push_back(g.v_edge[v]);
  }
  LaurentPoly2 total;
  for (const auto& [m, poly] : states) total = total + poly;
  return total * normalization(diag);
}

LaurentPoly2 jones_state_sum_naive(const LinkDiagram& diag) {
  diag.validate();
  const int c = diag.crossing_count();
  if (c > 22) throw ResourceLimit("naive state sum limited to 22 crossings", static_cast<std::size_t>(c));
  std::map<std::pair<int, int>, BigInt> counts;  // (r, circles) -> #states
  std::vector<int> s(c);
  for (std::size_t v = 0; v < (std::size_t{1} << c); ++v) {
    for (int i = 0; i < c; ++i) s[i] = (v >> i) & 1;
    auto circ = resolution_circles(diag, s);
    int k = circ.empty() ? 0 : *std::max_element(circ.begin(), circ.end()) + 1;
    counts[{__builtin_popcountll(v), k}] += 1;
  }
  LaurentPoly2 total;
  for (const auto& [key, n] : counts) {
    auto [r, k] = key;
    total = total + power(circle_value(), k).shifted(0, r).scaled(r % 2 ? BigInt(-n) : n);
  }
  return total * normalization(diag);
}

ExtInt MinQProfile::at(int h) const {
  auto it = finite.find(h);
  return it == finite.end() ? kInfinity : it->second;
}

MinQProfile min_q_profile(const BigradedTable& table) {
  MinQProfile p;
  for (const auto& [k, g] : table.groups) {
    auto [it, ins] = p.finite.emplace(k.first, k.second);
    if (!ins) it->second = std::min(it->second, k.second);
  }
  return p;
}

}  // namespace torkh
