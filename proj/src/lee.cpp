#include "torkh/lee.hpp"

#include <algorithm>
#include <set>

#include "torkh/errors.hpp"
#include "torkh/homology.hpp"

namespace torkh {

namespace {

using Rows = std::vector<std::map<int, BigInt>>;

void require_field(const CoefficientRing& f) {
  if (!f.is_field()) throw InvalidParameter("filtered homology needs a field, got " + f.name());
}

Theory theory_for(const CoefficientRing& f) {
  return f.characteristic() == 2 ? Theory::BarNatan : Theory::Lee;
}

// Rows of d leaving the generators `src`, keeping only columns accepted by `keep`.
template <class Keep>
Rows rows_of(const BigradedComplex& cx, const std::vector<int>& src, Keep keep) {
  Rows rows;
  rows.reserve(src.size());
  for (int x : src) {
    std::map<int, BigInt> r;
    for (const auto& [y, c] : cx.d[x])
      if (keep(y)) r.emplace(y, c);
    rows.push_back(std::move(r));
  }
  return rows;
}

std::map<int, std::vector<int>> by_degree(const BigradedComplex& cx) {
  std::map<int, std::vector<int>> out;
  for (int x = 0; x < cx.size(); ++x) out[cx.gens[x].h].push_back(x);
  return out;
}

Chain boundary(const BigradedComplex& cx, const Chain& z) {
  Chain out;
  for (const auto& [x, c] : z)
    for (const auto& [y, v] : cx.d[x]) {
      auto& slot = out[y];
      slot += c * v;
      if (slot == 0) out.erase(y);
    }
  return out;
}

bool zero_over(const Chain& c, const CoefficientRing& f) {
  return c.empty() || sparse_rank({std::map<int, BigInt>(c.begin(), c.end())}, f) == 0;
}

BigradedComplex deformed(const LinkDiagram& diag, Theory th, const CoefficientRing& field,
                         const ScanOptions& opts) {
  return scan_complex(diag, th, field, {}, opts).complex;
}

}  // namespace

std::int64_t FiltrationTable::dim(int h) const {
  auto it = levels.find(h);
  return it == levels.end() || it->second.empty() ? 0 : it->second.begin()->second;
}

std::int64_t FiltrationTable::dim_filtered(int h, int j) const {
  auto it = levels.find(h);
  if (it == levels.end()) return 0;
  auto lv = it->second.lower_bound(j);
  return lv == it->second.end() ? 0 : lv->second;
}

BigradedComplex lee_complex(const LinkDiagram& diag, const CoefficientRing& field, const ScanOptions& opts) {
  require_field(field);
  if (field.characteristic() == 2) throw InvalidParameter("Lee theory needs characteristic != 2; use Bar-Natan");
  return deformed(diag, Theory::Lee, field, opts);
}

BigradedComplex barnatan_complex(const LinkDiagram& diag, const CoefficientRing& field,
                                 const ScanOptions& opts) {
  require_field(field);
  if (field.characteristic() != 2) throw InvalidParameter("Bar-Natan deformation is used in characteristic 2 only");
  return deformed(diag, Theory::BarNatan, field, opts);
}

CanonicalCycle canonical_cycle(const LinkDiagram& diag, const std::vector<int>& orientation, Theory theory) {
  CanonicalCycle cc;
  cc.orientation = orientation;
  std::sort(cc.orientation.begin(), cc.orientation.end());
  cc.oriented = reorient(diag, cc.orientation);
  cc.shift = orientation_shift(components_and_linking(diag).linking, cc.orientation);
  cc.chain = canonical_vertex_chain(cc.oriented, theory);
  return cc;
}

FiltrationTable filtration_table(const BigradedComplex& cx, const CoefficientRing& field) {
  require_field(field);
  FiltrationTable ft;
  ft.field = field;
  auto deg = by_degree(cx);
  auto any = [](int) { return true; };
  for (const auto& [h, src] : deg) {
    std::set<int> qs;
    for (int x : src) qs.insert(cx.gens[x].q);
    const std::vector<int> none;
    const auto& prev = deg.count(h - 1) ? deg.at(h - 1) : none;
    const std::int64_t rank_in = sparse_rank(rows_of(cx, prev, any), field);
    auto& lv = ft.levels[h];
    for (int j : qs) {
      std::vector<int> top;
      for (int x : src)
        if (cx.gens[x].q >= j) top.push_back(x);
      const std::int64_t cycles = static_cast<std::int64_t>(top.size()) - sparse_rank(rows_of(cx, top, any), field);
      const std::int64_t low_part =
          sparse_rank(rows_of(cx, prev, [&](int y) { return cx.gens[y].q < j; }), field);
      const std::int64_t v = cycles - (rank_in - low_part);
      lv[j] = v;
    }
    // drop levels above the last jump so tables compare by content
    for (auto it = lv.begin(); it != lv.end();) it = it->second == 0 ? lv.erase(it) : std::next(it);
    if (lv.empty()) ft.levels.erase(h);
  }
  return ft;
}

ExtInt class_filtration_degree(const BigradedComplex& cx, const CoefficientRing& field, const Chain& cycle) {
  require_field(field);
  Chain z;
  for (const auto& [x, c] : cycle)
    if (c != 0) z.emplace(x, c);
  if (zero_over(boundary(cx, z), field) == false) throw InvalidInput("chain is not a cycle");
  if (zero_over(z, field)) return kInfinity;
  const int h = cx.gens[z.begin()->first].h;
  for (const auto& [x, c] : z)
    if (cx.gens[x].h != h) throw InvalidInput("chain is not homogeneous in h");
  std::vector<int> prev;
  std::set<int> qs;
  for (int x = 0; x < cx.size(); ++x) {
    if (cx.gens[x].h == h - 1) prev.push_back(x);
    if (cx.gens[x].h == h) qs.insert(cx.gens[x].q);
  }
  // z lies in F_j + B iff its part below j lies in the projection of B below j
  auto in_span_below = [&](ExtInt j) {
    auto below = [&](int y) { return j == kInfinity || cx.gens[y].q < j; };
    Rows rows = rows_of(cx, prev, below);
    const std::int64_t r = sparse_rank(rows, field);
    std::map<int, BigInt> zr;
    for (const auto& [x, c] : z)
      if (below(x)) zr.emplace(x, c);
    rows.push_back(std::move(zr));
    return sparse_rank(rows, field) == r;
  };
  if (in_span_below(kInfinity)) return kInfinity;
  for (auto it = qs.rbegin(); it != qs.rend(); ++it)
    if (in_span_below(*it)) return *it;
  return *qs.begin();
}

SInvariant s_invariant(const LinkDiagram& diag, const std::vector<int>& orientation, const CoefficientRing& field,
                       const ScanOptions& opts) {
  require_field(field);
  const Theory th = theory_for(field);
  auto cc = canonical_cycle(diag, orientation, th);
  auto res = scan_complex(cc.oriented, th, field, {{cc.chain}}, opts);
  ExtInt deg = class_filtration_degree(res.complex, field, res.tracked.at(0));
  if (deg == kInfinity) throw InvalidInput("canonical class vanished in homology");
  return {static_cast<int>(deg) + 1, th == Theory::BarNatan};
}

BigradedTable gr_dimensions(const FiltrationTable& ft) {
  BigradedTable t;
  t.ring = ft.field;
  for (const auto& [h, lv] : ft.levels)
    for (auto it = lv.begin(); it != lv.end(); ++it) {
      auto nx = std::next(it);
      const std::int64_t g = it->second - (nx == lv.end() ? 0 : nx->second);
      if (g > 0) t.set(h, it->first, {g, {}});
    }
  return t;
}

FiltrationTable lee_filtration(const LinkDiagram& diag, const CoefficientRing& field, const ScanOptions& opts) {
  require_field(field);
  return filtration_table(deformed(diag, theory_for(field), field, opts), field);
}

}  // namespace torkh
