#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "scan_internal.hpp"

namespace torkh::detail {

namespace {

struct DSU {
  explicit DSU(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
  int find(int x) {
    while (p[x] != x) x = p[x] = p[p[x]];
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) p[std::max(a, b)] = std::min(a, b);
  }
  std::vector<int> p;
};

TermList merge_terms(TermList t) {
  std::sort(t.begin(), t.end(), [](const Term& a, const Term& b) { return a.first < b.first; });
  TermList out;
  for (const auto& [m, c] : t) {
    if (!out.empty() && out.back().first == m)
      out.back().second += c;
    else
      out.push_back({m, c});
    if (out.back().second == 0) out.pop_back();
  }
  return out;
}

// Tensor product of per-class term lists.
TermList product(const TermList& acc, const TermList& next) {
  TermList out;
  out.reserve(acc.size() * next.size());
  for (const auto& [m1, c1] : acc)
    for (const auto& [m2, c2] : next) out.push_back({m1 | m2, c1 * c2});
  return out;
}

}  // namespace

Circles circles_of(const Matching& a, const Matching& b) {
  const int n = static_cast<int>(a.size());
  Circles c;
  c.of_point.assign(n, -1);
  for (int p = 0; p < n; ++p) {
    if (c.of_point[p] >= 0) continue;
    int idx = c.count++;
    int x = p;
    do {
      c.of_point[x] = idx;
      int y = a[x];
      c.of_point[y] = idx;
      x = b[y];
    } while (x != p);
  }
  return c;
}

const std::array<std::vector<std::int64_t>, 2>& Comultiplier::table(int b) {
  if (tables_.empty()) tables_.push_back({});  // index 0 unused
  while (static_cast<int>(tables_.size()) <= b) {
    const int k = static_cast<int>(tables_.size());
    std::array<std::vector<std::int64_t>, 2> t;
    if (k == 1) {
      t[0] = {1, 0};
      t[1] = {0, 1};
    } else {
      const auto& prev = tables_[k - 1];
      for (int u = 0; u < 2; ++u) {
        t[u].assign(std::size_t{1} << k, 0);
        for (std::size_t a = 0; a < prev[u].size(); ++a) {
          std::int64_t c = prev[u][a];
          if (!c) continue;
          const std::size_t last = std::size_t{1} << (k - 2);
          const std::size_t low = a & ~last;
          const std::size_t hi1 = std::size_t{1} << (k - 1);
          if (!(a & last)) {  // Δ(1) = 1⊗X + X⊗1 - h 1⊗1
            t[u][low | hi1] += c;
            t[u][low | last] += c;
            t[u][low] -= f_.h * c;
          } else {  // Δ(X) = X⊗X + t 1⊗1
            t[u][low | last | hi1] += c;
            t[u][low] += f_.t * c;
          }
        }
      }
    }
    tables_.push_back(std::move(t));
  }
  return tables_[b];
}

std::vector<std::int64_t> Comultiplier::expand(int b, const Frobenius::Elem& v) {
  if (b == 0) return {f_.counit(v)};
  const auto& t = table(b);
  std::vector<std::int64_t> out(t[0].size());
  for (std::size_t a = 0; a < out.size(); ++a) out[a] = v[0] * t[0][a] + v[1] * t[1][a];
  return out;
}

CompositionPlan::CompositionPlan(const Matching& m1, const Matching& m2, const Matching& m3) {
  const Circles c12 = circles_of(m1, m2), c23 = circles_of(m2, m3), c13 = circles_of(m1, m3);
  const int n = static_cast<int>(m1.size());
  DSU uf(c12.count + c23.count);
  for (int p = 0; p < n; ++p)
    if (p < m2[p]) uf.unite(c12.of_point[p], c12.count + c23.of_point[p]);
  std::vector<int> cls(c12.count + c23.count, -1);
  for (int i = 0; i < c12.count + c23.count; ++i) {
    int r = uf.find(i);
    if (cls[r] < 0) {
      cls[r] = static_cast<int>(classes_.size());
      classes_.emplace_back();
    }
    cls[i] = cls[r];
  }
  std::vector<int> chi(classes_.size(), 0);
  for (int i = 0; i < c12.count; ++i) {
    classes_[cls[i]].mask12 |= 1u << i;
    ++chi[cls[i]];
  }
  for (int i = 0; i < c23.count; ++i) {
    classes_[cls[c12.count + i]].mask23 |= 1u << i;
    ++chi[cls[c12.count + i]];
  }
  for (int p = 0; p < n; ++p)
    if (p < m2[p]) --chi[cls[c12.of_point[p]]];
  std::vector<char> seen(c13.count, 0);
  for (int p = 0; p < n; ++p) {
    int k = c13.of_point[p];
    if (seen[k]) continue;
    seen[k] = 1;
    classes_[cls[c12.of_point[p]]].out_circles.push_back(k);
  }
  for (std::size_t c = 0; c < classes_.size(); ++c) {
    int b = static_cast<int>(classes_[c].out_circles.size());
    int twice_g = 2 - b - chi[c];
    if (twice_g < 0 || twice_g % 2) throw std::logic_error("composition: bad surface topology");
    classes_[c].genus = twice_g / 2;
  }
}

const TermList& CompositionPlan::compose(std::uint32_t a, std::uint32_t b, const Frobenius& f,
                                         Comultiplier& co) {
  const std::uint64_t key = (static_cast<std::uint64_t>(a) << 32) | b;
  auto it = cache_.find(key);
  if (it != cache_.end()) return it->second;
  TermList acc{{0u, 1}};
  for (const auto& cl : classes_) {
    int dots = __builtin_popcount(a & cl.mask12) + __builtin_popcount(b & cl.mask23);
    auto coeffs = co.expand(static_cast<int>(cl.out_circles.size()), f.dotted_handles(dots, cl.genus));
    TermList part;
    for (std::size_t as = 0; as < coeffs.size(); ++as) {
      if (!coeffs[as]) continue;
      std::uint32_t m = 0;
      for (std::size_t i = 0; i < cl.out_circles.size(); ++i)
        if ((as >> i) & 1) m |= 1u << cl.out_circles[i];
      part.push_back({m, coeffs[as]});
    }
    acc = product(acc, part);
    if (acc.empty()) break;
  }
  return cache_.emplace(key, merge_terms(std::move(acc))).first->second;
}

StepGeometry make_step(const std::vector<int>& boundary, const std::array<int, 4>& edges) {
  StepGeometry g;
  g.old_size = static_cast<int>(boundary.size());
  g.v_edge = boundary;
  g.v_edge.insert(g.v_edge.end(), edges.begin(), edges.end());
  std::vector<char> glued(g.old_size + 4, 0);
  for (int j = 0; j < 4; ++j) {
    auto it = std::find(boundary.begin(), boundary.end(), edges[j]);
    if (it != boundary.end()) {
      int p = static_cast<int>(it - boundary.begin());
      g.glue.push_back({p, g.slot(j)});
      glued[p] = glued[g.slot(j)] = 1;
      continue;
    }
    for (int k = j + 1; k < 4; ++k)
      if (edges[k] == edges[j]) {
        g.glue.push_back({g.slot(j), g.slot(k)});
        glued[g.slot(j)] = glued[g.slot(k)] = 1;
      }
  }
  g.new_pos.assign(g.old_size + 4, -1);
  for (int v = 0; v < g.old_size + 4; ++v)
    if (!glued[v]) {
      g.new_pos[v] = static_cast<int>(g.survivors.size());
      g.survivors.push_back(v);
    }
  return g;
}

const std::array<std::pair<int, int>, 2>& smoothing_arcs(int r) {
  static const std::array<std::pair<int, int>, 2> zero{{{0, 1}, {2, 3}}};
  static const std::array<std::pair<int, int>, 2> one{{{0, 3}, {1, 2}}};
  return r ? one : zero;
}

namespace {

DSU side_classes(const StepGeometry& g, const Matching& m, int r) {
  DSU uf(g.old_size + 4);
  for (int p = 0; p < g.old_size; ++p) uf.unite(p, m[p]);
  for (auto [a, b] : smoothing_arcs(r)) uf.unite(g.slot(a), g.slot(b));
  for (auto [a, b] : g.glue) uf.unite(a, b);
  return uf;
}

}  // namespace

GluedObject glue_object(const StepGeometry& g, const Matching& m, int r) {
  DSU uf = side_classes(g, m, r);
  const int nv = g.old_size + 4;
  std::vector<int> first(nv, -1);  // root -> first surviving point seen
  std::vector<char> has_survivor(nv, 0);
  GluedObject out;
  out.matching.assign(g.survivors.size(), 0);
  for (int np = 0; np < static_cast<int>(g.survivors.size()); ++np) {
    int root = uf.find(g.survivors[np]);
    has_survivor[root] = 1;
    if (first[root] < 0) {
      first[root] = np;
    } else {
      out.matching[np] = static_cast<std::uint8_t>(first[root]);
      out.matching[first[root]] = static_cast<std::uint8_t>(np);
    }
  }
  std::vector<char> loop_seen(nv, 0);
  for (int v = 0; v < nv; ++v) {
    int root = uf.find(v);
    if (!has_survivor[root] && !loop_seen[root]) {
      loop_seen[root] = 1;
      out.loop_rep.push_back(v);
    }
  }
  return out;
}

GluePlan::GluePlan(const StepGeometry& g, const Matching& M, const Matching& N, int r, int r2,
                   const GluedObject& src, const GluedObject& tgt)
    : src_loops_(static_cast<int>(src.loop_rep.size())),
      tgt_loops_(static_cast<int>(tgt.loop_rep.size())) {
  const Circles cmn = circles_of(M, N);
  Matching sr(4), sr2(4);
  for (auto [a, b] : smoothing_arcs(r)) sr[a] = b, sr[b] = a;
  for (auto [a, b] : smoothing_arcs(r2)) sr2[a] = b, sr2[b] = a;
  const Circles cx = circles_of(sr, sr2);
  const int pieces = cmn.count + cx.count;
  auto piece_of = [&](int v) {
    return v < g.old_size ? cmn.of_point[v] : cmn.count + cx.of_point[v - g.old_size];
  };
  DSU uf(pieces);
  for (auto [a, b] : g.glue) uf.unite(piece_of(a), piece_of(b));
  std::vector<int> cls(pieces, -1);
  for (int i = 0; i < pieces; ++i) {
    int root = uf.find(i);
    if (cls[root] < 0) {
      cls[root] = static_cast<int>(classes_.size());
      classes_.emplace_back();
    }
    cls[i] = cls[root];
  }
  std::vector<int> chi(classes_.size(), 0);
  for (int i = 0; i < pieces; ++i) ++chi[cls[i]];
  for (auto [a, b] : g.glue) --chi[cls[piece_of(a)]];
  for (int i = 0; i < cmn.count; ++i) classes_[cls[i]].old_mask |= 1u << i;

  const Circles cnew = circles_of(src.matching, tgt.matching);
  std::vector<char> seen(cnew.count, 0);
  for (int np = 0; np < static_cast<int>(g.survivors.size()); ++np) {
    int k = cnew.of_point[np];
    if (seen[k]) continue;
    seen[k] = 1;
    classes_[cls[piece_of(g.survivors[np])]].bnd.push_back({0, k});
  }
  for (int i = 0; i < src_loops_; ++i) classes_[cls[piece_of(src.loop_rep[i])]].bnd.push_back({1, i});
  for (int i = 0; i < tgt_loops_; ++i) classes_[cls[piece_of(tgt.loop_rep[i])]].bnd.push_back({2, i});
  for (std::size_t c = 0; c < classes_.size(); ++c) {
    int b = static_cast<int>(classes_[c].bnd.size());
    int twice_g = 2 - b - chi[c];
    if (twice_g < 0 || twice_g % 2) throw std::logic_error("gluing: bad surface topology");
    classes_[c].genus = twice_g / 2;
  }
}

TermList GluePlan::evaluate(std::uint32_t mask, const std::vector<std::array<std::int64_t, 2>>& src_funcs,
                            std::uint32_t mu, const Frobenius& f, Comultiplier& co) const {
  TermList acc{{0u, 1}};
  for (const auto& cl : classes_) {
    int dots = __builtin_popcount(mask & cl.old_mask);
    auto coeffs = co.expand(static_cast<int>(cl.bnd.size()), f.dotted_handles(dots, cl.genus));
    TermList part;
    for (std::size_t as = 0; as < coeffs.size(); ++as) {
      std::int64_t c = coeffs[as];
      if (!c) continue;
      std::uint32_t m = 0;
      for (std::size_t i = 0; i < cl.bnd.size() && c; ++i) {
        const int u = (as >> i) & 1;
        const auto& bd = cl.bnd[i];
        if (bd.kind == 0) {
          if (u) m |= 1u << bd.index;
        } else if (bd.kind == 1) {
          c *= src_funcs[bd.index][u];
        } else if (static_cast<int>((mu >> bd.index) & 1) != u) {
          c = 0;
        }
      }
      if (c) part.push_back({m, c});
    }
    acc = product(acc, part);
    if (acc.empty()) break;
  }
  return merge_terms(std::move(acc));
}

}  // namespace torkh::detail
