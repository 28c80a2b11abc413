#include "torkh/cube.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

#include "torkh/errors.hpp"

namespace torkh {

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

struct Vertex {
  std::vector<int> circ;  // edge -> circle
  int circles = 0;
  int offset = 0;  // index of its first generator
};

}  // namespace

std::vector<int> resolution_circles(const LinkDiagram& diag, const std::vector<int>& smoothing) {
  if (static_cast<int>(smoothing.size()) != diag.crossing_count())
    throw InvalidParameter("smoothing has wrong length");
  const int n = diag.edge_count();
  DSU uf(n);
  for (int i = 0; i < diag.crossing_count(); ++i) {
    const auto& e = diag.crossings[i].edges;
    if (smoothing[i] == 0) {
      uf.unite(e[0], e[1]);
      uf.unite(e[2], e[3]);
    } else {
      uf.unite(e[0], e[3]);
      uf.unite(e[1], e[2]);
    }
  }
  std::vector<int> label(n, -1), out(n);
  int next = 0;
  for (int e = 0; e < n; ++e) {
    int r = uf.find(e);
    if (label[r] < 0) label[r] = next++;
    out[e] = label[r];
  }
  return out;
}

std::vector<int> oriented_smoothing(const LinkDiagram& diag) {
  std::vector<int> s;
  for (const auto& c : diag.crossings) s.push_back(c.sign > 0 ? 0 : 1);
  return s;
}

VertexChain canonical_vertex_chain(const LinkDiagram& diag, Theory theory) {
  if (theory == Theory::Khovanov) throw InvalidParameter("canonical generators need a deformed theory");
  VertexChain v;
  v.smoothing = oriented_smoothing(diag);
  auto circ = resolution_circles(diag, v.smoothing);
  int k = circ.empty() ? 0 : *std::max_element(circ.begin(), circ.end()) + 1;
  std::vector<std::vector<int>> adj(k);
  for (const auto& c : diag.crossings) {
    int a = circ[c.edges[0]], b = circ[c.edges[2]];
    if (a == b) throw InvalidInput("Seifert circle meets itself at a crossing");
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::vector<int> colour(k, -1);
  for (int s = 0; s < k; ++s) {
    if (colour[s] >= 0) continue;
    colour[s] = 0;
    std::queue<int> bfs;
    bfs.push(s);
    while (!bfs.empty()) {
      int x = bfs.front();
      bfs.pop();
      for (int y : adj[x]) {
        if (colour[y] < 0) {
          colour[y] = 1 - colour[x];
          bfs.push(y);
        } else if (colour[y] == colour[x]) {
          throw InvalidInput("Seifert graph is not bipartite; diagram is not planar");
        }
      }
    }
  }
  const std::array<std::int64_t, 2> a = theory == Theory::Lee ? std::array<std::int64_t, 2>{1, 1}
                                                              : std::array<std::int64_t, 2>{0, 1};
  const std::array<std::int64_t, 2> b = theory == Theory::Lee ? std::array<std::int64_t, 2>{-1, 1}
                                                              : std::array<std::int64_t, 2>{1, -1};
  for (int c = 0; c < k; ++c) v.labels.push_back(colour[c] == 0 ? a : b);
  return v;
}

namespace {

std::vector<Vertex> build_vertices(const LinkDiagram& diag) {
  const int c = diag.crossing_count();
  std::vector<Vertex> verts(std::size_t{1} << c);
  int offset = 0;
  for (std::size_t v = 0; v < verts.size(); ++v) {
    std::vector<int> s(c);
    for (int i = 0; i < c; ++i) s[i] = (v >> i) & 1;
    verts[v].circ = resolution_circles(diag, s);
    verts[v].circles =
        verts[v].circ.empty() ? 0 : *std::max_element(verts[v].circ.begin(), verts[v].circ.end()) + 1;
    verts[v].offset = offset;
    if (verts[v].circles > 30) throw ResourceLimit("too many circles in a resolution", verts[v].circles);
    offset += 1 << verts[v].circles;
  }
  return verts;
}

}  // namespace

BigradedComplex khovanov_cube(const LinkDiagram& diag, Theory theory, const CubeOptions& opts) {
  diag.validate();
  const int c = diag.crossing_count();
  if (c > opts.max_crossings)
    throw ResourceLimit("naive cube limited to " + std::to_string(opts.max_crossings) +
                            " crossings; use scan_complex for larger diagrams",
                        static_cast<std::size_t>(c));
  const Frobenius F = Frobenius::of(theory);
  const int np = diag.positive_crossings(), nm = diag.negative_crossings();
  auto verts = build_vertices(diag);

  BigradedComplex cx;
  cx.deformation_degree = deformation_degree(theory);
  for (std::size_t v = 0; v < verts.size(); ++v) {
    int height = __builtin_popcountll(v);
    for (int mask = 0; mask < (1 << verts[v].circles); ++mask) {
      int xs = __builtin_popcount(mask);
      int qdeg = (verts[v].circles - 2 * xs) + height + np - 2 * nm;
      cx.add_generator(height - nm, qdeg);
    }
  }

  for (std::size_t v = 0; v < verts.size(); ++v) {
    for (int i = 0; i < c; ++i) {
      if ((v >> i) & 1) continue;
      const std::size_t w = v | (std::size_t{1} << i);
      const int sign = (__builtin_popcountll(v & ((std::size_t{1} << i) - 1)) % 2) ? -1 : 1;
      const auto& e = diag.crossings[i].edges;
      const Vertex& V = verts[v];
      const Vertex& W = verts[w];
      // circle correspondence away from crossing i
      std::vector<int> to_w(V.circles, -1);
      for (std::size_t ed = 0; ed < V.circ.size(); ++ed) to_w[V.circ[ed]] = W.circ[ed];
      const int a = V.circ[e[0]], b = V.circ[e[2]];
      for (int mask = 0; mask < (1 << V.circles); ++mask) {
        auto& row = cx.d[V.offset + mask];
        auto bit = [&](int circle) { return (mask >> circle) & 1; };
        int base = 0;  // labels of circles untouched by the crossing
        for (int k = 0; k < V.circles; ++k)
          if (k != a && k != b && bit(k)) base |= 1 << to_w[k];
        if (a != b) {
          // merge
          int target = W.circ[e[0]];
          Frobenius::Elem x{bit(a) ? 0 : 1, bit(a) ? 1 : 0};
          Frobenius::Elem y{bit(b) ? 0 : 1, bit(b) ? 1 : 0};
          auto m = F.mul(x, y);
          if (m[0]) row.push_back({W.offset + base, sign * m[0]});
          if (m[1]) row.push_back({W.offset + (base | 1 << target), sign * m[1]});
        } else {
          // split into the circles through e0 and e2
          int c1 = W.circ[e[0]], c2 = W.circ[e[2]];
          auto put = [&](int l1, int l2, std::int64_t coef) {
            if (coef == 0) return;
            int m = base | (l1 << c1) | (l2 << c2);
            row.push_back({W.offset + m, sign * coef});
          };
          if (!bit(a)) {
            put(0, 1, 1);
            put(1, 0, 1);
            put(0, 0, -F.h);
          } else {
            put(1, 1, 1);
            put(0, 0, F.t);
          }
        }
        std::sort(row.begin(), row.end(), [](const auto& p, const auto& r) { return p.first < r.first; });
      }
    }
  }
  return cx;
}

Chain cube_chain(const LinkDiagram& diag, const std::vector<VertexChain>& parts) {
  const int c = diag.crossing_count();
  // offsets of all vertices up to the largest one referenced
  Chain out;
  for (const auto& part : parts) {
    if (static_cast<int>(part.smoothing.size()) != c) throw InvalidParameter("smoothing has wrong length");
    std::size_t vid = 0;
    for (int i = 0; i < c; ++i) vid |= static_cast<std::size_t>(part.smoothing[i] & 1) << i;
    std::size_t offset = 0;
    for (std::size_t v = 0; v < vid; ++v) {
      std::vector<int> s(c);
      for (int i = 0; i < c; ++i) s[i] = (v >> i) & 1;
      auto circ = resolution_circles(diag, s);
      int k = circ.empty() ? 0 : *std::max_element(circ.begin(), circ.end()) + 1;
      offset += std::size_t{1} << k;
    }
    auto circ = resolution_circles(diag, part.smoothing);
    int k = circ.empty() ? 0 : *std::max_element(circ.begin(), circ.end()) + 1;
    if (static_cast<int>(part.labels.size()) != k) throw InvalidParameter("label count != circle count");
    for (int mask = 0; mask < (1 << k); ++mask) {
      BigInt coef = part.coeff;
      for (int j = 0; j < k && coef != 0; ++j) coef *= part.labels[j][(mask >> j) & 1];
      if (coef == 0) continue;
      auto& slot = out[static_cast<int>(offset + mask)];
      slot += coef;
      if (slot == 0) out.erase(static_cast<int>(offset + mask));
    }
  }
  return out;
}

}  // namespace torkh
