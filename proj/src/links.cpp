#include "torkh/links.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "torkh/errors.hpp"

namespace torkh {
namespace {

struct UnionFind {
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::vector<int> parent;
};

struct Slot {
  int crossing = -1;
  int slot = -1;
  friend bool operator==(const Slot&, const Slot&) = default;
};

bool slot_incoming(const Crossing& c, int s) {
  if (s == 0) return true;
  if (s == 2) return false;
  return c.sign > 0 ? s == 3 : s == 1;
}

// Renumbers edge ids to 0..E-1 preserving their relative order.
LinkDiagram compact(std::vector<Crossing> crossings, std::vector<int> loops) {
  std::vector<int> ids;
  for (const auto& c : crossings) ids.insert(ids.end(), c.edges.begin(), c.edges.end());
  ids.insert(ids.end(), loops.begin(), loops.end());
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  auto relabel = [&](int e) {
    return static_cast<int>(std::lower_bound(ids.begin(), ids.end(), e) - ids.begin());
  };
  for (auto& c : crossings)
    for (auto& e : c.edges) e = relabel(e);
  for (auto& e : loops) e = relabel(e);
  std::sort(loops.begin(), loops.end());
  return LinkDiagram{std::move(crossings), std::move(loops)};
}

// Given unoriented crossings (under pair {0,2}, over pair {1,3}) and, for every
// edge, the slot where it is incoming, rotates each crossing so slot 0 is the
// incoming under-strand and recomputes signs.
std::vector<Crossing> orient_crossings(const std::vector<Crossing>& crossings,
                                       const std::map<int, Slot>& head) {
  std::vector<Crossing> out;
  out.reserve(crossings.size());
  for (int x = 0; x < static_cast<int>(crossings.size()); ++x) {
    const Crossing& c = crossings[x];
    auto is_head = [&](int s) {
      auto it = head.find(c.edges[s]);
      return it != head.end() && it->second == Slot{x, s};
    };
    int rot = is_head(0) ? 0 : 2;
    int over_in = is_head(1) ? 1 : 3;
    Crossing r;
    for (int s = 0; s < 4; ++s) r.edges[s] = c.edges[(s + rot) % 4];
    int new_over_in = (over_in - rot + 4) % 4;
    r.sign = new_over_in == 3 ? 1 : -1;
    out.push_back(r);
  }
  return out;
}

std::vector<std::vector<Slot>> edge_slots(const std::vector<Crossing>& crossings, int edges) {
  std::vector<std::vector<Slot>> occ(edges);
  for (int x = 0; x < static_cast<int>(crossings.size()); ++x)
    for (int s = 0; s < 4; ++s) occ[crossings[x].edges[s]].push_back({x, s});
  return occ;
}

}  // namespace

void BraidWord::validate() const {
  if (strands < 1) throw InvalidParameter("braid needs at least one strand");
  for (int w : letters)
    if (w == 0 || std::abs(w) >= strands)
      throw InvalidParameter("braid letter " + std::to_string(w) + " invalid on " +
                             std::to_string(strands) + " strands");
}

int LinkDiagram::edge_count() const {
  int mx = -1;
  for (const auto& c : crossings)
    for (int e : c.edges) mx = std::max(mx, e);
  for (int e : free_loops) mx = std::max(mx, e);
  return mx + 1;
}

int LinkDiagram::positive_crossings() const {
  return static_cast<int>(
      std::count_if(crossings.begin(), crossings.end(), [](const Crossing& c) { return c.sign > 0; }));
}

int LinkDiagram::negative_crossings() const { return crossing_count() - positive_crossings(); }

std::vector<int> LinkDiagram::edge_components() const {
  const int n = edge_count();
  UnionFind uf(n);
  for (const auto& c : crossings) {
    uf.unite(c.edges[0], c.edges[2]);
    uf.unite(c.edges[1], c.edges[3]);
  }
  // roots are minimal ids, so numbering roots in increasing order numbers
  // components by their smallest edge
  std::vector<int> label(n, -1), comp(n);
  int next = 0;
  for (int e = 0; e < n; ++e) {
    int r = uf.find(e);
    if (label[r] < 0) label[r] = next++;
    comp[e] = label[r];
  }
  return comp;
}

int LinkDiagram::component_count() const {
  auto comp = edge_components();
  return comp.empty() ? 0 : *std::max_element(comp.begin(), comp.end()) + 1;
}

void LinkDiagram::validate() const {
  const int n = edge_count();
  std::vector<int> in(n, 0), out(n, 0), loop(n, 0);
  for (const auto& c : crossings) {
    if (c.sign != 1 && c.sign != -1) throw InvalidInput("crossing sign must be +1 or -1");
    for (int s = 0; s < 4; ++s) {
      if (c.edges[s] < 0) throw InvalidInput("negative edge id");
      (slot_incoming(c, s) ? in : out)[c.edges[s]]++;
    }
  }
  for (int e : free_loops) {
    if (e < 0) throw InvalidInput("negative edge id");
    loop[e]++;
  }
  for (int e = 0; e < n; ++e) {
    bool ok = (loop[e] == 1 && in[e] == 0 && out[e] == 0) ||
              (loop[e] == 0 && in[e] == 1 && out[e] == 1);
    if (!ok)
      throw InvalidInput("edge " + std::to_string(e) +
                         " must be a free loop or run from one crossing into another");
  }
}

TorusLinkParams TorusLinkParams::make(int n, int m, int p, int q) {
  if (n < 1) throw InvalidParameter("torus link needs n >= 1");
  if (m == 0) throw InvalidParameter("torus link needs m != 0");
  TorusLinkParams t;
  t.n = n;
  t.m = m;
  t.d = std::gcd(n, std::abs(m));
  t.n1 = n / t.d;
  t.m1 = std::abs(m) / t.d;
  if (p < 0 || q < 0 || p + q != t.d)
    throw InvalidParameter("orientation type needs p, q >= 0 with p + q = gcd(n, m) = " +
                           std::to_string(t.d));
  t.p = p;
  t.q = q;
  return t;
}

BraidWord torus_braid(int n, int m) {
  if (n < 1 || m < 0) throw InvalidParameter("torus_braid needs n >= 1 and m >= 0");
  BraidWord b{n, {}};
  b.letters.reserve(static_cast<std::size_t>(m) * (n - 1));
  for (int r = 0; r < m; ++r)
    for (int k = 1; k < n; ++k) b.letters.push_back(k);
  return b;
}

BraidWord dlink_braid(int n, int m, int i) {
  if (n < 1 || m < 0) throw InvalidParameter("dlink_braid needs n >= 1 and m >= 0");
  if (i < 0 || i > n - 1) throw InvalidParameter("dlink_braid needs 0 <= i <= n-1");
  BraidWord b = torus_braid(n, m);
  for (int k = 1; k <= i; ++k) b.letters.push_back(k);
  return b;
}

LinkDiagram braid_closure(const BraidWord& b) {
  b.validate();
  const int n = b.strands;
  // bottom edge of position i has id i; the top edge of position i is
  // identified with it at the end
  std::vector<int> cur(n);
  std::iota(cur.begin(), cur.end(), 0);
  int next = n;
  std::vector<Crossing> crossings;
  crossings.reserve(b.letters.size());
  for (int w : b.letters) {
    int k = std::abs(w);
    int bl = cur[k - 1], br = cur[k];
    int tl = next++, tr = next++;
    Crossing c;
    if (w > 0) {
      c.edges = {br, tr, tl, bl};
      c.sign = 1;
    } else {
      c.edges = {bl, br, tr, tl};
      c.sign = -1;
    }
    crossings.push_back(c);
    cur[k - 1] = tl;
    cur[k] = tr;
  }
  std::map<int, int> close;
  std::vector<int> loops;
  for (int i = 0; i < n; ++i) {
    if (cur[i] == i)
      loops.push_back(i);
    else
      close[cur[i]] = i;
  }
  for (auto& c : crossings)
    for (auto& e : c.edges)
      if (auto it = close.find(e); it != close.end()) e = it->second;
  return compact(std::move(crossings), std::move(loops));
}

LinkDiagram resolve_crossing(const LinkDiagram& diag, int idx, int choice) {
  if (idx < 0 || idx >= diag.crossing_count())
    throw InvalidParameter("resolve_crossing: crossing index out of range");
  if (choice != 0 && choice != 1) throw InvalidParameter("resolve_crossing: choice must be 0 or 1");
  const int n = diag.edge_count();
  const Crossing& gone = diag.crossings[idx];
  UnionFind uf(n);
  if (choice == 0) {
    uf.unite(gone.edges[0], gone.edges[1]);
    uf.unite(gone.edges[2], gone.edges[3]);
  } else {
    uf.unite(gone.edges[0], gone.edges[3]);
    uf.unite(gone.edges[1], gone.edges[2]);
  }
  auto old_occ = edge_slots(diag.crossings, n);

  std::vector<Crossing> rest;
  std::vector<int> old_index;  // remaining crossing -> index in diag
  for (int x = 0; x < diag.crossing_count(); ++x) {
    if (x == idx) continue;
    Crossing c = diag.crossings[x];
    for (auto& e : c.edges) e = uf.find(e);
    rest.push_back(c);
    old_index.push_back(x);
  }
  std::vector<int> new_of_old(diag.crossing_count(), -1);
  for (int k = 0; k < static_cast<int>(old_index.size()); ++k) new_of_old[old_index[k]] = k;

  auto occ = edge_slots(rest, n);
  std::vector<int> loops = diag.free_loops;
  std::vector<char> is_class(n, 0);
  for (int e = 0; e < n; ++e) is_class[uf.find(e)] = 1;
  for (int e = 0; e < n; ++e)
    if (is_class[e] && occ[e].empty() &&
        std::find(loops.begin(), loops.end(), e) == loops.end()) {
      bool was_loop = std::find(diag.free_loops.begin(), diag.free_loops.end(), e) !=
                      diag.free_loops.end();
      if (!was_loop) loops.push_back(e);
    }

  // orient each component following its smallest original edge that still
  // touches a crossing
  std::map<int, Slot> head;
  std::vector<char> done(n, 0);
  for (int start_edge = 0; start_edge < n; ++start_edge) {
    int cls = uf.find(start_edge);
    if (done[cls] || occ[cls].empty()) continue;
    Slot h{-1, -1};
    for (const Slot& o : old_occ[start_edge]) {
      if (o.crossing == idx) continue;
      Slot mapped{new_of_old[o.crossing], o.slot};
      if (slot_incoming(diag.crossings[o.crossing], o.slot))
        h = mapped;
      else
        h = occ[cls][0] == mapped ? occ[cls][1] : occ[cls][0];
      break;
    }
    if (h.crossing < 0) continue;  // only touches the removed crossing; reached later
    int c = cls;
    while (!done[c]) {
      done[c] = 1;
      head[c] = h;
      int out_slot = h.slot ^ 2;
      Slot tail{h.crossing, out_slot};
      int nxt = rest[h.crossing].edges[out_slot];
      const auto& o = occ[nxt];
      h = o[0] == tail ? o[1] : o[0];
      c = nxt;
    }
  }
  return compact(orient_crossings(rest, head), std::move(loops));
}

LinkDiagram e_link_diagram(int n, int m, int i) {
  if (n < 2 || (m != n - 1 && m != n)) throw InvalidParameter("e_link_diagram needs m in {n-1, n}");
  if (i < 0 || i > n - 2) throw InvalidParameter("e_link_diagram needs 0 <= i <= n-2");
  LinkDiagram d = braid_closure(dlink_braid(n, m, i + 1));
  LinkDiagram e = resolve_crossing(d, d.crossing_count() - 1, 1);
  const int target = m == n - 1 ? 2 * n - 3 : 2 * n - 2;
  if (e.negative_crossings() == target) return e;
  const int k = e.component_count();
  for (std::uint32_t mask = 1; mask < (1u << k); ++mask) {
    std::vector<int> rev;
    for (int c = 0; c < k; ++c)
      if (mask >> c & 1u) rev.push_back(c);
    LinkDiagram r = reorient(e, rev);
    if (r.negative_crossings() == target) return r;
  }
  return e;
}

LinkingData components_and_linking(const LinkDiagram& diag) {
  auto comp = diag.edge_components();
  LinkingData out;
  out.count = diag.component_count();
  out.linking.assign(out.count, std::vector<int>(out.count, 0));
  for (const auto& c : diag.crossings) {
    int a = comp[c.edges[0]], b = comp[c.edges[1]];
    if (a == b) continue;
    out.linking[a][b] += c.sign;
    out.linking[b][a] += c.sign;
  }
  for (auto& row : out.linking)
    for (auto& v : row) v /= 2;
  return out;
}

BidegreeShift orientation_shift(const std::vector<std::vector<int>>& linking,
                                const std::vector<int>& reversed) {
  const int k = static_cast<int>(linking.size());
  std::vector<char> in(k, 0);
  for (int r : reversed) {
    if (r < 0 || r >= k) throw InvalidParameter("orientation subset label out of range");
    in[r] = 1;
  }
  int lambda = 0;
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      if (in[i] && !in[j]) lambda += linking[i][j];
  return {2 * lambda, 6 * lambda};
}

LinkDiagram reorient(const LinkDiagram& diag, const std::vector<int>& reversed) {
  auto comp = diag.edge_components();
  const int k = diag.component_count();
  std::vector<char> rev(k, 0);
  for (int r : reversed) {
    if (r < 0 || r >= k) throw InvalidParameter("orientation subset label out of range");
    rev[r] = 1;
  }
  LinkDiagram out = diag;
  for (auto& c : out.crossings) {
    bool under = rev[comp[c.edges[0]]];
    bool over = rev[comp[c.edges[1]]];
    if (under) std::rotate(c.edges.begin(), c.edges.begin() + 2, c.edges.end());
    if (under != over) c.sign = -c.sign;
  }
  return out;
}

LinkDiagram mirror(const LinkDiagram& diag) {
  LinkDiagram out = diag;
  for (auto& c : out.crossings) {
    const auto e = c.edges;
    if (c.sign > 0)
      c.edges = {e[3], e[0], e[1], e[2]};
    else
      c.edges = {e[1], e[2], e[3], e[0]};
    c.sign = -c.sign;
  }
  return out;
}

LinkDiagram canonical_relabel(const LinkDiagram& diag) {
  std::map<int, int> fresh;
  auto id = [&](int e) {
    auto [it, inserted] = fresh.emplace(e, static_cast<int>(fresh.size()));
    return it->second;
  };
  LinkDiagram out;
  for (const auto& c : diag.crossings) {
    Crossing r = c;
    for (auto& e : r.edges) e = id(e);
    out.crossings.push_back(r);
  }
  for (int e : diag.free_loops) out.free_loops.push_back(id(e));
  std::sort(out.free_loops.begin(), out.free_loops.end());
  return out;
}

std::string canonical_hash(const LinkDiagram& diag) {
  LinkDiagram c = canonical_relabel(diag);
  std::ostringstream os;
  os << "torkh-pd-v1;";
  for (const auto& x : c.crossings)
    os << x.edges[0] << ',' << x.edges[1] << ',' << x.edges[2] << ',' << x.edges[3]
       << (x.sign > 0 ? '+' : '-') << ';';
  os << "loops=" << c.free_loops.size();
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char ch : os.str()) {
    h ^= ch;
    h *= 0x100000001b3ull;
  }
  static const char* hex = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i, h >>= 4) out[i] = hex[h & 15];
  return out;
}

namespace {

std::vector<int> parse_ints(const std::string& s, char sep) {
  std::vector<int> out;
  if (s.empty()) return out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, sep)) {
    try {
      std::size_t used = 0;
      int v = std::stoi(tok, &used);
      while (used < tok.size() && std::isspace(static_cast<unsigned char>(tok[used]))) ++used;
      if (used != tok.size()) throw InvalidInput("bad integer '" + tok + "'");
      out.push_back(v);
    } catch (const std::logic_error&) {
      throw InvalidInput("bad integer '" + tok + "'");
    }
  }
  return out;
}

LinkDiagram parse_pd(const std::string& body) {
  // [[a,b,c,d;s],...]
  std::string s;
  for (char ch : body)
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  // accept a unicode minus sign
  for (std::size_t pos; (pos = s.find("\xE2\x88\x92")) != std::string::npos;) s.replace(pos, 3, "-");
  if (s.size() < 2 || s.front() != '[' || s.back() != ']') throw InvalidInput("pd code must be [[...],...]");
  s = s.substr(1, s.size() - 2);
  std::vector<Crossing> crossings;
  std::size_t pos = 0;
  while (pos < s.size()) {
    if (s[pos] == ',') {
      ++pos;
      continue;
    }
    if (s[pos] != '[') throw InvalidInput("pd code: expected '['");
    auto close = s.find(']', pos);
    if (close == std::string::npos) throw InvalidInput("pd code: unterminated crossing");
    std::string item = s.substr(pos + 1, close - pos - 1);
    auto semi = item.find(';');
    if (semi == std::string::npos) throw InvalidInput("pd code: crossing needs ';sign'");
    auto e = parse_ints(item.substr(0, semi), ',');
    std::string sg = item.substr(semi + 1);
    if (e.size() != 4 || (sg != "+" && sg != "-")) throw InvalidInput("pd code: bad crossing '" + item + "'");
    Crossing c;
    std::copy(e.begin(), e.end(), c.edges.begin());
    c.sign = sg == "+" ? 1 : -1;
    crossings.push_back(c);
    pos = close + 1;
  }
  for (const auto& c : crossings)
    for (int e : c.edges)
      if (e < 0) throw InvalidInput("pd code: negative edge id");
  LinkDiagram d = compact(std::move(crossings), {});
  d.validate();
  return d;
}

}  // namespace

LinkSpec parse_link_spec(const std::string& text) {
  auto colon = text.find(':');
  if (colon == std::string::npos) throw InvalidInput("link spec needs a 'kind:' prefix: " + text);
  std::string kind = text.substr(0, colon), body = text.substr(colon + 1);
  LinkSpec out;
  out.text = text;
  if (kind == "braid") {
    auto c2 = body.find(':');
    if (c2 == std::string::npos) throw InvalidInput("braid spec is braid:<n>:<letters>");
    auto n = parse_ints(body.substr(0, c2), ',');
    if (n.size() != 1) throw InvalidInput("braid spec is braid:<n>:<letters>");
    BraidWord b{n[0], parse_ints(body.substr(c2 + 1), ',')};
    out.diagram = braid_closure(b);
    out.braid = b;
  } else if (kind == "torus") {
    auto v = parse_ints(body, ',');
    if (v.size() != 2) throw InvalidInput("torus spec is torus:<n>,<m>");
    BraidWord b = torus_braid(v[0], std::abs(v[1]));
    if (v[1] < 0)
      for (auto& w : b.letters) w = -w;
    out.diagram = braid_closure(b);
    out.braid = b;
  } else if (kind == "dlink") {
    auto v = parse_ints(body, ',');
    if (v.size() != 3) throw InvalidInput("dlink spec is dlink:<n>,<m>,<i>");
    BraidWord b = dlink_braid(v[0], v[1], v[2]);
    out.diagram = braid_closure(b);
    out.braid = b;
  } else if (kind == "elink") {
    auto v = parse_ints(body, ',');
    if (v.size() != 3) throw InvalidInput("elink spec is elink:<n>,<m>,<i>");
    out.diagram = e_link_diagram(v[0], v[1], v[2]);
  } else if (kind == "pd") {
    out.diagram = parse_pd(body);
  } else {
    throw InvalidInput("unknown link kind '" + kind + "'");
  }
  return out;
}

std::vector<int> parse_orientation_subset(const std::string& text) {
  std::string body = text;
  if (body.rfind("rev=", 0) == 0) body = body.substr(4);
  std::vector<int> out;
  for (int v : parse_ints(body, ',')) {
    if (v < 1) throw InvalidInput("component labels are 1-based");
    out.push_back(v - 1);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::string to_pd_string(const LinkDiagram& diag) {
  std::ostringstream os;
  os << "pd:[";
  for (std::size_t i = 0; i < diag.crossings.size(); ++i) {
    const auto& c = diag.crossings[i];
    if (i) os << ',';
    os << '[' << c.edges[0] << ',' << c.edges[1] << ',' << c.edges[2] << ',' << c.edges[3] << ';'
       << (c.sign > 0 ? '+' : '-') << ']';
  }
  os << ']';
  return os.str();
}

}  // namespace torkh
