#include "torkh/homology.hpp"

#include <algorithm>
#include <numeric>
#include <tuple>
#include <unordered_map>
#include <unordered_set>

#include "torkh/errors.hpp"

namespace torkh {

namespace {

template <class R>
typename R::value_type convert(const R& ring, const BigInt& v) {
  using V = typename R::value_type;
  if constexpr (std::is_same_v<R, PrimeField>) {
    BigInt r = v % ring.p;
    if (r < 0) r += ring.p;
    return static_cast<std::int64_t>(r);
  } else if constexpr (std::is_same_v<V, std::int64_t>) {
    if (v > INT64_MAX || v < INT64_MIN) throw CoefficientOverflow();
    return static_cast<std::int64_t>(v);
  } else {
    return V(v);
  }
}

template <class V>
BigInt to_big(const V& v) {
  if constexpr (std::is_same_v<V, BigRational>)
    return boost::multiprecision::numerator(v);
  else
    return BigInt(v);
}

template <class R>
class ScalarReducer {
 public:
  using V = typename R::value_type;

  ScalarReducer(const R& ring, const BigradedComplex& cx)
      : ring_(ring), filtered_(cx.filtered()), gens_(cx.gens) {
    const int n = cx.size();
    out_.resize(n);
    in_.resize(n);
    alive_.assign(n, 1);
    for (int x = 0; x < n; ++x)
      for (const auto& [y, c] : cx.d[x]) {
        V v = convert(ring_, c);
        if (ring_.is_zero(v)) continue;
        out_[x][y] = v;
        in_[y].insert(x);
      }
  }

  void run(std::vector<std::unordered_map<int, V>>& chains) {
    for (;;) {
      std::vector<std::tuple<std::int64_t, int, int>> cand;
      for (int x = 0; x < static_cast<int>(out_.size()); ++x) {
        if (!alive_[x]) continue;
        for (const auto& [y, c] : out_[x])
          if (pivotable(x, y, c))
            cand.emplace_back(cost(x, y), x, y);
      }
      if (cand.empty()) break;
      std::sort(cand.begin(), cand.end());
      for (const auto& [c0, x, y] : cand) {
        if (!alive_[x] || !alive_[y]) continue;
        auto it = out_[x].find(y);
        if (it == out_[x].end() || !pivotable(x, y, it->second)) continue;
        cancel(x, y, chains);
      }
    }
  }

  BigradedComplex result(const CoefficientRing& base, int deformation,
                         std::vector<std::unordered_map<int, V>>& chains,
                         std::vector<Chain>* tracked) const {
    BigradedComplex out;
    out.base = base;
    out.deformation_degree = deformation;
    std::vector<int> idx(gens_.size(), -1);
    for (int x = 0; x < static_cast<int>(gens_.size()); ++x)
      if (alive_[x]) idx[x] = out.add_generator(gens_[x].h, gens_[x].q);
    for (int x = 0; x < static_cast<int>(gens_.size()); ++x) {
      if (!alive_[x]) continue;
      auto& row = out.d[idx[x]];
      for (const auto& [y, c] : out_[x]) row.emplace_back(idx[y], to_big(c));
      std::sort(row.begin(), row.end(),
                [](const auto& a, const auto& b) { return a.first < b.first; });
    }
    if (tracked) {
      for (std::size_t k = 0; k < chains.size(); ++k) {
        Chain c;
        for (const auto& [x, v] : chains[k])
          if (!ring_.is_zero(v)) c[idx[x]] = to_big(v);
        (*tracked)[k] = std::move(c);
      }
    }
    return out;
  }

 private:
  bool pivotable(int x, int y, const V& c) const {
    if (!ring_.is_unit(c)) return false;
    return !filtered_ || gens_[x].q == gens_[y].q;
  }
  std::int64_t cost(int x, int y) const {
    return static_cast<std::int64_t>(in_[y].size() - 1) *
           static_cast<std::int64_t>(out_[x].size() - 1);
  }

  void cancel(int x, int y, std::vector<std::unordered_map<int, V>>& chains) {
    const V uinv = ring_.inverse(out_[x].at(y));
    std::vector<std::pair<int, V>> gamma;  // x -> z
    for (const auto& [z, c] : out_[x])
      if (z != y) gamma.emplace_back(z, c);
    std::vector<std::pair<int, V>> delta;  // w -> y
    for (int w : in_[y])
      if (w != x) delta.emplace_back(w, out_[w].at(y));

    for (const auto& [w, dw] : delta) {
      const V a = ring_.mul(uinv, dw);
      auto& row = out_[w];
      for (const auto& [z, gz] : gamma) {
        V term = ring_.mul(gz, a);
        auto [it, ins] = row.emplace(z, ring_.zero());
        it->second = ring_.sub(it->second, term);
        if (ring_.is_zero(it->second)) {
          row.erase(it);
          in_[z].erase(w);
        } else if (ins) {
          in_[z].insert(w);
        }
      }
    }
    for (auto& ch : chains) {
      auto it = ch.find(y);
      if (it != ch.end()) {
        const V a = ring_.mul(uinv, it->second);
        ch.erase(it);
        for (const auto& [z, gz] : gamma) {
          auto [jt, ins] = ch.emplace(z, ring_.zero());
          jt->second = ring_.sub(jt->second, ring_.mul(gz, a));
          if (ring_.is_zero(jt->second)) ch.erase(jt);
        }
      }
      ch.erase(x);
    }
    drop(x);
    drop(y);
  }

  void drop(int v) {
    for (int w : in_[v]) out_[w].erase(v);
    for (const auto& [z, c] : out_[v]) in_[z].erase(v);
    in_[v].clear();
    out_[v].clear();
    alive_[v] = 0;
  }

  R ring_;
  bool filtered_;
  std::vector<Generator> gens_;
  std::vector<std::unordered_map<int, V>> out_;
  std::vector<std::unordered_set<int>> in_;
  std::vector<char> alive_;
};

template <class R>
BigradedComplex reduce_with(const R& ring, const BigradedComplex& cx, const CoefficientRing& base,
                            std::vector<Chain>* tracked) {
  using V = typename R::value_type;
  ScalarReducer<R> red(ring, cx);
  std::vector<std::unordered_map<int, V>> chains;
  if (tracked)
    for (const auto& c : *tracked) {
      std::unordered_map<int, V> m;
      for (const auto& [x, v] : c) {
        V cv = convert(ring, v);
        if (!ring.is_zero(cv)) m[x] = cv;
      }
      chains.push_back(std::move(m));
    }
  red.run(chains);
  return red.result(base, cx.deformation_degree, chains, tracked);
}

template <class R>
std::int64_t sparse_rank_impl(const R& ring, const std::vector<std::map<int, BigInt>>& rows) {
  using V = typename R::value_type;
  std::map<int, std::map<int, V>> pivots;  // leading column -> reduced row
  for (const auto& r : rows) {
    std::map<int, V> row;
    for (const auto& [c, v] : r) {
      V cv = convert(ring, v);
      if (!ring.is_zero(cv)) row[c] = cv;
    }
    while (!row.empty()) {
      auto lead = row.begin();
      auto pit = pivots.find(lead->first);
      if (pit == pivots.end()) break;
      const auto& prow = pit->second;
      V factor = ring.mul(lead->second, ring.inverse(prow.begin()->second));
      for (const auto& [c, v] : prow) {
        auto [it, ins] = row.emplace(c, ring.zero());
        it->second = ring.sub(it->second, ring.mul(factor, v));
        if (ring.is_zero(it->second)) row.erase(it);
      }
    }
    if (!row.empty()) pivots.emplace(row.begin()->first, std::move(row));
  }
  return static_cast<std::int64_t>(pivots.size());
}

// Generators of a reduced complex grouped by bidegree.
std::map<Bidegree, std::vector<int>> by_bidegree(const BigradedComplex& cx) {
  std::map<Bidegree, std::vector<int>> out;
  for (int x = 0; x < cx.size(); ++x) out[{cx.gens[x].h, cx.gens[x].q}].push_back(x);
  return out;
}

// Rows of d restricted to (h,q) -> (h+1,q), columns renumbered locally.
std::vector<std::map<int, BigInt>> block_rows(const BigradedComplex& cx, const std::vector<int>& src,
                                              const std::vector<int>& dst) {
  std::unordered_map<int, int> col;
  for (int i = 0; i < static_cast<int>(dst.size()); ++i) col[dst[i]] = i;
  std::vector<std::map<int, BigInt>> rows;
  for (int x : src) {
    std::map<int, BigInt> r;
    for (const auto& [y, c] : cx.d[x])
      if (auto it = col.find(y); it != col.end() && c != 0) r[it->second] = c;
    rows.push_back(std::move(r));
  }
  return rows;
}

BigradedTable field_homology(const BigradedComplex& red, const CoefficientRing& ring) {
  auto groups = by_bidegree(red);
  std::map<Bidegree, std::int64_t> rank_out;
  for (const auto& [k, src] : groups) {
    auto it = groups.find({k.first + 1, k.second});
    if (it == groups.end()) continue;
    rank_out[k] = sparse_rank(block_rows(red, src, it->second), ring);
  }
  BigradedTable t;
  t.ring = ring;
  for (const auto& [k, src] : groups) {
    std::int64_t dim = static_cast<std::int64_t>(src.size());
    if (auto it = rank_out.find(k); it != rank_out.end()) dim -= it->second;
    if (auto it = rank_out.find({k.first - 1, k.second}); it != rank_out.end()) dim -= it->second;
    t.set(k.first, k.second, {dim, {}});
  }
  return t;
}

IntMatrix dense_block(const BigradedComplex& cx, const std::vector<int>& src,
                      const std::vector<int>& dst) {
  auto rows = block_rows(cx, src, dst);
  IntMatrix m(rows.size(), std::vector<BigInt>(dst.size()));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (const auto& [c, v] : rows[i]) m[i][c] = v;
  return m;
}

BigradedTable integral_homology(const BigradedComplex& red, const HomologyOptions& opts) {
  auto groups = by_bidegree(red);
  std::map<Bidegree, std::vector<BigInt>> factors;  // of d leaving (h,q)
  for (const auto& [k, src] : groups) {
    auto it = groups.find({k.first + 1, k.second});
    if (it == groups.end()) continue;
    factors[k] = smith_invariant_factors(dense_block(red, src, it->second), opts.bit_bound);
  }
  BigradedTable t;
  t.ring = CoefficientRing::integers();
  for (const auto& [k, src] : groups) {
    HomologyGroup g;
    g.free = static_cast<std::int64_t>(src.size());
    if (auto it = factors.find(k); it != factors.end()) g.free -= it->second.size();
    if (auto it = factors.find({k.first - 1, k.second}); it != factors.end()) {
      g.free -= it->second.size();
      for (const auto& f : it->second)
        if (f > 1) g.torsion.push_back(f);
    }
    t.set(k.first, k.second, std::move(g));
  }
  return t;
}

}  // namespace

BigradedComplex reduce_complex(const BigradedComplex& cx, const CoefficientRing& ring,
                               std::vector<Chain>* tracked) {
  if (cx.base.kind == RingKind::PrimeField && ring != cx.base)
    throw InvalidInput("complex is only defined over " + cx.base.name());
  if (ring.kind == RingKind::PrimeField)
    return reduce_with(PrimeField{ring.p}, cx, ring, tracked);
  try {
    return reduce_with(CheckedInt64Ring{}, cx, CoefficientRing::integers(), tracked);
  } catch (const CoefficientOverflow&) {
    return reduce_with(IntegerRing{}, cx, CoefficientRing::integers(), tracked);
  }
}

BigradedTable homology(const BigradedComplex& cx, const CoefficientRing& ring,
                       const HomologyOptions& opts) {
  if (cx.filtered())
    throw InvalidInput("homology() expects a q-graded complex; use the lee module for filtered ones");
  BigradedComplex red = reduce_complex(cx, ring);
  if (ring.is_field()) return field_homology(red, ring);
  try {
    return integral_homology(red, opts);
  } catch (const CoefficientOverflow&) {
    BigradedTable t = field_homology(red, CoefficientRing::rationals());
    t.ring = CoefficientRing::integers();
    t.degraded = true;
    for (std::int64_t p : {2, 3}) {
      auto ft = field_homology(reduce_complex(red, CoefficientRing::prime_field(p)),
                               CoefficientRing::prime_field(p));
      auto& dims = t.field_dims["F" + std::to_string(p)];
      for (const auto& [k, g] : ft.groups) dims[k] = g.free;
    }
    return t;
  }
}

std::vector<BigInt> smith_invariant_factors(IntMatrix m, std::size_t bit_bound) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  std::vector<BigInt> diag;
  auto check = [&](const BigInt& v) {
    if (v != 0 && boost::multiprecision::msb(abs(v)) + 1 > bit_bound) throw CoefficientOverflow();
  };
  std::size_t t = 0;
  while (t < rows && t < cols) {
    // smallest nonzero entry of the remaining block
    std::size_t pr = rows, pc = cols;
    for (std::size_t i = t; i < rows; ++i)
      for (std::size_t j = t; j < cols; ++j)
        if (m[i][j] != 0 && (pr == rows || abs(m[i][j]) < abs(m[pr][pc]))) {
          pr = i;
          pc = j;
        }
    if (pr == rows) break;
    std::swap(m[t], m[pr]);
    for (auto& row : m) std::swap(row[t], row[pc]);
    bool clean = false;
    while (!clean) {
      clean = true;
      const BigInt p = m[t][t];
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (m[i][t] == 0) continue;
        BigInt f = m[i][t] / p;
        for (std::size_t j = t; j < cols; ++j) {
          if (m[t][j] != 0) m[i][j] -= f * m[t][j];
          check(m[i][j]);
        }
        if (m[i][t] != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (m[t][j] == 0) continue;
        BigInt f = m[t][j] / p;
        for (std::size_t i = t; i < rows; ++i) {
          if (m[i][t] != 0) m[i][j] -= f * m[i][t];
          check(m[i][j]);
        }
        if (m[t][j] != 0) clean = false;
      }
      if (!clean) {
        // move a smaller remainder into the pivot position
        std::size_t br = t, bc = t;
        for (std::size_t i = t + 1; i < rows; ++i)
          if (m[i][t] != 0 && abs(m[i][t]) < abs(m[br][bc])) {
            br = i;
            bc = t;
          }
        for (std::size_t j = t + 1; j < cols; ++j)
          if (m[t][j] != 0 && abs(m[t][j]) < abs(m[br][bc])) {
            br = t;
            bc = j;
          }
        std::swap(m[t], m[br]);
        for (auto& row : m) std::swap(row[t], row[bc]);
      }
    }
    diag.push_back(abs(m[t][t]));
    ++t;
  }
  // enforce the divisibility chain
  for (std::size_t i = 0; i < diag.size(); ++i)
    for (std::size_t j = i + 1; j < diag.size(); ++j) {
      BigInt g = gcd(diag[i], diag[j]);
      BigInt l = diag[i] / g * diag[j];
      diag[i] = g;
      diag[j] = l;
    }
  std::sort(diag.begin(), diag.end());
  return diag;
}

std::int64_t matrix_rank(const IntMatrix& m, std::int64_t p) {
  std::vector<std::map<int, BigInt>> rows;
  for (const auto& r : m) {
    std::map<int, BigInt> row;
    for (std::size_t j = 0; j < r.size(); ++j)
      if (r[j] != 0) row[static_cast<int>(j)] = r[j];
    rows.push_back(std::move(row));
  }
  return sparse_rank(rows, p == 0 ? CoefficientRing::rationals() : CoefficientRing::prime_field(p));
}

std::int64_t sparse_rank(const std::vector<std::map<int, BigInt>>& rows,
                         const CoefficientRing& field) {
  if (!field.is_field()) throw InvalidInput("sparse_rank needs a field");
  if (field.kind == RingKind::PrimeField) return sparse_rank_impl(PrimeField{field.p}, rows);
  return sparse_rank_impl(RationalField{}, rows);
}

}  // namespace torkh
