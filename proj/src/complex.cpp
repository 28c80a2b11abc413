#include "torkh/complex.hpp"

#include <algorithm>

#include "torkh/errors.hpp"

namespace torkh {

namespace {

template <class R>
void check_impl(const BigradedComplex& cx, const R& ring) {
  using V = typename R::value_type;
  auto conv = [&](const BigInt& v) {
    if constexpr (std::is_same_v<V, std::int64_t>) {
      BigInt r = v % ring.characteristic();
      if (r < 0) r += ring.characteristic();
      return ring.from_int(static_cast<std::int64_t>(r));
    } else {
      return V(v);
    }
  };
  for (int x = 0; x < cx.size(); ++x) {
    std::map<int, V> dd;
    for (const auto& [y, c] : cx.d[x]) {
      if (y < 0 || y >= cx.size()) throw InvalidInput("differential target out of range");
      const auto& gx = cx.gens[x];
      const auto& gy = cx.gens[y];
      if (gy.h != gx.h + 1) throw InvalidInput("differential entry does not raise h by one");
      int dq = gy.q - gx.q;
      bool ok = cx.deformation_degree == 0
                    ? dq == 0
                    : dq >= 0 && dq % cx.deformation_degree == 0;
      if (!ok) throw InvalidInput("differential entry has wrong quantum degree");
      V cy = conv(c);
      for (const auto& [z, c2] : cx.d[y]) {
        auto [it, ins] = dd.emplace(z, ring.zero());
        it->second = ring.add(it->second, ring.mul(conv(c2), cy));
      }
    }
    for (const auto& [z, v] : dd)
      if (!ring.is_zero(v)) throw InvalidInput("d o d != 0");
  }
}

}  // namespace

void BigradedComplex::check(const CoefficientRing& ring) const {
  if (base.kind == RingKind::PrimeField && ring != base)
    throw InvalidInput("complex is only defined over " + base.name());
  with_ring(ring, [&](const auto& r) {
    if constexpr (std::is_same_v<std::decay_t<decltype(r)>, IntegerRing>)
      check_impl(*this, r);
    else if constexpr (std::is_same_v<std::decay_t<decltype(r)>, RationalField>)
      check_impl(*this, IntegerRing{});  // d∘d over Q vanishes iff it does over Z
    else
      check_impl(*this, r);
  });
}

std::int64_t BigradedTable::rank(int h, int q) const {
  auto it = groups.find({h, q});
  return it == groups.end() ? 0 : it->second.free;
}

bool BigradedTable::is_zero(int h, int q) const { return groups.find({h, q}) == groups.end(); }

std::int64_t BigradedTable::total_rank() const {
  std::int64_t s = 0;
  for (const auto& [k, g] : groups) s += g.free;
  return s;
}

void BigradedTable::set(int h, int q, HomologyGroup g) {
  std::sort(g.torsion.begin(), g.torsion.end());
  if (g.free == 0 && g.torsion.empty())
    groups.erase({h, q});
  else
    groups[{h, q}] = std::move(g);
}

BigradedTable BigradedTable::reduce_mod(std::int64_t p) const {
  if (ring.kind != RingKind::Integers) throw InvalidInput("reduce_mod needs an integral table");
  if (degraded) {
    auto it = field_dims.find("F" + std::to_string(p));
    if (it == field_dims.end()) throw InvalidInput("degraded table lacks F" + std::to_string(p));
    BigradedTable out;
    out.ring = CoefficientRing::prime_field(p);
    for (const auto& [k, v] : it->second) out.set(k.first, k.second, {v, {}});
    return out;
  }
  std::map<Bidegree, std::int64_t> dims;
  for (const auto& [k, g] : groups) {
    auto [h, q] = k;
    dims[k] += g.free;
    for (const auto& t : g.torsion)
      if (t % p == 0) {
        dims[k] += 1;
        dims[{h - 1, q}] += 1;  // Tor term lands one degree lower
      }
  }
  BigradedTable out;
  out.ring = CoefficientRing::prime_field(p);
  for (const auto& [k, v] : dims) out.set(k.first, k.second, {v, {}});
  return out;
}

}  // namespace torkh
