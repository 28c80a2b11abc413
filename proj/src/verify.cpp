#include "torkh/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <numeric>
#include <set>

#include "torkh/errors.hpp"
#include "torkh/homology.hpp"
#include "torkh/jones.hpp"
#include "torkh/lee.hpp"

namespace torkh {

namespace {

using Clock = std::chrono::steady_clock;

LinkDiagram torus(int n, int m) { return braid_closure(torus_braid(n, m)); }

// Runs `body`, timing it and turning resource exhaustion into a skip.
VerificationReport run(std::string claim, Json params, const std::function<void(VerificationReport&)>& body) {
  VerificationReport r;
  r.claim = std::move(claim);
  r.params = std::move(params);
  const auto t0 = Clock::now();
  try {
    body(r);
  } catch (const ResourceLimit& e) {
    r.status = Status::skipped;
    r.witness.reset();
    r.details["reason"] = e.what();
  }
  r.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count();
  return r;
}

void fail(VerificationReport& r, int h, int q, std::string expected, std::string got) {
  if (r.status == Status::fail) return;  // keep the first witness
  r.status = Status::fail;
  r.witness = Witness{h, q, std::move(expected), std::move(got)};
}

std::string text_or_zero(const HomologyGroup& g) {
  auto s = group_text(g);
  return s.empty() ? "0" : s;
}

HomologyGroup group_at(const BigradedTable& t, int h, int q) {
  auto it = t.groups.find({h, q});
  return it == t.groups.end() ? HomologyGroup{} : it->second;
}

// Prime-power form, so that Z2+Z3 and Z6 compare equal.
HomologyGroup primary(const HomologyGroup& g) {
  HomologyGroup out{g.free, {}};
  for (BigInt t : g.torsion) {
    for (BigInt p = 2; p * p <= t; ++p) {
      BigInt pk = 1;
      while (t % p == 0) {
        t /= p;
        pk *= p;
      }
      if (pk > 1) out.torsion.push_back(pk);
    }
    if (t > 1) out.torsion.push_back(t);
  }
  std::sort(out.torsion.begin(), out.torsion.end());
  return out;
}

}  // namespace

std::string status_name(Status s) {
  switch (s) {
    case Status::pass:
      return "pass";
    case Status::fail:
      return "fail";
    default:
      return "skipped-resource";
  }
}

Json VerificationReport::to_json() const {
  Json j;
  j["claim"] = claim;
  for (const auto& [k, v] : params.items()) j[k] = v;
  j["status"] = status_name(status);
  j["elapsed_ms"] = elapsed_ms;
  if (witness)
    j["witness"] = {{"h", witness->h}, {"q", witness->q}, {"expected", witness->expected}, {"got", witness->got}};
  else
    j["witness"] = nullptr;
  if (!details.empty()) j["details"] = details;
  return j;
}

BigradedTable khovanov_table(const LinkDiagram& diag, const CoefficientRing& ring, const VerifyContext& ctx) {
  const std::string key = "kh-" + canonical_hash(diag) + "-" + ring.name();
  if (ctx.cache)
    if (auto hit = ctx.cache->load(key)) return table_from_json(*hit);
  auto t = homology(scan_complex(diag, Theory::Khovanov, ring, {}, ctx.scan).complex, ring);
  if (ctx.cache) ctx.cache->store(key, table_to_json(t));
  return t;
}

VerificationReport verify_lower_bound(int n, Family family, const CoefficientRing& ring, const VerifyContext& ctx) {
  Json params{{"n", n}, {"family", family == Family::nn ? "nn" : "n1n"}, {"ring", ring.name()}};
  return run("lower-bound", params, [&](VerificationReport& r) {
    if (n < 1) throw InvalidParameter("n must be positive");
    const StaircaseFn bound{n, family};
    auto t = khovanov_table(family == Family::nn ? torus(n, n) : torus(n + 1, n), ring, ctx);
    r.details["degraded"] = t.degraded;
    auto below = [&](int h, int q) { return q < bound(h); };
    for (const auto& [k, g] : t.groups)
      if (below(k.first, k.second)) fail(r, k.first, k.second, "0", text_or_zero(g));
    for (const auto& [name, dims] : t.field_dims)
      for (const auto& [k, v] : dims)
        if (v && below(k.first, k.second)) fail(r, k.first, k.second, "0", std::to_string(v) + " over " + name);

    Json cells = Json::array();
    if (family == Family::nn) {
      for (int q = 0; 2 * q <= n; ++q) {
        const int h = 2 * (n - q) * q;
        const int qq = static_cast<int>(bound(h));
        auto g = group_at(t, h, qq);
        cells.push_back({{"h", h}, {"q", qq}, {"group", text_or_zero(g)}});
        if (g.free != 1 || !g.torsion.empty()) fail(r, h, qq, "1", text_or_zero(g));
      }
    } else if (bound(2 * n - 1) != kInfinity) {
      const int h = 2 * n - 1, qq = static_cast<int>(bound(h));
      auto g = group_at(t, h, qq);
      cells.push_back({{"h", h}, {"q", qq}, {"group", text_or_zero(g)}});
      r.details["torsion_only"] = g.free == 0 && !g.torsion.empty();
      if (g.free != 0) fail(r, h, qq, "torsion", text_or_zero(g));
    }
    r.details["cells"] = cells;
  });
}

VerificationReport verify_les_additivity(int n, int m, int i, const CoefficientRing& ring, const VerifyContext& ctx) {
  Json params{{"n", n}, {"m", m}, {"i", i}, {"ring", ring.name()}};
  return run("les-additivity", params, [&](VerificationReport& r) {
    if (m != n - 1 && m != n) throw InvalidParameter("m must be n-1 or n");
    if (i < 1 || i > n - 1) throw InvalidParameter("i must lie in [1, n-1]");
    auto top = khovanov_table(braid_closure(dlink_braid(n, m, i)), ring, ctx);
    auto rest = khovanov_table(braid_closure(dlink_braid(n, m, i - 1)), ring, ctx);
    auto e = khovanov_table(e_link_diagram(n, m, i - 1), ring, ctx);
    if (top.degraded || rest.degraded || e.degraded) {
      r.status = Status::skipped;
      r.details["reason"] = "integral elimination degraded";
      return;
    }
    const int dh = m == n - 1 ? 2 * n - 2 : 2 * n - 1;
    const int dq = m == n - 1 ? 6 * n - 7 : 6 * n - 4;
    std::map<Bidegree, HomologyGroup> sum;
    auto absorb = [&](const BigradedTable& t, int a, int b) {
      for (const auto& [k, g] : t.groups) {
        auto& s = sum[{k.first + a, k.second + b}];
        s.free += g.free;
        s.torsion.insert(s.torsion.end(), g.torsion.begin(), g.torsion.end());
      }
    };
    absorb(e, dh, dq);
    absorb(rest, 0, 1);
    BigradedTable expect;
    expect.ring = ring;
    for (auto& [k, g] : sum) expect.set(k.first, k.second, g);

    bool additive = true;
    std::set<Bidegree> keys;
    for (const auto& [k, g] : expect.groups) keys.insert(k);
    for (const auto& [k, g] : top.groups) keys.insert(k);
    for (const auto& k : keys) {
      auto want = primary(group_at(expect, k.first, k.second)), got = primary(group_at(top, k.first, k.second));
      if (!(want == got)) {
        additive = false;
        fail(r, k.first, k.second, text_or_zero(want), text_or_zero(got));
      }
    }
    const bool euler = euler_characteristic(top) == euler_characteristic(expect);
    r.details["additive"] = additive;
    r.details["euler_consistent"] = euler;
    if (!euler && r.status != Status::fail) fail(r, 0, 0, "Euler characteristics agree", "mismatch");
  });
}

VerificationReport verify_recursions(int n, const VerifyContext& ctx) {
  return run("recursions", Json{{"n", n}}, [&](VerificationReport& r) {
    if (n < 1) throw InvalidParameter("n must be positive");
    const auto Q = CoefficientRing::rationals();
    auto compare = [&](const char* which, const LaurentPoly2& want, const LaurentPoly2& got) {
      r.details[which] = got == want;
      auto diff = got - want;
      if (diff.is_zero()) return;
      auto [k, c] = *diff.terms().begin();
      fail(r, k.first, k.second, want.coeff(k.first, k.second).str(), got.coeff(k.first, k.second).str());
    };
    compare("L", L_poly(n), poincare(khovanov_table(torus(n, n), Q, ctx)));
    compare("K", K_poly(n), poincare(khovanov_table(torus(n + 1, n), Q, ctx)));
  });
}

VerificationReport verify_filtration(int n, int m, const VerifyContext& ctx) {
  return run("filtration", Json{{"n", n}, {"m", m}}, [&](VerificationReport& r) {
    if (n < 1 || m < 1) throw InvalidParameter("need n, m >= 1");
    const auto Q = CoefficientRing::rationals();
    const auto diag = torus(n, m);
    auto got = gr_dimensions(lee_filtration(diag, Q, ctx.scan));
    auto want = gr_lee_torus(n, m);
    std::set<Bidegree> keys;
    for (const auto& [k, g] : got.groups) keys.insert(k);
    for (const auto& [k, g] : want.groups) keys.insert(k);
    for (const auto& k : keys)
      if (got.rank(k.first, k.second) != want.rank(k.first, k.second))
        fail(r, k.first, k.second, std::to_string(want.rank(k.first, k.second)),
             std::to_string(got.rank(k.first, k.second)));
    r.details["gr"] = table_to_json(got);
    const int d = std::gcd(n, m);
    Json s = Json::array();
    for (int q = 0; q <= d; ++q) {
      std::vector<int> rev;
      for (int c = 0; c < q; ++c) rev.push_back(c);
      const int have = s_invariant(diag, rev, Q, ctx.scan).s, expect = s_torus(n, m, d - q, q);
      s.push_back({{"p", d - q}, {"q", q}, {"s", have}, {"predicted", expect}});
      if (have != expect) fail(r, 0, 0, "s=" + std::to_string(expect), "s=" + std::to_string(have));
    }
    r.details["s"] = s;
  });
}

}  // namespace torkh
