#include "torkh/formulas.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numeric>

#include "torkh/errors.hpp"

namespace torkh {

namespace {

struct TorusData {
  int d, n1, m1;
};

TorusData torus_data(int n, int m) {
  if (n < 1 || m == 0) throw InvalidParameter("torus link needs n >= 1 and m != 0");
  const int d = std::gcd(n, std::abs(m));
  return {d, n / d, std::abs(m) / d};
}

int ceil_half(int h) { return (h + 1) / 2; }

ExtInt add(ExtInt a, ExtInt b) { return a == kInfinity || b == kInfinity ? kInfinity : a + b; }

LaurentPoly2 tq(int t, int q, BigInt c = 1) { return LaurentPoly2::monomial(t, q, std::move(c)); }

}  // namespace

int s_torus(int n, int m, int p, int q) {
  auto [d, n1, m1] = torus_data(n, m);
  if (p < 0 || q < 0 || p + q != d) throw InvalidParameter("orientation split must satisfy p + q = gcd(n, m)");
  const int k = std::abs(p - q);
  const int core = (n1 * k - 1) * (m1 * k - 1);
  if (m > 0) return core - 2 * std::min(p, q);
  return p == q ? 1 : -core;
}

std::map<int, std::int64_t> lee_rank_torus(int n, int m) {
  if (m < 1) throw InvalidParameter("lee_rank_torus needs m >= 1");
  auto [d, n1, m1] = torus_data(n, m);
  std::map<int, std::int64_t> out;
  for (int q = 0; 2 * q <= d; ++q) {
    const int p = d - q;
    const auto c = binomial(d, q).convert_to<std::int64_t>();
    out[2 * n1 * m1 * p * q] += p == q ? c : 2 * c;
  }
  return out;
}

BigradedTable gr_lee_torus(int n, int m) {
  if (m < 1) throw InvalidParameter("gr_lee_torus needs m >= 1");
  auto [d, n1, m1] = torus_data(n, m);
  std::map<Bidegree, std::int64_t> acc;
  for (int q = 0; 2 * q <= d; ++q) {
    const int p = d - q;
    const int h = 2 * n1 * m1 * p * q;
    const int base = 6 * n1 * m1 * p * q + s_torus(n, m, p, q) - 1;
    if (p == q) {
      for (int r = 0; r <= q; ++r) acc[{h, base + 2 * r}] += rep_dim(d, r);
      continue;
    }
    acc[{h, base}] += rep_dim(d, 0);
    for (int r = 1; r <= q; ++r) acc[{h, base + 2 * r}] += rep_dim(d, r) + rep_dim(d, r - 1);
    acc[{h, base + 2 * (q + 1)}] += rep_dim(d, q);
  }
  BigradedTable t;
  for (const auto& [k, v] : acc)
    if (v) t.set(k.first, k.second, {v, {}});
  return t;
}

int h_max(int n, Family f) {
  const int base = n * n / 2;
  return f == Family::nn ? base : base + n / 2;
}

ExtInt q_nn(int n, int h) {
  if (h < 0 || h > h_max(n, Family::nn)) return kInfinity;
  if (h == 0) return n * n - 2 * n;
  // the step (2(p+1)(q-1), 2pq] containing h: least q with 2q(n-q) >= h
  auto reach = [n](int q) { return 2 * q * (n - q); };
  int q = static_cast<int>((n - std::sqrt(static_cast<double>(n) * n - 2.0 * h)) / 2.0);
  q = std::max(q, 1);
  while (q > 1 && reach(q - 1) >= h) --q;
  while (reach(q) < h) ++q;
  return n * n + 2 * ceil_half(h) - 2 * (n - q);
}

ExtInt q_n1n(int n, int h) {
  const int hn = h_max(n, Family::nn);
  if (h < 0 || h > h_max(n, Family::n1n)) return kInfinity;
  if (h <= hn) {
    // clause for h = 2pq + 1 with p >= q > 0
    if (h % 2 == 1) {
      const int k = (h - 1) / 2;  // q(n - q) = k
      const long long disc = static_cast<long long>(n) * n - 4LL * k;
      if (disc >= 0) {
        const auto r = static_cast<long long>(std::llround(std::sqrt(static_cast<double>(disc))));
        if (r * r == disc && (n - r) % 2 == 0 && n - r > 0) return q_nn(n, h) + n - 3;
      }
    }
    return q_nn(n, h) + n - 1;
  }
  return n * n / 2 + 2 * h - 1;
}

std::int64_t rep_dim(int d, int r) {
  if (r < 0 || 2 * r > d) throw InvalidParameter("rep_dim needs 0 <= r <= d/2");
  BigInt v = binomial(d, r) - (r > 0 ? binomial(d, r - 1) : BigInt(0));
  return v.convert_to<std::int64_t>();
}

BigInt binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigInt r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

BigInt catalan(int k) {
  if (k < 0) throw InvalidParameter("catalan needs k >= 0");
  return binomial(2 * k, k) / (k + 1);
}

LaurentPoly2 K_poly(int n) {
  if (n < 0) throw InvalidParameter("K_poly needs n >= 0");
  std::vector<LaurentPoly2> K{tq(0, -1) + tq(0, 1), tq(0, -1) + tq(0, 1),
                              tq(0, 1) + tq(0, 3) + tq(2, 5) + tq(3, 9)};
  for (int k = 3; k <= n; ++k)
    K.push_back(K[k - 1].shifted(0, 2 * k - 2) + K[k - 2].shifted(2 * k - 2, 6 * k - 6) +
                K[k - 3].shifted(2 * k - 1, 8 * k - 8));
  return K[n];
}

LaurentPoly2 L_poly(int n) {
  if (n < 0) throw InvalidParameter("L_poly needs n >= 0");
  std::vector<LaurentPoly2> L{tq(0, 0), tq(0, -1) + tq(0, 1)};
  for (int k = 2; k <= n; ++k) {
    LaurentPoly2 v = L[k - 2] * (tq(2 * k - 2, 6 * k - 8) + tq(2 * k - 2, 6 * k - 6));
    for (int i = 1; i <= (k - 1) / 2; ++i) v = v + L[k - 2 * i].shifted(2 * i * (k - i), 6 * i * (k - i)).scaled(catalan(i - 1));
    for (int i = 0; i <= (k - 2) / 2; ++i) {
      const BigInt c = binomial(k - 2, i) - binomial(k - 2, i - 1);
      v = v + K_poly(k - 2 * i - 1).shifted(2 * i * (k - i), 6 * i * (k - i) + k - 2 * i - 1).scaled(c);
    }
    L.push_back(std::move(v));
  }
  return L[n];
}

RelationReport check_q_relations(int n, const StaircaseProvider& prov) {
  if (n < 3) throw InvalidParameter("q relations need n >= 3");
  RelationReport rep;
  rep.n = n;
  auto nn = [&](int k) { return [&, k](int h) { return prov.nn(k, h); }; };
  auto n1n = [&](int k) { return [&, k](int h) { return prov.n1n(k, h); }; };
  const int lo = -4, hi = h_max(n, Family::n1n) + 2 * n + 8;
  auto flag = [&](const char* rel, int h, ExtInt a, ExtInt b) { rep.violations.push_back({rel, h, a, b}); };
  // f >= g in the "wherever f is finite" sense, optionally strict at chosen h
  auto geq = [&](const char* rel, auto f, auto g) {
    for (int h = lo; h <= hi; ++h) {
      ExtInt a = f(h), b = g(h);
      if (a != kInfinity && a < b) flag(rel, h, a, b);
    }
  };
  auto strict_at = [&](const char* rel, auto f, auto g, int h) {
    ExtInt a = f(h), b = g(h);
    if (a != kInfinity && a <= b) flag(rel, h, a, b);
  };
  auto shift = [](auto f, int dh, int dq) { return [=](int h) { return add(f(h - dh), dq); }; };
  auto restrict_to = [](auto f, auto pred) { return [=](int h) { return pred(h) ? f(h) : kInfinity; }; };

  const int hm1 = h_max(n - 1, Family::n1n), hn1 = h_max(n, Family::n1n);

  auto r1 = shift(nn(n - 2), 2 * n - 2, 6 * n - 8);
  auto r1_rhs = restrict_to(nn(n), [=](int h) { return h >= 2 * n - 2; });
  for (int h = lo; h <= hi; ++h)
    if (r1(h) != r1_rhs(h)) flag("shifted q_{n-2,n-2} equals truncated q_{n,n}", h, r1(h), r1_rhs(h));
  geq("truncated q_{n,n} >= q_{n,n}", r1_rhs, nn(n));

  geq("shifted q_{n-1,n-2} >= q_{n+1,n}", shift(n1n(n - 2), 2 * n - 2, 6 * n - 6),
      restrict_to(n1n(n), [=](int h) { return h <= hn1 - 1; }));

  auto r3 = shift(nn(n), 0, n - 1);
  geq("q_{n,n}{n-1} >= q_{n+1,n}", r3, n1n(n));
  strict_at("q_{n,n}{n-1} > q_{n+1,n} at 2n-1", r3, n1n(n), 2 * n - 1);

  auto r4 = shift(n1n(n - 1), 0, n - 1);
  geq("q_{n,n-1}{n-1} >= q_{n,n}", r4, nn(n));
  for (int q = 1; 2 * q <= n; ++q) {
    const int p = n - q;
    strict_at("q_{n,n-1}{n-1} > q_{n,n} at 2pq", r4, nn(n), 2 * p * q);
    if (q > 1) strict_at("q_{n,n-1}{n-1} > q_{n,n} at 2pq-1", r4, nn(n), 2 * p * q - 1);
  }

  geq("q_{n,n-1}[1]{2} >= q_{n,n-1}",
      restrict_to(shift(n1n(n - 1), 1, 2), [=](int h) { return h != 1 && h <= hm1; }), n1n(n - 1));
  geq("q_{n,n-1}[2]{4} >= q_{n,n-1}", restrict_to(shift(n1n(n - 1), 2, 4), [=](int h) { return h <= hm1; }),
      n1n(n - 1));
  return rep;
}

TwistReport twist_bound_check(int n, int m, int m_prime, int p, int q) {
  if (m_prime <= m || (m_prime - m) % n != 0) throw InvalidParameter("need m' > m with m' = m mod n");
  const int d = std::gcd(n, std::abs(m));
  if (p < 0 || q < 0 || p + q != d) throw InvalidParameter("orientation split must satisfy p + q = gcd(n, m)");
  auto s_of = [&](int mm) { return mm == 0 ? 1 - n : s_torus(n, mm, p, q); };
  const int n1 = n / d;
  const std::int64_t P = std::int64_t{n1} * std::max(p, q), Q = std::int64_t{n1} * std::min(p, q);
  const std::int64_t alg = P - Q;
  TwistReport r;
  r.twists = (m_prime - m) / n;
  r.value = s_of(m_prime) - s_of(m) - std::int64_t{r.twists} * alg * (alg - 1);
  r.hi = 0;
  r.lo = P > Q ? -2 * P + 2 : -2 * P;
  return r;
}

}  // namespace torkh
