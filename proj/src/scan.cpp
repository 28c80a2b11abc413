#include "torkh/scan.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <tuple>
#include <unordered_map>
#include <unordered_set>

#include "scan_internal.hpp"
#include "torkh/errors.hpp"

namespace torkh {

using namespace detail;

namespace {

template <class R>
class Scanner {
 public:
  using V = typename R::value_type;
  using Mor = std::vector<std::pair<std::uint32_t, V>>;

  Scanner(const R& ring, const LinkDiagram& diag, Theory theory, const ScanOptions& opts)
      : ring_(ring), f_(Frobenius::of(theory)), co_(f_), diag_(diag), theory_(theory), opts_(opts) {}

  ScanResult run(const std::vector<std::vector<VertexChain>>& tracked, const CoefficientRing& base) {
    init(tracked);
    std::vector<int> order = opts_.order;
    if (order.empty()) {
      order.resize(diag_.crossing_count());
      for (int i = 0; i < diag_.crossing_count(); ++i) order[i] = i;
    }
    for (int c : order) {
      add_crossing(c);
      eliminate();
    }
    return finish(tracked.size(), base);
  }

 private:
  struct Gen {
    int obj = 0;
    int h = 0;
    int q = 0;
  };
  struct Tracked {
    std::size_t chain = 0;
    V coeff{};
    int src_obj = 0;
    std::vector<int> smoothing;
    std::vector<int> circ;
    std::vector<std::array<std::int64_t, 2>> labels;
    std::unordered_map<int, Mor> phi;
  };
  struct PlanEntry {
    std::unique_ptr<GluePlan> plan;
    std::unordered_map<std::uint32_t, std::vector<TermList>> cache;
  };

  // ---- state helpers ----
  int intern(const Matching& m, std::vector<Matching>& objs, std::map<Matching, int>& index) {
    auto [it, ins] = index.emplace(m, static_cast<int>(objs.size()));
    if (ins) objs.push_back(m);
    return it->second;
  }

  void axpy(Mor& target, const TermList& tl, const V& scale) {
    for (const auto& [m, k] : tl) {
      V v = ring_.mul(scale, ring_.from_int(k));
      if (ring_.is_zero(v)) continue;
      auto it = std::find_if(target.begin(), target.end(), [&](const auto& p) { return p.first == m; });
      if (it == target.end()) {
        target.push_back({m, v});
      } else {
        it->second = ring_.add(it->second, v);
        if (ring_.is_zero(it->second)) target.erase(it);
      }
    }
  }

  CompositionPlan& comp_plan(int a, int b, int c) {
    auto key = std::make_tuple(a, b, c);
    auto it = comp_plans_.find(key);
    if (it == comp_plans_.end())
      it = comp_plans_.emplace(key, std::make_unique<CompositionPlan>(objs_[a], objs_[b], objs_[c])).first;
    return *it->second;
  }

  // target += scale * (second ∘ first), first: A -> B, second: B -> C
  void add_composite(Mor& target, const Mor& first, const Mor& second, const V& scale, int a, int b, int c) {
    CompositionPlan& plan = comp_plan(a, b, c);
    for (const auto& [ma, ca] : first)
      for (const auto& [mb, cb] : second) {
        const TermList& tl = plan.compose(ma, mb, f_, co_);
        if (tl.empty()) continue;
        axpy(target, tl, ring_.mul(scale, ring_.mul(ca, cb)));
      }
  }

  // ---- setup ----
  void init(const std::vector<std::vector<VertexChain>>& tracked) {
    objs_.clear();
    obj_index_.clear();
    intern(Matching{}, objs_, obj_index_);
    const int loops = static_cast<int>(diag_.free_loops.size());
    if (loops > 24) throw ResourceLimit("too many crossing-free loops", static_cast<std::size_t>(loops));
    for (int lam = 0; lam < (1 << loops); ++lam)
      gens_.push_back({0, 0, loops - 2 * __builtin_popcount(lam)});
    out_.assign(gens_.size(), {});
    in_.assign(gens_.size(), {});
    alive_.assign(gens_.size(), 1);

    for (std::size_t k = 0; k < tracked.size(); ++k)
      for (const auto& part : tracked[k]) {
        Tracked t;
        t.chain = k;
        t.coeff = ring_.from_int(part.coeff);
        t.smoothing = part.smoothing;
        t.circ = resolution_circles(diag_, part.smoothing);
        t.labels = part.labels;
        int circles = t.circ.empty() ? 0 : *std::max_element(t.circ.begin(), t.circ.end()) + 1;
        if (static_cast<int>(t.labels.size()) != circles)
          throw InvalidParameter("tracked chain: label count != circle count");
        for (int lam = 0; lam < (1 << loops); ++lam) {
          V v = ring_.one();
          for (int i = 0; i < loops; ++i) {
            const auto& l = t.labels[t.circ[diag_.free_loops[i]]];
            v = ring_.mul(v, ring_.from_int(l[(lam >> i) & 1]));
          }
          if (!ring_.is_zero(v)) t.phi[lam] = Mor{{0u, v}};
        }
        tracked_.push_back(std::move(t));
      }
  }

  // ---- adding a crossing ----
  void add_crossing(int c) {
    const auto& cr = diag_.crossings[c];
    const StepGeometry g = make_step(boundary_, cr.edges);
    if (g.survivors.size() > 62)
      throw ResourceLimit("tangle boundary too wide for the scanning engine", g.survivors.size());

    std::vector<Matching> nobjs;
    std::map<Matching, int> nindex;
    std::map<std::pair<int, int>, std::pair<GluedObject, int>> glued;  // (obj, r) -> (glued, new obj)
    auto glued_of = [&](int obj, int r) -> const std::pair<GluedObject, int>& {
      auto key = std::make_pair(obj, r);
      auto it = glued.find(key);
      if (it == glued.end()) {
        GluedObject go = glue_object(g, objs_[obj], r);
        int id = intern(go.matching, nobjs, nindex);
        it = glued.emplace(key, std::make_pair(std::move(go), id)).first;
      }
      return it->second;
    };

    // new generators
    std::vector<Gen> ngens;
    std::vector<std::array<int, 2>> start(gens_.size(), {-1, -1});
    for (int x = 0; x < static_cast<int>(gens_.size()); ++x) {
      if (!alive_[x]) continue;
      for (int r = 0; r < 2; ++r) {
        const auto& [go, id] = glued_of(gens_[x].obj, r);
        const int loops = static_cast<int>(go.loop_rep.size());
        start[x][r] = static_cast<int>(ngens.size());
        for (int lam = 0; lam < (1 << loops); ++lam)
          ngens.push_back({id, gens_[x].h + r, gens_[x].q + r + loops - 2 * __builtin_popcount(lam)});
      }
    }
    stats_.peak_generators = std::max(stats_.peak_generators, ngens.size());
    if (ngens.size() > opts_.max_generators)
      throw ResourceLimit("intermediate complex exceeds the generator budget", ngens.size());

    std::map<std::array<int, 4>, PlanEntry> plans;
    auto plan_of = [&](int M, int N, int r, int r2) -> PlanEntry& {
      std::array<int, 4> key{M, N, r, r2};
      auto it = plans.find(key);
      if (it == plans.end()) {
        PlanEntry e;
        e.plan = std::make_unique<GluePlan>(g, objs_[M], objs_[N], r, r2, glued_of(M, r).first,
                                            glued_of(N, r2).first);
        it = plans.emplace(key, std::move(e)).first;
      }
      return it->second;
    };
    auto terms_of = [&](PlanEntry& e, std::uint32_t mask) -> const std::vector<TermList>& {
      auto it = e.cache.find(mask);
      if (it != e.cache.end()) return it->second;
      const int sl = e.plan->source_loops(), tl = e.plan->target_loops();
      std::vector<TermList> res(std::size_t{1} << (sl + tl));
      std::vector<std::array<std::int64_t, 2>> funcs(sl);
      for (int lam = 0; lam < (1 << sl); ++lam) {
        for (int i = 0; i < sl; ++i) funcs[i] = summand_functional((lam >> i) & 1, f_);
        for (int mu = 0; mu < (1 << tl); ++mu)
          res[(static_cast<std::size_t>(lam) << tl) | mu] = e.plan->evaluate(mask, funcs, mu, f_, co_);
      }
      return e.cache.emplace(mask, std::move(res)).first->second;
    };

    std::vector<std::unordered_map<int, Mor>> nout(ngens.size());
    auto glue_into = [&](int x, int y, int r, int r2, const Mor& phi, const V& scale) {
      PlanEntry& e = plan_of(gens_[x].obj, gens_[y].obj, r, r2);
      const int sl = e.plan->source_loops(), tl = e.plan->target_loops();
      for (const auto& [mask, cf] : phi) {
        const auto& res = terms_of(e, mask);
        const V s = ring_.mul(scale, cf);
        for (int lam = 0; lam < (1 << sl); ++lam)
          for (int mu = 0; mu < (1 << tl); ++mu) {
            const TermList& tlst = res[(static_cast<std::size_t>(lam) << tl) | mu];
            if (tlst.empty()) continue;
            Mor& target = nout[start[x][r] + lam][start[y][r2] + mu];
            axpy(target, tlst, s);
          }
      }
    };

    for (int x = 0; x < static_cast<int>(gens_.size()); ++x) {
      if (!alive_[x]) continue;
      for (const auto& [y, phi] : out_[x])
        for (int r = 0; r < 2; ++r) glue_into(x, y, r, r, phi, ring_.one());
      const V sign = (gens_[x].h % 2) ? ring_.neg(ring_.one()) : ring_.one();
      glue_into(x, x, 0, 1, Mor{{0u, ring_.one()}}, sign);
    }

    // tracked chains follow the identity on their own smoothing
    for (auto& t : tracked_) {
      const int ro = t.smoothing[c];
      GluedObject src = glue_object(g, objs_[t.src_obj], ro);
      std::vector<std::array<std::int64_t, 2>> funcs;
      for (int v : src.loop_rep) funcs.push_back(label_functional(t.labels[t.circ[g.v_edge[v]]], f_));
      std::unordered_map<int, Mor> nphi;
      for (const auto& [x, phi] : t.phi) {
        const auto& tgt = glued_of(gens_[x].obj, ro).first;
        GluePlan plan(g, objs_[t.src_obj], objs_[gens_[x].obj], ro, ro, src, tgt);
        const int tl = plan.target_loops();
        for (const auto& [mask, cf] : phi)
          for (int mu = 0; mu < (1 << tl); ++mu) {
            TermList tlst = plan.evaluate(mask, funcs, mu, f_, co_);
            if (!tlst.empty()) axpy(nphi[start[x][ro] + mu], tlst, cf);
          }
      }
      for (auto it = nphi.begin(); it != nphi.end();)
        it = it->second.empty() ? nphi.erase(it) : std::next(it);
      t.phi = std::move(nphi);
      t.src_obj = intern(src.matching, nobjs, nindex);
    }

    // install the new complex
    boundary_.clear();
    for (int v : g.survivors) boundary_.push_back(g.v_edge[v]);
    objs_ = std::move(nobjs);
    obj_index_ = std::move(nindex);
    gens_ = std::move(ngens);
    out_.assign(gens_.size(), {});
    in_.assign(gens_.size(), {});
    alive_.assign(gens_.size(), 1);
    for (int x = 0; x < static_cast<int>(nout.size()); ++x)
      for (auto& [y, m] : nout[x]) {
        if (m.empty()) continue;
        in_[y].insert(x);
        out_[x].emplace(y, std::move(m));
      }
    comp_plans_.clear();
  }

  // ---- Gaussian elimination ----
  bool pivotable(int x, int y, const Mor& m) const {
    return gens_[x].obj == gens_[y].obj && gens_[x].q == gens_[y].q && m.size() == 1 && m[0].first == 0 &&
           ring_.is_unit(m[0].second);
  }

  void eliminate() {
    for (;;) {
      std::vector<std::tuple<std::int64_t, int, int>> cand;
      for (int x = 0; x < static_cast<int>(gens_.size()); ++x) {
        if (!alive_[x]) continue;
        for (const auto& [y, m] : out_[x])
          if (pivotable(x, y, m))
            cand.emplace_back(static_cast<std::int64_t>(in_[y].size() - 1) *
                                  static_cast<std::int64_t>(out_[x].size() - 1),
                              x, y);
      }
      if (cand.empty()) break;
      std::sort(cand.begin(), cand.end());
      for (const auto& [cost, x, y] : cand) {
        if (!alive_[x] || !alive_[y]) continue;
        auto it = out_[x].find(y);
        if (it == out_[x].end() || !pivotable(x, y, it->second)) continue;
        cancel(x, y);
      }
    }
  }

  void cancel(int x, int y) {
    const V scale = ring_.neg(ring_.inverse(out_[x].at(y)[0].second));
    std::vector<std::pair<int, const Mor*>> gamma;
    for (const auto& [z, m] : out_[x])
      if (z != y) gamma.emplace_back(z, &m);
    std::vector<int> ws;
    for (int w : in_[y])
      if (w != x) ws.push_back(w);
    for (int w : ws) {
      const Mor delta = out_[w].at(y);
      for (const auto& [z, gm] : gamma) {
        auto [it, ins] = out_[w].emplace(z, Mor{});
        add_composite(it->second, delta, *gm, scale, gens_[w].obj, gens_[y].obj, gens_[z].obj);
        if (it->second.empty()) {
          out_[w].erase(it);
          in_[z].erase(w);
        } else {
          in_[z].insert(w);
        }
      }
    }
    for (auto& t : tracked_) {
      auto it = t.phi.find(y);
      if (it != t.phi.end()) {
        const Mor py = std::move(it->second);
        t.phi.erase(it);
        for (const auto& [z, gm] : gamma) {
          Mor& target = t.phi[z];
          add_composite(target, py, *gm, scale, t.src_obj, gens_[y].obj, gens_[z].obj);
          if (target.empty()) t.phi.erase(z);
        }
      }
      t.phi.erase(x);
    }
    drop(x);
    drop(y);
  }

  void drop(int v) {
    for (int w : in_[v]) out_[w].erase(v);
    for (const auto& [z, m] : out_[v]) in_[z].erase(v);
    in_[v].clear();
    out_[v].clear();
    alive_[v] = 0;
  }

  // ---- output ----
  static BigInt to_big(const V& v) { return BigInt(v); }

  ScanResult finish(std::size_t tracked_count, const CoefficientRing& base) {
    if (!boundary_.empty()) throw std::logic_error("scan finished with open boundary");
    const int np = diag_.positive_crossings(), nm = diag_.negative_crossings();
    ScanResult res;
    res.complex.base = base;
    res.complex.deformation_degree = deformation_degree(theory_);
    std::vector<int> idx(gens_.size(), -1);
    for (int x = 0; x < static_cast<int>(gens_.size()); ++x)
      if (alive_[x]) idx[x] = res.complex.add_generator(gens_[x].h - nm, gens_[x].q + np - 2 * nm);
    auto scalar = [&](const Mor& m) {
      if (m.size() != 1 || m[0].first != 0) throw std::logic_error("non-scalar morphism after closing");
      return to_big(m[0].second);
    };
    for (int x = 0; x < static_cast<int>(gens_.size()); ++x) {
      if (!alive_[x]) continue;
      auto& row = res.complex.d[idx[x]];
      for (const auto& [y, m] : out_[x]) row.emplace_back(idx[y], scalar(m));
      std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    }
    res.tracked.assign(tracked_count, {});
    for (const auto& t : tracked_)
      for (const auto& [x, m] : t.phi) {
        V v = ring_.mul(t.coeff, m[0].second);
        if (m.size() != 1 || m[0].first != 0) throw std::logic_error("non-scalar tracked component");
        auto& slot = res.tracked[t.chain][idx[x]];
        slot += to_big(v);
        if (base.kind == RingKind::PrimeField) slot %= base.p;
        if (slot == 0) res.tracked[t.chain].erase(idx[x]);
      }
    res.stats = stats_;
    res.stats.final_generators = static_cast<std::size_t>(res.complex.size());
    return res;
  }

  R ring_;
  Frobenius f_;
  Comultiplier co_;
  const LinkDiagram& diag_;
  Theory theory_;
  ScanOptions opts_;
  ScanStats stats_;

  std::vector<int> boundary_;
  std::vector<Matching> objs_;
  std::map<Matching, int> obj_index_;
  std::vector<Gen> gens_;
  std::vector<std::unordered_map<int, Mor>> out_;
  std::vector<std::unordered_set<int>> in_;
  std::vector<char> alive_;
  std::vector<Tracked> tracked_;
  std::map<std::tuple<int, int, int>, std::unique_ptr<CompositionPlan>> comp_plans_;
};

}  // namespace

ScanResult scan_complex(const LinkDiagram& diag, Theory theory, const CoefficientRing& ring,
                        const std::vector<std::vector<VertexChain>>& tracked, const ScanOptions& opts) {
  diag.validate();
  if (!opts.order.empty()) {
    std::vector<int> sorted = opts.order;
    std::sort(sorted.begin(), sorted.end());
    for (int i = 0; i < static_cast<int>(sorted.size()); ++i)
      if (sorted[i] != i || static_cast<int>(sorted.size()) != diag.crossing_count())
        throw InvalidParameter("scan order must be a permutation of the crossings");
  }
  if (ring.kind == RingKind::PrimeField)
    return Scanner<PrimeField>(PrimeField{ring.p}, diag, theory, opts).run(tracked, ring);
  try {
    return Scanner<CheckedInt64Ring>(CheckedInt64Ring{}, diag, theory, opts)
        .run(tracked, CoefficientRing::integers());
  } catch (const CoefficientOverflow&) {
    return Scanner<IntegerRing>(IntegerRing{}, diag, theory, opts).run(tracked, CoefficientRing::integers());
  }
}

}  // namespace torkh
