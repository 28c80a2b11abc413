#pragma once

// Cobordism algebra for the scanning engine. Objects are crossingless
// matchings on the current boundary; a morphism M -> N is a combination of
// dotted disk sets, one disk per circle of M ∪ N, encoded as a bitmask
// (bit c set = circle c carries a dot).

#include <array>
#include <cstdint>
#include <unordered_map>
#include <utility>
#include <vector>

#include "torkh/frobenius.hpp"

namespace torkh::detail {

using Matching = std::vector<std::uint8_t>;  // partner of each boundary point
using Term = std::pair<std::uint32_t, std::int64_t>;
using TermList = std::vector<Term>;

struct Circles {
  std::vector<int> of_point;
  int count = 0;
};

/// Circles of the union graph, numbered by their smallest point.
Circles circles_of(const Matching& a, const Matching& b);

/// Iterated comultiplication tables: expand(b, v)[assignment] is the
/// coefficient of Δ^{b-1}(v) on the basis tensor `assignment` (bit = X).
class Comultiplier {
 public:
  explicit Comultiplier(Frobenius f) : f_(f) {}
  std::vector<std::int64_t> expand(int b, const Frobenius::Elem& v);

 private:
  const std::array<std::vector<std::int64_t>, 2>& table(int b);
  Frobenius f_;
  std::vector<std::array<std::vector<std::int64_t>, 2>> tables_;
};

/// Composition Mor(M1,M2) x Mor(M2,M3) -> Mor(M1,M3).
class CompositionPlan {
 public:
  CompositionPlan(const Matching& m1, const Matching& m2, const Matching& m3);
  const TermList& compose(std::uint32_t a, std::uint32_t b, const Frobenius& f, Comultiplier& co);

 private:
  struct Class {
    std::uint32_t mask12 = 0;
    std::uint32_t mask23 = 0;
    int genus = 0;
    std::vector<int> out_circles;
  };
  std::vector<Class> classes_;
  std::unordered_map<std::uint64_t, TermList> cache_;
};

/// Geometry of one scanning step: the old boundary plus the four slots of
/// the crossing being added form the point set V (old points first).
struct StepGeometry {
  int old_size = 0;
  std::vector<std::pair<int, int>> glue;  // pairs of V indices
  std::vector<int> survivors;             // V index of each new boundary point
  std::vector<int> new_pos;               // V index -> new position, or -1
  std::vector<int> v_edge;                // V index -> edge id

  int slot(int j) const { return old_size + j; }
};

StepGeometry make_step(const std::vector<int>& boundary, const std::array<int, 4>& edges);

/// Slot pairs of the 0- and 1-smoothing.
const std::array<std::pair<int, int>, 2>& smoothing_arcs(int r);

/// Result of gluing an old object to a smoothing of the new crossing.
struct GluedObject {
  Matching matching;           // on the new boundary
  std::vector<int> loop_rep;   // one V index per closed loop, ascending
};

GluedObject glue_object(const StepGeometry& g, const Matching& m, int r);

/// Gluing of a morphism M -> N with the identity (r == r2) or the saddle
/// (r = 0, r2 = 1) on the crossing.
class GluePlan {
 public:
  GluePlan(const StepGeometry& g, const Matching& M, const Matching& N, int r, int r2,
           const GluedObject& src, const GluedObject& tgt);

  int source_loops() const { return src_loops_; }
  int target_loops() const { return tgt_loops_; }

  /// Terms of the glued morphism for old mask `mask`. Each source loop is
  /// closed off by a functional (value on u = 1, value on u = X); target
  /// loops are projected onto the basis assignment `mu` (bit = X).
  TermList evaluate(std::uint32_t mask, const std::vector<std::array<std::int64_t, 2>>& src_funcs,
                    std::uint32_t mu, const Frobenius& f, Comultiplier& co) const;

 private:
  struct Boundary {
    int kind = 0;  // 0 new circle, 1 source loop, 2 target loop
    int index = 0;
  };
  struct Class {
    std::uint32_t old_mask = 0;
    int genus = 0;
    std::vector<Boundary> bnd;
  };
  std::vector<Class> classes_;
  int src_loops_ = 0;
  int tgt_loops_ = 0;
};

/// Functional closing a source loop that carries summand bit (0 = "1", 1 = "X").
inline std::array<std::int64_t, 2> summand_functional(int bit, const Frobenius& f) {
  return bit ? std::array<std::int64_t, 2>{1, f.h} : std::array<std::int64_t, 2>{0, 1};
}

/// Functional closing a source loop labelled c1 * 1 + cX * X.
inline std::array<std::int64_t, 2> label_functional(const std::array<std::int64_t, 2>& l,
                                                    const Frobenius& f) {
  return {l[1], l[0] + f.h * l[1]};
}

}  // namespace torkh::detail
