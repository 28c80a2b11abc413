#pragma once

// Filtered Lee and Bar-Natan homology: canonical classes, the quantum
// filtration on homology and s-invariants.

#include <cstdint>
#include <map>
#include <vector>

#include "torkh/complex.hpp"
#include "torkh/cube.hpp"
#include "torkh/laurent.hpp"
#include "torkh/links.hpp"
#include "torkh/scan.hpp"

namespace torkh {

/// Canonical Lee generator for one orientation. The cycle lives in the cube
/// of `oriented`, which is `diag` with the components in `orientation`
/// reversed; its gradings are those of the original diagram minus `shift`.
struct CanonicalCycle {
  std::vector<int> orientation;
  LinkDiagram oriented;
  BidegreeShift shift;
  VertexChain chain;
};

/// dim F_j H^h for every homological degree, listed at each quantum degree
/// carried by some generator (so the map is a step function in j).
struct FiltrationTable {
  CoefficientRing field = CoefficientRing::rationals();
  std::map<int, std::map<int, std::int64_t>> levels;  // h -> j -> dim F_j H^h

  std::int64_t dim(int h) const;                     // dim H^h
  std::int64_t dim_filtered(int h, int j) const;     // dim F_j H^h for any j
  friend bool operator==(const FiltrationTable&, const FiltrationTable&) = default;
};

/// Reduced filtered Lee complex; needs characteristic != 2.
BigradedComplex lee_complex(const LinkDiagram& diag, const CoefficientRing& field,
                            const ScanOptions& opts = {});
/// Reduced filtered Bar-Natan complex; needs characteristic 2.
BigradedComplex barnatan_complex(const LinkDiagram& diag, const CoefficientRing& field,
                                 const ScanOptions& opts = {});

CanonicalCycle canonical_cycle(const LinkDiagram& diag, const std::vector<int>& orientation,
                               Theory theory = Theory::Lee);

FiltrationTable filtration_table(const BigradedComplex& cx, const CoefficientRing& field);

/// Largest j with cycle in F_j C + im d. Returns kInfinity for boundaries and
/// throws InvalidInput when the chain is not closed.
ExtInt class_filtration_degree(const BigradedComplex& cx, const CoefficientRing& field,
                               const Chain& cycle);

struct SInvariant {
  int s = 0;
  bool experimental = false;  // computed in characteristic 2
};

/// Filtration degree of the canonical class of the given orientation, plus 1.
/// Characteristic 2 goes through the Bar-Natan deformation.
SInvariant s_invariant(const LinkDiagram& diag, const std::vector<int>& orientation,
                       const CoefficientRing& field, const ScanOptions& opts = {});

/// Associated graded dimensions as a field-style table.
BigradedTable gr_dimensions(const FiltrationTable& ft);

/// Filtration table of the link's deformed homology over `field`, choosing
/// Lee or Bar-Natan by characteristic.
FiltrationTable lee_filtration(const LinkDiagram& diag, const CoefficientRing& field,
                               const ScanOptions& opts = {});

}  // namespace torkh
