#pragma once

// Crossing-by-crossing construction and reduction of the Khovanov, Lee and
// Bar-Natan complexes: each new crossing is glued on, closed loops are
// delooped and isomorphism entries are cancelled before the next one.

#include <cstddef>
#include <vector>

#include "torkh/complex.hpp"
#include "torkh/cube.hpp"
#include "torkh/frobenius.hpp"
#include "torkh/links.hpp"

namespace torkh {

struct ScanOptions {
  /// Largest number of generators allowed at any intermediate stage.
  std::size_t max_generators = 4'000'000;
  /// Order in which crossings are added (a permutation of crossing indices);
  /// empty means diagram order.
  std::vector<int> order;
};

struct ScanStats {
  std::size_t peak_generators = 0;
  std::size_t final_generators = 0;
};

struct ScanResult {
  BigradedComplex complex;
  std::vector<Chain> tracked;  // one per tracked input, in final generator numbering
  ScanStats stats;
};

/// Reduced complex of `diag`, with gradings shifted by [-n_-]{n_+ - 2n_-}.
/// Over Z and Q the complex has integer entries and only ±1 entries are
/// cancelled; over F_p every nonzero isomorphism entry is cancelled. For the
/// deformed theories only entries that preserve q are cancelled.
///
/// Each tracked chain is a sum of vertex chains of the full cube; it is
/// pushed through every local equivalence. Throws ResourceLimit when an
/// intermediate complex exceeds `max_generators`.
ScanResult scan_complex(const LinkDiagram& diag, Theory theory, const CoefficientRing& ring,
                        const std::vector<std::vector<VertexChain>>& tracked = {},
                        const ScanOptions& opts = {});

}  // namespace torkh
