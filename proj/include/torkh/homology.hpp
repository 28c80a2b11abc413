#pragma once

// Exact linear algebra on scalar complexes: unit cancellation, ranks over
// fields, Smith normal form over Z and bigraded homology tables.

#include <cstddef>
#include <cstdint>
#include <map>
#include <vector>

#include "torkh/complex.hpp"

namespace torkh {

/// Cancels every differential entry that is a unit of `ring` (and, for
/// filtered complexes, preserves q), choosing pivots by least fill-in.
/// The result is chain homotopy equivalent (filtered homotopy equivalent)
/// to the input. Chains in `tracked` are pushed through the equivalence and
/// re-expressed in the output's generator numbering.
///
/// Over Z and Q the result keeps integral entries (only ±1 pivots); over F_p
/// entries are residues and the result's base ring is F_p.
BigradedComplex reduce_complex(const BigradedComplex& cx, const CoefficientRing& ring,
                               std::vector<Chain>* tracked = nullptr);

struct HomologyOptions {
  /// Integral elimination falls back to field ranks once an entry exceeds
  /// this many bits.
  std::size_t bit_bound = 4096;
};

/// Bigraded homology of a q-graded (Khovanov-type) complex.
BigradedTable homology(const BigradedComplex& cx, const CoefficientRing& ring,
                       const HomologyOptions& opts = {});

/// Dense integer matrix helpers, exposed for tests.
using IntMatrix = std::vector<std::vector<BigInt>>;

/// Nonzero invariant factors (absolute values, ascending, each dividing the
/// next). Throws CoefficientOverflow if an intermediate entry exceeds
/// `bit_bound` bits.
std::vector<BigInt> smith_invariant_factors(IntMatrix m, std::size_t bit_bound = 4096);

/// Rank of an integer matrix over Q (p = 0) or F_p.
std::int64_t matrix_rank(const IntMatrix& m, std::int64_t p);

/// Rank over a field of a sparse matrix given row-wise as (column, value).
std::int64_t sparse_rank(const std::vector<std::map<int, BigInt>>& rows,
                         const CoefficientRing& field);

}  // namespace torkh
