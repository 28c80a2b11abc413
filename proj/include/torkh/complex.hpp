#pragma once

// Scalar bigraded chain complexes and their homology tables.

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "torkh/rings.hpp"

namespace torkh {

struct Generator {
  int h = 0;
  int q = 0;
  friend bool operator==(const Generator&, const Generator&) = default;
};

/// Free complex with one basis element per generator and a sparse
/// differential. Entries are integers when `base` is Z (valid after base
/// change to any ring) or residues in [0, p) when `base` is F_p.
///
/// For the Khovanov theory every entry preserves q. For deformed theories an
/// entry may raise q by a positive multiple of `deformation_degree`
/// (4 for Lee, 2 for Bar-Natan), so F_j = span{q >= j} is a subcomplex.
struct BigradedComplex {
  CoefficientRing base = CoefficientRing::integers();
  int deformation_degree = 0;
  std::vector<Generator> gens;
  std::vector<std::vector<std::pair<int, BigInt>>> d;  // d[x]: (target, coeff), sorted

  int size() const { return static_cast<int>(gens.size()); }
  int add_generator(int h, int q) {
    gens.push_back({h, q});
    d.emplace_back();
    return size() - 1;
  }
  bool filtered() const { return deformation_degree != 0; }

  /// Throws InvalidInput if d does not raise h by one, breaks the grading
  /// rules above, or d∘d != 0 over `ring`.
  void check(const CoefficientRing& ring) const;
};

/// A chain on a BigradedComplex: sparse coefficient vector.
using Chain = std::map<int, BigInt>;

struct HomologyGroup {
  std::int64_t free = 0;          // rank (dimension over a field)
  std::vector<BigInt> torsion;    // elementary divisors > 1, ascending
  friend bool operator==(const HomologyGroup&, const HomologyGroup&) = default;
};

using Bidegree = std::pair<int, int>;  // (h, q)

struct BigradedTable {
  CoefficientRing ring = CoefficientRing::rationals();
  std::map<Bidegree, HomologyGroup> groups;  // only nonzero groups

  /// Set when integral elimination gave up on coefficient growth: `groups`
  /// then holds rational ranks only and `field_dims` the F2/F3 answers.
  bool degraded = false;
  std::map<std::string, std::map<Bidegree, std::int64_t>> field_dims;

  std::int64_t rank(int h, int q) const;
  bool is_zero(int h, int q) const;
  std::int64_t total_rank() const;
  /// Dimension after tensoring with F_p (universal coefficients, Z tables only).
  BigradedTable reduce_mod(std::int64_t p) const;
  void set(int h, int q, HomologyGroup g);

  friend bool operator==(const BigradedTable& a, const BigradedTable& b) {
    return a.ring == b.ring && a.groups == b.groups && a.degraded == b.degraded &&
           a.field_dims == b.field_dims;
  }
};

}  // namespace torkh
