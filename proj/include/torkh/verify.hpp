#pragma once

// End-to-end checks of the torus-link statements against computed homology.

#include <cstdint>
#include <optional>
#include <string>

#include "torkh/formulas.hpp"
#include "torkh/io.hpp"
#include "torkh/scan.hpp"

namespace torkh {

enum class Status { pass, fail, skipped };
std::string status_name(Status s);

/// Offending bigraded cell of a failed check.
struct Witness {
  int h = 0;
  int q = 0;
  std::string expected;
  std::string got;
};

struct VerificationReport {
  std::string claim;
  Json params = Json::object();
  Status status = Status::pass;
  std::int64_t elapsed_ms = 0;
  std::optional<Witness> witness;
  Json details = Json::object();

  bool passed() const { return status == Status::pass; }
  Json to_json() const;
};

struct VerifyContext {
  std::optional<ResultCache> cache;
  ScanOptions scan;
};

/// Khovanov table of a diagram, read from or written to the cache.
BigradedTable khovanov_table(const LinkDiagram& diag, const CoefficientRing& ring, const VerifyContext& ctx = {});

/// Vanishing below the staircase, plus the rank-one cells at h = 2pq (nn) or
/// the rationally trivial cell at h = 2n-1 (n1n).
VerificationReport verify_lower_bound(int n, Family family, const CoefficientRing& ring,
                                      const VerifyContext& ctx = {});

/// Checks Kh(D^i) = Kh(E^{i-1})[shift] + Kh(D^{i-1}){1} cell by cell for
/// m in {n-1, n}. Over Z groups must match as a split sum. The Euler
/// characteristic identity, which holds unconditionally, is reported too.
VerificationReport verify_les_additivity(int n, int m, int i, const CoefficientRing& ring,
                                         const VerifyContext& ctx = {});

/// Poincare polynomials of T(n,n) and T(n+1,n) over Q against L_n and K_n.
VerificationReport verify_recursions(int n, const VerifyContext& ctx = {});

/// Associated graded Lee table of T(n,m) and s of every orientation split.
VerificationReport verify_filtration(int n, int m, const VerifyContext& ctx = {});

}  // namespace torkh
