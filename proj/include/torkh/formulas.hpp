#pragma once

// Closed formulas and recursions for torus links, as pure arithmetic.

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "torkh/complex.hpp"
#include "torkh/laurent.hpp"

namespace torkh {

/// s of T(n,m) with p components reversed against q others (p+q = gcd).
/// Negative m selects the mirror family.
int s_torus(int n, int m, int p, int q);

/// h -> dim of Lee homology of the positive torus link T(n,m).
std::map<int, std::int64_t> lee_rank_torus(int n, int m);

/// Predicted associated graded Lee dimensions of T(n,m), m > 0.
BigradedTable gr_lee_torus(int n, int m);

/// The two staircase families: T(n,n) and T(n+1,n).
enum class Family { nn, n1n };

int h_max(int n, Family f);
ExtInt q_nn(int n, int h);
ExtInt q_n1n(int n, int h);

struct StaircaseFn {
  int n = 0;
  Family family = Family::nn;
  ExtInt operator()(int h) const { return family == Family::nn ? q_nn(n, h) : q_n1n(n, h); }
};

/// dim of the two-row irreducible (d-r, r): C(d,r) - C(d,r-1).
std::int64_t rep_dim(int d, int r);
BigInt binomial(int n, int k);
BigInt catalan(int k);

/// Conjectural Poincare polynomials: K_n of T(n+1,n), L_n of T(n,n).
LaurentPoly2 K_poly(int n);
LaurentPoly2 L_poly(int n);

struct RelationViolation {
  std::string relation;
  int h = 0;
  ExtInt lhs = 0;
  ExtInt rhs = 0;
};

struct RelationReport {
  int n = 0;
  std::vector<RelationViolation> violations;
  bool ok() const { return violations.empty(); }
};

/// Staircase values used by check_q_relations; swap in a perturbed provider
/// to make sure the checker can fail.
struct StaircaseProvider {
  std::function<ExtInt(int, int)> nn = q_nn;
  std::function<ExtInt(int, int)> n1n = q_n1n;
};

/// Evaluates the six shift-and-truncate relations between q_nn and q_n1n
/// (and their strictness addenda) over the whole finite support.
RelationReport check_q_relations(int n, const StaircaseProvider& prov = {});

struct TwistReport {
  int twists = 0;        // (m' - m) / n full twists
  std::int64_t value = 0;  // normalized difference of s
  std::int64_t lo = 0;
  std::int64_t hi = 0;
  bool ok() const { return lo <= value && value <= hi; }
};

/// Checks the twist bound on T(n,m)_{p,q} -> T(n,m')_{p,q}: m' > m, m' = m mod n.
/// m = 0 stands for the n-component unlink.
TwistReport twist_bound_check(int n, int m, int m_prime, int p, int q);

}  // namespace torkh
