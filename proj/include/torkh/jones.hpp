#pragma once

// Polynomial invariants derived from homology tables, plus an independent
// Kauffman-bracket computation of the unnormalized Jones polynomial.

#include <cstddef>
#include <map>

#include "torkh/complex.hpp"
#include "torkh/laurent.hpp"
#include "torkh/links.hpp"

namespace torkh {

/// Sum of dim * t^h q^q over a field-coefficient table.
LaurentPoly2 poincare(const BigradedTable& table);

/// Graded Euler characteristic sum (-1)^h q^j rank Kh^{h,j}.
LaurentPoly2 euler_characteristic(const BigradedTable& table);

/// State sum (-1)^{n_-} q^{n_+ - 2n_-} sum_s (-q)^{r(s)} (q + q^{-1})^{#circles(s)},
/// evaluated crossing by crossing over planar boundary matchings, so its
/// cost is governed by the tangle width rather than 2^c. Throws ResourceLimit
/// if more than `max_states` boundary matchings are alive at once.
LaurentPoly2 jones_kauffman(const LinkDiagram& diag, std::size_t max_states = 1'000'000);

/// Literal enumeration of all 2^c states; refuses c > 22.
LaurentPoly2 jones_state_sum_naive(const LinkDiagram& diag);

/// Lowest quantum degree with nonzero homology in each homological degree.
struct MinQProfile {
  std::map<int, int> finite;
  ExtInt at(int h) const;
};
MinQProfile min_q_profile(const BigradedTable& table);

}  // namespace torkh
