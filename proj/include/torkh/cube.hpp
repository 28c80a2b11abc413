#pragma once

// The full cube of resolutions. Exponential in the crossing count; kept as
// an independent oracle for the scanning engine.

#include <array>
#include <cstdint>
#include <vector>

#include "torkh/complex.hpp"
#include "torkh/frobenius.hpp"
#include "torkh/links.hpp"

namespace torkh {

/// Circle label of every edge in the resolution `smoothing` (0/1 per
/// crossing). Circles are numbered by their smallest edge id.
std::vector<int> resolution_circles(const LinkDiagram& diag, const std::vector<int>& smoothing);

/// A pure tensor at one cube vertex: coeff * (x) labels[c] over the circles
/// of that resolution, each label being c1 * 1 + cX * X.
struct VertexChain {
  std::vector<int> smoothing;
  std::vector<std::array<std::int64_t, 2>> labels;
  std::int64_t coeff = 1;
};

/// Smoothing of the oriented resolution: 0 at positive crossings, 1 at
/// negative ones.
std::vector<int> oriented_smoothing(const LinkDiagram& diag);

/// Labels of the canonical generator of the diagram's own orientation, scaled
/// to integers: Lee uses 1+X and X-1, Bar-Natan uses X and 1-X. Circles that
/// share a crossing get different labels.
VertexChain canonical_vertex_chain(const LinkDiagram& diag, Theory theory);

struct CubeOptions {
  int max_crossings = 14;
};

/// Full cube complex with the global shift [-n_-]{n_+ - 2n_-}. Generators are
/// ordered by vertex (bit i = smoothing of crossing i), then by label mask
/// (bit c set = X on circle c). Entries are integers.
BigradedComplex khovanov_cube(const LinkDiagram& diag, Theory theory = Theory::Khovanov,
                              const CubeOptions& opts = {});

/// Expands vertex chains into the generator numbering of khovanov_cube.
Chain cube_chain(const LinkDiagram& diag, const std::vector<VertexChain>& parts);

}  // namespace torkh
