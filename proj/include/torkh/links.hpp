#pragma once

// Link presentations: braid words, PD-style diagrams and the torus/D/E
// families built from them.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace torkh {

/// Word in the braid group on `strands` strands. Letter k > 0 is sigma_k,
/// letter -k is its inverse.
struct BraidWord {
  int strands = 1;
  std::vector<int> letters;

  /// Throws InvalidParameter unless strands >= 1 and every |letter| < strands.
  void validate() const;
  friend bool operator==(const BraidWord&, const BraidWord&) = default;
};

/// One crossing of a PD-style diagram.
///
/// `edges` lists the four incident edges counterclockwise, starting with the
/// incoming under-strand. The under-strand runs edges[0] -> edges[2]. For a
/// positive crossing the over-strand runs edges[3] -> edges[1]; for a negative
/// one edges[1] -> edges[3]. The 0-smoothing joins (0,1),(2,3); the
/// 1-smoothing joins (0,3),(1,2).
struct Crossing {
  std::array<int, 4> edges{};
  int sign = 1;
  friend bool operator==(const Crossing&, const Crossing&) = default;
};

/// Oriented planar link diagram. Edge ids are 0..edge_count()-1; every id is
/// either used by exactly two crossing slots or is a crossing-free loop.
struct LinkDiagram {
  std::vector<Crossing> crossings;
  std::vector<int> free_loops;

  int edge_count() const;
  int crossing_count() const { return static_cast<int>(crossings.size()); }
  int positive_crossings() const;
  int negative_crossings() const;

  /// Component label (0-based) of every edge. Components are numbered in
  /// increasing order of their smallest edge id.
  std::vector<int> edge_components() const;
  int component_count() const;

  /// Throws InvalidInput if the edge structure or orientations are inconsistent.
  void validate() const;
  friend bool operator==(const LinkDiagram&, const LinkDiagram&) = default;
};

/// Orientation-type data of T(n, m) with p components reversed against q.
struct TorusLinkParams {
  int n = 1;
  int m = 0;
  int d = 1;   // gcd(n, |m|)
  int n1 = 1;  // n / d
  int m1 = 0;  // |m| / d
  int p = 1;
  int q = 0;

  /// Validates n >= 1, m != 0 and p + q = gcd(n, |m|).
  static TorusLinkParams make(int n, int m, int p, int q);
};

BraidWord torus_braid(int n, int m);
BraidWord dlink_braid(int n, int m, int i);
LinkDiagram braid_closure(const BraidWord& b);

/// Replaces crossing `idx` by its 0- or 1-smoothing. The result is oriented
/// component-wise by following the direction of each component's smallest
/// surviving edge.
LinkDiagram resolve_crossing(const LinkDiagram& diag, int idx, int choice);

/// 1-resolution of the last crossing of closure(dlink_braid(n, m, i + 1)),
/// oriented so that it has 2n-3 (m = n-1) or 2n-2 (m = n) negative crossings.
LinkDiagram e_link_diagram(int n, int m, int i);

struct LinkingData {
  int count = 0;
  std::vector<std::vector<int>> linking;  // symmetric, zero diagonal
};
LinkingData components_and_linking(const LinkDiagram& diag);

struct BidegreeShift {
  int dh = 0;
  int dq = 0;
  friend bool operator==(const BidegreeShift&, const BidegreeShift&) = default;
};

/// Shift taking the Khovanov/Lee data of the diagram with the components in
/// `reversed` (0-based labels) flipped back to the data of the original.
BidegreeShift orientation_shift(const std::vector<std::vector<int>>& linking,
                                const std::vector<int>& reversed);

/// Reverses the orientation of the given components (0-based labels).
LinkDiagram reorient(const LinkDiagram& diag, const std::vector<int>& reversed);

LinkDiagram mirror(const LinkDiagram& diag);

/// Relabels edges by first appearance (crossing order, then slot order).
LinkDiagram canonical_relabel(const LinkDiagram& diag);

/// Stable 64-bit FNV-1a digest of the canonical serialization, as 16 hex chars.
std::string canonical_hash(const LinkDiagram& diag);

/// Textual link specification from the command line.
struct LinkSpec {
  LinkDiagram diagram;
  std::string text;
  std::optional<BraidWord> braid;  // set for braid/torus/dlink inputs
};

/// Parses `braid:<n>:<w1>,<w2>,...`, `torus:<n>,<m>`, `dlink:<n>,<m>,<i>`,
/// `elink:<n>,<m>,<i>` and `pd:[[a,b,c,d;s],...]` with s in {+,-}.
LinkSpec parse_link_spec(const std::string& text);

/// Parses `rev=1,3` (1-based labels) into 0-based component labels.
std::vector<int> parse_orientation_subset(const std::string& text);

std::string to_pd_string(const LinkDiagram& diag);

}  // namespace torkh
