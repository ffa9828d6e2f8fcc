#pragma once

// Affine n-diagrams: periodic non-crossing matchings on two rows of nodes of
// the universal cover of a cylinder, plus a count of non-contractible loops.
//
// Nodes are addressed by their universal-cover position. A diagram stores
// the partner of every node at window positions 1..n on each row; the rest
// of the matching follows by translation, partner(x + n) = partner(x) + n.

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "afftl/coxeter_words.hpp"

namespace afftl {

enum class Side : std::uint8_t { top, bottom };

inline Side opposite(Side s) noexcept {
  return s == Side::top ? Side::bottom : Side::top;
}

struct NodeRef {
  Side side;
  int pos;

  NodeRef shifted(int d) const noexcept { return {side, pos + d}; }
  friend auto operator<=>(const NodeRef&, const NodeRef&) = default;
};

// Unchecked partner arrays, as loaded from a file or assembled by hand.
struct RawDiagram {
  int n = 0;
  std::vector<NodeRef> top;     // top[i-1]: partner of top node i
  std::vector<NodeRef> bottom;  // bottom[i-1]: partner of bottom node i
  int loops = 0;

  friend bool operator==(const RawDiagram&, const RawDiagram&) = default;
};

enum class ViolationKind {
  bad_rank,
  bad_size,
  negative_loops,
  not_involution,
  fixed_point,
  crossing,
  loops_with_vertical
};

struct Violation {
  ViolationKind kind;
  std::string detail;
};

const char* to_string(ViolationKind k) noexcept;

// Empty iff the raw data is a valid affine n-diagram.
std::vector<Violation> validate(const RawDiagram& d);

// A valid affine n-diagram. Every instance satisfies validate() by
// construction.
class AffineDiagram {
 public:
  // Throws Error(invalid_diagram) listing the violations.
  static AffineDiagram from_raw(RawDiagram raw);

  static AffineDiagram identity(int n);
  // E'_{s_i}: arcs (i, i+1) on both rows, everything else vertical.
  static AffineDiagram generator(int n, int i);

  int n() const noexcept { return data_.n; }
  int loops() const noexcept { return data_.loops; }
  const RawDiagram& raw() const noexcept { return data_; }

  NodeRef partner(NodeRef x) const noexcept;

  friend bool operator==(const AffineDiagram&, const AffineDiagram&) = default;

 private:
  explicit AffineDiagram(RawDiagram raw) : data_(std::move(raw)) {}
  friend struct DiagramBuilder;
  RawDiagram data_;
};

struct ProductResult {
  AffineDiagram diagram;
  int contractible_loops;  // the exponent of [2]
};

// a on top of b. Throws Error(mismatched_rank) for different n.
ProductResult multiply(const AffineDiagram& a, const AffineDiagram& b);

// Top and bottom rows exchanged; reverses products.
AffineDiagram flip(const AffineDiagram& d);

// Crossings of the geodesic drawing with the vertical line k + 1/2, each
// long horizontal edge counting once.
int nu(const AffineDiagram& d, int k);

bool is_admissible(const AffineDiagram& d);

// Half the total crossing count. Throws Error(inadmissible).
int length(const AffineDiagram& d);

// Classes i with nodes i and i+1 on `side` joined by an arc of minimal
// length. Throws Error(inadmissible).
GeneratorSet descent_arcs(const AffineDiagram& d, Side side);

// Short horizontal edges on one row, one lift (p, q) per orbit with
// 1 <= p <= n and p < q.
std::vector<std::pair<int, int>> short_arcs(const AffineDiagram& d, Side side);

int vertical_edge_count(const AffineDiagram& d);

// Injective serialization of (n, window partners, loops).
std::string canonical_key(const AffineDiagram& d);

}  // namespace afftl
