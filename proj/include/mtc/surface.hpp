#pragma once

// Labeled marked surfaces at the combinatorial level: each connected component
// is a genus with an ordered list of labeled points; the surface carries an
// integer weight for anomaly bookkeeping. Directions at points and Lagrangian
// subspaces are not modeled.

#include "mtc/modular_data.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace mtc {

struct MarkedPoint {
  int id = 0;
  Label label = 0;
  friend bool operator==(const MarkedPoint&, const MarkedPoint&) = default;
};

struct Component {
  int genus = 0;
  std::vector<MarkedPoint> points;
  friend bool operator==(const Component&, const Component&) = default;
};

struct Surface {
  std::vector<Component> components;
  std::int64_t weight = 0;

  bool empty() const { return components.empty(); }
  int point_count() const;
  /// Largest point id, or -1 without points.
  int max_id() const;
  /// (component index, position) of a point; throws std::out_of_range.
  std::pair<int, int> locate(int id) const;
  Label label_of(int id) const;
  /// Every label in component order.
  std::vector<Label> labels() const;

  friend bool operator==(const Surface&, const Surface&) = default;
};

/// Throws std::invalid_argument on negative genus or repeated point ids.
void check_surface(const Surface& s);

/// Connected surface with points numbered 0, 1, ... in order.
Surface connected_surface(int genus, std::vector<Label> labels, std::int64_t weight = 0);
/// Components given as (genus, labels), points numbered consecutively.
Surface make_surface(const std::vector<std::pair<int, std::vector<Label>>>& components, std::int64_t weight = 0);

/// Components of b follow those of a; if ids collide, b's points are renumbered
/// max_id(a)+1, max_id(a)+2, ... in order.
Surface disjoint_union(const Surface& a, const Surface& b);

/// Labels replaced by their duals, weight negated.
Surface reverse_orientation(const Surface& a, std::span<const Label> dual);

/// Removes points p and q (label(p) must be dual to label(q)). On one component
/// the genus grows by one; on two components they merge at the lower index,
/// keeping the remaining points of p's component before those of q's.
Surface glue_points(const Surface& a, int p, int q, std::span<const Label> dual);

struct NonSeparating {};
struct Separating {
  int genus_first = 0;
  std::vector<int> points_first;  // ids that stay on the first piece
};
using Cut = std::variant<NonSeparating, Separating>;

struct Factorization {
  Surface surface;
  int plus = 0;   // new point labeled i
  int minus = 0;  // new point labeled dual(i)
};

/// Cuts a component along a curve and labels the two new points (i, dual(i)).
/// Non-separating cuts lower the genus by one and append both points to the
/// component. Separating cuts split it into a first piece (genus_first and the
/// listed points, then the plus point) kept in place, and a second piece (the
/// rest, then the minus point) inserted right after it. New ids are
/// max_id()+1 and max_id()+2.
Factorization factorize(const Surface& a, int component, Label i, const Cut& cut, std::span<const Label> dual);

/// Equality up to point ids and point order: same weight and the same multiset
/// of (genus, sorted labels) components.
bool same_shape(const Surface& a, const Surface& b);

/// Symplectic multiplicity: number of points whose label has indicator -1.
int symplectic_multiplicity(const Surface& a, std::span<const int> fs);

}  // namespace mtc
