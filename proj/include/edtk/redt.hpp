#pragma once

#include "edtk/balls.hpp"
#include "edtk/grid.hpp"

namespace edtk {

/// Upper envelope of the paraboloids r_i - |p - c_i|^2 of a ball set.
///
/// `value(p)` is the maximum over all balls, so p lies in some ball iff
/// value(p) > 0; `owner(p)` is the index of the ball attaining it. Read as
/// a power diagram, owner is the power label of p: the power
/// |p - c|^2 - r is the negated paraboloid, minimal where the paraboloid is
/// maximal.
struct PowerField {
  ScalarGrid value;
  SiteGrid owner;
};

/// Value stored in every cell when the ball set is empty. It is also below
/// anything a real ball produces anywhere on the grid.
inline std::int64_t no_ball_value(const Extents& extents) {
  return -2 * (extents.max_sqdist() + 1);
}

/// Separable upper-envelope passes, one per axis, carrying the owning ball
/// through each pass. Intermediate values are signed and never clamped.
/// Throws DomainError for centers outside the grid or shared centers.
PowerField redt_map(const BallSet& balls, const Extents& extents, unsigned threads = 1);

/// Same computation as redt_map, named for its power-diagram reading.
PowerField power_labeling(const BallSet& balls, const Extents& extents, unsigned threads = 1);

/// Union of the open discrete balls {p : |p - c|^2 < r}.
BinaryGrid reconstruct(const BallSet& balls, const Extents& extents, unsigned threads = 1);

}  // namespace edtk
