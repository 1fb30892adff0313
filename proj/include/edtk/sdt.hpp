#pragma once

#include <cstddef>
#include <span>

#include "edtk/balls.hpp"
#include "edtk/grid.hpp"

namespace edtk {

/// Marker stored in every cell of a distance map whose image has no
/// background: max_sqdist() + 1, larger than any finite squared distance.
inline std::int64_t inf_sentinel(const Extents& extents) { return extents.max_sqdist() + 1; }

struct SdtResult {
  ScalarGrid dist;
  bool infinite = false;
};

/// Exact squared Euclidean distance from every cell to the nearest
/// background cell. One exact 1D transform along the first axis, then a
/// lower parabola envelope along each remaining axis. O(N).
SdtResult sdt(const BinaryGrid& image, unsigned threads = 1);

/// Same map computed with the separable passes in `axis_order` (a
/// permutation of 0..d-1). Values do not depend on the order.
SdtResult sdt(const BinaryGrid& image, std::span<const std::size_t> axis_order,
              unsigned threads = 1);

/// Linear index of a nearest background cell for every cell. Throws
/// DomainError when the image has no background.
SiteGrid voronoi_labeling(const BinaryGrid& image, unsigned threads = 1);

/// One ball (p, dist(p)) per foreground cell p, in linear-index order.
BallSet balls_of(const BinaryGrid& image, const SdtResult& distances);

}  // namespace edtk
