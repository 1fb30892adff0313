#pragma once

// Brute-force references, straight from the definitions. Quadratic or
// worse; guarded against large inputs. Nothing here calls into the
// separable implementations.

#include <cstdint>

#include "edtk/balls.hpp"
#include "edtk/grid.hpp"

namespace edtk::oracle {

inline constexpr std::uint64_t kMaxSdtCells = 1'000'000;
inline constexpr std::uint64_t kMaxDmaCells = 100'000;

/// Minimum squared distance to a background cell; max_sqdist() + 1 in
/// every cell when there is no background.
ScalarGrid brute_sdt(const BinaryGrid& image);

/// Maximum of r - |p - c|^2 over all balls; -2 (max_sqdist() + 1) when
/// the set is empty.
ScalarGrid brute_redt(const BallSet& balls, const Extents& extents);

/// Union of the open balls, cell by cell.
BinaryGrid brute_union(const BallSet& balls, const Extents& extents);

/// SDT balls whose lattice point set {p in Z^d : |p - c|^2 < r} is
/// contained in no other SDT ball's point set. Points outside the grid
/// count, so two distinct balls never have equal point sets.
/// Linear-index order.
BallSet brute_dma(const BinaryGrid& image);

struct PowerLabels {
  /// Ball minimizing the power |p - c|^2 - r; smallest index on ties.
  SiteGrid label;
  /// 1 where two or more balls share the minimal power.
  BinaryGrid tie;
  /// Negated minimal power.
  ScalarGrid value;
};

PowerLabels brute_power_label(const BallSet& balls, const Extents& extents);

}  // namespace edtk::oracle
