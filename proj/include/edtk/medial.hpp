#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "edtk/balls.hpp"
#include "edtk/grid.hpp"

namespace edtk {

/// Centers of the SDT paraboloids that reach the upper envelope at a
/// positive height, with their SDT squared radii, in linear-index order.
/// Reconstructs the image exactly. Throws DomainError when the image has
/// no background.
BallSet sk_extract(const BinaryGrid& image, unsigned threads = 1);

/// Which balls populate a row during the reduction.
enum class Reduction {
  intersect,  ///< every ball meeting the row, cut to its chord
  centers,    ///< only balls centered on the row
};

/// Chord of a ball on one row: the ball's lattice points on that row form
/// the closed interval [left, right] along the row axis. Chords are not cut
/// at the grid boundary.
struct RowParabola {
  std::size_t ball = 0;
  std::int64_t apex = 0;
  /// r - (squared distance from the center to the row).
  std::int64_t r_eff = 0;
  std::int64_t left = 0;
  std::int64_t right = 0;
  bool doubled = false;
};

/// Largest R with R^2 < r_eff, i.e. the half-width of the chord. r_eff >= 1.
std::int64_t chord_half_width(std::int64_t r_eff);

struct ReductionStats {
  std::uint64_t rows = 0;
  std::uint64_t emitted = 0;
  std::uint64_t pushes = 0;
};

/// Greedy reduction of one row. Sorts `parabolas` by (left ascending,
/// right descending), merges identical chords into one survivor flagged
/// `doubled`, then keeps a chord unless the last kept chord contains it.
/// Returns the kept chords in scan order.
std::vector<RowParabola> reduce_row(std::span<RowParabola> parabolas,
                                    ReductionStats* stats = nullptr);

/// Removes from `sk` every ball that does not keep an undoubled chord on
/// at least one row of at least one axis. Order of `sk` is preserved.
BallSet rdma_reduce(const BallSet& sk, const Extents& extents,
                    Reduction mode = Reduction::intersect, ReductionStats* stats = nullptr,
                    unsigned threads = 1);

/// Replaces every ball whose lattice point set lies inside another SDT ball
/// of `image` by a maximal such container, following the largest container
/// until none is left. Duplicates merge; the result is in linear-index
/// order and reconstructs the same union whenever the input balls lie
/// inside the image. Throws DomainError when the image has no background.
BallSet promote_to_maximal(const BallSet& balls, const BinaryGrid& image, unsigned threads = 1);

/// Adds back to `reduced` the Sk ball owning each foreground cell that
/// `reduced` leaves uncovered, using the power labeling of `sk`. Returns
/// `reduced` unchanged when it already covers the image. `reduced` must be
/// a subset of `sk`.
BallSet restore_coverage(const BallSet& reduced, const BallSet& sk, const BinaryGrid& image,
                         unsigned threads = 1);

/// rdma_reduce(sk_extract(image)). With `repair` set, restore_coverage and
/// then promote_to_maximal follow, which makes the result exactly
/// reversible and discretely maximal. An image without foreground yields
/// an empty set.
BallSet rdma(const BinaryGrid& image, Reduction mode = Reduction::intersect,
             unsigned threads = 1, bool repair = true);

}  // namespace edtk
