#pragma once

// Thickness / covering measurements of medial balls and threshold
// filtering.
//
// thickness rho = sqrt(r), the ball radius in cell lengths.
// covering kappa = number of shape cells whose power label is the ball.
//
// Both are normalized to [0, 1]: rho by the shape diameter, kappa by the
// number of foreground cells. Because power cells partition the covered
// cells, removing a ball loses at most its kappa cells.

#include <cstdint>
#include <vector>

#include "edtk/balls.hpp"
#include "edtk/grid.hpp"

namespace edtk {

enum class DiameterMode {
  bbox,   ///< length of the foreground bounding-box diagonal
  exact,  ///< largest distance between two foreground cells
};

double shape_diameter(const BinaryGrid& image, DiameterMode mode);

struct MeasuredBall {
  Coord center;
  std::int64_t sq_radius = 0;
  double rho = 0.0;
  std::uint64_t kappa = 0;
  double rho_norm = 0.0;
  double kappa_norm = 0.0;
};

struct Measurement {
  std::size_t dims = 0;
  std::uint64_t foreground = 0;
  double diameter_bbox = 0.0;
  double diameter_exact = 0.0;
  DiameterMode mode = DiameterMode::bbox;
  std::vector<MeasuredBall> balls;

  double diameter() const { return mode == DiameterMode::bbox ? diameter_bbox : diameter_exact; }
};

struct FilterParams {
  double rho0 = 0.0;
  double kappa0 = 0.0;
};

/// Measures every ball of `medial`, which must reconstruct `image`.
/// Throws DomainError when the image has no foreground and
/// ContractViolation when `medial` is empty but the image is not.
Measurement measure(const BallSet& medial, const BinaryGrid& image,
                    DiameterMode mode = DiameterMode::bbox, unsigned threads = 1);

/// Recomputes rho_norm for another diameter mode.
void renormalize(Measurement& m, DiameterMode mode);

/// Balls with rho_norm >= rho0 and kappa_norm >= kappa0, in input order.
BallSet filter(const Measurement& m, const FilterParams& params);

struct FilteredShape {
  BinaryGrid image;
  BallSet balls;
  /// foreground cells of the original shape missing from `image`.
  std::uint64_t lost_cells = 0;
  /// Sum of kappa over the removed balls; an upper bound for lost_cells.
  std::uint64_t removed_kappa = 0;
};

FilteredShape filtered_reconstruct(const Measurement& m, const FilterParams& params,
                                   const Extents& extents, unsigned threads = 1);

}  // namespace edtk
