#include "edtk/redt.hpp"

#include "separable.hpp"

namespace edtk {

PowerField redt_map(const BallSet& balls, const Extents& extents, unsigned threads) {
  const std::vector<std::uint64_t> centers = validate_balls(balls, extents);
  // Cells without a ball seed no parabola at all: they start far below any
  // ball contribution and never win a row holding a real parabola.
  PowerField field{ScalarGrid(extents, no_ball_value(extents)), SiteGrid(extents, kNoSite)};
  for (std::size_t i = 0; i < balls.size(); ++i) {
    field.value[centers[i]] = balls.sq_radius(i);
    field.owner[centers[i]] = i;
  }
  for (std::size_t axis = 0; axis < extents.dims(); ++axis) {
    detail::envelope_pass(field.value, &field.owner, axis, detail::EnvelopeKind::upper,
                          threads);
  }
  return field;
}

PowerField power_labeling(const BallSet& balls, const Extents& extents, unsigned threads) {
  return redt_map(balls, extents, threads);
}

BinaryGrid reconstruct(const BallSet& balls, const Extents& extents, unsigned threads) {
  const PowerField field = redt_map(balls, extents, threads);
  BinaryGrid image(extents, 0);
  for (std::uint64_t i = 0; i < image.size(); ++i) image[i] = field.value[i] > 0 ? 1 : 0;
  return image;
}

}  // namespace edtk
