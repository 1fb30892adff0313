#include "edtk/filter.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "edtk/redt.hpp"

namespace edtk {
namespace {

void check_params(const FilterParams& p) {
  if (!std::isfinite(p.rho0) || !std::isfinite(p.kappa0) || p.rho0 < 0.0 || p.kappa0 < 0.0) {
    throw DomainError("filter thresholds must be finite and non-negative");
  }
}

double normalized_rho(double rho, double diameter) {
  // A one-cell shape has diameter 0; its single ball is as thick as it gets.
  if (diameter <= 0.0) return 1.0;
  return std::min(1.0, rho / diameter);
}

double bbox_diameter(const BinaryGrid& image) {
  const Extents& ext = image.extents();
  const std::size_t d = ext.dims();
  Coord lo(d, std::numeric_limits<std::int64_t>::max());
  Coord hi(d, std::numeric_limits<std::int64_t>::min());
  Coord c(d);
  for (std::uint64_t i = 0; i < image.size(); ++i) {
    if (image[i] == 0) continue;
    ext.coords_of(i, c);
    for (std::size_t k = 0; k < d; ++k) {
      lo[k] = std::min(lo[k], c[k]);
      hi[k] = std::max(hi[k], c[k]);
    }
  }
  double sum = 0.0;
  for (std::size_t k = 0; k < d; ++k) {
    if (hi[k] < lo[k]) return 0.0;
    const auto span = static_cast<double>(hi[k] - lo[k]);
    sum += span * span;
  }
  return std::sqrt(sum);
}

// The farthest pair of a point set is a pair of convex hull vertices, and
// every hull vertex is an end of some axis-0 run of foreground cells, so
// only the first and last foreground cell of each row take part.
double exact_diameter(const BinaryGrid& image) {
  const Extents& ext = image.extents();
  const std::size_t d = ext.dims();
  std::vector<std::int64_t> ends;
  Coord c(d);
  for (std::uint64_t r = 0; r < row_count(ext, 0); ++r) {
    const Row line = row(ext, 0, r);
    std::int64_t first = -1;
    std::int64_t last = -1;
    for (std::int64_t i = 0; i < line.length; ++i) {
      if (image[line.at(i)] == 0) continue;
      if (first < 0) first = i;
      last = i;
    }
    if (first < 0) continue;
    for (std::int64_t i : {first, last}) {
      ext.coords_of(line.at(i), c);
      ends.insert(ends.end(), c.begin(), c.end());
      if (first == last) break;
    }
  }
  const std::size_t count = ends.size() / d;
  std::int64_t best = 0;
  for (std::size_t a = 0; a < count; ++a) {
    for (std::size_t b = a + 1; b < count; ++b) {
      std::int64_t s = 0;
      for (std::size_t k = 0; k < d; ++k) {
        const std::int64_t delta = ends[a * d + k] - ends[b * d + k];
        s += delta * delta;
      }
      best = std::max(best, s);
    }
  }
  return std::sqrt(static_cast<double>(best));
}

}  // namespace

double shape_diameter(const BinaryGrid& image, DiameterMode mode) {
  return mode == DiameterMode::bbox ? bbox_diameter(image) : exact_diameter(image);
}

Measurement measure(const BallSet& medial, const BinaryGrid& image, DiameterMode mode,
                    unsigned threads) {
  const Extents& ext = image.extents();
  Measurement m;
  m.dims = ext.dims();
  m.foreground = foreground_count(image);
  if (m.foreground == 0) throw DomainError("cannot measure balls of an empty shape");
  if (medial.empty()) throw ContractViolation("empty ball set cannot reconstruct a non-empty shape");
  m.diameter_bbox = bbox_diameter(image);
  m.diameter_exact = exact_diameter(image);
  m.mode = mode;

  const PowerField field = power_labeling(medial, ext, threads);
  std::vector<std::uint64_t> kappa(medial.size(), 0);
  for (std::uint64_t i = 0; i < field.value.size(); ++i) {
    if (field.value[i] > 0) ++kappa[field.owner[i]];
  }
  m.balls.reserve(medial.size());
  for (std::size_t b = 0; b < medial.size(); ++b) {
    MeasuredBall mb;
    const auto c = medial.center(b);
    mb.center.assign(c.begin(), c.end());
    mb.sq_radius = medial.sq_radius(b);
    mb.rho = std::sqrt(static_cast<double>(mb.sq_radius));
    mb.kappa = kappa[b];
    mb.kappa_norm = static_cast<double>(mb.kappa) / static_cast<double>(m.foreground);
    mb.rho_norm = normalized_rho(mb.rho, m.diameter());
    m.balls.push_back(std::move(mb));
  }
  return m;
}

void renormalize(Measurement& m, DiameterMode mode) {
  m.mode = mode;
  for (MeasuredBall& b : m.balls) b.rho_norm = normalized_rho(b.rho, m.diameter());
}

BallSet filter(const Measurement& m, const FilterParams& params) {
  check_params(params);
  BallSet out(m.dims);
  for (const MeasuredBall& b : m.balls) {
    if (b.rho_norm >= params.rho0 && b.kappa_norm >= params.kappa0) {
      out.add(b.center, b.sq_radius);
    }
  }
  return out;
}

FilteredShape filtered_reconstruct(const Measurement& m, const FilterParams& params,
                                   const Extents& extents, unsigned threads) {
  BallSet kept = filter(m, params);
  FilteredShape out{reconstruct(kept, extents, threads), std::move(kept), 0, 0};
  const std::uint64_t covered = foreground_count(out.image);
  out.lost_cells = m.foreground > covered ? m.foreground - covered : 0;
  for (const MeasuredBall& b : m.balls) {
    if (!(b.rho_norm >= params.rho0 && b.kappa_norm >= params.kappa0)) {
      out.removed_kappa += b.kappa;
    }
  }
  return out;
}

}  // namespace edtk
