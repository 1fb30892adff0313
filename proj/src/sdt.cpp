#include "edtk/sdt.hpp"

#include <algorithm>
#include <numeric>

#include "separable.hpp"

namespace edtk {
namespace {

// Two-scan 1D distance along `axis`, squared in place. Rows without
// background get the sentinel. When `site` is given it receives the linear
// index of the nearest background cell on the row (left one on ties).
void first_pass(const BinaryGrid& image, ScalarGrid& dist, SiteGrid* site, std::size_t axis,
                unsigned threads) {
  const Extents& ext = image.extents();
  const std::int64_t n = ext.size(axis);
  const std::int64_t inf = inf_sentinel(ext);
  parallel_chunks(row_count(ext, axis), threads, [&](std::uint64_t begin, std::uint64_t end) {
    std::vector<std::int64_t> g(n);
    std::vector<std::int64_t> nearest(n);
    for (std::uint64_t r = begin; r < end; ++r) {
      const Row line = row(ext, axis, r);
      // `n` doubles as "no background seen yet"; real 1D distances are < n.
      std::int64_t last = -1;
      for (std::int64_t i = 0; i < n; ++i) {
        if (image[line.at(i)] == 0) last = i;
        g[i] = last < 0 ? n : i - last;
        nearest[i] = last;
      }
      last = -1;
      for (std::int64_t i = n - 1; i >= 0; --i) {
        if (image[line.at(i)] == 0) last = i;
        if (last >= 0 && last - i < g[i]) {
          g[i] = last - i;
          nearest[i] = last;
        }
      }
      for (std::int64_t i = 0; i < n; ++i) {
        dist[line.at(i)] = g[i] >= n ? inf : g[i] * g[i];
        if (site != nullptr) {
          (*site)[line.at(i)] = nearest[i] < 0 ? kNoSite : line.at(nearest[i]);
        }
      }
    }
  });
}

std::vector<std::size_t> identity_order(std::size_t dims) {
  std::vector<std::size_t> order(dims);
  std::iota(order.begin(), order.end(), std::size_t{0});
  return order;
}

void check_order(std::span<const std::size_t> order, std::size_t dims) {
  std::vector<std::size_t> sorted(order.begin(), order.end());
  std::sort(sorted.begin(), sorted.end());
  if (sorted != identity_order(dims)) {
    throw ContractViolation("axis order is not a permutation of the grid axes");
  }
}

bool has_background(const BinaryGrid& image) {
  const auto cells = image.cells();
  return std::any_of(cells.begin(), cells.end(), [](std::uint8_t v) { return v == 0; });
}

}  // namespace

SdtResult sdt(const BinaryGrid& image, unsigned threads) {
  const auto order = identity_order(image.extents().dims());
  return sdt(image, order, threads);
}

SdtResult sdt(const BinaryGrid& image, std::span<const std::size_t> axis_order,
              unsigned threads) {
  const Extents& ext = image.extents();
  check_order(axis_order, ext.dims());
  const std::int64_t inf = inf_sentinel(ext);
  SdtResult result{ScalarGrid(ext, 0), !has_background(image)};
  if (result.infinite) {
    std::fill(result.dist.cells().begin(), result.dist.cells().end(), inf);
    return result;
  }
  first_pass(image, result.dist, nullptr, axis_order[0], threads);
  for (std::size_t k = 1; k < axis_order.size(); ++k) {
    detail::envelope_pass(result.dist, nullptr, axis_order[k], detail::EnvelopeKind::lower,
                          threads, inf);
  }
  return result;
}

SiteGrid voronoi_labeling(const BinaryGrid& image, unsigned threads) {
  if (!has_background(image)) {
    throw DomainError("Voronoi labeling needs at least one background cell");
  }
  const Extents& ext = image.extents();
  const std::int64_t inf = inf_sentinel(ext);
  ScalarGrid dist(ext, 0);
  SiteGrid site(ext, kNoSite);
  first_pass(image, dist, &site, 0, threads);
  for (std::size_t axis = 1; axis < ext.dims(); ++axis) {
    detail::envelope_pass(dist, &site, axis, detail::EnvelopeKind::lower, threads, inf);
  }
  return site;
}

BallSet balls_of(const BinaryGrid& image, const SdtResult& distances) {
  if (distances.infinite) {
    throw DomainError("distance map is infinite: the image has no background");
  }
  if (!(image.extents() == distances.dist.extents())) {
    throw ContractViolation("distance map extents differ from the image");
  }
  const Extents& ext = image.extents();
  BallSet balls(ext.dims());
  Coord c(ext.dims());
  for (std::uint64_t i = 0; i < image.size(); ++i) {
    if (image[i] == 0) continue;
    ext.coords_of(i, c);
    balls.add(c, distances.dist[i]);
  }
  return balls;
}

}  // namespace edtk
