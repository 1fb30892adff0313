#include "edtk/oracle.hpp"

#include <limits>
#include <string>

namespace edtk::oracle {
namespace {

void guard(const Extents& ext, std::uint64_t limit, const char* what) {
  if (ext.cell_count() > limit) {
    throw DomainError(std::string(what) + ": grid of " + std::to_string(ext.cell_count()) +
                      " cells exceeds the oracle limit of " + std::to_string(limit));
  }
}

std::int64_t squared_distance(std::span<const std::int64_t> a, std::span<const std::int64_t> b) {
  std::int64_t s = 0;
  for (std::size_t k = 0; k < a.size(); ++k) s += (a[k] - b[k]) * (a[k] - b[k]);
  return s;
}

std::vector<Coord> all_coords(const Extents& ext) {
  std::vector<Coord> out(ext.cell_count());
  for (std::uint64_t i = 0; i < ext.cell_count(); ++i) out[i] = ext.coords_of(i);
  return out;
}

}  // namespace

ScalarGrid brute_sdt(const BinaryGrid& image) {
  const Extents& ext = image.extents();
  guard(ext, kMaxSdtCells, "brute_sdt");
  const auto coords = all_coords(ext);
  std::vector<std::uint64_t> background;
  for (std::uint64_t i = 0; i < image.size(); ++i) {
    if (image[i] == 0) background.push_back(i);
  }
  ScalarGrid out(ext, ext.max_sqdist() + 1);
  if (background.empty()) return out;
  for (std::uint64_t p = 0; p < image.size(); ++p) {
    std::int64_t best = std::numeric_limits<std::int64_t>::max();
    for (std::uint64_t b : background) best = std::min(best, squared_distance(coords[p], coords[b]));
    out[p] = best;
  }
  return out;
}

ScalarGrid brute_redt(const BallSet& balls, const Extents& ext) {
  guard(ext, kMaxSdtCells, "brute_redt");
  ScalarGrid out(ext, -2 * (ext.max_sqdist() + 1));
  if (balls.empty()) return out;
  Coord p(ext.dims());
  for (std::uint64_t i = 0; i < ext.cell_count(); ++i) {
    ext.coords_of(i, p);
    std::int64_t best = std::numeric_limits<std::int64_t>::min();
    for (std::size_t b = 0; b < balls.size(); ++b) {
      best = std::max(best, balls.sq_radius(b) - squared_distance(p, balls.center(b)));
    }
    out[i] = best;
  }
  return out;
}

BinaryGrid brute_union(const BallSet& balls, const Extents& ext) {
  guard(ext, kMaxSdtCells, "brute_union");
  BinaryGrid out(ext, 0);
  Coord p(ext.dims());
  for (std::uint64_t i = 0; i < ext.cell_count(); ++i) {
    ext.coords_of(i, p);
    for (std::size_t b = 0; b < balls.size(); ++b) {
      if (squared_distance(p, balls.center(b)) < balls.sq_radius(b)) {
        out[i] = 1;
        break;
      }
    }
  }
  return out;
}

BallSet brute_dma(const BinaryGrid& image) {
  const Extents& ext = image.extents();
  guard(ext, kMaxDmaCells, "brute_dma");
  const ScalarGrid dist = brute_sdt(image);
  const auto coords = all_coords(ext);
  const std::size_t d = ext.dims();

  std::vector<std::uint64_t> centers;
  for (std::uint64_t i = 0; i < image.size(); ++i) {
    if (image[i] != 0) centers.push_back(i);
  }
  BallSet out(d);
  if (!centers.empty() && dist[centers.front()] > ext.max_sqdist()) {
    throw DomainError("brute_dma: image has no background");
  }

  // Lattice offsets o with |o|^2 < r, enumerated over the bounding cube.
  auto offsets = [d](std::int64_t r) {
    std::int64_t reach = 0;
    while ((reach + 1) * (reach + 1) < r) ++reach;
    std::vector<Coord> out;
    Coord o(d, -reach);
    while (true) {
      std::int64_t s = 0;
      for (auto x : o) s += x * x;
      if (s < r) out.push_back(o);
      std::size_t k = 0;
      while (k < d && o[k] == reach) o[k++] = -reach;
      if (k == d) break;
      ++o[k];
    }
    return out;
  };

  Coord q(d);
  for (std::size_t a = 0; a < centers.size(); ++a) {
    const Coord& ca = coords[centers[a]];
    const std::vector<Coord> points = offsets(dist[centers[a]]);
    bool maximal = true;
    for (std::size_t b = 0; b < centers.size() && maximal; ++b) {
      if (a == b) continue;
      const Coord& cb = coords[centers[b]];
      const std::int64_t rb = dist[centers[b]];
      bool covered = true;
      for (const Coord& o : points) {
        for (std::size_t k = 0; k < d; ++k) q[k] = ca[k] + o[k];
        if (squared_distance(q, cb) >= rb) {
          covered = false;
          break;
        }
      }
      if (covered) maximal = false;
    }
    if (maximal) out.add(ca, dist[centers[a]]);
  }
  return out;
}

PowerLabels brute_power_label(const BallSet& balls, const Extents& ext) {
  guard(ext, kMaxSdtCells, "brute_power_label");
  PowerLabels out{SiteGrid(ext, kNoSite), BinaryGrid(ext, 0),
                  ScalarGrid(ext, -2 * (ext.max_sqdist() + 1))};
  Coord p(ext.dims());
  for (std::uint64_t i = 0; i < ext.cell_count(); ++i) {
    ext.coords_of(i, p);
    std::int64_t best = std::numeric_limits<std::int64_t>::max();
    for (std::size_t b = 0; b < balls.size(); ++b) {
      const std::int64_t power = squared_distance(p, balls.center(b)) - balls.sq_radius(b);
      if (power < best) {
        best = power;
        out.label[i] = b;
        out.tie[i] = 0;
      } else if (power == best) {
        out.tie[i] = 1;
      }
    }
    if (!balls.empty()) out.value[i] = -best;
  }
  return out;
}

}  // namespace edtk::oracle
