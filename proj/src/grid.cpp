#include "edtk/grid.hpp"

#include <algorithm>
#include <sstream>

namespace edtk {

Extents::Extents(std::initializer_list<std::int64_t> sizes)
    : Extents(std::vector<std::int64_t>(sizes)) {}

Extents::Extents(std::vector<std::int64_t> sizes) : sizes_(std::move(sizes)) {
  if (sizes_.empty() || sizes_.size() > kMaxDims) {
    throw BoundsError("dimension count must be in [1, 8], got " + std::to_string(sizes_.size()));
  }
  strides_.resize(sizes_.size());
  std::uint64_t count = 1;
  for (std::size_t k = 0; k < sizes_.size(); ++k) {
    const std::int64_t n = sizes_[k];
    if (n < 1 || n > kMaxAxisSize) {
      throw BoundsError("axis " + std::to_string(k) + " size " + std::to_string(n) +
                        " outside [1, 2^20]");
    }
    strides_[k] = count;
    const auto un = static_cast<std::uint64_t>(n);
    if (count > std::numeric_limits<std::uint64_t>::max() / un) {
      throw BoundsError("cell count of extents " + to_string() + " overflows 64 bits");
    }
    count *= un;
    max_sqdist_ += (n - 1) * (n - 1);
  }
  cell_count_ = count;
}

bool Extents::contains(std::span<const std::int64_t> coords) const {
  if (coords.size() != sizes_.size()) return false;
  for (std::size_t k = 0; k < coords.size(); ++k) {
    if (coords[k] < 0 || coords[k] >= sizes_[k]) return false;
  }
  return true;
}

std::uint64_t Extents::linear_index(std::span<const std::int64_t> coords) const {
  if (coords.size() != sizes_.size()) {
    throw BoundsError("expected " + std::to_string(sizes_.size()) + " coordinates, got " +
                      std::to_string(coords.size()));
  }
  std::uint64_t index = 0;
  for (std::size_t k = 0; k < coords.size(); ++k) {
    if (coords[k] < 0 || coords[k] >= sizes_[k]) {
      throw BoundsError("coordinate " + std::to_string(coords[k]) + " on axis " +
                        std::to_string(k) + " outside [0, " + std::to_string(sizes_[k]) + ")");
    }
    index += static_cast<std::uint64_t>(coords[k]) * strides_[k];
  }
  return index;
}

void Extents::coords_of(std::uint64_t index, std::span<std::int64_t> out) const {
  if (index >= cell_count_) {
    throw BoundsError("linear index " + std::to_string(index) + " outside grid " + to_string());
  }
  if (out.size() != sizes_.size()) throw BoundsError("coordinate buffer has wrong dimension");
  for (std::size_t k = 0; k < sizes_.size(); ++k) {
    const auto n = static_cast<std::uint64_t>(sizes_[k]);
    out[k] = static_cast<std::int64_t>(index % n);
    index /= n;
  }
}

Coord Extents::coords_of(std::uint64_t index) const {
  Coord c(sizes_.size());
  coords_of(index, c);
  return c;
}

std::string Extents::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t k = 0; k < sizes_.size(); ++k) os << (k ? "," : "") << sizes_[k];
  os << ')';
  return os.str();
}

std::uint64_t row_count(const Extents& extents, std::size_t axis) {
  if (axis >= extents.dims()) {
    throw BoundsError("axis " + std::to_string(axis) + " invalid for " +
                      std::to_string(extents.dims()) + "-dimensional extents");
  }
  return extents.cell_count() / static_cast<std::uint64_t>(extents.size(axis));
}

Row row(const Extents& extents, std::size_t axis, std::uint64_t number) {
  if (number >= row_count(extents, axis)) {
    throw BoundsError("row " + std::to_string(number) + " out of range on axis " +
                      std::to_string(axis));
  }
  // Cells with coordinate 0 on `axis` split into a low part (axes below)
  // and a high part (axes above).
  const std::uint64_t stride = extents.stride(axis);
  const auto n = static_cast<std::uint64_t>(extents.size(axis));
  const std::uint64_t low = number % stride;
  const std::uint64_t high = number / stride;
  return Row{low + high * stride * n, stride, extents.size(axis)};
}

std::vector<Row> rows(const Extents& extents, std::size_t axis) {
  const std::uint64_t count = row_count(extents, axis);
  std::vector<Row> out;
  out.reserve(count);
  for (std::uint64_t r = 0; r < count; ++r) out.push_back(row(extents, axis, r));
  return out;
}

std::uint64_t foreground_count(const BinaryGrid& image) {
  const auto cells = image.cells();
  return static_cast<std::uint64_t>(
      std::count_if(cells.begin(), cells.end(), [](std::uint8_t v) { return v != 0; }));
}

}  // namespace edtk
