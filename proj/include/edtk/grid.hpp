#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace edtk {

/// Coordinate or size outside the addressable range of a grid.
class BoundsError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// Input is well-formed but the requested quantity does not exist for it
/// (no background cell, ball outside the extents, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Caller broke a documented precondition.
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

inline constexpr std::size_t kMaxDims = 8;
inline constexpr std::int64_t kMaxAxisSize = std::int64_t{1} << 20;

using Coord = std::vector<std::int64_t>;

/// Per-axis cell counts of a d-dimensional rectangular grid. Storage is
/// row-major with axis 0 varying fastest.
class Extents {
 public:
  Extents(std::initializer_list<std::int64_t> sizes);
  explicit Extents(std::vector<std::int64_t> sizes);

  std::size_t dims() const { return sizes_.size(); }
  std::int64_t size(std::size_t axis) const { return sizes_.at(axis); }
  std::span<const std::int64_t> sizes() const { return sizes_; }

  /// Distance between consecutive cells along `axis` in linear storage.
  std::uint64_t stride(std::size_t axis) const { return strides_.at(axis); }
  std::uint64_t cell_count() const { return cell_count_; }

  /// Sum over axes of (n_k - 1)^2; the largest squared distance between
  /// two cells of the grid.
  std::int64_t max_sqdist() const { return max_sqdist_; }

  bool contains(std::span<const std::int64_t> coords) const;
  std::uint64_t linear_index(std::span<const std::int64_t> coords) const;
  Coord coords_of(std::uint64_t index) const;
  void coords_of(std::uint64_t index, std::span<std::int64_t> out) const;

  bool operator==(const Extents& other) const { return sizes_ == other.sizes_; }

  std::string to_string() const;

 private:
  std::vector<std::int64_t> sizes_;
  std::vector<std::uint64_t> strides_;
  std::uint64_t cell_count_ = 0;
  std::int64_t max_sqdist_ = 0;
};

/// One line of cells along an axis: cell i sits at base + i * stride.
struct Row {
  std::uint64_t base = 0;
  std::uint64_t stride = 1;
  std::int64_t length = 0;

  std::uint64_t at(std::int64_t i) const {
    return base + static_cast<std::uint64_t>(i) * stride;
  }
};

std::uint64_t row_count(const Extents& extents, std::size_t axis);

/// The `number`-th row along `axis`, 0 <= number < row_count(extents, axis).
Row row(const Extents& extents, std::size_t axis, std::uint64_t number);

/// All rows along `axis`; every cell belongs to exactly one of them.
std::vector<Row> rows(const Extents& extents, std::size_t axis);

template <typename T>
class Grid {
 public:
  using value_type = T;

  explicit Grid(Extents extents, T fill = T{})
      : extents_(std::move(extents)), cells_(extents_.cell_count(), fill) {}

  Grid(Extents extents, std::vector<T> cells)
      : extents_(std::move(extents)), cells_(std::move(cells)) {
    if (cells_.size() != extents_.cell_count()) {
      throw ContractViolation("grid payload has " + std::to_string(cells_.size()) +
                              " cells, extents " + extents_.to_string() + " need " +
                              std::to_string(extents_.cell_count()));
    }
  }

  const Extents& extents() const { return extents_; }
  std::uint64_t size() const { return cells_.size(); }

  std::span<T> cells() { return cells_; }
  std::span<const T> cells() const { return cells_; }

  T& operator[](std::uint64_t index) { return cells_[index]; }
  const T& operator[](std::uint64_t index) const { return cells_[index]; }

  T& at(std::span<const std::int64_t> coords) { return cells_[extents_.linear_index(coords)]; }
  const T& at(std::span<const std::int64_t> coords) const {
    return cells_[extents_.linear_index(coords)];
  }
  T& at(std::initializer_list<std::int64_t> coords) {
    return at(std::span<const std::int64_t>(coords.begin(), coords.size()));
  }
  const T& at(std::initializer_list<std::int64_t> coords) const {
    return at(std::span<const std::int64_t>(coords.begin(), coords.size()));
  }

  bool operator==(const Grid& other) const = default;

 private:
  Extents extents_;
  std::vector<T> cells_;
};

/// Foreground = 1, background = 0.
using BinaryGrid = Grid<std::uint8_t>;
using ScalarGrid = Grid<std::int64_t>;
using SiteGrid = Grid<std::uint64_t>;

inline constexpr std::uint64_t kNoSite = std::numeric_limits<std::uint64_t>::max();

std::uint64_t foreground_count(const BinaryGrid& image);

}  // namespace edtk
