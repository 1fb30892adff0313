#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "edtk/grid.hpp"

namespace edtk {

/// Discrete balls {p : |p - center|^2 < sq_radius} with integer centers and
/// integer squared radii >= 1. Centers are stored flat, `dims` per ball.
class BallSet {
 public:
  explicit BallSet(std::size_t dims);

  std::size_t dims() const { return dims_; }
  std::size_t size() const { return radii_.size(); }
  bool empty() const { return radii_.empty(); }
  void reserve(std::size_t n);

  void add(std::span<const std::int64_t> center, std::int64_t sq_radius);
  void add(std::initializer_list<std::int64_t> center, std::int64_t sq_radius) {
    add(std::span<const std::int64_t>(center.begin(), center.size()), sq_radius);
  }

  std::span<const std::int64_t> center(std::size_t i) const {
    return {centers_.data() + i * dims_, dims_};
  }
  std::int64_t sq_radius(std::size_t i) const { return radii_[i]; }

  /// Balls i with keep[i] set, in their original order.
  BallSet subset(const std::vector<bool>& keep) const;

  bool operator==(const BallSet& other) const = default;

 private:
  std::size_t dims_;
  std::vector<std::int64_t> centers_;
  std::vector<std::int64_t> radii_;
};

/// Throws DomainError unless every center lies in `extents` and no two balls
/// share a center. Returns the linear index of every center.
std::vector<std::uint64_t> validate_balls(const BallSet& balls, const Extents& extents);

}  // namespace edtk
