#include "edtk/balls.hpp"

#include <algorithm>
#include <string>

namespace edtk {

BallSet::BallSet(std::size_t dims) : dims_(dims) {
  if (dims < 1 || dims > kMaxDims) {
    throw BoundsError("ball set dimension must be in [1, 8], got " + std::to_string(dims));
  }
}

void BallSet::reserve(std::size_t n) {
  centers_.reserve(n * dims_);
  radii_.reserve(n);
}

void BallSet::add(std::span<const std::int64_t> center, std::int64_t sq_radius) {
  if (center.size() != dims_) {
    throw DomainError("ball center has " + std::to_string(center.size()) +
                      " coordinates, expected " + std::to_string(dims_));
  }
  if (sq_radius < 1) {
    throw DomainError("squared radius must be >= 1, got " + std::to_string(sq_radius));
  }
  centers_.insert(centers_.end(), center.begin(), center.end());
  radii_.push_back(sq_radius);
}

BallSet BallSet::subset(const std::vector<bool>& keep) const {
  if (keep.size() != size()) throw ContractViolation("subset mask size mismatch");
  BallSet out(dims_);
  for (std::size_t i = 0; i < size(); ++i) {
    if (keep[i]) out.add(center(i), radii_[i]);
  }
  return out;
}

std::vector<std::uint64_t> validate_balls(const BallSet& balls, const Extents& extents) {
  if (balls.dims() != extents.dims()) {
    throw DomainError("ball set is " + std::to_string(balls.dims()) + "-dimensional, grid is " +
                      std::to_string(extents.dims()) + "-dimensional");
  }
  std::vector<std::uint64_t> index(balls.size());
  for (std::size_t i = 0; i < balls.size(); ++i) {
    if (!extents.contains(balls.center(i))) {
      throw DomainError("ball " + std::to_string(i) + " center outside extents " +
                        extents.to_string());
    }
    index[i] = extents.linear_index(balls.center(i));
  }
  std::vector<std::uint64_t> sorted = index;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw DomainError("two balls share a center");
  }
  return index;
}

}  // namespace edtk
