#pragma once

// One-dimensional parabola envelopes.
//
// Both kernels scan a row of heights once, keeping a stack of the parabola
// apexes that appear on the envelope together with the first position each
// of them owns, then write the envelope back in a second scan. On ties the
// parabola with the smaller apex keeps the position.

#include <cstdint>
#include <span>
#include <vector>

namespace edtk {

/// Stack storage for the kernels; grown on demand, reusable across rows.
struct EnvelopeScratch {
  std::vector<std::int64_t> apex;
  std::vector<std::int64_t> start;

  void ensure(std::size_t n) {
    if (apex.size() < n) {
      apex.resize(n);
      start.resize(n);
    }
  }
};

struct EnvelopeCounters {
  std::uint64_t pushes = 0;
  std::uint64_t pops = 0;
};

/// floor(num / den) for den > 0.
constexpr std::int64_t floor_div(std::int64_t num, std::int64_t den) {
  const std::int64_t q = num / den;
  return (num % den != 0 && num < 0) ? q - 1 : q;
}

/// out[j] = min_y heights[y] + (j - y)^2. `winner`, when non-empty,
/// receives the apex y attaining out[j]. Heights must be non-negative.
void lower_envelope(std::span<const std::int64_t> heights, std::span<std::int64_t> out,
                    std::span<std::int64_t> winner, EnvelopeScratch& scratch,
                    EnvelopeCounters* counters = nullptr);

/// out[j] = max_x heights[x] - (j - x)^2. Heights may be negative.
void upper_envelope(std::span<const std::int64_t> heights, std::span<std::int64_t> out,
                    std::span<std::int64_t> winner, EnvelopeScratch& scratch,
                    EnvelopeCounters* counters = nullptr);

struct EnvelopeResult {
  std::vector<std::int64_t> values;
  std::vector<std::int64_t> winners;
};

EnvelopeResult lower_envelope(std::span<const std::int64_t> heights);
EnvelopeResult upper_envelope(std::span<const std::int64_t> heights);

}  // namespace edtk
