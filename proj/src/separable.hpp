#pragma once

#include <algorithm>
#include <optional>
#include <span>

#include "edtk/envelope.hpp"
#include "edtk/grid.hpp"
#include "edtk/parallel.hpp"

namespace edtk::detail {

enum class EnvelopeKind { lower, upper };

/// Replaces every row of `values` along `axis` by its parabola envelope.
/// When `owner` is non-null each cell inherits the owner of the input cell
/// whose parabola won it. `ceiling`, when set, caps the written values.
inline void envelope_pass(ScalarGrid& values, SiteGrid* owner, std::size_t axis,
                          EnvelopeKind kind, unsigned threads,
                          std::optional<std::int64_t> ceiling = std::nullopt) {
  const Extents& ext = values.extents();
  const std::int64_t n = ext.size(axis);
  const std::uint64_t count = row_count(ext, axis);
  // Consecutive rows are adjacent in memory, so rows are processed in tiles
  // and gathered index-major to keep strided axes cache friendly.
  constexpr std::uint64_t kTile = 16;
  parallel_chunks(count, threads, [&](std::uint64_t begin, std::uint64_t end) {
    std::vector<std::int64_t> in(kTile * n), out(n), win(kTile * n);
    std::vector<std::uint64_t> owner_in(owner != nullptr ? kTile * n : 0);
    std::vector<Row> lines(kTile);
    EnvelopeScratch scratch;
    scratch.ensure(static_cast<std::size_t>(n));
    for (std::uint64_t r0 = begin; r0 < end; r0 += kTile) {
      const std::uint64_t t = std::min(kTile, end - r0);
      for (std::uint64_t b = 0; b < t; ++b) lines[b] = row(ext, axis, r0 + b);
      for (std::int64_t i = 0; i < n; ++i) {
        for (std::uint64_t b = 0; b < t; ++b) in[b * n + i] = values[lines[b].at(i)];
      }
      for (std::uint64_t b = 0; b < t; ++b) {
        const std::span<const std::int64_t> h(in.data() + b * n, n);
        const std::span<std::int64_t> w(win.data() + b * n, n);
        if (kind == EnvelopeKind::lower) {
          lower_envelope(h, out, w, scratch);
        } else {
          upper_envelope(h, out, w, scratch);
        }
        for (std::int64_t i = 0; i < n; ++i) {
          in[b * n + i] = ceiling ? std::min(out[i], *ceiling) : out[i];
        }
      }
      for (std::int64_t i = 0; i < n; ++i) {
        for (std::uint64_t b = 0; b < t; ++b) values[lines[b].at(i)] = in[b * n + i];
      }
      if (owner != nullptr) {
        SiteGrid& o = *owner;
        for (std::int64_t i = 0; i < n; ++i) {
          for (std::uint64_t b = 0; b < t; ++b) owner_in[b * n + i] = o[lines[b].at(i)];
        }
        for (std::int64_t i = 0; i < n; ++i) {
          for (std::uint64_t b = 0; b < t; ++b) {
            o[lines[b].at(i)] = owner_in[b * n + win[b * n + i]];
          }
        }
      }
    }
  });
}

}  // namespace edtk::detail
