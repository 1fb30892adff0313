#include "edtk/medial.hpp"

#include <algorithm>
#include <cmath>
#include <tuple>

#include "edtk/parallel.hpp"
#include "edtk/redt.hpp"
#include "edtk/sdt.hpp"

namespace edtk {

BallSet sk_extract(const BinaryGrid& image, unsigned threads) {
  const SdtResult distances = sdt(image, threads);
  if (distances.infinite) throw DomainError("skeleton of an image without background");
  const BallSet balls = balls_of(image, distances);
  const PowerField field = redt_map(balls, image.extents(), threads);
  std::vector<bool> on_envelope(balls.size(), false);
  for (std::uint64_t i = 0; i < image.size(); ++i) {
    if (field.value[i] > 0) on_envelope[field.owner[i]] = true;
  }
  return balls.subset(on_envelope);
}

std::int64_t chord_half_width(std::int64_t r_eff) {
  if (r_eff < 1) throw ContractViolation("chord of a ball that misses the row");
  auto root = static_cast<std::int64_t>(std::sqrt(static_cast<double>(r_eff - 1)));
  while (root * root > r_eff - 1) --root;
  while ((root + 1) * (root + 1) <= r_eff - 1) ++root;
  return root;
}

std::vector<RowParabola> reduce_row(std::span<RowParabola> parabolas, ReductionStats* stats) {
  std::sort(parabolas.begin(), parabolas.end(), [](const RowParabola& a, const RowParabola& b) {
    return std::tie(a.left, b.right, a.ball) < std::tie(b.left, a.right, b.ball);
  });
  std::vector<RowParabola> kept;
  for (std::size_t i = 0; i < parabolas.size();) {
    RowParabola candidate = parabolas[i];
    std::size_t j = i + 1;
    while (j < parabolas.size() && parabolas[j].left == candidate.left &&
           parabolas[j].right == candidate.right) {
      ++j;
    }
    candidate.doubled = j - i > 1;
    i = j;
    // Sorted by left end, so inclusion in the last kept chord only needs
    // the right ends compared.
    if (!kept.empty() && candidate.right <= kept.back().right) continue;
    kept.push_back(candidate);
  }
  if (stats != nullptr) {
    stats->rows += 1;
    stats->emitted += parabolas.size();
    stats->pushes += kept.size();
  }
  return kept;
}

namespace {

struct Chord {
  std::uint64_t row_key;
  RowParabola parabola;
};

// Calls emit(offset_sq) for every row along `axis` the ball meets. During
// the call `base` holds the row's first cell and offset_sq the squared
// distance from the center to the row.
template <typename Emit>
void for_each_row_of_ball(const Extents& ext, std::size_t axis, std::span<const std::int64_t> c,
                          std::int64_t r, Coord& base, Emit&& emit) {
  const std::size_t d = ext.dims();
  auto recurse = [&](auto&& self, std::size_t m, std::int64_t used) -> void {
    if (m == d) {
      emit(used);
      return;
    }
    if (m == axis) {
      base[m] = 0;
      self(self, m + 1, used);
      return;
    }
    const std::int64_t budget = r - 1 - used;
    const std::int64_t reach = chord_half_width(budget + 1);
    const std::int64_t lo = std::max<std::int64_t>(0, c[m] - reach);
    const std::int64_t hi = std::min<std::int64_t>(ext.size(m) - 1, c[m] + reach);
    for (std::int64_t x = lo; x <= hi; ++x) {
      base[m] = x;
      self(self, m + 1, used + (x - c[m]) * (x - c[m]));
    }
  };
  recurse(recurse, 0, 0);
}

}  // namespace

BallSet rdma_reduce(const BallSet& sk, const Extents& extents, Reduction mode,
                    ReductionStats* stats, unsigned threads) {
  validate_balls(sk, extents);
  const std::size_t d = extents.dims();
  std::vector<char> qualified(sk.size(), 0);
  Coord base(d);
  for (std::size_t axis = 0; axis < d; ++axis) {
    std::vector<Chord> chords;
    for (std::size_t b = 0; b < sk.size(); ++b) {
      const auto c = sk.center(b);
      const std::int64_t r = sk.sq_radius(b);
      auto emit = [&](std::int64_t offset_sq) {
        const std::int64_t r_eff = r - offset_sq;
        const std::int64_t half = chord_half_width(r_eff);
        RowParabola p;
        p.ball = b;
        p.apex = c[axis];
        p.r_eff = r_eff;
        p.left = c[axis] - half;
        p.right = c[axis] + half;
        chords.push_back({extents.linear_index(base), p});
      };
      if (mode == Reduction::centers) {
        std::copy(c.begin(), c.end(), base.begin());
        base[axis] = 0;
        emit(0);
      } else {
        for_each_row_of_ball(extents, axis, c, r, base, emit);
      }
    }
    std::sort(chords.begin(), chords.end(),
              [](const Chord& a, const Chord& b) { return a.row_key < b.row_key; });

    std::vector<std::size_t> starts;
    for (std::size_t i = 0; i < chords.size(); ++i) {
      if (i == 0 || chords[i].row_key != chords[i - 1].row_key) starts.push_back(i);
    }
    starts.push_back(chords.size());
    const std::uint64_t groups = starts.size() - 1;

    const unsigned workers = resolve_threads(threads);
    std::vector<std::vector<std::size_t>> winners(workers);
    std::vector<ReductionStats> partial(workers);
    std::vector<std::pair<std::uint64_t, std::uint64_t>> chunks;
    for (unsigned w = 0; w < workers; ++w) {
      chunks.emplace_back(groups * w / workers, groups * (w + 1) / workers);
    }
    parallel_chunks(workers, threads, [&](std::uint64_t wb, std::uint64_t we) {
      std::vector<RowParabola> line;
      for (std::uint64_t w = wb; w < we; ++w) {
        for (std::uint64_t g = chunks[w].first; g < chunks[w].second; ++g) {
          line.clear();
          for (std::size_t i = starts[g]; i < starts[g + 1]; ++i) {
            line.push_back(chords[i].parabola);
          }
          for (const RowParabola& p : reduce_row(line, &partial[w])) {
            if (!p.doubled) winners[w].push_back(p.ball);
          }
        }
      }
    });
    for (unsigned w = 0; w < workers; ++w) {
      for (std::size_t b : winners[w]) qualified[b] = 1;
      if (stats != nullptr) {
        stats->rows += partial[w].rows;
        stats->emitted += partial[w].emitted;
        stats->pushes += partial[w].pushes;
      }
    }
  }
  return sk.subset(std::vector<bool>(qualified.begin(), qualified.end()));
}

namespace {

// Per row of the ball along axis 0, the two chord endpoints. A ball lies in
// another iff all of these do, since every chord of a ball is an interval.
std::vector<Coord> chord_ends(std::span<const std::int64_t> c, std::int64_t r) {
  const std::size_t d = c.size();
  std::vector<Coord> out;
  Coord p(c.begin(), c.end());
  auto recurse = [&](auto&& self, std::size_t m, std::int64_t used) -> void {
    if (m == d) {
      const std::int64_t half = chord_half_width(r - used);
      p[0] = c[0] - half;
      out.push_back(p);
      p[0] = c[0] + half;
      out.push_back(p);
      return;
    }
    const std::int64_t reach = chord_half_width(r - used);
    for (std::int64_t x = c[m] - reach; x <= c[m] + reach; ++x) {
      p[m] = x;
      self(self, m + 1, used + (x - c[m]) * (x - c[m]));
    }
  };
  recurse(recurse, 1, 0);
  return out;
}

std::int64_t sqdist(std::span<const std::int64_t> a, std::span<const std::int64_t> b) {
  std::int64_t s = 0;
  for (std::size_t k = 0; k < a.size(); ++k) s += (a[k] - b[k]) * (a[k] - b[k]);
  return s;
}

// Largest SDT ball strictly containing (c, r); ties go to the smaller
// linear index. Returns false when (c, r) is maximal.
bool largest_container(const ScalarGrid& dist, std::int64_t max_r, const Coord& c,
                       std::int64_t r, Coord& best_center, std::int64_t& best_r) {
  const Extents& ext = dist.extents();
  const std::size_t d = ext.dims();
  const std::vector<Coord> ends = chord_ends(c, r);
  const std::int64_t reach = chord_half_width(max_r);
  bool found = false;
  Coord q(d);
  auto recurse = [&](auto&& self, std::size_t m, std::int64_t used) -> void {
    if (m == d) {
      const std::int64_t rq = dist[ext.linear_index(q)];
      if (rq <= r || used >= rq || (found && rq < best_r)) return;
      if (found && rq == best_r && ext.linear_index(q) > ext.linear_index(best_center)) return;
      for (const Coord& e : ends) {
        if (sqdist(e, q) >= rq) return;
      }
      found = true;
      best_center = q;
      best_r = rq;
      return;
    }
    const std::int64_t span = chord_half_width(max_r - used);
    const std::int64_t lo = std::max<std::int64_t>(0, c[m] - std::min(span, reach));
    const std::int64_t hi = std::min<std::int64_t>(ext.size(m) - 1, c[m] + std::min(span, reach));
    for (std::int64_t x = lo; x <= hi; ++x) {
      q[m] = x;
      self(self, m + 1, used + (x - c[m]) * (x - c[m]));
    }
  };
  recurse(recurse, 0, 0);
  return found;
}

}  // namespace

BallSet promote_to_maximal(const BallSet& balls, const BinaryGrid& image, unsigned threads) {
  const Extents& ext = image.extents();
  validate_balls(balls, ext);
  const SdtResult distances = sdt(image, threads);
  if (distances.infinite) throw DomainError("maximal balls of an image without background");
  const ScalarGrid& dist = distances.dist;
  std::int64_t max_r = 0;
  for (std::uint64_t i = 0; i < dist.size(); ++i) {
    if (image[i] != 0) max_r = std::max(max_r, dist[i]);
  }
  std::vector<std::uint64_t> centers(balls.size());
  parallel_chunks(balls.size(), threads, [&](std::uint64_t begin, std::uint64_t end) {
    for (std::uint64_t b = begin; b < end; ++b) {
      Coord c(balls.center(b).begin(), balls.center(b).end());
      std::int64_t r = balls.sq_radius(b);
      Coord next(ext.dims());
      std::int64_t next_r = 0;
      while (largest_container(dist, max_r, c, r, next, next_r)) {
        c = next;
        r = next_r;
      }
      centers[b] = ext.linear_index(c);
    }
  });
  std::sort(centers.begin(), centers.end());
  centers.erase(std::unique(centers.begin(), centers.end()), centers.end());
  BallSet out(ext.dims());
  out.reserve(centers.size());
  for (std::uint64_t i : centers) out.add(ext.coords_of(i), dist[i]);
  return out;
}

BallSet restore_coverage(const BallSet& reduced, const BallSet& sk, const BinaryGrid& image,
                         unsigned threads) {
  const Extents& ext = image.extents();
  const PowerField have = redt_map(reduced, ext, threads);
  std::vector<bool> keep(sk.size(), false);
  const std::vector<std::uint64_t> sk_centers = validate_balls(sk, ext);
  const std::vector<std::uint64_t> kept_centers = validate_balls(reduced, ext);
  std::vector<std::uint64_t> sorted_kept = kept_centers;
  std::sort(sorted_kept.begin(), sorted_kept.end());
  for (std::size_t i = 0; i < sk.size(); ++i) {
    keep[i] = std::binary_search(sorted_kept.begin(), sorted_kept.end(), sk_centers[i]);
  }
  bool lost = false;
  for (std::uint64_t i = 0; i < image.size() && !lost; ++i) {
    lost = image[i] != 0 && have.value[i] <= 0;
  }
  if (!lost) return reduced;
  const PowerField all = redt_map(sk, ext, threads);
  for (std::uint64_t i = 0; i < image.size(); ++i) {
    if (image[i] != 0 && have.value[i] <= 0 && all.owner[i] != kNoSite) keep[all.owner[i]] = true;
  }
  return sk.subset(keep);
}

BallSet rdma(const BinaryGrid& image, Reduction mode, unsigned threads, bool repair) {
  const BallSet sk = sk_extract(image, threads);
  const BallSet reduced = rdma_reduce(sk, image.extents(), mode, nullptr, threads);
  if (!repair) return reduced;
  return promote_to_maximal(restore_coverage(reduced, sk, image, threads), image, threads);
}

}  // namespace edtk
