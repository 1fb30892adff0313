#include "edtk/envelope.hpp"

#include "edtk/grid.hpp"

namespace edtk {
namespace {

struct LowerParabola {
  std::span<const std::int64_t> h;
  std::int64_t at(std::int64_t apex, std::int64_t i) const {
    return h[apex] + (i - apex) * (i - apex);
  }
  // Last position where the parabola at u is still <= the one at v (u < v).
  std::int64_t sep(std::int64_t u, std::int64_t v) const {
    return floor_div(v * v - u * u + h[v] - h[u], 2 * (v - u));
  }
  // The incumbent at apex `top` loses position i to `challenger`.
  bool beaten(std::int64_t top, std::int64_t challenger, std::int64_t i) const {
    return at(top, i) > at(challenger, i);
  }
};

struct UpperParabola {
  std::span<const std::int64_t> f;
  std::int64_t at(std::int64_t apex, std::int64_t i) const {
    return f[apex] - (i - apex) * (i - apex);
  }
  // Last position where the parabola at u is still >= the one at v (u < v).
  std::int64_t sep(std::int64_t u, std::int64_t v) const {
    return floor_div(f[u] - f[v] + v * v - u * u, 2 * (v - u));
  }
  bool beaten(std::int64_t top, std::int64_t challenger, std::int64_t i) const {
    return at(top, i) < at(challenger, i);
  }
};

template <typename Parabola>
void envelope(const Parabola& p, std::int64_t n, std::span<std::int64_t> out,
              std::span<std::int64_t> winner, EnvelopeScratch& scratch,
              EnvelopeCounters* counters) {
  if (n < 1) throw ContractViolation("envelope of an empty row");
  if (static_cast<std::int64_t>(out.size()) != n ||
      (!winner.empty() && static_cast<std::int64_t>(winner.size()) != n)) {
    throw ContractViolation("envelope output buffers do not match the row length");
  }
  scratch.ensure(static_cast<std::size_t>(n));
  auto& s = scratch.apex;
  auto& t = scratch.start;

  std::int64_t q = 0;
  s[0] = 0;
  t[0] = 0;
  std::uint64_t pushes = 1;
  std::uint64_t pops = 0;
  for (std::int64_t i = 1; i < n; ++i) {
    while (q >= 0 && p.beaten(s[q], i, t[q])) {
      --q;
      ++pops;
    }
    if (q < 0) {
      q = 0;
      s[0] = i;
      t[0] = 0;
      ++pushes;
    } else {
      const std::int64_t w = 1 + p.sep(s[q], i);
      if (w < n) {
        ++q;
        s[q] = i;
        t[q] = w;
        ++pushes;
      }
    }
  }
  for (std::int64_t j = n - 1; j >= 0; --j) {
    out[j] = p.at(s[q], j);
    if (!winner.empty()) winner[j] = s[q];
    if (j == t[q]) --q;
  }
  if (counters != nullptr) {
    counters->pushes += pushes;
    counters->pops += pops;
  }
}

}  // namespace

void lower_envelope(std::span<const std::int64_t> heights, std::span<std::int64_t> out,
                    std::span<std::int64_t> winner, EnvelopeScratch& scratch,
                    EnvelopeCounters* counters) {
  envelope(LowerParabola{heights}, static_cast<std::int64_t>(heights.size()), out, winner,
           scratch, counters);
}

void upper_envelope(std::span<const std::int64_t> heights, std::span<std::int64_t> out,
                    std::span<std::int64_t> winner, EnvelopeScratch& scratch,
                    EnvelopeCounters* counters) {
  envelope(UpperParabola{heights}, static_cast<std::int64_t>(heights.size()), out, winner,
           scratch, counters);
}

EnvelopeResult lower_envelope(std::span<const std::int64_t> heights) {
  EnvelopeResult r{std::vector<std::int64_t>(heights.size()),
                   std::vector<std::int64_t>(heights.size())};
  EnvelopeScratch scratch;
  lower_envelope(heights, r.values, r.winners, scratch);
  return r;
}

EnvelopeResult upper_envelope(std::span<const std::int64_t> heights) {
  EnvelopeResult r{std::vector<std::int64_t>(heights.size()),
                   std::vector<std::int64_t>(heights.size())};
  EnvelopeScratch scratch;
  upper_envelope(heights, r.values, r.winners, scratch);
  return r;
}

}  // namespace edtk
