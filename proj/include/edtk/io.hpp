#pragma once

// File formats.
//
// GDF1 grid container: one ASCII header line
//     GDF1 <KIND> <d> <n_0> ... <n_{d-1}>\n
// with KIND one of BIN (1 byte per cell, 0 or 1), S64 (signed 64-bit) or
// SITE (unsigned 64-bit, all ones = no site), followed by the raw payload in
// row-major order, axis 0 fastest, little-endian.
//
// Ball file: a `BALLS <d>` header line, then one ball per line as d center
// coordinates followed by the squared radius. Lines starting with '#' and
// blank lines are ignored.
//
// PGM (P2 / P5) holds 2D grids only: width = axis 0, height = axis 1.

#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

#include "edtk/balls.hpp"
#include "edtk/filter.hpp"
#include "edtk/grid.hpp"

namespace edtk::io {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::uint64_t offset)
      : std::runtime_error(what + " (at byte " + std::to_string(offset) + ")"), offset_(offset) {}
  std::uint64_t offset() const { return offset_; }

 private:
  std::uint64_t offset_;
};

/// Missing file, unwritable path.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using AnyGrid = std::variant<BinaryGrid, ScalarGrid, SiteGrid>;

std::string encode_grid(const AnyGrid& grid);
AnyGrid decode_grid(std::string_view bytes);

/// P5, 8-bit, foreground 255.
std::string encode_pgm(const BinaryGrid& image);
/// P5, 16-bit big-endian samples. Throws DomainError for values outside
/// [0, 65535] or grids that are not 2D.
std::string encode_pgm(const ScalarGrid& grid);
/// Nonzero samples are foreground.
BinaryGrid decode_pgm_binary(std::string_view bytes);
ScalarGrid decode_pgm_scalar(std::string_view bytes);

std::string encode_balls(const BallSet& balls);
BallSet decode_balls(std::string_view bytes);

/// CSV with columns index, c0..c{d-1}, r, rho, kappa, rho_norm, kappa_norm,
/// preceded by '#' lines carrying the shape size and both diameters.
std::string encode_measurement(const Measurement& m);
Measurement decode_measurement(std::string_view bytes);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view bytes);

bool looks_like_pgm(std::string_view bytes);
bool looks_like_balls(std::string_view bytes);

/// GDF1 BIN grid or PGM, by content.
BinaryGrid decode_image(std::string_view bytes);

}  // namespace edtk::io
