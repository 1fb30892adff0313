#include "edtk/io.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iterator>
#include <optional>
#include <sstream>
#include <vector>

namespace edtk::io {
namespace {

// Reads whitespace-separated tokens and tracks the byte offset for errors.
class Cursor {
 public:
  explicit Cursor(std::string_view bytes) : bytes_(bytes) {}

  std::uint64_t offset() const { return pos_; }
  bool at_end() const { return pos_ >= bytes_.size(); }
  std::string_view rest() const { return bytes_.substr(pos_); }
  void advance(std::size_t n) { pos_ += n; }

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  // PGM headers allow '#' comments running to the end of the line.
  void skip_space(bool comments) {
    while (pos_ < bytes_.size()) {
      const char c = bytes_[pos_];
      if (std::isspace(static_cast<unsigned char>(c))) {
        ++pos_;
      } else if (comments && c == '#') {
        while (pos_ < bytes_.size() && bytes_[pos_] != '\n') ++pos_;
      } else {
        break;
      }
    }
  }

  std::string_view token(bool comments = false) {
    skip_space(comments);
    const std::size_t start = pos_;
    while (pos_ < bytes_.size() && !std::isspace(static_cast<unsigned char>(bytes_[pos_]))) ++pos_;
    if (start == pos_) fail("unexpected end of input");
    return bytes_.substr(start, pos_ - start);
  }

  std::int64_t integer(bool comments = false) {
    skip_space(comments);
    const std::uint64_t at = pos_;
    const std::string_view t = token(comments);
    std::int64_t v = 0;
    const auto [end, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
    if (ec != std::errc() || end != t.data() + t.size()) {
      throw ParseError("expected an integer, got '" + std::string(t) + "'", at);
    }
    return v;
  }

  // Consumes exactly one whitespace byte (the separator before a payload).
  void single_space() {
    if (at_end() || !std::isspace(static_cast<unsigned char>(bytes_[pos_]))) {
      fail("expected a single whitespace byte before the payload");
    }
    ++pos_;
  }

 private:
  std::string_view bytes_;
  std::uint64_t pos_ = 0;
};

template <typename T>
void put_le(std::string& out, T value) {
  auto u = static_cast<std::uint64_t>(value);
  for (std::size_t b = 0; b < sizeof(T); ++b) {
    out.push_back(static_cast<char>(u & 0xFF));
    u >>= 8;
  }
}

template <typename T>
T get_le(std::string_view bytes, std::size_t at) {
  std::uint64_t u = 0;
  for (std::size_t b = 0; b < sizeof(T); ++b) {
    u |= static_cast<std::uint64_t>(static_cast<unsigned char>(bytes[at + b])) << (8 * b);
  }
  return static_cast<T>(u);
}

std::string header(const char* kind, const Extents& ext) {
  std::string h = std::string("GDF1 ") + kind + " " + std::to_string(ext.dims());
  for (std::int64_t n : ext.sizes()) h += " " + std::to_string(n);
  h += "\n";
  return h;
}

Extents parse_extents(Cursor& in) {
  in.skip_space(false);
  const std::uint64_t at = in.offset();
  const std::int64_t d = in.integer();
  if (d < 1 || d > static_cast<std::int64_t>(kMaxDims)) {
    throw ParseError("dimension " + std::to_string(d) + " outside [1, 8]", at);
  }
  std::vector<std::int64_t> sizes;
  for (std::int64_t k = 0; k < d; ++k) {
    in.skip_space(false);
    const std::uint64_t size_at = in.offset();
    const std::int64_t n = in.integer();
    if (n < 1 || n > kMaxAxisSize) {
      throw ParseError("axis size " + std::to_string(n) + " outside [1, 2^20]", size_at);
    }
    sizes.push_back(n);
  }
  try {
    return Extents(std::move(sizes));
  } catch (const BoundsError& e) {
    throw ParseError(e.what(), at);
  }
}

void check_payload(Cursor& in, std::uint64_t cells, std::size_t width) {
  const std::uint64_t need = cells * width;
  if (in.rest().size() != need) {
    in.fail("payload holds " + std::to_string(in.rest().size()) + " bytes, expected " +
            std::to_string(need));
  }
}

Extents require_2d(const Extents& ext) {
  if (ext.dims() != 2) throw DomainError("PGM holds 2D grids only, got " + ext.to_string());
  return ext;
}

struct PgmRaster {
  Extents extents;
  std::vector<std::int64_t> samples;
};

PgmRaster decode_pgm(std::string_view bytes) {
  Cursor in(bytes);
  const std::string_view magic = in.token();
  const bool ascii = magic == "P2";
  if (!ascii && magic != "P5") {
    throw ParseError("not a PGM file (magic '" + std::string(magic) + "')", 0);
  }
  in.skip_space(true);
  const std::uint64_t dims_at = in.offset();
  const std::int64_t width = in.integer(true);
  const std::int64_t height = in.integer(true);
  if (width < 1 || height < 1 || width > kMaxAxisSize || height > kMaxAxisSize) {
    throw ParseError("PGM size out of range", dims_at);
  }
  in.skip_space(true);
  const std::uint64_t max_at = in.offset();
  const std::int64_t maxval = in.integer(true);
  if (maxval < 1 || maxval > 65535) throw ParseError("PGM maxval outside [1, 65535]", max_at);

  PgmRaster raster{Extents{width, height}, {}};
  const auto cells = raster.extents.cell_count();
  raster.samples.resize(cells);
  if (ascii) {
    for (std::uint64_t i = 0; i < cells; ++i) {
      const std::uint64_t at = in.offset();
      const std::int64_t v = in.integer(true);
      if (v < 0 || v > maxval) throw ParseError("PGM sample above maxval", at);
      raster.samples[i] = v;
    }
    in.skip_space(true);
    if (!in.at_end()) in.fail("trailing data after PGM raster");
    return raster;
  }
  in.single_space();
  const std::size_t width_bytes = maxval > 255 ? 2 : 1;
  check_payload(in, cells, width_bytes);
  const std::string_view payload = in.rest();
  for (std::uint64_t i = 0; i < cells; ++i) {
    std::int64_t v = static_cast<unsigned char>(payload[i * width_bytes]);
    if (width_bytes == 2) v = (v << 8) | static_cast<unsigned char>(payload[i * 2 + 1]);
    if (v > maxval) throw ParseError("PGM sample above maxval", in.offset() + i * width_bytes);
    raster.samples[i] = v;
  }
  return raster;
}

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::vector<std::string_view> split(std::string_view line, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t end = line.find(sep, start);
    out.push_back(line.substr(start, end == std::string_view::npos ? end : end - start));
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  return out;
}

template <typename T>
T parse_number(std::string_view field, std::uint64_t at) {
  T v{};
  if constexpr (std::is_floating_point_v<T>) {
    // from_chars for doubles is missing from older libstdc++.
    const std::string s(field);
    char* end = nullptr;
    v = std::strtod(s.c_str(), &end);
    if (s.empty() || end != s.c_str() + s.size()) {
      throw ParseError("expected a number, got '" + s + "'", at);
    }
  } else {
    const auto [end, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
    if (ec != std::errc() || end != field.data() + field.size()) {
      throw ParseError("expected an integer, got '" + std::string(field) + "'", at);
    }
  }
  return v;
}

// Iterates lines with their starting byte offsets; strips a trailing '\r'.
template <typename Fn>
void for_each_line(std::string_view bytes, Fn&& fn) {
  std::size_t start = 0;
  while (start < bytes.size()) {
    std::size_t end = bytes.find('\n', start);
    if (end == std::string_view::npos) end = bytes.size();
    std::string_view line = bytes.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    fn(line, static_cast<std::uint64_t>(start));
    start = end + 1;
  }
}

}  // namespace

std::string encode_grid(const AnyGrid& grid) {
  return std::visit(
      [](const auto& g) {
        using G = std::decay_t<decltype(g)>;
        std::string out;
        if constexpr (std::is_same_v<G, BinaryGrid>) {
          out = header("BIN", g.extents());
          for (std::uint8_t v : g.cells()) out.push_back(static_cast<char>(v != 0 ? 1 : 0));
        } else if constexpr (std::is_same_v<G, ScalarGrid>) {
          out = header("S64", g.extents());
          out.reserve(out.size() + g.size() * 8);
          for (std::int64_t v : g.cells()) put_le(out, v);
        } else {
          out = header("SITE", g.extents());
          out.reserve(out.size() + g.size() * 8);
          for (std::uint64_t v : g.cells()) put_le(out, v);
        }
        return out;
      },
      grid);
}

AnyGrid decode_grid(std::string_view bytes) {
  Cursor in(bytes);
  if (in.token() != "GDF1") throw ParseError("missing GDF1 magic", 0);
  in.skip_space(false);
  const std::uint64_t kind_at = in.offset();
  const std::string kind(in.token());
  if (kind != "BIN" && kind != "S64" && kind != "SITE") {
    throw ParseError("unknown grid kind '" + kind + "'", kind_at);
  }
  Extents ext = parse_extents(in);
  if (in.at_end() || in.rest().front() != '\n') in.fail("expected newline after GDF1 header");
  in.advance(1);
  const std::uint64_t payload_at = in.offset();
  const std::string_view payload = in.rest();
  const std::uint64_t cells = ext.cell_count();

  if (kind == "BIN") {
    check_payload(in, cells, 1);
    std::vector<std::uint8_t> v(cells);
    for (std::uint64_t i = 0; i < cells; ++i) {
      const auto b = static_cast<unsigned char>(payload[i]);
      if (b > 1) throw ParseError("binary cell value " + std::to_string(b), payload_at + i);
      v[i] = b;
    }
    return BinaryGrid(std::move(ext), std::move(v));
  }
  check_payload(in, cells, 8);
  if (kind == "S64") {
    std::vector<std::int64_t> v(cells);
    for (std::uint64_t i = 0; i < cells; ++i) v[i] = get_le<std::int64_t>(payload, i * 8);
    return ScalarGrid(std::move(ext), std::move(v));
  }
  std::vector<std::uint64_t> v(cells);
  for (std::uint64_t i = 0; i < cells; ++i) v[i] = get_le<std::uint64_t>(payload, i * 8);
  return SiteGrid(std::move(ext), std::move(v));
}

std::string encode_pgm(const BinaryGrid& image) {
  const Extents ext = require_2d(image.extents());
  std::string out = "P5\n" + std::to_string(ext.size(0)) + " " + std::to_string(ext.size(1)) +
                    "\n255\n";
  for (std::uint8_t v : image.cells()) out.push_back(static_cast<char>(v != 0 ? 255 : 0));
  return out;
}

std::string encode_pgm(const ScalarGrid& grid) {
  const Extents ext = require_2d(grid.extents());
  std::string out = "P5\n" + std::to_string(ext.size(0)) + " " + std::to_string(ext.size(1)) +
                    "\n65535\n";
  for (std::int64_t v : grid.cells()) {
    if (v < 0 || v > 65535) {
      throw DomainError("value " + std::to_string(v) + " does not fit a 16-bit PGM");
    }
    out.push_back(static_cast<char>((v >> 8) & 0xFF));
    out.push_back(static_cast<char>(v & 0xFF));
  }
  return out;
}

BinaryGrid decode_pgm_binary(std::string_view bytes) {
  PgmRaster r = decode_pgm(bytes);
  std::vector<std::uint8_t> cells(r.samples.size());
  for (std::size_t i = 0; i < cells.size(); ++i) cells[i] = r.samples[i] != 0 ? 1 : 0;
  return BinaryGrid(std::move(r.extents), std::move(cells));
}

ScalarGrid decode_pgm_scalar(std::string_view bytes) {
  PgmRaster r = decode_pgm(bytes);
  return ScalarGrid(std::move(r.extents), std::move(r.samples));
}

std::string encode_balls(const BallSet& balls) {
  std::string out = "BALLS " + std::to_string(balls.dims()) + "\n";
  for (std::size_t i = 0; i < balls.size(); ++i) {
    for (std::int64_t c : balls.center(i)) out += std::to_string(c) + " ";
    out += std::to_string(balls.sq_radius(i)) + "\n";
  }
  return out;
}

BallSet decode_balls(std::string_view bytes) {
  std::optional<BallSet> balls;
  for_each_line(bytes, [&](std::string_view line, std::uint64_t at) {
    Cursor in(line);
    in.skip_space(false);
    if (in.at_end() || in.rest().front() == '#') return;
    auto fail = [&](const std::string& what) { throw ParseError(what, at + in.offset()); };
    if (!balls) {
      if (in.token() != "BALLS") throw ParseError("expected 'BALLS <d>' header", at);
      const std::int64_t d = in.integer();
      if (d < 1 || d > static_cast<std::int64_t>(kMaxDims)) fail("dimension outside [1, 8]");
      balls.emplace(static_cast<std::size_t>(d));
    } else {
      Coord c(balls->dims());
      try {
        for (auto& x : c) x = in.integer();
      } catch (const ParseError& e) {
        throw ParseError(std::string("ball line: ") + e.what(), at + e.offset());
      }
      in.skip_space(false);
      const std::uint64_t r_at = in.offset();
      std::int64_t r = 0;
      try {
        r = in.integer();
      } catch (const ParseError& e) {
        throw ParseError(std::string("ball line: ") + e.what(), at + e.offset());
      }
      if (r < 1) throw ParseError("squared radius must be >= 1", at + r_at);
      balls->add(c, r);
    }
    in.skip_space(false);
    if (!in.at_end()) fail("trailing fields");
  });
  if (!balls) throw ParseError("missing 'BALLS <d>' header", 0);
  return std::move(*balls);
}

std::string encode_measurement(const Measurement& m) {
  std::string out;
  out += "# foreground=" + std::to_string(m.foreground) + "\n";
  out += "# diameter_bbox=" + format_double(m.diameter_bbox) + "\n";
  out += "# diameter_exact=" + format_double(m.diameter_exact) + "\n";
  out += std::string("# diameter_mode=") + (m.mode == DiameterMode::bbox ? "bbox" : "exact") +
         "\n";
  out += "index";
  for (std::size_t k = 0; k < m.dims; ++k) out += ",c" + std::to_string(k);
  out += ",r,rho,kappa,rho_norm,kappa_norm\n";
  for (std::size_t i = 0; i < m.balls.size(); ++i) {
    const MeasuredBall& b = m.balls[i];
    out += std::to_string(i);
    for (std::int64_t c : b.center) out += "," + std::to_string(c);
    out += "," + std::to_string(b.sq_radius) + "," + format_double(b.rho) + "," +
           std::to_string(b.kappa) + "," + format_double(b.rho_norm) + "," +
           format_double(b.kappa_norm) + "\n";
  }
  return out;
}

Measurement decode_measurement(std::string_view bytes) {
  Measurement m;
  bool have_header = false;
  bool have_fg = false;
  for_each_line(bytes, [&](std::string_view line, std::uint64_t at) {
    if (line.empty()) return;
    if (line.front() == '#') {
      const std::size_t eq = line.find('=');
      if (eq == std::string_view::npos) return;
      std::string_view key = line.substr(1, eq - 1);
      while (!key.empty() && key.front() == ' ') key.remove_prefix(1);
      const std::string_view value = line.substr(eq + 1);
      const std::uint64_t value_at = at + eq + 1;
      if (key == "foreground") {
        m.foreground = parse_number<std::uint64_t>(value, value_at);
        have_fg = true;
      } else if (key == "diameter_bbox") {
        m.diameter_bbox = parse_number<double>(value, value_at);
      } else if (key == "diameter_exact") {
        m.diameter_exact = parse_number<double>(value, value_at);
      } else if (key == "diameter_mode") {
        if (value == "bbox") {
          m.mode = DiameterMode::bbox;
        } else if (value == "exact") {
          m.mode = DiameterMode::exact;
        } else {
          throw ParseError("unknown diameter mode '" + std::string(value) + "'", value_at);
        }
      }
      return;
    }
    const auto fields = split(line, ',');
    if (!have_header) {
      if (fields.size() < 7 || fields.front() != "index") {
        throw ParseError("expected the measurement column header", at);
      }
      m.dims = fields.size() - 6;
      if (m.dims > kMaxDims) throw ParseError("too many center columns", at);
      have_header = true;
      return;
    }
    if (fields.size() != m.dims + 6) {
      throw ParseError("row has " + std::to_string(fields.size()) + " fields, expected " +
                           std::to_string(m.dims + 6),
                       at);
    }
    std::uint64_t field_at = at;
    auto field = [&](std::size_t i) {
      field_at = at + static_cast<std::uint64_t>(fields[i].data() - line.data());
      return fields[i];
    };
    MeasuredBall b;
    for (std::size_t k = 0; k < m.dims; ++k) {
      b.center.push_back(parse_number<std::int64_t>(field(1 + k), field_at));
    }
    const std::size_t o = 1 + m.dims;
    b.sq_radius = parse_number<std::int64_t>(field(o), field_at);
    if (b.sq_radius < 1) throw ParseError("squared radius must be >= 1", field_at);
    b.rho = parse_number<double>(field(o + 1), field_at);
    b.kappa = parse_number<std::uint64_t>(field(o + 2), field_at);
    b.rho_norm = parse_number<double>(field(o + 3), field_at);
    b.kappa_norm = parse_number<double>(field(o + 4), field_at);
    m.balls.push_back(std::move(b));
  });
  if (!have_header) throw ParseError("missing measurement column header", bytes.size());
  if (!have_fg) throw ParseError("missing '# foreground=' line", 0);
  return m;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path.string() + "' for reading");
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

void write_file(const std::filesystem::path& path, std::string_view bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw IoError("write to '" + path.string() + "' failed");
}

bool looks_like_pgm(std::string_view bytes) {
  return bytes.size() >= 2 && bytes[0] == 'P' && (bytes[1] == '2' || bytes[1] == '5');
}

bool looks_like_balls(std::string_view bytes) {
  std::size_t i = 0;
  while (i < bytes.size()) {
    while (i < bytes.size() && std::isspace(static_cast<unsigned char>(bytes[i]))) ++i;
    if (i < bytes.size() && bytes[i] == '#') {
      while (i < bytes.size() && bytes[i] != '\n') ++i;
      continue;
    }
    break;
  }
  return bytes.substr(i).starts_with("BALLS");
}

BinaryGrid decode_image(std::string_view bytes) {
  if (looks_like_pgm(bytes)) return decode_pgm_binary(bytes);
  AnyGrid g = decode_grid(bytes);
  if (auto* b = std::get_if<BinaryGrid>(&g)) return std::move(*b);
  throw ParseError("expected a BIN grid", 5);
}

}  // namespace edtk::io
