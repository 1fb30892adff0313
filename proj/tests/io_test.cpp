#include "edtk/io.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <random>

#include "edtk/medial.hpp"
#include "test_support.hpp"

namespace edtk {
namespace {

TEST(Gdf, HeaderOfSmallBinaryGrid) {
  const BinaryGrid g(Extents{3, 2}, std::vector<std::uint8_t>{1, 0, 1, 0, 0, 1});
  const std::string bytes = io::encode_grid(g);
  EXPECT_EQ(bytes.substr(0, 15), "GDF1 BIN 2 3 2\n");
  EXPECT_EQ(bytes.size(), 15u + 6u);
  EXPECT_EQ(bytes.substr(15), std::string("\x01\x00\x01\x00\x00\x01", 6));
}

TEST(Gdf, RoundTripAllKinds) {
  std::mt19937_64 rng(51);
  for (int trial = 0; trial < 100; ++trial) {
    const Extents e = testing::random_extents(rng, 1 + trial % 4, 7);
    const BinaryGrid b = testing::random_image(rng, e, 0.5);
    ScalarGrid s(e, 0);
    SiteGrid t(e, kNoSite);
    std::uniform_int_distribution<std::int64_t> any(std::numeric_limits<std::int64_t>::min(),
                                                    std::numeric_limits<std::int64_t>::max());
    for (auto& v : s.cells()) v = any(rng);
    for (std::uint64_t i = 0; i < t.size(); i += 2) t[i] = i * 977;
    for (const io::AnyGrid& g : {io::AnyGrid(b), io::AnyGrid(s), io::AnyGrid(t)}) {
      const std::string bytes = io::encode_grid(g);
      const io::AnyGrid back = io::decode_grid(bytes);
      ASSERT_EQ(back, g);
      ASSERT_EQ(io::encode_grid(back), bytes);
    }
  }
}

TEST(Gdf, LittleEndianPayload) {
  const ScalarGrid g(Extents{1}, std::vector<std::int64_t>{-2});
  EXPECT_EQ(io::encode_grid(g).substr(13), std::string(8, '\xff').replace(0, 1, "\xfe"));
}

void expect_parse_error(std::string_view bytes, std::uint64_t offset) {
  try {
    io::decode_grid(bytes);
    ADD_FAILURE() << "no error for " << bytes;
  } catch (const io::ParseError& e) {
    EXPECT_EQ(e.offset(), offset) << e.what();
  }
}

TEST(Gdf, MalformedInputsReportOffsets) {
  expect_parse_error("GDF2 BIN 1 1\n\x01", 0);
  expect_parse_error("GDF1 XYZ 1 1\n\x01", 5);
  expect_parse_error(std::string("GDF1 BIN 1 2\n\x01", 14), 13);
  expect_parse_error(std::string("GDF1 BIN 1 1\n\x02", 14), 13);
  expect_parse_error("GDF1 BIN 9 1 1 1 1 1 1 1 1 1\n", 9);
  expect_parse_error("GDF1 BIN 1 0\n", 11);
  expect_parse_error("GDF1 S64 1 1\n1234567", 13);
}

TEST(Pgm, BinaryRoundTrip) {
  std::mt19937_64 rng(52);
  for (int trial = 0; trial < 30; ++trial) {
    const BinaryGrid g = testing::random_image(rng, testing::random_extents(rng, 2, 20), 0.5);
    const std::string bytes = io::encode_pgm(g);
    EXPECT_TRUE(bytes.starts_with("P5\n"));
    ASSERT_EQ(io::decode_pgm_binary(bytes), g);
    ASSERT_EQ(io::decode_image(bytes), g);
  }
}

TEST(Pgm, ScalarRoundTripAndRange) {
  ScalarGrid g(Extents{3, 2}, std::vector<std::int64_t>{0, 1, 300, 65535, 7, 256});
  EXPECT_EQ(io::decode_pgm_scalar(io::encode_pgm(g)), g);
  g[0] = 65536;
  EXPECT_THROW(io::encode_pgm(g), DomainError);
  g[0] = -1;
  EXPECT_THROW(io::encode_pgm(g), DomainError);
  EXPECT_THROW(io::encode_pgm(ScalarGrid(Extents{2, 2, 2}, 0)), DomainError);
  EXPECT_THROW(io::encode_pgm(BinaryGrid(Extents{4}, 0)), DomainError);
}

TEST(Pgm, AsciiWithComments) {
  const BinaryGrid g = io::decode_pgm_binary("P2\n# a comment\n3 2\n# another\n9\n0 9 0\n5 0 0\n");
  EXPECT_EQ(g, BinaryGrid(Extents{3, 2}, std::vector<std::uint8_t>{0, 1, 0, 1, 0, 0}));
  EXPECT_THROW(io::decode_pgm_binary("P2\n2 1\n9\n0 10\n"), io::ParseError);
  EXPECT_THROW(io::decode_pgm_binary("P2\n2 1\n9\n0\n"), io::ParseError);
  EXPECT_THROW(io::decode_pgm_binary("P6\n2 1\n9\n0 1\n"), io::ParseError);
  EXPECT_THROW(io::decode_pgm_binary(std::string("P5\n2 1\n255\n\x01", 12)), io::ParseError);
}

TEST(Balls, ParseExample) {
  const BallSet b = io::decode_balls("BALLS 2\n3 4 9\n");
  ASSERT_EQ(b.size(), 1u);
  EXPECT_EQ(b.center(0)[0], 3);
  EXPECT_EQ(b.center(0)[1], 4);
  EXPECT_EQ(b.sq_radius(0), 9);
}

TEST(Balls, CommentsBlankLinesAndRoundTrip) {
  const BallSet b = io::decode_balls("# generated\nBALLS 3\n\n1 2 3 4\n# mid\n0 0 0 1\r\n");
  ASSERT_EQ(b.size(), 2u);
  EXPECT_EQ(io::decode_balls(io::encode_balls(b)), b);
  EXPECT_EQ(io::encode_balls(io::decode_balls(io::encode_balls(b))), io::encode_balls(b));
}

TEST(Balls, Errors) {
  EXPECT_THROW(io::decode_balls(""), io::ParseError);
  EXPECT_THROW(io::decode_balls("BALL 2\n"), io::ParseError);
  EXPECT_THROW(io::decode_balls("BALLS 0\n"), io::ParseError);
  EXPECT_THROW(io::decode_balls("BALLS 2\n1 2\n"), io::ParseError);
  EXPECT_THROW(io::decode_balls("BALLS 2\n1 2 3 4\n"), io::ParseError);
  try {
    io::decode_balls("BALLS 2\n1 2 0\n");
    ADD_FAILURE();
  } catch (const io::ParseError& e) {
    EXPECT_EQ(e.offset(), 12u);
  }
}

TEST(Measurement, RoundTripIsExact) {
  const BinaryGrid g = testing::bordered_cube(6, 3);
  const Measurement m = measure(rdma(g), g, DiameterMode::exact);
  const std::string csv = io::encode_measurement(m);
  const Measurement back = io::decode_measurement(csv);
  EXPECT_EQ(io::encode_measurement(back), csv);
  EXPECT_EQ(back.mode, DiameterMode::exact);
  EXPECT_EQ(back.foreground, m.foreground);
  ASSERT_EQ(back.balls.size(), m.balls.size());
  for (std::size_t i = 0; i < m.balls.size(); ++i) {
    EXPECT_EQ(back.balls[i].rho_norm, m.balls[i].rho_norm);
    EXPECT_EQ(back.balls[i].kappa, m.balls[i].kappa);
  }
  EXPECT_NE(csv.find("index,c0,c1,c2,r,rho,kappa,rho_norm,kappa_norm\n"), std::string::npos);
}

TEST(Measurement, Errors) {
  EXPECT_THROW(io::decode_measurement("# foreground=3\n"), io::ParseError);
  EXPECT_THROW(io::decode_measurement("index,c0,r,rho,kappa,rho_norm,kappa_norm\n"),
               io::ParseError);
  EXPECT_THROW(io::decode_measurement("# foreground=3\nindex,c0,r,rho,kappa,rho_norm,kappa_norm\n"
                                      "0,1,x,1,1,1,1\n"),
               io::ParseError);
}

TEST(Files, MissingFileIsIoError) {
  EXPECT_THROW(io::read_file("/nonexistent/dir/file"), io::IoError);
  EXPECT_THROW(io::write_file("/nonexistent/dir/file", "x"), io::IoError);
  const auto path = std::filesystem::temp_directory_path() / "edtk_io_test.bin";
  io::write_file(path, std::string("a\0b", 3));
  EXPECT_EQ(io::read_file(path), std::string("a\0b", 3));
  std::filesystem::remove(path);
}

TEST(Files, DetectsFormats) {
  EXPECT_TRUE(io::looks_like_pgm("P5\n1 1\n255\n"));
  EXPECT_FALSE(io::looks_like_pgm("GDF1"));
  EXPECT_TRUE(io::looks_like_balls("# c\nBALLS 2\n"));
  EXPECT_FALSE(io::looks_like_balls("GDF1 BIN 1 1\n"));
  EXPECT_THROW(io::decode_image(io::encode_grid(ScalarGrid(Extents{2}, 0))), io::ParseError);
}

}  // namespace
}  // namespace edtk
