// edtk: command line front end.
//
// Exit codes: 0 success, 1 domain or contract error (including an oracle
// disagreement under --oracle), 2 I/O or parse error.

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "edtk/filter.hpp"
#include "edtk/io.hpp"
#include "edtk/medial.hpp"
#include "edtk/oracle.hpp"
#include "edtk/redt.hpp"
#include "edtk/sdt.hpp"

namespace {

using namespace edtk;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Globals {
  unsigned threads = 1;
  bool oracle = false;
};

bool wants_pgm(const std::string& path) {
  return path.size() >= 4 && path.compare(path.size() - 4, 4, ".pgm") == 0;
}

void check_oracle(bool agree, const std::string& what) {
  if (!agree) throw ContractViolation("oracle disagreement: " + what);
  std::cerr << "oracle: " << what << " agrees\n";
}

Extents parse_extents_flag(const std::string& text) {
  std::vector<std::int64_t> sizes;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    try {
      std::size_t used = 0;
      sizes.push_back(std::stoll(part, &used));
      if (used != part.size()) throw std::invalid_argument(part);
    } catch (const std::logic_error&) {
      throw UsageError("invalid --extents '" + text + "'");
    }
  }
  try {
    return Extents(std::move(sizes));
  } catch (const BoundsError& e) {
    throw UsageError(std::string("invalid --extents: ") + e.what());
  }
}

BinaryGrid load_image(const std::string& path) { return io::decode_image(io::read_file(path)); }
BallSet load_balls(const std::string& path) { return io::decode_balls(io::read_file(path)); }

void save_binary(const std::string& path, const BinaryGrid& g) {
  io::write_file(path, wants_pgm(path) ? io::encode_pgm(g) : io::encode_grid(g));
}
void save_scalar(const std::string& path, const ScalarGrid& g) {
  io::write_file(path, wants_pgm(path) ? io::encode_pgm(g) : io::encode_grid(g));
}

DiameterMode parse_diameter(const std::string& s) {
  return s == "exact" ? DiameterMode::exact : DiameterMode::bbox;
}

int run(int argc, char** argv) {
  CLI::App app{"Separable Euclidean distance, reverse distance and medial axis toolkit"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--threads", g.threads, "Worker threads per pass (0 = one per core)")
      ->capture_default_str();
  app.add_flag("--oracle", g.oracle, "Also run the brute-force reference and compare (small inputs)");

  std::string in, in2, out, extents_text, reduction = "intersect", diameter;
  double rho0 = 0.0, kappa0 = 0.0;

  auto* c_sdt = app.add_subcommand("sdt", "Squared Euclidean distance transform");
  c_sdt->add_option("IN", in)->required();
  c_sdt->add_option("-o", out)->required();

  auto* c_vor = app.add_subcommand("voronoi", "Nearest background cell of every cell");
  c_vor->add_option("IN", in)->required();
  c_vor->add_option("-o", out)->required();

  auto* c_redt = app.add_subcommand("redt", "Upper envelope of ball paraboloids (value grid)");
  c_redt->add_option("BALLS", in)->required();
  c_redt->add_option("--extents", extents_text)->required();
  c_redt->add_option("-o", out)->required();

  auto* c_rec = app.add_subcommand("reconstruct", "Union of balls as a binary image");
  c_rec->add_option("BALLS", in)->required();
  c_rec->add_option("--extents", extents_text)->required();
  c_rec->add_option("-o", out)->required();

  auto* c_sk = app.add_subcommand("sk", "Skeleton of upper-envelope paraboloids");
  c_sk->add_option("IN", in)->required();
  c_sk->add_option("-o", out)->required();

  auto* c_rdma = app.add_subcommand("rdma", "Reduced discrete medial axis");
  c_rdma->add_option("IN", in)->required();
  c_rdma->add_option("-o", out)->required();
  c_rdma->add_option("--reduction", reduction)
      ->check(CLI::IsMember({"intersect", "centers"}))
      ->capture_default_str();
  bool no_repair = false;
  c_rdma->add_flag("--no-repair", no_repair,
                   "Skip coverage restoration and promotion to maximal balls");

  auto* c_meas = app.add_subcommand("measure", "Thickness and covering of every ball (CSV)");
  c_meas->add_option("BALLS", in)->required();
  c_meas->add_option("IMAGE", in2)->required();
  c_meas->add_option("-o", out)->required();
  c_meas->add_option("--diameter", diameter)->check(CLI::IsMember({"bbox", "exact"}));

  auto* c_filt = app.add_subcommand("filter", "Keep balls passing both thresholds");
  c_filt->add_option("CSV", in)->required();
  c_filt->add_option("--rho0", rho0)->required();
  c_filt->add_option("--kappa0", kappa0)->required();
  c_filt->add_option("-o", out)->required();
  c_filt->add_option("--diameter", diameter)->check(CLI::IsMember({"bbox", "exact"}));

  auto* c_stats = app.add_subcommand("stats", "Foreground cells of an image or size of a ball file");
  c_stats->add_option("FILE", in)->required();

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }
  const unsigned t = g.threads;

  if (c_sdt->parsed()) {
    const BinaryGrid image = load_image(in);
    const SdtResult r = sdt(image, t);
    if (g.oracle) check_oracle(r.dist == oracle::brute_sdt(image), "sdt");
    save_scalar(out, r.dist);
  } else if (c_vor->parsed()) {
    const BinaryGrid image = load_image(in);
    const SiteGrid sites = voronoi_labeling(image, t);
    if (g.oracle) {
      const ScalarGrid ref = oracle::brute_sdt(image);
      const Extents& ext = image.extents();
      bool agree = true;
      for (std::uint64_t i = 0; i < sites.size() && agree; ++i) {
        const Coord p = ext.coords_of(i);
        const Coord s = ext.coords_of(sites[i]);
        std::int64_t d = 0;
        for (std::size_t k = 0; k < p.size(); ++k) d += (p[k] - s[k]) * (p[k] - s[k]);
        agree = d == ref[i] && image[sites[i]] == 0;
      }
      check_oracle(agree, "voronoi");
    }
    io::write_file(out, io::encode_grid(sites));
  } else if (c_redt->parsed()) {
    const BallSet balls = load_balls(in);
    const Extents ext = parse_extents_flag(extents_text);
    const PowerField f = redt_map(balls, ext, t);
    if (g.oracle) check_oracle(f.value == oracle::brute_redt(balls, ext), "redt");
    io::write_file(out, io::encode_grid(f.value));
  } else if (c_rec->parsed()) {
    const BallSet balls = load_balls(in);
    const Extents ext = parse_extents_flag(extents_text);
    const BinaryGrid image = reconstruct(balls, ext, t);
    if (g.oracle) check_oracle(image == oracle::brute_union(balls, ext), "reconstruct");
    save_binary(out, image);
  } else if (c_sk->parsed()) {
    const BinaryGrid image = load_image(in);
    const BallSet sk = sk_extract(image, t);
    if (g.oracle) {
      check_oracle(oracle::brute_union(sk, image.extents()) == image, "sk reconstruction");
    }
    io::write_file(out, io::encode_balls(sk));
  } else if (c_rdma->parsed()) {
    const BinaryGrid image = load_image(in);
    const Reduction mode = reduction == "centers" ? Reduction::centers : Reduction::intersect;
    const BallSet balls = rdma(image, mode, t, !no_repair);
    if (g.oracle) {
      check_oracle(oracle::brute_union(balls, image.extents()) == image, "rdma reconstruction");
      const BallSet dma = oracle::brute_dma(image);
      std::vector<std::uint64_t> maximal;
      for (std::size_t i = 0; i < dma.size(); ++i) {
        maximal.push_back(image.extents().linear_index(dma.center(i)));
      }
      bool subset = true;
      for (std::size_t i = 0; i < balls.size() && subset; ++i) {
        subset = std::find(maximal.begin(), maximal.end(),
                           image.extents().linear_index(balls.center(i))) != maximal.end();
      }
      if (!no_repair) check_oracle(subset, "rdma maximality");
    }
    io::write_file(out, io::encode_balls(balls));
  } else if (c_meas->parsed()) {
    const BallSet balls = load_balls(in);
    const BinaryGrid image = load_image(in2);
    const Measurement m =
        measure(balls, image, diameter.empty() ? DiameterMode::bbox : parse_diameter(diameter), t);
    if (g.oracle) {
      const auto ref = oracle::brute_power_label(balls, image.extents());
      std::vector<std::uint64_t> kappa(balls.size(), 0);
      bool agree = true;
      const PowerField f = power_labeling(balls, image.extents(), t);
      for (std::uint64_t i = 0; i < image.size(); ++i) {
        agree = agree && f.value[i] == ref.value[i];
        if (ref.tie[i] == 0) agree = agree && f.owner[i] == ref.label[i];
      }
      check_oracle(agree, "power labeling");
    }
    io::write_file(out, io::encode_measurement(m));
  } else if (c_filt->parsed()) {
    Measurement m = io::decode_measurement(io::read_file(in));
    if (!diameter.empty()) renormalize(m, parse_diameter(diameter));
    io::write_file(out, io::encode_balls(filter(m, FilterParams{rho0, kappa0})));
  } else if (c_stats->parsed()) {
    const std::string bytes = io::read_file(in);
    if (io::looks_like_balls(bytes)) {
      const BallSet balls = io::decode_balls(bytes);
      std::cout << "dims " << balls.dims() << "\nballs " << balls.size() << "\n";
    } else {
      const BinaryGrid image = io::decode_image(bytes);
      std::cout << "dims " << image.extents().dims() << "\nextents "
                << image.extents().to_string() << "\ncells " << image.size()
                << "\nforeground " << foreground_count(image) << "\n";
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const edtk::io::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const edtk::io::IoError& e) {
    std::cerr << "i/o error: " << e.what() << "\n";
    return 2;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const edtk::DomainError& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return 1;
  } catch (const edtk::ContractViolation& e) {
    std::cerr << "contract violation: " << e.what() << "\n";
    return 1;
  } catch (const edtk::BoundsError& e) {
    std::cerr << "bounds error: " << e.what() << "\n";
    return 1;
  }
}
