// swih — spatially weighted local histograms and sliding-window matching.
//
// Subcommands:
//   likelihood  target model + likelihood map over a search image
//   bench       sliding-window timing sweeps, CSV output
//   scene       deterministic synthetic clutter scene with a planted target
//   query       single-window histogram dump

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "swih/baselines.hpp"
#include "swih/bench.hpp"
#include "swih/engine.hpp"
#include "swih/matching.hpp"
#include "swih/pgm.hpp"
#include "swih/scene.hpp"

namespace {

using namespace swih;

KernelSpec parse_kernel(const std::string& kind, int kw, int kh) {
  KernelSpec k;
  k.kw = kw;
  k.kh = kh;
  if (kind == "uniform") {
    k.kind = KernelKind::Uniform;
  } else if (kind == "manhattan") {
    k.kind = KernelKind::ManhattanLinear;
  } else if (kind == "chebyshev") {
    k.kind = KernelKind::ChebyshevLinear;
  } else if (kind.rfind("gaussian:", 0) == 0) {
    k.kind = KernelKind::GaussianChebyshev;
    try {
      k.sigma = std::stod(kind.substr(9));
    } catch (...) {
      throw ConfigError("bad sigma in kernel spec '" + kind + "'");
    }
  } else {
    throw ConfigError("unknown kernel '" + kind +
                      "' (uniform|manhattan|chebyshev|gaussian:<sigma>)");
  }
  validate_kernel(k);
  return k;
}

MapMethod parse_method(const std::string& s) {
  if (s == "swih") return MapMethod::Swih;
  if (s == "brute") return MapMethod::Brute;
  if (s == "cake") return MapMethod::Cake;
  if (s == "plain") return MapMethod::Plain;
  throw ConfigError("unknown method '" + s + "' (swih|brute|cake|plain)");
}

SimilarityKind parse_sim(const std::string& s) {
  if (s == "bhattacharyya") return SimilarityKind::Bhattacharyya;
  if (s == "intersection") return SimilarityKind::Intersection;
  throw ConfigError("unknown similarity '" + s +
                    "' (bhattacharyya|intersection)");
}

RingRule parse_ring_rule(const std::string& s) {
  if (s == "mean") return RingRule::Mean;
  if (s == "level") return RingRule::Level;
  throw ConfigError("unknown ring rule '" + s + "' (mean|level)");
}

BorderPolicy parse_border(const std::string& s) {
  if (s == "strict") return BorderPolicy::Strict;
  if (s == "clipped") return BorderPolicy::Clipped;
  throw ConfigError("unknown border policy '" + s + "' (strict|clipped)");
}

TableBuildOptions table_options_from_env() {
  TableBuildOptions opt;
  if (const char* env = std::getenv("SWIH_MEM_BUDGET_MB")) {
    try {
      const long mb = std::stol(env);
      if (mb < 1) throw ConfigError("SWIH_MEM_BUDGET_MB must be >= 1");
      opt.memory_budget_bytes = std::size_t(mb) << 20;
    } catch (const ConfigError&) {
      throw;
    } catch (...) {
      throw ConfigError("cannot parse SWIH_MEM_BUDGET_MB");
    }
  }
  return opt;
}

// Kernel size list: "7" (square) or "61x91", comma separated.
std::vector<std::pair<int, int>> parse_kernel_sizes(const std::string& list) {
  std::vector<std::pair<int, int>> sizes;
  std::size_t pos = 0;
  while (pos <= list.size()) {
    const std::size_t comma = list.find(',', pos);
    const std::string tok =
        list.substr(pos, comma == std::string::npos ? comma : comma - pos);
    if (tok.empty()) throw ConfigError("empty kernel size in '" + list + "'");
    try {
      const std::size_t x = tok.find('x');
      if (x == std::string::npos) {
        const int k = std::stoi(tok);
        sizes.emplace_back(k, k);
      } else {
        sizes.emplace_back(std::stoi(tok.substr(0, x)),
                           std::stoi(tok.substr(x + 1)));
      }
    } catch (const std::exception&) {
      throw ConfigError("bad kernel size '" + tok + "'");
    }
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return sizes;
}

std::vector<std::string> split_list(const std::string& list) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  while (pos <= list.size()) {
    const std::size_t comma = list.find(',', pos);
    out.push_back(
        list.substr(pos, comma == std::string::npos ? comma : comma - pos));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

struct LikelihoodArgs {
  std::string search, templ, out, csv;
  std::string kernel = "manhattan", method = "swih", sim = "bhattacharyya";
  std::string ring_rule = "mean";
  int bins = 16, kw = 0, kh = 0, rings = 4, threads = 1;
};

int run_likelihood(const LikelihoodArgs& a) {
  const KernelSpec kernel = parse_kernel(a.kernel, a.kw, a.kh);
  MatchOptions opt;
  opt.sim = parse_sim(a.sim);
  opt.cake = WeddingCakeConfig{a.rings, parse_ring_rule(a.ring_rule)};
  opt.threads = a.threads;
  opt.tables = table_options_from_env();

  const GrayImage search = read_pgm_file(a.search);
  const GrayImage templ = read_pgm_file(a.templ);
  const Quantizer q(a.bins);
  const MapMethod method = parse_method(a.method);
  const WeightedHistogram model =
      target_model_for_method(templ, q, kernel, method, opt.cake);
  const LikelihoodMap map = likelihood_map(search, model, q, kernel, method, opt);

  write_pgm_file(map_to_gray(map), a.out);
  if (!a.csv.empty()) write_map_csv_file(map, a.csv);

  const Peak p = peak(map);
  std::printf("peak x=%d y=%d score=%.9f\n", p.center_x, p.center_y, p.score);
  return 0;
}

struct BenchArgs {
  std::string kernels, csv;
  std::string methods = "swih,brute,cake,plain";
  std::string kernel = "manhattan", ring_rule = "mean";
  int width = 640, height = 480, bins = 16, rings = 4, reps = 3;
  std::uint64_t seed = 1;
};

int run_bench(const BenchArgs& a) {
  const auto sizes = parse_kernel_sizes(a.kernels);
  const auto methods = split_list(a.methods);

  BenchConfig cfg;
  cfg.repetitions = a.reps;
  cfg.cake = WeddingCakeConfig{a.rings, parse_ring_rule(a.ring_rule)};
  cfg.tables = table_options_from_env();

  const GrayImage img = random_image(a.width, a.height, a.seed);
  const FeatureImage fi = quantize_image(img, Quantizer(a.bins));

  std::ofstream csv;
  if (!a.csv.empty()) {
    std::ifstream probe(a.csv);
    const bool fresh = !probe.good() || probe.peek() == EOF;
    probe.close();
    csv.open(a.csv, std::ios::app);
    if (!csv) throw IoError("bench: cannot open '" + a.csv + "'");
    if (fresh) write_bench_csv_header(csv);
  }
  write_bench_csv_header(std::cout);

  for (const auto& name : methods) {
    const MapMethod method = parse_method(name);
    for (const auto& [kw, kh] : sizes) {
      KernelSpec k = parse_kernel(a.kernel, kw, kh);
      if (method == MapMethod::Plain) k.kind = KernelKind::Uniform;
      const BenchRecord rec = bench_sweep(fi, method, k, cfg);
      write_bench_csv_row(rec, std::cout);
      if (csv.is_open()) write_bench_csv_row(rec, csv);
    }
  }
  return 0;
}

struct SceneArgs {
  std::string search, templ;
  int width = 160, height = 120, kw = 31, kh = 31;
  int plant_x = -1, plant_y = -1;
  double clutter = 0.6, corruption = 0.5;
  std::uint64_t seed = 0;
};

int run_scene(const SceneArgs& a) {
  SceneSpec spec;
  spec.seed = a.seed;
  spec.width = a.width;
  spec.height = a.height;
  spec.kw = a.kw;
  spec.kh = a.kh;
  spec.plant_cx = a.plant_x;
  spec.plant_cy = a.plant_y;
  spec.clutter = a.clutter;
  spec.corruption = a.corruption;

  const Scene scene = generate_scene(spec);
  write_pgm_file(scene.search, a.search);
  write_pgm_file(scene.templ, a.templ);
  std::printf("truth x=%d y=%d\n", scene.truth_x, scene.truth_y);
  return 0;
}

struct QueryArgs {
  std::string image, dump_tables;
  std::string kernel = "manhattan", method = "swih", border = "strict";
  std::string ring_rule = "mean";
  int bins = 16, kw = 0, kh = 0, cx = 0, cy = 0, rings = 4;
  bool normalized = false;
};

int run_query(const QueryArgs& a) {
  KernelSpec kernel = parse_kernel(a.kernel, a.kw, a.kh);
  const MapMethod method = parse_method(a.method);
  if (method == MapMethod::Plain) kernel.kind = KernelKind::Uniform;
  const WindowQuery query{a.cx, a.cy, kernel, parse_border(a.border)};

  const GrayImage img = read_pgm_file(a.image);
  const FeatureImage fi = quantize_image(img, Quantizer(a.bins));

  WeightedHistogram hist;
  if (method == MapMethod::Brute) {
    hist = brute_force_histogram(fi, query);
  } else {
    const IntegralTableSet tables = build_tables(fi, table_options_from_env());
    if (!a.dump_tables.empty()) tables.save_file(a.dump_tables);
    switch (method) {
      case MapMethod::Swih: hist = swih_query(tables, query); break;
      case MapMethod::Cake:
        hist = wedding_cake_histogram(
            tables, query,
            WeddingCakeConfig{a.rings, parse_ring_rule(a.ring_rule)});
        break;
      default: hist = plain_local_histogram(tables, query); break;
    }
  }
  if (a.normalized) hist = normalize(hist);

  std::printf("bin,value\n");
  for (int b = 0; b < hist.bins(); ++b)
    std::printf("%d,%.12g\n", b, hist.value(b));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact spatially weighted local histograms in O(1)"};
  app.require_subcommand(1);

  LikelihoodArgs la;
  CLI::App* like = app.add_subcommand(
      "likelihood", "sliding-window histogram matching likelihood map");
  like->add_option("--search", la.search, "search image (PGM)")->required();
  like->add_option("--template", la.templ, "template image (PGM)")->required();
  like->add_option("--bins", la.bins, "histogram bins");
  like->add_option("--kernel", la.kernel,
                   "uniform|manhattan|chebyshev|gaussian:<sigma>");
  like->add_option("--kw", la.kw, "kernel width (odd)")->required();
  like->add_option("--kh", la.kh, "kernel height (odd)")->required();
  like->add_option("--method", la.method, "swih|brute|cake|plain");
  like->add_option("--sim", la.sim, "bhattacharyya|intersection");
  like->add_option("--out", la.out, "output likelihood map (PGM)")->required();
  like->add_option("--csv", la.csv, "optional raw score CSV");
  like->add_option("--rings", la.rings, "wedding-cake rings");
  like->add_option("--ring-rule", la.ring_rule, "mean|level");
  like->add_option("--threads", la.threads, "sweep threads");

  BenchArgs ba;
  CLI::App* bench = app.add_subcommand("bench", "timing sweeps");
  bench->add_option("--width", ba.width, "image width");
  bench->add_option("--height", ba.height, "image height");
  bench->add_option("--bins", ba.bins, "histogram bins");
  bench->add_option("--kernels", ba.kernels, "odd sizes, e.g. 7,31 or 61x91")
      ->required();
  bench->add_option("--methods", ba.methods, "comma list of methods");
  bench->add_option("--kernel", ba.kernel, "weighting for swih/brute/cake");
  bench->add_option("--seed", ba.seed, "image seed");
  bench->add_option("--csv", ba.csv, "append records to this CSV");
  bench->add_option("--rings", ba.rings, "wedding-cake rings");
  bench->add_option("--ring-rule", ba.ring_rule, "mean|level");
  bench->add_option("--reps", ba.reps, "timed repetitions per cell");

  SceneArgs sa;
  CLI::App* scene = app.add_subcommand("scene", "synthetic clutter scene");
  scene->add_option("--seed", sa.seed, "scene seed");
  scene->add_option("--width", sa.width, "scene width");
  scene->add_option("--height", sa.height, "scene height");
  scene->add_option("--kw", sa.kw, "template width (odd)");
  scene->add_option("--kh", sa.kh, "template height (odd)");
  scene->add_option("--plant-x", sa.plant_x, "plant center x (-1: seeded)");
  scene->add_option("--plant-y", sa.plant_y, "plant center y (-1: seeded)");
  scene->add_option("--clutter", sa.clutter, "clutter density [0,1]");
  scene->add_option("--corruption", sa.corruption,
                    "outer-ring corruption fraction [0,1]");
  scene->add_option("--search", sa.search, "output search image (PGM)")
      ->required();
  scene->add_option("--template", sa.templ, "output template image (PGM)")
      ->required();

  QueryArgs qa;
  CLI::App* query = app.add_subcommand("query", "single-window histogram");
  query->add_option("--image", qa.image, "input image (PGM)")->required();
  query->add_option("--bins", qa.bins, "histogram bins");
  query->add_option("--kernel", qa.kernel,
                    "uniform|manhattan|chebyshev|gaussian:<sigma>");
  query->add_option("--kw", qa.kw, "kernel width (odd)")->required();
  query->add_option("--kh", qa.kh, "kernel height (odd)")->required();
  query->add_option("--cx", qa.cx, "window center x")->required();
  query->add_option("--cy", qa.cy, "window center y")->required();
  query->add_option("--method", qa.method, "swih|brute|cake|plain");
  query->add_option("--border", qa.border, "strict|clipped");
  query->add_option("--rings", qa.rings, "wedding-cake rings");
  query->add_option("--ring-rule", qa.ring_rule, "mean|level");
  query->add_flag("--normalize", qa.normalized, "print normalized values");
  query->add_option("--dump-tables", qa.dump_tables,
                    "save the integral tables (SWIH1 binary)");

  try {
    app.parse(argc, argv);
    if (like->parsed()) return run_likelihood(la);
    if (bench->parsed()) return run_bench(ba);
    if (scene->parsed()) return run_scene(sa);
    if (query->parsed()) return run_query(qa);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
