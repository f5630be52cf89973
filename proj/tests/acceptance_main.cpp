// Acceptance suite: one pass/fail line per criterion, nonzero exit when
// any criterion fails. Run a single criterion with `acceptance --only N`.

#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <cstring>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "swih/baselines.hpp"
#include "swih/bench.hpp"
#include "swih/engine.hpp"
#include "swih/matching.hpp"
#include "swih/scene.hpp"

using namespace swih;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string fmt(const char* f, ...) {
  char buf[512];
  va_list args;
  va_start(args, f);
  std::vsnprintf(buf, sizeof(buf), f, args);
  va_end(args);
  return buf;
}

GrayImage seeded_gray(int w, int h, std::uint64_t seed) {
  return random_image(w, h, seed);
}

// 1. Exactness: swih_query == brute force, integer for integer, over >= 50
//    random images, b in {2,8,16}, Manhattan kernels from 1x1 to 31x31,
//    at every strict center.
Outcome exactness() {
  const std::vector<std::pair<int, int>> kernels = {
      {1, 1}, {3, 3}, {5, 9}, {7, 7}, {11, 11}, {31, 31}};
  std::mt19937_64 rng(4242);
  long long windows = 0, mismatches = 0;
  int images = 0;

  for (int i = 0; i < 54; ++i) {
    // Sizes span 17x13 .. 64x64; every third image is forced large enough
    // for the 31x31 kernel.
    int w = 17 + int(rng() % 48);
    int h = 13 + int(rng() % 52);
    if (i % 3 == 0) {
      w = std::max(w, 33);
      h = std::max(h, 33);
    }
    const GrayImage img = seeded_gray(w, h, rng());
    ++images;
    for (int bins : {2, 8, 16}) {
      const FeatureImage fi = quantize_image(img, Quantizer(bins));
      const IntegralTableSet t = build_tables(fi);
      std::vector<std::int64_t> got(bins), want(bins);
      for (const auto& [kw, kh] : kernels) {
        if (kw > w || kh > h) continue;
        const KernelSpec k{KernelKind::ManhattanLinear, kw, kh, 0.5};
        const BruteForcePlan plan(k);
        for (int cy = k.hy(); cy < h - k.hy(); ++cy)
          for (int cx = k.hx(); cx < w - k.hx(); ++cx) {
            swih_query_into(t, {cx, cy, k, BorderPolicy::Strict}, got);
            plan.counts_into(fi, cx, cy, BorderPolicy::Strict, want);
            ++windows;
            if (std::memcmp(got.data(), want.data(),
                            bins * sizeof(std::int64_t)) != 0)
              ++mismatches;
          }
      }
    }
  }
  return {mismatches == 0 && images >= 50,
          fmt("%d images, %lld windows, %lld mismatches", images, windows,
              mismatches)};
}

// 2. O(1) queries: per-query mean at 61x61 vs 7x7 on 640x480, b=16 —
//    bounded ratio for swih and cake, growth for brute force.
Outcome constant_time() {
  const FeatureImage fi =
      quantize_image(seeded_gray(640, 480, 7), Quantizer(16));
  BenchConfig cfg;
  cfg.repetitions = 3;

  auto mean_us = [&](MapMethod m, int k) {
    const KernelSpec spec{KernelKind::ManhattanLinear, k, k, 0.5};
    return bench_sweep(fi, m, spec, cfg).query_mean_us;
  };

  const double swih_ratio = mean_us(MapMethod::Swih, 61) /
                            mean_us(MapMethod::Swih, 7);
  const double cake_ratio = mean_us(MapMethod::Cake, 61) /
                            mean_us(MapMethod::Cake, 7);
  const double brute_ratio = mean_us(MapMethod::Brute, 61) /
                             mean_us(MapMethod::Brute, 7);

  const bool pass = swih_ratio <= 1.5 && cake_ratio <= 1.5 &&
                    brute_ratio >= 20.0;
  return {pass, fmt("61x61 vs 7x7 per-query ratios: swih %.3f (<=1.5), "
                    "cake %.3f (<=1.5), brute %.1f (>=20)",
                    swih_ratio, cake_ratio, brute_ratio)};
}

// 3. End-to-end speedup on a 345x460 region with a 61x91 window, b=16.
Outcome speedup() {
  const FeatureImage fi =
      quantize_image(seeded_gray(345, 460, 11), Quantizer(16));
  const KernelSpec k{KernelKind::ManhattanLinear, 61, 91, 0.5};
  BenchConfig cfg;
  cfg.repetitions = 3;

  const BenchRecord swih = bench_sweep(fi, MapMethod::Swih, k, cfg);
  const BenchRecord brute = bench_sweep(fi, MapMethod::Brute, k, cfg);

  const double swih_total = swih.build_ms + swih.query_total_ms;
  const double brute_total = brute.build_ms + brute.query_total_ms;
  const double ratio = brute_total / swih_total;
  return {ratio >= 2.0, fmt("brute %.1f ms vs swih %.1f ms (build %.1f + "
                            "queries %.1f): %.2fx (>=2 required)",
                            brute_total, swih_total, swih.build_ms,
                            swih.query_total_ms, ratio)};
}

// 4. Wedding-cake convergence: mean TV error vs brute force is
//    non-increasing in the ring count for a 21x21 Manhattan kernel, and the
//    approximation is exact for square Chebyshev kernels at full rings.
Outcome cake_convergence() {
  const FeatureImage fi =
      quantize_image(seeded_gray(128, 128, 21), Quantizer(16));
  const IntegralTableSet t = build_tables(fi);
  const KernelSpec man{KernelKind::ManhattanLinear, 21, 21, 0.5};
  const BruteForcePlan brute(man);

  std::mt19937_64 rng(2121);
  std::vector<std::pair<int, int>> centers;
  for (int i = 0; i < 100; ++i)
    centers.emplace_back(10 + int(rng() % 108), 10 + int(rng() % 108));

  std::vector<std::int64_t> counts(16);
  std::vector<double> weights(16);
  std::vector<double> errors;
  for (int m : {1, 2, 3, 5, 8, 11}) {
    const WeddingCakePlan plan(man, {m, RingRule::Mean});
    double mean_tv = 0.0;
    for (const auto& [cx, cy] : centers) {
      plan.histogram_into(t, cx, cy, BorderPolicy::Strict, weights);
      brute.counts_into(fi, cx, cy, BorderPolicy::Strict, counts);
      double cake_mass = 0.0, brute_mass = 0.0;
      for (int b = 0; b < 16; ++b) {
        cake_mass += weights[b];
        brute_mass += double(counts[b]);
      }
      double tv = 0.0;
      for (int b = 0; b < 16; ++b)
        tv += std::abs(weights[b] / cake_mass -
                       double(counts[b]) / brute_mass);
      mean_tv += 0.5 * tv;
    }
    errors.push_back(mean_tv / double(centers.size()));
  }
  bool monotone = true;
  for (std::size_t i = 1; i < errors.size(); ++i)
    if (errors[i] > errors[i - 1] + 1e-12) monotone = false;

  // Chebyshev square kernels, full ring count, mean rule: exact.
  double worst = 0.0;
  for (int k : {5, 9, 21}) {
    const KernelSpec cheb{KernelKind::ChebyshevLinear, k, k, 0.5};
    const WeddingCakePlan plan(cheb, {(k - 1) / 2 + 1, RingRule::Mean});
    const BruteForcePlan ref(cheb);
    for (int i = 0; i < 50; ++i) {
      const int cx = (k - 1) / 2 + int(rng() % (128 - k + 1));
      const int cy = (k - 1) / 2 + int(rng() % (128 - k + 1));
      plan.histogram_into(t, cx, cy, BorderPolicy::Strict, weights);
      ref.counts_into(fi, cx, cy, BorderPolicy::Strict, counts);
      for (int b = 0; b < 16; ++b)
        worst = std::max(worst,
                         std::abs(weights[b] - double(counts[b])));
    }
  }
  return {monotone && worst <= 1e-9,
          fmt("TV by rings {1,2,3,5,8,11}: %.5f %.5f %.5f %.5f %.5f %.5f; "
              "chebyshev full-ring max err %.2e",
              errors[0], errors[1], errors[2], errors[3], errors[4],
              errors[5], worst)};
}

// 5. Likelihood maps from swih and brute force agree cell for cell.
Outcome map_equivalence() {
  SceneSpec spec;
  spec.seed = 2025;
  spec.width = 96;
  spec.height = 80;
  spec.kw = 21;
  spec.kh = 21;
  spec.clutter = 0.5;
  spec.corruption = 0.3;
  const Scene scene = generate_scene(spec);

  const Quantizer q(16);
  const KernelSpec k{KernelKind::ManhattanLinear, 21, 21, 0.5};
  const WeightedHistogram model = target_model(scene.templ, q, k);
  const LikelihoodMap a =
      likelihood_map(scene.search, model, q, k, MapMethod::Swih);
  const LikelihoodMap b =
      likelihood_map(scene.search, model, q, k, MapMethod::Brute);

  double worst = 0.0;
  for (std::size_t i = 0; i < a.scores.size(); ++i)
    worst = std::max(worst, std::abs(a.scores[i] - b.scores[i]));
  const Peak pa = peak(a);
  const Peak pb = peak(b);
  const bool same_peak = pa.map_x == pb.map_x && pa.map_y == pb.map_y &&
                         pa.score == pb.score;
  return {worst <= 1e-12 && same_peak,
          fmt("%zu cells, max |diff| %.2e, peaks (%d,%d) vs (%d,%d)",
              a.scores.size(), worst, pa.center_x, pa.center_y, pb.center_x,
              pb.center_y)};
}

// 6. Robustness: 100 corrupted clutter scenes; the spatially weighted map
//    must localize the plant in >= 95% of the seeds and strictly more
//    often than the plain-histogram map. Both methods are compared under
//    histogram intersection: the decoys preserve the template's global
//    proportions exactly, and Bhattacharyya's square root damps the
//    remaining weighted-proportion shift below the plant's corruption
//    penalty, so it cannot rank them for any template under this kernel.
Outcome robustness() {
  const Quantizer q(16);
  const KernelSpec weighted{KernelKind::ManhattanLinear, 31, 31, 0.5};
  const KernelSpec uniform{KernelKind::Uniform, 31, 31, 0.5};
  MatchOptions opt;
  opt.sim = SimilarityKind::Intersection;

  int hits_weighted = 0, hits_plain = 0;
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    SceneSpec spec;
    spec.seed = seed;
    spec.width = 160;
    spec.height = 120;
    spec.kw = 31;
    spec.kh = 31;
    spec.clutter = 0.6;
    spec.corruption = 0.5;
    const Scene scene = generate_scene(spec);

    const WeightedHistogram wmodel = target_model(scene.templ, q, weighted);
    const Peak wp = peak(likelihood_map(scene.search, wmodel, q, weighted,
                                        MapMethod::Swih, opt));
    if (wp.center_x == scene.truth_x && wp.center_y == scene.truth_y)
      ++hits_weighted;

    const WeightedHistogram pmodel = target_model(scene.templ, q, uniform);
    const Peak pp = peak(likelihood_map(scene.search, pmodel, q, uniform,
                                        MapMethod::Plain, opt));
    if (pp.center_x == scene.truth_x && pp.center_y == scene.truth_y)
      ++hits_plain;
  }
  return {hits_weighted >= 95 && hits_weighted > hits_plain,
          fmt("weighted hit rate %d%%, plain %d%% (intersection measure)",
              hits_weighted, hits_plain)};
}

// 7. Invariant property suites with >= 1000 total cases.
Outcome property_suites() {
  long long cases = 0, failures = 0;
  auto expect = [&](bool ok) {
    ++cases;
    if (!ok) ++failures;
  };

  // Quantizer partition over every value and several bin counts.
  for (int b : {1, 2, 8, 16, 256}) {
    const Quantizer q(b);
    int prev = 0;
    for (int v = 0; v <= 255; ++v) {
      const int bin = q.quantize(std::uint8_t(v));
      expect(bin >= 0 && bin < b && (v == 0 || bin >= prev));
      if (v > 0 && bin != prev)
        expect(v == (bin * 256 + b - 1) / b);
      prev = bin;
    }
  }

  std::mt19937_64 rng(777);
  const GrayImage img = seeded_gray(32, 32, 99);
  const FeatureImage fi = quantize_image(img, Quantizer(8));
  const IntegralTableSet t = build_tables(fi);

  // Four-corner correctness on random rectangles, all three tables.
  for (int trial = 0; trial < 200; ++trial) {
    const int x0 = int(rng() % 32), x1 = x0 + int(rng() % (32 - x0));
    const int y0 = int(rng() % 32), y1 = y0 + int(rng() % (32 - y0));
    const int bin = int(rng() % 8);
    const RectRegion r{x0, y0, x1, y1};
    std::int64_t direct[3] = {0, 0, 0};
    for (int y = y0; y <= y1; ++y)
      for (int x = x0; x <= x1; ++x)
        if (fi.at(x, y) == bin) {
          direct[0] += 1;
          direct[1] += x;
          direct[2] += y;
        }
    expect(t.rect_sum(TableKind::Plain, r, bin) == direct[0]);
    expect(t.rect_sum(TableKind::XRamp, r, bin) == direct[1]);
    expect(t.rect_sum(TableKind::YRamp, r, bin) == direct[2]);
  }

  // Directional reconstruction against explicit directional weights.
  for (int trial = 0; trial < 400; ++trial) {
    const int x = int(rng() % 33), y = int(rng() % 33);
    const int bin = int(rng() % 8);
    std::int64_t se = 0, sw = 0, ne = 0, nw = 0;
    for (int j = 0; j < y; ++j)
      for (int i = 0; i < x; ++i) {
        if (fi.at(i, j) != bin) continue;
        se += i + j;
        sw += (32 - 1 - i) + j;
        ne += i + (32 - 1 - j);
        nw += (32 - 1 - i) + (32 - 1 - j);
      }
    expect(t.directional_value(Direction::SE, x, y, bin) == se);
    expect(t.directional_value(Direction::SW, x, y, bin) == sw);
    expect(t.directional_value(Direction::NE, x, y, bin) == ne);
    expect(t.directional_value(Direction::NW, x, y, bin) == nw);
  }

  // Mass conservation for strict weighted queries.
  for (int trial = 0; trial < 150; ++trial) {
    const int kw = 1 + 2 * int(rng() % 8);
    const int kh = 1 + 2 * int(rng() % 8);
    const KernelSpec k{KernelKind::ManhattanLinear, kw, kh, 0.5};
    const int cx = k.hx() + int(rng() % (32 - kw + 1));
    const int cy = k.hy() + int(rng() % (32 - kh + 1));
    const WeightedHistogram h =
        swih_query(t, {cx, cy, k, BorderPolicy::Strict});
    expect(h.sum() == kernel_weight_sum(k));
  }

  // Bhattacharyya bounds on random normalized pairs.
  for (int trial = 0; trial < 200; ++trial) {
    const int bins = 2 + int(rng() % 16);
    WeightedHistogram a(bins), b(bins);
    for (int i = 0; i < bins; ++i) {
      a.add(i, double(rng() % 50));
      b.add(i, double(rng() % 50));
    }
    a.add(int(rng() % bins), 1.0);
    b.add(int(rng() % bins), 1.0);
    const WeightedHistogram pa = normalize(a), pb = normalize(b);
    const double s =
        similarity(SimilarityKind::Bhattacharyya, pa.values(), pb.values());
    expect(s >= 0.0 && s <= 1.0);
    expect(std::abs(similarity(SimilarityKind::Bhattacharyya, pa.values(),
                               pa.values()) -
                    1.0) <= 1e-12);
  }

  return {failures == 0 && cases >= 1000,
          fmt("%lld cases, %lld failures", cases, failures)};
}

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  for (int i = 1; i < argc; ++i)
    if (std::string(argv[i]) == "--only" && i + 1 < argc)
      only = std::atoi(argv[i + 1]);

  const std::vector<std::pair<const char*, std::function<Outcome()>>>
      criteria = {
          {"exactness vs brute force", exactness},
          {"query time invariant of kernel size", constant_time},
          {"end-to-end speedup over brute force", speedup},
          {"wedding-cake convergence and ring-constant exactness",
           cake_convergence},
          {"method-equivalent likelihood maps", map_equivalence},
          {"robust localization on corrupted scenes", robustness},
          {"module invariant property suites", property_suites},
      };

  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    if (only != 0 && int(i + 1) != only) continue;
    const Outcome out = criteria[i].second();
    std::printf("%s  %zu. %s — %s\n", out.pass ? "PASS" : "FAIL", i + 1,
                criteria[i].first, out.detail.c_str());
    std::fflush(stdout);
    if (!out.pass) ++failed;
  }
  return failed == 0 ? 0 : 1;
}
