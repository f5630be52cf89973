#include "swih/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <ostream>
#include <random>

#include "swih/engine.hpp"
#include "swih/integral_tables.hpp"

namespace swih {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

// Keeps the optimizer from discarding query results.
volatile std::int64_t g_sink_i = 0;
volatile double g_sink_d = 0.0;

}  // namespace

GrayImage random_image(int width, int height, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  GrayImage img(width, height);
  for (auto& p : img.pixels()) p = static_cast<std::uint8_t>(rng() % 256);
  return img;
}

const char* method_name(MapMethod m) {
  switch (m) {
    case MapMethod::Swih: return "swih";
    case MapMethod::Brute: return "brute";
    case MapMethod::Cake: return "cake";
    case MapMethod::Plain: return "plain";
  }
  return "?";
}

BenchRecord bench_sweep(const FeatureImage& fi, MapMethod method,
                        const KernelSpec& kernel, const BenchConfig& cfg) {
  validate_kernel(kernel);
  if (kernel.kw > fi.width() || kernel.kh > fi.height())
    throw SizeError("bench: kernel larger than image");

  BenchRecord rec;
  rec.method = method_name(method);
  rec.width = fi.width();
  rec.height = fi.height();
  rec.kw = kernel.kw;
  rec.kh = kernel.kh;
  rec.bins = fi.bins();

  const int hx = kernel.hx();
  const int hy = kernel.hy();
  const int nx = fi.width() - kernel.kw + 1;
  const int ny = fi.height() - kernel.kh + 1;
  const std::int64_t centers = std::int64_t(nx) * ny;

  std::optional<IntegralTableSet> tables;
  if (method != MapMethod::Brute) {
    const auto t0 = Clock::now();
    tables.emplace(build_tables(fi, cfg.tables));
    rec.build_ms = ms_since(t0);
  }

  std::optional<BruteForcePlan> brute;
  if (method == MapMethod::Brute) brute.emplace(kernel);
  std::optional<WeddingCakePlan> cake;
  if (method == MapMethod::Cake) cake.emplace(kernel, cfg.cake);
  const KernelSpec uniform{KernelKind::Uniform, kernel.kw, kernel.kh, 0.5};

  std::vector<std::int64_t> counts(fi.bins());
  std::vector<double> weights(fi.bins());

  auto sweep = [&]() {
    std::int64_t sink_i = 0;
    double sink_d = 0.0;
    for (int cy = hy; cy < hy + ny; ++cy)
      for (int cx = hx; cx < hx + nx; ++cx) {
        switch (method) {
          case MapMethod::Swih:
            swih_query_into(*tables, {cx, cy, kernel, BorderPolicy::Strict},
                            counts);
            sink_i += counts[0];
            break;
          case MapMethod::Plain:
            plain_local_histogram_into(
                *tables, {cx, cy, uniform, BorderPolicy::Strict}, counts);
            sink_i += counts[0];
            break;
          case MapMethod::Cake:
            cake->histogram_into(*tables, cx, cy, BorderPolicy::Strict,
                                 weights);
            sink_d += weights[0];
            break;
          case MapMethod::Brute:
            if (kernel.integer_weighted()) {
              brute->counts_into(fi, cx, cy, BorderPolicy::Strict, counts);
              sink_i += counts[0];
            } else {
              brute->weights_into(fi, cx, cy, BorderPolicy::Strict, weights);
              sink_d += weights[0];
            }
            break;
        }
      }
    g_sink_i = sink_i;
    g_sink_d = sink_d;
  };

  if (cfg.warmup) sweep();

  std::vector<double> times;
  times.reserve(std::max(cfg.repetitions, 1));
  for (int r = 0; r < std::max(cfg.repetitions, 1); ++r) {
    const auto t0 = Clock::now();
    sweep();
    times.push_back(ms_since(t0));
  }
  std::sort(times.begin(), times.end());
  rec.query_total_ms = times[times.size() / 2];
  rec.query_mean_us = rec.query_total_ms * 1000.0 / double(centers);
  return rec;
}

void write_bench_csv_header(std::ostream& out) {
  out << "method,width,height,kw,kh,bins,build_ms,query_total_ms,"
         "query_mean_us\n";
}

void write_bench_csv_row(const BenchRecord& r, std::ostream& out) {
  char buf[128];
  std::snprintf(buf, sizeof(buf), "%.6f,%.6f,%.4f", r.build_ms,
                r.query_total_ms, r.query_mean_us);
  out << r.method << ',' << r.width << ',' << r.height << ',' << r.kw << ','
      << r.kh << ',' << r.bins << ',' << buf << '\n';
}

}  // namespace swih
