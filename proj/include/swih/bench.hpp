#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "swih/baselines.hpp"
#include "swih/image.hpp"
#include "swih/kernel.hpp"
#include "swih/matching.hpp"

namespace swih {

struct BenchRecord {
  std::string method;
  int width = 0;
  int height = 0;
  int kw = 0;
  int kh = 0;
  int bins = 0;
  double build_ms = 0.0;
  double query_total_ms = 0.0;  // full sweep over all strict centers
  double query_mean_us = 0.0;   // query_total / number of strict centers
};

struct BenchConfig {
  int repetitions = 3;  // timed sweeps per cell; the median is reported
  bool warmup = true;   // one untimed sweep before measuring
  WeddingCakeConfig cake;
  TableBuildOptions tables;
};

// Seeded random image for benchmarking; uniform i.i.d. intensities.
GrayImage random_image(int width, int height, std::uint64_t seed);

// Times one method at one kernel size: table build (where the method needs
// one) plus a full sliding-window sweep over every strict center.
BenchRecord bench_sweep(const FeatureImage& fi, MapMethod method,
                        const KernelSpec& kernel,
                        const BenchConfig& cfg = {});

const char* method_name(MapMethod m);

// Header: method,width,height,kw,kh,bins,build_ms,query_total_ms,query_mean_us
void write_bench_csv_header(std::ostream& out);
void write_bench_csv_row(const BenchRecord& r, std::ostream& out);

}  // namespace swih
