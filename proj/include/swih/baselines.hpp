#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "swih/engine.hpp"
#include "swih/histogram.hpp"
#include "swih/image.hpp"
#include "swih/integral_tables.hpp"
#include "swih/kernel.hpp"

namespace swih {

// Direct per-pixel weighted count, O(kw*kh) per window. Works for every
// kernel kind; this is the ground-truth oracle the exact path is tested
// against.
class BruteForcePlan {
 public:
  explicit BruteForcePlan(const KernelSpec& kernel);

  const KernelSpec& kernel() const noexcept { return kernel_; }

  // Integer-weight kernels only; exact 64-bit counts.
  void counts_into(const FeatureImage& fi, int cx, int cy,
                   BorderPolicy border, std::span<std::int64_t> out) const;

  // Any kernel kind; double accumulation.
  void weights_into(const FeatureImage& fi, int cx, int cy,
                    BorderPolicy border, std::span<double> out) const;

 private:
  KernelSpec kernel_;
  std::vector<std::int64_t> grid_i_;  // kw*kh weights, integer kernels
  std::vector<double> grid_d_;
};

WeightedHistogram brute_force_histogram(const FeatureImage& fi,
                                        const WindowQuery& q);

enum class RingRule {
  Mean,   // ring weight = mean of the true kernel weights over the ring
  Level,  // kernel weight at the ring's outer radius on the x-axis
};

struct WeddingCakeConfig {
  int rings = 4;
  RingRule rule = RingRule::Mean;
};

// Frag-track style approximation: the window is covered by m nested
// rectangles; ring i is R_i \ R_{i+1} and gets one constant weight. Each
// ring histogram is the difference of two plain integral-histogram queries,
// so a query costs O(rings * bins) independent of the kernel size.
class WeddingCakePlan {
 public:
  WeddingCakePlan(const KernelSpec& kernel, const WeddingCakeConfig& cfg);

  int rings() const noexcept { return m_; }
  const KernelSpec& kernel() const noexcept { return kernel_; }

  // Per-side shrink of nested rectangle i (0-based), and its ring weight.
  int shrink_x(int i) const { return shrink_x_[i]; }
  int shrink_y(int i) const { return shrink_y_[i]; }
  double ring_weight(int i) const { return ring_weight_[i]; }

  void histogram_into(const IntegralTableSet& t, int cx, int cy,
                      BorderPolicy border, std::span<double> out) const;

 private:
  KernelSpec kernel_;
  int m_ = 1;
  std::vector<int> shrink_x_;
  std::vector<int> shrink_y_;
  std::vector<double> ring_weight_;
};

WeightedHistogram wedding_cake_histogram(const IntegralTableSet& t,
                                         const WindowQuery& q,
                                         const WeddingCakeConfig& cfg);

}  // namespace swih
