#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "swih/errors.hpp"

namespace swih {

// Per-bin nonnegative weights for a region. Raw histograms hold exact
// integer counts (stored in doubles, which are exact below 2^53 — far above
// anything the integral tables can produce); normalized histograms hold
// probabilities summing to 1.
class WeightedHistogram {
 public:
  WeightedHistogram() = default;
  explicit WeightedHistogram(int bins) : values_(bins, 0.0) {}
  WeightedHistogram(std::vector<double> values, bool normalized)
      : values_(std::move(values)), normalized_(normalized) {}

  static WeightedHistogram from_counts(std::span<const std::int64_t> counts);

  int bins() const noexcept { return static_cast<int>(values_.size()); }
  double value(int bin) const { return values_[bin]; }
  std::span<const double> values() const noexcept { return values_; }
  bool normalized() const noexcept { return normalized_; }

  double sum() const noexcept;

  void add(int bin, double w) { values_[bin] += w; }

 private:
  std::vector<double> values_;
  bool normalized_ = false;
};

// Divides by the total mass. Throws ZeroMassError on an all-zero histogram.
WeightedHistogram normalize(const WeightedHistogram& h);

}  // namespace swih
