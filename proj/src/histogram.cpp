#include "swih/histogram.hpp"

namespace swih {

WeightedHistogram WeightedHistogram::from_counts(
    std::span<const std::int64_t> counts) {
  std::vector<double> v(counts.size());
  for (std::size_t i = 0; i < counts.size(); ++i)
    v[i] = static_cast<double>(counts[i]);
  return WeightedHistogram(std::move(v), false);
}

double WeightedHistogram::sum() const noexcept {
  double s = 0.0;
  for (double v : values_) s += v;
  return s;
}

WeightedHistogram normalize(const WeightedHistogram& h) {
  const double mass = h.sum();
  if (mass == 0.0)
    throw ZeroMassError("normalize: histogram has zero mass");
  std::vector<double> v(h.bins());
  for (int i = 0; i < h.bins(); ++i) v[i] = h.value(i) / mass;
  return WeightedHistogram(std::move(v), true);
}

}  // namespace swih
