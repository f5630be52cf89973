#include "swih/baselines.hpp"

#include <cmath>
#include <string>

namespace swih {

BruteForcePlan::BruteForcePlan(const KernelSpec& kernel) : kernel_(kernel) {
  validate_kernel(kernel);
  const int hx = kernel.hx();
  const int hy = kernel.hy();
  grid_d_.resize(std::size_t(kernel.kw) * kernel.kh);
  for (int dy = -hy; dy <= hy; ++dy)
    for (int dx = -hx; dx <= hx; ++dx)
      grid_d_[std::size_t(dy + hy) * kernel.kw + (dx + hx)] =
          weight_at(kernel, dx, dy);
  if (kernel.integer_weighted()) {
    grid_i_.resize(grid_d_.size());
    for (std::size_t i = 0; i < grid_d_.size(); ++i)
      grid_i_[i] = std::llround(grid_d_[i]);
  }
}

void BruteForcePlan::counts_into(const FeatureImage& fi, int cx, int cy,
                                 BorderPolicy border,
                                 std::span<std::int64_t> out) const {
  if (!kernel_.integer_weighted())
    throw InvalidKernelError(
        "brute force counts: kernel weights are not integers");
  validate_window(fi.width(), fi.height(), {cx, cy, kernel_, border});
  const int hx = kernel_.hx();
  const int hy = kernel_.hy();
  for (auto& v : out) v = 0;
  if (border == BorderPolicy::Strict) {
    for (int dy = -hy; dy <= hy; ++dy) {
      const std::uint16_t* row = fi.row(cy + dy) + (cx - hx);
      const std::int64_t* w = grid_i_.data() + std::size_t(dy + hy) * kernel_.kw;
      for (int i = 0; i < kernel_.kw; ++i) out[row[i]] += w[i];
    }
    return;
  }
  for (int dy = -hy; dy <= hy; ++dy) {
    const int y = cy + dy;
    if (y < 0 || y >= fi.height()) continue;
    for (int dx = -hx; dx <= hx; ++dx) {
      const int x = cx + dx;
      if (x < 0 || x >= fi.width()) continue;
      out[fi.at(x, y)] += grid_i_[std::size_t(dy + hy) * kernel_.kw + (dx + hx)];
    }
  }
}

void BruteForcePlan::weights_into(const FeatureImage& fi, int cx, int cy,
                                  BorderPolicy border,
                                  std::span<double> out) const {
  validate_window(fi.width(), fi.height(), {cx, cy, kernel_, border});
  const int hx = kernel_.hx();
  const int hy = kernel_.hy();
  for (auto& v : out) v = 0.0;
  for (int dy = -hy; dy <= hy; ++dy) {
    const int y = cy + dy;
    if (y < 0 || y >= fi.height()) continue;
    for (int dx = -hx; dx <= hx; ++dx) {
      const int x = cx + dx;
      if (x < 0 || x >= fi.width()) continue;
      out[fi.at(x, y)] += grid_d_[std::size_t(dy + hy) * kernel_.kw + (dx + hx)];
    }
  }
}

WeightedHistogram brute_force_histogram(const FeatureImage& fi,
                                        const WindowQuery& q) {
  const BruteForcePlan plan(q.kernel);
  if (q.kernel.integer_weighted()) {
    std::vector<std::int64_t> acc(fi.bins(), 0);
    plan.counts_into(fi, q.cx, q.cy, q.border, acc);
    return WeightedHistogram::from_counts(acc);
  }
  std::vector<double> acc(fi.bins(), 0.0);
  plan.weights_into(fi, q.cx, q.cy, q.border, acc);
  return WeightedHistogram(std::move(acc), false);
}

WeddingCakePlan::WeddingCakePlan(const KernelSpec& kernel,
                                 const WeddingCakeConfig& cfg)
    : kernel_(kernel), m_(cfg.rings) {
  validate_kernel(kernel);
  const int hx = kernel.hx();
  const int hy = kernel.hy();
  const int max_rings = std::min(hx, hy) + 1;
  if (m_ < 1 || m_ > max_rings)
    throw ConfigError("wedding cake: ring count " + std::to_string(m_) +
                      " outside [1, " + std::to_string(max_rings) + "] for " +
                      std::to_string(kernel.kw) + "x" +
                      std::to_string(kernel.kh));

  // Nested rectangle i (0-based, outermost first) shrinks both axes
  // proportionally; shrink = ceil(i * h / m) so m = min(hx,hy)+1 reproduces
  // the one-pixel rings exactly.
  shrink_x_.resize(m_);
  shrink_y_.resize(m_);
  for (int i = 0; i < m_; ++i) {
    shrink_x_[i] = static_cast<int>((std::int64_t(i) * hx + m_ - 1) / m_);
    shrink_y_[i] = static_cast<int>((std::int64_t(i) * hy + m_ - 1) / m_);
  }

  ring_weight_.assign(m_, 0.0);
  if (cfg.rule == RingRule::Level) {
    for (int i = 0; i < m_; ++i)
      ring_weight_[i] = weight_at(kernel, hx - shrink_x_[i], 0);
    return;
  }
  // Mean rule: classify every kernel offset into its ring (the innermost
  // nested rectangle containing it) and average the true weights.
  std::vector<double> sum(m_, 0.0);
  std::vector<std::int64_t> cnt(m_, 0);
  for (int dy = -hy; dy <= hy; ++dy)
    for (int dx = -hx; dx <= hx; ++dx) {
      int ring = 0;
      for (int i = m_ - 1; i > 0; --i) {
        if (std::abs(dx) <= hx - shrink_x_[i] &&
            std::abs(dy) <= hy - shrink_y_[i]) {
          ring = i;
          break;
        }
      }
      sum[ring] += weight_at(kernel, dx, dy);
      cnt[ring] += 1;
    }
  for (int i = 0; i < m_; ++i) ring_weight_[i] = sum[i] / cnt[i];
}

void WeddingCakePlan::histogram_into(const IntegralTableSet& t, int cx,
                                     int cy, BorderPolicy border,
                                     std::span<double> out) const {
  validate_window(t.width(), t.height(), {cx, cy, kernel_, border});
  for (auto& v : out) v = 0.0;

  // sum_i w_i * (hist_i - hist_{i+1})  ==  sum_i (w_i - w_{i-1}) * hist_i
  std::vector<std::int64_t> counts(t.bins());
  for (int i = 0; i < m_; ++i) {
    const double coeff = ring_weight_[i] - (i > 0 ? ring_weight_[i - 1] : 0.0);
    const KernelSpec nested{KernelKind::Uniform, kernel_.kw - 2 * shrink_x_[i],
                            kernel_.kh - 2 * shrink_y_[i], 0.5};
    plain_local_histogram_into(t, {cx, cy, nested, border}, counts);
    for (int b = 0; b < t.bins(); ++b)
      out[b] += coeff * static_cast<double>(counts[b]);
  }
}

WeightedHistogram wedding_cake_histogram(const IntegralTableSet& t,
                                         const WindowQuery& q,
                                         const WeddingCakeConfig& cfg) {
  const WeddingCakePlan plan(q.kernel, cfg);
  std::vector<double> acc(t.bins(), 0.0);
  plan.histogram_into(t, q.cx, q.cy, q.border, acc);
  return WeightedHistogram(std::move(acc), false);
}

}  // namespace swih
