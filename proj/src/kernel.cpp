#include "swih/kernel.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <string>

namespace swih {

void validate_kernel(const KernelSpec& k) {
  if (k.kw < 1 || k.kh < 1)
    throw InvalidKernelError("kernel: dimensions must be >= 1");
  if (k.kw % 2 == 0 || k.kh % 2 == 0)
    throw InvalidKernelError("kernel: dimensions must be odd, got " +
                             std::to_string(k.kw) + "x" +
                             std::to_string(k.kh));
  if (k.kind == KernelKind::GaussianChebyshev && !(k.sigma > 0.0))
    throw InvalidKernelError("kernel: sigma must be positive");
}

int manhattan_distance(int px, int py, int cx, int cy) noexcept {
  return std::abs(px - cx) + std::abs(py - cy);
}

double weight_at(const KernelSpec& k, int dx, int dy) {
  validate_kernel(k);
  const int hx = k.hx();
  const int hy = k.hy();
  if (std::abs(dx) > hx || std::abs(dy) > hy)
    throw OutOfRangeError("kernel: offset (" + std::to_string(dx) + "," +
                          std::to_string(dy) + ") outside " +
                          std::to_string(k.kw) + "x" + std::to_string(k.kh));

  switch (k.kind) {
    case KernelKind::Uniform:
      return 1.0;
    case KernelKind::ManhattanLinear:
      return static_cast<double>((hx + hy + 1) -
                                 (std::abs(dx) + std::abs(dy)));
    case KernelKind::ChebyshevLinear: {
      // Non-square kernels scale each axis offset to the larger half-extent
      // before taking the max, then round to the nearest integer level.
      const int hmax = std::max(hx, hy);
      const double sx = static_cast<double>(std::abs(dx)) * hmax /
                        std::max(hx, 1);
      const double sy = static_cast<double>(std::abs(dy)) * hmax /
                        std::max(hy, 1);
      const long level = std::lround(std::max(sx, sy));
      return static_cast<double>(hmax + 1 - level);
    }
    case KernelKind::GaussianChebyshev: {
      const double nx = static_cast<double>(std::abs(dx)) / std::max(hx, 1);
      const double ny = static_cast<double>(std::abs(dy)) / std::max(hy, 1);
      const double r = std::max(nx, ny);
      return std::exp(-(r * r) / (2.0 * k.sigma * k.sigma));
    }
  }
  throw InvalidKernelError("kernel: unknown kind");
}

double kernel_weight_sum(const KernelSpec& k) {
  validate_kernel(k);
  const std::int64_t hx = k.hx();
  const std::int64_t hy = k.hy();
  switch (k.kind) {
    case KernelKind::Uniform:
      return static_cast<double>(std::int64_t(k.kw) * k.kh);
    case KernelKind::ManhattanLinear: {
      // sum over the grid of (hx+hy+1) - |dx| - |dy|
      const std::int64_t area = std::int64_t(k.kw) * k.kh;
      const std::int64_t sum_ax = hx * (hx + 1);  // sum of |dx| along one row
      const std::int64_t sum_ay = hy * (hy + 1);
      return static_cast<double>(area * (hx + hy + 1) - k.kh * sum_ax -
                                 k.kw * sum_ay);
    }
    default: {
      double s = 0.0;
      for (int dy = -k.hy(); dy <= k.hy(); ++dy)
        for (int dx = -k.hx(); dx <= k.hx(); ++dx) s += weight_at(k, dx, dy);
      return s;
    }
  }
}

}  // namespace swih
