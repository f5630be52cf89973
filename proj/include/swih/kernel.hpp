#pragma once

#include <cstdint>

#include "swih/errors.hpp"

namespace swih {

enum class KernelKind {
  Uniform,
  ManhattanLinear,
  ChebyshevLinear,
  GaussianChebyshev,
};

// Spatial weighting function over pixel offsets from a window center.
// Dimensions must be odd so the kernel has an integer center.
struct KernelSpec {
  KernelKind kind = KernelKind::Uniform;
  int kw = 1;
  int kh = 1;
  double sigma = 0.5;  // GaussianChebyshev only, in units of half-extents

  int hx() const noexcept { return (kw - 1) / 2; }
  int hy() const noexcept { return (kh - 1) / 2; }

  // Kinds whose weight is affine in (x, y) on each closed quadrant; only
  // these run on the exact O(1) path.
  bool quadrant_affine() const noexcept {
    return kind == KernelKind::Uniform || kind == KernelKind::ManhattanLinear;
  }

  bool integer_weighted() const noexcept {
    return kind != KernelKind::GaussianChebyshev;
  }
};

// Throws InvalidKernelError on even or non-positive dimensions or bad sigma.
void validate_kernel(const KernelSpec& k);

// |px - cx| + |py - cy|
int manhattan_distance(int px, int py, int cx, int cy) noexcept;

// Weight of the pixel at offset (dx, dy) from the kernel center; always > 0.
// Throws OutOfRangeError when the offset lies outside the kernel.
double weight_at(const KernelSpec& k, int dx, int dy);

// Total weight mass of the kernel. Depends on the spec only, never on the
// image position, which is what makes one normalization constant valid for
// every strict window.
double kernel_weight_sum(const KernelSpec& k);

}  // namespace swih
