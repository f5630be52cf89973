#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>

#include "swih/histogram.hpp"
#include "swih/integral_tables.hpp"
#include "swih/kernel.hpp"

namespace swih {

enum class BorderPolicy {
  Strict,   // window must lie fully inside the image
  Clipped,  // window intersected with the image; center must be inside
};

struct WindowQuery {
  int cx = 0;
  int cy = 0;
  KernelSpec kernel;
  BorderPolicy border = BorderPolicy::Strict;
};

// One quadrant of the window together with the affine coefficients that
// reproduce the kernel weight at every in-image pixel (x, y) of the
// quadrant as sx*x + sy*y + beta.
struct QuadrantTerm {
  std::optional<RectRegion> rect;  // nullopt when the quadrant is empty
  std::int64_t sx = 0;
  std::int64_t sy = 0;
  std::int64_t beta = 0;
};

// Disjoint partition of the window: TL holds the center row and column, so
// the four closed quadrants tile the window with no overlap.
struct QuadrantDecomposition {
  QuadrantTerm tl, tr, bl, br;

  std::array<const QuadrantTerm*, 4> terms() const noexcept {
    return {&tl, &tr, &bl, &br};
  }
};

// Throws WindowOutOfBoundsError when the query violates its border policy
// for an image of the given dimensions.
void validate_window(int width, int height, const WindowQuery& q);

// Splits the window into quadrants and decomposes the kernel weights into
// per-quadrant affine functions of the absolute pixel coordinates. Only
// quadrant-affine kernels are accepted (Uniform, ManhattanLinear); others
// throw UnsupportedKernelError and should use the wedding-cake baseline.
QuadrantDecomposition decompose(const WindowQuery& q);

// Per bin: sx * rect_sum(xramp) + sy * rect_sum(yramp) + beta *
// rect_sum(plain). Exact integers, O(bins) work independent of rect size.
// An empty rect yields the zero histogram.
WeightedHistogram quadrant_histogram(const IntegralTableSet& t,
                                     const std::optional<RectRegion>& rect,
                                     std::int64_t sx, std::int64_t sy,
                                     std::int64_t beta);

// Exact spatially weighted local histogram of the window, raw (unnormalized).
// Equals the brute-force weighted count bin for bin; O(bins) per query
// regardless of the kernel size. Normalize with normalize(): the divisor is
// the raw mass, which for strict windows equals kernel_weight_sum().
WeightedHistogram swih_query(const IntegralTableSet& t, const WindowQuery& q);

// Allocation-free variant for sweeps; out.size() must equal t.bins().
void swih_query_into(const IntegralTableSet& t, const WindowQuery& q,
                     std::span<std::int64_t> out);

// Unweighted local histogram of the window (one four-corner query on the
// plain table per bin).
WeightedHistogram plain_local_histogram(const IntegralTableSet& t,
                                        const WindowQuery& q);
void plain_local_histogram_into(const IntegralTableSet& t,
                                const WindowQuery& q,
                                std::span<std::int64_t> out);

}  // namespace swih
