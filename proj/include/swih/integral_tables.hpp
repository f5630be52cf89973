#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "swih/errors.hpp"
#include "swih/image.hpp"

namespace swih {

namespace detail {

#ifdef SWIH_INSTRUMENT_READS
// Per-thread count of table cell loads, for the query-cost invariant tests.
extern thread_local std::uint64_t table_read_count;

inline std::int64_t load_cell(const std::int64_t* plane, std::size_t i) {
  ++table_read_count;
  return plane[i];
}
#else
inline std::int64_t load_cell(const std::int64_t* plane, std::size_t i) {
  return plane[i];
}
#endif

}  // namespace detail

// Inclusive pixel rectangle.
struct RectRegion {
  int x0 = 0;
  int y0 = 0;
  int x1 = 0;
  int y1 = 0;

  int width() const noexcept { return x1 - x0 + 1; }
  int height() const noexcept { return y1 - y0 + 1; }
  std::int64_t count() const noexcept {
    return static_cast<std::int64_t>(width()) * height();
  }
};

enum class TableKind { Plain, XRamp, YRamp };
enum class Direction { SE, SW, NE, NW };

struct TableBuildOptions {
  // Upper bound on the combined size of the three tables.
  std::size_t memory_budget_bytes = std::size_t(2048) << 20;
};

// Zero-padded cumulative tables, one (W+1)x(H+1) plane per bin:
//   plain — each pixel contributes 1
//   xramp — each pixel contributes its 0-based column index x
//   yramp — each pixel contributes its 0-based row index y
// All entries are exact 64-bit integers. Immutable after construction;
// any number of threads may query concurrently.
class IntegralTableSet {
 public:
  static IntegralTableSet build(const FeatureImage& fi,
                                const TableBuildOptions& opt = {});

  int width() const noexcept { return w_; }
  int height() const noexcept { return h_; }
  int bins() const noexcept { return b_; }

  // Padded-coordinate accessor: x in [0, W], y in [0, H].
  std::int64_t cell(TableKind kind, int x, int y, int bin) const;

  // Four-corner rectangle sum: T(x1+1,y1+1) - T(x0,y1+1) - T(x1+1,y0)
  // + T(x0,y0). Equals the direct per-pixel sum of the table's weight over
  // rectangle pixels whose bin matches. O(1) in the rectangle size.
  std::int64_t rect_sum(TableKind kind, const RectRegion& r, int bin) const;

  // Reconstructs the four directionally weighted cumulative tables, where
  // the per-pixel weight is the pixel's offset from the far corner in the
  // named direction:
  //   SE: x + y                       NE: x + (H-1-y)
  //   SW: (W-1-x) + y                 NW: (W-1-x) + (H-1-y)
  // Exact linear combinations of the three stored tables; storing three
  // tables instead of four costs nothing in fidelity.
  std::int64_t directional_value(Direction dir, int x, int y, int bin) const;

  // Raw plane access for the query hot paths.
  const std::int64_t* plane(TableKind kind, int bin) const noexcept {
    return table(kind).data() + static_cast<std::size_t>(bin) * plane_stride();
  }
  std::size_t plane_stride() const noexcept {
    return static_cast<std::size_t>(w_ + 1) * (h_ + 1);
  }
  std::size_t row_stride() const noexcept {
    return static_cast<std::size_t>(w_ + 1);
  }

  // Flat binary dump: magic "SWIH1", little-endian u32 W, H, b, then the
  // plain, xramp, yramp tables as contiguous little-endian 64-bit integers.
  void save(std::ostream& out) const;
  void save_file(const std::string& path) const;
  static IntegralTableSet load(std::istream& in);
  static IntegralTableSet load_file(const std::string& path);

 private:
  IntegralTableSet(int w, int h, int b);

  const std::vector<std::int64_t>& table(TableKind kind) const noexcept {
    switch (kind) {
      case TableKind::XRamp: return xramp_;
      case TableKind::YRamp: return yramp_;
      default: return plain_;
    }
  }

  void check_rect(const RectRegion& r, int bin) const;

  std::size_t idx(int x, int y) const noexcept {
    return static_cast<std::size_t>(y) * (w_ + 1) + x;
  }

  int w_ = 0;
  int h_ = 0;
  int b_ = 0;
  std::vector<std::int64_t> plain_;
  std::vector<std::int64_t> xramp_;
  std::vector<std::int64_t> yramp_;
};

inline IntegralTableSet build_tables(const FeatureImage& fi,
                                     const TableBuildOptions& opt = {}) {
  return IntegralTableSet::build(fi, opt);
}

}  // namespace swih
