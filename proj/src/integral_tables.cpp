#include "swih/integral_tables.hpp"

#include <array>
#include <fstream>
#include <istream>
#include <ostream>
#include <string>

namespace swih {

namespace detail {
#ifdef SWIH_INSTRUMENT_READS
thread_local std::uint64_t table_read_count = 0;
#endif
}  // namespace detail

namespace {

void put_u32le(std::ostream& out, std::uint32_t v) {
  std::array<char, 4> b{static_cast<char>(v & 0xff),
                        static_cast<char>((v >> 8) & 0xff),
                        static_cast<char>((v >> 16) & 0xff),
                        static_cast<char>((v >> 24) & 0xff)};
  out.write(b.data(), 4);
}

std::uint32_t get_u32le(std::istream& in) {
  std::array<unsigned char, 4> b{};
  in.read(reinterpret_cast<char*>(b.data()), 4);
  if (!in) throw IoError("table dump: truncated header");
  return std::uint32_t(b[0]) | (std::uint32_t(b[1]) << 8) |
         (std::uint32_t(b[2]) << 16) | (std::uint32_t(b[3]) << 24);
}

void put_table_le(std::ostream& out, const std::int64_t* data,
                  std::size_t n) {
  std::vector<char> buf(n * 8);
  for (std::size_t i = 0; i < n; ++i) {
    const auto u = static_cast<std::uint64_t>(data[i]);
    for (int k = 0; k < 8; ++k)
      buf[i * 8 + k] = static_cast<char>((u >> (8 * k)) & 0xff);
  }
  out.write(buf.data(), static_cast<std::streamsize>(buf.size()));
}

void get_table_le(std::istream& in, std::int64_t* data, std::size_t n) {
  std::vector<unsigned char> buf(n * 8);
  in.read(reinterpret_cast<char*>(buf.data()),
          static_cast<std::streamsize>(buf.size()));
  if (static_cast<std::size_t>(in.gcount()) != buf.size())
    throw IoError("table dump: truncated table data");
  for (std::size_t i = 0; i < n; ++i) {
    std::uint64_t u = 0;
    for (int k = 0; k < 8; ++k)
      u |= std::uint64_t(buf[i * 8 + k]) << (8 * k);
    data[i] = static_cast<std::int64_t>(u);
  }
}

constexpr char kMagic[5] = {'S', 'W', 'I', 'H', '1'};

}  // namespace

IntegralTableSet::IntegralTableSet(int w, int h, int b)
    : w_(w), h_(h), b_(b) {
  const std::size_t n = plane_stride() * b;
  plain_.assign(n, 0);
  xramp_.assign(n, 0);
  yramp_.assign(n, 0);
}

IntegralTableSet IntegralTableSet::build(const FeatureImage& fi,
                                         const TableBuildOptions& opt) {
  const int w = fi.width();
  const int h = fi.height();
  const int b = fi.bins();

  const std::size_t cells =
      std::size_t(w + 1) * std::size_t(h + 1) * std::size_t(b);
  const std::size_t required = 3 * cells * sizeof(std::int64_t);
  if (required > opt.memory_budget_bytes)
    throw CapacityError("integral tables need " + std::to_string(required) +
                            " bytes, budget is " +
                            std::to_string(opt.memory_budget_bytes),
                        required);

  IntegralTableSet t(w, h, b);
  const std::size_t stride = t.row_stride();

  // Standard prefix recurrence T(x+1,y+1) = T(x+1,y) + row_run(x), kept as
  // one streaming pass per bin plane so writes stay sequential in the
  // bin-major layout.
  for (int bin = 0; bin < b; ++bin) {
    std::int64_t* p = t.plain_.data() + t.plane_stride() * bin;
    std::int64_t* px = t.xramp_.data() + t.plane_stride() * bin;
    std::int64_t* py = t.yramp_.data() + t.plane_stride() * bin;
    for (int y = 0; y < h; ++y) {
      const std::uint16_t* src = fi.row(y);
      const std::size_t above = std::size_t(y) * stride;
      const std::size_t cur = above + stride;
      std::int64_t run_p = 0, run_x = 0, run_y = 0;
      for (int x = 0; x < w; ++x) {
        if (src[x] == bin) {
          run_p += 1;
          run_x += x;
          run_y += y;
        }
        p[cur + x + 1] = p[above + x + 1] + run_p;
        px[cur + x + 1] = px[above + x + 1] + run_x;
        py[cur + x + 1] = py[above + x + 1] + run_y;
      }
    }
  }
  return t;
}

std::int64_t IntegralTableSet::cell(TableKind kind, int x, int y,
                                    int bin) const {
  if (x < 0 || x > w_ || y < 0 || y > h_ || bin < 0 || bin >= b_)
    throw OutOfRangeError("table cell (" + std::to_string(x) + "," +
                          std::to_string(y) + ",bin " + std::to_string(bin) +
                          ") out of range");
  const std::int64_t* pl = plane(kind, bin);
  return detail::load_cell(pl, idx(x, y));
}

void IntegralTableSet::check_rect(const RectRegion& r, int bin) const {
  if (bin < 0 || bin >= b_)
    throw OutOfRangeError("rect_sum: bin " + std::to_string(bin) +
                          " out of range");
  if (r.x0 < 0 || r.y0 < 0 || r.x0 > r.x1 || r.y0 > r.y1 || r.x1 >= w_ ||
      r.y1 >= h_)
    throw OutOfRangeError("rect_sum: rectangle (" + std::to_string(r.x0) +
                          "," + std::to_string(r.y0) + ")-(" +
                          std::to_string(r.x1) + "," + std::to_string(r.y1) +
                          ") out of bounds for " + std::to_string(w_) + "x" +
                          std::to_string(h_));
}

std::int64_t IntegralTableSet::rect_sum(TableKind kind, const RectRegion& r,
                                        int bin) const {
  check_rect(r, bin);
  const std::int64_t* pl = plane(kind, bin);
  // Four-corner rule on the zero-padded table; no border branches needed.
  return detail::load_cell(pl, idx(r.x1 + 1, r.y1 + 1)) -
         detail::load_cell(pl, idx(r.x0, r.y1 + 1)) -
         detail::load_cell(pl, idx(r.x1 + 1, r.y0)) +
         detail::load_cell(pl, idx(r.x0, r.y0));
}

std::int64_t IntegralTableSet::directional_value(Direction dir, int x, int y,
                                                 int bin) const {
  const std::int64_t p = cell(TableKind::Plain, x, y, bin);
  const std::int64_t rx = cell(TableKind::XRamp, x, y, bin);
  const std::int64_t ry = cell(TableKind::YRamp, x, y, bin);
  const std::int64_t wm = w_ - 1;
  const std::int64_t hm = h_ - 1;
  switch (dir) {
    case Direction::SE: return rx + ry;
    case Direction::SW: return wm * p - rx + ry;
    case Direction::NE: return rx + hm * p - ry;
    case Direction::NW: return (wm + hm) * p - rx - ry;
  }
  throw OutOfRangeError("directional_value: unknown direction");
}

void IntegralTableSet::save(std::ostream& out) const {
  out.write(kMagic, sizeof(kMagic));
  put_u32le(out, static_cast<std::uint32_t>(w_));
  put_u32le(out, static_cast<std::uint32_t>(h_));
  put_u32le(out, static_cast<std::uint32_t>(b_));
  const std::size_t n = plane_stride() * b_;
  put_table_le(out, plain_.data(), n);
  put_table_le(out, xramp_.data(), n);
  put_table_le(out, yramp_.data(), n);
  if (!out) throw IoError("table dump: write failed");
}

void IntegralTableSet::save_file(const std::string& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("table dump: cannot open '" + path + "'");
  save(out);
}

IntegralTableSet IntegralTableSet::load(std::istream& in) {
  char magic[5] = {};
  in.read(magic, sizeof(magic));
  if (!in || std::string(magic, 5) != std::string(kMagic, 5))
    throw IoError("table dump: bad magic");
  const int w = static_cast<int>(get_u32le(in));
  const int h = static_cast<int>(get_u32le(in));
  const int b = static_cast<int>(get_u32le(in));
  if (w < 1 || h < 1 || b < 1) throw IoError("table dump: bad dimensions");
  IntegralTableSet t(w, h, b);
  const std::size_t n = t.plane_stride() * b;
  get_table_le(in, t.plain_.data(), n);
  get_table_le(in, t.xramp_.data(), n);
  get_table_le(in, t.yramp_.data(), n);
  return t;
}

IntegralTableSet IntegralTableSet::load_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("table dump: cannot open '" + path + "'");
  return load(in);
}

}  // namespace swih
