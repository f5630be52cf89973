#include "swih/engine.hpp"

#include <string>

namespace swih {

void validate_window(int width, int height, const WindowQuery& q) {
  validate_kernel(q.kernel);
  const int hx = q.kernel.hx();
  const int hy = q.kernel.hy();
  if (q.border == BorderPolicy::Strict) {
    if (q.cx - hx < 0 || q.cx + hx >= width || q.cy - hy < 0 ||
        q.cy + hy >= height)
      throw WindowOutOfBoundsError(
          "strict window " + std::to_string(q.kernel.kw) + "x" +
          std::to_string(q.kernel.kh) + " at (" + std::to_string(q.cx) + "," +
          std::to_string(q.cy) + ") does not fit inside " +
          std::to_string(width) + "x" + std::to_string(height));
  } else {
    if (q.cx < 0 || q.cx >= width || q.cy < 0 || q.cy >= height)
      throw WindowOutOfBoundsError("clipped window center (" +
                                   std::to_string(q.cx) + "," +
                                   std::to_string(q.cy) + ") outside image");
  }
}

namespace {

std::optional<RectRegion> clip_rect(const RectRegion& r, int width,
                                    int height) {
  RectRegion c{std::max(r.x0, 0), std::max(r.y0, 0),
               std::min(r.x1, width - 1), std::min(r.y1, height - 1)};
  if (c.x0 > c.x1 || c.y0 > c.y1) return std::nullopt;
  return c;
}

// Four-corner sums for one term, added straight into the accumulator.
// Zero-slope terms (Uniform) touch only the plain table.
void accumulate_term(const IntegralTableSet& t, const QuadrantTerm& term,
                     int width, int height, BorderPolicy border,
                     std::span<std::int64_t> acc) {
  if (!term.rect) return;
  std::optional<RectRegion> rect = *term.rect;
  if (border == BorderPolicy::Clipped)
    rect = clip_rect(*rect, width, height);
  if (!rect) return;

  const std::size_t stride = t.row_stride();
  const std::size_t ps = t.plane_stride();
  const std::size_t i00 = std::size_t(rect->y0) * stride + rect->x0;
  const std::size_t i10 = std::size_t(rect->y0) * stride + rect->x1 + 1;
  const std::size_t i01 = std::size_t(rect->y1 + 1) * stride + rect->x0;
  const std::size_t i11 = std::size_t(rect->y1 + 1) * stride + rect->x1 + 1;

  const std::int64_t* p = t.plane(TableKind::Plain, 0);
  const std::int64_t* px = t.plane(TableKind::XRamp, 0);
  const std::int64_t* py = t.plane(TableKind::YRamp, 0);
  const int b = t.bins();
  const std::int64_t sx = term.sx, sy = term.sy, beta = term.beta;

  using detail::load_cell;
  if (sx == 0 && sy == 0) {
    for (int bin = 0; bin < b; ++bin, p += ps) {
      const std::int64_t cnt = load_cell(p, i11) - load_cell(p, i01) -
                               load_cell(p, i10) + load_cell(p, i00);
      acc[bin] += beta * cnt;
    }
    return;
  }
  for (int bin = 0; bin < b; ++bin, p += ps, px += ps, py += ps) {
    const std::int64_t cnt = load_cell(p, i11) - load_cell(p, i01) -
                             load_cell(p, i10) + load_cell(p, i00);
    const std::int64_t xs = load_cell(px, i11) - load_cell(px, i01) -
                            load_cell(px, i10) + load_cell(px, i00);
    const std::int64_t ys = load_cell(py, i11) - load_cell(py, i01) -
                            load_cell(py, i10) + load_cell(py, i00);
    acc[bin] += sx * xs + sy * ys + beta * cnt;
  }
}

}  // namespace

QuadrantDecomposition decompose(const WindowQuery& q) {
  validate_kernel(q.kernel);
  if (!q.kernel.quadrant_affine())
    throw UnsupportedKernelError(
        "decompose: kernel kind is not quadrant-affine; use the "
        "wedding-cake or brute-force baseline");

  const int hx = q.kernel.hx();
  const int hy = q.kernel.hy();
  const int cx = q.cx;
  const int cy = q.cy;

  QuadrantDecomposition d;
  // Closed quadrants; the center row and column belong to TL/TR/BL so the
  // four rectangles tile the window disjointly.
  d.tl.rect = RectRegion{cx - hx, cy - hy, cx, cy};
  if (hx > 0) d.tr.rect = RectRegion{cx + 1, cy - hy, cx + hx, cy};
  if (hy > 0) d.bl.rect = RectRegion{cx - hx, cy + 1, cx, cy + hy};
  if (hx > 0 && hy > 0)
    d.br.rect = RectRegion{cx + 1, cy + 1, cx + hx, cy + hy};

  if (q.kernel.kind == KernelKind::Uniform) {
    for (QuadrantTerm* t : {&d.tl, &d.tr, &d.bl, &d.br}) {
      t->sx = 0;
      t->sy = 0;
      t->beta = 1;
    }
    return d;
  }

  // ManhattanLinear: weight(x, y) = M - |x - cx| - |y - cy| with
  // M = hx + hy + 1. Dropping the absolute values per quadrant leaves an
  // affine function of the absolute coordinates.
  const std::int64_t m = hx + hy + 1;
  d.tl.sx = +1; d.tl.sy = +1; d.tl.beta = m - cx - cy;
  d.tr.sx = -1; d.tr.sy = +1; d.tr.beta = m + cx - cy;
  d.bl.sx = +1; d.bl.sy = -1; d.bl.beta = m - cx + cy;
  d.br.sx = -1; d.br.sy = -1; d.br.beta = m + cx + cy;
  return d;
}

WeightedHistogram quadrant_histogram(const IntegralTableSet& t,
                                     const std::optional<RectRegion>& rect,
                                     std::int64_t sx, std::int64_t sy,
                                     std::int64_t beta) {
  std::vector<std::int64_t> acc(t.bins(), 0);
  if (rect) {
    // Validate through the public query; the per-bin combination below then
    // reads the same cells.
    t.rect_sum(TableKind::Plain, *rect, 0);
    QuadrantTerm term{*rect, sx, sy, beta};
    accumulate_term(t, term, t.width(), t.height(), BorderPolicy::Strict,
                    acc);
  }
  return WeightedHistogram::from_counts(acc);
}

void swih_query_into(const IntegralTableSet& t, const WindowQuery& q,
                     std::span<std::int64_t> out) {
  validate_window(t.width(), t.height(), q);
  const QuadrantDecomposition d = decompose(q);
  for (auto& v : out) v = 0;
  for (const QuadrantTerm* term : d.terms())
    accumulate_term(t, *term, t.width(), t.height(), q.border, out);
}

WeightedHistogram swih_query(const IntegralTableSet& t,
                             const WindowQuery& q) {
  std::vector<std::int64_t> acc(t.bins(), 0);
  swih_query_into(t, q, acc);
  return WeightedHistogram::from_counts(acc);
}

void plain_local_histogram_into(const IntegralTableSet& t,
                                const WindowQuery& q,
                                std::span<std::int64_t> out) {
  validate_window(t.width(), t.height(), q);
  RectRegion window{q.cx - q.kernel.hx(), q.cy - q.kernel.hy(),
                    q.cx + q.kernel.hx(), q.cy + q.kernel.hy()};
  for (auto& v : out) v = 0;
  QuadrantTerm term{window, 0, 0, 1};
  accumulate_term(t, term, t.width(), t.height(), q.border, out);
}

WeightedHistogram plain_local_histogram(const IntegralTableSet& t,
                                        const WindowQuery& q) {
  std::vector<std::int64_t> acc(t.bins(), 0);
  plain_local_histogram_into(t, q, acc);
  return WeightedHistogram::from_counts(acc);
}

}  // namespace swih
