#include "swih/scene.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>
#include <vector>

namespace swih {

namespace {

// All draws go through these helpers so scenes are reproducible across
// platforms (std::mt19937_64 output is fully specified, the standard
// distributions are not).
std::uint64_t draw_below(std::mt19937_64& rng, std::uint64_t n) {
  return rng() % n;
}

double draw_unit(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

std::uint8_t draw_byte(std::mt19937_64& rng) {
  return static_cast<std::uint8_t>(draw_below(rng, 256));
}

template <typename T>
void shuffle_vec(std::mt19937_64& rng, std::vector<T>& v) {
  for (std::size_t i = v.size(); i > 1; --i)
    std::swap(v[i - 1], v[draw_below(rng, i)]);
}

}  // namespace

Scene generate_scene(const SceneSpec& spec) {
  if (spec.width < 1 || spec.height < 1)
    throw ConfigError("scene: dimensions must be >= 1");
  if (spec.kw < 1 || spec.kh < 1 || spec.kw % 2 == 0 || spec.kh % 2 == 0)
    throw ConfigError("scene: template dimensions must be odd and >= 1");
  if (spec.kw > spec.width || spec.kh > spec.height)
    throw ConfigError("scene: template does not fit inside the scene");
  if (spec.clutter < 0.0 || spec.clutter > 1.0 || spec.corruption < 0.0 ||
      spec.corruption > 1.0)
    throw ConfigError("scene: clutter and corruption must be in [0, 1]");

  const int hx = (spec.kw - 1) / 2;
  const int hy = (spec.kh - 1) / 2;
  std::mt19937_64 rng(spec.seed);

  // Two-tone template: a core block on a contrasting shell. The values are
  // far enough apart to land in different bins for any bin count >= 2.
  const auto core = static_cast<std::uint8_t>(48 + draw_below(rng, 64));
  const auto shell = static_cast<std::uint8_t>(160 + draw_below(rng, 64));

  int cx = spec.plant_cx;
  int cy = spec.plant_cy;
  if (cx < 0 || cy < 0) {
    cx = hx + static_cast<int>(draw_below(rng, spec.width - spec.kw + 1));
    cy = hy + static_cast<int>(draw_below(rng, spec.height - spec.kh + 1));
  }
  if (cx - hx < 0 || cx + hx >= spec.width || cy - hy < 0 ||
      cy + hy >= spec.height)
    throw ConfigError("scene: plant center (" + std::to_string(cx) + "," +
                      std::to_string(cy) + ") puts the template out of "
                      "bounds");

  GrayImage templ(spec.kw, spec.kh);
  for (int y = 0; y < spec.kh; ++y)
    for (int x = 0; x < spec.kw; ++x) {
      const bool in_core =
          std::abs(x - hx) <= hx / 2 && std::abs(y - hy) <= hy / 2;
      templ.set(x, y, in_core ? core : shell);
    }

  // Background: flat base with i.i.d. clutter at the requested density.
  const std::uint8_t base = draw_byte(rng);
  GrayImage search(spec.width, spec.height, base);
  if (spec.clutter > 0.0) {
    for (int y = 0; y < spec.height; ++y)
      for (int x = 0; x < spec.width; ++x)
        if (draw_unit(rng) < spec.clutter) search.set(x, y, draw_byte(rng));
  }

  // Decoy patches: the template's pixel multiset with scrambled layout, so
  // their plain histograms match the target exactly. The true template is
  // planted afterwards and overwrites anything beneath it.
  constexpr int kDecoys = 4;
  std::vector<std::uint8_t> scramble(templ.pixels());
  for (int d = 0; d < kDecoys; ++d) {
    const int tx = static_cast<int>(draw_below(rng, spec.width - spec.kw + 1));
    const int ty =
        static_cast<int>(draw_below(rng, spec.height - spec.kh + 1));
    shuffle_vec(rng, scramble);
    for (int y = 0; y < spec.kh; ++y)
      for (int x = 0; x < spec.kw; ++x)
        search.set(tx + x, ty + y,
                   scramble[std::size_t(y) * spec.kw + x]);
  }

  const int x0 = cx - hx;
  const int y0 = cy - hy;
  for (int y = 0; y < spec.kh; ++y)
    for (int x = 0; x < spec.kw; ++x)
      search.set(x0 + x, y0 + y, templ.at(x, y));

  // Corrupt a fraction of the planted template's outermost ring.
  if (spec.corruption > 0.0) {
    std::vector<std::pair<int, int>> ring;
    for (int x = 0; x < spec.kw; ++x) {
      ring.emplace_back(x0 + x, y0);
      if (spec.kh > 1) ring.emplace_back(x0 + x, y0 + spec.kh - 1);
    }
    for (int y = 1; y + 1 < spec.kh; ++y) {
      ring.emplace_back(x0, y0 + y);
      if (spec.kw > 1) ring.emplace_back(x0 + spec.kw - 1, y0 + y);
    }
    shuffle_vec(rng, ring);
    const auto hits = static_cast<std::size_t>(
        std::llround(spec.corruption * static_cast<double>(ring.size())));
    for (std::size_t i = 0; i < hits && i < ring.size(); ++i)
      search.set(ring[i].first, ring[i].second, draw_byte(rng));
  }

  return Scene{std::move(search), std::move(templ), cx, cy};
}

}  // namespace swih
