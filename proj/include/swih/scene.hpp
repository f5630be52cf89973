#pragma once

#include <cstdint>

#include "swih/errors.hpp"
#include "swih/image.hpp"

namespace swih {

// Synthetic clutter scene with a planted template, decoy patches that share
// the template's global intensity proportions with scrambled layout, and
// optional corruption of the planted template's outermost ring. Fully
// deterministic: the same spec yields bit-identical images.
struct SceneSpec {
  std::uint64_t seed = 0;
  int width = 128;
  int height = 128;
  int kw = 31;  // template dimensions, odd
  int kh = 31;
  int plant_cx = -1;  // -1: drawn from the seed within the valid area
  int plant_cy = -1;
  double clutter = 0.0;     // fraction of background pixels that are noise
  double corruption = 0.0;  // fraction of the planted outer ring overwritten
};

struct Scene {
  GrayImage search;
  GrayImage templ;
  int truth_x = 0;  // planted template center
  int truth_y = 0;
};

Scene generate_scene(const SceneSpec& spec);

}  // namespace swih
