#pragma once

#include <cstdint>
#include <vector>

#include "swih/errors.hpp"

namespace swih {

// 8-bit grayscale image, row-major. Immutable once filled.
class GrayImage {
 public:
  GrayImage(int width, int height, std::uint8_t fill = 0);
  GrayImage(int width, int height, std::vector<std::uint8_t> pixels);

  int width() const noexcept { return width_; }
  int height() const noexcept { return height_; }

  std::uint8_t at(int x, int y) const { return pixels_[idx(x, y)]; }
  void set(int x, int y, std::uint8_t v) { pixels_[idx(x, y)] = v; }

  const std::vector<std::uint8_t>& pixels() const noexcept { return pixels_; }
  std::vector<std::uint8_t>& pixels() noexcept { return pixels_; }

 private:
  std::size_t idx(int x, int y) const {
    return static_cast<std::size_t>(y) * width_ + x;
  }

  int width_ = 0;
  int height_ = 0;
  std::vector<std::uint8_t> pixels_;
};

// Uniform partition of [0, 256) into `bins` equal-width intervals.
class Quantizer {
 public:
  explicit Quantizer(int bins);

  int bins() const noexcept { return bins_; }

  // floor(v * bins / 256); monotone, result in [0, bins).
  int quantize(std::uint8_t v) const noexcept {
    return static_cast<int>(v) * bins_ / 256;
  }

 private:
  int bins_ = 1;
};

// Grid of quantized bin indices; same dimensions as the source image.
class FeatureImage {
 public:
  FeatureImage(int width, int height, int bins);

  int width() const noexcept { return width_; }
  int height() const noexcept { return height_; }
  int bins() const noexcept { return bins_; }

  std::uint16_t at(int x, int y) const { return data_[idx(x, y)]; }
  void set(int x, int y, std::uint16_t bin) { data_[idx(x, y)] = bin; }

  const std::uint16_t* row(int y) const {
    return data_.data() + static_cast<std::size_t>(y) * width_;
  }

 private:
  std::size_t idx(int x, int y) const {
    return static_cast<std::size_t>(y) * width_ + x;
  }

  int width_ = 0;
  int height_ = 0;
  int bins_ = 1;
  std::vector<std::uint16_t> data_;
};

FeatureImage quantize_image(const GrayImage& img, const Quantizer& q);

}  // namespace swih
