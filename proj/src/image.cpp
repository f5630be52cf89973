#include "swih/image.hpp"

#include <utility>

namespace swih {

GrayImage::GrayImage(int width, int height, std::uint8_t fill)
    : width_(width), height_(height) {
  if (width < 1 || height < 1)
    throw Error("GrayImage: dimensions must be >= 1");
  pixels_.assign(static_cast<std::size_t>(width) * height, fill);
}

GrayImage::GrayImage(int width, int height, std::vector<std::uint8_t> pixels)
    : width_(width), height_(height), pixels_(std::move(pixels)) {
  if (width < 1 || height < 1)
    throw Error("GrayImage: dimensions must be >= 1");
  if (pixels_.size() != static_cast<std::size_t>(width) * height)
    throw Error("GrayImage: pixel count does not match dimensions");
}

Quantizer::Quantizer(int bins) : bins_(bins) {
  if (bins < 1) throw Error("Quantizer: bin count must be >= 1");
}

FeatureImage::FeatureImage(int width, int height, int bins)
    : width_(width), height_(height), bins_(bins) {
  if (width < 1 || height < 1)
    throw Error("FeatureImage: dimensions must be >= 1");
  if (bins < 1) throw Error("FeatureImage: bin count must be >= 1");
  data_.assign(static_cast<std::size_t>(width) * height, 0);
}

FeatureImage quantize_image(const GrayImage& img, const Quantizer& q) {
  FeatureImage fi(img.width(), img.height(), q.bins());
  for (int y = 0; y < img.height(); ++y)
    for (int x = 0; x < img.width(); ++x)
      fi.set(x, y, static_cast<std::uint16_t>(q.quantize(img.at(x, y))));
  return fi;
}

}  // namespace swih
