#pragma once

#include <iosfwd>
#include <string>

#include "swih/image.hpp"

namespace swih {

// Binary PGM (P5). Header comments ('#' lines) are skipped on read; the
// writer always emits maxval 255.
GrayImage read_pgm(std::istream& in);
GrayImage read_pgm_file(const std::string& path);

void write_pgm(const GrayImage& img, std::ostream& out);
void write_pgm_file(const GrayImage& img, const std::string& path);

}  // namespace swih
