#include "swih/pgm.hpp"

#include <cctype>
#include <fstream>
#include <ostream>
#include <string>

namespace swih {

namespace {

// Reads the next header token, skipping whitespace and '#' comment lines.
std::string next_token(std::istream& in) {
  std::string tok;
  int c;
  while ((c = in.get()) != EOF) {
    if (c == '#') {
      while ((c = in.get()) != EOF && c != '\n') {
      }
      continue;
    }
    if (std::isspace(c)) {
      if (!tok.empty()) break;
      continue;
    }
    tok.push_back(static_cast<char>(c));
  }
  if (tok.empty()) throw IoError("pgm: truncated header");
  return tok;
}

int parse_int(const std::string& tok) {
  try {
    std::size_t pos = 0;
    int v = std::stoi(tok, &pos);
    if (pos != tok.size()) throw IoError("pgm: bad header value '" + tok + "'");
    return v;
  } catch (const IoError&) {
    throw;
  } catch (...) {
    throw IoError("pgm: bad header value '" + tok + "'");
  }
}

}  // namespace

GrayImage read_pgm(std::istream& in) {
  char m0 = 0, m1 = 0;
  in.get(m0);
  in.get(m1);
  if (!in || m0 != 'P' || m1 != '5')
    throw IoError("pgm: not a binary PGM (missing P5 magic)");

  const int w = parse_int(next_token(in));
  const int h = parse_int(next_token(in));
  const int maxval = parse_int(next_token(in));
  if (w < 1 || h < 1) throw IoError("pgm: invalid dimensions");
  if (maxval < 1 || maxval > 255)
    throw IoError("pgm: unsupported maxval " + std::to_string(maxval));

  // next_token consumed exactly the single whitespace after maxval.
  std::vector<std::uint8_t> pixels(static_cast<std::size_t>(w) * h);
  in.read(reinterpret_cast<char*>(pixels.data()),
          static_cast<std::streamsize>(pixels.size()));
  if (static_cast<std::size_t>(in.gcount()) != pixels.size())
    throw IoError("pgm: truncated pixel data");
  return GrayImage(w, h, std::move(pixels));
}

GrayImage read_pgm_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("pgm: cannot open '" + path + "'");
  return read_pgm(in);
}

void write_pgm(const GrayImage& img, std::ostream& out) {
  out << "P5\n" << img.width() << " " << img.height() << "\n255\n";
  out.write(reinterpret_cast<const char*>(img.pixels().data()),
            static_cast<std::streamsize>(img.pixels().size()));
  if (!out) throw IoError("pgm: write failed");
}

void write_pgm_file(const GrayImage& img, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("pgm: cannot open '" + path + "' for writing");
  write_pgm(img, out);
}

}  // namespace swih
