#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "swih/baselines.hpp"
#include "swih/engine.hpp"
#include "swih/histogram.hpp"
#include "swih/image.hpp"
#include "swih/kernel.hpp"

namespace swih {

enum class SimilarityKind {
  Bhattacharyya,  // sum_b sqrt(p_b * q_b)
  Intersection,   // sum_b min(p_b, q_b)
};

// Both measures are defined on L1-normalized histograms and map to [0, 1].
double similarity(SimilarityKind kind, std::span<const double> p,
                  std::span<const double> q);

enum class MapMethod { Swih, Brute, Cake, Plain };

// Scores over all strict window placements: score at map cell (u, v)
// belongs to the window centered at image pixel (u + hx, v + hy).
struct LikelihoodMap {
  int width = 0;
  int height = 0;
  int hx = 0;
  int hy = 0;
  std::vector<double> scores;  // row-major, each in [0, 1]

  double at(int u, int v) const {
    return scores[static_cast<std::size_t>(v) * width + u];
  }
};

struct Peak {
  int map_x = 0;
  int map_y = 0;
  int center_x = 0;  // map coordinates shifted by the kernel half-extents
  int center_y = 0;
  double score = 0.0;
};

struct MatchOptions {
  SimilarityKind sim = SimilarityKind::Bhattacharyya;
  WeddingCakeConfig cake;  // MapMethod::Cake only
  int threads = 1;
  TableBuildOptions tables;
};

// Normalized spatially weighted histogram of the whole template with the
// kernel centered on the template center. Template dimensions must equal
// the kernel dimensions.
WeightedHistogram target_model(const GrayImage& templ, const Quantizer& q,
                               const KernelSpec& kernel);

// Model built the same way the chosen method builds its candidates, so a
// window with identical content scores exactly 1: exact weighted histogram
// for swih/brute, the ring approximation for cake, the unweighted histogram
// for plain.
WeightedHistogram target_model_for_method(const GrayImage& templ,
                                          const Quantizer& q,
                                          const KernelSpec& kernel,
                                          MapMethod method,
                                          const WeddingCakeConfig& cake = {});

LikelihoodMap likelihood_map(const GrayImage& search,
                             const WeightedHistogram& model,
                             const Quantizer& q, const KernelSpec& kernel,
                             MapMethod method, const MatchOptions& opt = {});

// Highest score; ties broken by smallest row, then smallest column.
Peak peak(const LikelihoodMap& map);

// PGM rendering rescales scores linearly from [0, 1] to [0, 255].
GrayImage map_to_gray(const LikelihoodMap& map);

// Raw scores, row-major, 9 significant digits, one CSV line per map row.
void write_map_csv(const LikelihoodMap& map, std::ostream& out);
void write_map_csv_file(const LikelihoodMap& map, const std::string& path);

}  // namespace swih
