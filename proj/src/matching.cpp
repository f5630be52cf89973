#include "swih/matching.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <thread>

#include "swih/integral_tables.hpp"

namespace swih {

namespace {

double clamp01(double v) { return std::clamp(v, 0.0, 1.0); }

// Scores a raw (unnormalized) candidate against the normalized model
// without materializing the normalized candidate.
double score_counts(SimilarityKind kind, std::span<const double> model,
                    std::span<const std::int64_t> raw) {
  std::int64_t mass = 0;
  for (std::int64_t v : raw) mass += v;
  if (mass == 0) throw ZeroMassError("similarity: empty candidate window");
  double s = 0.0;
  if (kind == SimilarityKind::Bhattacharyya) {
    for (std::size_t b = 0; b < raw.size(); ++b)
      s += std::sqrt(model[b] * static_cast<double>(raw[b]));
    s /= std::sqrt(static_cast<double>(mass));
  } else {
    for (std::size_t b = 0; b < raw.size(); ++b)
      s += std::min(model[b], static_cast<double>(raw[b]) / mass);
  }
  return clamp01(s);
}

double score_weights(SimilarityKind kind, std::span<const double> model,
                     std::span<const double> raw) {
  double mass = 0.0;
  for (double v : raw) mass += v;
  if (mass == 0.0) throw ZeroMassError("similarity: empty candidate window");
  double s = 0.0;
  if (kind == SimilarityKind::Bhattacharyya) {
    for (std::size_t b = 0; b < raw.size(); ++b)
      s += std::sqrt(model[b] * raw[b]);
    s /= std::sqrt(mass);
  } else {
    for (std::size_t b = 0; b < raw.size(); ++b)
      s += std::min(model[b], raw[b] / mass);
  }
  return clamp01(s);
}

}  // namespace

double similarity(SimilarityKind kind, std::span<const double> p,
                  std::span<const double> q) {
  if (p.size() != q.size())
    throw ModelError("similarity: histogram sizes differ");
  double s = 0.0;
  if (kind == SimilarityKind::Bhattacharyya) {
    for (std::size_t b = 0; b < p.size(); ++b) s += std::sqrt(p[b] * q[b]);
  } else {
    for (std::size_t b = 0; b < p.size(); ++b) s += std::min(p[b], q[b]);
  }
  return clamp01(s);
}

WeightedHistogram target_model(const GrayImage& templ, const Quantizer& q,
                               const KernelSpec& kernel) {
  validate_kernel(kernel);
  if (templ.width() != kernel.kw || templ.height() != kernel.kh)
    throw ModelError("target model: template " +
                     std::to_string(templ.width()) + "x" +
                     std::to_string(templ.height()) +
                     " does not match kernel " + std::to_string(kernel.kw) +
                     "x" + std::to_string(kernel.kh));
  const FeatureImage fi = quantize_image(templ, q);
  const WindowQuery query{kernel.hx(), kernel.hy(), kernel,
                          BorderPolicy::Strict};
  return normalize(brute_force_histogram(fi, query));
}

WeightedHistogram target_model_for_method(const GrayImage& templ,
                                          const Quantizer& q,
                                          const KernelSpec& kernel,
                                          MapMethod method,
                                          const WeddingCakeConfig& cake) {
  switch (method) {
    case MapMethod::Plain:
      return target_model(templ, q,
                          {KernelKind::Uniform, kernel.kw, kernel.kh, 0.5});
    case MapMethod::Cake: {
      validate_kernel(kernel);
      if (templ.width() != kernel.kw || templ.height() != kernel.kh)
        throw ModelError("target model: template does not match kernel");
      const FeatureImage fi = quantize_image(templ, q);
      const IntegralTableSet t = build_tables(fi);
      const WindowQuery query{kernel.hx(), kernel.hy(), kernel,
                              BorderPolicy::Strict};
      return normalize(wedding_cake_histogram(t, query, cake));
    }
    default:
      return target_model(templ, q, kernel);
  }
}

LikelihoodMap likelihood_map(const GrayImage& search,
                             const WeightedHistogram& model,
                             const Quantizer& q, const KernelSpec& kernel,
                             MapMethod method, const MatchOptions& opt) {
  validate_kernel(kernel);
  if (search.width() < kernel.kw || search.height() < kernel.kh)
    throw SizeError("likelihood map: kernel " + std::to_string(kernel.kw) +
                    "x" + std::to_string(kernel.kh) +
                    " larger than search image " +
                    std::to_string(search.width()) + "x" +
                    std::to_string(search.height()));
  if (model.bins() != q.bins() || !model.normalized())
    throw ModelError("likelihood map: model must be normalized with " +
                     std::to_string(q.bins()) + " bins");
  if (method == MapMethod::Swih && !kernel.quadrant_affine())
    throw UnsupportedKernelError(
        "likelihood map: method swih requires a quadrant-affine kernel");

  const FeatureImage fi = quantize_image(search, q);
  const int hx = kernel.hx();
  const int hy = kernel.hy();
  LikelihoodMap map;
  map.width = search.width() - kernel.kw + 1;
  map.height = search.height() - kernel.kh + 1;
  map.hx = hx;
  map.hy = hy;
  map.scores.assign(std::size_t(map.width) * map.height, 0.0);

  const std::span<const double> model_values = model.values();
  const int bins = q.bins();

  // The integral-histogram methods share one table build; brute force
  // loops over window pixels directly.
  std::optional<IntegralTableSet> tables;
  if (method != MapMethod::Brute) tables.emplace(build_tables(fi, opt.tables));

  std::optional<BruteForcePlan> brute;
  if (method == MapMethod::Brute) brute.emplace(kernel);
  std::optional<WeddingCakePlan> cake;
  if (method == MapMethod::Cake) cake.emplace(kernel, opt.cake);

  const KernelSpec uniform{KernelKind::Uniform, kernel.kw, kernel.kh, 0.5};

  auto sweep_rows = [&](int v_begin, int v_end) {
    std::vector<std::int64_t> counts(bins);
    std::vector<double> weights(bins);
    for (int v = v_begin; v < v_end; ++v) {
      double* dst = map.scores.data() + std::size_t(v) * map.width;
      for (int u = 0; u < map.width; ++u) {
        const int cx = u + hx;
        const int cy = v + hy;
        double s = 0.0;
        switch (method) {
          case MapMethod::Swih:
            swih_query_into(*tables, {cx, cy, kernel, BorderPolicy::Strict},
                            counts);
            s = score_counts(opt.sim, model_values, counts);
            break;
          case MapMethod::Plain:
            plain_local_histogram_into(
                *tables, {cx, cy, uniform, BorderPolicy::Strict}, counts);
            s = score_counts(opt.sim, model_values, counts);
            break;
          case MapMethod::Cake:
            cake->histogram_into(*tables, cx, cy, BorderPolicy::Strict,
                                 weights);
            s = score_weights(opt.sim, model_values, weights);
            break;
          case MapMethod::Brute:
            if (kernel.integer_weighted()) {
              brute->counts_into(fi, cx, cy, BorderPolicy::Strict, counts);
              s = score_counts(opt.sim, model_values, counts);
            } else {
              brute->weights_into(fi, cx, cy, BorderPolicy::Strict, weights);
              s = score_weights(opt.sim, model_values, weights);
            }
            break;
        }
        dst[u] = s;
      }
    }
  };

  const int threads = std::clamp(opt.threads, 1, std::max(map.height, 1));
  if (threads <= 1) {
    sweep_rows(0, map.height);
  } else {
    // Each cell writes its own slot, so the result is identical for any
    // thread count.
    std::vector<std::thread> pool;
    pool.reserve(threads);
    const int chunk = (map.height + threads - 1) / threads;
    for (int t = 0; t < threads; ++t) {
      const int v0 = t * chunk;
      const int v1 = std::min(map.height, v0 + chunk);
      if (v0 >= v1) break;
      pool.emplace_back(sweep_rows, v0, v1);
    }
    for (auto& th : pool) th.join();
  }
  return map;
}

Peak peak(const LikelihoodMap& map) {
  if (map.scores.empty()) throw Error("peak: empty likelihood map");
  Peak best;
  best.score = -1.0;
  for (int v = 0; v < map.height; ++v)
    for (int u = 0; u < map.width; ++u) {
      const double s = map.at(u, v);
      if (s > best.score) {
        best = Peak{u, v, u + map.hx, v + map.hy, s};
      }
    }
  return best;
}

GrayImage map_to_gray(const LikelihoodMap& map) {
  GrayImage img(map.width, map.height);
  for (int v = 0; v < map.height; ++v)
    for (int u = 0; u < map.width; ++u) {
      const long g = std::lround(clamp01(map.at(u, v)) * 255.0);
      img.set(u, v, static_cast<std::uint8_t>(g));
    }
  return img;
}

void write_map_csv(const LikelihoodMap& map, std::ostream& out) {
  char buf[40];
  for (int v = 0; v < map.height; ++v) {
    for (int u = 0; u < map.width; ++u) {
      std::snprintf(buf, sizeof(buf), "%.9g", map.at(u, v));
      if (u) out << ',';
      out << buf;
    }
    out << '\n';
  }
  if (!out) throw IoError("map csv: write failed");
}

void write_map_csv_file(const LikelihoodMap& map, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("map csv: cannot open '" + path + "'");
  write_map_csv(map, out);
}

}  // namespace swih
