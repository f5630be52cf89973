#include <doctest.h>

#include <cmath>
#include <vector>

#include "swih/kernel.hpp"

using namespace swih;

namespace {

const std::vector<KernelSpec> kSampleKernels = {
    {KernelKind::Uniform, 3, 3, 0.5},
    {KernelKind::Uniform, 1, 7, 0.5},
    {KernelKind::ManhattanLinear, 3, 3, 0.5},
    {KernelKind::ManhattanLinear, 5, 9, 0.5},
    {KernelKind::ManhattanLinear, 11, 11, 0.5},
    {KernelKind::ChebyshevLinear, 3, 3, 0.5},
    {KernelKind::ChebyshevLinear, 7, 3, 0.5},
    {KernelKind::GaussianChebyshev, 9, 9, 0.7},
    {KernelKind::GaussianChebyshev, 5, 11, 0.4},
};

}  // namespace

TEST_CASE("manhattan distance") {
  CHECK(manhattan_distance(3, 4, 1, 1) == 5);
  CHECK(manhattan_distance(6, 2, 6, 2) == 0);
  CHECK(manhattan_distance(0, 0, 3, 5) == 8);
}

TEST_CASE("weight_at examples") {
  const KernelSpec man3{KernelKind::ManhattanLinear, 3, 3, 0.5};
  CHECK(weight_at(man3, 0, 0) == 3.0);
  CHECK(weight_at(man3, 1, 1) == 1.0);
  CHECK(weight_at(man3, -1, 0) == 2.0);

  const KernelSpec cheb3{KernelKind::ChebyshevLinear, 3, 3, 0.5};
  CHECK(weight_at(cheb3, 1, 0) == 1.0);
  CHECK(weight_at(cheb3, 0, 0) == 2.0);

  const KernelSpec uni{KernelKind::Uniform, 5, 3, 0.5};
  CHECK(weight_at(uni, 2, -1) == 1.0);

  const KernelSpec gauss{KernelKind::GaussianChebyshev, 5, 5, 0.5};
  CHECK(weight_at(gauss, 0, 0) == 1.0);
  CHECK(weight_at(gauss, 2, 1) ==
        doctest::Approx(std::exp(-1.0 / (2.0 * 0.25))).epsilon(1e-12));
}

TEST_CASE("kernel validation errors") {
  CHECK_THROWS_AS(weight_at({KernelKind::Uniform, 4, 3, 0.5}, 0, 0),
                  InvalidKernelError);
  CHECK_THROWS_AS(weight_at({KernelKind::ManhattanLinear, 3, 0, 0.5}, 0, 0),
                  InvalidKernelError);
  CHECK_THROWS_AS(
      weight_at({KernelKind::GaussianChebyshev, 3, 3, 0.0}, 0, 0),
      InvalidKernelError);
  CHECK_THROWS_AS(weight_at({KernelKind::ManhattanLinear, 3, 3, 0.5}, 2, 0),
                  OutOfRangeError);
}

TEST_CASE("kernel weight sums") {
  CHECK(kernel_weight_sum({KernelKind::ManhattanLinear, 3, 3, 0.5}) == 15.0);
  CHECK(kernel_weight_sum({KernelKind::Uniform, 5, 7, 0.5}) == 35.0);

  // 5x5 Manhattan: enumerate (5 - |dx| - |dy|) over all 25 offsets.
  std::int64_t enumerated = 0;
  for (int dy = -2; dy <= 2; ++dy)
    for (int dx = -2; dx <= 2; ++dx)
      enumerated += 5 - std::abs(dx) - std::abs(dy);
  CHECK(enumerated == 65);
  CHECK(kernel_weight_sum({KernelKind::ManhattanLinear, 5, 5, 0.5}) == 65.0);

  // The closed forms must agree with direct enumeration for every kind.
  for (const KernelSpec& k : kSampleKernels) {
    double direct = 0.0;
    for (int dy = -k.hy(); dy <= k.hy(); ++dy)
      for (int dx = -k.hx(); dx <= k.hx(); ++dx)
        direct += weight_at(k, dx, dy);
    CHECK(kernel_weight_sum(k) == doctest::Approx(direct).epsilon(1e-12));
  }
}

TEST_CASE("kernel symmetry and monotone decay") {
  for (const KernelSpec& k : kSampleKernels) {
    for (int dy = -k.hy(); dy <= k.hy(); ++dy)
      for (int dx = -k.hx(); dx <= k.hx(); ++dx) {
        const double w = weight_at(k, dx, dy);
        REQUIRE(w > 0.0);
        REQUIRE(w == weight_at(k, -dx, dy));
        REQUIRE(w == weight_at(k, dx, -dy));
        if (dx >= 0 && dx + 1 <= k.hx())
          REQUIRE(weight_at(k, dx + 1, dy) <= w);
        if (dy >= 0 && dy + 1 <= k.hy())
          REQUIRE(weight_at(k, dx, dy + 1) <= w);
      }
  }
}

TEST_CASE("manhattan kernel is affine on each closed quadrant") {
  // For dx,dy <= 0 the weight is (hx+hy+1) + dx + dy exactly; mirrored
  // signs in the other quadrants. This is what the quadrant decomposition
  // rests on.
  for (const KernelSpec& k : kSampleKernels) {
    if (k.kind != KernelKind::ManhattanLinear) continue;
    const int m = k.hx() + k.hy() + 1;
    for (int dy = -k.hy(); dy <= k.hy(); ++dy)
      for (int dx = -k.hx(); dx <= k.hx(); ++dx) {
        const double w = weight_at(k, dx, dy);
        if (dx <= 0 && dy <= 0) REQUIRE(w == double(m + dx + dy));
        if (dx >= 0 && dy <= 0) REQUIRE(w == double(m - dx + dy));
        if (dx <= 0 && dy >= 0) REQUIRE(w == double(m + dx - dy));
        if (dx >= 0 && dy >= 0) REQUIRE(w == double(m - dx - dy));
      }
  }
}
