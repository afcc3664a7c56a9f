#include "bal/rng.hpp"

#include <cmath>
#include <stdexcept>

namespace bal {

double SplitMix64::normal() {
  // Box-Muller; discard the second variate to keep the stream simple.
  double u1 = uniform();
  while (u1 <= 0.0) u1 = uniform();
  const double u2 = uniform();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
}

double radical_inverse(uint64_t index, uint32_t base) {
  double inv = 1.0 / static_cast<double>(base);
  double scale = inv;
  double r = 0.0;
  while (index > 0) {
    r += static_cast<double>(index % base) * scale;
    index /= base;
    scale *= inv;
  }
  return r;
}

std::vector<Point> halton_in_set(const SetExpr& region, int count, uint64_t seed) {
  static const uint32_t primes[] = {2, 3, 5, 7, 11, 13, 17, 19};
  const BoundingBox box = region.bounding_box();
  const int d = box.dim();
  if (d > static_cast<int>(sizeof(primes) / sizeof(primes[0])))
    throw std::invalid_argument("halton_in_set: dimension too large");

  SplitMix64 rng(seed ^ 0xA5C3D2E190F86B47ULL);
  std::vector<double> shift(static_cast<size_t>(d));
  for (double& s : shift) s = rng.uniform();

  std::vector<Point> pts;
  pts.reserve(static_cast<size_t>(count));
  uint64_t index = 1;
  const uint64_t max_index = 1000000;
  while (static_cast<int>(pts.size()) < count && index < max_index) {
    Point p = Point::zero(d);
    for (int i = 0; i < d; ++i) {
      double u = radical_inverse(index, primes[i]) + shift[static_cast<size_t>(i)];
      if (u >= 1.0) u -= 1.0;
      p[i] = box.lo[i] + u * (box.hi[i] - box.lo[i]);
    }
    if (region.contains(p)) pts.push_back(std::move(p));
    ++index;
  }
  if (static_cast<int>(pts.size()) < count)
    throw std::runtime_error("halton_in_set: region too thin for requested point count");
  return pts;
}

}  // namespace bal
