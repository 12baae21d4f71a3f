// SPDX-License-Identifier: Apache-2.0

#include "lqi/rng.hpp"

namespace lqi {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

std::uint64_t sub_seed(std::uint64_t master, std::uint64_t index) {
  return splitmix64(master + (index + 1) * 0x9E3779B97F4A7C15ULL);
}

cplx complex_gaussian(Rng& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  const double re = normal(rng);
  const double im = normal(rng);
  return {re, im};
}

ComplexMatrix ginibre(std::size_t dim, Rng& rng) {
  ComplexMatrix g(dim);
  for (auto& z : g.data()) z = complex_gaussian(rng);
  return g;
}

ComplexMatrix random_hermitian2(Rng& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  const double t = normal(rng);
  const double x = normal(rng);
  const double y = normal(rng);
  const double z = normal(rng);
  return ComplexMatrix{{cplx(t + z, 0.0), cplx(x, -y)}, {cplx(x, y), cplx(t - z, 0.0)}};
}

}  // namespace lqi
