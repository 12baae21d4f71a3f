// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <random>

#include "lqi/linalg.hpp"

namespace lqi {

using Rng = std::mt19937_64;

// SplitMix64 finalizer.
std::uint64_t splitmix64(std::uint64_t x);

/// Sub-seed for stream `index` of a master seed:
/// splitmix64(master + (index + 1) * 0x9E3779B97F4A7C15).
std::uint64_t sub_seed(std::uint64_t master, std::uint64_t index);

// Text of the split rule, embedded in reports.
inline constexpr const char* kSeedSplitRule =
    "sub_seed(master, i) = splitmix64(master + (i + 1) * 0x9E3779B97F4A7C15); engine mt19937_64";

/// Real and imaginary parts independent N(0, 1).
cplx complex_gaussian(Rng& rng);

/// Square matrix of independent complex_gaussian entries.
ComplexMatrix ginibre(std::size_t dim, Rng& rng);

/// Random Hermitian 2x2 with Pauli coordinates drawn N(0, 1).
ComplexMatrix random_hermitian2(Rng& rng);

}  // namespace lqi
